// Copyright 2026-present the convchain project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "convchain/hyper.hpp"
#include "convchain/qseries.hpp"
#include "convchain/scalar.hpp"

namespace convchain {

// The summation lemmas every closed-form eigenvalue and self-similarity
// identity in this library rests on.  Each oracle evaluates the left side by
// direct summation and the right side by its closed form, independently.
enum class LemmaId {
  VandermondeUnit,     // 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
  PfaffSaalschutz,     // balanced 3F2 at unit argument
  QVandermonde,        // 2phi1(q^-n, b; c; q, c q^n / b) = (c/b;q)_n / (c;q)_n
  QPfaffSaalschutz,    // balanced 3phi2 at argument q
  BinomialPochhammer,  // sum_k C(n,k)(a)_k(b)_{n-k} = (a+b)_n
  PochhammerRatio,     // two-parameter extension with a shifted ratio weight
  QBinomialPochhammer, // sum_k [n,k](a;q)_k(b;q)_{n-k} a^{n-k} = (ab;q)_n
  QPochhammerRatio,    // q-analog of PochhammerRatio
  BinomialMoment,      // sum_y pi_K(y,N,b) (-y)_k = (-N)_k b^k
  KrawtchoukGenFn,     // sum_n C(N,n) P_n(x,p) t^n = (1-(1-p)t/p)^x (1+t)^{N-x}
};

inline const char* lemma_token(LemmaId id) {
  switch (id) {
    case LemmaId::VandermondeUnit: return "vandermonde";
    case LemmaId::PfaffSaalschutz: return "pfaff-saalschutz";
    case LemmaId::QVandermonde: return "q-vandermonde";
    case LemmaId::QPfaffSaalschutz: return "q-pfaff-saalschutz";
    case LemmaId::BinomialPochhammer: return "binomial-pochhammer";
    case LemmaId::PochhammerRatio: return "pochhammer-ratio";
    case LemmaId::QBinomialPochhammer: return "q-binomial-pochhammer";
    case LemmaId::QPochhammerRatio: return "q-pochhammer-ratio";
    case LemmaId::BinomialMoment: return "binomial-moment";
    case LemmaId::KrawtchoukGenFn: return "krawtchouk-genfn";
  }
  return "?";
}

/// Outcome of checking one identity over a range of orders / grid points.
struct IdentityReport {
  std::string id;
  std::string params;
  int points_checked = 0;
  bool exact_backend = false;
  bool passed = false;
  double max_rel_error = 0.0;  // 0 under the exact backend when passed
  std::string detail;          // first failing point, if any

  bool exact() const { return passed && exact_backend; }
};

template <class T>
using LemmaParams = std::map<std::string, T>;

namespace detail {

template <class T>
const T& lemma_at(const LemmaParams<T>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw DomainError("lemma parameter '" + key + "' missing");
  return it->second;
}

template <class T>
void require_nonzero(const T& v, const std::string& what) {
  if (v == T(0)) throw DomainError("parameter outside validity region: " + what + " vanishes");
}

}  // namespace detail

/// Both sides of a lemma at a single order n.  LHS by literal summation, RHS
/// by the closed form.
template <class T>
std::pair<T, T> lemma_sides(LemmaId id, const LemmaParams<T>& p, int n) {
  using detail::lemma_at;
  switch (id) {
    case LemmaId::VandermondeUnit: {
      const T b = lemma_at(p, "b"), c = lemma_at(p, "c");
      T den = pochhammer(c, n);
      detail::require_nonzero(den, "(c)_n");
      T lhs = series_sum(hypergeometric_series<T>({T(-n), b}, {c}, T(1), n));
      T rhs = pochhammer(c - b, n) / den;
      return {lhs, rhs};
    }
    case LemmaId::PfaffSaalschutz: {
      const T a = lemma_at(p, "a"), b = lemma_at(p, "b"), c = lemma_at(p, "c");
      T den = pochhammer(c, n) * pochhammer(c - a - b, n);
      detail::require_nonzero(den, "(c)_n (c-a-b)_n");
      T lhs = series_sum(
          hypergeometric_series<T>({T(-n), a, b}, {c, T(1) + a + b - c - T(n)}, T(1), n));
      T rhs = pochhammer(c - a, n) * pochhammer(c - b, n) / den;
      return {lhs, rhs};
    }
    case LemmaId::QVandermonde: {
      const T b = lemma_at(p, "b"), c = lemma_at(p, "c"), q = lemma_at(p, "q");
      detail::require_nonzero(b, "b");
      T den = q_pochhammer(c, q, n);
      detail::require_nonzero(den, "(c;q)_n");
      T z = c * pow_int(q, n) / b;
      T lhs = series_sum(basic_series<T>({pow_int(q, -n), b}, {c}, z, n, q));
      T rhs = q_pochhammer(c / b, q, n) / den;
      return {lhs, rhs};
    }
    case LemmaId::QPfaffSaalschutz: {
      const T a = lemma_at(p, "a"), b = lemma_at(p, "b"), c = lemma_at(p, "c"),
              q = lemma_at(p, "q");
      detail::require_nonzero(a, "a");
      detail::require_nonzero(b, "b");
      T den = q_pochhammer(c, q, n) * q_pochhammer(c / (a * b), q, n);
      detail::require_nonzero(den, "(c;q)_n (c/(ab);q)_n");
      T lhs = series_sum(basic_series<T>({pow_int(q, -n), a, b},
                                         {c, a * b / c * pow_int(q, 1 - n)}, q, n, q));
      T rhs = q_pochhammer(c / a, q, n) * q_pochhammer(c / b, q, n) / den;
      return {lhs, rhs};
    }
    case LemmaId::BinomialPochhammer: {
      const T a = lemma_at(p, "a"), b = lemma_at(p, "b");
      T lhs(0);
      for (int k = 0; k <= n; ++k)
        lhs = lhs + binomial<T>(n, k) * pochhammer(a, k) * pochhammer(b, n - k);
      T rhs = pochhammer(a + b, n);
      return {lhs, rhs};
    }
    case LemmaId::PochhammerRatio: {
      const T a = lemma_at(p, "a"), b1 = lemma_at(p, "b1"), b2 = lemma_at(p, "b2");
      const int m = static_cast<int>(to_double(lemma_at(p, "m")));
      T lhs(0);
      for (int k = 0; k <= n; ++k) {
        T den = pochhammer(a + b1 + b2, m + k);
        detail::require_nonzero(den, "(a+b1+b2)_{m+k}");
        lhs = lhs + binomial<T>(n, k) * pochhammer(b1, n - k) * pochhammer(b2, k) *
                        pochhammer(a, m + k) / den;
      }
      T den = pochhammer(a + b1 + b2, m + n) * pochhammer(a + b1, m);
      detail::require_nonzero(den, "(a+b1+b2)_{m+n} (a+b1)_m");
      T rhs = pochhammer(a, m) * pochhammer(b1 + b2, n) * pochhammer(a + b1, m + n) / den;
      return {lhs, rhs};
    }
    case LemmaId::QBinomialPochhammer: {
      const T a = lemma_at(p, "a"), b = lemma_at(p, "b"), q = lemma_at(p, "q");
      T lhs(0);
      for (int k = 0; k <= n; ++k)
        lhs = lhs + q_binomial(n, k, q) * q_pochhammer(a, q, k) * q_pochhammer(b, q, n - k) *
                        pow_int(a, n - k);
      T rhs = q_pochhammer(a * b, q, n);
      return {lhs, rhs};
    }
    case LemmaId::QPochhammerRatio: {
      const T a = lemma_at(p, "a"), b1 = lemma_at(p, "b1"), b2 = lemma_at(p, "b2"),
              q = lemma_at(p, "q");
      const int m = static_cast<int>(to_double(lemma_at(p, "m")));
      T lhs(0);
      for (int k = 0; k <= n; ++k) {
        T den = q_pochhammer(a * b1 * b2, q, m + k);
        detail::require_nonzero(den, "(a b1 b2;q)_{m+k}");
        lhs = lhs + q_binomial(n, k, q) * q_pochhammer(b1, q, n - k) * q_pochhammer(b2, q, k) *
                        pow_int(b1, k) * q_pochhammer(a, q, m + k) / den;
      }
      T den = q_pochhammer(a * b1 * b2, q, m + n) * q_pochhammer(a * b1, q, m);
      detail::require_nonzero(den, "(a b1 b2;q)_{m+n} (a b1;q)_m");
      T rhs = q_pochhammer(a, q, m) * q_pochhammer(b1 * b2, q, n) *
              q_pochhammer(a * b1, q, m + n) / den;
      return {lhs, rhs};
    }
    case LemmaId::BinomialMoment: {
      // n plays the role of the falling-factorial length k.
      const T b = lemma_at(p, "b");
      const int N = static_cast<int>(to_double(lemma_at(p, "N")));
      T lhs(0);
      for (int y = 0; y <= N; ++y) {
        T weight = binomial<T>(N, y) * pow_int(b, y) * pow_int(T(1) - b, N - y);
        lhs = lhs + weight * pochhammer(T(-y), n);
      }
      T rhs = pochhammer(T(-N), n) * pow_int(b, n);
      return {lhs, rhs};
    }
    case LemmaId::KrawtchoukGenFn: {
      // n plays the role of the lattice point x; the sum runs over degrees.
      const T pr = lemma_at(p, "p"), t = lemma_at(p, "t");
      const int N = static_cast<int>(to_double(lemma_at(p, "N")));
      const int x = n;
      if (x < 0 || x > N) throw DomainError("generating function: x outside lattice");
      detail::require_nonzero(pr, "p");
      T lhs(0);
      for (int deg = 0; deg <= N; ++deg) {
        // P_deg(x,p) = 2F1(-deg, -x; -N; 1/p)
        T val = series_sum(
            hypergeometric_series<T>({T(-deg), T(-x)}, {T(-N)}, T(1) / pr, deg));
        lhs = lhs + binomial<T>(N, deg) * val * pow_int(t, deg);
      }
      T rhs = pow_int(T(1) - (T(1) - pr) / pr * t, x) * pow_int(T(1) + t, N - x);
      return {lhs, rhs};
    }
  }
  throw CaseError("lemma_sides: unknown lemma");
}

namespace detail {

template <class T>
std::string format_params(const LemmaParams<T>& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += ",";
    if constexpr (is_exact_v<T>)
      out += k + "=" + v.get_str();
    else
      out += k + "=" + std::to_string(v);
  }
  return out;
}

}  // namespace detail

/// Checks a lemma for all orders n <= n_max at one parameter point.
template <class T>
IdentityReport check_lemma(LemmaId id, const LemmaParams<T>& params, int n_max) {
  IdentityReport rep;
  rep.id = lemma_token(id);
  rep.params = detail::format_params(params);
  rep.exact_backend = is_exact_v<T>;
  rep.passed = true;
  for (int n = 0; n <= n_max; ++n) {
    auto [lhs, rhs] = lemma_sides(id, params, n);
    if constexpr (is_exact_v<T>) {
      if (lhs != rhs) {
        rep.passed = false;
        if (rep.detail.empty()) rep.detail = "n=" + std::to_string(n);
      }
    } else {
      const double l = to_double(lhs), r = to_double(rhs);
      const double ref = std::max({1.0, std::abs(l), std::abs(r)});
      const double err = std::abs(l - r) / ref;
      rep.max_rel_error = std::max(rep.max_rel_error, err);
      if (err > tolerances().rel) {
        rep.passed = false;
        if (rep.detail.empty()) rep.detail = "n=" + std::to_string(n);
      }
    }
    ++rep.points_checked;
  }
  return rep;
}

}  // namespace convchain
