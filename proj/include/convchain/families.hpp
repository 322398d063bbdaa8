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

#include <cmath>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "convchain/hyper.hpp"
#include "convchain/qseries.hpp"
#include "convchain/scalar.hpp"

namespace convchain {

// ---------------------------------------------------------------------------
// Lattices.
// ---------------------------------------------------------------------------

/// Points {0, ..., N}.
struct FiniteLattice {
  int size_n;  // N
};

/// Truncation window of a semi-infinite lattice.  The stationary tail beyond
/// `core` is below `tail_tol`; points up to `extent` act as a buffer so that
/// columns inside the core keep their mass inside the matrix.
struct TruncatedLattice {
  int extent;      // matrix covers 0..extent
  int core;        // tail beyond this point is < tail_tol
  double tail_tol;
};

inline constexpr int kTruncationCap = 4096;

/// Scans a semi-infinite measure until its tail drops below `tol`.
/// `unnormalized` is pi(x)/pi(0) and `pi0` the normalization.
inline TruncatedLattice truncate_lattice(const std::function<double(int)>& unnormalized,
                                         double pi0, double tol) {
  double cum = 0.0;
  int core = -1;
  for (int x = 0; x <= kTruncationCap; ++x) {
    cum += unnormalized(x) * pi0;
    if (1.0 - cum < tol) {
      core = x;
      break;
    }
  }
  if (core < 0) throw TruncationError("truncate_lattice: tail tolerance not reached below cap");
  int extent = std::min(2 * core + 16, kTruncationCap);
  return TruncatedLattice{extent, core, tol};
}

// ---------------------------------------------------------------------------
// Raw per-family kernels.  These evaluate the defining formulas literally
// with every argument explicit; they do not validate parameter ranges, which
// lets limit substitutions probe them outside the usual regions.
// ---------------------------------------------------------------------------

namespace kraw {

template <class E>
scalar_value_t<E> measure(int x, int N, const E& p_in) {
  using T = scalar_value_t<E>;
  if (x < 0 || x > N) return T(0);
  const T p(p_in);
  return binomial<T>(N, x) * pow_int(p, x) * pow_int(T(1) - p, N - x);
}

template <class E>
scalar_value_t<E> measure_ratio(int x, int N, const E& p_in) {
  using T = scalar_value_t<E>;
  if (x < 0 || x > N) return T(0);
  const T p(p_in);
  return binomial<T>(N, x) * pow_int(p / (T(1) - p), x);
}

template <class E>
SeriesSpec<scalar_value_t<E>> poly_series(int n, int x, int N, const E& p_in) {
  using T = scalar_value_t<E>;
  const T p(p_in);
  return hypergeometric_series<T>({T(-n), T(-x)}, {T(-N)}, T(1) / p, n);
}

template <class E>
scalar_value_t<E> poly(int n, int x, int N, const E& p) {
  return series_sum(poly_series(n, x, N, p));
}

template <class E>
scalar_value_t<E> norm_sq(int n, int N, const E& p_in) {
  using T = scalar_value_t<E>;
  const T p(p_in);
  return binomial<T>(N, n) * pow_int(p / (T(1) - p), n);
}

}  // namespace kraw

namespace charlier {

template <class E>
scalar_value_t<E> measure_ratio(int x, const E& a_in) {
  using T = scalar_value_t<E>;
  if (x < 0) return T(0);
  const T a(a_in);
  return pow_int(a, x) / pochhammer(T(1), x);
}

inline double measure0(double a) { return std::exp(-a); }

template <class E>
SeriesSpec<scalar_value_t<E>> poly_series(int n, int x, const E& a_in) {
  using T = scalar_value_t<E>;
  const T a(a_in);
  return hypergeometric_series<T>({T(-n), T(-x)}, {}, T(-1) / a, n);
}

template <class E>
scalar_value_t<E> poly(int n, int x, const E& a) {
  return series_sum(poly_series(n, x, a));
}

template <class E>
scalar_value_t<E> norm_sq(int n, const E& a_in) {
  using T = scalar_value_t<E>;
  const T a(a_in);
  return pow_int(a, n) / pochhammer(T(1), n);
}

}  // namespace charlier

namespace hahn {

template <class E1, class E2>
scalar_common_t<E1, E2> measure(int x, int N, const E1& a_in, const E2& b_in) {
  using T = scalar_common_t<E1, E2>;
  if (x < 0 || x > N) return T(0);
  const T a(a_in), b(b_in);
  return binomial<T>(N, x) * pochhammer(a, x) * pochhammer(b, N - x) / pochhammer(a + b, N);
}

template <class E1, class E2>
scalar_common_t<E1, E2> measure_ratio(int x, int N, const E1& a_in, const E2& b_in) {
  using T = scalar_common_t<E1, E2>;
  if (x < 0 || x > N) return T(0);
  const T a(a_in), b(b_in);
  return binomial<T>(N, x) * pochhammer(a, x) * pochhammer(b, N - x) / pochhammer(b, N);
}

template <class E1, class E2>
SeriesSpec<scalar_common_t<E1, E2>> poly_series(int n, int x, int N, const E1& a_in,
                                                const E2& b_in) {
  using T = scalar_common_t<E1, E2>;
  const T a(a_in), b(b_in);
  return hypergeometric_series<T>({T(-n), T(n) + a + b - T(1), T(-x)}, {a, T(-N)}, T(1), n);
}

template <class E1, class E2>
scalar_common_t<E1, E2> poly(int n, int x, int N, const E1& a, const E2& b) {
  return series_sum(poly_series(n, x, N, a, b));
}

template <class E1, class E2>
scalar_common_t<E1, E2> norm_sq(int n, int N, const E1& a_in, const E2& b_in) {
  using T = scalar_common_t<E1, E2>;
  if (n == 0) return T(1);
  const T a(a_in), b(b_in);
  // (n+a+b-1)_{N+1} factored as (n+a+b-1)(n+a+b)_N so the n = 0 degeneracy
  // at a+b = 1 never reaches a zero denominator.
  const T s = a + b;
  return binomial<T>(N, n) * pochhammer(a, n) / pochhammer(b, n) * pochhammer(s, N) /
         pochhammer(T(n) + s, N) * (T(2 * n) + s - T(1)) / (T(n) + s - T(1));
}

}  // namespace hahn

namespace meixner {

template <class E1, class E2>
scalar_common_t<E1, E2> measure_ratio(int x, const E1& a_in, const E2& b_in) {
  using T = scalar_common_t<E1, E2>;
  if (x < 0) return T(0);
  const T a(a_in), b(b_in);
  return pochhammer(a, x) * pow_int(b, x) / pochhammer(T(1), x);
}

inline double measure0(double a, double b) { return std::pow(1.0 - b, a); }

template <class E1, class E2>
SeriesSpec<scalar_common_t<E1, E2>> poly_series(int n, int x, const E1& a_in, const E2& b_in) {
  using T = scalar_common_t<E1, E2>;
  const T a(a_in), b(b_in);
  return hypergeometric_series<T>({T(-n), T(-x)}, {a}, T(1) - T(1) / b, n);
}

template <class E1, class E2>
scalar_common_t<E1, E2> poly(int n, int x, const E1& a, const E2& b) {
  return series_sum(poly_series(n, x, a, b));
}

template <class E1, class E2>
scalar_common_t<E1, E2> norm_sq(int n, const E1& a_in, const E2& b_in) {
  using T = scalar_common_t<E1, E2>;
  const T a(a_in), b(b_in);
  return pochhammer(a, n) * pow_int(b, n) / pochhammer(T(1), n);
}

}  // namespace meixner

namespace qhahn {

template <class E1, class E2, class E3>
scalar_common_t<E1, E2, E3> measure(int x, int N, const E1& a_in, const E2& b_in,
                                    const E3& q_in) {
  using T = scalar_common_t<E1, E2, E3>;
  if (x < 0 || x > N) return T(0);
  const T a(a_in), b(b_in), q(q_in);
  return q_binomial(N, x, q) * q_pochhammer(a, q, x) * q_pochhammer(b, q, N - x) *
         pow_int(a, N - x) / q_pochhammer(a * b, q, N);
}

template <class E1, class E2, class E3>
scalar_common_t<E1, E2, E3> measure_ratio(int x, int N, const E1& a_in, const E2& b_in,
                                          const E3& q_in) {
  using T = scalar_common_t<E1, E2, E3>;
  if (x < 0 || x > N) return T(0);
  const T a(a_in), b(b_in), q(q_in);
  return q_binomial(N, x, q) * q_pochhammer(a, q, x) * q_pochhammer(b, q, N - x) /
         (pow_int(a, x) * q_pochhammer(b, q, N));
}

template <class E1, class E2, class E3>
SeriesSpec<scalar_common_t<E1, E2, E3>> poly_series(int n, int x, int N, const E1& a_in,
                                                    const E2& b_in, const E3& q_in) {
  using T = scalar_common_t<E1, E2, E3>;
  const T a(a_in), b(b_in), q(q_in);
  return basic_series<T>({pow_int(q, -n), a * b * pow_int(q, n - 1), pow_int(q, -x)},
                         {a, pow_int(q, -N)}, q, n, q);
}

template <class E1, class E2, class E3>
scalar_common_t<E1, E2, E3> poly(int n, int x, int N, const E1& a, const E2& b, const E3& q) {
  return series_sum(poly_series(n, x, N, a, b, q));
}

template <class E1, class E2, class E3>
scalar_common_t<E1, E2, E3> norm_sq(int n, int N, const E1& a_in, const E2& b_in,
                                    const E3& q_in) {
  using T = scalar_common_t<E1, E2, E3>;
  if (n == 0) return T(1);
  const T a(a_in), b(b_in), q(q_in);
  // (ab q^{-1};q)_n / (1 - ab q^{-1}) collapses to (ab;q)_{n-1}.
  return q_binomial(N, n, q) * q_pochhammer(a, q, n) * q_pochhammer(a * b, q, n - 1) *
         (T(1) - a * b * pow_int(q, 2 * n - 1)) /
         (q_pochhammer(a * b * pow_int(q, N), q, n) * q_pochhammer(b, q, n) * pow_int(a, n));
}

}  // namespace qhahn

namespace qmeixner {

template <class E1, class E2, class E3>
scalar_common_t<E1, E2, E3> measure_ratio(int x, const E1& b_in, const E2& c_in,
                                          const E3& q_in) {
  using T = scalar_common_t<E1, E2, E3>;
  if (x < 0) return T(0);
  const T b(b_in), c(c_in), q(q_in);
  return q_pochhammer(b * q, q, x) * pow_int(c, x) * q_triangle_power(q, x) /
         (q_pochhammer(q, q, x) * q_pochhammer(-b * c * q, q, x));
}

inline double measure0(double b, double c, double q) {
  return q_pochhammer_infinite(-b * c * q, q) / q_pochhammer_infinite(-c, q);
}

template <class E1, class E2, class E3>
SeriesSpec<scalar_common_t<E1, E2, E3>> poly_series(int n, int x, const E1& b_in,
                                                    const E2& c_in, const E3& q_in) {
  using T = scalar_common_t<E1, E2, E3>;
  const T b(b_in), c(c_in), q(q_in);
  return basic_series<T>({pow_int(q, -n), pow_int(q, -x)}, {b * q},
                         -pow_int(q, n + 1) / c, n, q);
}

template <class E1, class E2, class E3>
scalar_common_t<E1, E2, E3> poly(int n, int x, const E1& b, const E2& c, const E3& q) {
  return series_sum(poly_series(n, x, b, c, q));
}

template <class E1, class E2, class E3>
scalar_common_t<E1, E2, E3> norm_sq(int n, const E1& b_in, const E2& c_in, const E3& q_in) {
  using T = scalar_common_t<E1, E2, E3>;
  const T b(b_in), c(c_in), q(q_in);
  return pow_int(q, n) * q_pochhammer(b * q, q, n) /
         (q_pochhammer(q, q, n) * q_pochhammer(-q / c, q, n));
}

// Second orthogonal family: the parameter involution (b,c) -> (-bc, 1/c).
// Its orthonormal vectors carry an extra (-1)^x sign.

template <class E1, class E2, class E3>
scalar_common_t<E1, E2, E3> second_measure_ratio(int x, const E1& b_in, const E2& c_in,
                                                 const E3& q_in) {
  using T = scalar_common_t<E1, E2, E3>;
  const T b(b_in), c(c_in);
  return measure_ratio(x, T(-b * c), T(T(1) / c), q_in);
}

inline double second_measure0(double b, double c, double q) {
  return q_pochhammer_infinite(b * q, q) / q_pochhammer_infinite(-1.0 / c, q);
}

template <class E1, class E2, class E3>
scalar_common_t<E1, E2, E3> second_poly(int n, int x, const E1& b_in, const E2& c_in,
                                        const E3& q_in) {
  using T = scalar_common_t<E1, E2, E3>;
  const T b(b_in), c(c_in);
  return poly(n, x, T(-b * c), T(T(1) / c), q_in);
}

template <class E1, class E2, class E3>
scalar_common_t<E1, E2, E3> second_norm_sq(int n, const E1& b_in, const E2& c_in,
                                           const E3& q_in) {
  using T = scalar_common_t<E1, E2, E3>;
  const T b(b_in), c(c_in);
  return norm_sq(n, T(-b * c), T(T(1) / c), q_in);
}

}  // namespace qmeixner

namespace littleqjacobi {

template <class E1, class E2, class E3>
scalar_common_t<E1, E2, E3> measure_ratio(int x, const E1& a_in, const E2& b_in,
                                          const E3& q_in) {
  using T = scalar_common_t<E1, E2, E3>;
  if (x < 0) return T(0);
  const T a(a_in), b(b_in), q(q_in);
  return q_pochhammer(b, q, x) * pow_int(a, x) / q_pochhammer(q, q, x);
}

inline double measure0(double a, double b, double q) {
  return q_pochhammer_infinite(a, q) / q_pochhammer_infinite(a * b, q);
}

}  // namespace littleqjacobi

// ---------------------------------------------------------------------------
// Validated family specifications.  A spec bundles parameters (plus N for the
// finite families) and is the unit the chain registry and spectral layers
// pass around.
// ---------------------------------------------------------------------------

enum class FamilyId {
  Krawtchouk,
  Charlier,
  Hahn,
  Meixner,
  QHahn,
  QMeixner,
  QMeixnerSecond,
  LittleQJacobiMeasure,
};

inline const char* family_token(FamilyId f) {
  switch (f) {
    case FamilyId::Krawtchouk: return "krawtchouk";
    case FamilyId::Charlier: return "charlier";
    case FamilyId::Hahn: return "hahn";
    case FamilyId::Meixner: return "meixner";
    case FamilyId::QHahn: return "q-hahn";
    case FamilyId::QMeixner: return "q-meixner";
    case FamilyId::QMeixnerSecond: return "q-meixner-second";
    case FamilyId::LittleQJacobiMeasure: return "little-q-jacobi";
  }
  return "?";
}

namespace detail {

template <class T>
void require(bool cond, const std::string& msg) {
  if (!cond) throw DomainError(msg);
}

}  // namespace detail

template <class T>
struct KrawtchoukSpec {
  T p;
  int N;
  void validate() const {
    detail::require<T>(p > T(0) && p < T(1), "krawtchouk: p must lie in (0,1)");
    detail::require<T>(N >= 0, "krawtchouk: N must be >= 0");
  }
  bool operator==(const KrawtchoukSpec&) const = default;
};

template <class T>
struct CharlierSpec {
  T a;
  void validate() const { detail::require<T>(a > T(0), "charlier: a must be positive"); }
  bool operator==(const CharlierSpec&) const = default;
};

template <class T>
struct HahnSpec {
  T a, b;
  int N;
  void validate() const {
    detail::require<T>(a > T(0) && b > T(0), "hahn: a and b must be positive");
    detail::require<T>(N >= 0, "hahn: N must be >= 0");
  }
  bool operator==(const HahnSpec&) const = default;
};

template <class T>
struct MeixnerSpec {
  T a, b;
  void validate() const {
    detail::require<T>(a > T(0), "meixner: a must be positive");
    detail::require<T>(b > T(0) && b < T(1), "meixner: b must lie in (0,1)");
  }
  bool operator==(const MeixnerSpec&) const = default;
};

template <class T>
struct QHahnSpec {
  T a, b, q;
  int N;
  void validate() const {
    detail::require<T>(q > T(0) && q < T(1), "q-hahn: q must lie in (0,1)");
    detail::require<T>(a > T(0) && a < T(1) && b > T(0) && b < T(1),
                       "q-hahn: a and b must lie in (0,1)");
    detail::require<T>(N >= 0, "q-hahn: N must be >= 0");
  }
  bool operator==(const QHahnSpec&) const = default;
};

template <class T>
struct QMeixnerSpec {
  T b, c, q;
  void validate() const {
    detail::require<T>(q > T(0) && q < T(1), "q-meixner: q must lie in (0,1)");
    detail::require<T>(b >= T(0) && b * q < T(1), "q-meixner: b must lie in [0, 1/q)");
    detail::require<T>(c > T(0), "q-meixner: c must be positive");
  }
  bool operator==(const QMeixnerSpec&) const = default;
};

template <class T>
struct QMeixnerSecondSpec {
  T b, c, q;  // parameters of the primary family; the involution is internal
  void validate() const { QMeixnerSpec<T>{b, c, q}.validate(); }
  bool operator==(const QMeixnerSecondSpec&) const = default;
};

template <class T>
struct LittleQJacobiSpec {
  T a, b, q;
  void validate() const {
    detail::require<T>(q > T(0) && q < T(1), "little-q-jacobi: q must lie in (0,1)");
    detail::require<T>(a > T(0) && a < T(1), "little-q-jacobi: a must lie in (0,1)");
    detail::require<T>(b < T(1), "little-q-jacobi: b must be < 1");
  }
  bool operator==(const LittleQJacobiSpec&) const = default;
};

template <class T>
using FamilySpec =
    std::variant<KrawtchoukSpec<T>, CharlierSpec<T>, HahnSpec<T>, MeixnerSpec<T>, QHahnSpec<T>,
                 QMeixnerSpec<T>, QMeixnerSecondSpec<T>, LittleQJacobiSpec<T>>;

template <class T>
FamilyId family_of(const FamilySpec<T>& spec) {
  return std::visit(
      [](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, KrawtchoukSpec<T>>) return FamilyId::Krawtchouk;
        else if constexpr (std::is_same_v<S, CharlierSpec<T>>) return FamilyId::Charlier;
        else if constexpr (std::is_same_v<S, HahnSpec<T>>) return FamilyId::Hahn;
        else if constexpr (std::is_same_v<S, MeixnerSpec<T>>) return FamilyId::Meixner;
        else if constexpr (std::is_same_v<S, QHahnSpec<T>>) return FamilyId::QHahn;
        else if constexpr (std::is_same_v<S, QMeixnerSpec<T>>) return FamilyId::QMeixner;
        else if constexpr (std::is_same_v<S, QMeixnerSecondSpec<T>>)
          return FamilyId::QMeixnerSecond;
        else return FamilyId::LittleQJacobiMeasure;
      },
      spec);
}

template <class T>
void validate(const FamilySpec<T>& spec) {
  std::visit([](const auto& s) { s.validate(); }, spec);
}

template <class T>
bool is_finite(const FamilySpec<T>& spec) {
  return std::holds_alternative<KrawtchoukSpec<T>>(spec) ||
         std::holds_alternative<HahnSpec<T>>(spec) || std::holds_alternative<QHahnSpec<T>>(spec);
}

/// Lattice size N for the finite families; throws otherwise.
template <class T>
int finite_size(const FamilySpec<T>& spec) {
  if (auto* k = std::get_if<KrawtchoukSpec<T>>(&spec)) return k->N;
  if (auto* h = std::get_if<HahnSpec<T>>(&spec)) return h->N;
  if (auto* qh = std::get_if<QHahnSpec<T>>(&spec)) return qh->N;
  throw DomainError("finite_size: semi-infinite family");
}

/// pi(x) / pi(0).  Rational in rational parameters for every family.
template <class T>
T measure_ratio(const FamilySpec<T>& spec, int x) {
  return std::visit(
      [&](const auto& s) -> T {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, KrawtchoukSpec<T>>)
          return kraw::measure_ratio(x, s.N, s.p);
        else if constexpr (std::is_same_v<S, CharlierSpec<T>>)
          return charlier::measure_ratio(x, s.a);
        else if constexpr (std::is_same_v<S, HahnSpec<T>>)
          return hahn::measure_ratio(x, s.N, s.a, s.b);
        else if constexpr (std::is_same_v<S, MeixnerSpec<T>>)
          return meixner::measure_ratio(x, s.a, s.b);
        else if constexpr (std::is_same_v<S, QHahnSpec<T>>)
          return qhahn::measure_ratio(x, s.N, s.a, s.b, s.q);
        else if constexpr (std::is_same_v<S, QMeixnerSpec<T>>)
          return qmeixner::measure_ratio(x, s.b, s.c, s.q);
        else if constexpr (std::is_same_v<S, QMeixnerSecondSpec<T>>)
          return qmeixner::second_measure_ratio(x, s.b, s.c, s.q);
        else
          return littleqjacobi::measure_ratio(x, s.a, s.b, s.q);
      },
      spec);
}

/// pi(0).  Exact for the finite families; a truncated-product / exponential
/// float for the semi-infinite ones (hence DomainError under the exact
/// backend there).
template <class T>
T measure_origin(const FamilySpec<T>& spec) {
  return std::visit(
      [&](const auto& s) -> T {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, KrawtchoukSpec<T>>)
          return kraw::measure(0, s.N, s.p);
        else if constexpr (std::is_same_v<S, HahnSpec<T>>)
          return hahn::measure(0, s.N, s.a, s.b);
        else if constexpr (std::is_same_v<S, QHahnSpec<T>>)
          return qhahn::measure(0, s.N, s.a, s.b, s.q);
        else if constexpr (is_exact_v<T>) {
          throw DomainError("measure_origin: transcendental normalization under exact backend");
        } else if constexpr (std::is_same_v<S, CharlierSpec<T>>)
          return charlier::measure0(s.a);
        else if constexpr (std::is_same_v<S, MeixnerSpec<T>>)
          return meixner::measure0(s.a, s.b);
        else if constexpr (std::is_same_v<S, QMeixnerSpec<T>>)
          return qmeixner::measure0(s.b, s.c, s.q);
        else if constexpr (std::is_same_v<S, QMeixnerSecondSpec<T>>)
          return qmeixner::second_measure0(s.b, s.c, s.q);
        else
          return littleqjacobi::measure0(s.a, s.b, s.q);
      },
      spec);
}

/// Normalized measure entry pi(x).
template <class T>
T measure(const FamilySpec<T>& spec, int x) {
  return measure_ratio(spec, x) * measure_origin(spec);
}

/// Degree-n polynomial at lattice point x, normalized so that P_0 = 1 and
/// P_n(0) = 1.  For the q-families this is a polynomial in q^{-x} - 1.
template <class T>
T poly(const FamilySpec<T>& spec, int n, int x) {
  return std::visit(
      [&](const auto& s) -> T {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, KrawtchoukSpec<T>>)
          return kraw::poly(n, x, s.N, s.p);
        else if constexpr (std::is_same_v<S, CharlierSpec<T>>)
          return charlier::poly(n, x, s.a);
        else if constexpr (std::is_same_v<S, HahnSpec<T>>)
          return hahn::poly(n, x, s.N, s.a, s.b);
        else if constexpr (std::is_same_v<S, MeixnerSpec<T>>)
          return meixner::poly(n, x, s.a, s.b);
        else if constexpr (std::is_same_v<S, QHahnSpec<T>>)
          return qhahn::poly(n, x, s.N, s.a, s.b, s.q);
        else if constexpr (std::is_same_v<S, QMeixnerSpec<T>>)
          return qmeixner::poly(n, x, s.b, s.c, s.q);
        else if constexpr (std::is_same_v<S, QMeixnerSecondSpec<T>>)
          return qmeixner::second_poly(n, x, s.b, s.c, s.q);
        else
          throw DomainError("little-q-jacobi exposes only its measure");
      },
      spec);
}

/// Normalization constant d_n^2 with d_0 = 1.
template <class T>
T norm_sq(const FamilySpec<T>& spec, int n) {
  return std::visit(
      [&](const auto& s) -> T {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, KrawtchoukSpec<T>>)
          return kraw::norm_sq(n, s.N, s.p);
        else if constexpr (std::is_same_v<S, CharlierSpec<T>>)
          return charlier::norm_sq(n, s.a);
        else if constexpr (std::is_same_v<S, HahnSpec<T>>)
          return hahn::norm_sq(n, s.N, s.a, s.b);
        else if constexpr (std::is_same_v<S, MeixnerSpec<T>>)
          return meixner::norm_sq(n, s.a, s.b);
        else if constexpr (std::is_same_v<S, QHahnSpec<T>>)
          return qhahn::norm_sq(n, s.N, s.a, s.b, s.q);
        else if constexpr (std::is_same_v<S, QMeixnerSpec<T>>)
          return qmeixner::norm_sq(n, s.b, s.c, s.q);
        else if constexpr (std::is_same_v<S, QMeixnerSecondSpec<T>>)
          return qmeixner::second_norm_sq(n, s.b, s.c, s.q);
        else
          throw DomainError("little-q-jacobi exposes only its measure");
      },
      spec);
}

/// (-1)^x sign the second q-Meixner family's orthonormal vectors carry.
template <class T>
int orthonormal_sign(const FamilySpec<T>& spec, int x) {
  if (std::holds_alternative<QMeixnerSecondSpec<T>>(spec)) return (x % 2 == 0) ? 1 : -1;
  return 1;
}

/// Normalized measure over the whole lattice (finite: sums to 1 exactly).
template <class T>
std::vector<T> measure_vector(const FamilySpec<T>& spec, int points) {
  std::vector<T> out;
  out.reserve(points);
  T origin = measure_origin(spec);
  for (int x = 0; x < points; ++x) out.push_back(measure_ratio(spec, x) * origin);
  return out;
}

/// Orthonormal vector entries d_n sqrt(pi(x)) P_n(x), float-valued.
inline std::vector<double> orthonormal_vector(const FamilySpec<double>& spec, int n, int points) {
  std::vector<double> out(points);
  const double dn = std::sqrt(norm_sq(spec, n));
  const double pi0 = measure_origin(spec);
  for (int x = 0; x < points; ++x) {
    const double pix = measure_ratio(spec, x) * pi0;
    out[x] = orthonormal_sign(spec, x) * dn * std::sqrt(pix) * poly(spec, n, x);
  }
  return out;
}

/// Truncation window for a semi-infinite family at the given tail tolerance.
inline TruncatedLattice truncate_for(const FamilySpec<double>& spec, double tail_tol) {
  if (is_finite(spec)) throw DomainError("truncate_for: finite family");
  const double pi0 = measure_origin(spec);
  return truncate_lattice([&](int x) { return measure_ratio(spec, x); }, pi0, tail_tol);
}

// ---------------------------------------------------------------------------
// Limit substitutions: the parameter replacements that carry one family's
// data into another's as N grows.  Each map takes the *target* family's
// parameters and returns the substituted *source* spec at lattice size N.
// The substituted values may leave the source family's usual region; they are
// meant for literal evaluation.
// ---------------------------------------------------------------------------

enum class LimitMapId {
  KrawtchoukToCharlier,  // p -> a / N
  HahnToMeixner,         // second parameter -> N (1-b) / b
  MeixnerToCharlier,     // (a, b) -> (N, a/(a+N))
  QHahnToQMeixner,       // (a, b) -> (b q, -q^{-N} / (b c))
};

template <class T>
FamilySpec<T> limit_map(LimitMapId id, const FamilySpec<T>& target, int N) {
  if (N < 1) throw DomainError("limit_map: N must be positive");
  auto pick = [&]<class S>(std::in_place_type_t<S>) -> const S& {
    const S* s = std::get_if<S>(&target);
    if (!s) throw DomainError("limit_map: target parameters belong to the wrong family");
    s->validate();
    return *s;
  };
  switch (id) {
    case LimitMapId::KrawtchoukToCharlier: {
      const auto& c = pick(std::in_place_type<CharlierSpec<T>>);
      T p = c.a / T(N);
      if (!(p < T(1))) throw DomainError("limit_map: need N > a");
      return KrawtchoukSpec<T>{p, N};
    }
    case LimitMapId::HahnToMeixner: {
      const auto& m = pick(std::in_place_type<MeixnerSpec<T>>);
      return HahnSpec<T>{m.a, T(N) * (T(1) - m.b) / m.b, N};
    }
    case LimitMapId::MeixnerToCharlier: {
      const auto& c = pick(std::in_place_type<CharlierSpec<T>>);
      return MeixnerSpec<T>{T(N), c.a / (c.a + T(N))};
    }
    case LimitMapId::QHahnToQMeixner: {
      const auto& qm = pick(std::in_place_type<QMeixnerSpec<T>>);
      if (qm.b == T(0)) throw DomainError("limit_map: q-Charlier limit is not available");
      return QHahnSpec<T>{qm.b * qm.q, -pow_int(qm.q, -N) / (qm.b * qm.c), qm.q, N};
    }
  }
  throw CaseError("limit_map: unknown map");
}

}  // namespace convchain
