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

#include <gmpxx.h>

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace convchain {

/// Exact scalar backend: arbitrary-precision rationals.
using Rational = mpq_class;

// ---------------------------------------------------------------------------
// Error taxonomy.  Every checked failure surfaces as one of these so callers
// (and the CLI) can report the offending case/parameter point.
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameter outside a family's or identity's validity region.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A denominator Pochhammer vanished inside the summation range.
class PoleError : public Error {
 public:
  PoleError(const std::string& msg, int k) : Error(msg), term_index_(k) {}
  int term_index() const { return term_index_; }

 private:
  int term_index_;
};

/// Unknown or rejected chain case.
class CaseError : public Error {
 public:
  using Error::Error;
};

/// Detailed-balance violation: the supplied stationary measure is wrong.
class BalanceError : public Error {
 public:
  using Error::Error;
};

/// Birth-death rates failed their defining difference-equation check.
class RatesError : public Error {
 public:
  using Error::Error;
};

/// Weight tuning for banded birth-death chains is infeasible.
class TuningError : public Error {
 public:
  using Error::Error;
};

/// Semi-infinite truncation exceeded its hard cap.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// Sign pattern for repeated convolutions is not normalized.
class PatternError : public Error {
 public:
  using Error::Error;
};

/// Eigenvector family does not span the space.
class CompletenessError : public Error {
 public:
  using Error::Error;
};

/// Numeric linear algebra failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Backend traits.
// ---------------------------------------------------------------------------

template <class T>
struct ScalarBackend;

template <>
struct ScalarBackend<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";
};

template <>
struct ScalarBackend<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
};

template <class T>
inline constexpr bool is_exact_v = ScalarBackend<T>::exact;

// GMP arithmetic yields expression templates; generic code must collapse them
// back to the value type before deducing a scalar type.
template <class E>
struct scalar_value {
  using type = E;
};
template <class A, class B>
struct scalar_value<__gmp_expr<A, B>> {
  using type = mpq_class;
};
template <class E>
using scalar_value_t = typename scalar_value<std::decay_t<E>>::type;

template <class... Es>
using scalar_common_t = std::common_type_t<scalar_value_t<Es>...>;

// ---------------------------------------------------------------------------
// Suite-level tolerances.  Float comparisons never carry a per-value epsilon;
// everything funnels through this one configuration.
// ---------------------------------------------------------------------------

struct Tolerances {
  double rel = 1e-12;                // relative, used when |reference| >= 1
  double abs_small = 1e-12;          // absolute, used when |reference| < 1
  double spectrum = 1e-10;           // numeric eigenvalues vs closed forms
  double residual = 1e-10;           // semi-infinite eigen-relation residual
  double orthogonality = 1e-10;      // truncated orthogonality sums
  double tail = 1e-14;               // default truncation tail tolerance
  double column_deficiency = 1e-12;  // truncated column-sum deficit
  double qproduct_term = 1e-18;      // stop infinite q-products when |a q^k| drops below
};

inline const Tolerances& tolerances() {
  static const Tolerances t;
  return t;
}

inline bool close(double a, double b, double eps) {
  const double ref = std::max(std::abs(a), std::abs(b));
  const double d = std::abs(a - b);
  return ref <= 1.0 ? d <= eps : d <= eps * ref;
}

/// Backend-aware equality: exact compare for rationals, suite tolerance for
/// floats.
template <class T>
bool scalar_eq(const T& a, const T& b) {
  if constexpr (is_exact_v<T>) {
    return a == b;
  } else {
    return close(a, b, tolerances().rel);
  }
}

// ---------------------------------------------------------------------------
// Small scalar helpers shared by every module.
// ---------------------------------------------------------------------------

inline Rational rational(long num, long den = 1) {
  if (den == 0) throw DomainError("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& r) { return r.get_d(); }
inline double to_double(double x) { return x; }

/// Integer power with binary exponentiation; negative exponents invert.
template <class E>
scalar_value_t<E> pow_int(const E& base_in, long e) {
  using T = scalar_value_t<E>;
  T base(base_in);
  if (e < 0) {
    if (base == T(0)) throw DomainError("pow_int: zero base with negative exponent");
    base = T(1) / base;
    e = -e;
  }
  T acc(1);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

/// Parses "num/den", plain integers, or terminating decimals exactly.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw DomainError("parse_rational: empty string");
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw DomainError("parse_rational: bad fraction '" + s + "'");
    if (r.get_den() == 0) throw DomainError("parse_rational: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
  }
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw DomainError("parse_rational: bad decimal '" + s + "'");
    mpz_class num;
    if (num.set_str(digits, 10) != 0) throw DomainError("parse_rational: bad decimal '" + s + "'");
    mpz_class den(1);
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  Rational r;
  if (r.set_str(s, 10) != 0) throw DomainError("parse_rational: bad integer '" + s + "'");
  return r;
}

template <class T>
T parse_scalar(const std::string& s);

template <>
inline Rational parse_scalar<Rational>(const std::string& s) {
  return parse_rational(s);
}

template <>
inline double parse_scalar<double>(const std::string& s) {
  // Accept rational literals under the float backend too.
  if (s.find('/') != std::string::npos) return to_double(parse_rational(s));
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw DomainError("parse_scalar: bad float '" + s + "'");
  return v;
}

}  // namespace convchain
