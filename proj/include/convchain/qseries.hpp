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

#include "convchain/scalar.hpp"

namespace convchain {

/// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
/// Negative integer arguments are evaluated literally, which is what makes
/// (-n)_k terminate series.
template <class E>
scalar_value_t<E> pochhammer(const E& a_in, int k) {
  using T = scalar_value_t<E>;
  if (k < 0) throw DomainError("pochhammer: negative length");
  const T a(a_in);
  T acc(1);
  for (int j = 0; j < k; ++j) acc = acc * (a + T(j));
  return acc;
}

/// q-shifted factorial (a;q)_k = prod_{j<k} (1 - a q^j).
template <class E1, class E2>
scalar_common_t<E1, E2> q_pochhammer(const E1& a_in, const E2& q_in, int k) {
  using T = scalar_common_t<E1, E2>;
  if (k < 0) throw DomainError("q_pochhammer: negative length");
  const T a(a_in), q(q_in);
  T acc(1);
  T qpow(1);
  for (int j = 0; j < k; ++j) {
    acc = acc * (T(1) - a * qpow);
    qpow = qpow * q;
  }
  return acc;
}

/// (a;q)_inf, truncated once |a q^k| < qproduct_term.  Transcendental, so the
/// exact backend refuses it.
template <class E1, class E2>
scalar_common_t<E1, E2> q_pochhammer_infinite(const E1& a_in, const E2& q_in) {
  using T = scalar_common_t<E1, E2>;
  if constexpr (is_exact_v<T>) {
    throw DomainError("q_pochhammer_infinite: transcendental value under the exact backend");
  } else {
    const double a = a_in, q = q_in;
    if (!(std::abs(q) < 1.0)) throw DomainError("q_pochhammer_infinite: |q| must be < 1");
    const double stop = tolerances().qproduct_term;
    double acc = 1.0;
    double aq = a;
    // Relative error <= ~1e-15 for |a| <= 10, q <= 0.9 with the 1e-18 cutoff.
    for (int k = 0; std::abs(aq) >= stop; ++k) {
      acc *= (1.0 - aq);
      aq *= q;
      if (k > 100000) throw NumericError("q_pochhammer_infinite: no convergence");
    }
    return acc;
  }
}

/// Binomial coefficient as a scalar; zero outside 0 <= x <= N.
template <class T>
T binomial(int N, int x) {
  if (N < 0) throw DomainError("binomial: negative N");
  if (x < 0 || x > N) return T(0);
  // C(N,x) = (N-x+1)_x / x!
  T num = pochhammer(T(N - x + 1), x);
  T den = pochhammer(T(1), x);
  return num / den;
}

/// Gaussian binomial [N over x]_q = (q;q)_N / ((q;q)_x (q;q)_{N-x}).
template <class E>
scalar_value_t<E> q_binomial(int N, int x, const E& q_in) {
  using T = scalar_value_t<E>;
  if (N < 0) throw DomainError("q_binomial: negative N");
  if (x < 0 || x > N) return T(0);
  const T q(q_in);
  T num = q_pochhammer(q, q, N);
  T den = q_pochhammer(q, q, x) * q_pochhammer(q, q, N - x);
  return num / den;
}

/// Lattice variable of the q-families: eta(x) = q^{-x} - 1.
template <class E>
scalar_value_t<E> eta(int x, const E& q_in) {
  using T = scalar_value_t<E>;
  if (x < 0) throw DomainError("eta: negative x");
  return pow_int(T(q_in), -static_cast<long>(x)) - T(1);
}

/// q^{x(x-1)/2}, the q-exponent of a triangular number.
template <class E>
scalar_value_t<E> q_triangle_power(const E& q_in, int x) {
  return pow_int(q_in, static_cast<long>(x) * (x - 1) / 2);
}

}  // namespace convchain
