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

#include "convchain/families.hpp"
#include "convchain/matrix.hpp"
#include "convchain/scalar.hpp"

namespace convchain {
namespace bd {

// Banded Markov chains built from powers of the tridiagonal birth-death
// generator whose eigenfunctions are the lattice polynomials.

enum class BDFamily { Krawtchouk, Hahn };

template <class T>
struct BDRates {
  std::vector<T> birth;   // B(x), B(N) = 0
  std::vector<T> death;   // D(x), D(0) = 0
  std::vector<T> eig;     // E(n), eigenvalue of the difference operator
  FamilySpec<T> family;   // supplies pi and the polynomials
};

/// Difference-equation coefficients for the supported families.  The rates
/// are not taken on faith: the defining identity
///   B(x)(P_n(x) - P_n(x+1)) + D(x)(P_n(x) - P_n(x-1)) = E(n) P_n(x)
/// is checked for every (n, x) on the lattice before the rates are returned.
template <class T>
BDRates<T> bd_rates(BDFamily family, const std::map<std::string, T>& params, int N) {
  if (N < 1) throw DomainError("bd_rates: N must be >= 1");
  auto get = [&](const char* k) -> const T& {
    auto it = params.find(k);
    if (it == params.end()) throw DomainError(std::string("bd_rates: parameter '") + k + "' missing");
    return it->second;
  };

  BDRates<T> rates;
  rates.birth.resize(N + 1);
  rates.death.resize(N + 1);
  rates.eig.resize(N + 1);
  switch (family) {
    case BDFamily::Krawtchouk: {
      const T p = get("p");
      KrawtchoukSpec<T> spec{p, N};
      spec.validate();
      for (int x = 0; x <= N; ++x) {
        rates.birth[x] = p * T(N - x);
        rates.death[x] = (T(1) - p) * T(x);
      }
      for (int n = 0; n <= N; ++n) rates.eig[n] = T(n);
      rates.family = spec;
      break;
    }
    case BDFamily::Hahn: {
      const T a = get("a"), b = get("b");
      HahnSpec<T> spec{a, b, N};
      spec.validate();
      for (int x = 0; x <= N; ++x) {
        rates.birth[x] = (T(x) + a) * T(N - x);
        rates.death[x] = T(x) * (b + T(N - x));
      }
      for (int n = 0; n <= N; ++n) rates.eig[n] = T(n) * (T(n) + a + b - T(1));
      rates.family = spec;
      break;
    }
  }

  // Guard against a wrong convention sneaking in.
  for (int n = 0; n <= N; ++n)
    for (int x = 0; x <= N; ++x) {
      T lhs(0);
      const T pnx = poly(rates.family, n, x);
      if (x < N) lhs = lhs + rates.birth[x] * (pnx - poly(rates.family, n, x + 1));
      if (x > 0) lhs = lhs + rates.death[x] * (pnx - poly(rates.family, n, x - 1));
      T rhs = rates.eig[n] * pnx;
      if (!scalar_eq(lhs, rhs))
        throw RatesError("bd_rates: difference equation fails at n=" + std::to_string(n) +
                         ", x=" + std::to_string(x));
    }
  return rates;
}

/// Tridiagonal generator; columns sum to zero.
template <class T>
DenseMatrix<T> build_generator(const BDRates<T>& rates) {
  const int n = static_cast<int>(rates.birth.size());
  DenseMatrix<T> L(n);
  for (int x = 0; x < n; ++x) {
    if (x + 1 < n) L(x + 1, x) = rates.birth[x];
    if (x - 1 >= 0) L(x - 1, x) = rates.death[x];
    L(x, x) = -(rates.birth[x] + rates.death[x]);
  }
  return L;
}

template <class T>
struct WeightVector {
  std::vector<T> c;  // c[0] = 1
  T time_scale;      // t_S with t_S * max(-X(x,x)) < 1
};

template <class T>
DenseMatrix<T> weighted_power_sum(const std::vector<DenseMatrix<T>>& powers,
                                  const std::vector<T>& c) {
  // X = sum_j c_j L^{m-j}; powers[k] holds L^{k+1}.
  const int m = static_cast<int>(c.size());
  const int n = powers[0].size();
  DenseMatrix<T> X(n);
  for (int j = 0; j < m; ++j) {
    const auto& Lp = powers[m - j - 1];
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x) X(x, y) = X(x, y) + c[j] * Lp(x, y);
  }
  return X;
}

/// Greedy weight tuning: working inward from the outermost band, each weight
/// is set to twice the smallest value that keeps its band strictly positive;
/// the final weight additionally forces a negative diagonal.
template <class T>
WeightVector<T> tune_weights(const DenseMatrix<T>& L, int m) {
  const int size = L.size();
  const int N = size - 1;
  if (m < 1) throw DomainError("tune_weights: m must be >= 1");
  if (m > N) throw TuningError("tune_weights: band " + std::to_string(m) +
                               " exceeds the lattice size " + std::to_string(N));
  std::vector<DenseMatrix<T>> powers;
  powers.push_back(L);
  for (int k = 1; k < m; ++k) powers.push_back(powers.back() * L);

  const T theta(2);  // safety factor on every lower bound
  WeightVector<T> w;
  w.c.assign(m, T(0));
  w.c[0] = T(1);

  for (int k = 1; k < m; ++k) {
    const int offset = m - k;
    const auto& coef_m = powers[offset - 1];  // L^{m-k}
    T bound(0);
    bool bounded = false;
    auto scan = [&](int x, int row) {
      T rest(0);
      for (int j = 0; j < k; ++j) rest = rest + w.c[j] * powers[m - j - 1](row, x);
      const T coef = coef_m(row, x);
      if (coef == T(0)) return;  // boundary-vanishing band entry
      T need = -rest / coef;
      if (!bounded || need > bound) {
        bound = need;
        bounded = true;
      }
    };
    for (int x = 0; x + offset <= N; ++x) scan(x, x + offset);
    for (int x = offset; x <= N; ++x) scan(x, x - offset);

    if (k == m - 1) {
      // The last weight also has to push the diagonal negative:
      // its coefficient there is L(x,x) = -(B+D) < 0.
      for (int x = 0; x <= N; ++x) {
        T rest(0);
        for (int j = 0; j < k; ++j) rest = rest + w.c[j] * powers[m - j - 1](x, x);
        T need = rest / (-L(x, x));
        if (!bounded || need > bound) {
          bound = need;
          bounded = true;
        }
      }
    }
    w.c[k] = (bounded && bound > T(0)) ? theta * bound : T(1);
  }

  // Validate the tuned X and derive the default time scale.
  DenseMatrix<T> X = weighted_power_sum(powers, w.c);
  T peak(0);
  for (int x = 0; x <= N; ++x) {
    if (!(X(x, x) < T(0)))
      throw TuningError("tune_weights: diagonal not negative at x=" + std::to_string(x));
    if (-X(x, x) > peak) peak = -X(x, x);
    for (int row = 0; row <= N; ++row) {
      if (row == x) continue;
      if (X(row, x) < T(0))
        throw TuningError("tune_weights: negative off-diagonal entry at (" + std::to_string(row) +
                          "," + std::to_string(x) + ")");
    }
  }
  w.time_scale = T(1) / (theta * peak);
  return w;
}

/// K = I + t_S X: nonnegative, column-stochastic, banded with width m.
template <class T>
DenseMatrix<T> build_banded_chain(const DenseMatrix<T>& L, int m, const WeightVector<T>& w) {
  std::vector<DenseMatrix<T>> powers;
  powers.push_back(L);
  for (int k = 1; k < m; ++k) powers.push_back(powers.back() * L);
  DenseMatrix<T> X = weighted_power_sum(powers, w.c);
  const int n = L.size();
  DenseMatrix<T> K(n);
  for (int x = 0; x < n; ++x) {
    if (!(w.time_scale * (-X(x, x)) < T(1)))
      throw TuningError("build_banded_chain: time scale too large at x=" + std::to_string(x));
  }
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      K(x, y) = (x == y ? T(1) : T(0)) + w.time_scale * X(x, y);
      if (K(x, y) < T(0))
        throw TuningError("build_banded_chain: negative entry at (" + std::to_string(x) + "," +
                          std::to_string(y) + ")");
      if (std::abs(x - y) > m && K(x, y) != T(0))
        throw TuningError("build_banded_chain: entry outside band at (" + std::to_string(x) +
                          "," + std::to_string(y) + ")");
    }
  return K;
}

/// kappa(n) = 1 + t_S sum_j (-1)^{m-j} c_j E(n)^{m-j}.
template <class T>
T banded_eigenvalue(int m, const WeightVector<T>& w, const T& eig_n) {
  T s(0);
  for (int j = 0; j < m; ++j) {
    T term = w.c[j] * pow_int(eig_n, m - j);
    if ((m - j) % 2 == 0)
      s = s + term;
    else
      s = s - term;
  }
  return T(1) + w.time_scale * s;
}

}  // namespace bd
}  // namespace convchain
