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

#include <string>
#include <vector>

#include "convchain/qseries.hpp"
#include "convchain/scalar.hpp"

namespace convchain {

enum class SeriesKind { Hypergeometric, BasicHypergeometric };

/// A terminating (q-)hypergeometric series pFq / p-phi-q.  The first
/// numerator parameter is -n (resp. q^{-n}) so the sum has order+1 terms.
template <class T>
struct SeriesSpec {
  SeriesKind kind = SeriesKind::Hypergeometric;
  std::vector<T> num;
  std::vector<T> den;
  T argument{};
  int order = 0;
  T q{};  // only read for BasicHypergeometric
};

template <class T>
SeriesSpec<T> hypergeometric_series(std::vector<T> num, std::vector<T> den, T argument, int order) {
  return SeriesSpec<T>{SeriesKind::Hypergeometric, std::move(num), std::move(den),
                       std::move(argument), order, T{}};
}

template <class T>
SeriesSpec<T> basic_series(std::vector<T> num, std::vector<T> den, T argument, int order, T q) {
  return SeriesSpec<T>{SeriesKind::BasicHypergeometric, std::move(num), std::move(den),
                       std::move(argument), order, std::move(q)};
}

/// Partial sum of the order+1 leading terms:
///   term_k = prod_i (num_i)_k / (prod_j (den_j)_k * k!) * z^k
/// (q-case: q-shifted factorials and (q;q)_k in place of k!).
/// A denominator Pochhammer vanishing at any k <= order raises PoleError.
template <class T>
T series_sum(const SeriesSpec<T>& spec) {
  const int n = spec.order;
  if (n < 0) throw DomainError("series_sum: negative order");
  T sum(1);  // k = 0 term
  T term(1);
  if (spec.kind == SeriesKind::Hypergeometric) {
    for (int k = 0; k < n; ++k) {
      for (const T& a : spec.num) term = term * (a + T(k));
      for (const T& b : spec.den) {
        T factor = b + T(k);
        if (factor == T(0))
          throw PoleError("series_sum: denominator Pochhammer vanishes at term " +
                              std::to_string(k + 1),
                          k + 1);
        term = term / factor;
      }
      term = term * spec.argument / T(k + 1);
      sum = sum + term;
    }
  } else {
    T qk(1);  // q^k
    for (int k = 0; k < n; ++k) {
      for (const T& a : spec.num) term = term * (T(1) - a * qk);
      for (const T& b : spec.den) {
        T factor = T(1) - b * qk;
        if (factor == T(0))
          throw PoleError("series_sum: denominator q-Pochhammer vanishes at term " +
                              std::to_string(k + 1),
                          k + 1);
        term = term / factor;
      }
      qk = qk * spec.q;
      T qfactor = T(1) - qk;  // the (q;q)_k factorial analog
      if (qfactor == T(0))
        throw PoleError("series_sum: (q;q) factor vanishes at term " + std::to_string(k + 1),
                        k + 1);
      term = term * spec.argument / qfactor;
      sum = sum + term;
    }
  }
  return sum;
}

}  // namespace convchain
