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

#include <cstddef>
#include <vector>

#include "convchain/scalar.hpp"

namespace convchain {

/// Dense square matrix over the lattice, column-major.  Rows index the
/// arrival point x, columns the departure point y.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(int n) : n_(n), data_(static_cast<size_t>(n) * n, T(0)) {}

  int size() const { return n_; }

  T& operator()(int x, int y) { return data_[static_cast<size_t>(y) * n_ + x]; }
  const T& operator()(int x, int y) const { return data_[static_cast<size_t>(y) * n_ + x]; }

  static DenseMatrix identity(int n) {
    DenseMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  T column_sum(int y) const {
    T s(0);
    for (int x = 0; x < n_; ++x) s = s + (*this)(x, y);
    return s;
  }

  T trace() const {
    T s(0);
    for (int i = 0; i < n_; ++i) s = s + (*this)(i, i);
    return s;
  }

  DenseMatrix operator*(const DenseMatrix& rhs) const {
    DenseMatrix out(n_);
    for (int y = 0; y < n_; ++y)
      for (int z = 0; z < n_; ++z) {
        const T& f = rhs(z, y);
        if (f == T(0)) continue;
        for (int x = 0; x < n_; ++x) out(x, y) = out(x, y) + (*this)(x, z) * f;
      }
    return out;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    std::vector<T> out(n_, T(0));
    for (int y = 0; y < n_; ++y) {
      if (v[y] == T(0)) continue;
      for (int x = 0; x < n_; ++x) out[x] = out[x] + (*this)(x, y) * v[y];
    }
    return out;
  }

  bool operator==(const DenseMatrix& rhs) const { return n_ == rhs.n_ && data_ == rhs.data_; }

 private:
  int n_ = 0;
  std::vector<T> data_;
};

template <class T>
double max_abs_diff(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  double m = 0.0;
  for (int y = 0; y < a.size(); ++y)
    for (int x = 0; x < a.size(); ++x) m = std::max(m, std::abs(to_double(a(x, y) - b(x, y))));
  return m;
}

/// K restricted to reversed indices: out(x,y) = in(N-x, N-y).
template <class T>
DenseMatrix<T> reverse_indices(const DenseMatrix<T>& in) {
  const int n = in.size();
  DenseMatrix<T> out(n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) out(x, y) = in(n - 1 - x, n - 1 - y);
  return out;
}

/// Fraction-free Gaussian elimination determinant (exact for rationals).
template <class T>
T determinant(DenseMatrix<T> m) {
  const int n = m.size();
  T det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (m(row, col) != T(0)) {
        pivot = row;
        break;
      }
    if (pivot < 0) return T(0);
    if (pivot != col) {
      for (int y = 0; y < n; ++y) std::swap(m(col, y), m(pivot, y));
      det = -det;
    }
    det = det * m(col, col);
    for (int row = col + 1; row < n; ++row) {
      if (m(row, col) == T(0)) continue;
      T f = m(row, col) / m(col, col);
      for (int y = col; y < n; ++y) m(row, y) = m(row, y) - f * m(col, y);
    }
  }
  return det;
}

}  // namespace convchain
