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

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numeric>

#include "convchain/spectral.hpp"

namespace convchain {

int sign_changes(const std::vector<double>& v) {
  double peak = 0.0;
  for (double x : v) peak = std::max(peak, std::abs(x));
  if (peak == 0.0) return 0;
  const double floor = 1e-11 * peak;
  int changes = 0;
  int prev = 0;
  for (double x : v) {
    if (std::abs(x) < floor) continue;
    const int s = x > 0 ? 1 : -1;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

Spectrum eigendecompose(const DenseMatrix<double>& H) {
  const int n = H.size();
  Eigen::MatrixXd m(n, n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) m(x, y) = H(x, y);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw NumericError("eigendecompose: symmetric eigensolver failed to converge");

  std::vector<std::vector<double>> vecs(n, std::vector<double>(n));
  std::vector<double> vals(n);
  std::vector<int> crossings(n);
  for (int k = 0; k < n; ++k) {
    vals[k] = solver.eigenvalues()(k);
    for (int x = 0; x < n; ++x) vecs[k][x] = solver.eigenvectors()(x, k);
    crossings[k] = sign_changes(vecs[k]);
  }

  // Try to place eigenpair with n crossings at position n.
  std::vector<int> order(n, -1);
  bool ok = true;
  for (int k = 0; k < n; ++k) {
    if (crossings[k] < 0 || crossings[k] >= n || order[crossings[k]] != -1) {
      ok = false;
      break;
    }
    order[crossings[k]] = k;
  }
  if (!ok) {
    // Eigenvalue collision or numerically ambiguous vector: fall back to
    // descending eigenvalues (kappa(0) = 1 still lands first).
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return vals[i] > vals[j]; });
  }

  Spectrum out;
  out.provenance = SpectrumProvenance::Numeric;
  out.ordered_by_sign_changes = ok;
  out.eigenvalues.resize(n);
  out.vectors.resize(n);
  for (int pos = 0; pos < n; ++pos) {
    out.eigenvalues[pos] = vals[order[pos]];
    out.vectors[pos] = std::move(vecs[order[pos]]);
    // Fix the overall sign: the entry at the origin is positive for the
    // eigenvectors belonging to these chains.
    auto& v = out.vectors[pos];
    for (double entry : v) {
      if (std::abs(entry) > 1e-11) {
        if (entry < 0)
          for (double& e : v) e = -e;
        break;
      }
    }
  }
  return out;
}

}  // namespace convchain
