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

#include "convchain/spectral.hpp"

namespace convchain {
namespace {

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

/// Counter-based uniform draw keyed on (seed, trajectory, step).
double uniform_at(std::uint64_t seed, long traj, long step) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(traj) + 1);
  z = mix64(z);
  z += 0xD1B54A32D192ED03ULL * (static_cast<std::uint64_t>(step) + 1);
  z = mix64(z);
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

int draw_from(const std::vector<double>& weights, double u) {
  double cum = 0.0;
  const int n = static_cast<int>(weights.size());
  for (int x = 0; x < n; ++x) {
    cum += weights[x];
    if (u < cum) return x;
  }
  return n - 1;  // u landed in the truncation slack
}

}  // namespace

std::vector<double> sample_paths(const DenseMatrix<double>& K, const std::vector<double>& p0,
                                 long steps, long count, std::uint64_t seed) {
  if (count < 1) throw DomainError("sample_paths: count must be >= 1");
  if (steps < 0) throw DomainError("sample_paths: steps must be >= 0");
  check_distribution(p0);
  const int n = K.size();
  std::vector<double> column(n);
  std::vector<long> hits(n, 0);
  for (long traj = 0; traj < count; ++traj) {
    int state = draw_from(p0, uniform_at(seed, traj, 0));
    for (long step = 1; step <= steps; ++step) {
      for (int x = 0; x < n; ++x) column[x] = K(x, state);
      state = draw_from(column, uniform_at(seed, traj, step));
    }
    ++hits[state];
  }
  std::vector<double> empirical(n);
  for (int x = 0; x < n; ++x) empirical[x] = static_cast<double>(hits[x]) / count;
  return empirical;
}

double total_variation(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return 0.5 * s;
}

}  // namespace convchain
