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

#include <cstdint>
#include <vector>

#include "convchain/families.hpp"
#include "convchain/matrix.hpp"
#include "convchain/scalar.hpp"

namespace convchain {

// ---------------------------------------------------------------------------
// Detailed balance and symmetrization.
// ---------------------------------------------------------------------------

/// Checks K(x,y) pi(y) = K(y,x) pi(x) for all pairs; throws BalanceError when
/// it fails (which signals a wrongly resolved stationary family).
template <class T>
void check_detailed_balance(const DenseMatrix<T>& K, const std::vector<T>& pi) {
  const int n = K.size();
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < y; ++x) {
      T lhs = K(x, y) * pi[y];
      T rhs = K(y, x) * pi[x];
      bool ok;
      if constexpr (is_exact_v<T>) {
        ok = lhs == rhs;
      } else {
        ok = close(to_double(lhs), to_double(rhs), tolerances().residual);
      }
      if (!ok)
        throw BalanceError("detailed balance fails at (x,y)=(" + std::to_string(x) + "," +
                           std::to_string(y) + ")");
    }
}

/// Similarity transform to the symmetric form H(x,y) = K(x,y) sqrt(pi(y)/pi(x)),
/// materialized in floats.  Exactness of the symmetry is certified through the
/// balance identity, which is equivalent entrywise.
template <class T>
DenseMatrix<double> symmetrize(const DenseMatrix<T>& K, const std::vector<T>& pi) {
  check_detailed_balance(K, pi);
  const int n = K.size();
  std::vector<double> sqrt_pi(n);
  for (int x = 0; x < n; ++x) {
    const double px = to_double(pi[x]);
    if (!(px > 0.0)) throw DomainError("symmetrize: measure must be strictly positive");
    sqrt_pi[x] = std::sqrt(px);
  }
  DenseMatrix<double> H(n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x <= y; ++x) {
      const double h = to_double(K(x, y)) * sqrt_pi[y] / sqrt_pi[x];
      H(x, y) = h;
      H(y, x) = h;
    }
  return H;
}

// ---------------------------------------------------------------------------
// Eigenvalue routes.
// ---------------------------------------------------------------------------

/// Origin-row sum formula: kappa(n) = sum_y K(0,y) (pi(y)/pi(0)) P_n(y).
/// Valid because P_n(0) = 1 for every registered family.
template <class T>
T eigenvalue_sum_formula(const DenseMatrix<T>& K, const FamilySpec<T>& fam, int n) {
  T s(0);
  for (int y = 0; y < K.size(); ++y) {
    if (K(0, y) == T(0)) continue;
    s = s + K(0, y) * measure_ratio(fam, y) * poly(fam, n, y);
  }
  return s;
}

/// Second-family analog for the q-Meixner chains:
///   kappa(n) = sum_y K(0,y) (-1)^y sqrt(r(y) r2(y)) P2_n(y)
/// with r, r2 the measure ratios of the two families.
inline double extra_eigenvalue_sum_formula(const DenseMatrix<double>& K,
                                           const QMeixnerSpec<double>& lambda, int n) {
  const FamilySpec<double> first{lambda};
  const FamilySpec<double> second{QMeixnerSecondSpec<double>{lambda.b, lambda.c, lambda.q}};
  double s = 0.0;
  for (int y = 0; y < K.size(); ++y) {
    if (K(0, y) == 0.0) continue;
    const double r = measure_ratio(first, y) * measure_ratio(second, y);
    const double sign = (y % 2 == 0) ? 1.0 : -1.0;
    s += K(0, y) * sign * std::sqrt(r) * poly(second, n, y);
  }
  return s;
}

enum class SpectrumProvenance { ClosedForm, SumFormula, Numeric };

struct Spectrum {
  std::vector<double> eigenvalues;            // kappa(n), indexed by n
  std::vector<std::vector<double>> vectors;   // orthonormal eigenvectors
  SpectrumProvenance provenance = SpectrumProvenance::Numeric;
  bool ordered_by_sign_changes = false;       // false: fallback ordering in use
};

/// Dense symmetric eigensolve; eigenpairs ordered by the sign-change count of
/// their eigenvectors (the n-th eigenvector crosses zero n times).  Falls back
/// to descending-eigenvalue order when the counts fail to enumerate 0..N.
Spectrum eigendecompose(const DenseMatrix<double>& H);

/// Sign changes of a vector, skipping entries below a relative floor.
int sign_changes(const std::vector<double>& v);

// ---------------------------------------------------------------------------
// Spectral representation and evolution.
// ---------------------------------------------------------------------------

/// K(x,y) = sum_n kappa(n) d_n^2 pi(x) P_n(x) P_n(y).  The single q-Meixner
/// family is not complete, so reconstruction from it is refused.
template <class T>
DenseMatrix<T> spectral_reconstruct(const FamilySpec<T>& fam, const std::vector<T>& kappas,
                                    int points) {
  const FamilyId id = family_of(fam);
  if (id == FamilyId::QMeixner || id == FamilyId::QMeixnerSecond)
    throw CompletenessError("a single q-Meixner eigenvector family is not complete");
  DenseMatrix<T> K(points);
  const T origin = measure_origin(fam);
  std::vector<T> pi(points), dsq(kappas.size());
  for (int x = 0; x < points; ++x) pi[x] = measure_ratio(fam, x) * origin;
  for (size_t n = 0; n < kappas.size(); ++n) dsq[n] = norm_sq(fam, static_cast<int>(n));
  std::vector<T> pn(points);
  for (size_t n = 0; n < kappas.size(); ++n) {
    for (int x = 0; x < points; ++x) pn[x] = poly(fam, static_cast<int>(n), x);
    for (int y = 0; y < points; ++y)
      for (int x = 0; x < points; ++x)
        K(x, y) = K(x, y) + kappas[n] * dsq[n] * pi[x] * pn[x] * pn[y];
  }
  return K;
}

template <class T>
struct EvolutionResult {
  std::vector<T> distribution;
  std::vector<double> coefficients;  // c_n; c_0 = 1
  long steps = 0;
};

template <class T>
void check_distribution(const std::vector<T>& p0) {
  T total(0);
  for (const T& v : p0) {
    if (v < T(0)) throw DomainError("distribution entries must be nonnegative");
    total = total + v;
  }
  if constexpr (is_exact_v<T>) {
    if (total != T(1)) throw DomainError("distribution must sum to 1");
  } else {
    if (!close(to_double(total), 1.0, 1e-9)) throw DomainError("distribution must sum to 1");
  }
}

/// Repeated application of K.
template <class T>
std::vector<T> evolve_direct(const DenseMatrix<T>& K, std::vector<T> p, long steps) {
  if (steps < 0) throw DomainError("evolve: steps must be >= 0");
  check_distribution(p);
  for (long i = 0; i < steps; ++i) p = K.apply(p);
  return p;
}

/// Evolution through the eigenvector expansion:
///   P(x; l) = pi(x) sum_n d_n^2 S_n kappa(n)^l P_n(x),  S_n = sum_x P_n(x) P0(x).
template <class T>
EvolutionResult<T> evolve_spectral(const FamilySpec<T>& fam, const std::vector<T>& kappas,
                                   const std::vector<T>& p0, long steps) {
  if (steps < 0) throw DomainError("evolve: steps must be >= 0");
  check_distribution(p0);
  const int points = static_cast<int>(p0.size());
  EvolutionResult<T> out;
  out.steps = steps;
  out.distribution.assign(points, T(0));
  const T origin = measure_origin(fam);
  std::vector<T> pn(points);
  for (size_t n = 0; n < kappas.size(); ++n) {
    T overlap(0);
    for (int x = 0; x < points; ++x) {
      pn[x] = poly(fam, static_cast<int>(n), x);
      overlap = overlap + pn[x] * p0[x];
    }
    const T dsq = norm_sq(fam, static_cast<int>(n));
    const T weight = dsq * overlap * pow_int(kappas[n], steps);
    for (int x = 0; x < points; ++x)
      out.distribution[x] = out.distribution[x] + measure_ratio(fam, x) * origin * weight * pn[x];
    out.coefficients.push_back(std::sqrt(to_double(dsq)) * to_double(overlap));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Path sampling (float backend).
// ---------------------------------------------------------------------------

/// Empirical distribution of X_l over `count` independent trajectories.
/// Driven by a counter-based generator keyed on (seed, trajectory, step), so
/// results are reproducible regardless of scheduling.
std::vector<double> sample_paths(const DenseMatrix<double>& K, const std::vector<double>& p0,
                                 long steps, long count, std::uint64_t seed);

double total_variation(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace convchain
