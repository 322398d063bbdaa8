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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "chain_grids.hpp"
#include "convchain/verify.hpp"

using namespace convchain;
using namespace convchain::testgrids;

namespace {
Rational Q(long n, long d = 1) { return rational(n, d); }
}  // namespace

TEST_CASE("symmetric form of the 2x2 chain") {
  auto tm = build_finite<double>(CaseId::KI, {{"a", 0.5}, {"b", 0.5}}, 1);
  std::vector<double> pi = {1.0 / 3.0, 2.0 / 3.0};
  auto H = symmetrize(tm.K, pi);
  CHECK(H(0, 0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(H(1, 1) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(H(0, 1) == doctest::Approx(std::sqrt(2.0) / 4.0).epsilon(1e-14));
  CHECK(H(0, 1) == H(1, 0));
}

TEST_CASE("identity chain symmetrizes to the identity") {
  auto K = DenseMatrix<double>::identity(4);
  std::vector<double> pi = {0.1, 0.2, 0.3, 0.4};
  auto H = symmetrize(K, pi);
  CHECK(max_abs_diff(H, DenseMatrix<double>::identity(4)) == 0.0);
}

TEST_CASE("numeric eigenvalues of the N=8 chain") {
  auto tm = build_finite<double>(CaseId::KI, {{"a", 0.5}, {"b", 0.5}}, 8);
  auto lambda = resolve_stationary<double>(CaseId::KI, {{"a", 0.5}, {"b", 0.5}}, 8);
  auto spec = eigendecompose(symmetrize(tm.K, measure_vector(lambda, 9)));
  REQUIRE(spec.ordered_by_sign_changes);
  for (int n = 0; n <= 8; ++n)
    CHECK(spec.eigenvalues[n] == doctest::Approx(std::pow(0.25, n)).epsilon(1e-10));
  CHECK(sign_changes(spec.vectors[0]) == 0);
  CHECK(sign_changes(spec.vectors[3]) == 3);
}

TEST_CASE("2x2 eigenvalues from the characteristic polynomial") {
  auto tm = build_finite<double>(CaseId::KI, {{"a", 0.5}, {"b", 0.5}}, 1);
  auto lambda = resolve_stationary<double>(CaseId::KI, {{"a", 0.5}, {"b", 0.5}}, 1);
  auto spec = eigendecompose(symmetrize(tm.K, measure_vector(lambda, 2)));
  CHECK(spec.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(spec.eigenvalues[1] == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("numeric route across all finite cases at N = 32") {
  for (CaseId id : finite_cases()) {
    auto params = case_grid<Rational>(id)[0];
    auto checks = verify_numeric_spectrum(id, params, 32, 1e-10);
    checks.merge(verify_float_sum_formula(id, case_grid<double>(id)[0], 8, 4, 1e-10));
    for (const auto& r : checks.results()) {
      INFO(r.name);
      CHECK(r.passed);
    }
  }
}

TEST_CASE("spectral theorems on a sample of cases") {
  for (CaseId id : {CaseId::KI, CaseId::KII, CaseId::HIII, CaseId::QHI, CaseId::QHIV}) {
    auto params = case_grid<Rational>(id)[1];
    auto checks = verify_spectral_theorems(id, params, 5, {8L, 16L, 32L});
    for (const auto& r : checks.results()) {
      INFO(r.name);
      CHECK(r.passed);
    }
  }
}

TEST_CASE("frozen evolution values") {
  CaseParams<Rational> params{{"a", Q(1, 2)}, {"b", Q(1, 2)}};
  auto tm = build_finite(CaseId::KI, params, 1);
  std::vector<Rational> p0 = {Q(1), Q(0)};
  auto one = evolve_direct(tm.K, p0, 1);
  CHECK(one[0] == Q(1, 2));
  CHECK(one[1] == Q(1, 2));
  auto zero = evolve_direct(tm.K, p0, 0);
  CHECK(zero == p0);

  // After 64 steps the distribution is within (1/4)^64 * 2 of stationarity.
  auto lambda = resolve_stationary(CaseId::KI, params, 1);
  std::vector<Rational> kappas = {Q(1), Q(1, 4)};
  auto far = evolve_spectral(lambda, kappas, p0, 64);
  auto pi = measure_vector(lambda, 2);
  for (int x = 0; x <= 1; ++x)
    CHECK(std::abs(to_double(far.distribution[x] - pi[x])) <
          2.0 * std::pow(0.25, 64) + 1e-300);
  CHECK(far.coefficients[0] == doctest::Approx(1.0));
}

TEST_CASE("invalid initial distributions are rejected") {
  auto tm = build_finite<Rational>(CaseId::KI, {{"a", Q(1, 2)}, {"b", Q(1, 2)}}, 2);
  CHECK_THROWS_AS(evolve_direct(tm.K, {Q(1, 2), Q(1, 2), Q(1, 2)}, 1), DomainError);
  CHECK_THROWS_AS(evolve_direct(tm.K, {Q(3, 2), Q(-1, 2), Q(0)}, 1), DomainError);
}

TEST_CASE("single q-Meixner family cannot reconstruct") {
  FamilySpec<double> qm = QMeixnerSpec<double>{0.5, 0.5, 0.5};
  std::vector<double> kappas = {1.0, 0.5, 0.25};
  CHECK_THROWS_AS(spectral_reconstruct(qm, kappas, 3), CompletenessError);
}

TEST_CASE("sampler determinism and accuracy") {
  CaseParams<double> params{{"a", 0.5}, {"b", 0.5}};
  auto tm = build_finite(CaseId::KI, params, 8);
  std::vector<double> p0(9, 0.0);
  p0[0] = 1.0;

  auto first = sample_paths(tm.K, p0, 20, 20000, 42);
  auto second = sample_paths(tm.K, p0, 20, 20000, 42);
  CHECK(first == second);
  auto other_seed = sample_paths(tm.K, p0, 20, 20000, 43);
  CHECK(first != other_seed);

  // With no steps the sampler draws from p0 itself.
  auto still = sample_paths(tm.K, p0, 0, 1000, 7);
  CHECK(still[0] == doctest::Approx(1.0));

  auto exact = evolve_direct(tm.K, p0, 20);
  CHECK(total_variation(first, exact) < 0.02);
}

TEST_CASE("empirical q-Meixner union reconstruction") {
  // The two eigenvector families together span the truncated window, so the
  // two-branch expansion should reproduce K; the paper states no completeness
  // claim, so this stays an empirical observation with a loose tolerance.
  CaseParams<double> params{{"a", 0.5}, {"b", 0.5}, {"c", 0.5}, {"q", 0.5}};
  auto tm = build_semi_infinite(CaseId::QMI, params, 1e-14);
  auto lambda = resolve_stationary<double>(CaseId::QMI, params, -1);
  const auto& qm = std::get<QMeixnerSpec<double>>(lambda);
  FamilySpec<double> second = QMeixnerSecondSpec<double>{qm.b, qm.c, qm.q};

  // Work on the core window: beyond it the measure underflows doubles.
  const int points = tm.core + 1;
  DenseMatrix<double> rebuilt(points);
  const int terms = 60;
  for (int n = 0; n < terms; ++n) {
    auto v1 = orthonormal_vector(lambda, n, points);
    auto v2 = orthonormal_vector(second, n, points);
    const double k1 = eigenvalue_closed<double>(CaseId::QMI, params, n);
    const double k2 = extra_eigenvalue(CaseId::QMI, params, n);
    for (int y = 0; y < points; ++y)
      for (int x = 0; x < points; ++x)
        rebuilt(x, y) += k1 * v1[x] * v1[y] + k2 * v2[x] * v2[y];
  }
  // Compare through the symmetric form restricted to the window.
  DenseMatrix<double> block(points);
  for (int y = 0; y < points; ++y)
    for (int x = 0; x < points; ++x) block(x, y) = tm.K(x, y);
  auto pi = measure_vector(lambda, points);
  auto H = symmetrize(block, pi);
  double worst = 0.0;
  for (int y = 0; y < points; ++y)
    for (int x = 0; x < points; ++x) worst = std::max(worst, std::abs(H(x, y) - rebuilt(x, y)));
  CHECK(worst < 1e-8);
}
