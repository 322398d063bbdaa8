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

#include "convchain/bd.hpp"
#include "convchain/spectral.hpp"
#include "convchain/verify.hpp"

using namespace convchain;

namespace {
Rational Q(long n, long d = 1) { return rational(n, d); }
}  // namespace

TEST_CASE("rates for the supported families") {
  auto kr = bd::bd_rates<Rational>(bd::BDFamily::Krawtchouk, {{"p", Q(1, 3)}}, 6);
  CHECK(kr.birth[0] == Q(2));        // p N
  CHECK(kr.death[6] == Q(4));        // (1-p) N
  CHECK(kr.death[0] == Q(0));
  CHECK(kr.birth[6] == Q(0));
  CHECK(kr.eig[3] == Q(3));

  auto hr = bd::bd_rates<Rational>(bd::BDFamily::Hahn, {{"a", Q(1)}, {"b", Q(1)}}, 5);
  CHECK(hr.birth[0] == Q(5));        // (0+a) N
  CHECK(hr.death[0] == Q(0));
  CHECK(hr.birth[5] == Q(0));
  CHECK(hr.eig[2] == Q(6));          // n (n + a + b - 1)
  CHECK_THROWS_AS((bd::bd_rates<Rational>(bd::BDFamily::Krawtchouk, {{"p", Q(2)}}, 4)),
                  DomainError);
}

TEST_CASE("frozen generator") {
  auto rates = bd::bd_rates<Rational>(bd::BDFamily::Krawtchouk, {{"p", Q(1, 2)}}, 1);
  auto L = bd::build_generator(rates);
  CHECK(L(0, 0) == Q(-1, 2));
  CHECK(L(1, 0) == Q(1, 2));
  CHECK(L(0, 1) == Q(1, 2));
  CHECK(L(1, 1) == Q(-1, 2));
  for (int y = 0; y <= 1; ++y) CHECK(L.column_sum(y) == Q(0));
}

TEST_CASE("generator eigen-relation") {
  auto rates = bd::bd_rates<Rational>(bd::BDFamily::Krawtchouk, {{"p", Q(1, 3)}}, 4);
  auto L = bd::build_generator(rates);
  auto pi = measure_vector(rates.family, 5);
  for (int n = 0; n <= 4; ++n) {
    std::vector<Rational> v(5);
    for (int x = 0; x <= 4; ++x) v[x] = pi[x] * poly(rates.family, n, x);
    auto lv = L.apply(v);
    for (int x = 0; x <= 4; ++x) CHECK(lv[x] == -rates.eig[n] * v[x]);
  }
}

TEST_CASE("frozen banded chain at m = 1") {
  auto rates = bd::bd_rates<Rational>(bd::BDFamily::Krawtchouk, {{"p", Q(1, 2)}}, 1);
  auto L = bd::build_generator(rates);
  auto w = bd::tune_weights(L, 1);
  CHECK(w.c.size() == 1);
  CHECK(w.c[0] == Q(1));
  // Default time scale obeys the stability bound strictly.
  CHECK(w.time_scale * Q(1, 2) < Q(1));
  w.time_scale = Q(1, 2);
  auto K = bd::build_banded_chain(L, 1, w);
  CHECK(K(0, 0) == Q(3, 4));
  CHECK(K(1, 0) == Q(1, 4));
  CHECK(K(0, 1) == Q(1, 4));
  CHECK(K(1, 1) == Q(3, 4));
  CHECK(bd::banded_eigenvalue(1, w, rates.eig[1]) == Q(1, 2));
  CHECK(bd::banded_eigenvalue(1, w, rates.eig[0]) == Q(1));
}

TEST_CASE("tuned weights give signed bands") {
  auto rates = bd::bd_rates<Rational>(bd::BDFamily::Krawtchouk, {{"p", Q(1, 2)}}, 4);
  auto L = bd::build_generator(rates);
  auto w = bd::tune_weights(L, 2);
  auto powers = std::vector<DenseMatrix<Rational>>{L, L * L};
  auto X = bd::weighted_power_sum(powers, w.c);
  for (int x = 0; x <= 4; ++x) {
    CHECK(X(x, x) < Q(0));
    if (x + 1 <= 4) CHECK(X(x + 1, x) > Q(0));
    if (x + 2 <= 4) CHECK(X(x + 2, x) > Q(0));
    if (x - 1 >= 0) CHECK(X(x - 1, x) > Q(0));
    if (x - 2 >= 0) CHECK(X(x - 2, x) > Q(0));
  }
}

TEST_CASE("band cannot exceed the lattice") {
  auto rates = bd::bd_rates<Rational>(bd::BDFamily::Krawtchouk, {{"p", Q(1, 2)}}, 3);
  auto L = bd::build_generator(rates);
  CHECK_THROWS_AS(bd::tune_weights(L, 4), TuningError);
}

TEST_CASE("power sign pattern") {
  for (int N : {5, 8}) {
    auto rates = bd::bd_rates<Rational>(bd::BDFamily::Hahn, {{"a", Q(3, 2)}, {"b", Q(1, 2)}}, N);
    auto L = bd::build_generator(rates);
    auto checks = verify_bd_power_signs(L, 4);
    for (const auto& r : checks.results()) {
      INFO(r.name);
      CHECK(r.passed);
    }
  }
}

TEST_CASE("banded eigenvalues match the numeric spectrum") {
  auto rates = bd::bd_rates<double>(bd::BDFamily::Krawtchouk, {{"p", 0.5}}, 4);
  auto L = bd::build_generator(rates);
  auto w = bd::tune_weights(L, 2);
  auto K = bd::build_banded_chain(L, 2, w);
  auto pi = measure_vector(rates.family, 5);
  auto spec = eigendecompose(symmetrize(K, pi));
  std::vector<double> closed(5);
  for (int n = 0; n <= 4; ++n) closed[n] = bd::banded_eigenvalue(2, w, rates.eig[n]);
  std::sort(closed.begin(), closed.end());
  std::sort(spec.eigenvalues.begin(), spec.eigenvalues.end());
  for (int n = 0; n <= 4; ++n)
    CHECK(spec.eigenvalues[n] == doctest::Approx(closed[n]).epsilon(1e-10));
}

TEST_CASE("full birth-death verification") {
  for (int N : {4, 8}) {
    auto kr = verify_bd<Rational>(bd::BDFamily::Krawtchouk, {{"p", Q(2, 5)}}, N, 3);
    auto hr = verify_bd<Rational>(bd::BDFamily::Hahn, {{"a", Q(1)}, {"b", Q(2)}}, N, 3);
    kr.merge(hr);
    for (const auto& r : kr.results()) {
      INFO(r.name, " ", r.detail);
      CHECK(r.passed);
    }
  }
}
