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

// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance is pinned here, in code.

#include <cstdio>
#include <string>
#include <vector>

#include "chain_grids.hpp"
#include "convchain/verify.hpp"

using namespace convchain;
using namespace convchain::testgrids;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, const CheckList& checks) {
  bool ok = checks.all_passed();
  std::string first_failure;
  int count = 0;
  for (const auto& r : checks.results()) {
    ++count;
    if (!r.passed && first_failure.empty())
      first_failure = r.name + (r.detail.empty() ? "" : " [" + r.detail + "]");
  }
  std::printf("CRITERION %2d %-4s %s (%d checks)%s\n", number, ok ? "PASS" : "FAIL",
              name.c_str(), count, first_failure.empty() ? "" : ("  first: " + first_failure).c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

Rational Q(long n, long d = 1) { return rational(n, d); }

CaseParams<double> to_float(const CaseParams<Rational>& p) {
  CaseParams<double> out;
  for (const auto& [k, v] : p) out[k] = to_double(v);
  return out;
}

}  // namespace

int main() {
  // 1. Stochasticity + detailed balance: 12 finite cases, 5 rational points,
  //    N in {1..8}.  Zero tolerance.
  {
    CheckList checks;
    for (CaseId id : finite_cases())
      for (const auto& params : case_grid<Rational>(id))
        for (int N = 1; N <= 8; ++N) checks.merge(verify_stochastic_balance(id, params, N));
    criterion(1, "stochasticity and detailed balance", checks);
  }

  // 2. Eigenvalue triple agreement: closed == origin-row sum == series route
  //    exactly (N <= 8), and numeric eigendecomposition within 1e-10 up to
  //    N = 32 on the float leg.
  {
    CheckList checks;
    for (CaseId id : finite_cases()) {
      for (const auto& params : case_grid<Rational>(id))
        for (int N = 1; N <= 8; ++N) checks.merge(verify_eigen_routes(id, params, N));
      checks.merge(verify_numeric_spectrum(id, case_grid<Rational>(id)[0], 32, 1e-10));
      checks.merge(verify_numeric_spectrum(id, case_grid<Rational>(id)[3], 32, 1e-10));
      checks.merge(verify_numeric_spectrum(id, case_grid<Rational>(id)[1], 16, 1e-10));
      checks.merge(verify_float_sum_formula(id, to_float(case_grid<Rational>(id)[0]), 8, 4, 1e-10));
    }
    criterion(2, "eigenvalue routes agree", checks);
  }

  // 3. Determinant identity for the triangularly factored types, N <= 8.
  {
    CheckList checks;
    for (CaseId id :
         {CaseId::KI, CaseId::KIII, CaseId::HI, CaseId::HIII, CaseId::QHI, CaseId::QHIII})
      for (const auto& params : case_grid<Rational>(id))
        for (int N = 1; N <= 8; ++N) checks.merge(verify_det_identity(id, params, N));
    criterion(3, "determinant equals eigenvalue product", checks);
  }

  // 4. Eigenvalues independent of N: exact equality at N and N+1, n <= min(N,6).
  {
    CheckList checks;
    for (CaseId id : finite_cases())
      for (const auto& params : case_grid<Rational>(id))
        for (int N = 1; N <= 7; ++N) checks.merge(verify_n_independence(id, params, N, 6));
    criterion(4, "eigenvalues independent of N", checks);
  }

  // 5. Exact spectral reconstruction, exact spectral evolution
  //    up to l = 16, geometric convergence bound at l in {8, 16, 32}.
  {
    CheckList checks;
    for (CaseId id : finite_cases())
      for (size_t g : {size_t(0), size_t(2)}) {
        checks.merge(verify_spectral_theorems(id, case_grid<Rational>(id)[g], 5, {8L, 16L, 32L}));
        checks.merge(verify_spectral_theorems(id, case_grid<Rational>(id)[g], 8, {8L, 16L, 32L}));
      }
    criterion(5, "spectral representation and evolution", checks);
  }

  // 6. Self-similarity: all 19 identities exact on 5-point grids up to
  //    N = 10 (ratio form for the transcendental normalizations), including
  //    the interchanged Hahn / q-Hahn variants; CC/MM full forms on the float
  //    backend within 1e-12.
  {
    CheckList checks;
    auto grid_for = [](SelfSimId id) -> std::vector<std::map<std::string, Rational>> {
      using P = std::map<std::string, Rational>;
      switch (id) {
        case SelfSimId::CC1:
        case SelfSimId::CC2:
          return {P{{"a1", Q(1, 2)}, {"a2", Q(1, 2)}}, P{{"a1", Q(1, 3)}, {"a2", Q(2)}},
                  P{{"a1", Q(3, 4)}, {"a2", Q(5, 4)}}, P{{"a1", Q(2)}, {"a2", Q(1, 5)}},
                  P{{"a1", Q(5, 2)}, {"a2", Q(3, 2)}}};
        case SelfSimId::MM1:
        case SelfSimId::MM2:
          return {P{{"a1", Q(1, 2)}, {"a2", Q(1, 2)}, {"b", Q(1, 2)}},
                  P{{"a1", Q(1, 3)}, {"a2", Q(2)}, {"b", Q(1, 3)}},
                  P{{"a1", Q(3, 4)}, {"a2", Q(5, 4)}, {"b", Q(2, 5)}},
                  P{{"a1", Q(2)}, {"a2", Q(1, 5)}, {"b", Q(3, 5)}},
                  P{{"a1", Q(5, 2)}, {"a2", Q(3, 2)}, {"b", Q(1, 4)}}};
        case SelfSimId::KThreeTerm:
        case SelfSimId::KPipiI:
        case SelfSimId::KPipiII:
          return {P{{"a1", Q(1, 2)}, {"a2", Q(1, 2)}}, P{{"a1", Q(1, 3)}, {"a2", Q(2, 5)}},
                  P{{"a1", Q(1, 4)}, {"a2", Q(3, 4)}}, P{{"a1", Q(3, 5)}, {"a2", Q(1, 5)}},
                  P{{"a1", Q(4, 5)}, {"a2", Q(2, 3)}}};
        case SelfSimId::H1:
        case SelfSimId::H3:
        case SelfSimId::H5:
          return {P{{"a1", Q(1, 2)}, {"b1", Q(1)}, {"a2", Q(3, 2)}},
                  P{{"a1", Q(1)}, {"b1", Q(1)}, {"a2", Q(1)}},
                  P{{"a1", Q(3, 2)}, {"b1", Q(1, 2)}, {"a2", Q(2)}},
                  P{{"a1", Q(2)}, {"b1", Q(3)}, {"a2", Q(1, 2)}},
                  P{{"a1", Q(5, 2)}, {"b1", Q(3, 2)}, {"a2", Q(3, 4)}}};
        case SelfSimId::H2:
        case SelfSimId::H4:
          return {P{{"a1", Q(1, 2)}, {"b1", Q(1)}, {"b2", Q(3, 2)}},
                  P{{"a1", Q(1)}, {"b1", Q(1)}, {"b2", Q(1)}},
                  P{{"a1", Q(3, 2)}, {"b1", Q(1, 2)}, {"b2", Q(2)}},
                  P{{"a1", Q(2)}, {"b1", Q(3)}, {"b2", Q(1, 2)}},
                  P{{"a1", Q(5, 2)}, {"b1", Q(3, 2)}, {"b2", Q(3, 4)}}};
        case SelfSimId::QH1:
        case SelfSimId::QH3:
        case SelfSimId::QH5:
          return {P{{"a1", Q(1, 2)}, {"b1", Q(1, 2)}, {"a2", Q(1, 2)}, {"q", Q(1, 2)}},
                  P{{"a1", Q(1, 3)}, {"b1", Q(2, 5)}, {"a2", Q(1, 2)}, {"q", Q(1, 3)}},
                  P{{"a1", Q(1, 4)}, {"b1", Q(3, 4)}, {"a2", Q(2, 5)}, {"q", Q(2, 5)}},
                  P{{"a1", Q(3, 5)}, {"b1", Q(1, 5)}, {"a2", Q(3, 4)}, {"q", Q(3, 5)}},
                  P{{"a1", Q(4, 5)}, {"b1", Q(2, 3)}, {"a2", Q(1, 5)}, {"q", Q(1, 2)}}};
        case SelfSimId::QH2:
        case SelfSimId::QH4:
          return {P{{"a1", Q(1, 2)}, {"b1", Q(1, 2)}, {"b2", Q(1, 2)}, {"q", Q(1, 2)}},
                  P{{"a1", Q(1, 3)}, {"b1", Q(2, 5)}, {"b2", Q(1, 2)}, {"q", Q(1, 3)}},
                  P{{"a1", Q(1, 4)}, {"b1", Q(3, 4)}, {"b2", Q(2, 5)}, {"q", Q(2, 5)}},
                  P{{"a1", Q(3, 5)}, {"b1", Q(1, 5)}, {"b2", Q(3, 4)}, {"q", Q(3, 5)}},
                  P{{"a1", Q(4, 5)}, {"b1", Q(2, 3)}, {"b2", Q(1, 5)}, {"q", Q(1, 2)}}};
        case SelfSimId::LQJ1:
        case SelfSimId::LQJ2:
          return {P{{"a1", Q(1, 2)}, {"b1", Q(1, 2)}, {"b2", Q(1, 2)}, {"q", Q(1, 2)}},
                  P{{"a1", Q(1, 3)}, {"b1", Q(2, 5)}, {"b2", Q(-1, 2)}, {"q", Q(1, 3)}},
                  P{{"a1", Q(1, 4)}, {"b1", Q(3, 4)}, {"b2", Q(2, 5)}, {"q", Q(2, 5)}},
                  P{{"a1", Q(3, 5)}, {"b1", Q(1, 5)}, {"b2", Q(3, 4)}, {"q", Q(3, 5)}},
                  P{{"a1", Q(4, 5)}, {"b1", Q(2, 3)}, {"b2", Q(0)}, {"q", Q(1, 2)}}};
      }
      return {};
    };
    int registered = 0;
    for (SelfSimId id : selfsim_all<Rational>()) {
      ++registered;
      for (const auto& params : grid_for(id)) {
        auto rep = verify_identity<Rational>(id, params, 10);
        checks.require("identity " + rep.id + " exact @ " + rep.params, rep.exact(), rep.detail);
      }
    }
    checks.require("19 identities registered", registered == 19);
    for (SelfSimId id : {SelfSimId::CC1, SelfSimId::CC2, SelfSimId::MM1, SelfSimId::MM2}) {
      for (const auto& params : grid_for(id)) {
        std::map<std::string, double> fp;
        for (const auto& [k, v] : params) fp[k] = to_double(v);
        auto rep = verify_identity<double>(id, fp, 10);
        checks.require("identity " + rep.id + " full form (float) @ " + rep.params,
                       rep.passed && rep.max_rel_error < 1e-12,
                       "max rel err " + std::to_string(rep.max_rel_error));
      }
    }
    criterion(6, "convolutional self-similarity (19 identities)", checks);
  }

  // 7. Summation-lemma oracles, exact for n <= 12 over rational grids.
  {
    CheckList checks;
    auto expect = [&](LemmaId id, const LemmaParams<Rational>& p, int n_max) {
      auto rep = check_lemma<Rational>(id, p, n_max);
      checks.require(std::string("lemma ") + lemma_token(id) + " @ " + rep.params, rep.exact(),
                     rep.detail);
    };
    const std::vector<Rational> grid = {Q(1, 3), Q(1, 2), Q(3, 4), Q(5, 4), Q(7, 2)};
    for (const auto& a : grid)
      for (const auto& b : grid) {
        expect(LemmaId::BinomialPochhammer, {{"a", a}, {"b", b}}, 12);
        expect(LemmaId::VandermondeUnit, {{"b", a}, {"c", b + Q(13)}}, 12);
        expect(LemmaId::PfaffSaalschutz, {{"a", a}, {"b", b}, {"c", a + b + Q(13)}}, 12);
      }
    const std::vector<Rational> qgrid = {Q(1, 3), Q(1, 2), Q(3, 5)};
    for (const auto& q : qgrid)
      for (const auto& a : {Q(1, 5), Q(2, 5), Q(3, 7)}) {
        expect(LemmaId::QVandermonde, {{"b", a}, {"c", a * a}, {"q", q}}, 12);
        expect(LemmaId::QPfaffSaalschutz,
               {{"a", a}, {"b", Q(1, 4)}, {"c", Q(1, 9)}, {"q", q}}, 12);
        expect(LemmaId::QBinomialPochhammer, {{"a", a}, {"b", Q(2, 7)}, {"q", q}}, 12);
        for (int m : {0, 2, 5}) {
          expect(LemmaId::PochhammerRatio,
                 {{"a", a}, {"b1", Q(1, 2)}, {"b2", Q(5, 4)}, {"m", Q(m)}}, 12);
          expect(LemmaId::QPochhammerRatio,
                 {{"a", a}, {"b1", Q(2, 5)}, {"b2", Q(1, 4)}, {"q", q}, {"m", Q(m)}}, 12);
        }
      }
    for (int N : {3, 6, 9})
      for (const auto& b : {Q(1, 4), Q(2, 5), Q(5, 7)}) {
        expect(LemmaId::BinomialMoment, {{"b", b}, {"N", Q(N)}}, std::min(N, 12));
        for (const auto& t : {Q(1, 4), Q(-2, 3), Q(3)})
          expect(LemmaId::KrawtchoukGenFn, {{"p", b}, {"t", t}, {"N", Q(N)}}, N);
      }
    criterion(7, "summation lemma oracles", checks);
  }

  // 8. Semi-infinite chains at tail tolerance 1e-14: column deficiency
  //    < 1e-12, eigen-relation residual < 1e-10 for n <= 10; two-family
  //    orthogonality < 1e-10; second-branch eigenvalue bounds on grids.
  {
    CheckList checks;
    for (CaseId id : semi_infinite_cases())
      for (const auto& params : case_grid<double>(id))
        checks.merge(verify_semi_infinite(id, params, 1e-14, 10, 1e-12, 1e-10));
    for (CaseId id : {CaseId::QMI, CaseId::QMIII, CaseId::QMIV}) {
      auto grid = case_grid<double>(id);
      for (size_t g : {size_t(0), size_t(2), size_t(4)})
        checks.merge(verify_qm_extra(id, grid[g], 1e-14, id == CaseId::QMIV ? 4 : 8, 1e-9));
    }
    // Two-family orthogonality of the stationary q-Meixner measures.
    for (const auto& params : case_grid<double>(CaseId::QMI)) {
      auto lambda = resolve_stationary<double>(CaseId::QMI, params, -1);
      const auto& qm = std::get<QMeixnerSpec<double>>(lambda);
      FamilySpec<double> second = QMeixnerSecondSpec<double>{qm.b, qm.c, qm.q};
      const int points = std::max(truncate_for(lambda, 1e-14).extent,
                                  truncate_for(second, 1e-14).extent) + 1;
      double worst = 0.0;
      for (int n = 0; n <= 6; ++n) {
        auto vn = orthonormal_vector(second, n, points);
        for (int m = 0; m <= 6; ++m) {
          auto wm = orthonormal_vector(lambda, m, points);
          auto vm = orthonormal_vector(second, m, points);
          double cross = 0.0, within = 0.0;
          for (int x = 0; x < points; ++x) {
            cross += vn[x] * wm[x];
            within += vn[x] * vm[x];
          }
          worst = std::max(worst, std::abs(cross));
          worst = std::max(worst, std::abs(within - (m == n ? 1.0 : 0.0)));
        }
      }
      checks.require("two-family orthogonality < 1e-10", worst < 1e-10,
                     "worst " + std::to_string(worst));
    }
    criterion(8, "semi-infinite chains", checks);
  }

  // 9. Repeated convolutions: patterns up to m = 4, N <= 6.
  {
    CheckList checks;
    const std::vector<std::vector<Rational>> pgrids = {
        {Q(1, 2), Q(1, 2), Q(1, 2), Q(1, 2)},
        {Q(1, 3), Q(2, 5), Q(3, 5), Q(1, 4)},
        {Q(4, 5), Q(1, 5), Q(1, 2), Q(2, 3)},
    };
    for (int m = 2; m <= 4; ++m)
      for (int start : {0, 1})
        for (const auto& ps : pgrids) {
          SignPattern pattern;
          for (int j = 0; j < m; ++j) pattern.signs.push_back((j + start) % 2 == 0 ? +1 : -1);
          std::vector<Rational> sub(ps.begin(), ps.begin() + m);
          for (int N : {2, 4, 6}) checks.merge(verify_multiple(pattern, sub, N, 1e-10));
        }
    // m = 2 equivalences with the registered cases.
    for (const auto& ps : pgrids) {
      const Rational p1 = ps[0], p2 = ps[1];
      auto pm = build_multiple<Rational>(parse_pattern("+-"), {p1, p2}, 6);
      auto ki = build_finite<Rational>(CaseId::KI, {{"a", p2}, {"b", p1}}, 6);
      checks.require("(+,-) equals K-i", pm.matrix.K == ki.K);
      auto mp = build_multiple<Rational>(parse_pattern("-+"), {p1, p2}, 6);
      auto kiii = build_finite<Rational>(CaseId::KIII, {{"a", p2}, {"b", p1}}, 6);
      checks.require("(-,+) equals K-iii", mp.matrix.K == kiii.K);
    }
    criterion(9, "repeated two-sided convolutions", checks);
  }

  // 10. Commuting one-parameter families: the three finite deformations
  //     commute exactly at N <= 6; all five preserve the stationary family
  //     exactly; the two semi-infinite ones commute within truncation error.
  {
    CheckList checks;
    const CaseParams<Rational> ki{{"a", Q(1, 2)}, {"b", Q(1, 2)}};
    const CaseParams<Rational> hi{{"a", Q(1)}, {"b", Q(1)}, {"c", Q(1)}};
    const CaseParams<Rational> qhi{
        {"a", Q(1, 3)}, {"b", Q(1, 2)}, {"c", Q(1, 2)}, {"q", Q(1, 2)}};
    const CaseParams<Rational> cc1{{"a", Q(1, 2)}, {"b", Q(1, 2)}};
    const CaseParams<Rational> qmi{
        {"a", Q(1, 2)}, {"b", Q(1, 2)}, {"c", Q(1, 2)}, {"q", Q(1, 2)}};
    for (const Rational& t : {Q(1, 4), Q(1, 2), Q(3, 4)}) {
      for (int N : {2, 4, 6}) {
        checks.merge(verify_commuting_finite(CaseId::KI, ki, t, N));
        checks.merge(verify_commuting_finite(CaseId::HI, hi, t, N));
      }
      checks.require("C-conv1 deformation preserves the stationary family",
                     resolve_stationary(CaseId::CConv1, cc1, -1) ==
                         resolve_stationary(CaseId::CConv1,
                                            deform_params(CaseId::CConv1, cc1, t), -1));
    }
    for (const Rational& t : {Q(3, 4), Q(3, 2), Q(5, 2)})
      for (int N : {2, 4, 6}) checks.merge(verify_commuting_finite(CaseId::QHI, qhi, t, N));
    for (const Rational& t : {Q(3, 4), Q(3, 2), Q(9, 5)})  // inside (b, 1/a) = (1/2, 2)
      checks.require("qM-i deformation preserves the stationary family",
                     resolve_stationary(CaseId::QMI, qmi, -1) ==
                         resolve_stationary(CaseId::QMI, deform_params(CaseId::QMI, qmi, t), -1));
    // Truncated commutators for the semi-infinite deformations.
    auto commutator = [](CaseId id, const CaseParams<double>& params,
                         const CaseParams<double>& moved) {
      auto a = build_semi_infinite(id, params, 1e-14);
      auto b = build_semi_infinite(id, moved, 1e-14);
      const int n = std::min(a.K.size(), b.K.size());
      double worst = 0.0;
      for (int y = 0; y < n / 2; ++y)
        for (int x = 0; x < n / 2; ++x) {
          double ab = 0.0, ba = 0.0;
          for (int z = 0; z < n; ++z) {
            ab += a.K(x, z) * b.K(z, y);
            ba += b.K(x, z) * a.K(z, y);
          }
          worst = std::max(worst, std::abs(ab - ba));
        }
      return worst;
    };
    {
      CaseParams<double> params = to_float(cc1);
      CaseParams<double> moved = deform_params(CaseId::CConv1, params, 0.5);
      checks.require("C-conv1 truncated kernels commute",
                     commutator(CaseId::CConv1, params, moved) < 1e-12);
      CaseParams<double> qparams = to_float(qmi);
      CaseParams<double> qmoved = deform_params(CaseId::QMI, qparams, 1.5);
      checks.require("qM-i truncated kernels commute",
                     commutator(CaseId::QMI, qparams, qmoved) < 1e-12);
    }
    criterion(10, "commuting one-parameter families", checks);
  }

  // 11. Duals: exact index reversal and coinciding spectra for every finite
  //     case.
  {
    CheckList checks;
    for (CaseId id : finite_cases())
      for (size_t g : {size_t(0), size_t(3)})
        for (int N : {2, 5}) checks.merge(verify_dual(id, case_grid<Rational>(id)[g], N, 1e-10));
    criterion(11, "dual chains", checks);
  }

  // 12. Birth-death: difference equation exact on >= 3-point grids, tuned
  //     banded chains for m <= 3, N <= 8.
  {
    CheckList checks;
    for (int N : {2, 5, 8}) {
      for (const Rational& p : {Q(1, 3), Q(1, 2), Q(3, 4)})
        checks.merge(verify_bd<Rational>(bd::BDFamily::Krawtchouk, {{"p", p}}, N,
                                         std::min(N, 3)));
      for (const auto& ab :
           std::vector<std::pair<Rational, Rational>>{{Q(1), Q(1)}, {Q(1, 2), Q(2)}, {Q(3, 2), Q(3, 4)}})
        checks.merge(verify_bd<Rational>(bd::BDFamily::Hahn,
                                         {{"a", ab.first}, {"b", ab.second}}, N,
                                         std::min(N, 3)));
    }
    // Sign pattern of generator powers.
    auto rates = bd::bd_rates<Rational>(bd::BDFamily::Krawtchouk, {{"p", Q(2, 5)}}, 8);
    checks.merge(verify_bd_power_signs(bd::build_generator(rates), 4));
    criterion(12, "repeated birth-death chains", checks);
  }

  // 13. Sampler sanity: total variation between 1e5 sampled paths and the
  //     exact 20-step distribution below 0.01.
  {
    CheckList checks;
    CaseParams<double> params{{"a", 0.5}, {"b", 0.5}};
    auto tm = build_finite(CaseId::KI, params, 8);
    std::vector<double> p0(9, 0.0);
    p0[0] = 1.0;
    auto empirical = sample_paths(tm.K, p0, 20, 100000, 20260810);
    auto exact = evolve_direct(tm.K, p0, 20);
    const double tv = total_variation(empirical, exact);
    checks.require("sampler total variation < 0.01", tv < 0.01, "tv " + std::to_string(tv));
    criterion(13, "sampler sanity", checks);
  }

  if (g_failures == 0) {
    std::printf("ACCEPTANCE: all 13 criteria passed\n");
    return 0;
  }
  std::printf("ACCEPTANCE: %d criteria FAILED\n", g_failures);
  return 1;
}
