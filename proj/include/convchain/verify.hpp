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

#include <algorithm>
#include <string>
#include <vector>

#include "convchain/bd.hpp"
#include "convchain/chains.hpp"
#include "convchain/selfsim.hpp"
#include "convchain/spectral.hpp"

namespace convchain {

/// One verified claim; `detail` explains a failure.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

class CheckList {
 public:
  void require(const std::string& name, bool ok, const std::string& detail = "") {
    results_.push_back({name, ok, ok ? "" : detail});
  }
  bool all_passed() const {
    for (const auto& r : results_)
      if (!r.passed) return false;
    return true;
  }
  const std::vector<CheckResult>& results() const { return results_; }
  void merge(const CheckList& other) {
    results_.insert(results_.end(), other.results().begin(), other.results().end());
  }

 private:
  std::vector<CheckResult> results_;
};

namespace detail {

template <class T>
std::string describe(CaseId id, const CaseParams<T>& params, int N) {
  std::string s = case_token(id);
  for (const auto& [k, v] : params) {
    if constexpr (is_exact_v<T>)
      s += " " + k + "=" + v.get_str();
    else
      s += " " + k + "=" + std::to_string(v);
  }
  if (N >= 0) s += " N=" + std::to_string(N);
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Finite-case structural checks (exact backend).
// ---------------------------------------------------------------------------

/// Nonnegativity, exact column sums, exact detailed balance.
template <class T>
CheckList verify_stochastic_balance(CaseId id, const CaseParams<T>& params, int N) {
  static_assert(is_exact_v<T>, "structural checks run on the exact backend");
  CheckList checks;
  const std::string where = detail::describe(id, params, N);
  TransitionMatrix<T> tm = build_finite(id, params, N);
  FamilySpec<T> lambda = resolve_stationary(id, params, N);
  bool nonneg = true, colsums = true;
  for (int y = 0; y <= N; ++y) {
    for (int x = 0; x <= N; ++x)
      if (tm.K(x, y) < T(0)) nonneg = false;
    if (tm.K.column_sum(y) != T(1)) colsums = false;
  }
  checks.require("nonnegative entries @ " + where, nonneg);
  checks.require("columns sum to one @ " + where, colsums);
  bool balanced = true;
  std::vector<T> pi = measure_vector(lambda, N + 1);
  try {
    check_detailed_balance(tm.K, pi);
  } catch (const BalanceError&) {
    balanced = false;
  }
  checks.require("detailed balance @ " + where, balanced);
  return checks;
}

/// Closed-form kappa(n) == origin-row sum == terminating-series route, and the
/// full eigen-relation K (pi P_n) = kappa(n) (pi P_n), all exact.
template <class T>
CheckList verify_eigen_routes(CaseId id, const CaseParams<T>& params, int N) {
  static_assert(is_exact_v<T>);
  CheckList checks;
  const std::string where = detail::describe(id, params, N);
  TransitionMatrix<T> tm = build_finite(id, params, N);
  FamilySpec<T> lambda = resolve_stationary(id, params, N);
  std::vector<T> pi = measure_vector(lambda, N + 1);

  bool sum_ok = true, series_ok = true, relation_ok = true, zero_ok = true, bounds_ok = true;
  for (int n = 0; n <= N; ++n) {
    const T closed = eigenvalue_closed(id, params, n);
    if (n == 0 && closed != T(1)) zero_ok = false;
    if (!(closed <= T(1) && closed > T(-1))) bounds_ok = false;
    if (eigenvalue_sum_formula(tm.K, lambda, n) != closed) sum_ok = false;
    if (eigenvalue_series(id, params, n) != closed) series_ok = false;
    std::vector<T> v(N + 1);
    for (int x = 0; x <= N; ++x) v[x] = pi[x] * poly(lambda, n, x);
    std::vector<T> kv = tm.K.apply(v);
    for (int x = 0; x <= N; ++x)
      if (kv[x] != closed * v[x]) relation_ok = false;
  }
  checks.require("kappa(0) = 1 @ " + where, zero_ok);
  checks.require("eigenvalues inside (-1, 1] @ " + where, bounds_ok);
  checks.require("sum formula matches closed form @ " + where, sum_ok);
  checks.require("series route matches closed form @ " + where, series_ok);
  checks.require("eigen-relation holds @ " + where, relation_ok);

  // Trace identity: sum of eigenvalues equals tr K.
  T tr(0);
  for (int n = 0; n <= N; ++n) tr = tr + eigenvalue_closed(id, params, n);
  checks.require("trace equals eigenvalue sum @ " + where, tr == tm.K.trace());
  return checks;
}

/// det K = prod_n kappa(n) for the triangularly factored convolution types.
template <class T>
CheckList verify_det_identity(CaseId id, const CaseParams<T>& params, int N) {
  static_assert(is_exact_v<T>);
  CheckList checks;
  const auto& def = case_def<T>(id);
  if (!def.det_factorizes) return checks;
  TransitionMatrix<T> tm = build_finite(id, params, N);
  T prod(1);
  for (int n = 0; n <= N; ++n) prod = prod * eigenvalue_closed(id, params, n);
  checks.require("determinant equals eigenvalue product @ " + detail::describe(id, params, N),
                 determinant(tm.K) == prod);
  return checks;
}

/// The sum-formula eigenvalues carry no N dependence: equal values at N, N+1.
template <class T>
CheckList verify_n_independence(CaseId id, const CaseParams<T>& params, int N, int n_max) {
  static_assert(is_exact_v<T>);
  CheckList checks;
  TransitionMatrix<T> small = build_finite(id, params, N);
  TransitionMatrix<T> big = build_finite(id, params, N + 1);
  FamilySpec<T> lam_small = resolve_stationary(id, params, N);
  FamilySpec<T> lam_big = resolve_stationary(id, params, N + 1);
  bool ok = true;
  for (int n = 0; n <= std::min(N, n_max); ++n)
    if (eigenvalue_sum_formula(small.K, lam_small, n) !=
        eigenvalue_sum_formula(big.K, lam_big, n))
      ok = false;
  checks.require("eigenvalues independent of N @ " + detail::describe(id, params, N), ok);
  return checks;
}

/// Numeric leg: dense symmetric eigensolve on the float backend, compared
/// against the closed forms evaluated exactly and rounded once.  (Evaluating
/// the q-series closed forms directly in doubles at large N loses most digits
/// to cancellation; the convolution entries themselves are sums of positive
/// terms and stay accurate.)
inline CheckList verify_numeric_spectrum(CaseId id, const CaseParams<Rational>& exact_params,
                                         int N, double tol) {
  CheckList checks;
  CaseParams<double> params;
  for (const auto& [k, v] : exact_params) params[k] = to_double(v);
  const std::string where = detail::describe(id, params, N);

  TransitionMatrix<double> tm = build_finite(id, params, N);
  FamilySpec<double> lambda = resolve_stationary(id, params, N);
  std::vector<double> pi = measure_vector(lambda, N + 1);
  Spectrum spec = eigendecompose(symmetrize(tm.K, pi));

  std::vector<double> closed(N + 1), numeric = spec.eigenvalues;
  for (int n = 0; n <= N; ++n) closed[n] = to_double(eigenvalue_closed(id, exact_params, n));

  bool multiset_ok = true;
  {
    std::vector<double> a = closed, b = numeric;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (int n = 0; n <= N; ++n)
      if (std::abs(a[n] - b[n]) > tol) multiset_ok = false;
  }
  checks.require("numeric eigenvalue multiset matches closed forms @ " + where, multiset_ok);
  if (spec.ordered_by_sign_changes) {
    bool by_n_ok = true;
    for (int n = 0; n <= N; ++n)
      if (std::abs(closed[n] - numeric[n]) > tol) by_n_ok = false;
    checks.require("sign-change ordering matches kappa(n) @ " + where, by_n_ok);
  }
  return checks;
}

/// Float-backend origin-row sum; meaningful while the polynomial values do not
/// yet cancel catastrophically (exponentially in n for the q-families), hence
/// the explicit order cap.
inline CheckList verify_float_sum_formula(CaseId id, const CaseParams<double>& params, int N,
                                          int n_max, double tol) {
  CheckList checks;
  const std::string where = detail::describe(id, params, N);
  TransitionMatrix<double> tm = build_finite(id, params, N);
  FamilySpec<double> lambda = resolve_stationary(id, params, N);
  bool sum_ok = true;
  for (int n = 0; n <= std::min(N, n_max); ++n)
    if (std::abs(eigenvalue_sum_formula(tm.K, lambda, n) -
                 eigenvalue_closed(id, params, n)) > tol)
      sum_ok = false;
  checks.require("float sum formula matches closed forms @ " + where, sum_ok);
  return checks;
}

// ---------------------------------------------------------------------------
// Spectral representation and evolution.
// ---------------------------------------------------------------------------

template <class T>
CheckList verify_spectral_theorems(CaseId id, const CaseParams<T>& params, int N,
                                   const std::vector<long>& bound_steps) {
  static_assert(is_exact_v<T>);
  CheckList checks;
  const std::string where = detail::describe(id, params, N);
  TransitionMatrix<T> tm = build_finite(id, params, N);
  FamilySpec<T> lambda = resolve_stationary(id, params, N);
  std::vector<T> kappas(N + 1);
  for (int n = 0; n <= N; ++n) kappas[n] = eigenvalue_closed(id, params, n);

  checks.require("spectral reconstruction equals K @ " + where,
                 spectral_reconstruct(lambda, kappas, N + 1) == tm.K);

  // Completeness at kappa == 1: sum_n d_n^2 pi(x) P_n(x) P_n(y) = delta.
  std::vector<T> ones(N + 1, T(1));
  checks.require("completeness relation @ " + where,
                 spectral_reconstruct(lambda, ones, N + 1) == DenseMatrix<T>::identity(N + 1));

  // Spectral evolution equals repeated application, exactly.
  std::vector<T> p0(N + 1, T(0));
  p0[0] = T(1);
  bool evolve_ok = true;
  for (long steps : {0L, 1L, 5L, 16L}) {
    auto spec_route = evolve_spectral(lambda, kappas, p0, steps);
    auto direct = evolve_direct(tm.K, p0, steps);
    if (spec_route.distribution != direct) evolve_ok = false;
    if (steps == 0 && std::abs(spec_route.coefficients[0] - 1.0) > 1e-12) evolve_ok = false;
  }
  checks.require("spectral evolution equals matrix powers @ " + where, evolve_ok);

  // Geometric approach to stationarity, against the expansion constant.
  std::vector<T> pi = measure_vector(lambda, N + 1);
  double gap = 0.0;
  for (int n = 1; n <= N; ++n) gap = std::max(gap, std::abs(to_double(kappas[n])));
  double expansion = 0.0;
  for (int n = 1; n <= N; ++n) {
    T overlap(0);
    for (int x = 0; x <= N; ++x) overlap = overlap + poly(lambda, n, x) * p0[x];
    double peak = 0.0;
    for (int x = 0; x <= N; ++x)
      peak = std::max(peak, std::abs(to_double(pi[x] * poly(lambda, n, x))));
    expansion += std::abs(to_double(norm_sq(lambda, n) * overlap)) * peak;
  }
  bool bound_ok = true;
  for (long steps : bound_steps) {
    auto dist = evolve_spectral(lambda, kappas, p0, steps).distribution;
    double dev = 0.0;
    for (int x = 0; x <= N; ++x) dev = std::max(dev, std::abs(to_double(dist[x] - pi[x])));
    if (dev > expansion * std::pow(gap, steps) * (1.0 + 1e-9) + 1e-300) bound_ok = false;
  }
  checks.require("geometric convergence bound @ " + where, bound_ok);
  return checks;
}

// ---------------------------------------------------------------------------
// Duals.
// ---------------------------------------------------------------------------

template <class T>
CheckList verify_dual(CaseId id, const CaseParams<T>& params, int N, double tol) {
  static_assert(is_exact_v<T>);
  CheckList checks;
  const std::string where = detail::describe(id, params, N);
  TransitionMatrix<T> primal = build_finite(id, params, N);
  TransitionMatrix<T> dual = build_dual(id, params, N);

  bool entries_ok = true;
  for (int y = 0; y <= N; ++y)
    for (int x = 0; x <= N; ++x)
      if (dual.K(x, y) != primal.K(N - x, N - y)) entries_ok = false;
  checks.require("dual is the index reversal @ " + where, entries_ok);

  // Dual symmetry against the reflected stationary measure.
  FamilySpec<T> lambda = resolve_stationary(id, params, N);
  std::vector<T> pi = measure_vector(lambda, N + 1);
  std::vector<T> reflected(N + 1);
  for (int x = 0; x <= N; ++x) reflected[x] = pi[N - x];
  bool balanced = true;
  try {
    check_detailed_balance(dual.K, reflected);
  } catch (const BalanceError&) {
    balanced = false;
  }
  checks.require("dual detailed balance @ " + where, balanced);

  // Spectra coincide numerically.
  DenseMatrix<double> hp(N + 1), hd(N + 1);
  {
    DenseMatrix<double> kp(N + 1), kd(N + 1);
    std::vector<double> pip(N + 1), pid(N + 1);
    for (int y = 0; y <= N; ++y)
      for (int x = 0; x <= N; ++x) {
        kp(x, y) = to_double(primal.K(x, y));
        kd(x, y) = to_double(dual.K(x, y));
      }
    for (int x = 0; x <= N; ++x) {
      pip[x] = to_double(pi[x]);
      pid[x] = to_double(reflected[x]);
    }
    hp = symmetrize(kp, pip);
    hd = symmetrize(kd, pid);
  }
  auto sp = eigendecompose(hp).eigenvalues;
  auto sd = eigendecompose(hd).eigenvalues;
  std::sort(sp.begin(), sp.end());
  std::sort(sd.begin(), sd.end());
  bool spectra_ok = true;
  for (int n = 0; n <= N; ++n)
    if (std::abs(sp[n] - sd[n]) > tol) spectra_ok = false;
  checks.require("dual spectrum coincides @ " + where, spectra_ok);
  return checks;
}

// ---------------------------------------------------------------------------
// Repeated two-sided convolutions.
// ---------------------------------------------------------------------------

template <class T>
CheckList verify_multiple(const SignPattern& pattern, const std::vector<T>& ps, int N,
                          double tol) {
  static_assert(is_exact_v<T>);
  CheckList checks;
  std::string where = "multi(";
  for (int s : pattern.signs) where += (s > 0 ? '+' : '-');
  where += ") N=" + std::to_string(N);

  MultipleConvolution<T> built = build_multiple(pattern, ps, N);
  KrawtchoukSpec<T> lambda{built.stationary_p, N};
  lambda.validate();
  std::vector<T> pi = measure_vector(FamilySpec<T>(lambda), N + 1);
  bool balanced = true;
  try {
    check_detailed_balance(built.matrix.K, pi);
  } catch (const BalanceError&) {
    balanced = false;
  }
  checks.require("symmetry condition with resolved parameter @ " + where, balanced);

  bool stochastic = true;
  for (int y = 0; y <= N; ++y) {
    if (built.matrix.K.column_sum(y) != T(1)) stochastic = false;
    for (int x = 0; x <= N; ++x)
      if (built.matrix.K(x, y) < T(0)) stochastic = false;
  }
  checks.require("stochastic @ " + where, stochastic);

  // Reflection: flipping every sign and p -> 1-p reverses both indices.
  {
    SignPattern flipped = pattern;
    for (int& s : flipped.signs) s = -s;
    std::vector<T> qs;
    for (const T& p : ps) qs.push_back(T(1) - p);
    MultipleConvolution<T> other = build_multiple(flipped, qs, N);
    checks.require("reflection identity @ " + where,
                   reverse_indices(other.matrix.K) == built.matrix.K);
  }

  // Numeric spectrum is {base^n}.
  {
    DenseMatrix<double> kd(N + 1);
    std::vector<double> pid(N + 1);
    for (int y = 0; y <= N; ++y)
      for (int x = 0; x <= N; ++x) kd(x, y) = to_double(built.matrix.K(x, y));
    for (int x = 0; x <= N; ++x) pid[x] = to_double(pi[x]);
    auto numeric = eigendecompose(symmetrize(kd, pid)).eigenvalues;
    std::vector<double> closed(N + 1);
    for (int n = 0; n <= N; ++n) closed[n] = std::pow(to_double(built.eigenvalue_base), n);
    std::sort(numeric.begin(), numeric.end());
    std::sort(closed.begin(), closed.end());
    bool ok = true;
    for (int n = 0; n <= N; ++n)
      if (std::abs(numeric[n] - closed[n]) > tol) ok = false;
    checks.require("numeric spectrum matches power law @ " + where, ok);
  }
  return checks;
}

// ---------------------------------------------------------------------------
// Commuting one-parameter families.
// ---------------------------------------------------------------------------

template <class T>
CheckList verify_commuting_finite(CaseId id, const CaseParams<T>& params, const T& t, int N) {
  static_assert(is_exact_v<T>);
  CheckList checks;
  const std::string where = detail::describe(id, params, N);
  CaseParams<T> deformed = deform_params(id, params, t);
  checks.require("deformation preserves the stationary family @ " + where,
                 resolve_stationary(id, params, N) == resolve_stationary(id, deformed, N));
  TransitionMatrix<T> original = build_finite(id, params, N);
  TransitionMatrix<T> moved = build_finite(id, deformed, N);
  checks.require("deformed and original commute @ " + where,
                 original.K * moved.K == moved.K * original.K);
  return checks;
}

// ---------------------------------------------------------------------------
// Semi-infinite chains.
// ---------------------------------------------------------------------------

inline CheckList verify_semi_infinite(CaseId id, const CaseParams<double>& params,
                                      double tail_tol, int n_max, double deficiency_tol,
                                      double residual_tol) {
  CheckList checks;
  const std::string where = detail::describe(id, params, -1);
  TransitionMatrix<double> tm = build_semi_infinite(id, params, tail_tol);
  const int extent = tm.K.size() - 1;
  const int core = tm.core;

  bool nonneg = true;
  for (int y = 0; y <= extent; ++y)
    for (int x = 0; x <= extent; ++x)
      if (tm.K(x, y) < 0.0) nonneg = false;
  checks.require("nonnegative entries @ " + where, nonneg);

  double worst_deficiency = 0.0;
  for (int y = 0; y <= core; ++y)
    worst_deficiency = std::max(worst_deficiency, std::abs(1.0 - tm.K.column_sum(y)));
  checks.require("column deficiency below tolerance @ " + where,
                 worst_deficiency < deficiency_tol,
                 "worst " + std::to_string(worst_deficiency));

  FamilySpec<double> lambda = resolve_stationary(id, params, -1);
  std::vector<double> pi = measure_vector(lambda, extent + 1);

  // Eigen-relation residual on the inner half of the window.
  double worst_residual = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    const double kappa = eigenvalue_closed(id, params, n);
    std::vector<double> v(extent + 1);
    for (int x = 0; x <= extent; ++x) v[x] = pi[x] * poly(lambda, n, x);
    std::vector<double> kv = tm.K.apply(v);
    for (int x = 0; x <= extent / 2; ++x)
      worst_residual = std::max(worst_residual, std::abs(kv[x] - kappa * v[x]));
  }
  checks.require("eigen-relation residual below tolerance @ " + where,
                 worst_residual < residual_tol, "worst " + std::to_string(worst_residual));

  // Detailed balance within the window.
  bool balanced = true;
  try {
    check_detailed_balance(tm.K, pi);
  } catch (const BalanceError&) {
    balanced = false;
  }
  checks.require("detailed balance @ " + where, balanced);
  return checks;
}

/// Extra eigenvalue branch of the q-Meixner chains: closed form vs series
/// route vs the origin-row second-family sum over the built matrix; bounds.
inline CheckList verify_qm_extra(CaseId id, const CaseParams<double>& params, double tail_tol,
                                 int n_max, double tol) {
  CheckList checks;
  const std::string where = detail::describe(id, params, -1);
  TransitionMatrix<double> tm = build_semi_infinite(id, params, tail_tol);
  FamilySpec<double> lambda = resolve_stationary(id, params, -1);
  const auto& qm = std::get<QMeixnerSpec<double>>(lambda);

  bool routes_ok = true, bounds_ok = true, sum_ok = true;
  for (int n = 0; n <= n_max; ++n) {
    const double closed = extra_eigenvalue(id, params, n);
    const double series = extra_eigenvalue_series(id, params, n);
    if (!close(closed, series, 1e-9)) routes_ok = false;
    const double primary = eigenvalue_closed(id, params, n);
    const double ratio = closed / primary;
    if (!(closed > 0.0 && closed < 1.0 && ratio > 0.0 && ratio < 1.0)) bounds_ok = false;
    const double via_sum = extra_eigenvalue_sum_formula(tm.K, qm, n);
    if (std::abs(via_sum - closed) > tol) sum_ok = false;
  }
  checks.require("second-branch closed form matches series route @ " + where, routes_ok);
  checks.require("second-branch bounds @ " + where, bounds_ok);
  checks.require("second-branch sum formula over K @ " + where, sum_ok);
  return checks;
}

// ---------------------------------------------------------------------------
// Birth-death material.
// ---------------------------------------------------------------------------

template <class T>
CheckList verify_bd(bd::BDFamily family, const std::map<std::string, T>& params, int N, int m_max) {
  static_assert(is_exact_v<T>);
  CheckList checks;
  std::string where = (family == bd::BDFamily::Krawtchouk ? "bd-krawtchouk" : "bd-hahn");
  where += " N=" + std::to_string(N);

  bd::BDRates<T> rates;  // bd_rates itself re-verifies the difference equation
  try {
    rates = bd::bd_rates(family, params, N);
  } catch (const RatesError& e) {
    checks.require("difference-equation identity @ " + where, false, e.what());
    return checks;
  }
  checks.require("difference-equation identity @ " + where, true);
  checks.require("boundary rates vanish @ " + where,
                 rates.death[0] == T(0) && rates.birth[N] == T(0));

  DenseMatrix<T> L = bd::build_generator(rates);
  bool zero_cols = true;
  for (int y = 0; y <= N; ++y)
    if (L.column_sum(y) != T(0)) zero_cols = false;
  checks.require("generator columns sum to zero @ " + where, zero_cols);

  std::vector<T> pi = measure_vector(rates.family, N + 1);
  for (int m = 1; m <= m_max; ++m) {
    const std::string tag = where + " m=" + std::to_string(m);
    bd::WeightVector<T> w;
    try {
      w = bd::tune_weights(L, m);
    } catch (const TuningError& e) {
      checks.require("weight tuning feasible @ " + tag, false, e.what());
      continue;
    }
    DenseMatrix<T> K = bd::build_banded_chain(L, m, w);
    bool stochastic = true, banded = true;
    for (int y = 0; y <= N; ++y) {
      if (K.column_sum(y) != T(1)) stochastic = false;
      for (int x = 0; x <= N; ++x) {
        if (K(x, y) < T(0)) stochastic = false;
        if (std::abs(x - y) > m && K(x, y) != T(0)) banded = false;
      }
    }
    checks.require("banded chain stochastic @ " + tag, stochastic);
    checks.require("band width " + std::to_string(m) + " @ " + tag, banded);

    bool balanced = true;
    try {
      check_detailed_balance(K, pi);
    } catch (const BalanceError&) {
      balanced = false;
    }
    checks.require("banded chain reversible @ " + tag, balanced);

    bool relation_ok = true;
    for (int n = 0; n <= N; ++n) {
      T kappa = bd::banded_eigenvalue(m, w, rates.eig[n]);
      std::vector<T> v(N + 1);
      for (int x = 0; x <= N; ++x) v[x] = pi[x] * poly(rates.family, n, x);
      std::vector<T> kv = K.apply(v);
      for (int x = 0; x <= N; ++x)
        if (kv[x] != kappa * v[x]) relation_ok = false;
    }
    checks.require("banded eigen-relation exact @ " + tag, relation_ok);
  }
  return checks;
}

/// Sign pattern of generator powers: L^m(x+k, x) has sign (-1)^{m-k}.
template <class T>
CheckList verify_bd_power_signs(const DenseMatrix<T>& L, int m_max) {
  static_assert(is_exact_v<T>);
  CheckList checks;
  const int N = L.size() - 1;
  DenseMatrix<T> power = L;
  for (int m = 1; m <= m_max; ++m) {
    if (m > 1) power = power * L;
    bool ok = true;
    for (int x = 0; x <= N; ++x)
      for (int row = 0; row <= N; ++row) {
        const int k = std::abs(row - x);
        if (k > m) {
          if (power(row, x) != T(0)) ok = false;
          continue;
        }
        // Interior entries are strictly signed; boundary-touching ones may
        // vanish but never flip sign.
        T signed_entry = ((m - k) % 2 == 0) ? power(row, x) : -power(row, x);
        if (signed_entry < T(0)) ok = false;
        const bool interior = x - m >= 0 && x + m <= N;
        if (interior && signed_entry == T(0)) ok = false;
      }
    checks.require("power sign pattern m=" + std::to_string(m), ok);
  }
  return checks;
}

}  // namespace convchain
