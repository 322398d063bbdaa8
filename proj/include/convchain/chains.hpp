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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "convchain/families.hpp"
#include "convchain/hyper.hpp"
#include "convchain/matrix.hpp"
#include "convchain/scalar.hpp"

namespace convchain {

// ---------------------------------------------------------------------------
// Case identifiers.
// ---------------------------------------------------------------------------

enum class ConvolutionType { I, II, III, IV, V, DI, DII, DIII, DIV, DV, MULTI };

enum class CaseId {
  KI, KII, KIII, KIV, KV,
  HI, HII, HIII, HIV,
  QHI, QHII, QHIII, QHIV,   // QHII is registered as rejected
  CConv1, CConv3, CIV, CV,
  MI, MIII, MIV,
  QMI, QMIII, QMIV,
};

template <class T>
using CaseParams = std::map<std::string, T>;

namespace detail {

template <class T>
const T& cp(const CaseParams<T>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw DomainError("chain parameter '" + key + "' missing");
  return it->second;
}

template <class T>
void require_open01(const CaseParams<T>& p, std::initializer_list<const char*> keys) {
  for (const char* k : keys) {
    const T& v = cp(p, k);
    if (!(v > T(0) && v < T(1)))
      throw DomainError(std::string("parameter '") + k + "' must lie in (0,1)");
  }
}

template <class T>
void require_positive(const CaseParams<T>& p, std::initializer_list<const char*> keys) {
  for (const char* k : keys) {
    if (!(cp(p, k) > T(0)))
      throw DomainError(std::string("parameter '") + k + "' must be positive");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Registry row: everything one registered case needs, wired declaratively.
// ---------------------------------------------------------------------------

template <class T>
struct CaseDef {
  CaseId id;
  std::string token;
  ConvolutionType type;
  bool finite = true;
  bool det_factorizes = false;  // types (i)/(iii): det K = prod kappa(n)
  std::vector<std::string> param_names;
  bool needs_q = false;

  std::function<void(const CaseParams<T>&)> validate;
  // Finite kernels: literal convolution sum for K(x,y) on {0..N}.
  std::function<T(const CaseParams<T>&, int N, int x, int y)> entry;
  // Stationary family with the resolved parameters (N < 0 for semi-infinite).
  std::function<FamilySpec<T>(const CaseParams<T>&, int N)> stationary;
  // Closed-form eigenvalue.
  std::function<T(const CaseParams<T>&, int n)> eigenvalue;
  // Terminating-series route to the same eigenvalue.  For the balanced
  // 4F3 / 4phi3 cases the series is itself the closed form, so the two
  // recipes coincide there.
  std::function<SeriesSpec<T>(const CaseParams<T>&, int n)> eigenvalue_series;
  // One-parameter deformation keeping the stationary family fixed (empty when
  // the case has no registered commuting family).
  std::function<CaseParams<T>(const CaseParams<T>&, const T& t)> deform;
};

const char* case_token(CaseId id);
CaseId case_from_token(const std::string& token);
bool case_is_finite(CaseId id);

template <class T>
const CaseDef<T>& case_def(CaseId id);

template <class T>
std::vector<CaseId> registered_cases(bool finite_only = false);

// ---------------------------------------------------------------------------
// Built artifacts.
// ---------------------------------------------------------------------------

template <class T>
struct TransitionMatrix {
  DenseMatrix<T> K;
  std::string case_token;
  bool truncated = false;
  // For truncated matrices: columns y <= core keep their mass inside the
  // matrix up to the tail tolerance; rows/columns beyond act as a buffer.
  int core = -1;
  double tail_tol = 0.0;
};

template <class T>
struct ChainSpec {
  CaseId id;
  CaseParams<T> params;
  FamilySpec<T> stationary;
  int N = -1;  // finite lattice size; -1 for semi-infinite
};

template <class T>
ChainSpec<T> make_chain_spec(CaseId id, const CaseParams<T>& params, int N = -1) {
  return ChainSpec<T>{id, params, resolve_stationary(id, params, N), N};
}

/// Resolves the stationary family of a case (detailed balance holds against
/// its measure).  DomainError when the resolved parameters leave the family's
/// region.
template <class T>
FamilySpec<T> resolve_stationary(CaseId id, const CaseParams<T>& params, int N = -1) {
  const auto& def = case_def<T>(id);
  def.validate(params);
  FamilySpec<T> fam = def.stationary(params, N);
  validate(fam);
  return fam;
}

/// Closed-form eigenvalue kappa(n); kappa(0) = 1 for every case.
template <class T>
T eigenvalue_closed(CaseId id, const CaseParams<T>& params, int n) {
  const auto& def = case_def<T>(id);
  def.validate(params);
  return def.eigenvalue(params, n);
}

/// The terminating-series route to kappa(n).
template <class T>
T eigenvalue_series(CaseId id, const CaseParams<T>& params, int n) {
  const auto& def = case_def<T>(id);
  def.validate(params);
  return series_sum(def.eigenvalue_series(params, n));
}

/// Builds the dense transition matrix of a finite case on {0..N}.
template <class T>
TransitionMatrix<T> build_finite(CaseId id, const CaseParams<T>& params, int N) {
  const auto& def = case_def<T>(id);
  if (!def.finite) throw CaseError(std::string(def.token) + ": not a finite-lattice case");
  if (N < 1) throw DomainError("build_finite: N must be >= 1");
  def.validate(params);
  TransitionMatrix<T> out;
  out.case_token = def.token;
  out.K = DenseMatrix<T>(N + 1);
  for (int y = 0; y <= N; ++y)
    for (int x = 0; x <= N; ++x) out.K(x, y) = def.entry(params, N, x, y);
  return out;
}

/// Index-reversed chain K^d(x,y) = K(N-x, N-y); finite cases only.
template <class T>
TransitionMatrix<T> build_dual(CaseId id, const CaseParams<T>& params, int N) {
  const auto& def = case_def<T>(id);
  if (!def.finite) throw CaseError(std::string(def.token) + ": dual requires a finite lattice");
  TransitionMatrix<T> primal = build_finite(id, params, N);
  primal.K = reverse_indices(primal.K);
  primal.case_token = def.token + std::string("-dual");
  return primal;
}

/// Deformed parameter set sharing the original's stationary family
/// (commuting one-parameter family).  DomainError outside the stated t range.
template <class T>
CaseParams<T> deform_params(CaseId id, const CaseParams<T>& params, const T& t) {
  const auto& def = case_def<T>(id);
  def.validate(params);
  if (!def.deform) throw CaseError(std::string(def.token) + ": no registered commuting family");
  return def.deform(params, t);
}

/// Full chain specification of the deformed member; its stationary family
/// equals the undeformed one, so the two matrices commute.
template <class T>
ChainSpec<T> commuting_family(CaseId id, const CaseParams<T>& params, const T& t, int N = -1) {
  return make_chain_spec(id, deform_params(id, params, t), N);
}

// ---------------------------------------------------------------------------
// Repeated two-sided convolutions (sign patterns).
// ---------------------------------------------------------------------------

struct SignPattern {
  std::vector<int> signs;  // entries +1 / -1, alternating, length >= 2
};

inline SignPattern parse_pattern(const std::string& s) {
  SignPattern p;
  for (char c : s) {
    if (c == '+') p.signs.push_back(+1);
    else if (c == '-') p.signs.push_back(-1);
    else throw PatternError("pattern characters must be '+' or '-'");
  }
  return p;
}

inline void check_pattern(const SignPattern& pattern, size_t n_params) {
  const auto& e = pattern.signs;
  if (e.size() < 2) throw PatternError("pattern needs at least two factors");
  if (e.size() != n_params) throw PatternError("pattern and parameter list differ in length");
  for (size_t j = 1; j < e.size(); ++j)
    if (e[j] == e[j - 1])
      throw PatternError("adjacent equal signs reduce to a single factor; normalize first");
}

template <class T>
struct MultipleConvolution {
  TransitionMatrix<T> matrix;
  T stationary_p;     // resolved Krawtchouk parameter
  T eigenvalue_base;  // kappa(n) = base^n
};

/// Triangular one-sided kernel: sign +1 is the lower-triangular factor,
/// sign -1 the upper-triangular one.
template <class T>
DenseMatrix<T> one_sided_kernel(int sign, int N, const T& p) {
  DenseMatrix<T> m(N + 1);
  for (int y = 0; y <= N; ++y)
    for (int x = 0; x <= N; ++x) {
      if (sign > 0 && y <= x) m(x, y) = kraw::measure(x - y, N - y, p);
      if (sign < 0 && x <= y) m(x, y) = kraw::measure(x, y, p);
    }
  return m;
}

template <class T>
MultipleConvolution<T> build_multiple(const SignPattern& pattern, const std::vector<T>& ps,
                                      int N) {
  check_pattern(pattern, ps.size());
  if (N < 1) throw DomainError("build_multiple: N must be >= 1");
  for (const T& p : ps)
    if (!(p > T(0) && p < T(1))) throw DomainError("pattern parameters must lie in (0,1)");

  const int m = static_cast<int>(ps.size());
  DenseMatrix<T> K = one_sided_kernel(pattern.signs[0], N, ps[0]);
  for (int j = 1; j < m; ++j) K = K * one_sided_kernel(pattern.signs[j], N, ps[j]);

  // kappa(1) = prod_j p_j^(eps_j) with p^(+) = 1-p, p^(-) = p.
  auto signed_p = [&](int j) -> T { return pattern.signs[j] > 0 ? T(1) - ps[j] : ps[j]; };
  T base(1);
  for (int j = 0; j < m; ++j) base = base * signed_p(j);

  // Stationary parameter for the alternating patterns.
  T numer(0);
  if (pattern.signs[0] > 0) {
    for (int k = 0; 2 * k + 1 <= m; ++k) {
      T prod(1);
      for (int j = 0; j < 2 * k; ++j) prod = prod * signed_p(j);
      numer = numer + prod * ps[2 * k];
    }
  } else {
    for (int k = 1; 2 * k <= m; ++k) {
      T prod(1);
      for (int j = 0; j < 2 * k - 1; ++j) prod = prod * signed_p(j);
      numer = numer + prod * ps[2 * k - 1];
    }
  }
  T p_star = numer / (T(1) - base);

  // Cross-check against the corner equation K(0,N) pi(N,N,p) = K(N,0) pi(0,N,p).
  T lhs = K(0, N) * pow_int(p_star, N);
  T rhs = K(N, 0) * pow_int(T(1) - p_star, N);
  if constexpr (is_exact_v<T>) {
    if (lhs != rhs)
      throw Error("build_multiple: closed-form stationary parameter fails the corner equation");
  } else {
    if (!close(to_double(lhs), to_double(rhs), 1e-9))
      throw Error("build_multiple: closed-form stationary parameter fails the corner equation");
  }

  MultipleConvolution<T> out;
  out.matrix.K = std::move(K);
  std::string tok = "multi(";
  for (int s : pattern.signs) tok += (s > 0 ? '+' : '-');
  tok += ")";
  out.matrix.case_token = tok;
  out.stationary_p = p_star;
  out.eigenvalue_base = base;
  return out;
}

// ---------------------------------------------------------------------------
// Semi-infinite builders (float backend; normalizations are transcendental).
// Implemented in src/semi_infinite.cpp.
// ---------------------------------------------------------------------------

/// Truncation window of the case's stationary measure at the given tail
/// tolerance.
TruncatedLattice semi_infinite_window(CaseId id, const CaseParams<double>& params,
                                      double tail_tol);

/// Builds the truncated transition matrix of a semi-infinite case.
TransitionMatrix<double> build_semi_infinite(CaseId id, const CaseParams<double>& params,
                                             double tail_tol);

/// The extra eigenvalue branch of the q-Meixner cases (second eigenvector
/// family), by its closed form.
double extra_eigenvalue(CaseId id, const CaseParams<double>& params, int n);

/// Same value through the literal double-sum route (only QMIV has a distinct
/// one; for QMI/QMIII this evaluates the terminating 2phi1 sum instead of the
/// q-Pochhammer ratio).
double extra_eigenvalue_series(CaseId id, const CaseParams<double>& params, int n);

}  // namespace convchain

#include "convchain/chains_registry.inl"
