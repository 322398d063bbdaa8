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

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "convchain/families.hpp"
#include "convchain/scalar.hpp"
#include "convchain/sumlemmas.hpp"

namespace convchain {

// ---------------------------------------------------------------------------
// The stationary measures reproduce themselves under convolution.  Each row
// below records one such identity: a summation shape, the parameter wiring of
// the two factors, and the reproduced measure on the right-hand side.
//
// The Charlier / Meixner / little-q-Jacobi rows are verified in ratio form
// pi(x)/pi(0): their transcendental normalizations cancel between the sides,
// so the check stays exact under the rational backend.  The float pass
// additionally checks the fully normalized form.
// ---------------------------------------------------------------------------

enum class SelfSimId {
  CC1, CC2,
  MM1, MM2,
  KThreeTerm,   // prefix sum reproducing the binomial with combined parameter
  KPipiI,       // product of two one-sided kernels
  KPipiII,      // windowed variant of KThreeTerm
  H1, H2, H3, H4, H5,
  QH1, QH2, QH3, QH4, QH5,
  LQJ1, LQJ2,
};

enum class SumShape {
  Prefix,   // sum_{z=0}^{x},   value compared at x
  Window,   // sum_{z=y}^{x},   value compared at x-y (x >= y)
  Between,  // sum_{z=x}^{y},   value compared at (x,y) (x <= y)
};

template <class T>
struct SelfSimIdentity {
  SelfSimId id;
  std::string token;
  SumShape shape;
  bool needs_lattice = false;     // identity carries an ambient N
  bool ratio_only_exact = false;  // exact check runs on the ratio form
  std::vector<std::string> param_names;
  bool needs_q = false;
  std::function<void(const std::map<std::string, T>&)> validate;
  // One term of the left side; `ratio` selects ratio vs normalized form.
  std::function<T(const std::map<std::string, T>&, int N, int x, int y, int z, bool ratio)> term;
  // The reproduced measure on the right side.
  std::function<T(const std::map<std::string, T>&, int N, int x, int y, bool ratio)> rhs;
};

const char* selfsim_token(SelfSimId id);

template <class T>
const SelfSimIdentity<T>& selfsim_identity(SelfSimId id);

template <class T>
std::vector<SelfSimId> selfsim_all();

/// Evaluates one left-hand convolution sum literally.
template <class T>
T convolve_measures(SelfSimId id, const std::map<std::string, T>& params, int N, int x, int y,
                    bool ratio_form) {
  const auto& ident = selfsim_identity<T>(id);
  ident.validate(params);
  T s(0);
  switch (ident.shape) {
    case SumShape::Prefix:
      if (x < 0) throw DomainError("convolve_measures: x must be >= 0");
      for (int z = 0; z <= x; ++z) s = s + ident.term(params, N, x, 0, z, ratio_form);
      break;
    case SumShape::Window:
      if (y > x || y < 0) throw DomainError("convolve_measures: need 0 <= y <= x");
      for (int z = y; z <= x; ++z) s = s + ident.term(params, N, x, y, z, ratio_form);
      break;
    case SumShape::Between:
      if (x > y || x < 0) throw DomainError("convolve_measures: need 0 <= x <= y");
      for (int z = x; z <= y; ++z) s = s + ident.term(params, N, x, y, z, ratio_form);
      break;
  }
  return s;
}

/// Verifies an identity over every admissible (x, y) up to lattice bound
/// n_max.  Exact verdict under the rational backend; max relative error under
/// the float one.
template <class T>
IdentityReport verify_identity(SelfSimId id, const std::map<std::string, T>& params, int n_max) {
  const auto& ident = selfsim_identity<T>(id);
  ident.validate(params);
  constexpr bool exact = is_exact_v<T>;
  const bool ratio_form = exact;  // float pass exercises the normalized form

  IdentityReport rep;
  rep.id = ident.token;
  rep.params = detail::format_params(params);
  rep.exact_backend = exact;
  rep.passed = true;

  auto record = [&](int N, int x, int y) {
    T lhs = convolve_measures(id, params, N, x, y, ratio_form);
    T rhs = ident.rhs(params, N, x, y, ratio_form);
    if constexpr (exact) {
      if (lhs != rhs) {
        rep.passed = false;
        if (rep.detail.empty())
          rep.detail = "x=" + std::to_string(x) + ",y=" + std::to_string(y) +
                       (ident.needs_lattice ? ",N=" + std::to_string(N) : "");
      }
    } else {
      const double l = to_double(lhs), r = to_double(rhs);
      const double ref = std::max({1.0, std::abs(l), std::abs(r)});
      const double err = std::abs(l - r) / ref;
      rep.max_rel_error = std::max(rep.max_rel_error, err);
      if (err > tolerances().rel) {
        rep.passed = false;
        if (rep.detail.empty()) rep.detail = "x=" + std::to_string(x) + ",y=" + std::to_string(y);
      }
    }
    ++rep.points_checked;
  };

  const int N = n_max;
  switch (ident.shape) {
    case SumShape::Prefix:
      for (int x = 0; x <= N; ++x) record(N, x, 0);
      break;
    case SumShape::Window:
      for (int y = 0; y <= N; ++y)
        for (int x = y; x <= N; ++x) record(N, x, y);
      break;
    case SumShape::Between:
      for (int x = 0; x <= N; ++x)
        for (int y = x; y <= N; ++y) record(N, x, y);
      break;
  }
  return rep;
}

}  // namespace convchain

#include "convchain/selfsim_registry.inl"
