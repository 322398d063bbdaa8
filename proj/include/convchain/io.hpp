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

#include <map>
#include <string>
#include <vector>

#include "convchain/matrix.hpp"
#include "convchain/scalar.hpp"

namespace convchain {

/// Rationals print as "num/den" (plain integer when den = 1); floats print as
/// the shortest decimal that round-trips.
std::string format_scalar(const Rational& r);
std::string format_scalar(double v);

/// Matrix dump: header row carries the departure indices y, each following
/// row is one arrival point x.
template <class T>
std::string matrix_to_csv(const DenseMatrix<T>& m) {
  std::string out = "x\\y";
  for (int y = 0; y < m.size(); ++y) out += "," + std::to_string(y);
  out += "\n";
  for (int x = 0; x < m.size(); ++x) {
    out += std::to_string(x);
    for (int y = 0; y < m.size(); ++y) out += "," + format_scalar(m(x, y));
    out += "\n";
  }
  return out;
}

template <class T>
DenseMatrix<T> matrix_from_csv(const std::string& csv);

template <class T>
std::string vector_to_csv(const std::vector<T>& v) {
  std::string out = "x,value\n";
  for (size_t x = 0; x < v.size(); ++x)
    out += std::to_string(x) + "," + format_scalar(v[x]) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Chain configuration document.
// ---------------------------------------------------------------------------

/// Everything needed to name a chain: case token, parameters as exact
/// rational strings (or decimals), lattice, backend, and the optional
/// sign-pattern / deformation extensions.
struct ChainConfig {
  std::string case_token;
  std::map<std::string, std::string> params;
  int lattice_n = -1;
  double trunc_tol = 1e-14;
  std::string backend = "exact";  // "exact" | "float"
  std::string pattern;            // sign pattern, e.g. "+-+" (MULTI)
  std::vector<std::string> pattern_ps;
  std::string deformation_t;      // empty: none
};

/// Parses a JSON configuration document; unknown keys are rejected.
ChainConfig parse_chain_config(const std::string& json_text);
std::string chain_config_to_json(const ChainConfig& config);

}  // namespace convchain
