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

#include "convchain/io.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

namespace convchain {

std::string format_scalar(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string format_scalar(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

template <class T>
DenseMatrix<T> matrix_from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line)) throw DomainError("matrix_from_csv: empty document");
  const auto header = split(line, ',');
  const int n = static_cast<int>(header.size()) - 1;
  if (n < 1) throw DomainError("matrix_from_csv: malformed header");
  DenseMatrix<T> m(n);
  for (int x = 0; x < n; ++x) {
    if (!std::getline(in, line)) throw DomainError("matrix_from_csv: too few rows");
    const auto cells = split(line, ',');
    if (static_cast<int>(cells.size()) != n + 1)
      throw DomainError("matrix_from_csv: row " + std::to_string(x) + " has wrong width");
    for (int y = 0; y < n; ++y) m(x, y) = parse_scalar<T>(cells[y + 1]);
  }
  return m;
}

template DenseMatrix<Rational> matrix_from_csv<Rational>(const std::string&);
template DenseMatrix<double> matrix_from_csv<double>(const std::string&);

ChainConfig parse_chain_config(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("chain config: ") + e.what());
  }
  if (!doc.is_object()) throw DomainError("chain config: document must be an object");

  ChainConfig config;
  for (const auto& [key, value] : doc.items()) {
    if (key == "case") {
      config.case_token = value.get<std::string>();
    } else if (key == "params") {
      if (!value.is_object()) throw DomainError("chain config: 'params' must be an object");
      for (const auto& [pk, pv] : value.items()) {
        config.params[pk] =
            pv.is_string() ? pv.get<std::string>() : nlohmann::to_string(pv);
      }
    } else if (key == "N") {
      config.lattice_n = value.get<int>();
    } else if (key == "trunc_tol") {
      config.trunc_tol = value.get<double>();
    } else if (key == "backend") {
      config.backend = value.get<std::string>();
      if (config.backend != "exact" && config.backend != "float")
        throw DomainError("chain config: backend must be 'exact' or 'float'");
    } else if (key == "pattern") {
      config.pattern = value.get<std::string>();
    } else if (key == "p") {
      if (!value.is_array()) throw DomainError("chain config: 'p' must be an array");
      for (const auto& pv : value)
        config.pattern_ps.push_back(pv.is_string() ? pv.get<std::string>()
                                                   : nlohmann::to_string(pv));
    } else if (key == "t") {
      config.deformation_t = value.is_string() ? value.get<std::string>() : nlohmann::to_string(value);
    } else {
      throw DomainError("chain config: unknown key '" + key + "'");
    }
  }
  return config;
}

std::string chain_config_to_json(const ChainConfig& config) {
  nlohmann::json doc;
  if (!config.case_token.empty()) doc["case"] = config.case_token;
  if (!config.params.empty()) {
    nlohmann::json p;
    for (const auto& [k, v] : config.params) p[k] = v;
    doc["params"] = p;
  }
  if (config.lattice_n >= 0) doc["N"] = config.lattice_n;
  doc["trunc_tol"] = config.trunc_tol;
  doc["backend"] = config.backend;
  if (!config.pattern.empty()) {
    doc["pattern"] = config.pattern;
    doc["p"] = config.pattern_ps;
  }
  if (!config.deformation_t.empty()) doc["t"] = config.deformation_t;
  return doc.dump(2);
}

}  // namespace convchain
