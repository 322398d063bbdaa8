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

// Command-line front end: builds chains, dumps matrices and spectra, evolves
// and samples distributions, and runs the verification suites.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "convchain/chains.hpp"
#include "convchain/io.hpp"
#include "convchain/spectral.hpp"
#include "convchain/verify.hpp"

namespace cc = convchain;
using nlohmann::json;

namespace {

struct CommonOpts {
  std::string config_file;
  std::string case_token;
  std::vector<std::string> params;
  int N = -1;
  double trunc_tol = 1e-14;
  std::string backend;
  std::string pattern;
  std::vector<std::string> pattern_ps;
  std::string t;
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_pattern = true) {
  cmd->add_option("--config", o.config_file, "JSON chain configuration document");
  cmd->add_option("--case", o.case_token, "registered case token, e.g. K-i");
  cmd->add_option("--params", o.params, "parameters as k=v (rationals like 1/2 or decimals)")
      ->delimiter(',');
  cmd->add_option("--N", o.N, "finite lattice size");
  cmd->add_option("--trunc-tol", o.trunc_tol, "tail tolerance for semi-infinite cases");
  cmd->add_option("--backend", o.backend, "scalar backend: exact | float");
  if (with_pattern) {
    cmd->add_option("--pattern", o.pattern, "sign pattern for repeated convolutions, e.g. +-+");
    cmd->add_option("--p", o.pattern_ps, "pattern parameters p1,p2,...")->delimiter(',');
  }
  cmd->add_option("--t", o.t, "deformation parameter of the commuting family");
  cmd->add_option("--out", o.out, "write the artifact to this file instead of stdout");
}

/// Flags override values from the configuration document.
cc::ChainConfig merge_config(const CommonOpts& o) {
  cc::ChainConfig config;
  if (!o.config_file.empty()) {
    std::ifstream in(o.config_file);
    if (!in) throw cc::DomainError("cannot open config file '" + o.config_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    config = cc::parse_chain_config(buf.str());
  }
  if (!o.case_token.empty()) config.case_token = o.case_token;
  for (const auto& kv : o.params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw cc::DomainError("parameter '" + kv + "' is not of the form k=v");
    config.params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  if (o.N >= 0) config.lattice_n = o.N;
  config.trunc_tol = o.trunc_tol;
  if (!o.backend.empty()) {
    if (o.backend != "exact" && o.backend != "float")
      throw cc::DomainError("backend must be 'exact' or 'float'");
    config.backend = o.backend;
  }
  if (!o.pattern.empty()) {
    config.pattern = o.pattern;
    config.pattern_ps = o.pattern_ps;
  }
  if (!o.t.empty()) config.deformation_t = o.t;
  return config;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw cc::DomainError("cannot open output file '" + out + "'");
    f << text;
  }
}

template <class T>
cc::CaseParams<T> typed_params(const cc::ChainConfig& config) {
  cc::CaseParams<T> out;
  for (const auto& [k, v] : config.params) out[k] = cc::parse_scalar<T>(v);
  return out;
}

template <class T>
std::vector<T> parse_distribution(const std::string& text, int points) {
  std::vector<T> p0(points, T(0));
  if (text.rfind("delta:", 0) == 0) {
    int at = std::stoi(text.substr(6));
    if (at < 0 || at >= points) throw cc::DomainError("delta point outside the lattice");
    p0[at] = T(1);
    return p0;
  }
  std::stringstream ss(text);
  std::string cell;
  int i = 0;
  while (std::getline(ss, cell, ',')) {
    if (i >= points) throw cc::DomainError("initial distribution longer than the lattice");
    p0[i++] = cc::parse_scalar<T>(cell);
  }
  if (i != points) throw cc::DomainError("initial distribution shorter than the lattice");
  return p0;
}

json family_json(const cc::FamilySpec<double>& fam) {
  json j;
  j["family"] = cc::family_token(cc::family_of(fam));
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, cc::KrawtchoukSpec<double>>) {
          j["params"]["p"] = cc::format_scalar(s.p);
          j["N"] = s.N;
        } else if constexpr (std::is_same_v<S, cc::CharlierSpec<double>>) {
          j["params"]["a"] = cc::format_scalar(s.a);
        } else if constexpr (std::is_same_v<S, cc::HahnSpec<double>>) {
          j["params"]["a"] = cc::format_scalar(s.a);
          j["params"]["b"] = cc::format_scalar(s.b);
          j["N"] = s.N;
        } else if constexpr (std::is_same_v<S, cc::MeixnerSpec<double>>) {
          j["params"]["a"] = cc::format_scalar(s.a);
          j["params"]["b"] = cc::format_scalar(s.b);
        } else if constexpr (std::is_same_v<S, cc::QHahnSpec<double>>) {
          j["params"]["a"] = cc::format_scalar(s.a);
          j["params"]["b"] = cc::format_scalar(s.b);
          j["params"]["q"] = cc::format_scalar(s.q);
          j["N"] = s.N;
        } else if constexpr (std::is_same_v<S, cc::QMeixnerSpec<double>> ||
                             std::is_same_v<S, cc::QMeixnerSecondSpec<double>>) {
          j["params"]["b"] = cc::format_scalar(s.b);
          j["params"]["c"] = cc::format_scalar(s.c);
          j["params"]["q"] = cc::format_scalar(s.q);
        } else {
          j["params"]["a"] = cc::format_scalar(s.a);
          j["params"]["b"] = cc::format_scalar(s.b);
          j["params"]["q"] = cc::format_scalar(s.q);
        }
      },
      fam);
  return j;
}

json family_json_exact(const cc::FamilySpec<cc::Rational>& fam) {
  json j;
  j["family"] = cc::family_token(cc::family_of(fam));
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, cc::KrawtchoukSpec<cc::Rational>>) {
          j["params"]["p"] = cc::format_scalar(s.p);
          j["N"] = s.N;
        } else if constexpr (std::is_same_v<S, cc::CharlierSpec<cc::Rational>>) {
          j["params"]["a"] = cc::format_scalar(s.a);
        } else if constexpr (std::is_same_v<S, cc::HahnSpec<cc::Rational>>) {
          j["params"]["a"] = cc::format_scalar(s.a);
          j["params"]["b"] = cc::format_scalar(s.b);
          j["N"] = s.N;
        } else if constexpr (std::is_same_v<S, cc::MeixnerSpec<cc::Rational>>) {
          j["params"]["a"] = cc::format_scalar(s.a);
          j["params"]["b"] = cc::format_scalar(s.b);
        } else if constexpr (std::is_same_v<S, cc::QHahnSpec<cc::Rational>>) {
          j["params"]["a"] = cc::format_scalar(s.a);
          j["params"]["b"] = cc::format_scalar(s.b);
          j["params"]["q"] = cc::format_scalar(s.q);
          j["N"] = s.N;
        } else if constexpr (std::is_same_v<S, cc::QMeixnerSpec<cc::Rational>> ||
                             std::is_same_v<S, cc::QMeixnerSecondSpec<cc::Rational>>) {
          j["params"]["b"] = cc::format_scalar(s.b);
          j["params"]["c"] = cc::format_scalar(s.c);
          j["params"]["q"] = cc::format_scalar(s.q);
        } else {
          j["params"]["a"] = cc::format_scalar(s.a);
          j["params"]["b"] = cc::format_scalar(s.b);
          j["params"]["q"] = cc::format_scalar(s.q);
        }
      },
      fam);
  return j;
}

struct BuiltChain {
  cc::CaseId id;
  bool finite = true;
  bool exact = true;
  std::optional<cc::TransitionMatrix<cc::Rational>> exact_matrix;
  std::optional<cc::TransitionMatrix<double>> float_matrix;
  int points = 0;
};

/// Resolves the config (incl. deformation) and builds the matrix on the
/// requested backend.
BuiltChain build_chain(const cc::ChainConfig& config) {
  if (config.case_token.empty()) throw cc::DomainError("no case selected");
  BuiltChain built;
  built.id = cc::case_from_token(config.case_token);
  built.finite = cc::case_is_finite(built.id);
  built.exact = config.backend == "exact";
  if (!built.finite && built.exact)
    throw cc::DomainError(
        "semi-infinite chains have transcendental normalizations; use --backend float");
  if (built.finite && config.lattice_n < 1)
    throw cc::DomainError("finite case needs --N >= 1");

  if (built.exact) {
    auto params = typed_params<cc::Rational>(config);
    if (!config.deformation_t.empty())
      params = cc::deform_params(built.id, params,
                                 cc::parse_scalar<cc::Rational>(config.deformation_t));
    built.exact_matrix = cc::build_finite(built.id, params, config.lattice_n);
    built.points = built.exact_matrix->K.size();
  } else {
    auto params = typed_params<double>(config);
    if (!config.deformation_t.empty())
      params = cc::deform_params(built.id, params,
                                 cc::parse_scalar<double>(config.deformation_t));
    if (built.finite)
      built.float_matrix = cc::build_finite(built.id, params, config.lattice_n);
    else
      built.float_matrix = cc::build_semi_infinite(built.id, params, config.trunc_tol);
    built.points = built.float_matrix->K.size();
  }
  return built;
}

int cmd_build(const CommonOpts& opts, bool dual) {
  cc::ChainConfig config = merge_config(opts);
  if (!config.pattern.empty()) {
    if (dual) throw cc::DomainError("dual of a sign-pattern chain is not a registered artifact");
    std::vector<cc::Rational> ps;
    for (const auto& s : config.pattern_ps) ps.push_back(cc::parse_scalar<cc::Rational>(s));
    auto multi = cc::build_multiple(cc::parse_pattern(config.pattern), ps, config.lattice_n);
    emit(cc::matrix_to_csv(multi.matrix.K), opts.out);
    return 0;
  }
  if (dual) {
    cc::CaseId id = cc::case_from_token(config.case_token);
    if (config.backend == "exact") {
      auto params = typed_params<cc::Rational>(config);
      emit(cc::matrix_to_csv(cc::build_dual(id, params, config.lattice_n).K), opts.out);
    } else {
      auto params = typed_params<double>(config);
      emit(cc::matrix_to_csv(cc::build_dual(id, params, config.lattice_n).K), opts.out);
    }
    return 0;
  }
  BuiltChain built = build_chain(config);
  if (built.exact)
    emit(cc::matrix_to_csv(built.exact_matrix->K), opts.out);
  else
    emit(cc::matrix_to_csv(built.float_matrix->K), opts.out);
  return 0;
}

int cmd_spectrum(const CommonOpts& opts) {
  cc::ChainConfig config = merge_config(opts);
  json doc;
  doc["case"] = config.case_token;
  for (const auto& [k, v] : config.params) doc["params"][k] = v;

  if (!config.pattern.empty()) {
    std::vector<cc::Rational> ps;
    for (const auto& s : config.pattern_ps) ps.push_back(cc::parse_scalar<cc::Rational>(s));
    auto multi = cc::build_multiple(cc::parse_pattern(config.pattern), ps, config.lattice_n);
    doc["case"] = multi.matrix.case_token;
    doc["lambda"] = {{"family", "krawtchouk"},
                     {"params", {{"p", cc::format_scalar(multi.stationary_p)}}},
                     {"N", config.lattice_n}};
    json kappas = json::array();
    for (int n = 0; n <= config.lattice_n; ++n)
      kappas.push_back(cc::format_scalar(cc::pow_int(multi.eigenvalue_base, n)));
    doc["kappa"] = kappas;
    doc["provenance"] = "closed-form";
    doc["checks"] = json::array();
    emit(doc.dump(2) + "\n", opts.out);
    return 0;
  }

  cc::CaseId id = cc::case_from_token(config.case_token);
  const bool finite = cc::case_is_finite(id);
  json checks = json::array();
  auto note = [&](const cc::CheckList& list) {
    for (const auto& r : list.results())
      checks.push_back({{"name", r.name}, {"passed", r.passed}});
  };

  if (config.backend == "exact") {
    auto params = typed_params<cc::Rational>(config);
    if (!finite)
      throw cc::DomainError(
          "semi-infinite chains have transcendental normalizations; use --backend float");
    const int N = config.lattice_n;
    doc["lambda"] = family_json_exact(cc::resolve_stationary(id, params, N));
    json kappas = json::array();
    for (int n = 0; n <= N; ++n)
      kappas.push_back(cc::format_scalar(cc::eigenvalue_closed(id, params, n)));
    doc["kappa"] = kappas;
    doc["provenance"] = "closed-form";
    note(cc::verify_stochastic_balance(id, params, N));
    note(cc::verify_eigen_routes(id, params, N));
  } else {
    auto params = typed_params<double>(config);
    json kappas = json::array();
    if (finite) {
      const int N = config.lattice_n;
      doc["lambda"] = family_json(cc::resolve_stationary(id, params, N));
      for (int n = 0; n <= N; ++n)
        kappas.push_back(cc::format_scalar(cc::eigenvalue_closed(id, params, n)));
    } else {
      doc["lambda"] = family_json(cc::resolve_stationary(id, params, -1));
      auto window = cc::semi_infinite_window(id, params, config.trunc_tol);
      doc["window"] = {{"extent", window.extent}, {"core", window.core}};
      for (int n = 0; n <= std::min(window.core, 64); ++n)
        kappas.push_back(cc::format_scalar(cc::eigenvalue_closed(id, params, n)));
      if (id == cc::CaseId::QMI || id == cc::CaseId::QMIII || id == cc::CaseId::QMIV) {
        json extra = json::array();
        for (int n = 0; n <= 10; ++n)
          extra.push_back(cc::format_scalar(cc::extra_eigenvalue(id, params, n)));
        doc["kappa_second_family"] = extra;
      }
      note(cc::verify_semi_infinite(id, params, config.trunc_tol, 8, 1e-12, 1e-10));
    }
    doc["kappa"] = kappas;
    doc["provenance"] = "closed-form";
  }
  doc["checks"] = checks;
  emit(doc.dump(2) + "\n", opts.out);
  return 0;
}

int cmd_evolve(const CommonOpts& opts, const std::string& p0_text, long steps) {
  cc::ChainConfig config = merge_config(opts);
  BuiltChain built = build_chain(config);
  if (built.exact) {
    auto p0 = parse_distribution<cc::Rational>(p0_text, built.points);
    emit(cc::vector_to_csv(cc::evolve_direct(built.exact_matrix->K, p0, steps)), opts.out);
  } else {
    auto p0 = parse_distribution<double>(p0_text, built.points);
    emit(cc::vector_to_csv(cc::evolve_direct(built.float_matrix->K, p0, steps)), opts.out);
  }
  return 0;
}

int cmd_sample(const CommonOpts& opts, const std::string& p0_text, long steps, long count,
               std::uint64_t seed) {
  cc::ChainConfig config = merge_config(opts);
  config.backend = "float";  // sampling is a float-backend operation
  BuiltChain built = build_chain(config);
  auto p0 = parse_distribution<double>(p0_text, built.points);
  emit(cc::vector_to_csv(cc::sample_paths(built.float_matrix->K, p0, steps, count, seed)),
       opts.out);
  return 0;
}

int cmd_bd(const std::string& family_name, const std::vector<std::string>& params_kv, int N,
           int m, const std::string& out) {
  cc::bd::BDFamily family;
  if (family_name == "krawtchouk")
    family = cc::bd::BDFamily::Krawtchouk;
  else if (family_name == "hahn")
    family = cc::bd::BDFamily::Hahn;
  else
    throw cc::DomainError("bd family must be 'krawtchouk' or 'hahn'");
  std::map<std::string, cc::Rational> params;
  for (const auto& kv : params_kv) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw cc::DomainError("parameter '" + kv + "' is not of the form k=v");
    params[kv.substr(0, eq)] = cc::parse_rational(kv.substr(eq + 1));
  }
  auto rates = cc::bd::bd_rates(family, params, N);
  auto L = cc::bd::build_generator(rates);
  auto w = cc::bd::tune_weights(L, m);
  auto K = cc::bd::build_banded_chain(L, m, w);

  json doc;
  doc["family"] = family_name;
  for (const auto& [k, v] : params) doc["params"][k] = cc::format_scalar(v);
  doc["N"] = N;
  doc["m"] = m;
  json weights = json::array();
  for (const auto& c : w.c) weights.push_back(cc::format_scalar(c));
  doc["c"] = weights;
  doc["t_S"] = cc::format_scalar(w.time_scale);
  json kappas = json::array();
  for (int n = 0; n <= N; ++n)
    kappas.push_back(cc::format_scalar(cc::bd::banded_eigenvalue(m, w, rates.eig[n])));
  doc["kappa"] = kappas;
  doc["matrix_csv"] = cc::matrix_to_csv(K);
  emit(doc.dump(2) + "\n", out);
  return 0;
}

int cmd_verify(const std::string& suite, int grid) {
  using cc::CaseId;
  int failures = 0;
  auto report = [&](const cc::CheckList& checks) {
    for (const auto& r : checks.results()) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (!r.passed && !r.detail.empty()) std::cout << "  [" << r.detail << "]";
      std::cout << "\n";
      if (!r.passed) ++failures;
    }
  };

  const bool do_chains = suite == "chains" || suite == "all";
  const bool do_identities = suite == "identities" || suite == "all";
  const bool do_bd = suite == "bd" || suite == "all";
  if (!do_chains && !do_identities && !do_bd)
    throw cc::DomainError("suite must be one of: chains, identities, bd, all");

  if (do_chains) {
    const std::vector<std::pair<CaseId, cc::CaseParams<cc::Rational>>> rows = {
        {CaseId::KI, {{"a", cc::rational(1, 2)}, {"b", cc::rational(1, 2)}}},
        {CaseId::KII, {{"a", cc::rational(1, 3)}, {"b", cc::rational(2, 5)}}},
        {CaseId::KIII, {{"a", cc::rational(1, 2)}, {"b", cc::rational(1, 3)}}},
        {CaseId::KIV,
         {{"a", cc::rational(1, 2)}, {"b", cc::rational(1, 2)}, {"c", cc::rational(1, 2)}}},
        {CaseId::KV,
         {{"a", cc::rational(3, 5)}, {"b", cc::rational(1, 2)}, {"c", cc::rational(1, 2)}}},
        {CaseId::HI, {{"a", cc::rational(1)}, {"b", cc::rational(1)}, {"c", cc::rational(1)}}},
        {CaseId::HII, {{"a", cc::rational(1)}, {"b", cc::rational(1)}, {"c", cc::rational(1)}}},
        {CaseId::HIII,
         {{"a", cc::rational(3, 2)}, {"b", cc::rational(1)}, {"c", cc::rational(1, 2)}}},
        {CaseId::HIV,
         {{"a1", cc::rational(1)}, {"b1", cc::rational(1)}, {"a2", cc::rational(1)},
          {"b2", cc::rational(1)}}},
        {CaseId::QHI,
         {{"a", cc::rational(1, 2)}, {"b", cc::rational(1, 2)}, {"c", cc::rational(1, 2)},
          {"q", cc::rational(1, 2)}}},
        {CaseId::QHIII,
         {{"a", cc::rational(1, 3)}, {"b", cc::rational(1, 2)}, {"c", cc::rational(2, 5)},
          {"q", cc::rational(1, 2)}}},
        {CaseId::QHIV,
         {{"a1", cc::rational(1, 2)}, {"b1", cc::rational(1, 2)}, {"a2", cc::rational(1, 2)},
          {"b2", cc::rational(1, 2)}, {"q", cc::rational(1, 2)}}},
    };
    for (const auto& [id, params] : rows)
      for (int N = 1; N <= grid; ++N) {
        report(cc::verify_stochastic_balance(id, params, N));
        report(cc::verify_eigen_routes(id, params, N));
        report(cc::verify_det_identity(id, params, N));
      }
  }
  if (do_identities) {
    for (cc::SelfSimId id : cc::selfsim_all<cc::Rational>()) {
      const auto& ident = cc::selfsim_identity<cc::Rational>(id);
      std::map<std::string, cc::Rational> params;
      for (const auto& name : ident.param_names) params[name] = cc::rational(1, 2);
      if (ident.needs_q) params["q"] = cc::rational(1, 2);
      auto rep = cc::verify_identity<cc::Rational>(id, params, grid);
      std::cout << (rep.exact() ? "PASS " : "FAIL ") << "identity " << rep.id << " ("
                << rep.points_checked << " points)\n";
      if (!rep.exact()) ++failures;
    }
  }
  if (do_bd) {
    report(cc::verify_bd<cc::Rational>(cc::bd::BDFamily::Krawtchouk,
                                       {{"p", cc::rational(2, 5)}}, grid, 3));
    report(cc::verify_bd<cc::Rational>(cc::bd::BDFamily::Hahn,
                                       {{"a", cc::rational(1)}, {"b", cc::rational(2)}}, grid,
                                       3));
  }
  std::cout << (failures == 0 ? "ALL CHECKS PASSED\n"
                              : std::to_string(failures) + " CHECKS FAILED\n");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exactly solvable Markov chains from convolutions of orthogonality measures"};
  app.require_subcommand(1);

  CommonOpts build_opts, spectrum_opts, evolve_opts, sample_opts, dual_opts;
  std::string p0_text = "delta:0";
  long steps = 1, count = 100000;
  std::uint64_t seed = 1;
  std::string suite = "all";
  int grid = 6;
  std::string bd_family;
  std::vector<std::string> bd_params;
  int bd_n = 8, bd_m = 2;
  std::string bd_out;

  auto* build = app.add_subcommand("build", "build a transition matrix and dump it as CSV");
  add_common(build, build_opts);

  auto* spectrum = app.add_subcommand("spectrum", "emit the spectrum document as JSON");
  add_common(spectrum, spectrum_opts);

  auto* evolve = app.add_subcommand("evolve", "evolve an initial distribution l steps");
  add_common(evolve, evolve_opts);
  evolve->add_option("--p0", p0_text, "initial distribution: delta:k or comma list");
  evolve->add_option("--l", steps, "number of steps");

  auto* sample = app.add_subcommand("sample", "Monte Carlo trajectories (float backend)");
  add_common(sample, sample_opts);
  sample->add_option("--p0", p0_text, "initial distribution: delta:k or comma list");
  sample->add_option("--l", steps, "number of steps");
  sample->add_option("--count", count, "number of trajectories");
  sample->add_option("--seed", seed, "deterministic seed");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "chains | identities | bd | all");
  verify->add_option("--grid", grid, "lattice bound / grid size");

  auto* dual = app.add_subcommand("dual", "build the index-reversed chain");
  add_common(dual, dual_opts, /*with_pattern=*/false);

  auto* bdcmd = app.add_subcommand("bd", "banded birth-death chain from generator powers");
  bdcmd->add_option("--family", bd_family, "krawtchouk | hahn")->required();
  bdcmd->add_option("--params", bd_params, "rates parameters k=v")->delimiter(',');
  bdcmd->add_option("--N", bd_n, "lattice size");
  bdcmd->add_option("--m", bd_m, "band width");
  bdcmd->add_option("--out", bd_out, "output file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return cmd_build(build_opts, false);
    if (spectrum->parsed()) return cmd_spectrum(spectrum_opts);
    if (evolve->parsed()) return cmd_evolve(evolve_opts, p0_text, steps);
    if (sample->parsed()) return cmd_sample(sample_opts, p0_text, steps, count, seed);
    if (verify->parsed()) return cmd_verify(suite, grid);
    if (dual->parsed()) return cmd_build(dual_opts, true);
    if (bdcmd->parsed()) return cmd_bd(bd_family, bd_params, bd_n, bd_m, bd_out);
  } catch (const cc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
