// Copyright 2026 The zecap Authors
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

// zecap command-line tool.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zecap/zecap.hpp"

namespace {

using zecap::Errc;
using zecap::Json;

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kBudget = 3, kInvalid = 4, kPrecondition = 5 };

int exit_code(Errc code) {
  switch (code) {
    case Errc::InvalidInput:
    case Errc::InvalidParameter:
    case Errc::AsymmetricConnectionSet:
    case Errc::InvalidPrime:
    case Errc::NotAUnit:
      return kUsage;
    case Errc::BudgetExceeded:
    case Errc::IterationLimit:
      return kBudget;
    case Errc::CertificateInvalid:
      return kInvalid;
    case Errc::PreconditionFailed:
    case Errc::NotEdgeTransitive:
    case Errc::BetaNotFound:
      return kPrecondition;
    default:
      return kFailure;
  }
}

struct RunConfig {
  double tol = 1e-9;
  double gap_tol = 1e-6;
  int max_iter = 200;
  std::uint64_t budget = 10'000'000;
  std::uint64_t seed = 0;
  std::string format = "table";
  std::string out;
  std::string config;

  zecap::ThetaSettings theta() const {
    zecap::ThetaSettings s;
    s.gap_tol = gap_tol;
    s.max_iter = max_iter;
    s.seed = seed;
    return s;
  }
};

// Values from --config fill in whatever was not given on the command line.
void apply_config(RunConfig& cfg, const CLI::App& app) {
  if (cfg.config.empty()) return;
  std::ifstream in(cfg.config);
  if (!in) throw zecap::Error(Errc::InvalidInput, "cannot read config '" + cfg.config + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw zecap::Error(Errc::InvalidInput, std::string("config: ") + e.what());
  }
  auto given = [&](const char* flag) { return app.count(flag) > 0; };
  if (j.contains("tol") && !given("--tol")) cfg.tol = j["tol"].get<double>();
  if (j.contains("gap_tol") && !given("--gap-tol")) cfg.gap_tol = j["gap_tol"].get<double>();
  if (j.contains("max_iter") && !given("--max-iter")) cfg.max_iter = j["max_iter"].get<int>();
  if (j.contains("budget") && !given("--budget")) cfg.budget = j["budget"].get<std::uint64_t>();
  if (j.contains("seed") && !given("--seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("format") && !given("--format")) cfg.format = j["format"].get<std::string>();
}

void validate(const RunConfig& cfg) {
  if (!(cfg.tol > 0) || !(cfg.gap_tol > 0)) throw zecap::Error(Errc::InvalidInput, "tolerances must be positive");
  if (cfg.max_iter < 1) throw zecap::Error(Errc::InvalidInput, "--max-iter must be >= 1");
  if (cfg.format != "json" && cfg.format != "table") throw zecap::Error(Errc::InvalidInput, "--format is json or table");
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Table output: one "key  value" line per top-level field.
std::string table_text(const Json& j) {
  std::size_t width = 0;
  for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
  std::ostringstream os;
  for (auto it = j.begin(); it != j.end(); ++it) {
    os << it.key() << std::string(width + 2 - it.key().size(), ' ') << scalar_text(it.value()) << "\n";
  }
  return os.str();
}

void emit(const RunConfig& cfg, const Json& j) {
  if (cfg.format == "json") {
    zecap::write_text(cfg.out, j.dump(2) + "\n");
  } else {
    zecap::write_text(cfg.out, table_text(j));
  }
}

Json tolerance_json(const RunConfig& cfg) {
  return Json{{"tol", zecap::to_json_number(cfg.tol)},
              {"gap_tol", zecap::to_json_number(cfg.gap_tol)},
              {"max_iter", cfg.max_iter},
              {"seed", cfg.seed}};
}

// -- commands ----------------------------------------------------------------

int cmd_graph(const RunConfig& cfg, const std::string& spec, const std::string& dimacs) {
  const auto g = zecap::parse_graph_spec(spec);
  if (!dimacs.empty()) zecap::write_text(dimacs, zecap::write_dimacs(g));
  Json j{{"graph", g.label()}, {"n", g.order()}, {"edges", g.edge_count()}};
  const auto reg = g.regularity();
  j["regularity"] = reg ? Json(*reg) : Json("irregular");
  if (cfg.format == "json" && !cfg.out.empty()) {
    zecap::write_text(cfg.out, zecap::graph_to_json(g).dump(2) + "\n");
    std::cout << table_text(j);
    return kOk;
  }
  if (cfg.format == "json") j["adjacency"] = zecap::graph_to_json(g);
  emit(cfg, j);
  return kOk;
}

int cmd_theta(const RunConfig& cfg, const std::string& spec, bool formula, bool assume_et) {
  const auto g = zecap::parse_graph_spec(spec);
  Json j{{"graph", g.label()}, {"n", g.order()}};
  if (formula) {
    const auto c = zecap::circulant_connection_set(g);
    if (!c) throw zecap::Error(Errc::PreconditionFailed, "--formula needs a circulant graph");
    const double v = zecap::theta_formula_edge_transitive(*c, assume_et);
    j["method"] = "edge-transitive formula";
    j["theta_lower"] = zecap::to_json_number(v);
    j["theta_upper"] = zecap::to_json_number(v);
  } else {
    const auto th = zecap::solve_theta(g, cfg.theta());
    j["method"] = "sdp";
    j["theta_lower"] = zecap::to_json_number(th.theta_lower);
    j["theta_upper"] = zecap::to_json_number(th.theta_upper);
    j["gap"] = zecap::to_json_number(th.gap());
    j["iterations"] = th.iterations;
  }
  j["tolerance"] = tolerance_json(cfg);
  emit(cfg, j);
  return kOk;
}

int cmd_alpha(const RunConfig& cfg, const std::string& spec, const std::vector<int>& witness, bool check_witness) {
  const auto g = zecap::parse_graph_spec(spec);
  Json j{{"graph", g.label()}, {"n", g.order()}};
  if (check_witness) {
    for (int v : witness)
      if (v < 0 || v >= g.order()) throw zecap::Error(Errc::InvalidInput, "witness vertex out of range");
    const bool ok = zecap::is_independent_set(g, witness);
    j["witness"] = witness;
    j["witness_independent"] = ok;
  }
  const auto r = zecap::independence_number(g, cfg.budget, check_witness ? witness : std::vector<int>{});
  j["alpha"] = r.alpha;
  j["status"] = r.exact ? "exact" : "bound";
  j["witness_found"] = r.witness;
  j["nodes"] = r.nodes;
  j["budget"] = cfg.budget;
  j["tolerance"] = tolerance_json(cfg);
  emit(cfg, j);
  if (check_witness && !j["witness_independent"].get<bool>()) return kFailure;
  return kOk;
}

int finish_certificate(const RunConfig& cfg, const zecap::UpsilonCertificate& cert, Json extra) {
  Json j = zecap::certificate_to_json(cert, cfg.format == "json");
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  j["tolerance"] = tolerance_json(cfg);
  emit(cfg, j);
  if (cfg.format == "table" || !cfg.out.empty())
    std::cerr << "verdict " << zecap::verdict_name(cert.verdict) << " value " << zecap::round12(cert.lower()) << "\n";
  return cert.verdict == zecap::Verdict::Optimal ? kOk : kInvalid;
}

int cmd_certify(const RunConfig& cfg, const std::vector<std::string>& args, bool assume_et) {
  if (args.empty()) throw zecap::Error(Errc::InvalidInput, "certify: expected theorem2 n q | paley p | handle-system spec");
  const std::string& route = args[0];
  auto arg_int = [&](std::size_t i) {
    if (i >= args.size()) throw zecap::Error(Errc::InvalidInput, "certify " + route + ": missing argument");
    return zecap::detail::require_int(args[i], route);
  };
  if (route == "theorem2") {
    if (args.size() != 3) throw zecap::Error(Errc::InvalidInput, "certify theorem2 n q");
    const auto cert = zecap::theorem2_build(arg_int(1), arg_int(2), assume_et, cfg.tol);
    const auto d = zecap::theorem2_dmatrix_checks(cert);
    Json extra{{"beta", cert.beta},
               {"d_checks",
                {{"closed_form", zecap::to_json_number(d.closed_form)},
                 {"eigenvector", zecap::to_json_number(d.eigenvector)},
                 {"row_sum", zecap::to_json_number(d.row_sum)},
                 {"lambda_max", zecap::to_json_number(d.lambda_max)},
                 {"ok", d.ok()}}}};
    return finish_certificate(cfg, cert, extra);
  }
  if (route == "paley") {
    if (args.size() != 2) throw zecap::Error(Errc::InvalidInput, "certify paley p");
    const auto cert = zecap::paley_certificate(arg_int(1), cfg.tol);
    Json extra{{"paley_checks",
                {{"entry_table", zecap::to_json_number(cert.checks.entry_table)},
                 {"row_sum", zecap::to_json_number(cert.checks.row_sum)},
                 {"null_space", zecap::to_json_number(cert.checks.null_space)}}}};
    return finish_certificate(cfg, cert, extra);
  }
  if (route == "handle-system") {
    if (args.size() != 2) throw zecap::Error(Errc::InvalidInput, "certify handle-system <graph spec>");
    zecap::HandleSystemOptions opt;
    opt.verify_tol = std::max(cfg.tol, 1e-8);
    const auto cert = zecap::handle_system_for_graph(zecap::parse_graph_spec(args[1]), cfg.theta(), opt);
    Json extra{{"system_residual", zecap::to_json_number(cert.system_residual)}, {"classes", cert.classes}};
    if (cfg.format == "table") extra["x"] = zecap::vector_json(cert.x);
    return finish_certificate(cfg, cert, extra);
  }
  throw zecap::Error(Errc::InvalidInput, "certify: unknown route '" + route + "'");
}

int cmd_capacity(const RunConfig& cfg, const std::string& spec, const std::string& route) {
  using zecap::Construction;
  Construction c = Construction::Auto;
  if (route == "theorem2") c = Construction::Theorem2;
  else if (route == "paley") c = Construction::Paley;
  else if (route == "handle-system") c = Construction::HandleSystem;
  else if (route == "none") c = Construction::None;
  else if (route != "auto") throw zecap::Error(Errc::InvalidInput, "capacity: unknown route '" + route + "'");
  const auto r = zecap::capacity_report(zecap::parse_graph_spec(spec), c, cfg.theta(), cfg.budget);
  Json j = zecap::capacity_report_to_json(r);
  j["tolerance"] = tolerance_json(cfg);
  emit(cfg, j);
  return kOk;
}

int cmd_reproduce(const RunConfig& cfg, const std::vector<std::string>& only, bool json) {
  zecap::ReproduceOptions opt;
  if (cfg.seed != 0) opt.seed = cfg.seed;
  opt.alpha_budget = std::max<std::uint64_t>(cfg.budget, opt.alpha_budget);
  const auto keys = zecap::reproduction_keys();
  for (const auto& o : only) {
    const bool numeric = !o.empty() && o.find_first_not_of("0123456789") == std::string::npos;
    if (!numeric && std::find(keys.begin(), keys.end(), o) == keys.end())
      throw zecap::Error(Errc::InvalidInput, "--only: unknown key '" + o + "'");
  }
  const auto results = zecap::run_reproduction(only, opt);
  if (results.empty()) throw zecap::Error(Errc::InvalidInput, "--only matched no criteria");
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (json || cfg.format == "json") {
    zecap::write_text(cfg.out, zecap::reproduction_to_json(results).dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (const auto& r : results) {
      char line[160];
      std::snprintf(line, sizeof line, "%2d  %-4s  %-14s %s  (%.2fs)\n", r.id, r.passed ? "PASS" : "FAIL", r.key.c_str(),
                    r.title.c_str(), r.seconds);
      os << line;
      for (const auto& d : r.details) os << "      " << d << "\n";
    }
    os << (all ? "all criteria passed\n" : "FAILURES present\n");
    zecap::write_text(cfg.out, os.str());
  }
  return all ? kOk : kFailure;
}

int cmd_search_cosets(const RunConfig& cfg, zecap::Int max_n) {
  if (max_n < 3 || max_n > 5000) throw zecap::Error(Errc::InvalidInput, "--max-n must lie in [3, 5000]");
  const auto hits = zecap::search_nontrivial_composite_cosets(max_n);
  Json list = Json::array();
  for (const auto& [n, q] : hits) list.push_back(Json::array({n, q}));
  Json j{{"max_n", max_n},
         {"scope", "odd n with at least two distinct prime factors, units q of order > 2"},
         {"hits", hits.size()},
         {"pairs", std::move(list)}};
  emit(cfg, j);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zecap: Lovasz theta, the non-signalling one-shot value and its optimality certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--tol", cfg.tol, "verification tolerance");
  app.add_option("--gap-tol", cfg.gap_tol, "SDP duality-gap tolerance");
  app.add_option("--max-iter", cfg.max_iter, "SDP iteration cap");
  app.add_option("--budget", cfg.budget, "search node budget");
  app.add_option("--seed", cfg.seed, "start-point perturbation seed (0 = deterministic)");
  app.add_option("--format", cfg.format, "json | table");
  app.add_option("--out", cfg.out, "output path (default stdout)");
  app.add_option("--config", cfg.config, "JSON file with tol, gap_tol, max_iter, budget, seed, format");

  std::string spec, dimacs, route = "auto";
  bool formula = false, assume_et = false, check_witness = false, json = false;
  std::vector<int> witness;
  std::vector<std::string> certify_args, only;
  zecap::Int max_n = 200;

  auto* graph = app.add_subcommand("graph", "build a graph from a spec");
  graph->add_option("spec", spec, "cycle:n | circulant:n:C | paley:p | cubic:p | mobius:n | product:f1:f2 | file:path")
      ->required();
  graph->add_option("--dimacs", dimacs, "also write DIMACS to this path");

  auto* theta = app.add_subcommand("theta", "Lovasz theta");
  theta->add_option("spec", spec)->required();
  theta->add_flag("--formula", formula, "edge-transitive circulant closed form");
  theta->add_flag("--assume-edge-transitive", assume_et, "skip the automorphism search (n > 24)");

  auto* alpha = app.add_subcommand("alpha", "independence number");
  alpha->add_option("spec", spec)->required();
  alpha->add_option("--witness", witness, "vertices of a candidate independent set")->delimiter(',');
  alpha->add_flag("--check-witness", check_witness, "verify --witness and use it as the starting bound");

  auto* certify = app.add_subcommand("certify", "build and verify an optimality certificate");
  certify->add_option("args", certify_args, "theorem2 n q | paley p | handle-system spec")->required();
  certify->add_flag("--assume-edge-transitive", assume_et, "skip the automorphism search (n > 24)");

  auto* capacity = app.add_subcommand("capacity", "alpha, theta and the certified one-shot value");
  capacity->add_option("spec", spec)->required();
  capacity->add_option("--route", route, "auto | theorem2 | paley | handle-system | none");

  auto* reproduce = app.add_subcommand("reproduce", "run the reproduction suite");
  reproduce->add_option("--only", only, "criterion ids, keys or tags")->delimiter(',');
  reproduce->add_flag("--json", json, "machine-readable output");

  auto* search = app.add_subcommand("search-cosets", "look for composite n with nontrivial equal-sized symmetric cosets");
  search->add_option("--max-n", max_n, "largest n to scan");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    apply_config(cfg, app);
    validate(cfg);
    if (*graph) return cmd_graph(cfg, spec, dimacs);
    if (*theta) return cmd_theta(cfg, spec, formula, assume_et);
    if (*alpha) return cmd_alpha(cfg, spec, witness, check_witness);
    if (*certify) return cmd_certify(cfg, certify_args, assume_et);
    if (*capacity) return cmd_capacity(cfg, spec, route);
    if (*reproduce) return cmd_reproduce(cfg, only, json);
    if (*search) return cmd_search_cosets(cfg, max_n);
  } catch (const zecap::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
