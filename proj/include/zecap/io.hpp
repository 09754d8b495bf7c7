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

// JSON and DIMACS formats, graph-spec parsing, 12-significant-digit output.

#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zecap/certificates.hpp"
#include "zecap/error.hpp"
#include "zecap/graph.hpp"
#include "zecap/numerics.hpp"
#include "zecap/spectra.hpp"

namespace zecap {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits; -0 becomes 0.
inline double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

inline Json to_json_number(double v) {
  if (!std::isfinite(v)) return v > 0 ? "inf" : v < 0 ? "-inf" : "nan";
  return round12(v);
}

inline Json vector_json(const RealVector& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(to_json_number(x));
  return out;
}

inline Json complex_json(Complex z) { return Json::array({to_json_number(z.real()), to_json_number(z.imag())}); }

inline Json complex_vector_json(const ComplexVector& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(complex_json(z));
  return out;
}

/// Rows of [re, im] pairs.
inline Json matrix_json(const ComplexMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

inline Json matrix_json(const RealMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json_number(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graphs

inline Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [i, j] : g.edges()) edges.push_back({i, j});
  return Json{{"n", g.order()}, {"edges", std::move(edges)}, {"label", g.label()}};
}

inline Graph graph_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(Errc::InvalidInput, "graph JSON: edges must be pairs");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, edges, j.value("label", std::string{}));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidInput, std::string("graph JSON: ") + e.what());
  }
}

inline std::string write_dimacs(const Graph& g) {
  std::ostringstream os;
  if (!g.label().empty()) os << "c " << g.label() << '\n';
  os << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [i, j] : g.edges()) os << "e " << i + 1 << ' ' << j + 1 << '\n';
  return os.str();
}

inline Graph read_dimacs(std::istream& in, std::string label = {}) {
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      std::size_t m = 0;
      if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "col") || n < 0)
        throw Error(Errc::InvalidInput, "DIMACS line " + std::to_string(lineno) + ": bad problem line");
    } else if (tag == "e") {
      int a = 0, b = 0;
      if (n < 0 || !(ls >> a >> b) || a < 1 || b < 1 || a > n || b > n)
        throw Error(Errc::InvalidInput, "DIMACS line " + std::to_string(lineno) + ": bad edge");
      if (a != b) edges.emplace_back(a - 1, b - 1);
    } else {
      throw Error(Errc::InvalidInput, "DIMACS line " + std::to_string(lineno) + ": unknown tag '" + tag + "'");
    }
  }
  if (n < 0) throw Error(Errc::InvalidInput, "DIMACS: missing problem line");
  return Graph(n, edges, std::move(label));
}

namespace detail {

inline std::optional<long long> parse_int(std::string_view s) {
  long long v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return v;
}

inline long long require_int(std::string_view s, const std::string& spec) {
  const auto v = parse_int(s);
  if (!v) throw Error(Errc::InvalidInput, "graph spec '" + spec + "': '" + std::string(s) + "' is not an integer");
  return *v;
}

inline std::vector<Int> parse_int_list(std::string_view s, const std::string& spec) {
  std::vector<Int> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const auto piece = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (!piece.empty()) out.push_back(require_int(piece, spec));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInput, "cannot open graph file '" + path + "'");
  const bool dimacs = path.size() > 4 && (path.ends_with(".col") || path.ends_with(".dimacs"));
  if (dimacs) return read_dimacs(in, "file:" + path);
  try {
    return graph_from_json(Json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidInput, "graph file '" + path + "': " + e.what());
  }
}

}  // namespace detail

/// cycle:n | circulant:n:c1,c2,... | paley:p | cubic:p | mobius:n |
/// complete:n | empty:n | product:f1:f2 | file:path
inline Graph parse_graph_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw Error(Errc::InvalidInput, "graph spec '" + spec + "' lacks a family prefix");
  const std::string family = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (family == "file") return detail::read_graph_file(rest);
  if (family == "product") {
    // Try every split point so nested specs with their own colons work.
    for (std::size_t p = rest.find(':'); p != std::string::npos; p = rest.find(':', p + 1)) {
      try {
        Graph left = parse_graph_spec(rest.substr(0, p));
        Graph right = parse_graph_spec(rest.substr(p + 1));
        return strong_product(left, right).relabeled("product:" + rest);
      } catch (const Error&) {
      }
    }
    throw Error(Errc::InvalidInput, "graph spec '" + spec + "': cannot split into two factor specs");
  }
  if (family == "circulant") {
    const auto c2 = rest.find(':');
    if (c2 == std::string::npos) throw Error(Errc::InvalidInput, "graph spec '" + spec + "': expected circulant:n:C");
    const Int n = detail::require_int(rest.substr(0, c2), spec);
    return circulant(n, detail::parse_int_list(std::string_view(rest).substr(c2 + 1), spec), spec);
  }
  const long long v = detail::require_int(rest, spec);
  if (v < 0 || v > 100000) throw Error(Errc::InvalidInput, "graph spec '" + spec + "': size out of range");
  const int n = static_cast<int>(v);
  if (family == "cycle") return cycle_graph(n);
  if (family == "paley") return paley(n);
  if (family == "cubic") return cubic_residue_graph(n);
  if (family == "mobius") return mobius_ladder(n);
  if (family == "complete") return complete_graph(n);
  if (family == "empty") return empty_graph(n);
  throw Error(Errc::InvalidInput, "graph spec '" + spec + "': unknown family '" + family + "'");
}

// ---------------------------------------------------------------------------
// Representations and certificates

inline Json rep_to_json(const OrthonormalRep& rep) {
  Json vectors = Json::array();
  for (const auto& u : rep.vectors) vectors.push_back(complex_vector_json(u));
  return Json{{"d", rep.dim()}, {"handle", complex_vector_json(rep.handle)}, {"vectors", std::move(vectors)},
              {"eta", to_json_number(rep.eta)}};
}

inline Json primal_report_json(const PrimalReport& r) {
  return Json{{"value", to_json_number(r.value)},
              {"nonnegativity", to_json_number(r.nonnegativity)},
              {"r_psd", to_json_number(r.r_psd)},
              {"bound_psd", to_json_number(r.bound_psd)},
              {"sum_identity", to_json_number(r.sum_identity)},
              {"ok", r.ok()}};
}

inline Json dual_report_json(const DualReport& r) {
  return Json{{"value", to_json_number(r.value)},
              {"constraint_deficit", to_json_number(r.constraint_deficit)},
              {"q_psd", to_json_number(r.q_psd)},
              {"qt_psd", to_json_number(r.qt_psd)},
              {"ok", r.ok()}};
}

inline Json certificate_to_json(const UpsilonCertificate& cert, bool include_matrices = true) {
  Json out;
  out["graph"] = cert.graph;
  out["route"] = cert.route;
  out["theta"] = to_json_number(cert.theta);
  out["s"] = vector_json(cert.primal.s);
  if (include_matrices) {
    Json r = Json::array();
    for (const auto& m : cert.primal.r) r.push_back(matrix_json(m.matrix()));
    out["R"] = std::move(r);
    out["dual_T"] = matrix_json(cert.dual.t.matrix());
  }
  if (!cert.x.empty()) out["x"] = vector_json(cert.x);
  out["residuals"] = Json{{"tol", to_json_number(cert.tol)},
                          {"primal", primal_report_json(cert.primal_report)},
                          {"dual", dual_report_json(cert.dual_report)},
                          {"max_slackness", to_json_number(cert.max_slackness())}};
  out["verdict"] = verdict_name(cert.verdict);
  return out;
}

inline Json capacity_report_to_json(const CapacityReport& r) {
  Json out{{"graph", r.graph},
           {"route", r.route},
           {"alpha", r.alpha},
           {"alpha_exact", r.alpha_exact},
           {"theta", to_json_number(r.theta)},
           {"upsilon_interval", {to_json_number(r.upsilon_lower), to_json_number(r.upsilon_upper)}},
           {"certified", r.certified},
           {"log_base", 2},
           {"trivial_bounds", {to_json_number(r.trivial_lower), to_json_number(r.trivial_upper)}}};
  out["one_shot"] = r.one_shot ? to_json_number(*r.one_shot) : Json(nullptr);
  out["asymptotic"] = r.asymptotic ? to_json_number(*r.asymptotic) : Json(nullptr);
  if (r.note) out["note"] = *r.note;
  return out;
}

/// Writes text to `path`, or to stdout when path is empty or "-".
inline void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(Errc::InvalidInput, "cannot write '" + path + "'");
  out << text;
}

}  // namespace zecap
