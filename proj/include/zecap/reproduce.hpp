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

// The reproduction suite: twelve numbered checks of reference values and
// constructions, each at its own tolerance.

#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "zecap/certificates.hpp"
#include "zecap/graph.hpp"
#include "zecap/io.hpp"
#include "zecap/nonsignalling.hpp"
#include "zecap/numerics.hpp"
#include "zecap/numtheory.hpp"
#include "zecap/spectra.hpp"
#include "zecap/theta.hpp"
#include "zecap/upsilon.hpp"

namespace zecap {

struct ReproduceOptions {
  std::uint64_t seed = 20240601;
  int property_cases = 1000;
  int random_connection_sets = 50;
  std::uint64_t alpha_budget = 20'000'000;
};

struct CriterionResult {
  int id = 0;
  std::string key;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;
  double seconds = 0.0;
};

namespace repro {

class Recorder {
 public:
  explicit Recorder(CriterionResult& r) : r_(r) {}

  /// Records |measured - expected| <= tol.
  bool near(const std::string& what, double measured, double expected, double tol) {
    const double err = std::abs(measured - expected);
    const bool ok = err <= tol;
    std::ostringstream os;
    os.precision(12);
    os << what << ": " << measured << " vs " << expected << " (err " << std::scientific << std::setprecision(2) << err
       << ", tol " << tol << ")";
    return add(ok, os.str());
  }

  bool below(const std::string& what, double measured, double tol) {
    std::ostringstream os;
    os << what << ": " << std::scientific << std::setprecision(2) << measured << " <= " << tol;
    return add(measured <= tol, os.str());
  }

  bool check(const std::string& what, bool ok) { return add(ok, what); }

  bool all() const { return failures_ == 0; }

 private:
  bool add(bool ok, const std::string& text) {
    r_.details.push_back(std::string(ok ? "ok   " : "FAIL ") + text);
    if (!ok) ++failures_;
    return ok;
  }

  CriterionResult& r_;
  int failures_ = 0;
};

inline std::string set_text(const std::vector<Int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

inline std::vector<Int> sorted(std::vector<Int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// Random symmetric nonempty connection set mod n.
inline ConnectionSet random_connection_set(std::mt19937_64& rng, int n) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Int> c;
  for (int j = 1; j <= n / 2; ++j)
    if (coin(rng)) {
      c.push_back(j);
      if (n - j != j) c.push_back(n - j);
    }
  if (c.empty()) {
    c.push_back(1);
    if (n > 2) c.push_back(n - 1);
  }
  return ConnectionSet(n, c);
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  return Graph::from_predicate(n, [&](int, int) { return coin(rng); });
}

// -- 1 ---------------------------------------------------------------------
inline void theta_c7(Recorder& rec, const ReproduceOptions&) {
  const auto th = solve_theta(cycle_graph(7));
  const auto rep = theorem1_representation(7, {1, 6});
  rec.near("theta(C7) by SDP vs reference 3.317", th.theta(), 3.317, 1e-3);
  rec.near("eta of the circulant rep of C7 vs reference 3.317", rep.eta, 3.317, 1e-3);
  rec.near("SDP vs eta", th.theta(), rep.eta, 1e-6);
}

// -- 2 ---------------------------------------------------------------------
inline void cycles(Recorder& rec, const ReproduceOptions&) {
  for (int n : {5, 7, 9, 11, 13, 15}) {
    const auto th = solve_theta(cycle_graph(n));
    rec.near("theta(C" + std::to_string(n) + ") vs n cos(pi/n)/(1+cos(pi/n))", th.theta(), cycle_theta(n), 1e-5);
  }
}

// -- 3 ---------------------------------------------------------------------
inline void paley_values(Recorder& rec, const ReproduceOptions&) {
  for (Int p : {5, 13, 17}) {
    const std::string tag = "QR_" + std::to_string(p);
    const double sp = std::sqrt(static_cast<double>(p));
    const auto res = residues(p);
    rec.near("theta(" + tag + ") by SDP vs sqrt p", solve_theta(paley(p)).theta(), sp, 1e-5);
    rec.near("theta(" + tag + ") by formula vs sqrt p",
             theta_formula_edge_transitive(ConnectionSet(p, {res.quadratic_residues.begin(), res.quadratic_residues.end()})), sp,
             1e-5);
    const auto cert = paley_certificate(p);
    rec.check(tag + " certificate verdict " + verdict_name(cert.verdict), cert.verdict == Verdict::Optimal);
    rec.near(tag + " certified lower bound vs sqrt p", cert.lower(), sp, 1e-6);
    rec.near(tag + " certified upper bound vs sqrt p", cert.upper(), sp, 1e-6);
    rec.below(tag + " entry table residual", cert.checks.entry_table, 1e-9);
    rec.below(tag + " row-sum residual", cert.checks.row_sum, 1e-9);
    rec.below(tag + " null-space residual", cert.checks.null_space, 1e-8);
  }
}

// -- 4 ---------------------------------------------------------------------
inline void theorem2(Recorder& rec, const ReproduceOptions&) {
  for (auto [n, q] : std::vector<std::pair<Int, Int>>{{5, 4}, {7, 6}, {13, 5}, {17, 13}}) {
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(q) + ")";
    const auto cert = theorem2_build(n, q);
    const auto th = solve_theta(circulant(n, cert.partition.coset_of(1)));
    rec.check(tag + " primal and dual verified", cert.primal_report.ok() && cert.dual_report.ok());
    rec.near(tag + " certified value vs theta by SDP", cert.lower(), th.theta(), 1e-6);
    rec.near(tag + " dual value vs primal value", cert.upper(), cert.lower(), 1e-9);
    const auto d = theorem2_dmatrix_checks(cert);
    rec.below(tag + " D closed-form entries", std::max(d.closed_form, d.negativity), 1e-9);
    rec.below(tag + " D u_0 = u_0", d.eigenvector, 1e-9);
    rec.below(tag + " row sums of V^-1 D V", std::max(d.row_sum, d.off_support), 1e-9);
    rec.below(tag + " |lambda_max(D) - 1|", d.lambda_max, 1e-8);
  }
}

// -- 5 ---------------------------------------------------------------------
inline void theorem1(Recorder& rec, const ReproduceOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> size(3, 20);
  double worst = 0.0;
  std::string worst_case;
  for (int t = 0; t < opt.random_connection_sets; ++t) {
    const int n = size(rng);
    const auto c = random_connection_set(rng, n);
    const double r = theorem1_identity_residual(c, theorem1_representation(c));
    if (r >= worst) {
      worst = r;
      worst_case = circulant(c).label();
    }
  }
  rec.below("worst inner-product identity residual over " + std::to_string(opt.random_connection_sets) +
                " random sets (" + worst_case + ")",
            worst, 1e-9);
}

// -- 6 ---------------------------------------------------------------------
inline void cosets(Recorder& rec, const ReproduceOptions&) {
  const auto p17 = cyclotomic_cosets(17, 13);
  const std::vector<std::vector<Int>> want17{{0}, {1, 4, 13, 16}, {2, 8, 9, 15}, {3, 5, 12, 14}, {6, 7, 10, 11}};
  rec.check("cosets mod 17 over 13 equal the reference list", p17.cosets == want17);

  const auto p125 = prime_power_coset_family(5, 3);
  rec.check("q for Z_125 is 2^25 mod 125 = 57 (got " + std::to_string(p125.q) + ")", p125.q == 57);
  const auto p25 = cyclotomic_cosets(25, 57 % 25);
  bool all25 = true;
  for (const auto& [rep, members] : std::vector<std::pair<Int, std::vector<Int>>>{{1, {1, 7, 24, 18}},
                                                                                  {2, {2, 14, 23, 11}},
                                                                                  {3, {3, 21, 22, 4}},
                                                                                  {6, {6, 17, 19, 8}},
                                                                                  {9, {9, 13, 16, 12}},
                                                                                  {5, {5, 10, 20, 15}}}) {
    const bool ok = p25.coset_of(rep) == sorted(members);
    all25 = all25 && ok;
    if (!ok) rec.check("coset of " + std::to_string(rep) + " mod 25 is " + set_text(p25.coset_of(rep)), false);
  }
  rec.check("cosets mod 25 over 7 equal the reference lists", all25);
  rec.check("mod-125 cosets over 57 are equal-sized and symmetric", is_equal_sized_symmetric(p125));

  rec.check("divisor check holds for n = 17", lemma1_divisor_check(p17).holds);
  rec.check("divisor check holds for n = 125", lemma1_divisor_check(p125).holds);
  const auto p15 = cyclotomic_cosets(15, 2);
  const auto l15 = lemma1_divisor_check(p15);
  rec.check("n = 15 over 2: |C_(1)| = 4 and the check fails at d = " +
                (l15.witness_divisor ? std::to_string(*l15.witness_divisor) : std::string("none")),
            p15.coset_of(1).size() == 4 && !l15.holds);
  rec.check("n = 15 over 2 is not equal-sized", !is_equal_sized_symmetric(p15));
}

// -- 7 ---------------------------------------------------------------------
inline void independence(Recorder& rec, const ReproduceOptions& opt) {
  const auto c5 = cycle_graph(5);
  const auto a5 = independence_number(c5, opt.alpha_budget);
  rec.check("alpha(C5) = 2 exactly (got " + std::to_string(a5.alpha) + ")", a5.exact && a5.alpha == 2);

  const auto c55 = strong_product(c5, c5);
  const std::vector<int> witness{0 * 5 + 0, 1 * 5 + 2, 2 * 5 + 4, 3 * 5 + 1, 4 * 5 + 3};
  rec.check("reference five-set is independent in C5 x C5", is_independent_set(c55, witness));
  const auto a55 = independence_number(c55, opt.alpha_budget);
  rec.check("alpha(C5 x C5) = 5 exactly (got " + std::to_string(a55.alpha) + ")", a55.exact && a55.alpha == 5);

  const Int p = 13;
  const auto qr = paley(p);
  const auto qq = strong_product(qr, qr);
  const Int b = *residues(p).nonresidues.begin();
  std::vector<int> diag;
  for (Int a = 0; a < p; ++a) diag.push_back(static_cast<int>(a * p + mul_mod(a, b, p)));
  rec.check("{(a, ab)} with b = " + std::to_string(b) + " is independent in QR13 x QR13", is_independent_set(qq, diag));
  const auto aqq = independence_number(qq, opt.alpha_budget, diag);
  rec.check("alpha(QR13 x QR13) >= 13 (got " + std::to_string(aqq.alpha) + (aqq.exact ? ", exact" : ", bound") + ")",
            aqq.alpha >= 13);
}

// -- 8 ---------------------------------------------------------------------
inline void products(Recorder& rec, const ReproduceOptions&) {
  const auto c5 = cycle_graph(5);
  rec.near("theta(C5 x C5) vs 5", solve_theta(strong_product(c5, c5)).theta(), 5.0, 1e-3);
  rec.near("theta(C5 + 2 isolated vertices) vs sqrt5 + 2", solve_theta(disjoint_union(c5, empty_graph(2))).theta(),
           std::sqrt(5.0) + 2.0, 1e-4);
}

// -- 9 ---------------------------------------------------------------------
inline void mobius8(Recorder& rec, const ReproduceOptions&) {
  const auto g = mobius_ladder(8);
  const auto th = solve_theta(g);
  const double theta = th.theta_upper;
  const auto h = handle_orthogonality_system(g, general_representation(g, th.a_opt, theta));
  rec.near("x_2", h.x[2], 0.5, 1e-9);
  rec.near("x_6", h.x[6], 0.5, 1e-9);
  rec.near("x_3 vs theta/2 - 1", h.x[3], theta / 2.0 - 1.0, 1e-8);
  rec.near("x_5 vs theta/2 - 1", h.x[5], theta / 2.0 - 1.0, 1e-8);
  double sum = 0.0;
  for (double x : h.x) sum += x;
  rec.near("sum of x vs theta", sum, theta, 1e-8);
  rec.check("neighbours of 0 carry x = 0", h.x[1] == 0.0 && h.x[4] == 0.0 && h.x[7] == 0.0);
  rec.check(std::string("certificate verdict ") + verdict_name(h.verdict), h.verdict == Verdict::Optimal);
  rec.near("certified value vs theta(M8)", h.lower(), theta, 1e-8);
}

// -- 10 --------------------------------------------------------------------
inline void duality(Recorder& rec, const ReproduceOptions&) {
  std::vector<std::pair<std::string, UpsilonCertificate>> certs;
  for (auto [n, q] : std::vector<std::pair<Int, Int>>{{5, 4}, {7, 6}, {13, 5}, {17, 13}})
    certs.emplace_back("theorem2 (" + std::to_string(n) + "," + std::to_string(q) + ")", theorem2_build(n, q));
  for (Int p : {5, 13, 17}) certs.emplace_back("paley " + std::to_string(p), paley_certificate(p));
  certs.emplace_back("handle system M8", handle_system_for_graph(mobius_ladder(8)));
  certs.emplace_back("handle system C7", handle_system_for_graph(cycle_graph(7)));
  certs.emplace_back("solver C5", solver_certificate(cycle_graph(5), theorem1_representation(5, {1, 4})));
  certs.emplace_back("solver C7", solver_certificate(cycle_graph(7), theorem1_representation(7, {1, 6})));
  for (const auto& [name, c] : certs) {
    rec.check(name + ": both sides verified", c.primal_report.ok() && c.dual_report.ok());
    rec.check(name + ": primal <= dual + 1e-8", c.lower() <= c.upper() + 1e-8);
    rec.below(name + ": complementary slackness", c.max_slackness(), 1e-7);
  }
  // Weak duality against an independent-set primal, which has no paired dual.
  const auto g = cycle_graph(7);
  const auto rep = theorem1_representation(7, {1, 6});
  const auto ind = independence_number(g);
  const auto prim = independent_set_primal(g, rep, ind.witness);
  const auto pr = verify_upsilon_primal(rep, prim, 1e-9);
  const auto dr = verify_upsilon_dual(rep, handle_dual(rep), 1e-9);
  rec.check("C7 independent-set primal verified with value alpha = 3", pr.ok() && prim.value() == 3.0);
  rec.check("C7 independent-set primal <= handle dual", pr.value <= dr.value + 1e-8);
}

// -- 11 --------------------------------------------------------------------
inline void nonsignalling(Recorder& rec, const ReproduceOptions&) {
  const double tol = 1e-10;
  const auto prod = check_nonsignalling(product_channel_choi(2), tol);
  rec.check("product channel passes all four conditions", prod.ok());
  const auto id = check_nonsignalling(identity_channel_choi(2), tol);
  rec.check("identity A_i -> B_o fails the A-to-B condition only",
            !id.a_to_b_ok() && id.psd_ok() && id.trace_ok() && id.b_to_a_ok());
  const auto ent = check_nonsignalling(shared_entanglement_choi(2), tol);
  rec.check("shared maximally entangled state passes", ent.ok());
}

// -- 12 --------------------------------------------------------------------
inline void properties(Recorder& rec, const ReproduceOptions& opt) {
  std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> normal;
  const int cases = opt.property_cases;

  int eig_fail = 0;
  for (int t = 0; t < cases; ++t) {
    const int n = 1 + t % 10;
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const Complex v(normal(rng), i == j ? 0.0 : normal(rng));
        m(i, j) = v;
        m(j, i) = std::conj(v);
      }
    const auto dec = eig(HermitianMatrix(m));
    ComplexMatrix lam(n, n);
    for (int i = 0; i < n; ++i) lam(i, i) = dec.values[i];
    const double recon = (dec.vectors * lam * dec.vectors.adjoint() - m).max_abs();
    const double orth = (dec.vectors.adjoint() * dec.vectors - ComplexMatrix::identity(n)).max_abs();
    if (recon > 1e-10 * std::max(1.0, m.max_abs()) || orth > 1e-10) ++eig_fail;
  }
  rec.check("eigendecomposition reconstruction: " + std::to_string(eig_fail) + " failures in " + std::to_string(cases),
            eig_fail == 0);

  int gram_fail = 0;
  for (int t = 0; t < cases; ++t) {
    const int n = 1 + t % 8, k = 1 + (t / 8) % 6;
    std::vector<RealVector> v(n, RealVector(k));
    for (auto& x : v)
      for (auto& e : x) e = normal(rng);
    RealMatrix g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = inner<double>(v[i], v[j]);
    const auto x = gram_factor(hermitize(g), 1e-10);
    double err = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) err = std::max(err, std::abs(inner<double>(x[i], x[j]) - g(i, j)));
    if (err > 1e-8 || static_cast<int>(x.front().size()) > std::min(n, k)) ++gram_fail;
  }
  rec.check("Gram round-trip: " + std::to_string(gram_fail) + " failures in " + std::to_string(cases), gram_fail == 0);

  int coset_fail = 0;
  std::uniform_int_distribution<Int> modulus(2, 3000);
  for (int t = 0; t < cases; ++t) {
    const Int n = modulus(rng);
    const auto u = units(n);
    const Int q = u[std::uniform_int_distribution<std::size_t>(0, u.size() - 1)(rng)];
    const auto part = cyclotomic_cosets(n, q);
    std::vector<int> seen(n, 0);
    bool ok = part.cosets.front() == std::vector<Int>{0};
    for (const auto& c : part.cosets)
      for (Int s : c) {
        ++seen[s];
        ok = ok && part.same_coset(s, mul_mod(s, q, n));
      }
    for (int s : seen) ok = ok && s == 1;
    ok = ok && static_cast<Int>(part.coset_of(1).size()) == multiplicative_order(q, n);
    if (!ok) ++coset_fail;
  }
  rec.check("coset partition exactness: " + std::to_string(coset_fail) + " failures in " + std::to_string(cases),
            coset_fail == 0);

  int prod_fail = 0;
  std::uniform_int_distribution<int> order(1, 7);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int t = 0; t < cases; ++t) {
    const auto g = random_graph(rng, order(rng), density(rng));
    const auto h = random_graph(rng, order(rng), density(rng));
    const auto p = strong_product(g, h);
    bool ok = p.order() == g.order() * h.order();
    for (int v = 0; v < g.order() && ok; ++v)
      for (int w = 0; w < h.order() && ok; ++w)
        ok = p.degree(v * h.order() + w) == (g.degree(v) + 1) * (h.degree(w) + 1) - 1;
    if (!ok) ++prod_fail;
  }
  rec.check("strong-product degree counts: " + std::to_string(prod_fail) + " failures in " + std::to_string(cases),
            prod_fail == 0);
}

struct Entry {
  int id;
  const char* key;
  const char* title;
  std::vector<std::string> tags;
  void (*run)(Recorder&, const ReproduceOptions&);
};

inline const std::vector<Entry>& entries() {
  static const std::vector<Entry> list{
      {1, "theta-c7", "theta(C7) = 3.317 by SDP and by the circulant rep", {"theta"}, theta_c7},
      {2, "cycles", "odd-cycle formula for n = 5..15", {"theta", "formula"}, cycles},
      {3, "paley", "Paley values and certificates for p = 5, 13, 17", {"theta", "certificate", "paley"}, paley_values},
      {4, "theorem2", "coset certificates and D-matrix checks", {"certificate", "theorem2"}, theorem2},
      {5, "theorem1", "circulant rep inner-product identity on random sets", {"representation"}, theorem1},
      {6, "cosets", "reference cosets and the divisor condition", {"numtheory"}, cosets},
      {7, "independence", "independence numbers and witnesses", {"graphs"}, independence},
      {8, "products", "multiplicativity and additivity probes", {"theta"}, products},
      {9, "m8", "Mobius ladder M8 via the handle system", {"certificate", "theta"}, mobius8},
      {10, "duality", "weak duality and complementary slackness", {"certificate"}, duality},
      {11, "nonsignalling", "Choi-matrix non-signalling checks", {"channels"}, nonsignalling},
      {12, "properties", "randomized property suites", {"properties"}, properties},
  };
  return list;
}

inline bool selected(const Entry& e, const std::vector<std::string>& only) {
  if (only.empty()) return true;
  for (const auto& o : only) {
    if (o == std::to_string(e.id) || o == e.key) return true;
    for (const auto& t : e.tags)
      if (o == t) return true;
  }
  return false;
}

}  // namespace repro

/// Keys, ids and tags accepted by the `only` filter.
inline std::vector<std::string> reproduction_keys() {
  std::set<std::string> keys;
  for (const auto& e : repro::entries()) {
    keys.insert(e.key);
    keys.insert(e.tags.begin(), e.tags.end());
  }
  return {keys.begin(), keys.end()};
}

inline CriterionResult run_criterion(int id, const ReproduceOptions& opt = {}) {
  for (const auto& e : repro::entries()) {
    if (e.id != id) continue;
    CriterionResult r;
    r.id = e.id;
    r.key = e.key;
    r.title = e.title;
    repro::Recorder rec(r);
    const auto t0 = std::chrono::steady_clock::now();
    try {
      e.run(rec, opt);
      r.passed = rec.all();
    } catch (const std::exception& ex) {
      r.details.push_back(std::string("FAIL exception: ") + ex.what());
      r.passed = false;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  throw Error(Errc::InvalidInput, "no criterion " + std::to_string(id));
}

inline std::vector<CriterionResult> run_reproduction(const std::vector<std::string>& only = {}, const ReproduceOptions& opt = {}) {
  std::vector<CriterionResult> out;
  for (const auto& e : repro::entries())
    if (repro::selected(e, only)) out.push_back(run_criterion(e.id, opt));
  return out;
}

inline Json reproduction_to_json(const std::vector<CriterionResult>& results) {
  Json items = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    items.push_back(Json{{"id", r.id}, {"key", r.key}, {"title", r.title}, {"passed", r.passed}, {"details", r.details}});
  }
  return Json{{"passed", all}, {"criteria", std::move(items)}};
}

}  // namespace zecap
