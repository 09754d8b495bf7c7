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

// Closed-form optimal Upsilon solutions and their verification. Optimality
// is only ever claimed from a verified primal and a verified dual whose
// values agree; the constructions merely propose candidates.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "zecap/error.hpp"
#include "zecap/graph.hpp"
#include "zecap/numerics.hpp"
#include "zecap/numtheory.hpp"
#include "zecap/spectra.hpp"
#include "zecap/theta.hpp"
#include "zecap/upsilon.hpp"

namespace zecap {

enum class Verdict { Optimal, PrimalOnly, Invalid };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Optimal: return "optimal";
    case Verdict::PrimalOnly: return "primal-only";
    case Verdict::Invalid: return "invalid";
  }
  return "invalid";
}

struct UpsilonCertificate {
  std::string graph;
  std::string route;
  double theta = 0.0;
  OrthonormalRep rep;
  UpsilonPrimal primal;
  UpsilonDual dual;
  PrimalReport primal_report;
  DualReport dual_report;
  RealVector slackness;
  RealVector x;  // ansatz coefficients, when the route has them
  double tol = 0.0;
  Verdict verdict = Verdict::Invalid;

  double lower() const { return primal_report.value; }
  double upper() const { return dual_report.value; }
  double max_slackness() const {
    double worst = 0.0;
    for (std::size_t k = 0; k < slackness.size(); ++k)
      if (primal.s[k] > 1e-9) worst = std::max(worst, std::abs(slackness[k]));
    return worst;
  }
};

/// Verifies both sides and assigns the verdict. Optimal needs both reports
/// to pass and the values to agree within max(2 tol, value_tol).
inline void certify(UpsilonCertificate& cert, double tol, double value_tol = 1e-8) {
  cert.tol = tol;
  cert.primal_report = verify_upsilon_primal(cert.rep, cert.primal, tol);
  cert.dual_report = verify_upsilon_dual(cert.rep, cert.dual, tol);
  cert.slackness = complementary_slackness(cert.primal, cert.dual);
  const bool p = cert.primal_report.ok(), d = cert.dual_report.ok();
  const bool close = std::abs(cert.upper() - cert.lower()) <= std::max(2.0 * tol, value_tol);
  cert.verdict = p && d && close ? Verdict::Optimal : p ? Verdict::PrimalOnly : Verdict::Invalid;
}

inline void require_optimal(const UpsilonCertificate& cert) {
  if (cert.verdict == Verdict::Optimal) return;
  const double worst = std::max(cert.primal_report.worst(), cert.dual_report.worst());
  throw Error(Errc::CertificateInvalid,
              cert.route + " certificate for " + cert.graph + " is " + verdict_name(cert.verdict) + " (primal " +
                  std::to_string(cert.lower()) + ", dual " + std::to_string(cert.upper()) + ", worst residual " +
                  std::to_string(worst) + ")",
              worst);
}

/// Primal from R_0 and the shift: s_k = theta / n, R_k = U^k R_0 U^-k.
inline UpsilonPrimal circulant_primal(const ComplexMatrix& r0, double theta, int n) {
  const DFTUnitary u(n);
  UpsilonPrimal out;
  out.s.assign(n, theta / n);
  for (int k = 0; k < n; ++k) out.r.push_back(hermitize(u.conjugate(k, r0)));
  return out;
}

// ---------------------------------------------------------------------------
// Circulant graphs over equal-sized cyclotomic cosets

struct Theorem2Certificate : UpsilonCertificate {
  Int n = 0;
  Int q = 0;
  CyclotomicPartition partition;
  CirculantSpectrum spectrum;
  Int beta = 0;
  HermitianMatrix d;
};

/// Smallest unit index attaining lambda_min within 1e-8.
inline Int select_beta(const CirculantSpectrum& s) {
  for (int j : s.argmin(1e-8))
    if (std::gcd<Int>(j, s.n) == 1) return j;
  throw Error(Errc::BetaNotFound, "no unit of Z_" + std::to_string(s.n) + " attains lambda_min");
}

/// x_j = (l_{j beta} - l_beta)/(l_0 - l_beta), D = sum_j x_j P_j,
/// R_0 = (I - D)/n, s_k = theta/n, dual T = theta |c><c|, Q_k = 0.
/// Edge-transitivity is checked by search for n <= 24 unless asserted.
inline Theorem2Certificate theorem2_build(Int n, Int q, bool assume_edge_transitive = false, double tol = 1e-9) {
  Theorem2Certificate cert;
  cert.n = n;
  cert.q = q;
  cert.partition = cyclotomic_cosets(n, q);
  if (!is_equal_sized_symmetric(cert.partition))
    throw Error(Errc::PreconditionFailed, "cosets mod " + std::to_string(n) + " over " + std::to_string(q) +
                                              " are not equal-sized with -1 in the coset of 1");
  const ConnectionSet c(n, cert.partition.coset_of(1));
  if (!assume_edge_transitive) {
    if (n > 24) throw Error(Errc::PreconditionFailed, "edge-transitivity is only searched for n <= 24; assert it");
    if (!is_edge_transitive(circulant(c))) throw Error(Errc::PreconditionFailed, "graph is not edge-transitive");
  }
  cert.graph = circulant(c).label();
  cert.route = "theorem2";
  cert.spectrum = circulant_spectrum(c);
  cert.beta = select_beta(cert.spectrum);
  cert.theta = theta_formula_edge_transitive(c, true);
  cert.rep = theorem1_representation(c);

  const auto& lam = cert.spectrum.lambdas;
  const double lb = lam[cert.beta];
  cert.x.resize(n);
  for (Int j = 0; j < n; ++j) cert.x[j] = (lam[mul_mod(j, cert.beta, n)] - lb) / (lam[0] - lb);

  ComplexMatrix dm(n, n);
  for (Int j = 0; j < n; ++j)
    if (cert.x[j] != 0.0) dm += cert.rep.projector(j).matrix() * Complex(cert.x[j]);
  cert.d = hermitize(dm);
  const ComplexMatrix r0 = (ComplexMatrix::identity(n) - dm) * Complex(1.0 / static_cast<double>(n));
  cert.primal = circulant_primal(r0, cert.theta, static_cast<int>(n));
  cert.dual = handle_dual(cert.rep);
  certify(cert, tol);
  require_optimal(cert);
  return cert;
}

struct DMatrixReport {
  double closed_form = 0.0;   // max |D - closed form| entrywise
  double negativity = 0.0;    // max(0, -min Re D_ab) and max |Im D_ab|
  double eigenvector = 0.0;   // || D u_0 - u_0 ||_max
  double row_sum = 0.0;       // max |row sum of V^-1 D V - 1| on the support of u_0
  double off_support = 0.0;   // max |D_ab| with a or b outside the support
  double lambda_max = 0.0;    // |lambda_max(D) - 1|
  bool closed_form_ok(double tol = 1e-9) const { return closed_form <= tol && negativity <= tol; }
  bool eigenvector_ok(double tol = 1e-9) const { return eigenvector <= tol; }
  bool row_sum_ok(double tol = 1e-9) const { return row_sum <= tol && off_support <= tol; }
  bool lambda_max_ok(double tol = 1e-8) const { return lambda_max <= tol; }
  bool ok() const { return closed_form_ok() && eigenvector_ok() && row_sum_ok() && lambda_max_ok(); }
};

/// Checks of D against the proof: closed-form entries, the positive
/// eigenvector u_0, unit row sums of the similar matrix V^-1 D V with
/// V = diag(u_0), and lambda_max(D) = 1. V is singular wherever u_0
/// vanishes, so the similarity is taken on the support of u_0 and D is
/// required to vanish off it.
inline DMatrixReport theorem2_dmatrix_checks(const Theorem2Certificate& cert, const HermitianMatrix* d_override = nullptr) {
  const HermitianMatrix& d = d_override ? *d_override : cert.d;
  const Int n = cert.n;
  const auto& lam = cert.spectrum.lambdas;
  const double lb = lam[cert.beta], l0 = lam[0];
  const CyclotomicPartition& part = cert.partition;
  DMatrixReport out;
  for (Int a = 0; a < n; ++a)
    for (Int b = 0; b < n; ++b) {
      double expected;
      if (a == b)
        expected = (lam[a] - lb) / (l0 - lb);
      else if (part.same_coset(a - b, cert.beta))
        expected = std::sqrt(gap_above_min(lam[a], lb) * gap_above_min(lam[b], lb)) / (-lb * (l0 - lb));
      else
        expected = 0.0;
      out.closed_form = std::max(out.closed_form, std::abs(d(a, b) - expected));
      out.negativity = std::max({out.negativity, -d(a, b).real(), std::abs(d(a, b).imag())});
    }

  ComplexVector u0 = cert.rep.vectors[0];
  const ComplexVector du = matvec(d.matrix(), u0);
  for (Int a = 0; a < n; ++a) out.eigenvector = std::max(out.eigenvector, std::abs(du[a] - u0[a]));

  std::vector<char> support(n);
  const double cut = 1e-12;
  for (Int a = 0; a < n; ++a) support[a] = std::abs(u0[a]) > cut;
  for (Int a = 0; a < n; ++a) {
    if (!support[a]) {
      for (Int b = 0; b < n; ++b) out.off_support = std::max({out.off_support, std::abs(d(a, b)), std::abs(d(b, a))});
      continue;
    }
    Complex row = 0.0;
    for (Int b = 0; b < n; ++b)
      if (support[b]) row += d(a, b) * u0[b] / u0[a];
    out.row_sum = std::max(out.row_sum, std::abs(row - 1.0));
  }
  out.lambda_max = std::abs(max_eigenvalue(d) - 1.0);
  return out;
}

// ---------------------------------------------------------------------------
// Paley graphs

struct PaleyChecks {
  double entry_table = 0.0;  // max |p R_0 - table|
  double row_sum = 0.0;      // max |sum_{b != a} |p R_ab| - expected|
  double null_space = 0.0;   // max(|R_0 u_0|, |R_0 sum_{j in N} u_j|)
  bool ok(double table_tol = 1e-9, double null_tol = 1e-8) const {
    return entry_table <= table_tol && row_sum <= table_tol && null_space <= null_tol;
  }
};

struct PaleyCertificate : UpsilonCertificate {
  Int p = 0;
  ResidueClassification classes;
  HermitianMatrix r0;
  PaleyChecks checks;
};

/// R_0 = (1/p)(I - P_0 - (2/(sqrt p + 1)) sum_{j in N} P_j) on the circulant
/// representation of QR_p, with s_k = sqrt(p)/p and T = sqrt(p) |c><c|.
inline PaleyCertificate paley_certificate(Int p, double tol = 1e-9) {
  if (!is_prime(p) || p % 4 != 1) throw Error(Errc::InvalidPrime, "paley: p must be a prime = 1 mod 4");
  PaleyCertificate cert;
  cert.p = p;
  cert.classes = residues(p);
  const auto& qr = cert.classes.quadratic_residues;
  const auto& nr = cert.classes.nonresidues;
  const ConnectionSet c(p, {qr.begin(), qr.end()});
  cert.graph = "paley:" + std::to_string(p);
  cert.route = "paley";
  const double sp = std::sqrt(static_cast<double>(p));
  cert.theta = sp;
  cert.rep = theorem1_representation(c);
  const double w = 2.0 / (sp + 1.0);

  ComplexMatrix r0 = ComplexMatrix::identity(p) - cert.rep.projector(0).matrix();
  for (Int j : nr) r0 -= cert.rep.projector(j).matrix() * Complex(w);
  r0 *= Complex(1.0 / static_cast<double>(p));
  cert.r0 = hermitize(r0);

  // Entry table and row sums of p R_0.
  for (Int a = 0; a < p; ++a) {
    double off = 0.0;
    for (Int b = 0; b < p; ++b) {
      double expected = 0.0;
      if (a == b)
        expected = nr.count(a) ? 1.0 : qr.count(a) ? (sp - 1.0) / (sp + 1.0) : 0.0;
      else if (qr.count(a) && qr.count(b) && nr.count(mod(a - b, p)))
        expected = -w * w;
      const Complex v = cert.r0(a, b) * Complex(static_cast<double>(p));
      cert.checks.entry_table = std::max(cert.checks.entry_table, std::abs(v - expected));
      if (a != b) off += std::abs(v);
    }
    const double diag = qr.count(a) ? (sp - 1.0) / (sp + 1.0) : 0.0;
    cert.checks.row_sum = std::max(cert.checks.row_sum, std::abs(off - diag));
  }
  ComplexVector sum_n(p, 0.0);
  for (Int j : nr)
    for (Int a = 0; a < p; ++a) sum_n[a] += cert.rep.vectors[j][a];
  for (const auto& v : {matvec(r0, cert.rep.vectors[0]), matvec(r0, sum_n)})
    for (const auto& e : v) cert.checks.null_space = std::max(cert.checks.null_space, std::abs(e));

  cert.x.assign(p, 0.0);
  cert.x[0] = 1.0;
  for (Int j : nr) cert.x[j] = w;
  cert.primal = circulant_primal(r0, sp, static_cast<int>(p));
  cert.dual = handle_dual(cert.rep);
  certify(cert, tol);
  if (!cert.checks.ok())
    throw Error(Errc::CertificateInvalid, "paley: entry table or null-space check failed",
                std::max({cert.checks.entry_table, cert.checks.row_sum, cert.checks.null_space}));
  require_optimal(cert);
  return cert;
}

/// A unit q with <q> equal to the quadratic residues mod p.
inline Int quadratic_residue_generator(Int p) {
  const auto alpha = primitive_root(p);
  if (!alpha) throw Error(Errc::InvalidPrime, "no primitive root");
  return mul_mod(*alpha, *alpha, p);
}

// ---------------------------------------------------------------------------
// General graphs: the handle-orthogonality system

struct HandleSystemOptions {
  std::optional<std::vector<int>> symmetry;  // automorphism Gamma; default i -> n - i on circulants
  double solve_tol = 1e-7;
  double verify_tol = 1e-8;
};

struct HandleSystemResult : UpsilonCertificate {
  std::vector<std::vector<int>> translations;  // pi_k with pi_k(0) = k
  std::vector<std::vector<int>> classes;       // free vertices tied by the symmetry
  double system_residual = 0.0;
};

namespace detail {

inline std::vector<std::vector<int>> vertex_maps_from_zero(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> maps(n);
  if (circulant_connection_set(g)) {
    for (int k = 0; k < n; ++k) {
      maps[k].resize(n);
      for (int j = 0; j < n; ++j) maps[k][j] = (j + k) % n;
    }
    return maps;
  }
  for (int k = 0; k < n; ++k) {
    auto sigma = find_automorphism(g, {{0, k}});
    if (!sigma) throw Error(Errc::PreconditionFailed, "graph is not vertex-transitive: no automorphism maps 0 to " + std::to_string(k));
    maps[k] = std::move(*sigma);
  }
  return maps;
}

}  // namespace detail

/// Ansatz R_k = (1/n)(I - sum_j x_j P_{pi_k(j)}), x_0 = 1, x_j = 0 on the
/// neighbours of 0, x constant on orbits of the symmetry. Requiring R_k c = 0
/// (the psd form of <c|R_k|c> = 0) gives sum_j x_j u_{pi_k(j)} = sqrt(theta) c,
/// solved in least squares. The assembled pair is then fully verified.
inline HandleSystemResult handle_orthogonality_system(const Graph& g, const OrthonormalRep& rep,
                                                      const HandleSystemOptions& opt = {}) {
  const int n = g.order();
  if (n < 1 || static_cast<int>(rep.size()) != n) throw Error(Errc::InvalidInput, "rep size differs from graph order");
  const double theta = rep.eta;
  for (const auto& u : rep.vectors)
    if (std::abs(std::norm(inner<Complex>(rep.handle, u)) * theta - 1.0) > 1e-6)
      throw Error(Errc::PreconditionFailed, "handle overlaps are not uniform; build the rep from an optimal Lovasz matrix");

  HandleSystemResult out;
  out.graph = g.label();
  out.route = "handle-system";
  out.theta = theta;
  out.rep = rep;
  out.translations = detail::vertex_maps_from_zero(g);

  std::vector<int> gamma(n);
  if (opt.symmetry) {
    gamma = *opt.symmetry;
    if (!is_isomorphism(g, g, gamma)) throw Error(Errc::InvalidInput, "supplied symmetry is not an automorphism");
  } else {
    for (int i = 0; i < n; ++i) gamma[i] = (n - i) % n;
    if (!is_isomorphism(g, g, gamma))
      for (int i = 0; i < n; ++i) gamma[i] = i;
  }

  std::vector<char> fixed(n, 0);
  fixed[0] = 1;
  for (int j : g.neighbors(0)) fixed[j] = 1;
  std::vector<int> cls(n, -1);
  for (int i = 0; i < n; ++i) {
    if (fixed[i] || cls[i] >= 0) continue;
    std::vector<int> orbit;
    for (int j = i; cls[j] < 0 && !fixed[j]; j = gamma[j]) {
      cls[j] = static_cast<int>(out.classes.size());
      orbit.push_back(j);
    }
    out.classes.push_back(std::move(orbit));
  }
  for (int i = 0; i < n; ++i)
    if (fixed[i] && i != 0 && cls[gamma[i]] >= 0)
      throw Error(Errc::InvalidInput, "symmetry mixes neighbours of 0 with free vertices");

  const std::size_t d = rep.dim(), unknowns = out.classes.size();
  const double st = std::sqrt(theta);
  RealMatrix a(2 * d * n, unknowns);
  RealVector b(2 * d * n, 0.0);
  for (int k = 0; k < n; ++k) {
    const auto& pi = out.translations[k];
    for (std::size_t r = 0; r < d; ++r) {
      const std::size_t re = (k * d + r) * 2, im = re + 1;
      const Complex rhs = st * rep.handle[r] - rep.vectors[pi[0]][r];
      b[re] = rhs.real();
      b[im] = rhs.imag();
      for (std::size_t t = 0; t < unknowns; ++t)
        for (int j : out.classes[t]) {
          a(re, t) += rep.vectors[pi[j]][r].real();
          a(im, t) += rep.vectors[pi[j]][r].imag();
        }
    }
  }
  const LinearSolution sol = solve_linear(a, b, opt.solve_tol);
  out.system_residual = sol.residual;
  out.x.assign(n, 0.0);
  out.x[0] = 1.0;
  for (std::size_t t = 0; t < unknowns; ++t)
    for (int j : out.classes[t]) out.x[j] = sol.x[t];

  out.primal.s.assign(n, theta / n);
  for (int k = 0; k < n; ++k) {
    ComplexMatrix rk = ComplexMatrix::identity(d);
    for (int j = 0; j < n; ++j)
      if (out.x[j] != 0.0) rk -= rep.projector(out.translations[k][j]).matrix() * Complex(out.x[j]);
    out.primal.r.push_back(hermitize(rk * Complex(1.0 / n)));
  }
  out.dual = handle_dual(rep);
  certify(out, opt.verify_tol);
  if (!out.primal_report.ok())
    throw Error(Errc::CertificateInvalid, "handle system: assembled R_k fail verification (worst residual " +
                                              std::to_string(out.primal_report.worst()) + ")",
                out.primal_report.worst());
  return out;
}

/// Optimal Lovasz matrix from the SDP, its Gram representation, then the
/// handle-orthogonality system.
inline HandleSystemResult handle_system_for_graph(const Graph& g, const ThetaSettings& ts = {},
                                                  const HandleSystemOptions& opt = {}) {
  const ThetaSolution th = solve_theta(g, ts);
  const OrthonormalRep rep = general_representation(g, th.a_opt, th.theta_upper);
  return handle_orthogonality_system(g, rep, opt);
}

/// Certificate from the SDP solver itself.
inline UpsilonCertificate solver_certificate(const Graph& g, const OrthonormalRep& rep, const UpsilonSettings& us = {},
                                             double tol = 1e-7) {
  UpsilonCertificate cert;
  cert.graph = g.label();
  cert.route = "solver";
  cert.rep = rep;
  cert.theta = representation_value(rep);
  const auto sol = solve_upsilon(rep, us);
  cert.primal = sol.primal;
  cert.dual = sol.dual;
  certify(cert, tol, us.gap_tol);
  return cert;
}

// ---------------------------------------------------------------------------
// Capacity report

enum class Construction { Auto, Theorem2, Paley, HandleSystem, None };

struct CapacityReport {
  std::string graph;
  std::string route;  // construction that produced the certificate, or "none"
  int alpha = 0;
  bool alpha_exact = false;
  double theta = 0.0;
  double upsilon_lower = 0.0;  // certified
  double upsilon_upper = 0.0;  // certified
  bool certified = false;      // lower == upper == theta within tolerance
  std::optional<double> one_shot;     // log2 floor(Upsilon)
  std::optional<double> asymptotic;   // log2 theta
  double trivial_lower = 0.0;         // log2 alpha
  double trivial_upper = 0.0;         // log2 theta
  std::optional<std::string> note;
};

/// (n, q) such that g is circulant over the coset of 1 mod n over q and the
/// cosets are equal-sized and symmetric.
inline std::optional<std::pair<Int, Int>> find_coset_structure(const Graph& g) {
  const auto c = circulant_connection_set(g);
  if (!c || c->size() == 0) return std::nullopt;
  const Int n = c->modulus();
  for (Int q : c->elements()) {
    if (std::gcd(q, n) != 1) continue;
    const auto part = cyclotomic_cosets(n, q);
    const auto& c1 = part.coset_of(1);
    if (std::vector<Int>(c1.begin(), c1.end()) == c->elements() && is_equal_sized_symmetric(part))
      return std::make_pair(n, q);
  }
  return std::nullopt;
}

inline std::optional<Int> paley_prime(const Graph& g) {
  const Int p = g.order();
  if (p < 5 || !is_prime(p) || p % 4 != 1) return std::nullopt;
  return g.same_edges(paley(p)) ? std::optional<Int>(p) : std::nullopt;
}

inline CapacityReport capacity_report(const Graph& g, Construction construction = Construction::Auto,
                                      const ThetaSettings& ts = {}, std::uint64_t alpha_budget = 10'000'000) {
  CapacityReport out;
  out.graph = g.label();
  const auto ind = independence_number(g, alpha_budget);
  out.alpha = ind.alpha;
  out.alpha_exact = ind.exact;
  const ThetaSolution th = solve_theta(g, ts);
  out.theta = th.theta();
  out.trivial_lower = std::log2(std::max(1, out.alpha));
  out.trivial_upper = std::log2(th.theta_upper);
  out.upsilon_lower = out.alpha;
  out.upsilon_upper = th.theta_upper;

  Construction route = construction;
  if (route == Construction::Auto) {
    if (paley_prime(g))
      route = Construction::Paley;
    else if (find_coset_structure(g) && g.order() <= 24)
      route = Construction::Theorem2;
    else
      route = Construction::HandleSystem;
  }

  std::optional<UpsilonCertificate> cert;
  try {
    switch (route) {
      case Construction::Theorem2: {
        const auto nq = find_coset_structure(g);
        if (!nq) throw Error(Errc::PreconditionFailed, "graph is not circulant over an equal-sized coset");
        cert = theorem2_build(nq->first, nq->second);
        break;
      }
      case Construction::Paley: {
        const auto p = paley_prime(g);
        if (!p) throw Error(Errc::PreconditionFailed, "graph is not a Paley graph in standard labelling");
        cert = paley_certificate(*p);
        break;
      }
      case Construction::HandleSystem: {
        auto h = handle_system_for_graph(g, ts);
        if (h.verdict == Verdict::Optimal) cert = std::move(h);
        else out.note = std::string("handle system verdict ") + verdict_name(h.verdict);
        break;
      }
      default:
        break;
    }
  } catch (const Error& e) {
    out.note = e.what();
  }

  if (cert && cert->verdict == Verdict::Optimal) {
    out.route = cert->route;
    out.upsilon_lower = std::max<double>(out.upsilon_lower, cert->lower());
    out.upsilon_upper = std::min(out.upsilon_upper, cert->upper());
    if (std::abs(cert->upper() - th.theta_upper) <= 1e-6 * std::max(1.0, th.theta_upper)) {
      out.certified = true;
      const double ups = 0.5 * (cert->lower() + cert->upper());
      out.one_shot = std::log2(std::floor(ups + 1e-9));
      out.asymptotic = std::log2(ups);
    }
  } else {
    out.route = "none";
  }
  return out;
}

}  // namespace zecap
