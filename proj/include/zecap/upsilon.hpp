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

// The one-shot value Upsilon of a classical-quantum channel with rank-one
// output projectors P_k = |u_k><u_k|:
//
//   primal  max sum_k s_k  s.t.  s_k >= 0,  0 <= R_k <= s_k (I - P_k),
//                                sum_k (s_k P_k + R_k) = I
//   dual    min Tr T       s.t.  Tr(P_k T) - Tr((I - P_k) Q_k) >= 1,
//                                Q_k >= 0,  Q_k + T >= 0
//
// Verification runs in plain complex arithmetic and never looks at how a
// candidate was produced.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "zecap/error.hpp"
#include "zecap/graph.hpp"
#include "zecap/numerics.hpp"
#include "zecap/sdp_solver.hpp"
#include "zecap/spectra.hpp"

namespace zecap {

struct UpsilonPrimal {
  RealVector s;
  std::vector<HermitianMatrix> r;
  double value() const {
    double v = 0.0;
    for (double x : s) v += x;
    return v;
  }
};

struct UpsilonDual {
  HermitianMatrix t;
  std::vector<HermitianMatrix> q;
  double value() const { return t.trace(); }
};

struct PrimalReport {
  double value = 0.0;
  double nonnegativity = 0.0;   // max(0, -min s_k)
  double r_psd = 0.0;           // max(0, -lambda_min(R_k))
  double bound_psd = 0.0;       // max(0, -lambda_min(s_k (I - P_k) - R_k))
  double sum_identity = 0.0;    // || sum_k (s_k P_k + R_k) - I ||_max
  double tol = 0.0;
  bool nonnegativity_ok() const { return nonnegativity <= tol; }
  bool r_psd_ok() const { return r_psd <= tol; }
  bool bound_psd_ok() const { return bound_psd <= tol; }
  bool sum_identity_ok() const { return sum_identity <= tol; }
  bool ok() const { return nonnegativity_ok() && r_psd_ok() && bound_psd_ok() && sum_identity_ok(); }
  double worst() const { return std::max({nonnegativity, r_psd, bound_psd, sum_identity}); }
};

struct DualReport {
  double value = 0.0;
  double constraint_deficit = 0.0;  // max(0, 1 - min_k [Tr(P_k T) - Tr((I - P_k) Q_k)])
  double q_psd = 0.0;               // max(0, -lambda_min(Q_k))
  double qt_psd = 0.0;              // max(0, -lambda_min(Q_k + T))
  double tol = 0.0;
  bool constraint_ok() const { return constraint_deficit <= tol; }
  bool q_psd_ok() const { return q_psd <= tol; }
  bool qt_psd_ok() const { return qt_psd <= tol; }
  bool ok() const { return constraint_ok() && q_psd_ok() && qt_psd_ok(); }
  double worst() const { return std::max({constraint_deficit, q_psd, qt_psd}); }
};

namespace detail {

inline void require_dims(const OrthonormalRep& rep, std::size_t count, std::size_t dim, const char* what) {
  if (count != rep.size()) throw Error(Errc::InvalidInput, std::string(what) + ": expected one matrix per vertex");
  if (dim != rep.dim()) throw Error(Errc::InvalidInput, std::string(what) + ": matrix dimension differs from rep");
}

inline double psd_violation(const HermitianMatrix& m) { return std::max(0.0, -min_eigenvalue(m)); }

inline ComplexMatrix projector_matrix(const ComplexVector& u) { return outer<Complex>(u, u); }

}  // namespace detail

inline PrimalReport verify_upsilon_primal(const OrthonormalRep& rep, const UpsilonPrimal& prim, double tol) {
  const std::size_t n = rep.size(), d = rep.dim();
  if (prim.s.size() != n) throw Error(Errc::InvalidInput, "primal: expected one s_k per vertex");
  for (const auto& r : prim.r) detail::require_dims(rep, prim.r.size(), r.size(), "primal");
  if (prim.r.size() != n) throw Error(Errc::InvalidInput, "primal: expected one R_k per vertex");

  PrimalReport out;
  out.tol = tol;
  out.value = prim.value();
  ComplexMatrix sum(d, d);
  const ComplexMatrix id = ComplexMatrix::identity(d);
  for (std::size_t k = 0; k < n; ++k) {
    const ComplexMatrix pk = detail::projector_matrix(rep.vectors[k]);
    out.nonnegativity = std::max(out.nonnegativity, -prim.s[k]);
    out.r_psd = std::max(out.r_psd, detail::psd_violation(prim.r[k]));
    out.bound_psd = std::max(out.bound_psd, detail::psd_violation(hermitize((id - pk) * Complex(prim.s[k]) - prim.r[k].matrix())));
    sum += pk * Complex(prim.s[k]) + prim.r[k].matrix();
  }
  out.sum_identity = (sum - id).max_abs();
  return out;
}

inline DualReport verify_upsilon_dual(const OrthonormalRep& rep, const UpsilonDual& dual, double tol) {
  const std::size_t n = rep.size();
  detail::require_dims(rep, rep.size(), dual.t.size(), "dual");
  if (dual.q.size() != n) throw Error(Errc::InvalidInput, "dual: expected one Q_k per vertex");
  for (const auto& q : dual.q) detail::require_dims(rep, n, q.size(), "dual");

  DualReport out;
  out.tol = tol;
  out.value = dual.value();
  double min_lhs = std::numeric_limits<double>::infinity();
  const ComplexMatrix id = ComplexMatrix::identity(rep.dim());
  for (std::size_t k = 0; k < n; ++k) {
    const ComplexMatrix pk = detail::projector_matrix(rep.vectors[k]);
    const double lhs = std::real((pk * dual.t.matrix()).trace()) - std::real(((id - pk) * dual.q[k].matrix()).trace());
    min_lhs = std::min(min_lhs, lhs);
    out.q_psd = std::max(out.q_psd, detail::psd_violation(dual.q[k]));
    out.qt_psd = std::max(out.qt_psd, detail::psd_violation(hermitize(dual.q[k].matrix() + dual.t.matrix())));
  }
  out.constraint_deficit = n ? std::max(0.0, 1.0 - min_lhs) : 0.0;
  return out;
}

/// Tr(R_k (T + Q_k)) per k; zero at an optimal pair wherever s_k > 0.
inline RealVector complementary_slackness(const UpsilonPrimal& prim, const UpsilonDual& dual) {
  RealVector out(prim.r.size());
  for (std::size_t k = 0; k < prim.r.size(); ++k)
    out[k] = std::real((prim.r[k].matrix() * (dual.t.matrix() + dual.q[k].matrix())).trace());
  return out;
}

/// s_k = 1 on an independent set I and R_{k*} = I - sum_{k in I} P_k for the
/// first k* in I. Feasible whenever the rep is orthonormal on G.
inline UpsilonPrimal independent_set_primal(const Graph& g, const OrthonormalRep& rep, const std::vector<int>& set) {
  if (static_cast<int>(rep.size()) != g.order()) throw Error(Errc::InvalidInput, "rep size differs from graph order");
  if (set.empty()) throw Error(Errc::InvalidInput, "independent set must be nonempty");
  if (!is_independent_set(g, set)) throw Error(Errc::InvalidInput, "vertex set is not independent");
  const std::size_t d = rep.dim();
  UpsilonPrimal out;
  out.s.assign(rep.size(), 0.0);
  out.r.assign(rep.size(), HermitianMatrix::zero(d));
  ComplexMatrix rest = ComplexMatrix::identity(d);
  for (int k : set) {
    out.s[k] = 1.0;
    rest -= detail::projector_matrix(rep.vectors[k]);
  }
  out.r[set.front()] = hermitize(rest);
  return out;
}

/// T = eta |c><c| with eta = max_k 1/|<c|u_k>|^2, Q_k = 0.
inline UpsilonDual handle_dual(const OrthonormalRep& rep) {
  const double eta = representation_value(rep);
  UpsilonDual out;
  out.t = hermitize(detail::projector_matrix(rep.handle) * Complex(eta));
  out.q.assign(rep.size(), HermitianMatrix::zero(rep.dim()));
  return out;
}

// ---------------------------------------------------------------------------
// Real embedding of Hermitian blocks

/// [[Re H, -Im H], [Im H, Re H]].
inline RealMatrix embed_hermitian(const ComplexMatrix& h) {
  const std::size_t m = h.rows();
  RealMatrix out(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      out(i, j) = out(i + m, j + m) = h(i, j).real();
      out(i + m, j) = h(i, j).imag();
      out(i, j + m) = -h(i, j).imag();
    }
  return out;
}

/// Inverse of the embedding on its range, and the Hermitian matrix H with
/// Re Tr(G H) = <emb(G), X> / 2 for every Hermitian G on the whole cone.
inline HermitianMatrix unembed_hermitian(const RealMatrix& x) {
  const std::size_t m = x.rows() / 2;
  ComplexMatrix h(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      h(i, j) = Complex(0.5 * (x(i, j) + x(i + m, j + m)), 0.5 * (x(i + m, j) - x(i, j + m)));
  return hermitize(h);
}

/// Orthonormal basis of the Hermitian m x m matrices under Re Tr(A B).
inline std::vector<ComplexMatrix> hermitian_basis(std::size_t m) {
  std::vector<ComplexMatrix> out;
  const double w = std::numbers::sqrt2 / 2.0;
  for (std::size_t j = 0; j < m; ++j) {
    ComplexMatrix e(m, m);
    e(j, j) = 1.0;
    out.push_back(std::move(e));
  }
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = j + 1; k < m; ++k) {
      ComplexMatrix re(m, m), im(m, m);
      re(j, k) = re(k, j) = w;
      im(j, k) = Complex(0.0, w);
      im(k, j) = Complex(0.0, -w);
      out.push_back(std::move(re));
      out.push_back(std::move(im));
    }
  return out;
}

/// Columns form an orthonormal basis of the complement of the unit vector u
/// (a complex Householder reflection sending u to a multiple of e_0).
inline ComplexMatrix orthogonal_complement(const ComplexVector& u) {
  const std::size_t d = u.size();
  const double a0 = std::abs(u[0]);
  const Complex phase = a0 > 0.0 ? u[0] / a0 : Complex(1.0);
  ComplexVector w = u;
  w[0] += phase;  // u - alpha e_0 with alpha = -phase
  double wn = 0.0;
  for (const auto& x : w) wn += std::norm(x);
  ComplexMatrix out(d, d - 1);
  for (std::size_t j = 1; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) out(i, j - 1) = (i == j ? 1.0 : 0.0) - 2.0 * w[i] * std::conj(w[j]) / wn;
  return out;
}

// ---------------------------------------------------------------------------
// Solver

struct UpsilonSettings {
  double gap_tol = 1e-5;
  int max_iter = 200;
  std::uint64_t seed = 0;
};

struct UpsilonSolution {
  UpsilonPrimal primal;
  UpsilonDual dual;
  RealVector slackness;
  int iterations = 0;
  bool converged = false;
  double gap() const { return dual.value() - primal.value(); }
};

namespace detail {

// Adds <emb(h), X> / 2 on `block` to constraint i, scaled by `scale`.
inline void add_hermitian_term(SdpProblem& p, int i, int block, const ComplexMatrix& h, double scale) {
  const RealMatrix e = embed_hermitian(h);
  for (std::size_t r = 0; r < e.rows(); ++r)
    for (std::size_t c = r; c < e.cols(); ++c)
      if (std::abs(e(r, c)) > 1e-300) p.add_entry(i, block, static_cast<int>(r), static_cast<int>(c), 0.5 * scale * e(r, c));
}

}  // namespace detail

/// Solves the Upsilon SDP pair for a rank-one rep in its ambient dimension d.
///
/// R_k lives on the complement of u_k, so it is parametrised as V_k R~_k V_k^*
/// with a slack W~_k = s_k I - R~_k >= 0; the reduced program has an interior
/// point while the original does not. Complex blocks go through the real
/// embedding, and traces of embedded blocks are halved to match. The dual
/// iterate is shifted by a small multiple of the identity and completed with
/// Q_k = V_k Y_k V_k^* + t_k P_k so that it is exactly feasible.
inline UpsilonSolution solve_upsilon(const OrthonormalRep& rep, const UpsilonSettings& settings = {}) {
  const std::size_t n = rep.size(), d = rep.dim();
  if (n == 0 || d == 0) throw Error(Errc::InvalidInput, "upsilon: empty representation");
  const std::size_t m = d - 1;

  std::vector<ComplexMatrix> v(n), p(n);
  for (std::size_t k = 0; k < n; ++k) {
    p[k] = detail::projector_matrix(rep.vectors[k]);
    if (m) v[k] = orthogonal_complement(rep.vectors[k]);
  }

  // Block layout per k: s_k, then R~_k and W~_k when m > 0.
  std::vector<int> sizes;
  std::vector<int> sblock(n), rblock(n), wblock(n);
  for (std::size_t k = 0; k < n; ++k) {
    sblock[k] = static_cast<int>(sizes.size());
    sizes.push_back(1);
    if (m) {
      rblock[k] = static_cast<int>(sizes.size());
      sizes.push_back(static_cast<int>(2 * m));
      wblock[k] = static_cast<int>(sizes.size());
      sizes.push_back(static_cast<int>(2 * m));
    }
  }
  SdpProblem prob(sizes);
  for (std::size_t k = 0; k < n; ++k) prob.add_objective(sblock[k], 0, 0, 1.0);

  const auto small_basis = hermitian_basis(m);
  std::vector<std::vector<int>> row_i(n);
  for (std::size_t k = 0; k < n && m; ++k)
    for (const auto& h : small_basis) {
      const int i = prob.add_constraint(0.0);
      row_i[k].push_back(i);
      detail::add_hermitian_term(prob, i, rblock[k], h, 1.0);
      detail::add_hermitian_term(prob, i, wblock[k], h, 1.0);
      prob.add_entry(i, sblock[k], 0, 0, -std::real(h.trace()));
    }
  const auto big_basis = hermitian_basis(d);
  std::vector<int> row_ii;
  for (const auto& g : big_basis) {
    const int i = prob.add_constraint(std::real(g.trace()));
    row_ii.push_back(i);
    for (std::size_t k = 0; k < n; ++k) {
      prob.add_entry(i, sblock[k], 0, 0, frobenius_inner(g, p[k]));
      if (m) detail::add_hermitian_term(prob, i, rblock[k], v[k].adjoint() * g * v[k], 1.0);
    }
  }

  SdpSettings ss;
  ss.gap_tol = std::min(1e-9, settings.gap_tol * 1e-3);
  ss.feas_tol = ss.gap_tol;
  ss.max_iter = settings.max_iter;
  ss.seed = settings.seed;
  const SdpResult res = solve_sdp(prob, ss);

  UpsilonSolution out;
  out.iterations = res.iterations;

  out.primal.s.resize(n);
  out.primal.r.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.primal.s[k] = res.x[sblock[k]](0, 0);
    if (m) {
      const HermitianMatrix rt = unembed_hermitian(res.x[rblock[k]]);
      out.primal.r.push_back(hermitize(v[k] * rt.matrix() * v[k].adjoint()));
    } else {
      out.primal.r.push_back(HermitianMatrix::zero(d));
    }
  }

  ComplexMatrix t(d, d);
  for (std::size_t a = 0; a < big_basis.size(); ++a) t += big_basis[a] * Complex(res.y[row_ii[a]]);
  std::vector<ComplexMatrix> y(n, ComplexMatrix(m, m));
  for (std::size_t k = 0; k < n && m; ++k) {
    for (std::size_t a = 0; a < small_basis.size(); ++a) y[k] += small_basis[a] * Complex(res.y[row_i[k][a]]);
    const double lmin = min_eigenvalue(hermitize(y[k]));
    if (lmin < 0.0) y[k] += ComplexMatrix::identity(m) * Complex(-lmin);
  }
  // Shift T so that every constraint holds with a little room.
  double shift = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double lhs = std::real((p[k] * t).trace()) - (m ? std::real(y[k].trace()) : 0.0);
    shift = std::max(shift, 1.0 - lhs);
    if (m) shift = std::max(shift, -min_eigenvalue(hermitize(y[k] + v[k].adjoint() * t * v[k])));
  }
  shift += 1e-10 * std::max(1.0, t.max_abs());
  t += ComplexMatrix::identity(d) * Complex(shift);

  out.dual.t = hermitize(t);
  out.dual.q.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!m) {
      out.dual.q.push_back(HermitianMatrix::zero(d));
      continue;
    }
    const ComplexMatrix mk = y[k] + v[k].adjoint() * t * v[k];
    const ComplexVector& u = rep.vectors[k];
    const ComplexVector b = matvec(v[k].adjoint(), matvec(t, u));
    // b^* M^{-1} b via the eigendecomposition of the (positive definite) M.
    const auto dec = eig(hermitize(mk));
    double quad = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      Complex proj = 0.0;
      for (std::size_t r = 0; r < m; ++r) proj += std::conj(dec.vectors(r, j)) * b[r];
      quad += std::norm(proj) / dec.values[j];
    }
    const double utu = std::real(inner<Complex>(u, matvec(t, u)));
    const double tk = std::max(0.0, quad - utu) * (1.0 + 1e-12);
    out.dual.q.push_back(hermitize(v[k] * y[k] * v[k].adjoint() + p[k] * Complex(tk)));
  }

  out.slackness = complementary_slackness(out.primal, out.dual);
  out.converged = res.converged && out.gap() <= settings.gap_tol;
  return out;
}

}  // namespace zecap
