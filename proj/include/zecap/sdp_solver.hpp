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

// Dense block-diagonal SDP by a primal-dual path-following interior point
// method (HKM direction, Mehrotra predictor-corrector, infeasible start).
//
//   primal  max <C, X>  s.t. <A_i, X> = b_i,  X psd
//   dual    min b^T y   s.t. Z = sum_i y_i A_i - C psd
//
// Blocks of size 1 act as nonnegative scalar variables.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "zecap/error.hpp"
#include "zecap/log.hpp"
#include "zecap/numerics.hpp"

namespace zecap {

struct SdpEntry {
  int block;
  int row;
  int col;
  double value;
};

class SdpProblem {
 public:
  explicit SdpProblem(std::vector<int> block_sizes) : sizes_(std::move(block_sizes)) {
    for (int s : sizes_) {
      if (s < 1) throw Error(Errc::InvalidInput, "sdp: block sizes must be positive");
      c_.emplace_back(s, s);
    }
  }

  /// Returns the index of a new constraint <A, X> = rhs.
  int add_constraint(double rhs) {
    a_.emplace_back();
    b_.push_back(rhs);
    return static_cast<int>(b_.size()) - 1;
  }

  /// Adds v to A_i(r, c) and, off the diagonal, to A_i(c, r).
  void add_entry(int i, int block, int r, int c, double v) {
    if (v == 0.0) return;
    a_[i].push_back({block, r, c, v});
    if (r != c) a_[i].push_back({block, c, r, v});
  }

  /// Adds v to C(r, c) and C(c, r).
  void add_objective(int block, int r, int c, double v) {
    c_[block](r, c) += v;
    if (r != c) c_[block](c, r) += v;
  }

  const std::vector<int>& block_sizes() const noexcept { return sizes_; }
  std::size_t constraint_count() const noexcept { return b_.size(); }
  const std::vector<SdpEntry>& constraint(std::size_t i) const { return a_[i]; }
  const RealVector& rhs() const noexcept { return b_; }
  const RealMatrix& objective(std::size_t block) const { return c_[block]; }

 private:
  std::vector<int> sizes_;
  std::vector<RealMatrix> c_;
  std::vector<std::vector<SdpEntry>> a_;
  RealVector b_;
};

struct SdpSettings {
  double gap_tol = 1e-9;   // relative gap |p - d| / (1 + |p| + |d|)
  double feas_tol = 1e-9;  // relative primal and dual infeasibility
  int max_iter = 200;
  double step_fraction = 0.98;
  std::uint64_t seed = 0;  // 0: deterministic identity start
};

struct SdpResult {
  std::vector<RealMatrix> x;
  std::vector<RealMatrix> z;
  RealVector y;
  double primal_objective = 0.0;
  double dual_objective = 0.0;
  double relative_gap = 0.0;
  double primal_infeasibility = 0.0;
  double dual_infeasibility = 0.0;
  int iterations = 0;
  bool converged = false;
};

namespace detail {

using Blocks = std::vector<RealMatrix>;

inline double blocks_inner(const Blocks& a, const Blocks& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += frobenius_inner(a[k], b[k]);
  return s;
}

inline void symmetrize(RealMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      const double avg = 0.5 * (m(i, j) + m(j, i));
      m(i, j) = avg;
      m(j, i) = avg;
    }
}

class SdpEngine {
 public:
  SdpEngine(const SdpProblem& p, const SdpSettings& s) : p_(p), s_(s), m_(p.constraint_count()) {
    nb_ = p.block_sizes().size();
    by_block_.resize(nb_);
    touches_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      std::vector<char> seen(nb_, 0);
      for (const auto& e : p.constraint(i)) {
        by_block_[e.block].push_back({static_cast<int>(i), e.row, e.col, e.value});
        if (!seen[e.block]) {
          seen[e.block] = 1;
          touches_[i].push_back(e.block);
        }
      }
    }
    dim_ = 0;
    for (int sz : p.block_sizes()) dim_ += sz;
  }

  SdpResult run() {
    init();
    SdpResult best;
    double best_score = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter <= s_.max_iter; ++iter) {
      const RealVector rp = primal_residual();
      const Blocks rd = dual_residual();
      const double pobj = blocks_inner(c_, x_);
      double dobj = 0.0;
      for (std::size_t i = 0; i < m_; ++i) dobj += p_.rhs()[i] * y_[i];
      const double pinf = norm(rp) / (1.0 + norm(p_.rhs()));
      const double dinf = std::sqrt(blocks_inner(rd, rd)) / (1.0 + cnorm_);
      const double gap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
      const double score = std::max({gap / s_.gap_tol, pinf / s_.feas_tol, dinf / s_.feas_tol});
      log_debug("sdp iter " + std::to_string(iter) + " pobj " + std::to_string(pobj) + " dobj " +
                std::to_string(dobj) + " gap " + std::to_string(gap) + " pinf " + std::to_string(pinf) +
                " dinf " + std::to_string(dinf));
      if (score < best_score) {
        best_score = score;
        best = snapshot(pobj, dobj, gap, pinf, dinf, iter);
      }
      if (score <= 1.0) {
        best.converged = true;
        return best;
      }
      if (iter == s_.max_iter) break;
      if (!step(rp, rd)) break;
    }
    return best;
  }

 private:
  static double norm(const RealVector& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
  }

  void init() {
    const auto& sizes = p_.block_sizes();
    double anorm_max = 0.0, ratio_max = 0.0;
    for (std::size_t i = 0; i < m_; ++i) {
      double f = 0.0;
      for (const auto& e : p_.constraint(i)) f += e.value * e.value;
      f = std::sqrt(f);
      anorm_max = std::max(anorm_max, f);
      ratio_max = std::max(ratio_max, (1.0 + std::abs(p_.rhs()[i])) / (1.0 + f));
    }
    cnorm_ = 0.0;
    c_.clear();
    for (std::size_t k = 0; k < nb_; ++k) {
      c_.push_back(p_.objective(k));
      cnorm_ += c_.back().frobenius() * c_.back().frobenius();
    }
    cnorm_ = std::sqrt(cnorm_);
    const double rn = std::sqrt(static_cast<double>(dim_));
    const double xi = std::max({10.0, rn, static_cast<double>(dim_) * ratio_max});
    const double eta = std::max({10.0, rn, anorm_max, cnorm_});

    x_.clear();
    z_.clear();
    std::mt19937_64 rng(s_.seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int sz : sizes) {
      RealMatrix xb = RealMatrix::identity(sz) * xi;
      RealMatrix zb = RealMatrix::identity(sz) * eta;
      if (s_.seed != 0) {
        // Small symmetric perturbation; diagonal dominance keeps both PD.
        const double amp = 0.1 / std::max(1, sz);
        for (int i = 0; i < sz; ++i)
          for (int j = i; j < sz; ++j) {
            const double px = amp * unif(rng), pz = amp * unif(rng);
            xb(i, j) += xi * px;
            zb(i, j) += eta * pz;
            if (i != j) {
              xb(j, i) += xi * px;
              zb(j, i) += eta * pz;
            }
          }
      }
      x_.push_back(std::move(xb));
      z_.push_back(std::move(zb));
    }
    y_.assign(m_, 0.0);
  }

  SdpResult snapshot(double pobj, double dobj, double gap, double pinf, double dinf, int iter) const {
    SdpResult r;
    r.x = x_;
    r.z = z_;
    r.y = y_;
    r.primal_objective = pobj;
    r.dual_objective = dobj;
    r.relative_gap = gap;
    r.primal_infeasibility = pinf;
    r.dual_infeasibility = dinf;
    r.iterations = iter;
    return r;
  }

  double apply_a(std::size_t i, const Blocks& m) const {
    double s = 0.0;
    for (const auto& e : p_.constraint(i)) s += e.value * m[e.block](e.row, e.col);
    return s;
  }

  Blocks apply_at(const RealVector& y) const {
    Blocks out;
    for (int sz : p_.block_sizes()) out.emplace_back(sz, sz);
    for (std::size_t i = 0; i < m_; ++i) {
      if (y[i] == 0.0) continue;
      for (const auto& e : p_.constraint(i)) out[e.block](e.row, e.col) += y[i] * e.value;
    }
    return out;
  }

  RealVector primal_residual() const {
    RealVector r(m_);
    for (std::size_t i = 0; i < m_; ++i) r[i] = p_.rhs()[i] - apply_a(i, x_);
    return r;
  }

  // A^T y - Z - C; zero at dual feasibility.
  Blocks dual_residual() const {
    Blocks r = apply_at(y_);
    for (std::size_t k = 0; k < nb_; ++k) r[k] -= z_[k] + c_[k];
    return r;
  }

  // M_ij = <A_i, X A_j Z^-1>.
  RealMatrix schur(const Blocks& zinv) const {
    RealMatrix m(m_, m_);
    for (std::size_t j = 0; j < m_; ++j) {
      for (int b : touches_[j]) {
        const RealMatrix& xb = x_[b];
        const RealMatrix& zb = zinv[b];
        const std::size_t sz = xb.rows();
        std::size_t nnz = 0;
        for (const auto& e : p_.constraint(j)) nnz += e.block == b;
        RealMatrix g(sz, sz);
        if (nnz * sz * sz <= sz * sz * sz + nnz * sz) {
          for (const auto& e : p_.constraint(j)) {
            if (e.block != b) continue;
            for (std::size_t r = 0; r < sz; ++r) {
              const double xr = xb(r, e.row) * e.value;
              if (xr == 0.0) continue;
              const auto zrow = zb.row(e.col);
              auto grow = g.row(r);
              for (std::size_t c = 0; c < sz; ++c) grow[c] += xr * zrow[c];
            }
          }
        } else {
          RealMatrix az(sz, sz);
          for (const auto& e : p_.constraint(j)) {
            if (e.block != b) continue;
            const auto zrow = zb.row(e.col);
            auto arow = az.row(e.row);
            for (std::size_t c = 0; c < sz; ++c) arow[c] += e.value * zrow[c];
          }
          g = xb * az;
        }
        for (const auto& e : by_block_[b]) m(e.block, j) += e.value * g(e.row, e.col);
      }
    }
    symmetrize(m);
    return m;
  }

  // Largest alpha <= 1 keeping M + alpha * D psd, scaled by the step fraction.
  double max_step(const Blocks& m, const Blocks& d) const {
    double alpha = 1.0;
    for (std::size_t k = 0; k < nb_; ++k) {
      const std::size_t sz = m[k].rows();
      double lmin;
      if (sz == 1) {
        lmin = d[k](0, 0) / m[k](0, 0);
      } else {
        const auto l = cholesky(m[k]);
        if (!l) return 0.0;
        const RealMatrix linv = lower_inverse(*l);
        RealMatrix t = linv * d[k] * linv.transpose();
        symmetrize(t);
        lmin = min_eigenvalue(SymmetricMatrix(t));
      }
      if (lmin < 0.0) alpha = std::min(alpha, -s_.step_fraction / lmin);
    }
    return alpha;
  }

  static RealMatrix lower_inverse(const RealMatrix& l) {
    const std::size_t n = l.rows();
    RealMatrix inv(n, n);
    for (std::size_t c = 0; c < n; ++c) {
      inv(c, c) = 1.0 / l(c, c);
      for (std::size_t r = c + 1; r < n; ++r) {
        double s = 0.0;
        for (std::size_t k = c; k < r; ++k) s -= l(r, k) * inv(k, c);
        inv(r, c) = s / l(r, r);
      }
    }
    return inv;
  }

  // Direction for a given target sigma*mu and optional second-order term.
  void direction(const Blocks& zinv, const RealMatrix& cholm, const RealVector& rp, const Blocks& rd, double target,
                 const Blocks* corr, RealVector& dy, Blocks& dx, Blocks& dz) const {
    Blocks r(nb_);
    for (std::size_t k = 0; k < nb_; ++k) {
      r[k] = zinv[k] * target - x_[k] - x_[k] * rd[k] * zinv[k];
      if (corr) r[k] -= (*corr)[k];
    }
    RealVector rhs(m_);
    for (std::size_t i = 0; i < m_; ++i) rhs[i] = apply_a(i, r) - rp[i];
    dy = cholesky_solve(cholm, rhs);
    dz = apply_at(dy);
    dx.assign(nb_, RealMatrix());
    for (std::size_t k = 0; k < nb_; ++k) {
      dz[k] += rd[k];
      dx[k] = r[k] + x_[k] * rd[k] * zinv[k] - x_[k] * dz[k] * zinv[k];
      symmetrize(dx[k]);
      symmetrize(dz[k]);
    }
  }

  bool step(const RealVector& rp, const Blocks& rd) {
    Blocks zinv(nb_);
    for (std::size_t k = 0; k < nb_; ++k) {
      const auto l = cholesky(z_[k]);
      if (!l) return false;
      zinv[k] = cholesky_inverse(*l);
    }
    const double mu = blocks_inner(x_, z_) / static_cast<double>(dim_);

    RealMatrix m = schur(zinv);
    RealMatrix cholm;
    {
      double diag = 0.0;
      for (std::size_t i = 0; i < m_; ++i) diag = std::max(diag, std::abs(m(i, i)));
      double reg = 0.0;
      bool ok = false;
      for (int attempt = 0; attempt < 12 && !ok; ++attempt) {
        RealMatrix mm = m;
        for (std::size_t i = 0; i < m_; ++i) mm(i, i) += reg;
        if (auto l = cholesky(mm)) {
          cholm = std::move(*l);
          ok = true;
        }
        reg = reg == 0.0 ? 1e-14 * std::max(1.0, diag) : reg * 100.0;
      }
      if (!ok && m_ > 0) return false;
    }

    RealVector dy;
    Blocks dx, dz;
    direction(zinv, cholm, rp, rd, 0.0, nullptr, dy, dx, dz);
    const double ap = max_step(x_, dx), ad = max_step(z_, dz);
    Blocks xa = x_, za = z_;
    for (std::size_t k = 0; k < nb_; ++k) {
      xa[k] += dx[k] * ap;
      za[k] += dz[k] * ad;
    }
    const double mu_aff = blocks_inner(xa, za) / static_cast<double>(dim_);
    double sigma = std::pow(std::max(0.0, mu_aff) / mu, 3);
    sigma = std::clamp(sigma, 0.0, 1.0);

    Blocks corr(nb_);
    for (std::size_t k = 0; k < nb_; ++k) corr[k] = dx[k] * dz[k] * zinv[k];
    direction(zinv, cholm, rp, rd, sigma * mu, &corr, dy, dx, dz);
    const double alpha_p = max_step(x_, dx), alpha_d = max_step(z_, dz);
    if (alpha_p <= 0.0 && alpha_d <= 0.0) return false;
    for (std::size_t k = 0; k < nb_; ++k) {
      x_[k] += dx[k] * alpha_p;
      z_[k] += dz[k] * alpha_d;
    }
    for (std::size_t i = 0; i < m_; ++i) y_[i] += alpha_d * dy[i];
    return true;
  }

  const SdpProblem& p_;
  SdpSettings s_;
  std::size_t m_;
  std::size_t nb_ = 0;
  std::size_t dim_ = 0;
  double cnorm_ = 0.0;
  std::vector<std::vector<SdpEntry>> by_block_;  // block field reused as constraint index
  std::vector<std::vector<int>> touches_;
  Blocks c_, x_, z_;
  RealVector y_;
};

}  // namespace detail

inline SdpResult solve_sdp(const SdpProblem& problem, const SdpSettings& settings = {}) {
  if (settings.max_iter < 0) throw Error(Errc::InvalidInput, "sdp: max_iter must be >= 0");
  detail::SdpEngine engine(problem, settings);
  return engine.run();
}

}  // namespace zecap
