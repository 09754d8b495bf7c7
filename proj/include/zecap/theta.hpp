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

// Lovasz theta: certified two-sided bounds from the SDP pair
//   max <J, X>  s.t. tr X = 1, X_ij = 0 on edges, X psd
//   min lambda_max(A)  over A = 1 on the diagonal and non-edges.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "zecap/error.hpp"
#include "zecap/graph.hpp"
#include "zecap/numerics.hpp"
#include "zecap/sdp_solver.hpp"
#include "zecap/spectra.hpp"

namespace zecap {

struct ThetaSolution {
  double theta_lower = 0.0;
  double theta_upper = 0.0;
  SymmetricMatrix a_opt;  // Lovasz matrix with lambda_max = theta_upper
  SymmetricMatrix x_opt;  // psd, trace 1, zero on edges, <J, X> = theta_lower
  int iterations = 0;
  double primal_infeasibility = 0.0;
  double dual_infeasibility = 0.0;
  bool converged = false;

  double theta() const { return 0.5 * (theta_lower + theta_upper); }
  double gap() const { return theta_upper - theta_lower; }
};

struct ThetaSettings {
  double gap_tol = 1e-6;
  int max_iter = 200;
  std::uint64_t seed = 0;
};

/// Solves the theta SDP and repairs both iterates into exact certificates.
/// Throws IterationLimit when the certified gap exceeds gap_tol; the error
/// message carries the bounds that were reached.
inline ThetaSolution solve_theta(const Graph& g, const ThetaSettings& settings = {}) {
  const int n = g.order();
  if (n < 1) throw Error(Errc::InvalidInput, "theta: graph has no vertices");
  const auto edges = g.edges();

  SdpProblem prob({n});
  const int trace_row = prob.add_constraint(1.0);
  for (int i = 0; i < n; ++i) prob.add_entry(trace_row, 0, i, i, 1.0);
  const double w = std::numbers::sqrt2 / 2.0;  // unit Frobenius norm per edge constraint
  for (const auto& [i, j] : edges) prob.add_entry(prob.add_constraint(0.0), 0, i, j, w);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) prob.add_objective(0, i, j, 1.0);

  SdpSettings ss;
  ss.gap_tol = std::min(1e-12, settings.gap_tol * 1e-2);
  ss.feas_tol = ss.gap_tol;
  ss.max_iter = settings.max_iter;
  ss.seed = settings.seed;
  const SdpResult r = solve_sdp(prob, ss);

  ThetaSolution out;
  out.iterations = r.iterations;
  out.primal_infeasibility = r.primal_infeasibility;
  out.dual_infeasibility = r.dual_infeasibility;

  // Upper bound: the Lovasz matrix implied by the edge multipliers.
  RealMatrix a(n, n, 1.0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [i, j] = edges[e];
    a(i, j) = a(j, i) = 1.0 - w * r.y[e + 1];
  }
  out.a_opt = SymmetricMatrix(a);
  out.theta_upper = max_eigenvalue(out.a_opt);

  // Lower bound: zero the edge entries, shift into the cone, renormalise.
  RealMatrix x = r.x[0];
  detail::symmetrize(x);
  for (const auto& [i, j] : edges) x(i, j) = x(j, i) = 0.0;
  const double lmin = min_eigenvalue(SymmetricMatrix(x));
  if (lmin < 0.0)
    for (int i = 0; i < n; ++i) x(i, i) -= lmin;
  const double tr = x.trace();
  x *= 1.0 / tr;
  out.x_opt = SymmetricMatrix(x);
  double sum = 0.0;
  for (double v : x.data()) sum += v;
  out.theta_lower = sum;

  out.converged = out.gap() <= settings.gap_tol;
  if (!out.converged)
    throw Error(Errc::IterationLimit, "theta: certified gap " + std::to_string(out.gap()) + " after " +
                                          std::to_string(r.iterations) + " iterations, bounds [" +
                                          std::to_string(out.theta_lower) + ", " + std::to_string(out.theta_upper) + "]",
                out.gap());
  return out;
}

/// -n l_min / (l_max - l_min), valid for edge-transitive circulants. The
/// edge-transitivity is checked by search for n <= 24 unless the caller
/// asserts it.
inline double theta_formula_edge_transitive(const ConnectionSet& c, bool assume_edge_transitive = false) {
  if (c.size() == 0) return static_cast<double>(c.modulus());
  if (!assume_edge_transitive) {
    if (c.modulus() > 24)
      throw Error(Errc::PreconditionFailed, "edge-transitivity can only be checked for n <= 24; assert it explicitly");
    if (!is_edge_transitive(circulant(c))) throw Error(Errc::NotEdgeTransitive, "circulant graph is not edge-transitive");
  }
  const auto s = circulant_spectrum(c);
  return -static_cast<double>(s.n) * s.lambda_min / (s.lambda_max - s.lambda_min);
}

inline double theta_formula_edge_transitive(Int n, std::vector<Int> c, bool assume_edge_transitive = false) {
  return theta_formula_edge_transitive(ConnectionSet(n, std::move(c)), assume_edge_transitive);
}

/// n cos(pi/n) / (1 + cos(pi/n)) for odd cycles.
inline double cycle_theta(int n) {
  const double c = std::cos(std::numbers::pi / n);
  return n * c / (1.0 + c);
}

}  // namespace zecap
