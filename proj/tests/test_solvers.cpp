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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "zecap/graph.hpp"
#include "zecap/sdp_solver.hpp"
#include "zecap/spectra.hpp"
#include "zecap/theta.hpp"
#include "zecap/upsilon.hpp"

using namespace zecap;

namespace {

Graph from_adj(const oracle::Adj& a) {
  return Graph::from_predicate(static_cast<int>(a.size()), [&](int i, int j) { return static_cast<bool>(a[i][j]); });
}

}  // namespace

// -- generic SDP -------------------------------------------------------------

TEST(Sdp, DiagonalBlocksActAsLp) {
  // max x + 2y  s.t. x + y = 1, x, y >= 0
  SdpProblem p({1, 1});
  const int c = p.add_constraint(1.0);
  p.add_entry(c, 0, 0, 0, 1.0);
  p.add_entry(c, 1, 0, 0, 1.0);
  p.add_objective(0, 0, 0, 1.0);
  p.add_objective(1, 0, 0, 2.0);
  const auto r = solve_sdp(p);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.primal_objective, 2.0, 1e-7);
  EXPECT_NEAR(r.dual_objective, 2.0, 1e-7);
  EXPECT_NEAR(r.x[1](0, 0), 1.0, 1e-6);
}

TEST(SdpProperty, TraceOneGivesLargestEigenvalue) {
  std::mt19937_64 rng(61);
  std::normal_distribution<double> g;
  for (int t = 0; t < 30; ++t) {
    const double a = g(rng), b = g(rng), d = g(rng);
    SdpProblem p({2});
    const int c = p.add_constraint(1.0);
    p.add_entry(c, 0, 0, 0, 1.0);
    p.add_entry(c, 0, 1, 1, 1.0);
    p.add_objective(0, 0, 0, a);
    p.add_objective(0, 0, 1, b);
    p.add_objective(0, 1, 1, d);
    SdpSettings s;
    s.seed = t;
    const auto r = solve_sdp(p, s);
    const double lmax = (a + d) / 2 + std::sqrt((a - d) * (a - d) / 4 + b * b);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.primal_objective, lmax, 1e-6 * (1 + std::abs(lmax)));
    EXPECT_NEAR(r.dual_objective, lmax, 1e-6 * (1 + std::abs(lmax)));
  }
}

// -- theta -------------------------------------------------------------------

TEST(Theta, KnownValues) {
  EXPECT_NEAR(solve_theta(cycle_graph(7)).theta(), oracle::kThetaC7, 1e-8);
  EXPECT_NEAR(solve_theta(mobius_ladder(8)).theta(), oracle::kThetaM8, 1e-8);
  EXPECT_NEAR(solve_theta(complete_graph(5)).theta(), 1.0, 1e-8);
  EXPECT_NEAR(solve_theta(empty_graph(4)).theta(), 4.0, 1e-8);
  EXPECT_NEAR(solve_theta(empty_graph(1)).theta(), 1.0, 1e-8);
  EXPECT_NEAR(solve_theta(circulant(17, {1, 4, 13, 16})).theta(), oracle::kThetaZ17Q13, 1e-8);
  EXPECT_NEAR(solve_theta(disjoint_union(cycle_graph(5), empty_graph(2))).theta(), oracle::kThetaC5PlusTwo, 1e-8);
  for (Int p : {5, 13, 17, 29, 37}) EXPECT_NEAR(solve_theta(paley(p)).theta(), std::sqrt(double(p)), 1e-8) << p;
}

TEST(Theta, CyclesMatchClosedForm) {
  for (int n = 3; n <= 21; ++n) {
    const auto th = solve_theta(cycle_graph(n));
    const double want = n % 2 ? oracle::cycle_theta(n) : n / 2.0;
    EXPECT_NEAR(th.theta(), want, 1e-8) << n;
    if (n % 2) {
      EXPECT_NEAR(cycle_theta(n), want, 1e-12);
    }
  }
}

TEST(Theta, IterationLimitReportsBounds) {
  ThetaSettings s;
  s.max_iter = 2;
  try {
    solve_theta(cycle_graph(7), s);
    FAIL() << "expected IterationLimit";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::IterationLimit);
  }
}

TEST(ThetaFormula, EdgeTransitiveCirculants) {
  EXPECT_NEAR(theta_formula_edge_transitive(17, {1, 4, 13, 16}), oracle::kThetaZ17Q13, 1e-10);
  EXPECT_NEAR(theta_formula_edge_transitive(7, {1, 6}), oracle::kThetaC7, 1e-10);
  EXPECT_THROW(theta_formula_edge_transitive(9, {1, 2, 7, 8}), Error);
  EXPECT_THROW(theta_formula_edge_transitive(31, {1, 30}), Error);
  EXPECT_NEAR(theta_formula_edge_transitive(31, {1, 30}, true), oracle::cycle_theta(31), 1e-10);
}

TEST(ThetaProperty, CertificatesAndSandwich) {
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<int> order(2, 10);
  std::uniform_real_distribution<double> p(0.1, 0.9);
  for (int t = 0; t < 40; ++t) {
    const auto adj = oracle::random_adj(rng, order(rng), p(rng));
    const auto g = from_adj(adj);
    const int n = g.order();
    const auto th = solve_theta(g);
    const auto thc = solve_theta(complement(g));
    EXPECT_LE(th.theta_lower, th.theta_upper + 1e-12);
    EXPECT_LT(th.gap(), 1e-6);
    EXPECT_GE(th.theta_lower, oracle::alpha(adj) - 1e-8);
    EXPECT_GE(th.theta() * thc.theta(), n - 1e-6);
    // both repaired iterates are exact certificates
    EXPECT_TRUE(is_lovasz_matrix(g, th.a_opt));
    EXPECT_NEAR(max_eigenvalue(th.a_opt), th.theta_upper, 1e-9);
    EXPECT_NEAR(th.x_opt.trace(), 1.0, 1e-12);
    EXPECT_GE(min_eigenvalue(th.x_opt), -1e-12);
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        sum += th.x_opt(i, j);
        if (g.adjacent(i, j)) {
          EXPECT_EQ(th.x_opt(i, j), 0.0);
        }
      }
    EXPECT_NEAR(sum, th.theta_lower, 1e-9);
  }
}

TEST(ThetaProperty, VertexTransitiveProductIsN) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 15; ++t) {
    const int n = 5 + static_cast<int>(rng() % 9);
    std::vector<Int> c;
    for (int j = 1; j <= n / 2; ++j)
      if (rng() & 1) {
        c.push_back(j);
        if (2 * j != n) c.push_back(n - j);
      }
    if (c.empty() || static_cast<int>(c.size()) == n - 1) continue;
    const auto g = circulant(n, c);
    EXPECT_NEAR(solve_theta(g).theta() * solve_theta(complement(g)).theta(), n, 1e-6) << g.label();
  }
}

// -- upsilon -----------------------------------------------------------------

TEST(Embedding, RoundTripProperty) {
  std::mt19937_64 rng(73);
  std::normal_distribution<double> g;
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + t % 5;
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        h(i, j) = Complex(g(rng), i == j ? 0.0 : g(rng));
        h(j, i) = std::conj(h(i, j));
      }
    const auto e = embed_hermitian(h);
    EXPECT_LT((unembed_hermitian(e).matrix() - h).max_abs(), 1e-14);
    // spectrum doubles
    EXPECT_NEAR(min_eigenvalue(hermitize(e)), min_eigenvalue(HermitianMatrix(h)), 1e-10);
  }
}

TEST(Embedding, HermitianBasisOrthonormal) {
  const auto basis = hermitian_basis(3);
  ASSERT_EQ(basis.size(), 9u);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b)
      EXPECT_NEAR(std::real((basis[a].adjoint() * basis[b]).trace()), a == b ? 1.0 : 0.0, 1e-14);
}

TEST(Embedding, OrthogonalComplement) {
  const ComplexVector u{Complex(0.5, 0.5), Complex(0.0, -0.5), Complex(0.5, 0.0)};
  const auto v = orthogonal_complement(u);
  ASSERT_EQ(v.cols(), 2u);
  EXPECT_LT((v.adjoint() * v - ComplexMatrix::identity(2)).max_abs(), 1e-14);
  for (std::size_t c = 0; c < 2; ++c) EXPECT_LT(std::abs(inner<Complex>(u, v.column(c))), 1e-14);
}

TEST(Upsilon, HandleDualIsFeasible) {
  const auto rep = theorem1_representation(7, {1, 6});
  const auto d = verify_upsilon_dual(rep, handle_dual(rep), 1e-9);
  EXPECT_TRUE(d.ok());
  EXPECT_NEAR(d.value, oracle::kThetaC7, 1e-9);
}

TEST(Upsilon, IndependentSetPrimal) {
  const auto g = cycle_graph(5);
  const auto rep = theorem1_representation(5, {1, 4});
  const auto prim = independent_set_primal(g, rep, {0, 2});
  const auto r = verify_upsilon_primal(rep, prim, 1e-9);
  EXPECT_TRUE(r.ok());
  EXPECT_DOUBLE_EQ(prim.value(), 2.0);
  EXPECT_THROW(independent_set_primal(g, rep, {0, 1}), Error);
}

TEST(Upsilon, SolverOnC5) {
  const auto rep = theorem1_representation(5, {1, 4});
  const auto sol = solve_upsilon(rep);
  EXPECT_TRUE(sol.converged);
  EXPECT_NEAR(sol.primal.value(), std::sqrt(5.0), 1e-6);
  EXPECT_NEAR(sol.dual.value(), std::sqrt(5.0), 1e-6);
  EXPECT_GE(sol.gap(), -1e-9);
  EXPECT_TRUE(verify_upsilon_primal(rep, sol.primal, 1e-7).ok());
  EXPECT_TRUE(verify_upsilon_dual(rep, sol.dual, 1e-7).ok());
}

TEST(Upsilon, SolverSeedsAgree) {
  const auto rep = theorem1_representation(7, {1, 6});
  UpsilonSettings a, b;
  b.seed = 99;
  const auto sa = solve_upsilon(rep, a), sb = solve_upsilon(rep, b);
  EXPECT_NEAR(sa.primal.value(), sb.primal.value(), 1e-5);
  EXPECT_NEAR(sa.primal.value(), oracle::kThetaC7, 1e-5);
}

TEST(Upsilon, SingleVertex) {
  const auto g = empty_graph(1);
  const auto th = solve_theta(g);
  const auto rep = general_representation(g, th.a_opt, th.theta_upper);
  const auto sol = solve_upsilon(rep);
  EXPECT_NEAR(sol.primal.value(), 1.0, 1e-6);
}
