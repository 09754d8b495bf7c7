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

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "zecap/graph.hpp"
#include "zecap/spectra.hpp"
#include "zecap/theta.hpp"

using namespace zecap;

namespace {

Graph from_adj(const oracle::Adj& a) {
  return Graph::from_predicate(static_cast<int>(a.size()), [&](int i, int j) { return static_cast<bool>(a[i][j]); });
}

}  // namespace

// -- constructors ------------------------------------------------------------

TEST(Graphs, FamiliesHaveExpectedShape) {
  EXPECT_EQ(cycle_graph(5).edge_count(), 5u);
  EXPECT_EQ(cycle_graph(5).regularity(), 2);
  EXPECT_EQ(paley(13).edge_count(), 39u);
  EXPECT_EQ(paley(13).regularity(), 6);
  EXPECT_EQ(paley(17).edge_count(), 17u * 16 / 4);
  EXPECT_EQ(mobius_ladder(8).regularity(), 3);
  EXPECT_EQ(complete_graph(5).edge_count(), 10u);
  EXPECT_EQ(empty_graph(4).edge_count(), 0u);
  EXPECT_EQ(cubic_residue_graph(13).regularity(), 4);
  EXPECT_EQ(circulant(17, {1, 4, 13, 16}).regularity(), 4);
}

TEST(Graphs, InvalidInputsThrow) {
  EXPECT_THROW(ConnectionSet(7, {1, 2}), Error);
  EXPECT_THROW(paley(7), Error);
  EXPECT_THROW(paley(15), Error);
  EXPECT_THROW(cubic_residue_graph(11), Error);
}

TEST(Graphs, PaleyIsSelfComplementary) {
  // x -> b x with b a nonresidue maps QR_p onto its complement
  const Int p = 13;
  const auto g = paley(p);
  std::vector<int> perm(p);
  for (int x = 0; x < p; ++x) perm[x] = static_cast<int>(x * 2 % p);
  EXPECT_TRUE(is_isomorphism(g, complement(g), perm));
}

TEST(Graphs, CirculantRecovery) {
  const auto c = circulant_connection_set(paley(13));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->elements(), (std::vector<Int>{1, 3, 4, 9, 10, 12}));
  EXPECT_FALSE(circulant_connection_set(disjoint_union(cycle_graph(5), empty_graph(2))));
}

TEST(StrongProductProperty, DegreesAndCommutativity) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> order(1, 6);
  std::uniform_real_distribution<double> p(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    const auto g = from_adj(oracle::random_adj(rng, order(rng), p(rng)));
    const auto h = from_adj(oracle::random_adj(rng, order(rng), p(rng)));
    const auto gh = strong_product(g, h), hg = strong_product(h, g);
    ASSERT_EQ(gh.order(), g.order() * h.order());
    for (int v = 0; v < g.order(); ++v)
      for (int w = 0; w < h.order(); ++w)
        EXPECT_EQ(gh.degree(v * h.order() + w), (g.degree(v) + 1) * (h.degree(w) + 1) - 1);
    std::vector<int> swap(gh.order());
    for (int v = 0; v < g.order(); ++v)
      for (int w = 0; w < h.order(); ++w) swap[v * h.order() + w] = w * g.order() + v;
    EXPECT_TRUE(is_isomorphism(gh, hg, swap));
    EXPECT_TRUE(complement(complement(g)).same_edges(g));
  }
}

// -- independence ----------------------------------------------------------

TEST(Independence, KnownValues) {
  EXPECT_EQ(independence_number(cycle_graph(5)).alpha, 2);
  EXPECT_EQ(independence_number(cycle_graph(7)).alpha, 3);
  EXPECT_EQ(independence_number(paley(13)).alpha, 3);
  EXPECT_EQ(independence_number(complete_graph(6)).alpha, 1);
  EXPECT_EQ(independence_number(empty_graph(6)).alpha, 6);
  EXPECT_EQ(independence_number(mobius_ladder(8)).alpha, 3);
}

TEST(Independence, FiveSetInC5Squared) {
  const auto g = strong_product(cycle_graph(5), cycle_graph(5));
  EXPECT_TRUE(is_independent_set(g, {0, 7, 14, 16, 23}));
  EXPECT_FALSE(is_independent_set(g, {0, 1}));
  const auto r = independence_number(g);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.alpha, 5);
  EXPECT_TRUE(is_independent_set(g, r.witness));
}

TEST(Independence, BudgetGivesBound) {
  const auto g = strong_product(paley(13), paley(13));
  const auto r = independence_number(g, 10);
  EXPECT_FALSE(r.exact);
  EXPECT_TRUE(is_independent_set(g, r.witness));
  EXPECT_EQ(static_cast<int>(r.witness.size()), r.alpha);
}

TEST(IndependenceProperty, MatchesBruteForce) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> order(1, 14);
  std::uniform_real_distribution<double> p(0.05, 0.9);
  for (int t = 0; t < 150; ++t) {
    const auto adj = oracle::random_adj(rng, order(rng), p(rng));
    const auto g = from_adj(adj);
    const auto r = independence_number(g);
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(r.alpha, oracle::alpha(adj));
    EXPECT_TRUE(is_independent_set(g, r.witness));
  }
}

// -- automorphisms -----------------------------------------------------------

TEST(Automorphisms, EdgeTransitivity) {
  EXPECT_TRUE(is_edge_transitive(cycle_graph(7)));
  EXPECT_TRUE(is_edge_transitive(paley(13)));
  EXPECT_TRUE(is_edge_transitive(circulant(17, {1, 4, 13, 16})));
  EXPECT_FALSE(is_edge_transitive(mobius_ladder(8)));
  EXPECT_FALSE(is_edge_transitive(circulant(9, {1, 2, 7, 8})));
  EXPECT_THROW(edge_orbits(cycle_graph(25)), Error);
}

TEST(Automorphisms, PrescribedImage) {
  const auto g = paley(13);
  const auto a = find_automorphism(g, {{0, 5}});
  ASSERT_TRUE(a);
  EXPECT_EQ((*a)[0], 5);
  EXPECT_TRUE(is_isomorphism(g, g, *a));
  // 0 has degree 2 in a path-plus-isolated graph, vertex 3 has degree 0
  const Graph h(4, {{0, 1}, {1, 2}}, "path");
  EXPECT_FALSE(find_automorphism(h, {{1, 3}}));
}

// -- spectra -----------------------------------------------------------------

TEST(Spectrum, MatchesDirectSum) {
  std::mt19937_64 rng(47);
  for (int n = 3; n <= 30; ++n) {
    std::vector<Int> c;
    std::vector<int> ci;
    for (int j = 1; j <= n / 2; ++j)
      if (rng() & 1) {
        c.push_back(j);
        ci.push_back(j);
        if (2 * j != n) {
          c.push_back(n - j);
          ci.push_back(n - j);
        }
      }
    if (c.empty()) continue;
    const auto s = circulant_spectrum(n, c);
    const auto want = oracle::circulant_eigenvalues(n, ci);
    for (int k = 0; k < n; ++k) EXPECT_NEAR(s.lambdas[k], want[k], 1e-12);
    EXPECT_LT(s.imaginary_residue, 1e-12);
  }
}

TEST(Spectrum, GapSnap) {
  EXPECT_EQ(gap_above_min(1.0 + 1e-12, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(gap_above_min(1.5, 1.0), 0.5);
}

TEST(DFT, ConjugationIsUnitaryAction) {
  const DFTUnitary u(7);
  std::mt19937_64 rng(53);
  std::normal_distribution<double> g;
  ComplexMatrix m(7, 7);
  for (auto& v : m.data()) v = Complex(g(rng), g(rng));
  for (int k = -3; k <= 9; ++k) {
    const auto uk = u.power(k);
    EXPECT_LT((u.conjugate(k, m) - uk * m * uk.adjoint()).max_abs(), 1e-12);
  }
  EXPECT_LT((u.power(7) - ComplexMatrix::identity(7)).max_abs(), 1e-12);
}

TEST(CirculantRep, ValueAndOrthogonality) {
  const auto rep = theorem1_representation(7, {1, 6});
  EXPECT_NEAR(rep.eta, oracle::kThetaC7, 1e-9);
  EXPECT_TRUE(check_orthonormal_rep(cycle_graph(7), rep).ok());
  EXPECT_NEAR(representation_value(rep), oracle::kThetaC7, 1e-9);
  const auto compressed = theorem1_representation(7, {1, 6}, true);
  EXPECT_LT(compressed.dim(), rep.dim());
  EXPECT_TRUE(check_orthonormal_rep(cycle_graph(7), compressed).ok());
}

TEST(CirculantRepProperty, IdentityOnRandomSets) {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 120; ++t) {
    const int n = 3 + static_cast<int>(rng() % 22);
    std::vector<Int> c;
    for (int j = 1; j <= n / 2; ++j)
      if (rng() & 1) {
        c.push_back(j);
        if (2 * j != n) c.push_back(n - j);
      }
    if (c.empty()) continue;
    const ConnectionSet cs(n, c);
    const auto rep = theorem1_representation(cs);
    EXPECT_LT(theorem1_identity_residual(cs, rep), 1e-9);
    EXPECT_TRUE(check_orthonormal_rep(circulant(cs), rep).ok(1e-9)) << circulant(cs).label();
  }
}

TEST(GeneralRep, FromThetaSolution) {
  const auto g = mobius_ladder(8);
  const auto th = solve_theta(g);
  const auto rep = general_representation(g, th.a_opt, th.theta_upper);
  EXPECT_TRUE(check_orthonormal_rep(g, rep).ok(1e-7));
  EXPECT_THROW(general_representation(g, th.a_opt, th.theta_upper + 0.1), Error);
  EXPECT_THROW(general_representation(g, SymmetricMatrix::identity(8), 1.0), Error);
}
