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
#include <sstream>

#include "oracles.hpp"
#include "zecap/certificates.hpp"
#include "zecap/io.hpp"
#include "zecap/nonsignalling.hpp"
#include "zecap/reproduce.hpp"

using namespace zecap;

// -- coset construction ------------------------------------------------------

TEST(CosetCertificate, SeventeenOverThirteen) {
  const auto cert = theorem2_build(17, 13);
  EXPECT_EQ(cert.verdict, Verdict::Optimal);
  EXPECT_NEAR(cert.lower(), oracle::kThetaZ17Q13, 1e-9);
  EXPECT_NEAR(cert.upper(), oracle::kThetaZ17Q13, 1e-9);
  EXPECT_TRUE(theorem2_dmatrix_checks(cert).ok());
  EXPECT_LT(cert.max_slackness(), 1e-9);
  for (double s : cert.primal.s) EXPECT_NEAR(s, oracle::kThetaZ17Q13 / 17, 1e-12);
}

TEST(CosetCertificate, FamiliesAgreeWithDirectSpectrum) {
  for (auto [n, q] : std::vector<std::pair<Int, Int>>{{5, 4}, {7, 6}, {9, 8}, {11, 10}, {13, 5}, {13, 12}, {17, 13}, {17, 16}}) {
    const auto cert = theorem2_build(n, q);
    std::vector<int> c;
    for (Int s : cert.partition.coset_of(1)) c.push_back(static_cast<int>(s));
    EXPECT_EQ(cert.verdict, Verdict::Optimal) << n << "," << q;
    EXPECT_NEAR(cert.lower(), oracle::circulant_theta(static_cast<int>(n), c), 1e-9) << n << "," << q;
  }
}

TEST(CosetCertificate, Preconditions) {
  EXPECT_THROW(theorem2_build(13, 3), Error);  // cosets of size 3, -1 not in C_(1)
  EXPECT_THROW(theorem2_build(15, 2), Error);
  EXPECT_THROW(theorem2_build(31, 30), Error);  // edge transitivity must be asserted
  EXPECT_EQ(theorem2_build(31, 30, true).verdict, Verdict::Optimal);
}

TEST(CosetCertificate, CorruptedDFailsChecks) {
  const auto cert = theorem2_build(13, 5);
  ComplexMatrix bad = cert.d.matrix();
  bad(0, 1) += 1e-3;
  bad(1, 0) += 1e-3;
  const HermitianMatrix corrupted(bad);
  EXPECT_FALSE(theorem2_dmatrix_checks(cert, &corrupted).ok());
}

TEST(CosetCertificate, TamperedPrimalIsNotOptimal) {
  auto cert = theorem2_build(7, 6);
  UpsilonCertificate tampered = cert;
  tampered.primal.s[0] += 1e-3;
  certify(tampered, 1e-9);
  EXPECT_NE(tampered.verdict, Verdict::Optimal);
  EXPECT_THROW(require_optimal(tampered), Error);
  UpsilonCertificate weak_dual = cert;
  weak_dual.dual.t = hermitize(ComplexMatrix(weak_dual.dual.t.matrix() * Complex(0.9)));
  certify(weak_dual, 1e-9);
  EXPECT_EQ(weak_dual.verdict, Verdict::PrimalOnly);
}

// -- Paley ---------------------------------------------------------------------

TEST(Paley, CertificatesForSmallPrimes) {
  for (Int p : {5, 13, 17, 29, 37}) {
    const auto cert = paley_certificate(p);
    EXPECT_EQ(cert.verdict, Verdict::Optimal) << p;
    EXPECT_NEAR(cert.lower(), std::sqrt(double(p)), 1e-9);
    EXPECT_TRUE(cert.checks.ok());
  }
  EXPECT_THROW(paley_certificate(7), Error);
}

TEST(Paley, AgreesWithCosetRoute) {
  const auto pc = paley_certificate(17);
  const auto tc = theorem2_build(17, quadratic_residue_generator(17));
  EXPECT_NEAR(pc.lower(), tc.lower(), 1e-12);
  EXPECT_LT((pc.primal.r[0].matrix() - tc.primal.r[0].matrix()).max_abs(), 1e-12);
}

// -- handle system -------------------------------------------------------------

TEST(HandleSystem, MobiusLadder) {
  const auto h = handle_system_for_graph(mobius_ladder(8));
  ASSERT_EQ(h.x.size(), 8u);
  EXPECT_EQ(h.verdict, Verdict::Optimal);
  EXPECT_NEAR(h.x[0], 1.0, 1e-9);
  EXPECT_NEAR(h.x[2], 0.5, 1e-9);
  EXPECT_NEAR(h.x[6], 0.5, 1e-9);
  EXPECT_NEAR(h.x[3], oracle::kThetaM8 / 2 - 1, 1e-8);
  EXPECT_NEAR(h.x[5], oracle::kThetaM8 / 2 - 1, 1e-8);
  EXPECT_NEAR(h.lower(), oracle::kThetaM8, 1e-8);
}

TEST(HandleSystem, AgreesWithCosetRouteOnCycles) {
  for (int n : {5, 7, 9}) {
    const auto h = handle_system_for_graph(cycle_graph(n));
    const auto t = theorem2_build(n, n - 1);
    EXPECT_EQ(h.verdict, Verdict::Optimal);
    EXPECT_NEAR(h.lower(), t.lower(), 1e-8) << n;
    for (int j = 0; j < n; ++j) EXPECT_NEAR(h.x[j], t.x[j], 1e-6) << n << " x_" << j;
  }
}

TEST(HandleSystem, NonCirculantGraphs) {
  EXPECT_EQ(handle_system_for_graph(complete_graph(4)).verdict, Verdict::Optimal);
  EXPECT_EQ(handle_system_for_graph(empty_graph(3)).verdict, Verdict::Optimal);
}

TEST(SolverCertificate, C7) {
  const auto c = solver_certificate(cycle_graph(7), theorem1_representation(7, {1, 6}));
  EXPECT_EQ(c.verdict, Verdict::Optimal);
  EXPECT_NEAR(c.lower(), oracle::kThetaC7, 1e-7);
}

// -- capacity report -----------------------------------------------------------

TEST(Capacity, RoutesAndLogs) {
  const auto c7 = capacity_report(cycle_graph(7));
  EXPECT_EQ(c7.route, "theorem2");
  EXPECT_TRUE(c7.certified);
  EXPECT_EQ(c7.alpha, 3);
  ASSERT_TRUE(c7.one_shot);
  EXPECT_NEAR(*c7.one_shot, std::log2(3.0), 1e-12);
  EXPECT_NEAR(*c7.asymptotic, std::log2(oracle::kThetaC7), 1e-8);
  EXPECT_EQ(capacity_report(paley(13)).route, "paley");
  EXPECT_EQ(capacity_report(mobius_ladder(8)).route, "handle-system");
  const auto none = capacity_report(cycle_graph(5), Construction::None);
  EXPECT_FALSE(none.certified);
  EXPECT_LE(none.trivial_lower, none.trivial_upper);
}

// -- non-signalling ------------------------------------------------------------

TEST(Nonsignalling, ThreeExamples) {
  EXPECT_TRUE(check_nonsignalling(product_channel_choi(2), 1e-10).ok());
  const auto id = check_nonsignalling(identity_channel_choi(2), 1e-10);
  EXPECT_FALSE(id.a_to_b_ok());
  EXPECT_TRUE(id.b_to_a_ok());
  EXPECT_TRUE(id.psd_ok());
  EXPECT_TRUE(id.trace_ok());
  EXPECT_TRUE(check_nonsignalling(shared_entanglement_choi(3), 1e-10).ok());
}

TEST(PartialTrace, ProductProperty) {
  std::mt19937_64 rng(79);
  std::normal_distribution<double> g;
  for (int t = 0; t < 30; ++t) {
    ComplexMatrix a(2, 2), b(3, 3);
    for (auto& v : a.data()) v = Complex(g(rng), g(rng));
    for (auto& v : b.data()) v = Complex(g(rng), g(rng));
    const auto ab = kron(a, b);
    EXPECT_LT((partial_trace(ab, {2, 3}, {true, false}) - ComplexMatrix(a * b.trace())).max_abs(), 1e-12);
    EXPECT_LT((partial_trace(ab, {2, 3}, {false, true}) - ComplexMatrix(b * a.trace())).max_abs(), 1e-12);
  }
}

TEST(GellMann, SpansTracelessHermitian) {
  for (std::size_t d : {2u, 3u, 4u}) {
    const auto basis = gell_mann_basis(d);
    EXPECT_EQ(basis.size(), d * d - 1);
    for (const auto& m : basis) {
      EXPECT_LT(std::abs(m.trace()), 1e-14);
      EXPECT_LT((m - m.adjoint()).max_abs(), 1e-14);
    }
  }
}

// -- io ------------------------------------------------------------------------

TEST(Io, GraphSpecs) {
  EXPECT_EQ(parse_graph_spec("cycle:5").edge_count(), 5u);
  EXPECT_EQ(parse_graph_spec("paley:13").edge_count(), 39u);
  EXPECT_TRUE(parse_graph_spec("circulant:17:1,4,13,16").same_edges(circulant(17, {1, 4, 13, 16})));
  EXPECT_EQ(parse_graph_spec("product:cycle:5:cycle:5").order(), 25);
  EXPECT_EQ(parse_graph_spec("mobius:8").edge_count(), 12u);
  for (const char* bad : {"cycle", "cycle:x", "foo:3", "circulant:7:1,2", "paley:7", "product:cycle:5"})
    EXPECT_THROW(parse_graph_spec(bad), Error) << bad;
}

TEST(Io, JsonAndDimacsRoundTrip) {
  std::mt19937_64 rng(83);
  for (int t = 0; t < 30; ++t) {
    const auto g = Graph::from_predicate(1 + t % 9, [&](int, int) { return (rng() & 3) == 0; }, "g");
    EXPECT_TRUE(graph_from_json(graph_to_json(g)).same_edges(g));
    std::istringstream in(write_dimacs(g));
    EXPECT_TRUE(read_dimacs(in).same_edges(g));
  }
}

TEST(Io, NumbersHaveTwelveDigits) {
  EXPECT_EQ(to_json_number(std::sqrt(2.0)).dump(), "1.41421356237");
  EXPECT_EQ(to_json_number(-0.0).dump(), "0.0");
  EXPECT_TRUE(to_json_number(std::nan("")).is_string());
}

TEST(Io, CertificateJsonIsDeterministic) {
  const auto a = certificate_to_json(theorem2_build(7, 6)).dump();
  const auto b = certificate_to_json(theorem2_build(7, 6)).dump();
  EXPECT_EQ(a, b);
  const auto j = Json::parse(a);
  EXPECT_EQ(j["verdict"], "optimal");
  EXPECT_EQ(j["R"].size(), 7u);
}

// -- reproduction suite plumbing ----------------------------------------------

TEST(Reproduce, FilterByTagKeyAndId) {
  EXPECT_EQ(run_reproduction({"cosets"}).size(), 1u);
  EXPECT_EQ(run_reproduction({"6"}).front().key, "cosets");
  const auto theta = run_reproduction({"theta"});
  EXPECT_GE(theta.size(), 3u);
  for (const auto& r : theta) EXPECT_TRUE(r.passed) << r.key;
  EXPECT_TRUE(run_reproduction({"nope"}).empty());
  EXPECT_THROW(run_criterion(13), Error);
}
