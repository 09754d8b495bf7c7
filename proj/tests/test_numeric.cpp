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

#include <random>
#include <set>

#include "oracles.hpp"
#include "zecap/numerics.hpp"
#include "zecap/numtheory.hpp"

using namespace zecap;

namespace {

ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Complex v(g(rng), i == j ? 0.0 : g(rng));
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  return m;
}

RealMatrix random_real(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::normal_distribution<double> g;
  RealMatrix m(r, c);
  for (auto& v : m.data()) v = g(rng);
  return m;
}

}  // namespace

// -- numerics ----------------------------------------------------------------

TEST(Eig, DiagonalIsSorted) {
  const RealVector d{3.0, -1.0, 2.0};
  const auto e = eig(SymmetricMatrix(RealMatrix::diagonal(d)));
  EXPECT_EQ(e.values, (RealVector{-1.0, 2.0, 3.0}));
}

TEST(Eig, PauliY) {
  ComplexMatrix y(2, 2);
  y(0, 1) = Complex(0, -1);
  y(1, 0) = Complex(0, 1);
  const auto e = eig(HermitianMatrix(y));
  EXPECT_NEAR(e.values[0], -1.0, 1e-14);
  EXPECT_NEAR(e.values[1], 1.0, 1e-14);
}

TEST(Eig, RejectsNonFinite) {
  RealMatrix m(2, 2);
  m(0, 0) = std::nan("");
  EXPECT_THROW(eig(hermitize(m)), Error);
}

TEST(EigProperty, ReconstructionAndOrthogonality) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 9;
    const auto m = random_hermitian(rng, n);
    const auto e = eig(HermitianMatrix(m));
    ComplexMatrix lam(n, n);
    for (std::size_t i = 0; i < n; ++i) lam(i, i) = e.values[i];
    EXPECT_LT((e.vectors * lam * e.vectors.adjoint() - m).max_abs(), 1e-11);
    EXPECT_LT((e.vectors.adjoint() * e.vectors - ComplexMatrix::identity(n)).max_abs(), 1e-12);
    EXPECT_TRUE(std::is_sorted(e.values.begin(), e.values.end()));
    // trace equals eigenvalue sum
    double s = 0.0;
    for (double v : e.values) s += v;
    EXPECT_NEAR(s, std::real(m.trace()), 1e-11);
  }
}

TEST(Psd, GramIsPsdAndShiftIsNot) {
  std::mt19937_64 rng(3);
  const auto b = random_real(rng, 5, 3);
  const auto g = hermitize(RealMatrix(b * b.transpose()));
  EXPECT_TRUE(is_psd(g));
  EXPECT_NEAR(min_eigenvalue(g), 0.0, 1e-12);  // rank 3 of 5
  const auto shifted = hermitize(RealMatrix(g.matrix() - RealMatrix::identity(5)));
  EXPECT_FALSE(is_psd(shifted));
}

TEST(Cholesky, SolveAndInverse) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + t % 7;
    const auto b = random_real(rng, n, n);
    RealMatrix a = b * b.transpose() + RealMatrix::identity(n);
    const auto l = cholesky(a);
    ASSERT_TRUE(l.has_value());
    RealVector rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = static_cast<double>(i) - 1.5;
    const auto x = cholesky_solve(*l, rhs);
    const auto ax = matvec(a, x);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(ax[i], rhs[i], 1e-9);
    EXPECT_LT((a * cholesky_inverse(*l) - RealMatrix::identity(n)).max_abs(), 1e-9);
  }
  RealMatrix neg = RealMatrix::identity(2);
  neg(1, 1) = -1.0;
  EXPECT_FALSE(cholesky(neg).has_value());
}

TEST(GramFactor, RoundTripProperty) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 8, k = 1 + (t / 8) % 5;
    const auto b = random_real(rng, n, k);
    const auto g = hermitize(RealMatrix(b * b.transpose()));
    const auto x = gram_factor(g, 1e-10);
    ASSERT_EQ(x.size(), n);
    EXPECT_LE(x.front().size(), std::min(n, k));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_NEAR(inner<double>(x[i], x[j]), g(i, j), 1e-9);
  }
}

TEST(GramFactor, RejectsIndefinite) {
  RealMatrix m = RealMatrix::identity(2);
  m(1, 1) = -0.5;
  EXPECT_THROW(gram_factor(hermitize(m), 1e-10), Error);
}

TEST(SolveLinear, ConsistentAndInconsistent) {
  RealMatrix a(3, 2);
  a(0, 0) = 1;
  a(1, 1) = 1;
  a(2, 0) = 1;
  a(2, 1) = 1;
  const auto ok = solve_linear(a, {1.0, 2.0, 3.0});
  EXPECT_NEAR(ok.x[0], 1.0, 1e-12);
  EXPECT_NEAR(ok.x[1], 2.0, 1e-12);
  EXPECT_LT(ok.residual, 1e-12);
  EXPECT_EQ(ok.rank, 2);
  EXPECT_THROW(solve_linear(a, {1.0, 2.0, 4.0}), Error);
}

TEST(KronProperty, MixedProduct) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    const auto a = random_real(rng, 2, 3), c = random_real(rng, 3, 2);
    const auto b = random_real(rng, 2, 2), d = random_real(rng, 2, 3);
    EXPECT_LT((kron(a, b) * kron(c, d) - kron(RealMatrix(a * c), RealMatrix(b * d))).max_abs(), 1e-12);
  }
}

// -- numtheory -------------------------------------------------------------

TEST(NumTheory, PhiAndOrderAgainstBruteForce) {
  for (Int n = 2; n <= 400; ++n) {
    ASSERT_EQ(euler_phi(n), oracle::phi(n)) << n;
    ASSERT_EQ(static_cast<Int>(units(n).size()), oracle::phi(n));
    for (Int a : units(n)) ASSERT_EQ(multiplicative_order(a, n), oracle::order(a, n)) << a << " mod " << n;
  }
  EXPECT_THROW(multiplicative_order(5, 25), Error);
}

TEST(NumTheory, PrimitiveRoots) {
  EXPECT_EQ(primitive_root(7), 3);
  EXPECT_EQ(primitive_root(17), 3);
  EXPECT_EQ(primitive_root(125), 2);
  EXPECT_EQ(primitive_root(8), std::nullopt);
  EXPECT_EQ(primitive_root(15), std::nullopt);
  for (Int n = 2; n <= 300; ++n) {
    const auto g = primitive_root(n);
    if (g) {
      EXPECT_EQ(oracle::order(*g, n), oracle::phi(n)) << n;
    }
  }
}

TEST(NumTheory, FactorizeAndDivisors) {
  EXPECT_EQ(factorize(360), (std::vector<std::pair<Int, int>>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(divisors(12), (std::vector<Int>{1, 2, 3, 4, 6, 12}));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(91));
}

TEST(Cosets, SeventeenOverThirteen) {
  const auto p = cyclotomic_cosets(17, 13);
  EXPECT_EQ(p.cosets,
            (std::vector<std::vector<Int>>{{0}, {1, 4, 13, 16}, {2, 8, 9, 15}, {3, 5, 12, 14}, {6, 7, 10, 11}}));
  EXPECT_TRUE(is_equal_sized_symmetric(p));
  EXPECT_TRUE(lemma1_divisor_check(p).holds);
}

TEST(Cosets, SevenOverSix) {
  const auto p = cyclotomic_cosets(7, 6);
  EXPECT_EQ(p.cosets, (std::vector<std::vector<Int>>{{0}, {1, 6}, {2, 5}, {3, 4}}));
}

TEST(Cosets, FifteenFailsDivisorCheck) {
  const auto p = cyclotomic_cosets(15, 2);
  const auto r = lemma1_divisor_check(p);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.coset_size, 4);
  ASSERT_TRUE(r.witness_divisor);
  EXPECT_NE(oracle::phi(*r.witness_divisor) % 4, 0);
  EXPECT_FALSE(is_equal_sized_symmetric(p));
}

TEST(Cosets, RejectsNonUnit) { EXPECT_THROW(cyclotomic_cosets(12, 4), Error); }

TEST(CosetFamilies, PrimePower) {
  const auto p = prime_power_coset_family(5, 3);
  EXPECT_EQ(p.q, 57);
  EXPECT_EQ(p.coset_of(1), (std::vector<Int>{1, 57, 68, 124}));
  EXPECT_TRUE(is_equal_sized_symmetric(p));
  for (Int prime : {3, 5, 7, 11, 13})
    for (int r = 1; r <= 3; ++r) {
      const auto f = prime_power_coset_family(prime, r);
      EXPECT_TRUE(is_equal_sized_symmetric(f)) << prime << "^" << r;
      EXPECT_TRUE(lemma1_divisor_check(f).holds);
    }
  EXPECT_THROW(prime_power_coset_family(4, 2), Error);
}

TEST(CosetFamilies, PrimeAlwaysEqualSized) {
  for (Int p = 3; p < 200; ++p) {
    if (!is_prime(p)) continue;
    for (Int t = 1; t <= (p - 1) / 2; ++t) {
      if (((p - 1) / 2) % t) continue;
      const auto f = prime_coset_family(p, t);
      EXPECT_TRUE(is_equal_sized_symmetric(f)) << p << "," << t;
      EXPECT_TRUE(lemma1_divisor_check(f).holds);
      EXPECT_EQ(static_cast<Int>(f.coset_of(1).size()), (p - 1) / t);
    }
  }
  EXPECT_THROW(prime_coset_family(13, 4), Error);
}

TEST(CosetProperty, PartitionExact) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<Int> modulus(2, 2000);
  for (int t = 0; t < 500; ++t) {
    const Int n = modulus(rng);
    const auto u = units(n);
    const Int q = u[std::uniform_int_distribution<std::size_t>(0, u.size() - 1)(rng)];
    const auto p = cyclotomic_cosets(n, q);
    std::vector<int> seen(n, 0);
    for (const auto& c : p.cosets) {
      EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
      for (Int s : c) {
        ++seen[s];
        EXPECT_TRUE(p.same_coset(s, s * q % n));
      }
    }
    for (int s : seen) ASSERT_EQ(s, 1);
    EXPECT_EQ(static_cast<Int>(p.coset_of(1).size()), oracle::order(q % n == 0 ? 1 : q % n, n));
    // equal-sized and symmetric implies the divisor condition
    if (is_equal_sized_symmetric(p)) {
      EXPECT_TRUE(lemma1_divisor_check(p).holds) << n << "," << q;
    }
  }
}

TEST(CosetSearch, SmallRangeHitsAreGenuine) {
  const auto hits = search_nontrivial_composite_cosets(120);
  for (const auto& [n, q] : hits) {
    EXPECT_GE(factorize(n).size(), 2u);
    EXPECT_GT(oracle::order(q, n), 2);
    EXPECT_TRUE(is_equal_sized_symmetric(cyclotomic_cosets(n, q)));
  }
  EXPECT_NE(std::find(hits.begin(), hits.end(), std::pair<Int, Int>{65, 8}), hits.end());
}

TEST(Residues, Thirteen) {
  const auto r = residues(13);
  EXPECT_EQ(r.quadratic_residues, (std::set<Int>{1, 3, 4, 9, 10, 12}));
  EXPECT_EQ(r.nonresidues, (std::set<Int>{2, 5, 6, 7, 8, 11}));
  EXPECT_EQ(r.cubic_residues, (std::set<Int>{1, 5, 8, 12}));
  EXPECT_THROW(residues(15), Error);
  EXPECT_TRUE(residues(11).cubic_residues.empty());
}
