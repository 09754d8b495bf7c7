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

// Modular arithmetic and the multiplicative structure of Z_n: totients,
// primitive roots, cyclotomic cosets and quadratic / cubic residues.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zecap/error.hpp"

namespace zecap {

using Int = std::int64_t;

inline Int mod(Int a, Int n) {
  const Int r = a % n;
  return r < 0 ? r + n : r;
}

inline Int mul_mod(Int a, Int b, Int n) {
  return static_cast<Int>((static_cast<__int128>(mod(a, n)) * mod(b, n)) % n);
}

inline Int pow_mod(Int base, Int exp, Int n) {
  if (n == 1) return 0;
  Int result = 1;
  base = mod(base, n);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    exp >>= 1;
  }
  return result;
}

/// Prime factorisation by trial division, ascending primes.
inline std::vector<std::pair<Int, int>> factorize(Int n) {
  if (n < 1) throw Error(Errc::InvalidInput, "factorize: n must be positive");
  std::vector<std::pair<Int, int>> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

inline Int euler_phi(Int n) {
  if (n < 1) throw Error(Errc::InvalidInput, "euler_phi: n must be positive");
  Int phi = n;
  for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

inline std::vector<Int> divisors(Int n) {
  std::vector<Int> out;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Z_n^x in ascending order.
inline std::vector<Int> units(Int n) {
  if (n < 2) throw Error(Errc::InvalidInput, "units: n must be >= 2");
  std::vector<Int> out;
  for (Int k = 1; k < n; ++k)
    if (std::gcd(k, n) == 1) out.push_back(k);
  return out;
}

/// Multiplicative order of a unit a modulo n.
inline Int multiplicative_order(Int a, Int n) {
  if (n < 2 || std::gcd(mod(a, n), n) != 1) throw Error(Errc::NotAUnit, "multiplicative_order");
  Int order = euler_phi(n);
  for (const auto& [p, e] : factorize(order)) {
    while (order % p == 0 && pow_mod(a, order / p, n) == 1) order /= p;
  }
  return order;
}

/// Smallest generator of Z_n^x when the group is cyclic (n = 2, 4, p^r, 2p^r).
inline std::optional<Int> primitive_root(Int n) {
  if (n < 2) throw Error(Errc::InvalidInput, "primitive_root: n must be >= 2");
  if (n > 1'000'000) throw Error(Errc::InvalidInput, "primitive_root: n capped at 10^6");
  if (n == 2) return 1;
  if (n == 4) return 3;
  Int odd = n % 2 == 0 ? n / 2 : n;
  if (odd % 2 == 0) return std::nullopt;
  if (factorize(odd).size() != 1) return std::nullopt;
  const Int phi = euler_phi(n);
  const auto prime_factors = factorize(phi);
  for (Int g = 2; g < n; ++g) {
    if (std::gcd(g, n) != 1) continue;
    bool generator = true;
    for (const auto& [p, e] : prime_factors)
      if (pow_mod(g, phi / p, n) == 1) {
        generator = false;
        break;
      }
    if (generator) return g;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cyclotomic cosets

/// Orbits of Z_n under multiplication by the unit q. Cosets are sorted
/// internally and ordered by their minimal element, so cosets[0] == {0}.
struct CyclotomicPartition {
  Int n = 0;
  Int q = 0;
  std::vector<std::vector<Int>> cosets;
  std::vector<Int> representatives;
  std::vector<std::size_t> coset_index;  // element -> index into cosets

  const std::vector<Int>& coset_of(Int s) const { return cosets[coset_index[mod(s, n)]]; }
  bool same_coset(Int a, Int b) const { return coset_index[mod(a, n)] == coset_index[mod(b, n)]; }
};

inline CyclotomicPartition cyclotomic_cosets(Int n, Int q) {
  if (n < 2) throw Error(Errc::InvalidInput, "cyclotomic_cosets: n must be >= 2");
  q = mod(q, n);
  if (std::gcd(q, n) != 1) throw Error(Errc::NotAUnit, std::to_string(q) + " is not a unit mod " + std::to_string(n));
  CyclotomicPartition part;
  part.n = n;
  part.q = q;
  part.coset_index.assign(static_cast<std::size_t>(n), SIZE_MAX);
  for (Int s = 0; s < n; ++s) {
    if (part.coset_index[s] != SIZE_MAX) continue;
    std::vector<Int> coset;
    Int x = s;
    do {
      coset.push_back(x);
      part.coset_index[x] = part.cosets.size();
      x = mul_mod(x, q, n);
    } while (x != s);
    std::sort(coset.begin(), coset.end());
    part.representatives.push_back(coset.front());
    part.cosets.push_back(std::move(coset));
  }
  return part;
}

/// All nonzero cosets share one size and -1 lies in the coset of 1.
inline bool is_equal_sized_symmetric(const CyclotomicPartition& part) {
  const std::size_t size1 = part.coset_of(1).size();
  for (std::size_t i = 0; i < part.cosets.size(); ++i) {
    if (part.cosets[i].front() == 0) continue;
    if (part.cosets[i].size() != size1) return false;
  }
  return part.same_coset(1, part.n - 1);
}

struct Lemma1Result {
  bool holds = true;
  Int coset_size = 0;
  std::optional<Int> witness_divisor;  // d | n with |C_(1)| not dividing phi(d)
};

/// Necessary condition for equal-sized cosets: |C_(1)| divides phi(d) for
/// every divisor d > 1 of n. A failure carries the offending d.
inline Lemma1Result lemma1_divisor_check(const CyclotomicPartition& part) {
  Lemma1Result out;
  out.coset_size = static_cast<Int>(part.coset_of(1).size());
  for (Int d : divisors(part.n)) {
    if (d == 1) continue;
    if (euler_phi(d) % out.coset_size != 0) {
      out.holds = false;
      out.witness_divisor = d;
      return out;
    }
  }
  return out;
}

/// Partition of Z_{p^r} over q = a^{p^{r-1}}, a the smallest primitive root.
inline CyclotomicPartition prime_power_coset_family(Int p, int r) {
  if (p < 3 || !is_prime(p)) throw Error(Errc::InvalidParameter, "prime_power_coset_family: p must be an odd prime");
  if (r < 1) throw Error(Errc::InvalidParameter, "prime_power_coset_family: r must be >= 1");
  Int n = 1, lift = 1;
  for (int i = 0; i < r; ++i) n *= p;
  for (int i = 0; i + 1 < r; ++i) lift *= p;
  const auto alpha = primitive_root(n);
  if (!alpha) throw Error(Errc::InvalidParameter, "no primitive root");
  return cyclotomic_cosets(n, pow_mod(*alpha, lift, n));
}

/// Partition of Z_p over q = a^t, a the smallest primitive root; needs t | (p-1)/2.
inline CyclotomicPartition prime_coset_family(Int p, Int t) {
  if (!is_prime(p) || p < 3) throw Error(Errc::InvalidParameter, "prime_coset_family: p must be an odd prime");
  if (t < 1 || ((p - 1) / 2) % t != 0)
    throw Error(Errc::InvalidParameter, "prime_coset_family: t must divide (p-1)/2");
  const auto alpha = primitive_root(p);
  return cyclotomic_cosets(p, pow_mod(*alpha, t, p));
}

/// Composite, non-prime-power odd n up to max_n admitting a unit q with
/// |<q>| > 2 whose cosets are equal-sized and symmetric. Empty means none found.
inline std::vector<std::pair<Int, Int>> search_nontrivial_composite_cosets(Int max_n) {
  std::vector<std::pair<Int, Int>> hits;
  for (Int n = 3; n <= max_n; n += 2) {
    if (factorize(n).size() < 2) continue;
    for (Int q : units(n)) {
      if (multiplicative_order(q, n) <= 2) continue;
      if (is_equal_sized_symmetric(cyclotomic_cosets(n, q))) hits.emplace_back(n, q);
    }
  }
  return hits;
}

// ---------------------------------------------------------------------------
// Residues

struct ResidueClassification {
  Int p = 0;
  std::set<Int> quadratic_residues;
  std::set<Int> nonresidues;
  std::set<Int> cubic_residues;  // populated iff p == 1 mod 3
};

inline ResidueClassification residues(Int p) {
  if (p < 3 || !is_prime(p)) throw Error(Errc::InvalidPrime, "residues: p must be an odd prime");
  ResidueClassification out;
  out.p = p;
  for (Int b = 1; b < p; ++b) out.quadratic_residues.insert(mul_mod(b, b, p));
  for (Int a = 1; a < p; ++a)
    if (!out.quadratic_residues.count(a)) out.nonresidues.insert(a);
  if (p % 3 == 1)
    for (Int b = 1; b < p; ++b) out.cubic_residues.insert(pow_mod(b, 3, p));
  return out;
}

}  // namespace zecap
