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

// Reference computations kept deliberately naive: brute force, direct sums,
// closed forms. Nothing here calls into the library's algorithms.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
  while (b) {
    const auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::int64_t phi(std::int64_t n) {
  std::int64_t c = 0;
  for (std::int64_t k = 1; k <= n; ++k)
    if (gcd(k, n) == 1) ++c;
  return c;
}

inline std::int64_t order(std::int64_t a, std::int64_t n) {
  std::int64_t x = a % n, k = 1;
  while (x != 1) {
    x = x * a % n;
    ++k;
  }
  return k;
}

// Adjacency as a dense bool table.
using Adj = std::vector<std::vector<bool>>;

inline Adj circulant(int n, const std::vector<int>& c) {
  Adj a(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int s : c) a[i][(i + s) % n] = a[(i + s) % n][i] = true;
  return a;
}

/// Independence number by exhaustive subset enumeration; n <= 20.
inline int alpha(const Adj& a) {
  const int n = static_cast<int>(a.size());
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (mask >> i & 1)
        for (int j = i + 1; j < n && ok; ++j)
          if ((mask >> j & 1) && a[i][j]) ok = false;
    if (ok) best = size;
  }
  return best;
}

/// lambda_k = sum_{s in C} cos(2 pi s k / n), straight from the definition.
inline std::vector<double> circulant_eigenvalues(int n, const std::vector<int>& c) {
  std::vector<double> out(n);
  for (int k = 0; k < n; ++k)
    for (int s : c) out[k] += std::cos(2.0 * std::numbers::pi * s * k / n);
  return out;
}

/// Edge-transitive circulant value n (-lmin) / (lmax - lmin).
inline double circulant_theta(int n, const std::vector<int>& c) {
  const auto l = circulant_eigenvalues(n, c);
  double lo = l[0], hi = l[0];
  for (double v : l) lo = std::min(lo, v), hi = std::max(hi, v);
  return n * (-lo) / (hi - lo);
}

inline double cycle_theta(int n) {
  const double c = std::cos(std::numbers::pi / n);
  return n * c / (1.0 + c);
}

// Values derived once and frozen.
inline constexpr double kThetaC7 = 3.3176672073;             // 7 cos(pi/7) / (1 + cos(pi/7))
inline constexpr double kThetaM8 = 3.4142135623730951;       // 2 + sqrt 2
inline constexpr double kThetaZ17Q13 = 7.15306701705;        // circulant_theta(17, {1,4,13,16})
inline constexpr double kThetaC5PlusTwo = 4.2360679774997897;  // sqrt 5 + 2

/// Symmetric random graph on n vertices.
template <class Rng>
Adj random_adj(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Adj a(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a[i][j] = a[j][i] = coin(rng);
  return a;
}

}  // namespace oracle
