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

// Simple undirected graphs on {0..n-1}: circulant families, strong products,
// exact independence numbers and automorphism / edge-orbit search.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zecap/error.hpp"
#include "zecap/numtheory.hpp"

namespace zecap {

using Edge = std::pair<int, int>;

class Graph {
 public:
  Graph() = default;

  explicit Graph(int n, std::string label = {}) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0), label_(std::move(label)) {
    if (n < 0) throw Error(Errc::InvalidInput, "graph: negative vertex count");
  }

  Graph(int n, const std::vector<Edge>& edges, std::string label = {}) : Graph(n, std::move(label)) {
    for (const auto& [i, j] : edges) {
      if (i < 0 || j < 0 || i >= n || j >= n) throw Error(Errc::InvalidInput, "graph: edge endpoint out of range");
      if (i == j) throw Error(Errc::InvalidInput, "graph: self-loop at " + std::to_string(i));
      adj_[idx(i, j)] = 1;
      adj_[idx(j, i)] = 1;
    }
  }

  /// Builds from a predicate evaluated on every pair i < j.
  template <class Pred>
  static Graph from_predicate(int n, Pred&& adjacent, std::string label = {}) {
    Graph g(n, std::move(label));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (adjacent(i, j)) {
          g.adj_[g.idx(i, j)] = 1;
          g.adj_[g.idx(j, i)] = 1;
        }
    return g;
  }

  int order() const noexcept { return n_; }
  const std::string& label() const noexcept { return label_; }
  Graph relabeled(std::string label) const {
    Graph g = *this;
    g.label_ = std::move(label);
    return g;
  }

  bool adjacent(int i, int j) const { return adj_[idx(i, j)] != 0; }

  int degree(int v) const {
    int d = 0;
    for (int w = 0; w < n_; ++w) d += adj_[idx(v, w)];
    return d;
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (int w = 0; w < n_; ++w)
      if (adjacent(v, w)) out.push_back(w);
    return out;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
  }

  std::size_t edge_count() const {
    std::size_t m = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) m += adj_[idx(i, j)];
    return m;
  }

  /// Common degree if regular.
  std::optional<int> regularity() const {
    if (n_ == 0) return 0;
    const int d = degree(0);
    for (int v = 1; v < n_; ++v)
      if (degree(v) != d) return std::nullopt;
    return d;
  }

  bool same_edges(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_ = 0;
  std::vector<std::uint8_t> adj_;
  std::string label_;
};

/// Symmetric connection set C = -C of a circulant graph, 0 excluded.
class ConnectionSet {
 public:
  ConnectionSet(Int n, std::vector<Int> elements) : n_(n) {
    if (n < 1) throw Error(Errc::InvalidInput, "connection set: n must be positive");
    std::set<Int> s;
    for (Int c : elements) {
      const Int r = mod(c, n);
      if (r == 0) throw Error(Errc::InvalidInput, "connection set may not contain 0");
      s.insert(r);
    }
    for (Int c : s)
      if (!s.count(mod(-c, n)))
        throw Error(Errc::AsymmetricConnectionSet, std::to_string(c) + " in C but " + std::to_string(mod(-c, n)) + " is not");
    elements_.assign(s.begin(), s.end());
  }

  Int modulus() const noexcept { return n_; }
  const std::vector<Int>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Int x) const { return std::binary_search(elements_.begin(), elements_.end(), mod(x, n_)); }

 private:
  Int n_;
  std::vector<Int> elements_;
};

inline Graph circulant(const ConnectionSet& c, std::string label = {}) {
  const int n = static_cast<int>(c.modulus());
  if (label.empty()) {
    label = "circulant:" + std::to_string(n) + ":";
    for (std::size_t i = 0; i < c.size(); ++i) label += (i ? "," : "") + std::to_string(c.elements()[i]);
  }
  return Graph::from_predicate(n, [&](int i, int j) { return c.contains(i - j); }, std::move(label));
}

inline Graph circulant(Int n, std::vector<Int> c, std::string label = {}) {
  return circulant(ConnectionSet(n, std::move(c)), std::move(label));
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw Error(Errc::InvalidInput, "cycle needs n >= 3");
  return circulant(n, {1, n - 1}, "cycle:" + std::to_string(n));
}

inline Graph complete_graph(int n) {
  return Graph::from_predicate(n, [](int, int) { return true; }, "complete:" + std::to_string(n));
}

inline Graph empty_graph(int n) { return Graph(n, "empty:" + std::to_string(n)); }

inline Graph mobius_ladder(int n) {
  if (n < 4 || n % 2) throw Error(Errc::InvalidInput, "mobius ladder needs even n >= 4");
  return circulant(n, {1, n - 1, n / 2}, "mobius:" + std::to_string(n));
}

/// QR_p = X(Z_p, quadratic residues), p prime and 1 mod 4.
inline Graph paley(Int p) {
  if (!is_prime(p) || p % 4 != 1) throw Error(Errc::InvalidPrime, "paley: p must be a prime = 1 mod 4");
  const auto res = residues(p);
  return circulant(p, {res.quadratic_residues.begin(), res.quadratic_residues.end()}, "paley:" + std::to_string(p));
}

/// CR_p = X(Z_p, cubic residues), p prime and 1 mod 3.
inline Graph cubic_residue_graph(Int p) {
  if (!is_prime(p) || p % 3 != 1) throw Error(Errc::InvalidPrime, "cubic: p must be a prime = 1 mod 3");
  const auto res = residues(p);
  if (!res.cubic_residues.count(p - 1)) throw Error(Errc::InvalidPrime, "cubic: -1 is not a cubic residue");
  return circulant(p, {res.cubic_residues.begin(), res.cubic_residues.end()}, "cubic:" + std::to_string(p));
}

/// Vertex (v, w) of G x H is v * |H| + w.
inline Graph strong_product(const Graph& g, const Graph& h) {
  const int ng = g.order(), nh = h.order();
  return Graph::from_predicate(
      ng * nh,
      [&](int a, int b) {
        const int v1 = a / nh, w1 = a % nh, v2 = b / nh, w2 = b % nh;
        const bool gv = v1 == v2 || g.adjacent(v1, v2);
        const bool hw = w1 == w2 || h.adjacent(w1, w2);
        return gv && hw;
      },
      "(" + g.label() + ")x(" + h.label() + ")");
}

inline Graph complement(const Graph& g) {
  return Graph::from_predicate(g.order(), [&](int i, int j) { return !g.adjacent(i, j); }, "complement(" + g.label() + ")");
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const int ng = g.order();
  return Graph::from_predicate(
      ng + h.order(),
      [&](int i, int j) {
        if (i < ng && j < ng) return g.adjacent(i, j);
        if (i >= ng && j >= ng) return h.adjacent(i - ng, j - ng);
        return false;
      },
      "(" + g.label() + ")+(" + h.label() + ")");
}

/// True iff `perm` maps edges of g exactly onto edges of h.
inline bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& perm) {
  if (g.order() != h.order() || static_cast<int>(perm.size()) != g.order()) return false;
  std::vector<char> seen(perm.size(), 0);
  for (int v : perm) {
    if (v < 0 || v >= g.order() || seen[v]) return false;
    seen[v] = 1;
  }
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (g.adjacent(i, j) != h.adjacent(perm[i], perm[j])) return false;
  return true;
}

/// Connection set if g is circulant under the identity labelling.
inline std::optional<ConnectionSet> circulant_connection_set(const Graph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  std::vector<Int> c;
  for (int j = 1; j < n; ++j)
    if (g.adjacent(0, j)) c.push_back(j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.adjacent(i, j) != (i != j && g.adjacent(0, static_cast<int>(mod(j - i, n))))) return std::nullopt;
  return ConnectionSet(n, c);
}

// ---------------------------------------------------------------------------
// Independent sets

inline bool is_independent_set(const Graph& g, const std::vector<int>& s) {
  for (int v : s)
    if (v < 0 || v >= g.order()) throw Error(Errc::InvalidInput, "vertex " + std::to_string(v) + " out of range");
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (s[a] == s[b] || g.adjacent(s[a], s[b])) return false;
  return true;
}

struct IndependenceResult {
  int alpha = 0;              // exact when `exact`, otherwise a lower bound
  std::vector<int> witness;   // sorted independent set of size alpha
  bool exact = false;         // false: BudgetExceeded, search incomplete
  std::uint64_t nodes = 0;
};

namespace detail {

class Bitset {
 public:
  explicit Bitset(int n = 0) : words_((n + 63) / 64, 0) {}
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
    return r;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        const int b = __builtin_ctzll(w);
        f(static_cast<int>(k * 64 + b));
        w &= w - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Maximum clique with greedy-colouring bounds, run on the complement graph.
class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, std::uint64_t budget) : n_(g.order()), budget_(budget) {
    // Vertex order: decreasing degree in g, i.e. hardest-to-place first.
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    pos_.resize(n_);
    for (int i = 0; i < n_; ++i) pos_[order_[i]] = i;
    nonadj_.assign(n_, Bitset(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (i != j && !g.adjacent(order_[i], order_[j])) nonadj_[i].set(j);
  }

  void seed(const std::vector<int>& independent) {
    if (independent.size() > best_.size()) {
      best_.clear();
      for (int v : independent) best_.push_back(pos_[v]);
    }
  }

  bool run() {
    Bitset all(n_);
    for (int i = 0; i < n_; ++i) all.set(i);
    std::vector<int> current;
    return expand(all, current);
  }

  std::vector<int> best() const {
    std::vector<int> out;
    for (int i : best_) out.push_back(order_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool expand(Bitset candidates, std::vector<int>& current) {
    if (++nodes_ > budget_) return false;
    std::vector<int> verts, colors;
    colour(candidates, verts, colors);
    for (std::size_t k = verts.size(); k-- > 0;) {
      if (current.size() + colors[k] <= best_.size()) return true;
      const int v = verts[k];
      current.push_back(v);
      const Bitset next = candidates & nonadj_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else if (!expand(next, current)) {
        return false;
      }
      current.pop_back();
      candidates.reset(v);
    }
    return true;
  }

  // Greedy sequential colouring of the candidate set; verts sorted by colour.
  void colour(const Bitset& candidates, std::vector<int>& verts, std::vector<int>& colors) const {
    Bitset uncolored = candidates;
    int color = 0;
    while (!uncolored.none()) {
      ++color;
      Bitset available = uncolored;
      while (!available.none()) {
        int v = -1;
        available.for_each([&](int u) {
          if (v < 0) v = u;
        });
        verts.push_back(v);
        colors.push_back(color);
        uncolored.reset(v);
        available.reset(v);
        // Vertices in the same colour class must be mutually non-adjacent in
        // the clique graph, i.e. adjacent in g: drop clique-neighbours of v.
        nonadj_[v].for_each([&](int u) { available.reset(u); });
      }
    }
  }

  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> order_, pos_;
  std::vector<Bitset> nonadj_;
  std::vector<int> best_;
};

}  // namespace detail

/// Exact alpha(G) by branch and bound; `budget` caps search nodes. When the
/// cap is hit the best set found is returned with exact = false.
inline IndependenceResult independence_number(const Graph& g, std::uint64_t budget = 10'000'000,
                                              const std::vector<int>& seed = {}) {
  IndependenceResult out;
  if (g.order() == 0) {
    out.exact = true;
    return out;
  }
  if (!seed.empty() && !is_independent_set(g, seed)) throw Error(Errc::InvalidInput, "seed is not independent");
  detail::CliqueSearch search(g, budget);
  search.seed(seed);
  out.exact = search.run();
  out.witness = search.best();
  out.alpha = static_cast<int>(out.witness.size());
  out.nodes = search.nodes();
  return out;
}

// ---------------------------------------------------------------------------
// Automorphisms

namespace detail {

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Graph& g, std::uint64_t& budget) : g_(g), n_(g.order()), budget_(budget) {
    degree_.resize(n_);
    for (int v = 0; v < n_; ++v) degree_[v] = g.degree(v);
    signature_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      for (int w : g.neighbors(v)) signature_[v].push_back(degree_[w]);
      std::sort(signature_[v].begin(), signature_[v].end());
    }
  }

  std::optional<std::vector<int>> find(const std::vector<std::pair<int, int>>& prescribed) {
    map_.assign(n_, -1);
    used_.assign(n_, 0);
    for (const auto& [v, w] : prescribed) {
      if (map_[v] >= 0 && map_[v] != w) return std::nullopt;
      if (map_[v] < 0 && used_[w]) return std::nullopt;
      if (!compatible(v, w)) return std::nullopt;
      map_[v] = w;
      used_[w] = 1;
    }
    if (search()) return map_;
    return std::nullopt;
  }

 private:
  bool compatible(int v, int w) const {
    if (degree_[v] != degree_[w] || signature_[v] != signature_[w]) return false;
    for (int x = 0; x < n_; ++x)
      if (map_[x] >= 0 && x != v && g_.adjacent(v, x) != g_.adjacent(w, map_[x])) return false;
    return true;
  }

  bool search() {
    if (budget_ == 0) throw Error(Errc::BudgetExceeded, "automorphism search budget exhausted");
    --budget_;
    // Next vertex: unmapped one with the most mapped neighbours.
    int next = -1, best = -1;
    for (int v = 0; v < n_; ++v) {
      if (map_[v] >= 0) continue;
      int score = 0;
      for (int w : g_.neighbors(v)) score += map_[w] >= 0;
      if (score > best) {
        best = score;
        next = v;
      }
    }
    if (next < 0) return true;
    for (int w = 0; w < n_; ++w) {
      if (used_[w] || !compatible(next, w)) continue;
      map_[next] = w;
      used_[w] = 1;
      if (search()) return true;
      map_[next] = -1;
      used_[w] = 0;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::uint64_t& budget_;
  std::vector<int> degree_;
  std::vector<std::vector<int>> signature_;
  std::vector<int> map_;
  std::vector<char> used_;
};

}  // namespace detail

/// An automorphism extending the prescribed vertex images, if one exists.
/// Throws BudgetExceeded once `budget` search nodes are spent.
inline std::optional<std::vector<int>> find_automorphism(const Graph& g, const std::vector<std::pair<int, int>>& prescribed,
                                                         std::uint64_t budget = 5'000'000) {
  detail::AutomorphismSearch search(g, budget);
  return search.find(prescribed);
}

struct EdgeOrbits {
  std::vector<Edge> edges;
  std::vector<int> orbit;  // orbit id per edge, ids dense from 0
  int orbit_count = 0;
  bool edge_transitive() const { return orbit_count <= 1; }
};

/// Exact edge-orbit partition under Aut(G) by pairwise automorphism search.
inline EdgeOrbits edge_orbits(const Graph& g, std::uint64_t budget = 5'000'000) {
  if (g.order() > 24) throw Error(Errc::InvalidInput, "edge orbit search is limited to n <= 24");
  EdgeOrbits out;
  out.edges = g.edges();
  const std::size_t m = out.edges.size();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  auto edge_id = [&](int a, int b) {
    const Edge e{std::min(a, b), std::max(a, b)};
    return static_cast<int>(std::lower_bound(out.edges.begin(), out.edges.end(), e) - out.edges.begin());
  };
  std::uint64_t remaining = budget;

  std::vector<int> reps;  // one representative per orbit established so far
  for (std::size_t e = 0; e < m; ++e) {
    bool placed = false;
    for (int r : reps) {
      if (find(r) == find(static_cast<int>(e))) {
        placed = true;
        break;
      }
      const auto [u, v] = out.edges[r];
      const auto [a, b] = out.edges[e];
      std::optional<std::vector<int>> sigma;
      for (const auto& pres : {std::vector<std::pair<int, int>>{{u, a}, {v, b}}, std::vector<std::pair<int, int>>{{u, b}, {v, a}}}) {
        detail::AutomorphismSearch search(g, remaining);
        sigma = search.find(pres);
        if (sigma) break;
      }
      if (sigma) {
        for (std::size_t f = 0; f < m; ++f) unite(static_cast<int>(f), edge_id((*sigma)[out.edges[f].first], (*sigma)[out.edges[f].second]));
        placed = true;
        break;
      }
    }
    if (!placed) reps.push_back(static_cast<int>(e));
  }

  std::vector<int> ids(m, -1);
  out.orbit.assign(m, -1);
  for (std::size_t e = 0; e < m; ++e) {
    const int root = find(static_cast<int>(e));
    if (ids[root] < 0) ids[root] = out.orbit_count++;
    out.orbit[e] = ids[root];
  }
  return out;
}

inline bool is_edge_transitive(const Graph& g, std::uint64_t budget = 5'000'000) {
  return edge_orbits(g, budget).edge_transitive();
}

}  // namespace zecap
