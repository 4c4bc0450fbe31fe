#pragma once

// Slow reference implementations used to check the library. They share
// nothing with the library beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "kturan/graph.hpp"

namespace oracle {

using kturan::Graph;
using EdgeSet = std::vector<std::pair<int, int>>;

inline bool has_edge(const Graph& g, int u, int v) { return (g.neighbors(u) >> v) & 1U; }

inline Graph from_edges(int n, const EdgeSet& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

// Graph number `code` among the 2^C(n,2) labeled graphs on n vertices.
inline Graph labeled_graph(int n, std::uint64_t code) {
  Graph g(n);
  int bitpos = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bitpos)
      if ((code >> bitpos) & 1U) g.add_edge(u, v);
  return g;
}

inline std::uint64_t labeled_count(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

// Calls f(subset) for every k-subset of {0..n-1}, as a sorted vector.
inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> pick(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      f(pick);
      return;
    }
    for (int v = start; v <= n - (k - depth); ++v) {
      pick[depth] = v;
      rec(v + 1, depth + 1);
    }
  };
  rec(0, 0);
}

// Distinct edge sets of subgraphs of g isomorphic to h: every vertex subset
// of size |V(h)|, every bijection onto it.
inline std::set<EdgeSet> copy_edge_sets(const Graph& g, const Graph& h) {
  std::set<EdgeSet> out;
  const int k = h.order();
  if (k > g.order()) return out;
  for_each_subset(g.order(), k, [&](const std::vector<int>& subset) {
    std::vector<int> perm = subset;
    do {
      EdgeSet edges;
      bool ok = true;
      for (int a = 0; a < k && ok; ++a)
        for (int b = a + 1; b < k && ok; ++b)
          if (has_edge(h, a, b)) {
            if (!has_edge(g, perm[a], perm[b])) ok = false;
            else edges.emplace_back(std::min(perm[a], perm[b]), std::max(perm[a], perm[b]));
          }
      if (ok) {
        std::sort(edges.begin(), edges.end());
        // isolated pattern vertices: the copy is identified by its vertex set too
        std::vector<int> verts = subset;
        EdgeSet key = edges;
        for (int v : verts) key.emplace_back(-1, v);
        out.insert(key);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
  return out;
}

inline std::uint64_t count_copies(const Graph& g, const Graph& h) {
  return copy_edge_sets(g, h).size();
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  const int n = a.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (has_edge(a, u, v) != has_edge(b, perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::uint64_t automorphisms(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (has_edge(g, u, v) != has_edge(g, perm[u], perm[v])) ok = false;
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Lexicographically smallest adjacency bit string over all relabelings.
inline std::uint64_t min_code(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    int bitpos = 0;
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u, ++bitpos)
        if (has_edge(g, perm[u], perm[v])) code |= std::uint64_t{1} << bitpos;
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline Graph induced(const Graph& g, const std::vector<int>& verts) {
  Graph out(static_cast<int>(verts.size()));
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b)
      if (has_edge(g, verts[a], verts[b])) out.add_edge(static_cast<int>(a), static_cast<int>(b));
  return out;
}

inline std::uint64_t count_induced(const Graph& g, const Graph& h) {
  std::uint64_t count = 0;
  if (h.order() > g.order()) return 0;
  for_each_subset(g.order(), h.order(), [&](const std::vector<int>& s) {
    count += is_isomorphic(induced(g, s), h);
  });
  return count;
}

// Vertex sets carrying at least one copy of h.
inline std::vector<std::uint64_t> copy_vertex_sets(const Graph& g, const Graph& h) {
  std::set<std::uint64_t> sets;
  for (const EdgeSet& key : copy_edge_sets(g, h)) {
    std::uint64_t s = 0;
    for (auto [a, b] : key)
      if (a == -1) s |= std::uint64_t{1} << b;
    sets.insert(s);
  }
  return {sets.begin(), sets.end()};
}

// Largest family of pairwise disjoint copy vertex sets, by trying every subfamily.
inline std::size_t max_packing(const Graph& g, const Graph& h) {
  const auto sets = oracle::copy_vertex_sets(g, h);
  std::size_t best = 0;
  std::function<void(std::size_t, std::uint64_t, std::size_t)> rec = [&](std::size_t i,
                                                                         std::uint64_t used,
                                                                         std::size_t size) {
    best = std::max(best, size);
    for (std::size_t j = i; j < sets.size(); ++j)
      if (!(sets[j] & used)) rec(j + 1, used | sets[j], size + 1);
  };
  rec(0, 0, 0);
  return best;
}

inline bool contains(const Graph& g, const Graph& h) { return oracle::count_copies(g, h) > 0; }

inline int independence_number(const Graph& g) {
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
    bool ok = true;
    for (int u = 0; u < g.order() && ok; ++u)
      for (int v = u + 1; v < g.order() && ok; ++v)
        if ((s >> u & 1U) && (s >> v & 1U) && has_edge(g, u, v)) ok = false;
    if (ok) best = std::max(best, __builtin_popcountll(s));
  }
  return best;
}

inline Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline Graph random_relabel(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (has_edge(g, u, v)) out.add_edge(perm[u], perm[v]);
  return out;
}

// Max of objective(g) over labeled n-vertex graphs avoiding every member.
inline std::uint64_t labeled_max(int n, const std::vector<Graph>& forbidden,
                                 const std::function<std::uint64_t(const Graph&)>& objective) {
  std::uint64_t best = 0;
  for (std::uint64_t code = 0; code < labeled_count(n); ++code) {
    const Graph g = labeled_graph(n, code);
    bool ok = true;
    for (const Graph& f : forbidden)
      if (oracle::contains(g, f)) {
        ok = false;
        break;
      }
    if (ok) best = std::max(best, objective(g));
  }
  return best;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

}  // namespace oracle
