#include "kturan/graph.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace kturan {

namespace {

void check_order(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > Graph::kMaxVertices)
    throw std::length_error("graph needs " + std::to_string(n) +
                            " vertices; limit is 64");
}

}  // namespace

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(popcount(s));
  for (; s; s &= s - 1) out.push_back(lowest(s));
  return out;
}

Graph::Graph(int n) : n_(n) { check_order(n); }

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (int v = 0; v < n_; ++v) twice += popcount(adj_[v]);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::out_of_range("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::out_of_range("edge endpoint out of range");
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

Graph Graph::induced(VertexSet s) const {
  s &= vertices();
  auto keep = members(s);
  std::array<int, kMaxVertices> index{};
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    VertexSet row = 0;
    for (VertexSet nb = adj_[keep[i]] & s; nb; nb &= nb - 1) row |= bit(index[lowest(nb)]);
    out.adj_[i] = row;
  }
  return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw std::invalid_argument("permutation size differs from vertex count");
  Graph out(n_);
  for (int v = 0; v < n_; ++v) {
    VertexSet row = 0;
    for (VertexSet nb = adj_[v]; nb; nb &= nb - 1) row |= bit(perm[lowest(nb)]);
    out.adj_[perm[v]] = row;
  }
  return out;
}

bool Graph::valid() const {
  if (n_ < 0 || n_ > kMaxVertices) return false;
  const VertexSet all = vertices();
  for (int v = 0; v < kMaxVertices; ++v) {
    if (v >= n_) {
      if (adj_[v] != 0) return false;
      continue;
    }
    if (adj_[v] & ~all) return false;
    if (adj_[v] & bit(v)) return false;
    for (VertexSet nb = adj_[v]; nb; nb &= nb - 1)
      if (!adjacent(lowest(nb), v)) return false;
  }
  return true;
}

Graph complete(int r) {
  if (r < 1) throw std::invalid_argument("K_r requires r >= 1");
  Graph g(r);
  for (int u = 0; u < r; ++u)
    for (int v = u + 1; v < r; ++v) g.add_edge(u, v);
  return g;
}

Graph empty(int n) { return Graph(n); }

Graph cycle(int l) {
  if (l < 3) throw std::invalid_argument("C_l requires l >= 3");
  Graph g(l);
  for (int v = 0; v < l; ++v) g.add_edge(v, (v + 1) % l);
  return g;
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("K_{a,b} requires a,b >= 1");
  return join(empty(a), empty(b));
}

std::vector<int> turan_parts(int n, int r) {
  if (r < 1 || r > n) throw std::invalid_argument("T_r(n) requires 1 <= r <= n");
  std::vector<int> parts(r, n / r);
  for (int i = 0; i < n % r; ++i) ++parts[i];
  return parts;
}

Graph turan(int n, int r) {
  const auto parts = turan_parts(n, r);
  check_order(n);
  Graph g(n);
  std::vector<int> part_of(n);
  int v = 0;
  for (int p = 0; p < r; ++p)
    for (int i = 0; i < parts[p]; ++i) part_of[v++] = p;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (part_of[a] != part_of[b]) g.add_edge(a, b);
  return g;
}

namespace {

Graph combine(const Graph& g, const Graph& h, bool cross) {
  check_order(g.order() + h.order());
  Graph out(g.order() + h.order());
  const int off = g.order();
  for (int u = 0; u < g.order(); ++u)
    for (VertexSet nb = g.neighbors(u); nb; nb &= nb - 1)
      if (lowest(nb) > u) out.add_edge(u, lowest(nb));
  for (int u = 0; u < h.order(); ++u)
    for (VertexSet nb = h.neighbors(u); nb; nb &= nb - 1)
      if (lowest(nb) > u) out.add_edge(off + u, off + lowest(nb));
  if (cross)
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < h.order(); ++v) out.add_edge(u, off + v);
  return out;
}

}  // namespace

Graph join(const Graph& g, const Graph& h) { return combine(g, h, true); }

Graph disjoint_union(const Graph& g, const Graph& h) { return combine(g, h, false); }

Graph copies(int k, const Graph& g) {
  if (k < 1) throw std::invalid_argument("kF requires k >= 1");
  check_order(k * g.order());
  Graph out = g;
  for (int i = 1; i < k; ++i) out = disjoint_union(out, g);
  return out;
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
  return g.induced(g.vertices() & ~bit(v));
}

std::size_t component_count(const Graph& g) {
  std::size_t count = 0;
  VertexSet left = g.vertices();
  while (left) {
    VertexSet reach = bit(lowest(left));
    VertexSet frontier = reach;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1) next |= g.neighbors(lowest(f));
      frontier = next & ~reach;
      reach |= next;
    }
    left &= ~reach;
    ++count;
  }
  return count;
}

namespace {

int max_independent(const Graph& g, VertexSet cand) {
  if (!cand) return 0;
  const int v = lowest(cand);
  // v isolated within cand: always take it
  if (!(g.neighbors(v) & cand)) return 1 + max_independent(g, cand & ~bit(v));
  const int with = 1 + max_independent(g, cand & ~bit(v) & ~g.neighbors(v));
  const int without = max_independent(g, cand & ~bit(v));
  return std::max(with, without);
}

}  // namespace

int independence_number(const Graph& g) { return max_independent(g, g.vertices()); }

}  // namespace kturan
