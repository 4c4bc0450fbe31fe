#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace kturan {

/// Vertex set over at most 64 vertices, one bit per vertex.
using VertexSet = std::uint64_t;

/// Exact counts of copies, embeddings and objective values.
using Count = std::uint64_t;

inline constexpr int popcount(VertexSet s) { return std::popcount(s); }
inline constexpr int lowest(VertexSet s) { return std::countr_zero(s); }
inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
inline constexpr VertexSet first_n(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

/// Vertices of `s` in increasing order.
std::vector<int> members(VertexSet s);

/// Simple undirected graph on at most 64 vertices.
///
/// Adjacency is stored as one neighbor bitset per vertex; the matrix is kept
/// symmetric and loop-free by every mutator.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  std::size_t edge_count() const;
  VertexSet vertices() const { return first_n(n_); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Subgraph induced by `s`, vertices renumbered in increasing order.
  Graph induced(VertexSet s) const;

  /// Graph with vertex v renamed to perm[v]; perm must be a permutation.
  Graph relabeled(std::span<const int> perm) const;

  /// True when the symmetric / loop-free / in-range invariants hold.
  bool valid() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

Graph complete(int r);
Graph empty(int n);
Graph cycle(int l);
Graph complete_bipartite(int a, int b);

/// Complete r-partite graph on n vertices with balanced parts, larger parts
/// first and each part on a contiguous index range.
Graph turan(int n, int r);

/// Part sizes of T_r(n), largest first.
std::vector<int> turan_parts(int n, int r);

/// G + H: disjoint copies with every cross edge added; G's vertices come first.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

/// k vertex-disjoint copies of g.
Graph copies(int k, const Graph& g);

/// Removes v and shifts the higher indices down by one.
Graph delete_vertex(const Graph& g, int v);

std::size_t component_count(const Graph& g);

/// Independence number by exhaustive branching; fine for pattern-sized graphs.
int independence_number(const Graph& g);

}  // namespace kturan
