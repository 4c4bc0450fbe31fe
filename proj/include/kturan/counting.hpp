#pragma once

#include <functional>
#include <span>
#include <vector>

#include "kturan/graph.hpp"

namespace kturan {

/// Backtracking embedder of a fixed pattern into hosts.
///
/// Pattern vertices are placed in a connectivity-respecting order that
/// greedily maximizes the number of already-placed neighbors; each new
/// component starts at its highest-degree vertex.
class Embedder {
 public:
  explicit Embedder(const Graph& pattern, bool induced = false);

  /// Calls `visit(image_set)` for every injective edge-preserving map
  /// (non-edge preserving too when induced). Stops early when visit
  /// returns false. Returns the number of maps visited.
  Count for_each(const Graph& host, const std::function<bool(VertexSet)>& visit) const;

  /// Number of injective maps, without a callback.
  Count count(const Graph& host) const;

  /// Exists at least one map.
  bool any(const Graph& host) const;

  const Graph& pattern() const { return pattern_; }

 private:
  template <class Visit>
  bool extend(const Graph& host, std::size_t i, VertexSet used,
              std::array<int, Graph::kMaxVertices>& image, Visit& visit) const;

  Graph pattern_;
  bool induced_;
  std::vector<int> order_;
  // per position: earlier positions adjacent / non-adjacent to it
  std::vector<std::vector<int>> back_adj_;
  std::vector<std::vector<int>> back_non_;
};

/// Number of (not necessarily induced) subgraphs of g isomorphic to h.
/// A 0-vertex pattern has exactly one copy.
Count count_copies(const Graph& g, const Graph& h);

/// Number of vertex subsets of g that induce a graph isomorphic to h.
Count count_induced_copies(const Graph& g, const Graph& h);

/// All induced subgraphs of h up to isomorphism, the 0-vertex graph
/// included, ordered by vertex count and then canonical form.
std::vector<Graph> induced_family(const Graph& h);

/// N(H^ind, G): copies of every member of the induced family of h, with the
/// 0-vertex member contributing 1.
Count count_induced_family(const Graph& g, const Graph& h);

bool contains(const Graph& g, const Graph& f);
inline bool is_free(const Graph& g, const Graph& f) { return !contains(g, f); }
bool is_family_free(const Graph& g, std::span<const Graph> family);

/// Copies of h whose vertex set meets s in exactly `meet` vertices.
Count count_copies_meeting(const Graph& g, const Graph& h, VertexSet s, int meet);

/// Distinct vertex sets of g that carry at least one copy of h.
std::vector<VertexSet> copy_vertex_sets(const Graph& g, const Graph& h);

}  // namespace kturan
