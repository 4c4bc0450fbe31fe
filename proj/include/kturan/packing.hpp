#pragma once

#include <vector>

#include "kturan/graph.hpp"

namespace kturan {

/// Pairwise disjoint vertex sets, each carrying a copy of the packed pattern.
struct Packing {
  std::vector<VertexSet> copies;

  std::size_t size() const { return copies.size(); }
  VertexSet support() const;
};

/// Split of V(G) into the support L of a maximum packing and the rest R.
struct CanonicalPartition {
  VertexSet left = 0;
  VertexSet right = 0;
  Packing packing;
};

/// Orders vertex sets by their increasing vertex lists, lexicographically.
bool vertex_list_less(VertexSet a, VertexSet b);

/// Maximum vertex-disjoint packing of f-copies in g. Among maximum packings
/// the one whose sorted list of vertex sets is lexicographically least is
/// returned.
Packing max_disjoint_packing(const Graph& g, const Graph& f);

/// Size of a maximum packing, without the tie-breaking pass.
std::size_t max_packing_size(const Graph& g, const Graph& f);

/// True iff g has no k vertex-disjoint copies of f. Stops at the first k.
bool is_kF_free(const Graph& g, int k, const Graph& f);

/// First-fit packing over copies in lexicographic order.
Packing greedy_packing(const Graph& g, const Graph& f);

CanonicalPartition canonical_partition(const Graph& g, const Graph& f);

}  // namespace kturan
