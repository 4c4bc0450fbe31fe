#pragma once

#include <compare>
#include <string>
#include <vector>

#include "kturan/graph.hpp"

namespace kturan {

/// Byte string identifying an isomorphism class: the graph6 text of the
/// canonically relabeled graph.
struct CanonicalForm {
  std::string bytes;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Result of the canonical labeling search.
struct Labeling {
  /// order[p] is the vertex placed at canonical position p.
  std::vector<int> order;
  /// position[v] is the canonical position of vertex v.
  std::vector<int> position;
  /// Automorphisms discovered while searching, as vertex maps v -> image[v].
  std::vector<std::vector<int>> automorphisms;
};

/// Canonical labeling by equitable partition refinement plus individualization,
/// branching on the first smallest non-singleton cell, with automorphism
/// pruning. The labeling maximizes the permuted adjacency rows.
Labeling canonical_labeling(const Graph& g);

/// g relabeled into canonical position order.
Graph canonical_graph(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// |Aut(g)| by exhaustive backtracking over degree- and cell-compatible
/// bijections. Intended for pattern-sized graphs (up to about 12 vertices).
Count automorphism_count(const Graph& g);

}  // namespace kturan
