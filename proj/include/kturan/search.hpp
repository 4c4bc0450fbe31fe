#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kturan/canonical.hpp"
#include "kturan/graph.hpp"

namespace kturan {

/// Quantity maximized over the admissible hosts.
struct Objective {
  enum class Kind { Copies, Edges, ExStar, ExBarInduced };

  Kind kind = Kind::Edges;
  Graph pattern;  // Copies, ExBarInduced
  int k = 2;      // ExStar: (k-1)|E(G)| + N(K_3, G)

  static Objective copies(Graph h) { return {Kind::Copies, std::move(h), 2}; }
  static Objective edges() { return {Kind::Edges, Graph(), 2}; }
  static Objective exstar(int k) { return {Kind::ExStar, Graph(), k}; }
  static Objective exbar(Graph h) { return {Kind::ExBarInduced, std::move(h), 2}; }

  /// e.g. `copies:Bw`, `edges`, `exstar:2`, `exbar:Bw`
  std::string to_text() const;
  static Objective from_text(std::string_view text);
};

/// Evaluates an objective repeatedly; precomputes pattern data once.
class ObjectiveEvaluator {
 public:
  explicit ObjectiveEvaluator(const Objective& objective);
  Count operator()(const Graph& g) const;

 private:
  struct Term;
  Objective objective_;
  std::vector<std::shared_ptr<const Term>> terms_;
};

/// Which part of the enumeration tree a search covers: the tree nodes at
/// `depth` are numbered in generation order and shard i keeps those with
/// number % parts == i.
struct ShardSpec {
  int index = 0;
  int parts = 1;
  int depth = 5;
};

struct SearchProblem {
  int n = 0;
  std::vector<Graph> forbidden;
  Objective objective;
  ShardSpec shard;
  /// Wall-clock budget in seconds; 0 means unlimited.
  double budget_seconds = 0;
  std::size_t witness_cap = 16;
  /// Cut subtrees at the first forbidden subgraph.
  bool prune = true;
  int max_n = 10;

  /// Identity of the mathematical problem (n, objective, forbidden family).
  std::string key() const;
  /// Plain-text shard descriptor: the key plus shard and run settings.
  std::string to_text() const;
  static SearchProblem from_text(std::string_view text);

  void validate() const;
};

struct ExtremalResult {
  std::string problem;  // SearchProblem::key()
  int n = 0;
  std::optional<Count> value;  // empty when no admissible graph was seen
  std::vector<CanonicalForm> witnesses;  // smallest `witness_cap` forms, sorted
  Count witness_count = 0;               // all extremal classes seen
  Count explored = 0;                    // isomorphism classes visited
  bool exhaustive = true;

  /// One-line record: `problem=... value=... count=... explored=... exhaustive=... witnesses=g6,g6`
  std::string to_record() const;
};

struct EnumerationStats {
  Count explored = 0;
  bool complete = true;  // false when the budget ran out
};

/// Visits one representative (in canonical form) per isomorphism class of
/// n-vertex graphs, by canonical vertex augmentation. `cut` is checked at
/// every tree node; returning true drops the node and its subtree, which is
/// sound for properties closed under taking supergraphs.
EnumerationStats enumerate_graphs(int n, const std::function<void(const Graph&)>& visit,
                                  const std::function<bool(const Graph&)>& cut = nullptr,
                                  ShardSpec shard = {}, double budget_seconds = 0);

std::vector<Graph> enumerate_graphs(int n);

ExtremalResult brute_force_ex(const SearchProblem& problem);

ExtremalResult exstar_brute(int n, const Graph& f, int k);
ExtremalResult exbar_brute(int n, const Graph& h, const Graph& f);

/// Splits a problem into `parts` shards at the problem's shard depth.
std::vector<SearchProblem> shard(const SearchProblem& problem, int parts);

/// Combines shard results: max value, union of witnesses at the max, summed
/// counts. Throws std::invalid_argument when problems differ.
ExtremalResult merge(std::span<const ExtremalResult> results, std::size_t witness_cap = 16);

}  // namespace kturan
