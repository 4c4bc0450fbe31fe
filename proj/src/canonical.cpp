#include "kturan/canonical.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <numeric>

#include "kturan/graph6.hpp"

namespace kturan {

namespace {

// Ordered partition of the vertex set.
struct Cells {
  std::array<VertexSet, Graph::kMaxVertices> cell{};
  int size = 0;

  bool discrete(int n) const { return size == n; }
};

// Splits cells until every cell has a constant neighbor count into every other
// cell. Sub-cells are ordered by ascending count, so the result depends only on
// the isomorphism type of (graph, starting partition).
void refine(const Graph& g, Cells& p) {
  std::array<int, Graph::kMaxVertices> count{};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int w = 0; w < p.size && !changed; ++w) {
      const VertexSet splitter = p.cell[w];
      for (int x = 0; x < p.size; ++x) {
        const VertexSet target = p.cell[x];
        if (popcount(target) <= 1) continue;
        int lo = INT_MAX;
        int hi = -1;
        for (VertexSet t = target; t; t &= t - 1) {
          const int v = lowest(t);
          count[v] = popcount(g.neighbors(v) & splitter);
          lo = std::min(lo, count[v]);
          hi = std::max(hi, count[v]);
        }
        if (lo == hi) continue;

        std::array<int, Graph::kMaxVertices + 1> distinct{};
        int nd = 0;
        for (VertexSet t = target; t; t &= t - 1) {
          const int c = count[lowest(t)];
          if (std::find(distinct.begin(), distinct.begin() + nd, c) == distinct.begin() + nd)
            distinct[nd++] = c;
        }
        std::sort(distinct.begin(), distinct.begin() + nd);

        // shift the tail right to make room for nd-1 new cells
        for (int i = p.size - 1; i > x; --i) p.cell[i + nd - 1] = p.cell[i];
        for (int d = 0; d < nd; ++d) {
          VertexSet part = 0;
          for (VertexSet t = target; t; t &= t - 1)
            if (count[lowest(t)] == distinct[d]) part |= bit(lowest(t));
          p.cell[x + d] = part;
        }
        p.size += nd - 1;
        changed = true;
        break;
      }
    }
  }
}

using Rows = std::array<VertexSet, Graph::kMaxVertices>;
using Perm = std::array<int, Graph::kMaxVertices>;

int compare_rows(const Rows& a, const Rows& b, int n) {
  for (int i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

  void run() {
    Cells root;
    if (n_ > 0) {
      root.cell[0] = g_.vertices();
      root.size = 1;
    }
    search(root, 0);
  }

  const Perm& best_order() const { return best_lab_; }
  const std::vector<Perm>& generators() const { return gens_; }

 private:
  static constexpr int kNoJump = INT_MAX;

  int search(Cells cells, int depth) {
    refine(g_, cells);
    if (cells.discrete(n_)) return leaf(cells);

    int target = -1;
    int best_size = INT_MAX;
    for (int i = 0; i < cells.size; ++i) {
      const int s = popcount(cells.cell[i]);
      if (s > 1 && s < best_size) {
        best_size = s;
        target = i;
      }
    }

    VertexSet explored = 0;
    for (VertexSet cand = cells.cell[target]; cand; cand &= cand - 1) {
      const int v = lowest(cand);
      if (explored && equivalent_to_explored(v, explored)) continue;

      Cells child;
      child.size = cells.size + 1;
      for (int i = 0; i < target; ++i) child.cell[i] = cells.cell[i];
      child.cell[target] = bit(v);
      child.cell[target + 1] = cells.cell[target] & ~bit(v);
      for (int i = target + 1; i < cells.size; ++i) child.cell[i + 1] = cells.cell[i];

      path_.push_back(v);
      const int jump = search(child, depth + 1);
      path_.pop_back();
      explored |= bit(v);
      if (jump < depth) return jump;
    }
    return kNoJump;
  }

  // Orbit test under the automorphisms found so far that fix the current
  // path pointwise.
  bool equivalent_to_explored(int v, VertexSet explored) const {
    std::array<int, Graph::kMaxVertices> parent;
    std::iota(parent.begin(), parent.begin() + n_, 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const Perm& gamma : gens_) {
      bool fixes = true;
      for (int p : path_)
        if (gamma[p] != p) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) {
        const int a = find(x);
        const int b = find(gamma[x]);
        if (a != b) parent[a] = b;
      }
    }
    if (!any) return false;
    const int root = find(v);
    for (VertexSet e = explored; e; e &= e - 1)
      if (find(lowest(e)) == root) return true;
    return false;
  }

  int leaf(const Cells& cells) {
    Perm lab{};
    Perm pos{};
    for (int i = 0; i < n_; ++i) {
      lab[i] = lowest(cells.cell[i]);
      pos[lab[i]] = i;
    }
    Rows rows{};
    for (int i = 0; i < n_; ++i) {
      VertexSet r = 0;
      for (VertexSet nb = g_.neighbors(lab[i]); nb; nb &= nb - 1) r |= bit(pos[lowest(nb)]);
      rows[i] = r;
    }

    if (!have_first_) {
      have_first_ = true;
      first_lab_ = best_lab_ = lab;
      first_rows_ = best_rows_ = rows;
      first_path_ = path_;
      return kNoJump;
    }
    if (compare_rows(rows, first_rows_, n_) == 0) {
      record(first_lab_, lab);
      std::size_t p = 0;
      while (p < path_.size() && p < first_path_.size() && path_[p] == first_path_[p]) ++p;
      return static_cast<int>(p);
    }
    const int cmp = compare_rows(rows, best_rows_, n_);
    if (cmp == 0) {
      record(best_lab_, lab);
    } else if (cmp > 0) {
      best_lab_ = lab;
      best_rows_ = rows;
    }
    return kNoJump;
  }

  void record(const Perm& from, const Perm& to) {
    Perm gamma{};
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    gens_.push_back(gamma);
  }

  const Graph& g_;
  int n_;
  std::vector<int> path_;
  std::vector<int> first_path_;
  bool have_first_ = false;
  Perm first_lab_{}, best_lab_{};
  Rows first_rows_{}, best_rows_{};
  std::vector<Perm> gens_;
};

}  // namespace

Labeling canonical_labeling(const Graph& g) {
  CanonSearch search(g);
  search.run();
  const int n = g.order();
  Labeling out;
  out.order.assign(search.best_order().begin(), search.best_order().begin() + n);
  out.position.assign(n, 0);
  for (int p = 0; p < n; ++p) out.position[out.order[p]] = p;
  for (const Perm& gamma : search.generators())
    out.automorphisms.emplace_back(gamma.begin(), gamma.begin() + n);
  return out;
}

Graph canonical_graph(const Graph& g) {
  const Labeling lab = canonical_labeling(g);
  return g.relabeled(lab.position);
}

CanonicalForm canonical_form(const Graph& g) { return {encode_graph6(canonical_graph(g))}; }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_graph(a) == canonical_graph(b);
}

namespace {

struct AutCounter {
  const Graph& g;
  std::vector<int> order;           // domain vertices in mapping order
  std::array<VertexSet, Graph::kMaxVertices> allowed{};  // cell of each vertex
  std::array<int, Graph::kMaxVertices> image{};
  Count leaves = 0;

  void run(std::size_t i, VertexSet used) {
    if (i == order.size()) {
      ++leaves;
      return;
    }
    const int v = order[i];
    VertexSet cand = allowed[v] & ~used;
    for (std::size_t j = 0; j < i; ++j) {
      const int u = order[j];
      cand &= g.adjacent(u, v) ? g.neighbors(image[u]) : ~g.neighbors(image[u]);
    }
    for (; cand; cand &= cand - 1) {
      const int w = lowest(cand);
      image[v] = w;
      run(i + 1, used | bit(w));
    }
  }
};

}  // namespace

Count automorphism_count(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 1;
  Cells cells;
  cells.cell[0] = g.vertices();
  cells.size = 1;
  refine(g, cells);

  AutCounter counter{g, {}, {}, {}, 0};
  for (int i = 0; i < cells.size; ++i)
    for (VertexSet c = cells.cell[i]; c; c &= c - 1) counter.allowed[lowest(c)] = cells.cell[i];

  // breadth-first within components so each new vertex is constrained early
  VertexSet placed = 0;
  while (placed != g.vertices()) {
    int start = lowest(g.vertices() & ~placed);
    std::vector<int> queue{start};
    placed |= bit(start);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (VertexSet nb = g.neighbors(queue[h]) & ~placed; nb; nb &= nb - 1) {
        queue.push_back(lowest(nb));
        placed |= bit(lowest(nb));
      }
    }
    counter.order.insert(counter.order.end(), queue.begin(), queue.end());
  }
  counter.run(0, 0);
  return counter.leaves;
}

}  // namespace kturan
