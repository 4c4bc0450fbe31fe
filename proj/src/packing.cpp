#include "kturan/packing.hpp"

#include <algorithm>
#include <stdexcept>

#include "kturan/counting.hpp"

namespace kturan {

VertexSet Packing::support() const {
  VertexSet s = 0;
  for (VertexSet c : copies) s |= c;
  return s;
}

bool vertex_list_less(VertexSet a, VertexSet b) {
  const VertexSet diff = a ^ b;
  if (!diff) return false;
  const int x = lowest(diff);
  if (a & bit(x)) return (b >> x) != 0;
  return (a >> x) == 0;
}

namespace {

// Branch and bound for maximum set packing: branch on the lowest vertex that
// some live set covers, either covering it with one of those sets or
// discarding it. Bound: live sets that still fit and vertices left / |F|.
class SetPacker {
 public:
  SetPacker(const std::vector<VertexSet>& sets, int pattern_order)
      : sets_(sets), f_(pattern_order) {}

  // Largest packing among sets[first..] inside `avail`, stopping once
  // `target` copies are found.
  std::size_t solve(VertexSet avail, std::size_t first, std::size_t target) {
    best_ = 0;
    target_ = target;
    std::vector<int> live;
    for (std::size_t i = first; i < sets_.size(); ++i)
      if (!(sets_[i] & ~avail)) live.push_back(static_cast<int>(i));
    branch(avail, live, 0);
    return best_;
  }

 private:
  void branch(VertexSet avail, const std::vector<int>& cand, std::size_t cur) {
    if (best_ >= target_) return;
    std::vector<int> live;
    live.reserve(cand.size());
    VertexSet cover = 0;
    for (int i : cand)
      if (!(sets_[i] & ~avail)) {
        live.push_back(i);
        cover |= sets_[i];
      }
    best_ = std::max(best_, cur);
    if (live.empty()) return;
    const std::size_t by_vertices = static_cast<std::size_t>(popcount(cover) / f_);
    if (cur + std::min(by_vertices, live.size()) <= best_) return;

    const int v = lowest(cover);
    for (int i : live)
      if (sets_[i] & bit(v)) branch(avail & ~sets_[i], live, cur + 1);
    branch(avail & ~bit(v), live, cur);
  }

  const std::vector<VertexSet>& sets_;
  int f_;
  std::size_t best_ = 0;
  std::size_t target_ = 0;
};

std::vector<VertexSet> sorted_copies(const Graph& g, const Graph& f) {
  if (f.order() < 1) throw std::invalid_argument("packing pattern needs a vertex");
  auto sets = copy_vertex_sets(g, f);
  std::sort(sets.begin(), sets.end(), vertex_list_less);
  return sets;
}

constexpr std::size_t kUnbounded = ~std::size_t{0};

}  // namespace

std::size_t max_packing_size(const Graph& g, const Graph& f) {
  const auto sets = sorted_copies(g, f);
  return SetPacker(sets, f.order()).solve(g.vertices(), 0, kUnbounded);
}

Packing max_disjoint_packing(const Graph& g, const Graph& f) {
  const auto sets = sorted_copies(g, f);
  SetPacker packer(sets, f.order());
  const std::size_t best = packer.solve(g.vertices(), 0, kUnbounded);

  Packing out;
  VertexSet avail = g.vertices();
  for (std::size_t i = 0; i < sets.size() && out.size() < best; ++i) {
    if (sets[i] & ~avail) continue;
    const std::size_t need = best - out.size() - 1;
    if (need == 0 || packer.solve(avail & ~sets[i], i + 1, need) >= need) {
      out.copies.push_back(sets[i]);
      avail &= ~sets[i];
    }
  }
  return out;
}

bool is_kF_free(const Graph& g, int k, const Graph& f) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (static_cast<long>(k) * f.order() > g.order()) return true;
  const auto sets = sorted_copies(g, f);
  if (sets.size() < static_cast<std::size_t>(k)) return true;
  return SetPacker(sets, f.order()).solve(g.vertices(), 0, static_cast<std::size_t>(k)) <
         static_cast<std::size_t>(k);
}

Packing greedy_packing(const Graph& g, const Graph& f) {
  Packing out;
  VertexSet used = 0;
  for (VertexSet s : sorted_copies(g, f)) {
    if (s & used) continue;
    out.copies.push_back(s);
    used |= s;
  }
  return out;
}

CanonicalPartition canonical_partition(const Graph& g, const Graph& f) {
  CanonicalPartition part;
  part.packing = max_disjoint_packing(g, f);
  part.left = part.packing.support();
  part.right = g.vertices() & ~part.left;
  if (contains(g.induced(part.right), f))
    throw std::logic_error("remainder of a maximum packing still contains the pattern");
  return part;
}

}  // namespace kturan
