#include "kturan/counting.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>

#include "kturan/canonical.hpp"

namespace kturan {

Embedder::Embedder(const Graph& pattern, bool induced) : pattern_(pattern), induced_(induced) {
  const int k = pattern.order();
  VertexSet placed = 0;
  while (static_cast<int>(order_.size()) < k) {
    int pick = -1;
    int pick_back = -1;
    for (VertexSet c = pattern.vertices() & ~placed; c; c &= c - 1) {
      const int v = lowest(c);
      const int back = popcount(pattern.neighbors(v) & placed);
      if (back > pick_back || (back == pick_back && pattern.degree(v) > pattern.degree(pick))) {
        pick = v;
        pick_back = back;
      }
    }
    order_.push_back(pick);
    placed |= bit(pick);
  }
  back_adj_.resize(k);
  back_non_.resize(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < i; ++j)
      (pattern.adjacent(order_[i], order_[j]) ? back_adj_ : back_non_)[i].push_back(j);
}

template <class Visit>
bool Embedder::extend(const Graph& host, std::size_t i, VertexSet used,
                      std::array<int, Graph::kMaxVertices>& image, Visit& visit) const {
  if (i == order_.size()) return visit(used);
  VertexSet cand = host.vertices() & ~used;
  for (int j : back_adj_[i]) cand &= host.neighbors(image[j]);
  if (induced_)
    for (int j : back_non_[i]) cand &= ~host.neighbors(image[j]);
  const int need = pattern_.degree(order_[i]);
  for (; cand; cand &= cand - 1) {
    const int w = lowest(cand);
    if (host.degree(w) < need) continue;
    image[i] = w;
    if (!extend(host, i + 1, used | bit(w), image, visit)) return false;
  }
  return true;
}

Count Embedder::for_each(const Graph& host, const std::function<bool(VertexSet)>& visit) const {
  if (pattern_.order() > host.order()) return 0;
  std::array<int, Graph::kMaxVertices> image{};
  Count n = 0;
  auto wrapped = [&](VertexSet s) {
    ++n;
    return visit(s);
  };
  extend(host, 0, 0, image, wrapped);
  return n;
}

Count Embedder::count(const Graph& host) const {
  if (pattern_.order() > host.order()) return 0;
  if (!induced_ && pattern_.edge_count() > host.edge_count()) return 0;
  std::array<int, Graph::kMaxVertices> image{};
  Count n = 0;
  auto tally = [&n](VertexSet) {
    ++n;
    return true;
  };
  extend(host, 0, 0, image, tally);
  return n;
}

bool Embedder::any(const Graph& host) const {
  if (pattern_.order() > host.order()) return false;
  if (!induced_ && pattern_.edge_count() > host.edge_count()) return false;
  std::array<int, Graph::kMaxVertices> image{};
  bool found = false;
  auto stop = [&found](VertexSet) {
    found = true;
    return false;
  };
  extend(host, 0, 0, image, stop);
  return found;
}

namespace {

Count exact_divide(Count maps, Count aut) {
  if (maps % aut != 0)
    throw std::logic_error("embedding count " + std::to_string(maps) +
                           " not divisible by |Aut| = " + std::to_string(aut));
  return maps / aut;
}

}  // namespace

Count count_copies(const Graph& g, const Graph& h) {
  if (h.order() == 0) return 1;
  return exact_divide(Embedder(h).count(g), automorphism_count(h));
}

Count count_induced_copies(const Graph& g, const Graph& h) {
  if (h.order() == 0) return 1;
  return exact_divide(Embedder(h, true).count(g), automorphism_count(h));
}

std::vector<Graph> induced_family(const Graph& h) {
  if (h.order() > 20) throw std::invalid_argument("induced family limited to 20 vertices");
  std::vector<std::pair<std::pair<int, CanonicalForm>, Graph>> found;
  std::unordered_set<std::string> seen;
  const VertexSet top = VertexSet{1} << h.order();
  for (VertexSet s = 0; s < top; ++s) {
    Graph sub = h.induced(s);
    CanonicalForm cf = canonical_form(sub);
    if (seen.insert(cf.bytes).second)
      found.push_back({{sub.order(), cf}, canonical_graph(sub)});
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

Count count_induced_family(const Graph& g, const Graph& h) {
  Count total = 0;
  for (const Graph& member : induced_family(h)) total += count_copies(g, member);
  return total;
}

bool contains(const Graph& g, const Graph& f) { return Embedder(f).any(g); }

bool is_family_free(const Graph& g, std::span<const Graph> family) {
  return std::none_of(family.begin(), family.end(),
                      [&](const Graph& f) { return contains(g, f); });
}

Count count_copies_meeting(const Graph& g, const Graph& h, VertexSet s, int meet) {
  if (meet < 0 || meet > h.order())
    throw std::invalid_argument("intersection size outside 0..|V(H)|");
  if (s & ~g.vertices()) throw std::invalid_argument("vertex set not inside host");
  if (h.order() == 0) return meet == 0 ? 1 : 0;
  Count maps = 0;
  Embedder(h).for_each(g, [&](VertexSet image) {
    if (popcount(image & s) == meet) ++maps;
    return true;
  });
  return exact_divide(maps, automorphism_count(h));
}

std::vector<VertexSet> copy_vertex_sets(const Graph& g, const Graph& h) {
  std::unordered_set<VertexSet> seen;
  Embedder(h).for_each(g, [&](VertexSet image) {
    seen.insert(image);
    return true;
  });
  std::vector<VertexSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kturan
