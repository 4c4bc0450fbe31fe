#include "kturan/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "kturan/counting.hpp"
#include "kturan/graph6.hpp"

namespace kturan {

// ---------------------------------------------------------------- objective

std::string Objective::to_text() const {
  switch (kind) {
    case Kind::Copies:
      return "copies:" + encode_graph6(pattern);
    case Kind::Edges:
      return "edges";
    case Kind::ExStar:
      return "exstar:" + std::to_string(k);
    case Kind::ExBarInduced:
      return "exbar:" + encode_graph6(pattern);
  }
  return {};
}

Objective Objective::from_text(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? "" : text.substr(colon + 1);
  if (head == "edges") return edges();
  if (head == "copies") return copies(decode_graph6(arg));
  if (head == "exbar") return exbar(decode_graph6(arg));
  if (head == "exstar") return exstar(std::stoi(std::string(arg)));
  throw std::invalid_argument("unknown objective '" + std::string(text) + "'");
}

struct ObjectiveEvaluator::Term {
  Embedder embedder;
  Count aut;
  Count weight;
};

ObjectiveEvaluator::ObjectiveEvaluator(const Objective& objective) : objective_(objective) {
  auto add = [&](const Graph& h, Count weight) {
    terms_.push_back(std::make_shared<const Term>(Term{Embedder(h), automorphism_count(h), weight}));
  };
  switch (objective.kind) {
    case Objective::Kind::Copies:
      if (objective.pattern.order() == 0) throw std::invalid_argument("empty pattern");
      add(objective.pattern, 1);
      break;
    case Objective::Kind::Edges:
      break;
    case Objective::Kind::ExStar:
      if (objective.k < 2) throw std::invalid_argument("ex* needs k >= 2");
      add(complete(3), 1);
      break;
    case Objective::Kind::ExBarInduced:
      for (const Graph& member : induced_family(objective.pattern))
        if (member.order() > 0) add(member, 1);
      break;
  }
}

Count ObjectiveEvaluator::operator()(const Graph& g) const {
  Count total = 0;
  switch (objective_.kind) {
    case Objective::Kind::Edges:
      return g.edge_count();
    case Objective::Kind::ExStar:
      total = static_cast<Count>(objective_.k - 1) * g.edge_count();
      break;
    case Objective::Kind::ExBarInduced:
      total = 1;  // the 0-vertex member
      break;
    case Objective::Kind::Copies:
      break;
  }
  for (const auto& t : terms_) total += t->weight * (t->embedder.count(g) / t->aut);
  return total;
}

// ---------------------------------------------------------------- enumeration

namespace {

using Clock = std::chrono::steady_clock;

class Generator {
 public:
  Generator(int n, const std::function<void(const Graph&)>& visit,
            const std::function<bool(const Graph&)>& cut, ShardSpec shard, double budget)
      : n_(n), visit_(visit), cut_(cut), shard_(shard), depth_(std::min(shard.depth, n)) {
    if (budget > 0)
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(budget));
  }

  EnumerationStats run() {
    walk(Graph(0), 0, true);
    return {explored_, !aborted_};
  }

 private:
  void walk(const Graph& node, int level, bool owned) {
    if (aborted_) return;
    if (level == depth_) owned = (counter_++ % static_cast<Count>(shard_.parts)) ==
                                 static_cast<Count>(shard_.index);
    if (!owned) return;
    if (level >= depth_ || shard_.index == 0) ++explored_;
    if (deadline_ && (explored_ & 255) == 0 && Clock::now() > *deadline_) {
      aborted_ = true;
      return;
    }
    if (cut_ && cut_(node)) return;
    if (level == n_) {
      visit_(node);
      return;
    }
    for (const Graph& child : children(node)) walk(child, level + 1, owned);
  }

  // Canonical augmentation: a child is kept when the new vertex is equivalent
  // to the canonical deletion vertex (the max-degree vertex placed last by the
  // canonical labeling), i.e. when deleting that vertex gives back the parent.
  static std::vector<Graph> children(const Graph& parent) {
    const int m = parent.order();
    std::vector<Graph> out;
    const VertexSet top = VertexSet{1} << m;
    for (VertexSet s = 0; s < top; ++s) {
      const int new_deg = popcount(s);
      bool max_degree = true;
      for (int v = 0; v < m && max_degree; ++v)
        if (parent.degree(v) + static_cast<int>((s >> v) & 1U) > new_deg) max_degree = false;
      if (!max_degree) continue;

      Graph child(m + 1);
      for (int u = 0; u < m; ++u)
        for (VertexSet nb = parent.neighbors(u); nb; nb &= nb - 1)
          if (lowest(nb) > u) child.add_edge(u, lowest(nb));
      for (VertexSet t = s; t; t &= t - 1) child.add_edge(m, lowest(t));

      const Labeling lab = canonical_labeling(child);
      int w = m;
      for (int v = 0; v <= m; ++v)
        if (child.degree(v) == new_deg && lab.position[v] > lab.position[w]) w = v;
      if (w != m && !same_orbit(lab, w, m, m + 1) &&
          !(canonical_graph(delete_vertex(child, w)) == parent))
        continue;

      Graph canon = child.relabeled(lab.position);
      if (std::find(out.begin(), out.end(), canon) == out.end()) out.push_back(std::move(canon));
    }
    return out;
  }

  static bool same_orbit(const Labeling& lab, int a, int b, int n) {
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : lab.automorphisms)
      for (int x = 0; x < n; ++x) {
        const int ra = find(x);
        const int rb = find(gamma[x]);
        if (ra != rb) parent[ra] = rb;
      }
    return find(a) == find(b);
  }

  int n_;
  const std::function<void(const Graph&)>& visit_;
  const std::function<bool(const Graph&)>& cut_;
  ShardSpec shard_;
  int depth_;
  std::optional<Clock::time_point> deadline_;
  Count counter_ = 0;
  Count explored_ = 0;
  bool aborted_ = false;
};

}  // namespace

EnumerationStats enumerate_graphs(int n, const std::function<void(const Graph&)>& visit,
                                  const std::function<bool(const Graph&)>& cut, ShardSpec shard,
                                  double budget_seconds) {
  if (n < 0 || n > Graph::kMaxVertices) throw std::invalid_argument("bad enumeration order");
  if (shard.parts < 1 || shard.index < 0 || shard.index >= shard.parts || shard.depth < 0)
    throw std::invalid_argument("bad shard specification");
  return Generator(n, visit, cut, shard, budget_seconds).run();
}

std::vector<Graph> enumerate_graphs(int n) {
  std::vector<Graph> out;
  enumerate_graphs(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

// ---------------------------------------------------------------- problems

std::string SearchProblem::key() const {
  std::string s = "n=" + std::to_string(n) + ";objective=" + objective.to_text() + ";forbid=";
  for (std::size_t i = 0; i < forbidden.size(); ++i) {
    if (i) s += ",";
    s += encode_graph6(forbidden[i]);
  }
  return s;
}

std::string SearchProblem::to_text() const {
  std::ostringstream os;
  os << key() << ";shard=" << shard.index << "/" << shard.parts << ";depth=" << shard.depth
     << ";budget=" << budget_seconds << ";cap=" << witness_cap << ";prune=" << (prune ? 1 : 0)
     << ";max_n=" << max_n;
  return os.str();
}

SearchProblem SearchProblem::from_text(std::string_view text) {
  SearchProblem p;
  bool have_n = false;
  bool have_objective = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view field = text.substr(start, end - start);
    start = end + 1;
    if (field.empty()) continue;
    const auto eq = field.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("descriptor field without '=': " + std::string(field));
    const std::string name(field.substr(0, eq));
    const std::string value(field.substr(eq + 1));
    if (name == "n") {
      p.n = std::stoi(value);
      have_n = true;
    } else if (name == "objective") {
      p.objective = Objective::from_text(value);
      have_objective = true;
    } else if (name == "forbid") {
      std::size_t a = 0;
      while (a < value.size()) {
        auto b = value.find(',', a);
        if (b == std::string::npos) b = value.size();
        p.forbidden.push_back(decode_graph6(value.substr(a, b - a)));
        a = b + 1;
      }
    } else if (name == "shard") {
      const auto slash = value.find('/');
      if (slash == std::string::npos) throw std::invalid_argument("shard must be i/parts");
      p.shard.index = std::stoi(value.substr(0, slash));
      p.shard.parts = std::stoi(value.substr(slash + 1));
    } else if (name == "depth") {
      p.shard.depth = std::stoi(value);
    } else if (name == "budget") {
      p.budget_seconds = std::stod(value);
    } else if (name == "cap") {
      p.witness_cap = std::stoul(value);
    } else if (name == "prune") {
      p.prune = value != "0";
    } else if (name == "max_n") {
      p.max_n = std::stoi(value);
    } else {
      throw std::invalid_argument("unknown descriptor field '" + name + "'");
    }
  }
  if (!have_n || !have_objective) throw std::invalid_argument("descriptor needs n and objective");
  p.validate();
  return p;
}

void SearchProblem::validate() const {
  if (n < 0 || n > max_n)
    throw std::invalid_argument("host size " + std::to_string(n) + " outside 0.." +
                                std::to_string(max_n));
  if (forbidden.empty()) throw std::invalid_argument("forbidden family is empty");
  if (shard.parts < 1 || shard.index < 0 || shard.index >= shard.parts || shard.depth < 0)
    throw std::invalid_argument("bad shard specification");
}

std::string ExtremalResult::to_record() const {
  std::ostringstream os;
  os << "problem=" << problem << " value=";
  if (value) {
    os << *value;
  } else {
    os << "none";
  }
  os << " count=" << witness_count << " explored=" << explored
     << " exhaustive=" << (exhaustive ? 1 : 0) << " witnesses=";
  for (std::size_t i = 0; i < witnesses.size(); ++i) os << (i ? "," : "") << witnesses[i].bytes;
  return os.str();
}

namespace {

void offer(ExtremalResult& r, Count value, CanonicalForm witness, std::size_t cap,
           Count multiplicity = 1) {
  if (!r.value || value > *r.value) {
    r.value = value;
    r.witnesses.clear();
    r.witness_count = 0;
  } else if (value < *r.value) {
    return;
  }
  r.witness_count += multiplicity;
  auto it = std::lower_bound(r.witnesses.begin(), r.witnesses.end(), witness);
  if (it != r.witnesses.end() && *it == witness) return;
  r.witnesses.insert(it, std::move(witness));
  if (r.witnesses.size() > cap) r.witnesses.pop_back();
}

}  // namespace

ExtremalResult brute_force_ex(const SearchProblem& problem) {
  problem.validate();
  std::vector<Embedder> forbidden;
  for (const Graph& f : problem.forbidden) forbidden.emplace_back(f);
  const ObjectiveEvaluator evaluate(problem.objective);

  auto has_forbidden = [&](const Graph& g) {
    return std::any_of(forbidden.begin(), forbidden.end(),
                       [&](const Embedder& e) { return e.any(g); });
  };

  ExtremalResult result;
  result.problem = problem.key();
  result.n = problem.n;
  auto visit = [&](const Graph& g) {
    if (!problem.prune && has_forbidden(g)) return;
    offer(result, evaluate(g), CanonicalForm{encode_graph6(g)}, problem.witness_cap);
  };
  std::function<bool(const Graph&)> cut;
  if (problem.prune) cut = has_forbidden;
  const auto stats =
      enumerate_graphs(problem.n, visit, cut, problem.shard, problem.budget_seconds);
  result.explored = stats.explored;
  result.exhaustive = stats.complete;
  return result;
}

ExtremalResult exstar_brute(int n, const Graph& f, int k) {
  if (k < 2) throw std::invalid_argument("ex* needs k >= 2");
  SearchProblem p;
  p.n = n;
  p.forbidden = {f};
  p.objective = Objective::exstar(k);
  return brute_force_ex(p);
}

ExtremalResult exbar_brute(int n, const Graph& h, const Graph& f) {
  SearchProblem p;
  p.n = n;
  p.forbidden = {f};
  p.objective = Objective::exbar(h);
  return brute_force_ex(p);
}

std::vector<SearchProblem> shard(const SearchProblem& problem, int parts) {
  if (parts < 1) throw std::invalid_argument("shard count must be positive");
  std::vector<SearchProblem> out;
  for (int i = 0; i < parts; ++i) {
    SearchProblem p = problem;
    p.shard.index = i;
    p.shard.parts = parts;
    out.push_back(std::move(p));
  }
  return out;
}

ExtremalResult merge(std::span<const ExtremalResult> results, std::size_t witness_cap) {
  if (results.empty()) throw std::invalid_argument("nothing to merge");
  ExtremalResult out;
  out.problem = results.front().problem;
  out.n = results.front().n;
  for (const auto& r : results) {
    if (r.problem != out.problem) throw std::invalid_argument("cannot merge different problems");
    out.explored += r.explored;
    out.exhaustive = out.exhaustive && r.exhaustive;
    if (r.value) {
      if (!out.value || *r.value > *out.value) {
        out.value = r.value;
        out.witnesses.clear();
        out.witness_count = 0;
      }
      if (*r.value == *out.value) out.witness_count += r.witness_count;
    }
  }
  if (out.value) {
    std::set<CanonicalForm> pool;
    for (const auto& r : results)
      if (r.value == out.value) pool.insert(r.witnesses.begin(), r.witnesses.end());
    for (const auto& w : pool) {
      if (out.witnesses.size() == witness_cap) break;
      out.witnesses.push_back(w);
    }
  }
  return out;
}

}  // namespace kturan
