#include "kturan/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "kturan/constructions.hpp"
#include "kturan/counting.hpp"
#include "kturan/graph6.hpp"
#include "kturan/graph_spec.hpp"
#include "kturan/packing.hpp"

namespace kturan {

std::string to_string(Mode m) {
  switch (m) {
    case Mode::ExactEquality:
      return "ExactEquality";
    case Mode::LowerBoundVsOracle:
      return "LowerBoundVsOracle";
    case Mode::Sandwich:
      return "Sandwich";
    case Mode::ConstructionFreeness:
      return "ConstructionFreeness";
    case Mode::RatioTrend:
      return "RatioTrend";
  }
  return {};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Inconclusive:
      return "inconclusive";
    case Verdict::Reported:
      return "reported";
  }
  return {};
}

NRange parse_n_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    NRange r;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument("");
    } else {
      const std::string a = text.substr(0, dots);
      const std::string b = text.substr(dots + 2);
      r.lo = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument("");
      r.hi = std::stoi(b, &used);
      if (used != b.size()) throw std::invalid_argument("");
    }
    if (r.lo < 0 || r.hi < r.lo) throw std::invalid_argument("");
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad n-range '" + text + "'; expected a..b");
  }
}

bool TheoremCheck::failed() const {
  return std::any_of(rows.begin(), rows.end(),
                     [](const ReportRow& r) { return r.verdict == Verdict::Fail; });
}

ExtremalResult SearchCache::get(SearchProblem problem) {
  problem.budget_seconds = budget_seconds_;
  const std::string key = problem.key();
  std::shared_future<ExtremalResult> future;
  std::promise<ExtremalResult> promise;
  bool owner = false;
  {
    std::lock_guard lock(mutex_);
    auto it = results_.find(key);
    if (it == results_.end()) {
      future = promise.get_future().share();
      results_.emplace(key, future);
      owner = true;
    } else {
      future = it->second;
    }
  }
  if (owner) {
    try {
      promise.set_value(brute_force_ex(problem));
    } catch (...) {
      promise.set_exception(std::current_exception());
    }
  }
  return future.get();
}

// ---------------------------------------------------------------- check runs

class CheckRun {
 public:
  CheckRun(const CheckEntry& entry, Params params, NRange range, SearchCache& cache)
      : entry_(entry), params_(std::move(params)), range_(range), cache_(cache) {
    for (const auto& [k, v] : params_) {
      if (!param_text_.empty()) param_text_ += ";";
      param_text_ += k + "=" + v;
    }
  }

  NRange range() const { return range_; }

  int integer(const std::string& key) const {
    const std::string& v = param(key);
    try {
      std::size_t used = 0;
      const int x = std::stoi(v, &used);
      if (used == v.size()) return x;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(entry_.id + ": parameter " + key + "=" + v + " is not an integer");
  }
  Graph graph(const std::string& key) const { return build(parse_spec(param(key))); }
  std::vector<Graph> graphs(const std::string& key) const {
    std::vector<Graph> out;
    for (const auto& s : split_spec_list(param(key))) out.push_back(build(parse_spec(s)));
    return out;
  }
  const std::string& param(const std::string& key) const {
    auto it = params_.find(key);
    if (it == params_.end()) throw std::logic_error(entry_.id + ": missing parameter " + key);
    return it->second;
  }

  void require(bool hypothesis, const std::string& what) const {
    if (!hypothesis)
      throw std::invalid_argument(entry_.id + ": parameters violate the hypothesis " + what);
  }

  const ExtremalResult& search(int n, Objective objective, std::vector<Graph> forbidden) {
    SearchProblem p;
    p.n = n;
    p.objective = std::move(objective);
    p.forbidden = std::move(forbidden);
    const std::string key = p.key();
    auto it = local_.find(key);
    if (it == local_.end()) it = local_.emplace(key, cache_.get(p)).first;
    return it->second;
  }

  /// Exact maximum, or nullopt when the search did not finish.
  std::optional<Count> ex(int n, const Graph& h, std::vector<Graph> forbidden) {
    const auto& r = search(n, Objective::copies(h), std::move(forbidden));
    if (!r.exhaustive || !r.value) return std::nullopt;
    return r.value;
  }

  void row(int n, Mode mode, std::string expected, std::string actual, Verdict v) {
    rows_.push_back({entry_.id, n, param_text_, mode, std::move(expected), std::move(actual), v});
  }

  void holds(int n, Mode mode, std::string expected, std::string actual, bool ok) {
    row(n, mode, std::move(expected), std::move(actual), ok ? Verdict::Pass : Verdict::Fail);
  }

  void exact(int n, const std::string& what, Count expected, std::optional<Count> actual) {
    if (!actual) {
      row(n, Mode::ExactEquality, what + " == " + std::to_string(expected), "budget exceeded",
          Verdict::Inconclusive);
      return;
    }
    holds(n, Mode::ExactEquality, what + " == " + std::to_string(expected),
          std::to_string(*actual), *actual == expected);
  }

  /// actual >= bound, with the bound computed exactly.
  void at_least(int n, const std::string& what, Count bound, std::optional<Count> actual) {
    const std::string expected = what + " >= " + std::to_string(bound);
    if (!actual) {
      row(n, Mode::LowerBoundVsOracle, expected, "budget exceeded", Verdict::Inconclusive);
      return;
    }
    holds(n, Mode::LowerBoundVsOracle, expected, std::to_string(*actual), *actual >= bound);
  }

  void freeness(int n, const std::string& what, bool free) {
    holds(n, Mode::ConstructionFreeness, what, free ? "free" : "contains", free);
  }

  void ratio(int n, const std::string& what, std::optional<long double> numerator,
             long double denominator) {
    if (!numerator) {
      row(n, Mode::RatioTrend, what, "budget exceeded", Verdict::Inconclusive);
      return;
    }
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << static_cast<double>(*numerator / denominator);
    row(n, Mode::RatioTrend, what, os.str(), Verdict::Reported);
  }

  std::vector<ReportRow> take_rows() { return std::move(rows_); }
  void note(std::string s) { notes_ += s; }
  std::string take_notes() { return std::move(notes_); }

 private:
  const CheckEntry& entry_;
  Params params_;
  NRange range_;
  SearchCache& cache_;
  std::string param_text_;
  std::map<std::string, ExtremalResult> local_;
  std::vector<ReportRow> rows_;
  std::string notes_;
};

namespace {

std::optional<long double> as_real(std::optional<Count> c) {
  if (!c) return std::nullopt;
  return static_cast<long double>(*c);
}

long double power(long double base, long double exponent) { return std::pow(base, exponent); }

Graph decode_witness(const ExtremalResult& r) {
  if (r.witnesses.empty()) throw std::logic_error("search produced no witness");
  return decode_graph6(r.witnesses.front().bytes);
}

std::string num(Count c) { return std::to_string(c); }

std::string kf(int k, const std::string& f) { return k == 1 ? f : std::to_string(k) + "*" + f; }

// ex(n, K_s, K_t) = N(K_s, T_{t-1}(n)); the Turan graph is an extremal witness.
void check_erdos(CheckRun& run) {
  const int s = run.integer("s");
  const int t = run.integer("t");
  run.require(2 <= s && s < t, "2 <= s < t");
  for (int n = std::max(run.range().lo, t); n <= run.range().hi; ++n) {
    const Count expected = erdos_value(n, s, t);
    const auto& r = run.search(n, Objective::copies(complete(s)), {complete(t)});
    const auto value = r.exhaustive ? r.value : std::nullopt;
    run.exact(n, "ex(n,K" + std::to_string(s) + ",K" + std::to_string(t) + ")", expected, value);

    const Graph tg = turan(n, t - 1);
    const CanonicalForm cf = canonical_form(tg);
    const bool listed = std::binary_search(r.witnesses.begin(), r.witnesses.end(), cf);
    const bool beyond_cap = r.witness_count > r.witnesses.size() && is_free(tg, complete(t)) &&
                            value && count_copies(tg, complete(s)) == *value;
    if (!r.exhaustive) {
      run.row(n, Mode::ExactEquality, "T(n,t-1) is an extremal witness", "budget exceeded",
              Verdict::Inconclusive);
    } else {
      run.holds(n, Mode::ExactEquality, "T(n,t-1) is an extremal witness",
                listed ? "listed" : (beyond_cap ? "extremal, beyond witness cap" : "absent"),
                listed || beyond_cap);
    }
    const long double lead = static_cast<long double>(binomial(t - 1, s)) *
                             power(static_cast<long double>(n) / (t - 1), s);
    run.ratio(n, "ex / (C(t-1,s)(n/(t-1))^s)", as_real(value), lead);
  }
}

// ex(n, kF) - ex(n, F) stays within 2n on small hosts.
void check_gorgol(CheckRun& run) {
  const Graph f = run.graph("F");
  const int k = run.integer("k");
  run.require(k >= 1 && f.edge_count() >= 1, "k >= 1 and F non-empty");
  const std::string& fs = run.param("F");
  for (int n = run.range().lo; n <= run.range().hi; ++n) {
    const auto single = run.ex(n, complete(2), {f});
    const auto multi = run.ex(n, complete(2), {copies(k, f)});
    const std::string expected_text = "ex(n," + fs + ") <= ex(n," + kf(k, fs) + ") <= ex(n," +
                                      fs + ") + 2n";
    if (!single || !multi) {
      run.row(n, Mode::Sandwich, expected_text, "budget exceeded", Verdict::Inconclusive);
      continue;
    }
    const Count hi = *single + 2 * static_cast<Count>(n);
    run.holds(n, Mode::Sandwich, num(*single) + " <= x <= " + num(hi),
              num(*multi) + " (slack " + std::to_string(static_cast<long long>(hi) -
                                                        static_cast<long long>(*multi)) + ")",
              *single <= *multi && *multi <= hi);
  }
}

// Remark on alpha(H), the universal-join lower bound and the ex / exbar ratio.
void check_thm21(CheckRun& run) {
  const Graph h = run.graph("H");
  const Graph f = run.graph("F");
  const int k = run.integer("k");
  run.require(k >= 2, "k >= 2");
  run.require(h.order() >= 1, "|V(H)| >= 1");
  const Graph kF = copies(k, f);
  const int alpha = independence_number(h);
  const bool moreover = k >= h.order();
  if (!moreover) run.note("lower-bound rows skipped: k < |V(H)|");
  for (int n = run.range().lo; n <= run.range().hi; ++n) {
    const auto& bar = run.search(n, Objective::exbar(h), {f});
    const auto bar_value = bar.exhaustive ? bar.value : std::nullopt;
    if (f.edge_count() >= 1) run.at_least(n, "exbar(n,H,F) vs C(n,alpha(H))", binomial(n, alpha), bar_value);

    const auto ex_kf = run.ex(n, h, {kF});
    std::optional<long double> ratio;
    if (ex_kf && bar_value) ratio = static_cast<long double>(*ex_kf);
    run.ratio(n, "ex(n,H,kF) / exbar(n,H,F)", ratio,
              bar_value ? static_cast<long double>(*bar_value) : 1.0L);

    if (moreover && n - k + 1 >= 0) {
      const auto& small = run.search(n - k + 1, Objective::exbar(h), {f});
      if (!small.exhaustive || !small.value) {
        run.row(n, Mode::LowerBoundVsOracle, "exbar witness available", "budget exceeded",
                Verdict::Inconclusive);
        continue;
      }
      const Graph host = universal_join(k, decode_witness(small));
      run.freeness(n, "K_{k-1} + exbar witness is kF-free", is_kF_free(host, k, f));
      const Count built = count_copies(host, h);
      run.at_least(n, "N(H, K_{k-1}+G) vs exbar(n-k+1,H,F) - 1", *small.value - 1, built);
      run.at_least(n, "ex(n,H,kF) vs N(H, K_{k-1}+G)", built, ex_kf);
    }
  }
}

// Both lower-bound constructions for triangles in an F_1 u ... u F_k-free host.
void check_thm22(CheckRun& run) {
  const auto parts = run.graphs("parts");
  run.require(parts.size() >= 2, "at least two components");
  for (const Graph& p : parts) run.require(!isomorphic(p, complete(2)), "F_i different from K2");
  Graph f = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) f = disjoint_union(f, parts[i]);
  const Graph k3 = complete(3);

  for (int n = run.range().lo; n <= run.range().hi; ++n) {
    const auto whole = run.ex(n, k3, {f});
    Count best_single = 0;
    Count best_pair = 0;
    bool complete_data = true;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto& r = run.search(n, Objective::copies(k3), {parts[i]});
      if (!r.exhaustive || !r.value) {
        complete_data = false;
        continue;
      }
      const Graph witness = decode_witness(r);
      run.freeness(n, "F_" + std::to_string(i + 1) + "-extremal host is F-free", is_free(witness, f));
      run.at_least(n, "ex(n,K3,F) vs ex(n,K3,F_" + std::to_string(i + 1) + ")", *r.value, whole);
      best_single = std::max(best_single, *r.value);
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        const auto& r = run.search(n - 1, Objective::copies(complete(2)), {parts[i], parts[j]});
        if (!r.exhaustive || !r.value) {
          complete_data = false;
          continue;
        }
        const Graph host = universal_join(2, decode_witness(r));
        const std::string tag = std::to_string(i + 1) + std::to_string(j + 1);
        run.freeness(n, "K1 + {F_i,F_j}-extremal host is F-free (ij=" + tag + ")", is_free(host, f));
        const Count triangles = count_copies(host, k3);
        run.at_least(n, "N(K3, K1+G0) vs ex(n-1,{F_i,F_j}) (ij=" + tag + ")", *r.value, triangles);
        run.at_least(n, "ex(n,K3,F) vs N(K3, K1+G0) (ij=" + tag + ")", triangles, whole);
        best_pair = std::max(best_pair, *r.value);
      }
    }
    std::optional<long double> numerator;
    if (whole && complete_data) numerator = static_cast<long double>(*whole);
    run.ratio(n, "ex(n,K3,F) / (max ex(n,K3,F_i) + max ex(n-1,{F_i,F_j}))", numerator,
              static_cast<long double>(std::max<Count>(1, best_single + best_pair)));
  }
}

// ex*(n-k+1,F) <= ex(n,K3,kF), the ex* sandwich, the F* gadget and the
// upper-bound remainder.
void check_thm24(CheckRun& run) {
  const Graph f = run.graph("F");
  const int k = run.integer("k");
  const int u = run.integer("u");
  run.require(f.order() >= 4, "|V(F)| >= 4");
  run.require(k >= 2, "k >= 2");
  run.require(u >= 0 && u < f.order(), "u in V(F)");
  const Graph k3 = complete(3);
  const Graph kF = copies(k, f);
  const Graph fu = delete_vertex(f, u);

  {
    const Graph star = f_star(f, u, k);
    const int m = f_star_copies(f, k);
    const int n = star.order();
    run.holds(n, Mode::ConstructionFreeness, "F* minus center == " + std::to_string(m) + "*F_u",
              isomorphic(delete_vertex(star, 0), copies(m, fu)) ? "isomorphic" : "different",
              isomorphic(delete_vertex(star, 0), copies(m, fu)));
    const Count through = count_copies_meeting(star, f, bit(0), 1);
    run.holds(n, Mode::ConstructionFreeness,
              "copies of F through the center >= " + std::to_string(m), num(through),
              through >= static_cast<Count>(m));
  }

  for (int n = run.range().lo; n <= run.range().hi; ++n) {
    const auto target = run.ex(n, k3, {kF});
    const auto& star_small = run.search(n - k + 1, Objective::exstar(k), {f});
    const auto star_small_value = star_small.exhaustive ? star_small.value : std::nullopt;
    if (star_small_value && target) {
      run.holds(n, Mode::Sandwich, "ex*(n-k+1,F) = " + num(*star_small_value) + " <= ex(n,K3,kF)",
                num(*target), *star_small_value <= *target);
    } else {
      run.row(n, Mode::Sandwich, "ex*(n-k+1,F) <= ex(n,K3,kF)", "budget exceeded",
              Verdict::Inconclusive);
    }
    if (star_small_value) {
      const Graph host = universal_join(k, decode_witness(star_small));
      run.freeness(n, "K_{k-1} + ex* witness is kF-free", is_kF_free(host, k, f));
      run.at_least(n, "N(K3, K_{k-1}+G) vs ex*(n-k+1,F)", *star_small_value,
                   count_copies(host, k3));
    }

    const auto& star_here = run.search(n, Objective::exstar(k), {f});
    const auto tri = run.ex(n, k3, {f});
    const auto edges = run.ex(n, complete(2), {f});
    if (star_here.exhaustive && star_here.value && tri && edges) {
      const Count hi = static_cast<Count>(k - 1) * *edges + *tri;
      run.holds(n, Mode::Sandwich,
                num(*tri) + " <= ex*(n,F) <= " + num(hi) + " [ex(n,K3,F) .. (k-1)ex(n,F)+ex(n,K3,F)]",
                num(*star_here.value), *tri <= *star_here.value && *star_here.value <= hi);
    } else {
      run.row(n, Mode::Sandwich, "ex(n,K3,F) <= ex*(n,F) <= (k-1)ex(n,F)+ex(n,K3,F)",
              "budget exceeded", Verdict::Inconclusive);
    }

    const auto fu_edges = run.ex(n, complete(2), {fu});
    std::optional<long double> rest;
    if (target && star_here.exhaustive && star_here.value && fu_edges)
      rest = static_cast<long double>(*target) - static_cast<long double>(*star_here.value) -
             static_cast<long double>(k - 1) * f.order() * static_cast<long double>(*fu_edges);
    run.ratio(n, "(ex(n,K3,kF) - ex*(n,F) - (k-1)|V(F)|ex(n,F_u)) / n", rest, n);
  }
}

// K_{r-m0} universal vertices over the K_{m0}-extremal F-free host.
void check_thm27(CheckRun& run) {
  const Graph f = run.graph("F");
  const int r = run.integer("r");
  const int k = run.integer("k");
  run.require(r >= 1 && k >= 1, "r, k >= 1");
  for (int n = run.range().lo; n <= run.range().hi; ++n) {
    int m0 = 0;
    Count best = 0;
    bool ok = true;
    for (int m = 1; m <= r && m <= n; ++m) {
      const auto v = run.ex(n, complete(m), {f});
      if (!v) {
        ok = false;
        break;
      }
      if (m0 == 0 || *v >= best) {
        best = *v;
        m0 = m;
      }
    }
    if (!ok) {
      run.row(n, Mode::LowerBoundVsOracle, "m0 determination", "budget exceeded",
              Verdict::Inconclusive);
      continue;
    }
    const auto target = run.ex(n, complete(r), {copies(k, f)});
    run.ratio(n, "ex(n,K_r,kF) / ex(n,K_m0,F) with m0=" + std::to_string(m0), as_real(target),
              static_cast<long double>(std::max<Count>(best, 1)));
    if (k <= r - m0) continue;

    const auto& base = run.search(n - r + m0, Objective::copies(complete(m0)), {f});
    if (!base.exhaustive || !base.value) {
      run.row(n, Mode::LowerBoundVsOracle, "K_m0-extremal host", "budget exceeded",
              Verdict::Inconclusive);
      continue;
    }
    const Graph host = universal_join(r - m0 + 1, decode_witness(base));
    run.freeness(n, "K_{r-m0} + G is kF-free (m0=" + std::to_string(m0) + ")",
                 is_kF_free(host, k, f));
    const Count built = count_copies(host, complete(r));
    run.at_least(n, "N(K_r, K_{r-m0}+G) vs ex(n-r+m0,K_m0,F)", *base.value, built);
    run.at_least(n, "ex(n,K_r,kF) vs N(K_r, K_{r-m0}+G)", built, target);
  }
}

void check_thm32(CheckRun& run) {
  const int s = run.integer("s");
  const int t = run.integer("t");
  const int k = run.integer("k");
  run.require(s >= t && t >= 2 && k >= 2, "s >= t >= 2, k >= 2");
  const int x = x_exponent(k, t, s);
  run.require(x >= 1, "x >= 1");
  run.note("x = " + std::to_string(x));
  for (int n = std::max(run.range().lo, s); n <= run.range().hi; ++n) {
    run.holds(n, Mode::ConstructionFreeness, "s + (k-1)x < kt",
              std::to_string(s + (k - 1) * x) + " < " + std::to_string(k * t),
              s + (k - 1) * x < k * t);
    const Graph g = thm32_lower(n, s, t, k);
    run.freeness(n, "K_{s-x} + T_x(n-s+x) is kK_t-free", is_kF_free(g, k, complete(t)));
    const Count built = count_copies(g, complete(s));
    const Count base = count_copies(turan(n - s + x, x), complete(x));
    run.at_least(n, "N(K_s, construction) vs N(K_x, T_x(n-s+x))", base, built);
    const auto oracle = run.ex(n, complete(s), {copies(k, complete(t))});
    run.at_least(n, "ex(n,K_s,kK_t) vs N(K_s, construction)", built, oracle);
    const long double scale = power(n, x);
    run.ratio(n, "ex(n,K_s,kK_t) / n^x", as_real(oracle), scale);
    run.ratio(n, "N(K_s, construction) / n^x", static_cast<long double>(built), scale);
  }
}

void check_thm34(CheckRun& run) {
  const int s = run.integer("s");
  const int t = run.integer("t");
  const int k = run.integer("k");
  run.require(t > s && s >= 2 && k >= 1, "t > s >= 2, k >= 1");
  for (int n = std::max(run.range().lo, t); n <= run.range().hi; ++n) {
    const Graph g = turan(n, t - 1);
    run.freeness(n, "T_{t-1}(n) is kK_t-free", is_kF_free(g, k, complete(t)));
    run.exact(n, "N(K_s, T_{t-1}(n)) closed form", erdos_value(n, s, t),
              count_copies(g, complete(s)));
    const auto oracle = run.ex(n, complete(s), {copies(k, complete(t))});
    run.at_least(n, "ex(n,K_s,kK_t) vs N(K_s, T_{t-1}(n))", erdos_value(n, s, t), oracle);
    run.ratio(n, "ex(n,K_s,kK_t) / (C(t-1,s)(n/(t-1))^s)", as_real(oracle),
              static_cast<long double>(binomial(t - 1, s)) *
                  power(static_cast<long double>(n) / (t - 1), s));
  }
}

void check_thm35(CheckRun& run) {
  const int s = run.integer("s");
  const int t = run.integer("t");
  const int k = run.integer("k");
  const int oracle_max = run.integer("oracle_max");
  run.require(s >= t && t >= s - k + 2 && t >= 2, "s >= t >= s-k+2");
  for (int n = std::max(run.range().lo, k + t - 2); n <= run.range().hi; ++n) {
    const Graph g = thm35_lower(n, t, k);
    const Count leading = thm35_leading(n, s, t, k);
    run.exact(n, "K_s meeting K_{k-1} in s-t+1 vertices", leading,
              count_copies_meeting(g, complete(s), universal_vertices(k), s - t + 1));
    run.freeness(n, "K_{k-1} + T_{t-1}(n-k+1) is kK_t-free", is_kF_free(g, k, complete(t)));
    if (n <= oracle_max) {
      const auto oracle = run.ex(n, complete(s), {copies(k, complete(t))});
      run.at_least(n, "ex(n,K_s,kK_t) vs N(K_s, construction)", count_copies(g, complete(s)),
                   oracle);
      run.ratio(n, "ex(n,K_s,kK_t) / (C(k-1,s-t+1)(n/(t-1))^(t-1))", as_real(oracle),
                static_cast<long double>(binomial(k - 1, s - t + 1)) *
                    power(static_cast<long double>(n) / (t - 1), t - 1));
    }
  }
}

Graph odd_cycle(int l) { return cycle(2 * l + 1); }

void check_thm41a(CheckRun& run) {
  const int r = run.integer("r");
  const int k = run.integer("k");
  const int l = run.integer("l");
  run.require(r >= 2 && r <= k && l >= 1, "2 <= r <= k");
  const Graph c = odd_cycle(l);
  for (int n = run.range().lo; n <= run.range().hi; ++n) {
    // r-2 universal vertices over the bipartite Turan graph
    const Graph g = r == 2 ? turan(n, 2) : join(complete(r - 2), turan(n - r + 2, 2));
    run.freeness(n, "K_{r-2} + T_2(n-r+2) is kC_{2l+1}-free", is_kF_free(g, k, c));
    const Count built = count_copies(g, complete(r));
    const auto oracle = run.ex(n, complete(r), {copies(k, c)});
    run.at_least(n, "ex(n,K_r,kC_{2l+1}) vs N(K_r, construction)", built, oracle);
    run.ratio(n, "ex(n,K_r,kC_{2l+1}) / n^2", as_real(oracle), power(n, 2));
  }
}

void check_thm41b(CheckRun& run) {
  const int r = run.integer("r");
  const int k = run.integer("k");
  const int l = run.integer("l");
  run.require(r > k + 1 && l >= 1 && k >= 1, "r > k+1");
  const Graph c = odd_cycle(l);
  for (int n = run.range().lo; n <= run.range().hi; ++n)
    run.ratio(n, "ex(n,K_r,kC_{2l+1}) / n^(1+1/l)", as_real(run.ex(n, complete(r), {copies(k, c)})),
              power(n, 1.0L + 1.0L / l));
}

void check_prop42(CheckRun& run) {
  const int r = run.integer("r");
  const int k = run.integer("k");
  const int l = run.integer("l");
  run.require(r >= 2 && l >= 2 && k >= 1, "r, l >= 2");
  const Graph c = cycle(2 * l);
  for (int n = run.range().lo; n <= run.range().hi; ++n)
    run.ratio(n, "ex(n,K_r,kC_{2l}) / n^(1+1/l)", as_real(run.ex(n, complete(r), {copies(k, c)})),
              power(n, 1.0L + 1.0L / l));
}

void check_bipartite_ratio(CheckRun& run, int k) {
  const int a = run.integer("a");
  const int b = run.integer("b");
  const int s = run.integer("s");
  const int t = run.integer("t");
  run.require(1 <= a && a <= b && b < s && s <= t, "a <= b < s <= t");
  const long double exponent = a + b - static_cast<long double>(a) * b / s;
  const Graph pattern = complete_bipartite(a, b);
  const Graph forbidden = copies(k, complete_bipartite(s, t));
  for (int n = run.range().lo; n <= run.range().hi; ++n)
    run.ratio(n, "ex(n,K_{a,b}," + kf(k, "K_{s,t}") + ") / n^(a+b-ab/s)",
              as_real(run.ex(n, pattern, {forbidden})), power(n, exponent));
}

void check_prop51(CheckRun& run) { check_bipartite_ratio(run, 1); }
void check_prop52(CheckRun& run) { check_bipartite_ratio(run, run.integer("k")); }

void check_prop53(CheckRun& run) {
  const int a = run.integer("a");
  const int b = run.integer("b");
  const int s = run.integer("s");
  const int t = run.integer("t");
  const int k = run.integer("k");
  run.require(1 <= a && a <= b && b >= s && s <= t && k >= 1, "a <= b, b >= s, s <= t");
  const Graph pattern = complete_bipartite(a, b);
  const Graph kst = complete_bipartite(s, t);
  for (int n = run.range().lo; n <= run.range().hi; ++n) {
    const auto oracle = run.ex(n, pattern, {copies(k, kst)});
    run.ratio(n, "ex(n,K_{a,b},kK_{s,t}) / n^b", as_real(oracle), power(n, b));
    if (k <= a || n - k + 1 < 1) continue;
    const auto& base = run.search(n - k + 1, Objective::copies(complete(2)), {kst});
    if (!base.exhaustive || !base.value) {
      run.row(n, Mode::LowerBoundVsOracle, "K_{s,t}-free host", "budget exceeded",
              Verdict::Inconclusive);
      continue;
    }
    const Graph g = universal_join(k, decode_witness(base));
    run.freeness(n, "K_{k-1} + G is kK_{s,t}-free", is_kF_free(g, k, kst));
    const Count built = count_copies(g, pattern);
    run.at_least(n, "N(K_{a,b}, K_{k-1}+G) vs C(k-1,a)C(n-k+1,b)",
                 binomial(k - 1, a) * binomial(n - k + 1, b), built);
    run.at_least(n, "ex(n,K_{a,b},kK_{s,t}) vs N(K_{a,b}, K_{k-1}+G)", built, oracle);
  }
}

void check_prop54a(CheckRun& run) {
  const int a = run.integer("a");
  const int b = run.integer("b");
  const int s = run.integer("s");
  const int t = run.integer("t");
  run.require(1 <= s && s <= a && a <= b && b <= t, "s <= a <= b <= t");
  for (int n = run.range().lo; n <= run.range().hi; ++n)
    run.ratio(n, "ex(n,K_{a,b},K_{s,t}) / n^s",
              as_real(run.ex(n, complete_bipartite(a, b), {complete_bipartite(s, t)})),
              power(n, s));
}

void check_prop54b(CheckRun& run) {
  const int a = run.integer("a");
  const int b = run.integer("b");
  const int s = run.integer("s");
  const int t = run.integer("t");
  run.require(1 <= a && a < s && s <= b && b <= t, "a < s <= b <= t");
  const Graph pattern = complete_bipartite(a, b);
  const Graph kst = complete_bipartite(s, t);
  for (int n = std::max(run.range().lo, s + 1); n <= run.range().hi; ++n) {
    const Graph g = prop54_lower(n, s);
    run.freeness(n, "K_{s-1,n-s+1} is K_{s,t}-free", is_free(g, kst));
    const Count built = count_copies(g, pattern);
    run.at_least(n, "N(K_{a,b}, K_{s-1,n-s+1}) vs C(s-1,a)C(n-s+1,b)",
                 binomial(s - 1, a) * binomial(n - s + 1, b), built);
    const auto oracle = run.ex(n, pattern, {kst});
    run.at_least(n, "ex(n,K_{a,b},K_{s,t}) vs N(K_{a,b}, K_{s-1,n-s+1})", built, oracle);
    run.ratio(n, "ex(n,K_{a,b},K_{s,t}) / n^b", as_real(oracle), power(n, b));
  }
}

void check_prop61(CheckRun& run) {
  const int l = run.integer("l");
  run.require(l >= 1, "l >= 1");
  const Graph matching = copies(l, complete(2));
  for (int n = std::max(run.range().lo, 2 * l); n <= run.range().hi; ++n) {
    const BigCount value = prop61_value(n, l);
    const Count expected = value.convert_to<Count>();
    run.exact(n, "ex(n," + std::to_string(l) + "K2,K3)", expected,
              run.ex(n, matching, {complete(3)}));
    run.exact(n, "N(lK2, K_{n/2,n/2})", expected, count_copies(prop61_host(n), matching));
  }
}

void check_thm62(CheckRun& run) {
  const int l = run.integer("l");
  const int k = run.integer("k");
  run.require(1 <= l && l < k, "l < k");
  const Graph k3 = complete(3);
  const Graph pattern = copies(l, k3);
  for (int n = std::max(run.range().lo, k); n <= run.range().hi; ++n) {
    const Graph g = thm62_lower(n, k);
    run.freeness(n, "K_{k-1} + K_{floor,ceil} is kK3-free", is_kF_free(g, k, k3));
    const int m = n - k + 1;
    const Count side = m >= 2 * l ? count_copies(prop61_host(m), copies(l, complete(2))) : 0;
    const Count built = count_copies(g, pattern);
    run.at_least(n, "N(lK3, construction) vs C(k-1,l) N(lK2, K_{floor,ceil})",
                 binomial(k - 1, l) * side, built);
    const auto oracle = run.ex(n, pattern, {copies(k, k3)});
    run.at_least(n, "ex(n,lK3,kK3) vs N(lK3, construction)", built, oracle);
    const long double lead = m >= 2 * l ? static_cast<long double>(binomial(k - 1, l)) *
                                              prop61_value(m, l).convert_to<long double>()
                                        : 1.0L;
    run.ratio(n, "ex(n,lK3,kK3) / (C(k-1,l) ex(n-k+1,lK2,K3))", as_real(oracle), lead);
    run.ratio(n, "ex(n,lK3,kK3) / (C(k-1,l)(n^2/4)^l)", as_real(oracle),
              static_cast<long double>(binomial(k - 1, l)) * power(n * n / 4.0L, l));
  }
}

void check_prop63(CheckRun& run) {
  const auto parts = run.graphs("parts");
  run.require(parts.size() >= 2, "at least two components");
  Graph f = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) f = disjoint_union(f, parts[i]);
  for (int n = run.range().lo; n <= run.range().hi; ++n) {
    const auto whole = run.ex(n, complete(2), {f});
    Count best = 0;
    bool ok = true;
    for (const Graph& p : parts) {
      const auto v = run.ex(n, complete(2), {p});
      if (!v) ok = false;
      else best = std::max(best, *v);
    }
    if (!ok || !whole) {
      run.row(n, Mode::Sandwich, "max ex(n,F_i) <= ex(n,F) <= max ex(n,F_i) + 3n",
              "budget exceeded", Verdict::Inconclusive);
      continue;
    }
    run.at_least(n, "ex(n,F) vs max ex(n,F_i)", best, whole);
    run.holds(n, Mode::Sandwich, "ex(n,F) - max ex(n,F_i) <= 3n = " + num(3 * static_cast<Count>(n)),
              num(*whole - std::min(*whole, best)), *whole <= best + 3 * static_cast<Count>(n));
  }
}

std::vector<CheckEntry> make_registry() {
  using M = Mode;
  return {
      {"erdos", "ex(n,K_s,K_t) equals the Turan-graph clique count", M::ExactEquality, {5, 8},
       {{"s", "3"}, {"t", "4"}}, check_erdos},
      {"thm1.1-gorgol", "ex(n,kF) = ex(n,F) + O(n), as ex(n,kF) - ex(n,F) <= 2n", M::Sandwich,
       {6, 9}, {{"F", "K3"}, {"k", "2"}}, check_gorgol},
      {"thm2.1", "ex(n,H,kF) = O(exbar(n,H,F)), Theta when k >= |V(H)|",
       M::LowerBoundVsOracle, {4, 8}, {{"H", "K2"}, {"F", "K3"}, {"k", "2"}}, check_thm21},
      {"thm2.2", "ex(n,K3,F) lower-bound constructions for F a disjoint union",
       M::LowerBoundVsOracle, {5, 8}, {{"parts", "K3,C4"}}, check_thm22},
      {"thm2.4", "ex*(n-k+1,F) <= ex(n,K3,kF) and the ex* sandwich", M::Sandwich, {7, 9},
       {{"F", "C5"}, {"k", "2"}, {"u", "0"}}, check_thm24},
      {"thm2.7", "ex(n,K_r,kF) = Theta(ex(n,K_m0,F)) via universal vertices",
       M::ConstructionFreeness, {5, 8}, {{"F", "K3"}, {"r", "3"}, {"k", "2"}}, check_thm27},
      {"thm3.2", "ex(n,K_s,kK_t) = Theta(n^x) via K_{s-x} + T_x(n-s+x)",
       M::LowerBoundVsOracle, {6, 9}, {{"s", "3"}, {"t", "3"}, {"k", "2"}}, check_thm32},
      {"thm3.4", "ex(n,K_s,kK_t) ~ Turan count for t > s", M::LowerBoundVsOracle, {5, 8},
       {{"s", "2"}, {"t", "3"}, {"k", "2"}}, check_thm34},
      {"thm3.5", "leading term C(k-1,s-t+1) N(K_{t-1}, T_{t-1}(n-k+1)) for s >= t >= s-k+2",
       M::ExactEquality, {5, 14}, {{"s", "3"}, {"t", "3"}, {"k", "2"}, {"oracle_max", "9"}},
       check_thm35},
      {"thm4.1a", "ex(n,K_r,kC_{2l+1}) = Theta(n^2) for r <= k", M::LowerBoundVsOracle, {5, 8},
       {{"r", "2"}, {"k", "2"}, {"l", "2"}}, check_thm41a},
      {"thm4.1b", "ex(n,K_r,kC_{2l+1}) = O(n^(1+1/l)) for r > k+1", M::RatioTrend, {5, 8},
       {{"r", "4"}, {"k", "2"}, {"l", "2"}}, check_thm41b},
      {"prop4.2", "ex(n,K_r,kC_{2l}) = O(n^(1+1/l))", M::RatioTrend, {5, 8},
       {{"r", "3"}, {"k", "2"}, {"l", "2"}}, check_prop42},
      {"prop5.1", "ex(n,K_{a,b},K_{s,t}) = O(n^(a+b-ab/s)) for a <= b < s <= t", M::RatioTrend,
       {5, 8}, {{"a", "1"}, {"b", "1"}, {"s", "2"}, {"t", "2"}}, check_prop51},
      {"prop5.2", "ex(n,K_{a,b},kK_{s,t}) = O(n^(a+b-ab/s))", M::RatioTrend, {5, 8},
       {{"a", "1"}, {"b", "1"}, {"s", "2"}, {"t", "2"}, {"k", "2"}}, check_prop52},
      {"prop5.3", "ex(n,K_{a,b},kK_{s,t}) = O(n^b), Theta when k > a", M::LowerBoundVsOracle,
       {5, 8}, {{"a", "1"}, {"b", "2"}, {"s", "2"}, {"t", "2"}, {"k", "2"}}, check_prop53},
      {"prop5.4a", "ex(n,K_{a,b},K_{s,t}) = O(n^s) for s <= a <= b <= t", M::RatioTrend,
       {5, 8}, {{"a", "2"}, {"b", "2"}, {"s", "2"}, {"t", "3"}}, check_prop54a},
      {"prop5.4b", "ex(n,K_{a,b},K_{s,t}) = Theta(n^b) via K_{s-1,n-s+1}",
       M::LowerBoundVsOracle, {5, 8}, {{"a", "1"}, {"b", "2"}, {"s", "2"}, {"t", "2"}},
       check_prop54b},
      {"prop6.1", "ex(n,lK2,K3) = (1/l!) prod floor((n-2i)^2/4)", M::ExactEquality, {4, 8},
       {{"l", "2"}}, check_prop61},
      {"thm6.2", "ex(n,lK3,kK3) ~ C(k-1,l)(n^2/4)^l for l < k", M::LowerBoundVsOracle, {5, 9},
       {{"l", "1"}, {"k", "2"}}, check_thm62},
      {"prop6.3", "ex(n,F_1 u ... u F_k) = max ex(n,F_i) + O(n)", M::Sandwich, {6, 8},
       {{"parts", "K3,C4"}}, check_prop63},
  };
}

const std::map<std::string, std::string>& aliases() {
  static const std::map<std::string, std::string> a = {
      {"prop1.2", "erdos"}, {"thm1.1", "thm1.1-gorgol"}, {"gorgol", "thm1.1-gorgol"},
      {"thm3.2-lb", "thm3.2"}};
  return a;
}

}  // namespace

const std::vector<CheckEntry>& registry() {
  static const std::vector<CheckEntry> entries = make_registry();
  return entries;
}

const CheckEntry* find_check(const std::string& id) {
  std::string key = id;
  if (auto it = aliases().find(id); it != aliases().end()) key = it->second;
  for (const auto& e : registry())
    if (e.id == key) return &e;
  return nullptr;
}

namespace {

TheoremCheck run_entry(const CheckEntry& entry, const Params& overrides, bool strict,
                       std::optional<NRange> range, SearchCache& cache) {
  Params params = entry.defaults;
  for (const auto& [k, v] : overrides) {
    if (params.count(k)) {
      params[k] = v;
    } else if (strict) {
      throw std::invalid_argument(entry.id + ": unknown parameter '" + k + "'");
    }
  }
  TheoremCheck check;
  check.id = entry.id;
  check.params = params;
  check.n_range = range.value_or(entry.default_range);
  check.mode = entry.mode;
  CheckRun run(entry, params, check.n_range, cache);
  entry.run(run);
  check.rows = run.take_rows();
  check.notes = run.take_notes();
  return check;
}

}  // namespace

TheoremCheck run_check(const std::string& id, const Params& overrides,
                       std::optional<NRange> range, SearchCache& cache) {
  const CheckEntry* entry = find_check(id);
  if (!entry) throw std::invalid_argument("unknown check id '" + id + "'");
  return run_entry(*entry, overrides, true, range, cache);
}

std::vector<TheoremCheck> run_checks(const std::vector<std::string>& ids, const Params& overrides,
                                     std::optional<NRange> range, SearchCache& cache,
                                     unsigned jobs) {
  std::vector<const CheckEntry*> entries;
  for (const auto& id : ids) {
    const CheckEntry* e = find_check(id);
    if (!e) throw std::invalid_argument("unknown check id '" + id + "'");
    entries.push_back(e);
  }
  const bool strict = entries.size() == 1;
  std::vector<TheoremCheck> out(entries.size());
  std::vector<std::exception_ptr> errors(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      try {
        out[i] = run_entry(*entries[i], overrides, strict, range, cache);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(entries.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<ReportRow> report_rows(const std::vector<TheoremCheck>& checks) {
  std::vector<ReportRow> rows;
  for (const auto& c : checks) rows.insert(rows.end(), c.rows.begin(), c.rows.end());
  std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    if (a.check_id != b.check_id) return a.check_id < b.check_id;
    return a.n < b.n;
  });
  return rows;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string report_csv(const std::vector<TheoremCheck>& checks) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : report_rows(checks)) {
    out += csv_field(r.check_id) + "," + std::to_string(r.n) + "," + csv_field(r.params) + "," +
           to_string(r.mode) + "," + csv_field(r.expected) + "," + csv_field(r.actual) + "," +
           to_string(r.verdict) + "\n";
  }
  return out;
}

std::string report_table(const std::vector<TheoremCheck>& checks) {
  std::vector<std::array<std::string, 7>> cells;
  cells.push_back({"check_id", "n", "params", "mode", "expected", "actual", "verdict"});
  for (const auto& r : report_rows(checks))
    cells.push_back({r.check_id, std::to_string(r.n), r.params, to_string(r.mode), r.expected,
                     r.actual, to_string(r.verdict)});
  std::array<std::size_t, 7> width{};
  for (const auto& row : cells)
    for (std::size_t i = 0; i < 7; ++i) width[i] = std::max(width[i], row[i].size());
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t i = 0; i < 7; ++i) {
      line += row[i];
      if (i + 1 < 7) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot write '" + path + "'");
  os << content;
  if (!os.flush()) throw std::runtime_error("cannot write '" + path + "'");
}

}  // namespace kturan
