#include "kturan/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "kturan/canonical.hpp"
#include "kturan/constructions.hpp"
#include "kturan/counting.hpp"
#include "kturan/graph6.hpp"
#include "kturan/graph_spec.hpp"
#include "kturan/packing.hpp"
#include "kturan/search.hpp"
#include "kturan/verify.hpp"

namespace kturan {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// A spec such as `T(5,2)`, or graph6 text when that fails to parse.
Graph graph_arg(const std::string& text) {
  try {
    return build(parse_spec(text));
  } catch (const std::length_error&) {
    throw;
  } catch (const std::invalid_argument& spec_error) {
    try {
      return decode_graph6(text);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("'" + text + "' is neither a graph spec nor graph6 (" +
                                  spec_error.what() + ")");
    }
  }
}

Graph host_arg(const std::string& text, std::istream& in) {
  if (!text.empty() && text != "-") return graph_arg(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (!line.empty()) return decode_graph6(line);
  }
  throw std::invalid_argument("no graph6 host on standard input");
}

std::vector<Graph> graph_list(const std::string& text) {
  std::vector<Graph> out;
  for (const auto& s : split_spec_list(text)) out.push_back(graph_arg(s));
  return out;
}

std::string vertex_list(VertexSet s) {
  std::string out = "{";
  for (int v : members(s)) out += (out.size() > 1 ? " " : "") + std::to_string(v);
  return out + "}";
}

std::string packing_text(const Packing& p) {
  std::string out;
  for (VertexSet c : p.copies) out += (out.empty() ? "" : " ") + vertex_list(c);
  return out;
}

ShardSpec parse_shard(const std::string& text, int depth) {
  ShardSpec s;
  s.depth = depth;
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) throw std::invalid_argument("");
    s.index = std::stoi(text.substr(0, slash));
    s.parts = std::stoi(text.substr(slash + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad shard '" + text + "'; expected i/p");
  }
  if (s.parts < 1 || s.index < 0 || s.index >= s.parts)
    throw std::invalid_argument("shard index out of range in '" + text + "'");
  return s;
}

// Plain key=value lines; '#' starts a comment.
Params read_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot read config '" + path + "'");
  Params out;
  std::string line;
  int number = 0;
  while (std::getline(is, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(number) + ": expected key=value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

struct ConstructArgs {
  std::string id;
  int n = -1, s = -1, t = -1, k = -1, u = -1;
  std::string graph;
};

int need(int value, const char* name) {
  if (value < 0) throw std::invalid_argument(std::string("construct: --") + name + " is required");
  return value;
}

Graph run_construct(const ConstructArgs& a) {
  if (a.id == "universal-join") {
    if (a.graph.empty()) throw std::invalid_argument("construct: --graph is required");
    return universal_join(need(a.k, "k"), graph_arg(a.graph));
  }
  if (a.id == "thm32") return thm32_lower(need(a.n, "n"), need(a.s, "s"), need(a.t, "t"), need(a.k, "k"));
  if (a.id == "thm35") return thm35_lower(need(a.n, "n"), need(a.t, "t"), need(a.k, "k"));
  if (a.id == "thm62") return thm62_lower(need(a.n, "n"), need(a.k, "k"));
  if (a.id == "prop54") return prop54_lower(need(a.n, "n"), need(a.s, "s"));
  if (a.id == "prop61-host") return prop61_host(need(a.n, "n"));
  if (a.id == "fstar") {
    if (a.graph.empty()) throw std::invalid_argument("construct: --graph is required");
    const Graph f = graph_arg(a.graph);
    int u = a.u;
    if (u < 0) {
      // default center: the lowest-index vertex of minimum degree
      u = 0;
      for (int v = 1; v < f.order(); ++v)
        if (f.degree(v) < f.degree(u)) u = v;
    }
    return f_star(f, u, need(a.k, "k"));
  }
  throw std::invalid_argument("unknown construction '" + a.id +
                              "'; expected universal-join, thm32, thm35, thm62, prop54, "
                              "prop61-host or fstar");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Generalized Turan numbers: counting, packing, constructions and search",
               "kturan"};
  app.require_subcommand(1);

  ConstructArgs cons;
  auto* construct = app.add_subcommand("construct", "Build a named construction; prints graph6");
  construct->add_option("id", cons.id, "universal-join|thm32|thm35|thm62|prop54|prop61-host|fstar")
      ->required();
  construct->add_option("--n", cons.n);
  construct->add_option("--s", cons.s);
  construct->add_option("--t", cons.t);
  construct->add_option("--k", cons.k);
  construct->add_option("--u", cons.u, "fstar center (default: a minimum-degree vertex)");
  construct->add_option("--graph", cons.graph, "base graph for universal-join / fstar");

  std::string host, pattern, forbid;
  bool induced = false, family = false, greedy = false;
  int k = 1;

  auto* count = app.add_subcommand("count", "Count copies of a pattern in a host");
  count->add_option("--host", host, "spec or graph6; '-' or absent reads graph6 from stdin");
  count->add_option("--pattern", pattern)->required();
  auto* induced_flag = count->add_flag("--induced", induced, "count induced copies");
  count->add_flag("--family", family, "count copies of every induced subgraph of the pattern")
      ->excludes(induced_flag);

  auto* free = app.add_subcommand("free", "Test whether a host avoids a family");
  free->add_option("--host", host);
  free->add_option("--forbid", forbid, "comma-separated specs")->required();
  free->add_option("--k", k, "test k vertex-disjoint copies of each member")
      ->check(CLI::PositiveNumber);

  auto* pack = app.add_subcommand("pack", "Maximum vertex-disjoint packing");
  pack->add_option("--host", host);
  pack->add_option("--pattern", pattern)->required();
  pack->add_flag("--greedy", greedy, "greedy packing instead of an exact maximum");

  auto* partition = app.add_subcommand("partition", "Canonical split into packed and free sides");
  partition->add_option("--host", host);
  partition->add_option("--pattern", pattern)->required();

  std::string objective, problem_text, shard_text;
  int n = -1, depth = 5, max_n = 10;
  double budget = 0;
  std::size_t cap = 16;
  bool no_prune = false;
  auto* search = app.add_subcommand("search", "Exhaustive extremal search; prints one record");
  search->add_option("objective", objective, "copies|edges|exstar|exbar");
  search->add_option("--n", n);
  search->add_option("--forbid", forbid);
  search->add_option("--pattern", pattern, "pattern for copies / exbar");
  search->add_option("--k", k, "weight for exstar")->check(CLI::PositiveNumber);
  search->add_option("--shard", shard_text, "i/p");
  search->add_option("--depth", depth, "shard depth");
  search->add_option("--budget", budget, "seconds; 0 is unlimited");
  search->add_option("--cap", cap, "witness cap");
  search->add_option("--max-n", max_n);
  search->add_flag("--no-prune", no_prune);
  auto* problem_opt = search->add_option("--problem", problem_text, "shard descriptor text");
  problem_opt->excludes(search->get_option("--n"))->excludes(search->get_option("--forbid"));

  auto* enumerate = app.add_subcommand("enumerate", "One graph6 line per isomorphism class");
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--forbid", forbid, "drop graphs containing a member");

  std::string check_id, range_text, csv_path, table_path, config_path;
  std::vector<std::string> param_args;
  unsigned jobs = 0;
  auto* verify = app.add_subcommand("verify", "Run registered checks; prints a table");
  verify->add_option("id", check_id, "check id, 'all' or 'list'")->required();
  verify->add_option("--n-range", range_text, "a..b");
  verify->add_option("--csv", csv_path);
  verify->add_option("--table", table_path);
  verify->add_option("--param", param_args, "key=value (repeatable)");
  verify->add_option("--jobs", jobs, "worker threads (default: hardware)");
  verify->add_option("--budget", budget, "seconds per search; 0 is unlimited");
  verify->add_option("--config", config_path, "key=value file; flags take precedence");

  std::vector<std::string> argv_store{"kturan"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed()) {
      out << encode_graph6(run_construct(cons)) << "\n";
      return 0;
    }
    if (count->parsed()) {
      const Graph g = host_arg(host, in);
      const Graph h = graph_arg(pattern);
      if (family) out << count_induced_family(g, h) << "\n";
      else if (induced) out << count_induced_copies(g, h) << "\n";
      else out << count_copies(g, h) << "\n";
      return 0;
    }
    if (free->parsed()) {
      const Graph g = host_arg(host, in);
      bool ok = true;
      for (const Graph& f : graph_list(forbid)) ok = ok && is_kF_free(g, k, f);
      out << (ok ? "true" : "false") << "\n";
      return 0;
    }
    if (pack->parsed()) {
      const Graph g = host_arg(host, in);
      const Graph f = graph_arg(pattern);
      const Packing p = greedy ? greedy_packing(g, f) : max_disjoint_packing(g, f);
      out << p.size() << "\n";
      if (p.size()) out << packing_text(p) << "\n";
      return 0;
    }
    if (partition->parsed()) {
      const Graph g = host_arg(host, in);
      const CanonicalPartition cp = canonical_partition(g, graph_arg(pattern));
      out << "L: " << vertex_list(cp.left) << "\n";
      out << "R: " << vertex_list(cp.right) << "\n";
      out << "packing: " << packing_text(cp.packing) << "\n";
      return 0;
    }
    if (search->parsed()) {
      SearchProblem p;
      if (!problem_text.empty()) {
        p = SearchProblem::from_text(problem_text);
      } else {
        if (objective.empty() || n < 0 || forbid.empty())
          throw std::invalid_argument("search: objective, --n and --forbid are required");
        p.n = n;
        p.forbidden = graph_list(forbid);
        p.budget_seconds = budget;
        p.witness_cap = cap;
        p.prune = !no_prune;
        p.max_n = max_n;
        p.shard.depth = depth;
        if (!shard_text.empty()) p.shard = parse_shard(shard_text, depth);
        if (objective == "copies" || objective == "exbar") {
          if (pattern.empty()) throw std::invalid_argument("search: --pattern is required");
          const Graph h = graph_arg(pattern);
          p.objective = objective == "copies" ? Objective::copies(h) : Objective::exbar(h);
        } else if (objective == "edges") {
          p.objective = Objective::edges();
        } else if (objective == "exstar") {
          p.objective = Objective::exstar(k == 1 ? 2 : k);
        } else {
          throw std::invalid_argument("unknown objective '" + objective + "'");
        }
      }
      p.validate();
      out << brute_force_ex(p).to_record() << "\n";
      return 0;
    }
    if (enumerate->parsed()) {
      const std::vector<Graph> family_list = forbid.empty() ? std::vector<Graph>{} : graph_list(forbid);
      std::function<bool(const Graph&)> cut;
      if (!family_list.empty())
        cut = [&](const Graph& g) { return !is_family_free(g, family_list); };
      enumerate_graphs(n, [&](const Graph& g) { out << encode_graph6(g) << "\n"; }, cut);
      return 0;
    }
    if (verify->parsed()) {
      if (check_id == "list") {
        for (const auto& e : registry()) out << e.id << "  " << e.claim << "\n";
        return 0;
      }
      Params config = config_path.empty() ? Params{} : read_config(config_path);
      auto take = [&config](const std::string& key, auto& target, auto convert, bool flag_set) {
        auto it = config.find(key);
        if (it == config.end()) return;
        if (!flag_set) target = convert(it->second);
        config.erase(it);
      };
      auto as_string = [](const std::string& v) { return v; };
      take("n-range", range_text, as_string, !range_text.empty());
      take("csv", csv_path, as_string, !csv_path.empty());
      take("table", table_path, as_string, !table_path.empty());
      take("jobs", jobs, [](const std::string& v) { return static_cast<unsigned>(std::stoul(v)); },
           verify->count("--jobs") > 0);
      take("budget", budget, [](const std::string& v) { return std::stod(v); },
           verify->count("--budget") > 0);
      Params params = config;
      for (const auto& kv : param_args) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
          throw std::invalid_argument("--param expects key=value, got '" + kv + "'");
        params[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      std::optional<NRange> range;
      if (!range_text.empty()) range = parse_n_range(range_text);

      std::vector<std::string> ids;
      if (check_id == "all") {
        for (const auto& e : registry()) ids.push_back(e.id);
      } else {
        ids.push_back(check_id);
      }
      if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
      SearchCache cache(budget);
      const auto checks = run_checks(ids, params, range, cache, jobs);
      const std::string table = report_table(checks);
      out << table;
      if (!csv_path.empty()) write_file(csv_path, report_csv(checks));
      if (!table_path.empty()) write_file(table_path, table);
      for (const auto& c : checks)
        if (c.failed()) return 1;
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace kturan
