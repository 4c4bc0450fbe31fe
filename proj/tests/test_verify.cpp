#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "kturan/cli.hpp"
#include "kturan/constructions.hpp"
#include "kturan/graph6.hpp"
#include "kturan/verify.hpp"

using namespace kturan;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("n-range parsing") {
  CHECK(parse_n_range("4..8").lo == 4);
  CHECK(parse_n_range("4..8").hi == 8);
  CHECK(parse_n_range("7").hi == 7);
  CHECK_THROWS_AS(parse_n_range("8..4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_n_range("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_n_range("4...8"), std::invalid_argument);
}

TEST_CASE("registry") {
  const std::vector<std::string> expected = {
      "erdos",    "thm1.1-gorgol", "thm2.1",  "thm2.2",  "thm2.4",  "thm2.7",   "thm3.2",
      "thm3.4",   "thm3.5",        "thm4.1a", "thm4.1b", "prop4.2", "prop5.1",  "prop5.2",
      "prop5.3",  "prop5.4a",      "prop5.4b", "prop6.1", "thm6.2", "prop6.3"};
  std::vector<std::string> ids;
  for (const auto& e : registry()) {
    ids.push_back(e.id);
    CHECK(e.default_range.lo <= e.default_range.hi);
    CHECK_FALSE(e.claim.empty());
  }
  CHECK(ids == expected);
  CHECK(find_check("prop1.2")->id == "erdos");
  CHECK(find_check("gorgol")->id == "thm1.1-gorgol");
  CHECK(find_check("thm3.2-lb")->id == "thm3.2");
  CHECK(find_check("nope") == nullptr);
}

TEST_CASE("hypothesis and parameter errors") {
  SearchCache cache;
  CHECK_THROWS_AS(run_check("thm2.4", {{"F", "K3"}}, NRange{5, 5}, cache), std::invalid_argument);
  CHECK_THROWS_AS(run_check("thm2.2", {{"parts", "K2,C4"}}, NRange{5, 5}, cache), std::invalid_argument);
  CHECK_THROWS_AS(run_check("erdos", {{"s", "4"}, {"t", "4"}}, NRange{5, 5}, cache), std::invalid_argument);
  CHECK_THROWS_AS(run_check("nope", {}, std::nullopt, cache), std::invalid_argument);
  CHECK_THROWS_AS(run_check("erdos", {{"zz", "1"}}, std::nullopt, cache), std::invalid_argument);
  CHECK_THROWS_AS(run_check("erdos", {{"s", "x"}}, NRange{5, 5}, cache), std::invalid_argument);
}

TEST_CASE("matching check passes on its default range") {
  SearchCache cache;
  const auto c = run_check("prop6.1", {}, std::nullopt, cache);
  CHECK(c.n_range.lo == 4);
  CHECK(c.n_range.hi == 8);
  CHECK_FALSE(c.rows.empty());
  CHECK_FALSE(c.failed());
  std::set<int> ns;
  for (const auto& r : c.rows) {
    CHECK(r.verdict == Verdict::Pass);
    ns.insert(r.n);
  }
  CHECK(ns == std::set<int>{4, 5, 6, 7, 8});
}

TEST_CASE("Turan clique check rows") {
  SearchCache cache;
  const auto c = run_check("erdos", {{"s", "2"}, {"t", "3"}}, NRange{5, 7}, cache);
  CHECK_FALSE(c.failed());
  int exact = 0;
  for (const auto& r : c.rows) {
    CHECK(r.params == "s=2;t=3");
    if (r.mode == Mode::ExactEquality && r.expected.rfind("ex(", 0) == 0) {
      ++exact;
      CHECK(r.actual == std::to_string(r.n * r.n / 4));
    }
  }
  CHECK(exact == 3);
}

TEST_CASE("clique lower-bound check rows") {
  SearchCache cache;
  const auto c = run_check("thm3.2-lb", {}, NRange{6, 7}, cache);
  CHECK(c.id == "thm3.2");
  CHECK_FALSE(c.failed());
  bool saw_free = false;
  for (const auto& r : c.rows) saw_free = saw_free || (r.mode == Mode::ConstructionFreeness && r.actual == "free");
  CHECK(saw_free);
}

TEST_CASE("ratio rows never fail and every check runs clean") {
  SearchCache cache;
  std::vector<std::string> ids;
  for (const auto& e : registry()) ids.push_back(e.id);
  const auto checks = run_checks(ids, {}, std::nullopt, cache, 2);
  REQUIRE(checks.size() == ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    CHECK(checks[i].id == ids[i]);
    CHECK_FALSE(checks[i].rows.empty());
    for (const auto& r : checks[i].rows) {
      if (r.mode == Mode::RatioTrend) CHECK(r.verdict == Verdict::Reported);
      CHECK_MESSAGE(r.verdict != Verdict::Fail, r.check_id, " n=", r.n, " ", r.expected, " got ", r.actual);
      // gadget rows sit at the gadget's own order
      if (r.check_id == "thm2.4" && r.mode == Mode::ConstructionFreeness) continue;
      CHECK(r.n >= checks[i].n_range.lo);
      CHECK(r.n <= checks[i].n_range.hi);
    }
  }
}

TEST_CASE("overrides in a batch apply only where the parameter exists") {
  SearchCache cache;
  const auto checks = run_checks({"prop6.1", "erdos"}, {{"l", "3"}}, NRange{6, 6}, cache, 1);
  CHECK(checks[0].params.at("l") == "3");
  CHECK(checks[1].params.count("l") == 0);
  CHECK_THROWS_AS(run_checks({"erdos"}, {{"l", "3"}}, NRange{6, 6}, cache, 1), std::invalid_argument);
}

TEST_CASE("csv report") {
  SearchCache cache;
  CHECK(report_csv({}) == std::string(kCsvHeader) + "\n");

  const auto a = run_checks({"prop6.1", "erdos"}, {}, NRange{5, 6}, cache, 1);
  SearchCache other;
  const auto b = run_checks({"erdos", "prop6.1"}, {}, NRange{5, 6}, other, 3);
  CHECK(report_csv(a) == report_csv(b));

  const auto rows = lines(report_csv(a));
  CHECK(rows.front() == kCsvHeader);
  CHECK(rows[1].rfind("erdos,5,", 0) == 0);
  const std::set<std::string> verdicts = {"pass", "fail", "inconclusive", "reported"};
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto comma = rows[i].rfind(',');
    CHECK(verdicts.count(rows[i].substr(comma + 1)) == 1);
  }

  TheoremCheck quoted;
  quoted.id = "x";
  quoted.rows.push_back({"x", 3, "a=1", Mode::Sandwich, "f(n, \"k\")", "1,2", Verdict::Inconclusive});
  CHECK(report_csv({quoted}) == std::string(kCsvHeader) +
                                    "\nx,3,a=1,Sandwich,\"f(n, \"\"k\"\")\",\"1,2\",inconclusive\n");
}

TEST_CASE("table report aligns columns") {
  SearchCache cache;
  const auto checks = run_checks({"prop6.1"}, {}, NRange{4, 5}, cache, 1);
  const auto rows = lines(report_table(checks));
  REQUIRE(rows.size() > 1);
  const auto col = rows[0].find("verdict");
  for (const auto& r : rows) CHECK(r.size() >= col);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].substr(col, 4) == "pass");
}

TEST_CASE("cli examples") {
  CHECK(cli({"count", "--host", "T(5,2)", "--pattern", "K2"}).out == "6\n");
  CHECK(cli({"free", "--host", "join(K1,T(8,2))", "--forbid", "2*C5"}).out == "true\n");
  CHECK(cli({"free", "--host", "K6", "--forbid", "K3", "--k", "2"}).out == "false\n");
  CHECK(cli({"count", "--host", "C5", "--pattern", "P3", "--induced"}).code == 2);
  CHECK(cli({"count", "--host", "K3", "--pattern", "K3", "--family"}).out == "8\n");

  const auto pack = cli({"pack", "--host", "K6", "--pattern", "K3"});
  CHECK(pack.out == "2\n{0 1 2} {3 4 5}\n");
  const auto part = cli({"partition", "--host", "join(K1,T(6,2))", "--pattern", "K3"});
  CHECK(part.code == 0);
  CHECK(lines(part.out).size() == 3);

  const auto verify = cli({"verify", "prop6.1", "--n-range", "4..8"});
  CHECK(verify.code == 0);
  CHECK(verify.out.find("fail") == std::string::npos);

  const auto enumerate = cli({"enumerate", "--n", "4"});
  CHECK(lines(enumerate.out).size() == 11);
  CHECK(lines(cli({"enumerate", "--n", "5", "--forbid", "K3"}).out).size() == 14);

  const auto search = cli({"search", "copies", "--n", "5", "--forbid", "K3", "--pattern", "K2"});
  CHECK(search.code == 0);
  CHECK(search.out.find("value=6") != std::string::npos);

  CHECK(cli({"construct", "thm35", "--n", "7", "--t", "3", "--k", "2"}).out ==
        encode_graph6(thm35_lower(7, 3, 2)) + "\n");
  CHECK(cli({"construct", "universal-join", "--k", "2", "--graph", "C5"}).out ==
        encode_graph6(universal_join(2, cycle(5))) + "\n");
}

TEST_CASE("cli reads the host from stdin") {
  const std::string k4 = encode_graph6(complete(4));
  CHECK(cli({"count", "--pattern", "K3"}, k4 + "\n").out == "4\n");
  CHECK(cli({"count", "--host", "-", "--pattern", "K3"}, k4).out == "4\n");
  CHECK(cli({"count", "--host", k4, "--pattern", "K3"}).out == "4\n");
}

TEST_CASE("cli exit codes") {
  CHECK(cli({"bogus"}).code == 2);
  CHECK(cli({"count", "--host", "K4"}).code == 2);
  CHECK(cli({"count", "--host", "Q(3)", "--pattern", "K2"}).code == 2);
  const auto bad = cli({"verify", "thm2.4", "--param", "F=K3"});
  CHECK(bad.code == 2);
  CHECK(bad.err.rfind("error: ", 0) == 0);
  CHECK(cli({"verify", "nope"}).code == 2);
  CHECK(cli({"verify", "erdos", "--param", "s"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({"verify", "list"}).code == 0);
  CHECK(lines(cli({"verify", "list"}).out).size() == registry().size());
}

TEST_CASE("cli config file and report files") {
  const std::string config = "kturan_test_config.txt";
  const std::string csv = "kturan_test_report.csv";
  {
    std::ofstream f(config);
    f << "# matching check\nn-range = 4..5\nl=2\n";
  }
  const auto r = cli({"verify", "prop6.1", "--config", config, "--csv", csv});
  CHECK(r.code == 0);
  const auto rows = lines(read_file(csv));
  REQUIRE(rows.size() > 1);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].find(",l=2,") != std::string::npos);
  CHECK(rows.back().rfind("prop6.1,5,", 0) == 0);

  const auto flag_wins = cli({"verify", "prop6.1", "--config", config, "--n-range", "6..6", "--csv", csv});
  CHECK(flag_wins.code == 0);
  CHECK(lines(read_file(csv))[1].rfind("prop6.1,6,", 0) == 0);

  CHECK(cli({"verify", "prop6.1", "--config", "missing_config_file.txt"}).code == 2);
  CHECK(cli({"verify", "prop6.1", "--n-range", "4..4", "--csv", "/nonexistent/dir/x.csv"}).code == 2);
  std::remove(config.c_str());
  std::remove(csv.c_str());
}
