#pragma once

#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "kturan/search.hpp"

namespace kturan {

enum class Mode { ExactEquality, LowerBoundVsOracle, Sandwich, ConstructionFreeness, RatioTrend };
enum class Verdict { Pass, Fail, Inconclusive, Reported };

std::string to_string(Mode m);
std::string to_string(Verdict v);

using Params = std::map<std::string, std::string>;

struct NRange {
  int lo = 0;
  int hi = 0;
};

/// Parses `a..b` (or a single `a`).
NRange parse_n_range(const std::string& text);

struct ReportRow {
  std::string check_id;
  int n = 0;
  std::string params;
  Mode mode = Mode::ExactEquality;
  std::string expected;
  std::string actual;
  Verdict verdict = Verdict::Pass;
};

struct TheoremCheck {
  std::string id;
  Params params;
  NRange n_range;
  Mode mode = Mode::ExactEquality;  // primary mode; rows carry their own
  std::vector<ReportRow> rows;
  std::string notes;

  bool failed() const;
};

/// Memoizes exhaustive searches by problem key so that checks sharing an
/// oracle value compute it once. Safe to use from several threads.
class SearchCache {
 public:
  explicit SearchCache(double budget_seconds = 0) : budget_seconds_(budget_seconds) {}

  ExtremalResult get(SearchProblem problem);

 private:
  double budget_seconds_;
  std::mutex mutex_;
  std::map<std::string, std::shared_future<ExtremalResult>> results_;
};

class CheckRun;

struct CheckEntry {
  std::string id;
  std::string claim;  // one-line statement of what is checked
  Mode mode;
  NRange default_range;
  Params defaults;
  std::function<void(CheckRun&)> run;
};

/// Every registered check, in a fixed order.
const std::vector<CheckEntry>& registry();

/// Looks up by id or alias; nullptr when unknown.
const CheckEntry* find_check(const std::string& id);

/// Runs one check. Throws std::invalid_argument for unknown ids, unknown
/// parameters and parameter sets outside the claim's hypotheses.
TheoremCheck run_check(const std::string& id, const Params& overrides,
                       std::optional<NRange> range, SearchCache& cache);

/// Runs checks on up to `jobs` threads; results keep the order of `ids`.
/// Overrides apply only to checks that have the parameter.
std::vector<TheoremCheck> run_checks(const std::vector<std::string>& ids, const Params& overrides,
                                     std::optional<NRange> range, SearchCache& cache,
                                     unsigned jobs);

/// Rows of all checks, ordered by check id and then n.
std::vector<ReportRow> report_rows(const std::vector<TheoremCheck>& checks);

inline constexpr const char* kCsvHeader = "check_id,n,params,mode,expected,actual,verdict";

std::string report_csv(const std::vector<TheoremCheck>& checks);
std::string report_table(const std::vector<TheoremCheck>& checks);

/// Throws std::runtime_error when the file cannot be written.
void write_file(const std::string& path, const std::string& content);

}  // namespace kturan
