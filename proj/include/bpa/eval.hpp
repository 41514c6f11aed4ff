#pragma once

#include <string>
#include <vector>

#include "bpa/metrics.hpp"
#include "bpa/recommend.hpp"

namespace bpa {

struct CorpusError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One corpus pair on disk: student.ml, fixed.ml, tests.json, failed_test.txt,
/// gold_breakpoints.json.
struct CorpusPair {
  std::string pair_id;
  std::string student_source;
  std::string fixed_source;
  TaskSuite suite;
  std::string failed_test_id;
  LineSet gold_breakpoints;
};

/// Loads every subdirectory of `corpus_path`, sorted by name.
std::vector<CorpusPair> load_corpus(const std::string& corpus_path);

struct PairResult {
  std::string pair_id;
  LineSet predicted;
  LineSet gold;
  Metrics metrics;
};

struct MacroAverage {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct EvalReport {
  std::vector<PairResult> pairs;  // ordered by pair id
  Metrics micro;                  // pooled tp/fp/fn
  MacroAverage macro;             // mean of per-pair metrics
};

/// Runs recommend on every pair (fixed program supplied, repair bypassed) and
/// scores plan lines against the gold labels.
EvalReport eval_breakpoints(const std::string& corpus_path, const RecommenderConfig& cfg);

EvalReport score_pairs(const std::vector<CorpusPair>& pairs, const RecommenderConfig& cfg);

std::string report_to_json(const EvalReport& report);

/// Rows file for classifier evaluation:
/// `{ "rows": [ { "predicted": bool, "actual": bool }, ... ] }`.
std::vector<std::pair<bool, bool>> load_classifier_rows(const std::string& path);

std::string classifier_report_to_json(const Metrics& m);

}  // namespace bpa
