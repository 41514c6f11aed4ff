#include "bpa/eval.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bpa/parser.hpp"

namespace bpa {

namespace {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path, const std::string& pair_id) {
  std::ifstream in(path);
  if (!in) throw CorpusError(pair_id + ": " + path.filename().string() + " not found");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string trim(const std::string& s) {
  std::size_t start = s.find_first_not_of(" \t\r\n");
  std::size_t end = s.find_last_not_of(" \t\r\n");
  if (start == std::string::npos) return "";
  return s.substr(start, end - start + 1);
}

}  // namespace

std::vector<CorpusPair> load_corpus(const std::string& corpus_path) {
  if (!fs::exists(corpus_path) || !fs::is_directory(corpus_path)) {
    throw CorpusError("corpus directory not found: " + corpus_path);
  }
  std::vector<fs::path> dirs;
  for (const auto& entry : fs::directory_iterator(corpus_path)) {
    if (entry.is_directory()) dirs.push_back(entry.path());
  }
  std::sort(dirs.begin(), dirs.end());

  std::vector<CorpusPair> pairs;
  for (const auto& dir : dirs) {
    CorpusPair pair;
    pair.pair_id = dir.filename().string();
    pair.student_source = read_file(dir / "student.ml", pair.pair_id);
    pair.fixed_source = read_file(dir / "fixed.ml", pair.pair_id);
    try {
      pair.suite = load_suite((dir / "tests.json").string());
    } catch (const SuiteError& e) {
      throw CorpusError(pair.pair_id + ": " + e.what());
    }
    pair.failed_test_id = trim(read_file(dir / "failed_test.txt", pair.pair_id));
    if (!find_test(pair.suite, pair.failed_test_id)) {
      throw CorpusError(pair.pair_id + ": failed test '" + pair.failed_test_id +
                        "' is not in tests.json");
    }
    std::string gold_text = read_file(dir / "gold_breakpoints.json", pair.pair_id);
    try {
      nlohmann::json j = nlohmann::json::parse(gold_text);
      for (int line : j.at("lines").get<std::vector<int>>()) pair.gold_breakpoints.insert(line);
    } catch (const nlohmann::json::exception& e) {
      throw CorpusError(pair.pair_id + ": malformed gold_breakpoints.json: " + e.what());
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

EvalReport score_pairs(const std::vector<CorpusPair>& pairs, const RecommenderConfig& cfg) {
  EvalReport report;
  long long tp = 0, fp = 0, fn = 0;
  double sum_p = 0.0, sum_r = 0.0, sum_f1 = 0.0;

  for (const auto& pair : pairs) {
    Program student, fixed;
    try {
      student = parse(pair.student_source);
      fixed = parse(pair.fixed_source);
    } catch (const std::exception& e) {
      throw CorpusError(pair.pair_id + ": " + e.what());
    }
    const TestCase* failed = find_test(pair.suite, pair.failed_test_id);
    BreakpointPlan plan;
    try {
      plan = recommend(student, fixed, *failed, cfg, pair.suite.task_id);
    } catch (const std::exception& e) {
      throw CorpusError(pair.pair_id + ": " + e.what());
    }

    PairResult result;
    result.pair_id = pair.pair_id;
    for (const auto& bp : plan.breakpoints) result.predicted.insert(bp.line);
    result.gold = pair.gold_breakpoints;
    result.metrics = set_metrics(result.predicted, result.gold);
    tp += result.metrics.tp;
    fp += result.metrics.fp;
    fn += result.metrics.fn;
    sum_p += result.metrics.precision;
    sum_r += result.metrics.recall;
    sum_f1 += result.metrics.f1;
    report.pairs.push_back(std::move(result));
  }

  report.micro = metrics_from_counts(tp, fp, fn);
  if (!report.pairs.empty()) {
    double n = static_cast<double>(report.pairs.size());
    report.macro.precision = sum_p / n;
    report.macro.recall = sum_r / n;
    report.macro.f1 = sum_f1 / n;
  }
  return report;
}

EvalReport eval_breakpoints(const std::string& corpus_path, const RecommenderConfig& cfg) {
  return score_pairs(load_corpus(corpus_path), cfg);
}

std::string report_to_json(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["pairs"] = nlohmann::ordered_json::array();
  for (const auto& pair : report.pairs) {
    nlohmann::ordered_json pj;
    pj["pair_id"] = pair.pair_id;
    pj["predicted"] = pair.predicted;
    pj["gold"] = pair.gold;
    pj["tp"] = pair.metrics.tp;
    pj["fp"] = pair.metrics.fp;
    pj["fn"] = pair.metrics.fn;
    pj["precision"] = pair.metrics.precision;
    pj["recall"] = pair.metrics.recall;
    pj["f1"] = pair.metrics.f1;
    j["pairs"].push_back(std::move(pj));
  }
  nlohmann::ordered_json micro;
  micro["tp"] = report.micro.tp;
  micro["fp"] = report.micro.fp;
  micro["fn"] = report.micro.fn;
  micro["precision"] = report.micro.precision;
  micro["recall"] = report.micro.recall;
  micro["f1"] = report.micro.f1;
  j["micro"] = std::move(micro);
  nlohmann::ordered_json macro;
  macro["precision"] = report.macro.precision;
  macro["recall"] = report.macro.recall;
  macro["f1"] = report.macro.f1;
  j["macro"] = std::move(macro);
  return j.dump(2) + "\n";
}

std::vector<std::pair<bool, bool>> load_classifier_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("rows file not found: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw CorpusError(std::string("malformed rows file: ") + e.what());
  }
  std::vector<std::pair<bool, bool>> rows;
  try {
    for (const auto& row : j.at("rows")) {
      rows.emplace_back(row.at("predicted").get<bool>(), row.at("actual").get<bool>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw CorpusError(std::string("malformed rows file: ") + e.what());
  }
  return rows;
}

std::string classifier_report_to_json(const Metrics& m) {
  RoundedMetrics r = rounded(m);
  nlohmann::ordered_json j;
  j["tp"] = m.tp;
  j["fp"] = m.fp;
  j["fn"] = m.fn;
  j["precision"] = m.precision;
  j["recall"] = m.recall;
  j["f1"] = m.f1;
  nlohmann::ordered_json rj;
  rj["precision"] = r.precision;
  rj["recall"] = r.recall;
  rj["f1"] = r.f1;
  j["rounded"] = std::move(rj);
  return j.dump(2) + "\n";
}

}  // namespace bpa
