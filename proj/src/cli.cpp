#include "bpa/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bpa/eval.hpp"
#include "bpa/explain.hpp"
#include "bpa/hash.hpp"
#include "bpa/parser.hpp"
#include "bpa/printer.hpp"
#include "bpa/repair.hpp"
#include "bpa/token.hpp"

namespace bpa {

namespace {

struct CliFailure : std::runtime_error {
  std::string prefix;  // E-PARSE, E-TEST, E-REPAIR, E-STORE, E-EVAL
  CliFailure(std::string prefix_, const std::string& message)
      : std::runtime_error(message), prefix(std::move(prefix_)) {}
};

std::string read_text_file(const std::string& path, const char* prefix) {
  std::ifstream in(path);
  if (!in) throw CliFailure(prefix, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Program parse_program_file(const std::string& path) {
  std::string text = read_text_file(path, "E-PARSE");
  try {
    return parse(text);
  } catch (const std::exception& e) {
    throw CliFailure("E-PARSE", path + ": " + e.what());
  }
}

void apply_env(CliConfig& cfg) {
  if (const char* v = std::getenv("BPA_PROVIDER_URL")) cfg.provider_url = v;
  if (const char* v = std::getenv("BPA_PROVIDER_TOKEN")) cfg.provider_token = v;
  if (const char* v = std::getenv("BPA_EMBEDDER_URL")) cfg.embedder_url = v;
}

void apply_config_file(CliConfig& cfg, const std::string& path) {
  std::string text = read_text_file(path, "E-STORE");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CliFailure("E-STORE", "malformed config file " + path + ": " + e.what());
  }
  auto get = [&](const char* key, auto& slot) {
    if (j.contains(key)) slot = j.at(key).get<std::decay_t<decltype(slot)>>();
  };
  get("store_path", cfg.store_path);
  get("corpus_path", cfg.corpus_path);
  get("provider_url", cfg.provider_url);
  get("provider_token", cfg.provider_token);
  get("embedder_url", cfg.embedder_url);
  get("format", cfg.format);
  get("max_breakpoints", cfg.max_breakpoints);
  get("h1_include_exit", cfg.h1_include_exit);
  get("n_candidates", cfg.n_candidates);
  get("similarity_threshold", cfg.similarity_threshold);
  get("dimension", cfg.dimension);
  get("fallback_execute", cfg.fallback_execute);
  get("step_limit", cfg.step_limit);
}

RecommenderConfig recommender_config(const CliConfig& cfg) {
  RecommenderConfig rc;
  rc.max_breakpoints = cfg.max_breakpoints;
  rc.heuristics.h1_include_exit = cfg.h1_include_exit;
  rc.step_limit = cfg.step_limit;
  return rc;
}

RepairConfig repair_config(const CliConfig& cfg) {
  RepairConfig rc;
  rc.n_candidates = cfg.n_candidates;
  rc.retrieval.similarity_threshold = cfg.similarity_threshold;
  rc.retrieval.dimension = cfg.dimension;
  rc.fallback_execute = cfg.fallback_execute;
  rc.step_limit = cfg.step_limit;
  return rc;
}

// Providers resolved from --mock or the configured endpoint; both may be null.
struct ResolvedProviders {
  std::unique_ptr<MockProvider> mock;
  std::unique_ptr<HttpProvider> http;
  std::unique_ptr<HashingEmbedder> hashing_embedder;
  std::unique_ptr<HttpEmbedder> http_embedder;

  GeneratorProvider* generator = nullptr;
  ClassifierProvider* classifier = nullptr;
  TextProvider* text = nullptr;
  Embedder* embedder = nullptr;
};

ResolvedProviders resolve_providers(const CliConfig& cfg, const std::string& mock_path) {
  ResolvedProviders r;
  if (!mock_path.empty()) {
    try {
      r.mock = std::make_unique<MockProvider>(MockProvider::from_file(mock_path));
    } catch (const ProviderError& e) {
      throw CliFailure("E-REPAIR", e.what());
    }
    r.generator = r.mock.get();
    r.classifier = r.mock.get();
  } else if (!cfg.provider_url.empty()) {
    r.http = std::make_unique<HttpProvider>(cfg.provider_url, cfg.provider_token);
    r.generator = r.http.get();
    r.classifier = r.http.get();
    r.text = r.http.get();
  }
  if (!cfg.embedder_url.empty()) {
    r.http_embedder = std::make_unique<HttpEmbedder>(cfg.embedder_url, cfg.provider_token);
    r.embedder = r.http_embedder.get();
  } else {
    r.hashing_embedder = std::make_unique<HashingEmbedder>(cfg.dimension);
    r.embedder = r.hashing_embedder.get();
  }
  return r;
}

std::vector<std::string> split_lines_keep(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

void print_annotated(const BreakpointPlan& plan, const Program& student, std::ostream& out) {
  std::vector<std::string> lines = split_lines_keep(pretty_print(student));
  std::map<int, const Breakpoint*> by_line;
  for (const auto& bp : plan.breakpoints) by_line[bp.line] = &bp;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    int line_no = static_cast<int>(i) + 1;
    auto it = by_line.find(line_no);
    const char* marker = "  ";
    if (it != by_line.end()) {
      marker = it->second->kind == BreakpointKind::BugSite ? "● " : "○ ";
    }
    out << marker << std::setw(3) << line_no << " | " << lines[i] << "\n";
    if (it != by_line.end() && !it->second->explanation.empty()) {
      out << "      | // " << it->second->explanation << "\n";
    }
  }
}

void print_pretty(const BreakpointPlan& plan, const Program& student, std::ostream& out) {
  std::vector<std::string> lines = split_lines_keep(pretty_print(student));
  out << "plan for task '" << plan.task_id << "', failed test '" << plan.failed_test_id << "' ("
      << plan.breakpoints.size() << " breakpoint" << (plan.breakpoints.size() == 1 ? "" : "s")
      << ")\n";
  for (const auto& bp : plan.breakpoints) {
    out << "  [" << to_string(bp.kind) << "] line " << bp.line;
    if (bp.line >= 1 && static_cast<std::size_t>(bp.line) <= lines.size()) {
      std::string text = lines[static_cast<std::size_t>(bp.line - 1)];
      std::size_t first = text.find_first_not_of(' ');
      if (first != std::string::npos) text = text.substr(first);
      out << ": " << text;
    }
    out << "\n";
    if (!bp.explanation.empty()) out << "      " << bp.explanation << "\n";
  }
}

void emit_plan(const BreakpointPlan& plan, const Program& student, const std::string& format,
               std::ostream& out) {
  if (format == "json") {
    out << plan_to_json(plan);
  } else if (format == "annotated-source" || format == "annotated") {
    print_annotated(plan, student, out);
  } else {
    print_pretty(plan, student, out);
  }
}

// ---------------------------------------------------------------------------

struct AdviseArgs {
  std::string student_file;
  std::string tests_file;
  std::string failed_id;
  std::string fixed_file;
  std::string mock_path;
  std::string emit_graph;
  bool validate = false;
};

int cmd_advise(const CliConfig& cfg, const AdviseArgs& args, std::ostream& out,
               std::ostream& err) {
  // plan lines, contexts, and the annotated view all use the canonical form
  Program student = parse(pretty_print(parse_program_file(args.student_file)));

  TaskSuite suite;
  try {
    suite = load_suite(args.tests_file);
  } catch (const SuiteError& e) {
    throw CliFailure("E-TEST", e.what());
  }
  const TestCase* failed = find_test(suite, args.failed_id);
  if (!failed) {
    throw CliFailure("E-TEST", "test '" + args.failed_id + "' not found in " + args.tests_file);
  }

  Program fixed;
  std::unique_ptr<Store> store;
  ResolvedProviders providers;
  if (!args.fixed_file.empty()) {
    fixed = parse_program_file(args.fixed_file);
  } else {
    // no fixed solution given: run the repair pipeline to obtain one
    if (cfg.store_path.empty()) {
      throw CliFailure("E-STORE", "advise without --fixed needs --store");
    }
    providers = resolve_providers(cfg, args.mock_path);
    try {
      store = std::make_unique<Store>(
          Store::load(cfg.store_path, StoreLoadMode::CreateIfMissing));
      RepairProviders rp{providers.generator, providers.classifier, providers.embedder};
      RepairOutcome outcome = repair(read_text_file(args.student_file, "E-PARSE"), *failed,
                                     suite.task_id, rp, *store, repair_config(cfg));
      fixed = parse(outcome.fixed_source);
    } catch (const StoreError& e) {
      throw CliFailure("E-STORE", e.what());
    } catch (const std::exception& e) {
      throw CliFailure("E-REPAIR", e.what());
    }
  }

  if (!args.emit_graph.empty()) {
    std::ofstream dot(args.emit_graph);
    if (!dot) throw CliFailure("E-STORE", "cannot write graph file: " + args.emit_graph);
    dot << to_dot(build_dependence_graph(student));
  }

  BreakpointPlan plan;
  try {
    plan = recommend(student, fixed, *failed, recommender_config(cfg), suite.task_id);
  } catch (const FixDoesNotPass& e) {
    throw CliFailure("E-TEST", e.what());
  }
  if (pretty_print(student) == pretty_print(fixed)) {  // empty diff, not a capped plan
    err << "no differences between student and fixed solution\n";
    return 2;
  }

  TestVerdict student_verdict = run_test(student, *failed, cfg.step_limit);
  auto contexts = build_contexts(plan, student, *failed, student_verdict);
  explain_plan(plan, contexts, providers.text, &err);

  emit_plan(plan, student, cfg.format, out);
  return 0;
}

// ---------------------------------------------------------------------------

struct RepairArgs {
  std::string student_file;
  std::string tests_file;
  std::string failed_id;
  std::string mock_path;
  bool validate = false;
};

int cmd_repair(const CliConfig& cfg, const RepairArgs& args, std::ostream& out, std::ostream&) {
  if (cfg.store_path.empty()) throw CliFailure("E-STORE", "repair needs --store");
  TaskSuite suite;
  try {
    suite = load_suite(args.tests_file);
  } catch (const SuiteError& e) {
    throw CliFailure("E-TEST", e.what());
  }
  const TestCase* failed = find_test(suite, args.failed_id);
  if (!failed) {
    throw CliFailure("E-TEST", "test '" + args.failed_id + "' not found in " + args.tests_file);
  }

  ResolvedProviders providers = resolve_providers(cfg, args.mock_path);
  Store store;
  try {
    store = Store::load(cfg.store_path, StoreLoadMode::CreateIfMissing);
  } catch (const StoreError& e) {
    throw CliFailure("E-STORE", e.what());
  }

  std::string student_source = read_text_file(args.student_file, "E-PARSE");
  RepairOutcome outcome;
  try {
    RepairProviders rp{providers.generator, providers.classifier, providers.embedder};
    outcome = repair(student_source, *failed, suite.task_id, rp, store, repair_config(cfg));
  } catch (const ParseError& e) {
    throw CliFailure("E-PARSE", e.what());
  } catch (const LexError& e) {
    throw CliFailure("E-PARSE", e.what());
  } catch (const std::exception& e) {
    throw CliFailure("E-REPAIR", e.what());
  }

  nlohmann::ordered_json j;
  j["source"] = outcome.source == RepairSource::Retrieved ? "retrieved" : "generated";
  if (outcome.source == RepairSource::Retrieved) j["entry_id"] = outcome.retrieved_entry_id;
  j["failed_test_id"] = outcome.failed_test_id;
  j["llm_calls"] = outcome.llm_calls;
  j["fixed_source"] = outcome.fixed_source;
  j["candidates"] = nlohmann::ordered_json::array();
  for (const auto& rec : outcome.candidates) {
    nlohmann::ordered_json cj;
    cj["predicted_pass"] = rec.predicted_pass;
    cj["similarity_to_student"] = rec.similarity_to_student;
    cj["parse_valid"] = rec.parse_valid;
    cj["text"] = rec.text;
    j["candidates"].push_back(std::move(cj));
  }

  if (args.validate) {
    UploadReport report;
    try {
      report = validate_and_upload(outcome, suite.tests, store, suite.task_id, repair_config(cfg));
      store.save(cfg.store_path);
    } catch (const StoreError& e) {
      throw CliFailure("E-STORE", e.what());
    }
    nlohmann::ordered_json uj;
    uj["executed"] = report.executed;
    uj["uploaded"] = report.uploaded;
    uj["classifier_errors"] = report.classifier_errors;
    j["upload_report"] = std::move(uj);
  }

  out << j.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_store_init(const CliConfig& cfg, std::ostream& out) {
  if (cfg.store_path.empty()) throw CliFailure("E-STORE", "store init needs --store");
  if (std::filesystem::exists(cfg.store_path)) {
    throw CliFailure("E-STORE", "store file already exists: " + cfg.store_path);
  }
  Store empty;
  try {
    empty.save(cfg.store_path);
  } catch (const StoreError& e) {
    throw CliFailure("E-STORE", e.what());
  }
  out << "initialized empty store at " << cfg.store_path << "\n";
  return 0;
}

int cmd_store_add(const CliConfig& cfg, const std::string& solution_file,
                  const std::string& tests_file, std::ostream& out) {
  if (cfg.store_path.empty()) throw CliFailure("E-STORE", "store add needs --store");
  Program solution = parse_program_file(solution_file);
  TaskSuite suite;
  try {
    suite = load_suite(tests_file);
  } catch (const SuiteError& e) {
    throw CliFailure("E-TEST", e.what());
  }

  auto verdicts = run_suite(solution, suite.tests, cfg.step_limit);
  std::set<std::string> passing;
  for (const auto& v : verdicts) {
    if (v.status == TestStatus::Pass) passing.insert(v.test_id);
  }
  if (passing.size() != suite.tests.size()) {
    throw CliFailure("E-STORE", "solution fails " +
                                    std::to_string(suite.tests.size() - passing.size()) + " of " +
                                    std::to_string(suite.tests.size()) +
                                    " tests; only passing solutions are added");
  }

  Store store;
  try {
    store = Store::load(cfg.store_path, StoreLoadMode::CreateIfMissing);
  } catch (const StoreError& e) {
    throw CliFailure("E-STORE", e.what());
  }
  std::string canonical = pretty_print(solution);
  std::string entry_id = suite.task_id + "-" + fnv1a64_hex(canonical);
  if (store.contains(entry_id)) {
    out << "already present: " << entry_id << "\n";
    return 0;
  }
  HashingEmbedder embedder(cfg.dimension);
  StoreEntry entry;
  entry.entry_id = entry_id;
  entry.task_id = suite.task_id;
  entry.source_text = canonical;
  entry.embedding = embedder.embed(canonical);
  entry.passing_test_ids = std::move(passing);
  entry.validated = true;
  try {
    store.put(std::move(entry));
    store.save(cfg.store_path);
  } catch (const StoreError& e) {
    throw CliFailure("E-STORE", e.what());
  }
  out << "added " << entry_id << "\n";
  return 0;
}

int cmd_store_query(const CliConfig& cfg, const std::string& student_file,
                    const std::string& tests_file, const std::string& failed_id,
                    std::ostream& out) {
  if (cfg.store_path.empty()) throw CliFailure("E-STORE", "store query needs --store");
  Program student = parse_program_file(student_file);
  TaskSuite suite;
  try {
    suite = load_suite(tests_file);
  } catch (const SuiteError& e) {
    throw CliFailure("E-TEST", e.what());
  }
  Store store;
  try {
    store = Store::load(cfg.store_path, StoreLoadMode::Strict);
  } catch (const StoreError& e) {
    throw CliFailure("E-STORE", e.what());
  }
  HashingEmbedder embedder(cfg.dimension);
  Embedding q = embedder.embed(pretty_print(student));
  RetrievalConfig rc;
  rc.similarity_threshold = cfg.similarity_threshold;
  rc.dimension = cfg.dimension;
  auto hit = store.query(suite.task_id, failed_id, q, rc);
  if (!hit) {
    out << "none\n";
    return 0;
  }
  out << hit->entry_id << " similarity=" << std::setprecision(17) << cosine(hit->embedding, q)
      << "\n";
  return 0;
}

int cmd_store_stats(const CliConfig& cfg, std::ostream& out) {
  if (cfg.store_path.empty()) throw CliFailure("E-STORE", "store stats needs --store");
  Store store;
  try {
    store = Store::load(cfg.store_path, StoreLoadMode::Strict);
  } catch (const StoreError& e) {
    throw CliFailure("E-STORE", e.what());
  }
  std::map<std::string, int> per_task;
  for (const auto& e : store.entries()) per_task[e.task_id] += 1;
  out << "entries: " << store.size() << "\n";
  for (const auto& [task, count] : per_task) {
    out << "  " << task << ": " << count << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_eval_breakpoints(const CliConfig& cfg, const std::string& out_path, double assert_min_f1,
                         std::ostream& out, std::ostream&) {
  if (cfg.corpus_path.empty()) throw CliFailure("E-EVAL", "eval breakpoints needs --corpus");
  EvalReport report;
  try {
    report = eval_breakpoints(cfg.corpus_path, recommender_config(cfg));
  } catch (const CorpusError& e) {
    throw CliFailure("E-EVAL", e.what());
  }
  std::string text = report_to_json(report);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw CliFailure("E-EVAL", "cannot write report: " + out_path);
    f << text;
  } else {
    out << text;
  }
  if (assert_min_f1 >= 0.0 && report.micro.f1 < assert_min_f1) return 3;
  return 0;
}

int cmd_eval_classifier(const std::string& rows_path, const std::string& out_path,
                        double assert_min_f1, std::ostream& out) {
  std::vector<std::pair<bool, bool>> rows;
  try {
    rows = load_classifier_rows(rows_path);
  } catch (const CorpusError& e) {
    throw CliFailure("E-EVAL", e.what());
  }
  Metrics m = classifier_metrics(rows);
  std::string text = classifier_report_to_json(m);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw CliFailure("E-EVAL", "cannot write report: " + out_path);
    f << text;
  } else {
    out << text;
  }
  if (assert_min_f1 >= 0.0 && m.f1 < assert_min_f1) return 3;
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  apply_env(cfg);

  // --config applies before the remaining flags so flags win
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    if (args[i] == "--config") {
      try {
        apply_config_file(cfg, args[i + 1]);
      } catch (const CliFailure& e) {
        err << e.prefix << ": " << e.what() << "\n";
        return 1;
      }
    }
  }

  CLI::App app{"breakpoint advisor for MiniLang programs"};
  app.require_subcommand(1);
  std::string config_dummy;
  app.add_option("--config", config_dummy, "JSON config file");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_dummy);
    sub->add_option("--store", cfg.store_path, "store file (JSONL)");
    sub->add_option("--format", cfg.format)
        ->check(CLI::IsMember({"json", "pretty", "annotated-source", "annotated"}));
    sub->add_option("--max-breakpoints", cfg.max_breakpoints);
    sub->add_option("--h1-include-exit", cfg.h1_include_exit);
    sub->add_option("--step-limit", cfg.step_limit);
    sub->add_option("--threshold", cfg.similarity_threshold);
    sub->add_option("--dimension", cfg.dimension);
  };

  AdviseArgs advise_args;
  CLI::App* advise = app.add_subcommand("advise", "recommend breakpoints for a buggy program");
  advise->add_option("student", advise_args.student_file)->required();
  advise->add_option("--tests", advise_args.tests_file)->required();
  advise->add_option("--failed", advise_args.failed_id)->required();
  advise->add_option("--fixed", advise_args.fixed_file);
  advise->add_option("--mock", advise_args.mock_path);
  advise->add_option("--emit-graph", advise_args.emit_graph);
  add_common(advise);

  RepairArgs repair_args;
  CLI::App* repair_cmd = app.add_subcommand("repair", "retrieve or generate a fixed solution");
  repair_cmd->add_option("student", repair_args.student_file)->required();
  repair_cmd->add_option("--tests", repair_args.tests_file)->required();
  repair_cmd->add_option("--failed", repair_args.failed_id)->required();
  repair_cmd->add_option("--mock", repair_args.mock_path);
  repair_cmd->add_flag("--validate", repair_args.validate);
  repair_cmd->add_option("--n-candidates", cfg.n_candidates);
  repair_cmd->add_flag("--fallback-execute", cfg.fallback_execute);
  add_common(repair_cmd);

  CLI::App* store_cmd = app.add_subcommand("store", "manage the retrieval store");
  store_cmd->require_subcommand(1);
  CLI::App* store_init = store_cmd->add_subcommand("init", "create an empty store");
  add_common(store_init);
  std::string add_solution, add_tests;
  CLI::App* store_add = store_cmd->add_subcommand("add", "embed, execute, and store a solution");
  store_add->add_option("solution", add_solution)->required();
  store_add->add_option("--tests", add_tests)->required();
  add_common(store_add);
  std::string query_student, query_tests, query_failed;
  CLI::App* store_query = store_cmd->add_subcommand("query", "find the best stored match");
  store_query->add_option("student", query_student)->required();
  store_query->add_option("--tests", query_tests)->required();
  store_query->add_option("--failed", query_failed)->required();
  add_common(store_query);
  CLI::App* store_stats = store_cmd->add_subcommand("stats", "entry counts per task");
  add_common(store_stats);

  CLI::App* eval_cmd = app.add_subcommand("eval", "run the evaluation harness");
  eval_cmd->require_subcommand(1);
  std::string eval_out;
  double assert_min_f1 = -1.0;
  CLI::App* eval_bp = eval_cmd->add_subcommand("breakpoints", "P/R/F1 against gold labels");
  eval_bp->add_option("--corpus", cfg.corpus_path);
  eval_bp->add_option("--out", eval_out);
  eval_bp->add_option("--assert-min-f1", assert_min_f1);
  add_common(eval_bp);
  std::string rows_path;
  CLI::App* eval_cl = eval_cmd->add_subcommand("classifier", "P/R/F1 of pass predictions");
  eval_cl->add_option("--rows", rows_path)->required();
  eval_cl->add_option("--out", eval_out);
  eval_cl->add_option("--assert-min-f1", assert_min_f1);
  add_common(eval_cl);

  std::vector<const char*> argv;
  argv.push_back("bpa");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help();
      return 0;
    }
    err << "E-PARSE: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*advise) return cmd_advise(cfg, advise_args, out, err);
    if (*repair_cmd) return cmd_repair(cfg, repair_args, out, err);
    if (*store_cmd) {
      if (*store_init) return cmd_store_init(cfg, out);
      if (*store_add) return cmd_store_add(cfg, add_solution, add_tests, out);
      if (*store_query) return cmd_store_query(cfg, query_student, query_tests, query_failed, out);
      if (*store_stats) return cmd_store_stats(cfg, out);
    }
    if (*eval_cmd) {
      if (*eval_bp) return cmd_eval_breakpoints(cfg, eval_out, assert_min_f1, out, err);
      if (*eval_cl) return cmd_eval_classifier(rows_path, eval_out, assert_min_f1, out);
    }
  } catch (const CliFailure& e) {
    err << e.prefix << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "E-REPAIR: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace bpa
