#include "bpa/repair.hpp"

#include <algorithm>

#include "bpa/hash.hpp"
#include "bpa/parser.hpp"
#include "bpa/printer.hpp"

namespace bpa {

std::vector<CandidateRecord> rank_candidates(std::vector<CandidateRecord> ledger) {
  std::stable_sort(ledger.begin(), ledger.end(),
                   [](const CandidateRecord& a, const CandidateRecord& b) {
                     if (a.predicted_pass != b.predicted_pass) return a.predicted_pass;
                     if (!a.predicted_pass) return false;  // fails keep relative order
                     return a.similarity_to_student > b.similarity_to_student;
                   });
  return ledger;
}

RepairOutcome repair(const std::string& student_source, const TestCase& failed_test,
                     const std::string& task_id, const RepairProviders& providers, Store& store,
                     const RepairConfig& cfg) {
  if (!providers.embedder) throw RepairError("no embedder configured");

  Program student = parse(student_source);  // ParseError propagates to the caller
  if (run_test(student, failed_test, cfg.step_limit).status == TestStatus::Pass) {
    throw StudentAlreadyPasses(failed_test.id);
  }
  std::string student_canonical = pretty_print(student);
  Embedding query = providers.embedder->embed(student_canonical);

  RepairOutcome outcome;
  outcome.task_id = task_id;
  outcome.failed_test_id = failed_test.id;

  if (auto hit = store.query(task_id, failed_test.id, query, cfg.retrieval)) {
    outcome.source = RepairSource::Retrieved;
    outcome.retrieved_entry_id = hit->entry_id;
    outcome.fixed_source = hit->source_text;
    return outcome;  // zero generator/classifier calls on a hit
  }

  if (!providers.generator) {
    throw RepairError(
        "retrieval missed and no generator provider is configured; "
        "prime the store or supply --mock/provider settings");
  }
  if (!providers.classifier) throw RepairError("no classifier provider configured");

  std::vector<std::string> texts =
      providers.generator->generate(task_id, student_source, failed_test, cfg.n_candidates);
  outcome.llm_calls += 1;
  if (static_cast<int>(texts.size()) != cfg.n_candidates) {
    throw RepairError("generator returned " + std::to_string(texts.size()) +
                      " candidates, expected " + std::to_string(cfg.n_candidates));
  }

  std::vector<CandidateRecord> ledger;
  ledger.reserve(texts.size());
  for (const auto& text : texts) {
    CandidateRecord rec;
    rec.text = text;
    std::string canonical;
    try {
      canonical = pretty_print(parse(text));
    } catch (const std::exception&) {
      // unparsable: certain failure, never bother the classifier
      rec.parse_valid = false;
      ledger.push_back(std::move(rec));
      continue;
    }
    rec.similarity_to_student = cosine(providers.embedder->embed(canonical), query);
    rec.predicted_pass = providers.classifier->predict_pass(text, failed_test);
    outcome.llm_calls += 1;
    ledger.push_back(std::move(rec));
  }

  outcome.candidates = rank_candidates(std::move(ledger));
  outcome.source = RepairSource::Generated;

  if (!outcome.candidates.empty() && outcome.candidates.front().predicted_pass) {
    outcome.fixed_source = outcome.candidates.front().text;
    return outcome;
  }

  if (cfg.fallback_execute) {
    for (const auto& rec : outcome.candidates) {
      if (!rec.parse_valid) continue;
      try {
        Program candidate = parse(rec.text);
        if (run_test(candidate, failed_test, cfg.step_limit).status == TestStatus::Pass) {
          outcome.fixed_source = rec.text;
          return outcome;
        }
      } catch (const std::exception&) {
        continue;
      }
    }
  }
  throw AllCandidatesRejected();
}

UploadReport validate_and_upload(const RepairOutcome& outcome, const std::vector<TestCase>& suite,
                                 Store& store, const std::string& task_id,
                                 const RepairConfig& cfg) {
  UploadReport report;
  if (outcome.source == RepairSource::Retrieved) return report;

  const TestCase* failed = nullptr;
  for (const auto& t : suite) {
    if (t.id == outcome.failed_test_id) failed = &t;
  }
  if (!failed) {
    throw RepairError("suite does not contain the failed test '" + outcome.failed_test_id + "'");
  }

  HashingEmbedder embedder(cfg.retrieval.dimension);
  for (const auto& rec : outcome.candidates) {
    ++report.executed;  // parse-invalid counts as executed-and-failed
    bool actual_pass = false;
    std::set<std::string> passing;
    std::string canonical;
    if (rec.parse_valid) {
      try {
        Program candidate = parse(rec.text);
        canonical = pretty_print(candidate);
        for (const auto& verdict : run_suite(candidate, suite, cfg.step_limit)) {
          if (verdict.status == TestStatus::Pass) passing.insert(verdict.test_id);
        }
        actual_pass = passing.count(failed->id) > 0;
      } catch (const std::exception&) {
        actual_pass = false;
      }
    }
    if (rec.predicted_pass != actual_pass) ++report.classifier_errors;
    if (!actual_pass) continue;

    std::string entry_id = task_id + "-" + fnv1a64_hex(canonical);
    if (store.contains(entry_id)) continue;  // identical solution already uploaded
    StoreEntry entry;
    entry.entry_id = entry_id;
    entry.task_id = task_id;
    entry.source_text = canonical;
    entry.embedding = embedder.embed(canonical);
    entry.passing_test_ids = std::move(passing);
    entry.validated = true;
    store.put(std::move(entry));
    ++report.uploaded;
  }
  return report;
}

}  // namespace bpa
