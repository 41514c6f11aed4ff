#pragma once

#include <string>
#include <vector>

#include "bpa/providers.hpp"
#include "bpa/store.hpp"

namespace bpa {

enum class RepairSource { Retrieved, Generated };

struct CandidateRecord {
  std::string text;
  bool predicted_pass = false;
  double similarity_to_student = 0.0;
  bool parse_valid = true;
};

/// Result of one repair request: where the fix came from, the fix itself, and
/// the full candidate ledger for later validation.
struct RepairOutcome {
  RepairSource source = RepairSource::Generated;
  std::string retrieved_entry_id;  // Retrieved only
  std::string fixed_source;
  std::vector<CandidateRecord> candidates;  // ranked; empty for Retrieved
  int llm_calls = 0;                        // provider invocations (generate + classify)
  std::string task_id;
  std::string failed_test_id;
};

struct RepairConfig {
  int n_candidates = 5;
  RetrievalConfig retrieval;
  bool fallback_execute = false;
  long long step_limit = kDefaultStepLimit;
};

struct RepairProviders {
  GeneratorProvider* generator = nullptr;
  ClassifierProvider* classifier = nullptr;
  Embedder* embedder = nullptr;  // required
};

struct StudentAlreadyPasses : std::runtime_error {
  explicit StudentAlreadyPasses(const std::string& test_id)
      : std::runtime_error("student solution already passes test '" + test_id + "'") {}
};

struct AllCandidatesRejected : std::runtime_error {
  AllCandidatesRejected()
      : std::runtime_error("no generated candidate was predicted (or observed) to pass") {}
};

struct RepairError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Retrieval first; on a miss, generate n candidates, classify each, rank the
/// predicted passes by similarity to the student's code, and return the top
/// one. Parse-invalid candidates never reach the classifier.
RepairOutcome repair(const std::string& student_source, const TestCase& failed_test,
                     const std::string& task_id, const RepairProviders& providers, Store& store,
                     const RepairConfig& cfg);

/// Stable sort: predicted passes first by similarity descending (ties keep
/// ledger order); predicted fails keep their relative order at the tail.
std::vector<CandidateRecord> rank_candidates(std::vector<CandidateRecord> ledger);

struct UploadReport {
  int executed = 0;
  int uploaded = 0;
  int classifier_errors = 0;  // prediction vs actual mismatches on the failed test
};

/// Executes every generated candidate against the full suite, uploads those
/// that actually pass the failed test as validated entries, and tallies
/// classifier mistakes. Retrieved outcomes are no-ops.
UploadReport validate_and_upload(const RepairOutcome& outcome, const std::vector<TestCase>& suite,
                                 Store& store, const std::string& task_id,
                                 const RepairConfig& cfg);

}  // namespace bpa
