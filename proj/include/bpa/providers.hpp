#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bpa/embedding.hpp"
#include "bpa/testing.hpp"

namespace bpa {

struct ProviderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Generates exactly `n` candidate fixes for a failing solution.
class GeneratorProvider {
 public:
  virtual ~GeneratorProvider() = default;
  virtual std::vector<std::string> generate(const std::string& task_description,
                                            const std::string& student_source,
                                            const TestCase& failed_test, int n) = 0;
};

/// Predicts whether a candidate would pass the failed test, without running it.
class ClassifierProvider {
 public:
  virtual ~ClassifierProvider() = default;
  virtual bool predict_pass(const std::string& candidate_source, const TestCase& failed_test) = 0;
};

struct ExplainRequest {
  int line = 0;
  std::string kind;  // "bug-site" | "affected"
  std::string dominant_tag;
  std::string failed_test_id;
  std::vector<std::string> variables;
  std::string enclosing_function;
};

/// Produces enriched explanation text for one breakpoint.
class TextProvider {
 public:
  virtual ~TextProvider() = default;
  virtual std::string explain(const ExplainRequest& request) = 0;
};

// ---------------------------------------------------------------------------
// Wire format shared by the HTTP and mock providers. Requests serialize to a
// canonical JSON document whose digest keys the mock fixture map.

nlohmann::ordered_json test_to_json(const TestCase& t);
nlohmann::ordered_json make_generate_request(const std::string& task_description,
                                             const std::string& student_source,
                                             const TestCase& failed_test, int n);
nlohmann::ordered_json make_classify_request(const std::string& candidate_source,
                                             const TestCase& failed_test);
nlohmann::ordered_json make_explain_request(const ExplainRequest& request);
std::string provider_request_digest(const nlohmann::ordered_json& request);

// ---------------------------------------------------------------------------

/// Scripted provider for hermetic tests: a JSON map from request digest to
/// response (`{"candidates": [...]}`, `{"pass": bool}`, or `{"text": "..."}`).
/// Unknown digests raise ProviderError. Call counters support the
/// call-minimization assertions.
class MockProvider final : public GeneratorProvider,
                           public ClassifierProvider,
                           public TextProvider {
 public:
  static MockProvider from_file(const std::string& path);
  static MockProvider from_json(const nlohmann::json& fixture);

  std::vector<std::string> generate(const std::string& task_description,
                                    const std::string& student_source,
                                    const TestCase& failed_test, int n) override;
  bool predict_pass(const std::string& candidate_source, const TestCase& failed_test) override;
  std::string explain(const ExplainRequest& request) override;

  int generate_calls() const { return generate_calls_; }
  int classify_calls() const { return classify_calls_; }
  int explain_calls() const { return explain_calls_; }

 private:
  std::map<std::string, nlohmann::json> responses_;
  int generate_calls_ = 0;
  int classify_calls_ = 0;
  int explain_calls_ = 0;

  const nlohmann::json& lookup(const nlohmann::ordered_json& request) const;
};

/// Classifier that is ground truth by construction: parses and executes the
/// candidate against the failed test. Parse failures predict fail.
class ExecutionClassifier final : public ClassifierProvider {
 public:
  explicit ExecutionClassifier(long long step_limit = kDefaultStepLimit)
      : step_limit_(step_limit) {}
  bool predict_pass(const std::string& candidate_source, const TestCase& failed_test) override;

 private:
  long long step_limit_;
};

/// Generic HTTP client for external generate/classify/explain endpoints.
/// POSTs the canonical request JSON; never used by the default test suite.
class HttpProvider final : public GeneratorProvider,
                           public ClassifierProvider,
                           public TextProvider {
 public:
  HttpProvider(std::string url, std::string auth_token)
      : url_(std::move(url)), token_(std::move(auth_token)) {}

  std::vector<std::string> generate(const std::string& task_description,
                                    const std::string& student_source,
                                    const TestCase& failed_test, int n) override;
  bool predict_pass(const std::string& candidate_source, const TestCase& failed_test) override;
  std::string explain(const ExplainRequest& request) override;

 private:
  std::string url_;
  std::string token_;

  nlohmann::json post(const nlohmann::ordered_json& request);
};

/// HTTP embedding endpoint: POST {"texts": [...]} -> {"vectors": [[...]]}.
/// Vectors are re-normalized on receipt to satisfy the store contract.
class HttpEmbedder final : public Embedder {
 public:
  HttpEmbedder(std::string url, std::string auth_token)
      : url_(std::move(url)), token_(std::move(auth_token)) {}
  Embedding embed(const std::string& text) override;

 private:
  std::string url_;
  std::string token_;
};

}  // namespace bpa
