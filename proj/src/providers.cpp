#include "bpa/providers.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <httplib.h>

#include "bpa/hash.hpp"
#include "bpa/parser.hpp"

namespace bpa {

nlohmann::ordered_json test_to_json(const TestCase& t) {
  nlohmann::ordered_json j;
  j["id"] = t.id;
  j["entry"] = t.entry;
  j["args"] = nlohmann::ordered_json::array();
  for (const auto& arg : t.args) {
    if (const auto* i = std::get_if<long long>(&arg)) {
      j["args"].push_back(*i);
    } else if (const auto* b = std::get_if<bool>(&arg)) {
      j["args"].push_back(*b);
    } else if (const auto* s = std::get_if<std::string>(&arg)) {
      j["args"].push_back(*s);
    }
  }
  if (t.expected_value) {
    if (const auto* i = std::get_if<long long>(&*t.expected_value)) {
      j["expected_value"] = *i;
    } else if (const auto* b = std::get_if<bool>(&*t.expected_value)) {
      j["expected_value"] = *b;
    } else if (const auto* s = std::get_if<std::string>(&*t.expected_value)) {
      j["expected_value"] = *s;
    }
  }
  if (t.expected_stdout) j["expected_stdout"] = *t.expected_stdout;
  return j;
}

nlohmann::ordered_json make_generate_request(const std::string& task_description,
                                             const std::string& student_source,
                                             const TestCase& failed_test, int n) {
  nlohmann::ordered_json j;
  j["mode"] = "generate";
  j["task_description"] = task_description;
  j["student_source"] = student_source;
  j["failed_test"] = test_to_json(failed_test);
  j["n"] = n;
  return j;
}

nlohmann::ordered_json make_classify_request(const std::string& candidate_source,
                                             const TestCase& failed_test) {
  nlohmann::ordered_json j;
  j["mode"] = "classify";
  j["student_source"] = candidate_source;
  j["failed_test"] = test_to_json(failed_test);
  return j;
}

nlohmann::ordered_json make_explain_request(const ExplainRequest& request) {
  nlohmann::ordered_json j;
  j["mode"] = "explain";
  j["line"] = request.line;
  j["kind"] = request.kind;
  j["dominant_tag"] = request.dominant_tag;
  j["failed_test_id"] = request.failed_test_id;
  j["variables"] = request.variables;
  j["enclosing_function"] = request.enclosing_function;
  return j;
}

std::string provider_request_digest(const nlohmann::ordered_json& request) {
  return fnv1a64_hex(request.dump());
}

// ---------------------------------------------------------------------------
// MockProvider

MockProvider MockProvider::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProviderError("cannot open mock fixture: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ProviderError("malformed mock fixture " + path + ": " + e.what());
  }
  return from_json(j);
}

MockProvider MockProvider::from_json(const nlohmann::json& fixture) {
  if (!fixture.is_object()) throw ProviderError("mock fixture must be a JSON object");
  MockProvider mock;
  for (auto it = fixture.begin(); it != fixture.end(); ++it) {
    mock.responses_[it.key()] = it.value();
  }
  return mock;
}

const nlohmann::json& MockProvider::lookup(const nlohmann::ordered_json& request) const {
  std::string digest = provider_request_digest(request);
  auto it = responses_.find(digest);
  if (it == responses_.end()) {
    throw ProviderError("no scripted response for digest " + digest + " (mode " +
                        request.at("mode").get<std::string>() + ")");
  }
  return it->second;
}

std::vector<std::string> MockProvider::generate(const std::string& task_description,
                                                const std::string& student_source,
                                                const TestCase& failed_test, int n) {
  ++generate_calls_;
  const auto& resp = lookup(make_generate_request(task_description, student_source, failed_test, n));
  std::vector<std::string> out = resp.at("candidates").get<std::vector<std::string>>();
  if (static_cast<int>(out.size()) != n) {
    throw ProviderError("scripted generator returned " + std::to_string(out.size()) +
                        " candidates, expected " + std::to_string(n));
  }
  return out;
}

bool MockProvider::predict_pass(const std::string& candidate_source, const TestCase& failed_test) {
  ++classify_calls_;
  return lookup(make_classify_request(candidate_source, failed_test)).at("pass").get<bool>();
}

std::string MockProvider::explain(const ExplainRequest& request) {
  ++explain_calls_;
  return lookup(make_explain_request(request)).at("text").get<std::string>();
}

// ---------------------------------------------------------------------------
// ExecutionClassifier

bool ExecutionClassifier::predict_pass(const std::string& candidate_source,
                                       const TestCase& failed_test) {
  try {
    Program p = parse(candidate_source);
    return run_test(p, failed_test, step_limit_).status == TestStatus::Pass;
  } catch (const std::exception&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// HttpProvider

namespace {

// splits "http://host:port/path" into (scheme://host:port, /path)
std::pair<std::string, std::string> split_url(const std::string& url) {
  std::size_t scheme = url.find("://");
  std::size_t path_start = scheme == std::string::npos ? url.find('/')
                                                       : url.find('/', scheme + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

}  // namespace

nlohmann::json HttpProvider::post(const nlohmann::ordered_json& request) {
  auto [base, path] = split_url(url_);
  httplib::Client client(base);
  client.set_read_timeout(60, 0);
  httplib::Headers headers;
  if (!token_.empty()) headers.emplace("Authorization", "Bearer " + token_);
  auto res = client.Post(path, headers, request.dump(), "application/json");
  if (!res) throw ProviderError("provider request to " + url_ + " failed to connect");
  if (res->status != 200) {
    throw ProviderError("provider request to " + url_ + " returned status " +
                        std::to_string(res->status));
  }
  try {
    return nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::parse_error& e) {
    throw ProviderError(std::string("provider returned malformed JSON: ") + e.what());
  }
}

std::vector<std::string> HttpProvider::generate(const std::string& task_description,
                                                const std::string& student_source,
                                                const TestCase& failed_test, int n) {
  auto resp = post(make_generate_request(task_description, student_source, failed_test, n));
  auto out = resp.at("candidates").get<std::vector<std::string>>();
  if (static_cast<int>(out.size()) != n) {
    throw ProviderError("provider returned " + std::to_string(out.size()) +
                        " candidates, expected " + std::to_string(n));
  }
  return out;
}

bool HttpProvider::predict_pass(const std::string& candidate_source, const TestCase& failed_test) {
  return post(make_classify_request(candidate_source, failed_test)).at("pass").get<bool>();
}

std::string HttpProvider::explain(const ExplainRequest& request) {
  return post(make_explain_request(request)).at("text").get<std::string>();
}

// ---------------------------------------------------------------------------
// HttpEmbedder

Embedding HttpEmbedder::embed(const std::string& text) {
  auto [base, path] = split_url(url_);
  httplib::Client client(base);
  client.set_read_timeout(60, 0);
  httplib::Headers headers;
  if (!token_.empty()) headers.emplace("Authorization", "Bearer " + token_);
  nlohmann::ordered_json req;
  req["texts"] = std::vector<std::string>{text};
  auto res = client.Post(path, headers, req.dump(), "application/json");
  if (!res || res->status != 200) {
    throw ProviderError("embedding request to " + url_ + " failed");
  }
  nlohmann::json j = nlohmann::json::parse(res->body);
  auto vectors = j.at("vectors").get<std::vector<std::vector<double>>>();
  if (vectors.size() != 1) throw ProviderError("embedding provider returned wrong batch size");
  Embedding e;
  e.values = std::move(vectors[0]);
  double n = e.norm();
  if (n == 0.0 || !std::isfinite(n)) throw ProviderError("embedding provider returned a zero vector");
  for (double& v : e.values) v /= n;
  return e;
}

}  // namespace bpa
