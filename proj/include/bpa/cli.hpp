#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bpa {

/// Exit codes: 0 success, 1 error, 2 empty diff (advise), 3 failed
/// --assert-min-f1 gate. Errors print one line to `err` with a stable prefix
/// (E-PARSE, E-TEST, E-REPAIR, E-STORE, E-EVAL).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Layered configuration: defaults, then BPA_* environment variables, then
/// --config JSON, then flags.
struct CliConfig {
  std::string store_path;
  std::string corpus_path;
  std::string provider_url;    // BPA_PROVIDER_URL
  std::string provider_token;  // BPA_PROVIDER_TOKEN
  std::string embedder_url;    // BPA_EMBEDDER_URL
  std::string format = "json";  // json | pretty | annotated
  int max_breakpoints = 10;
  bool h1_include_exit = true;
  int n_candidates = 5;
  double similarity_threshold = 0.8;
  int dimension = 256;
  bool fallback_execute = false;
  long long step_limit = 100000;
};

}  // namespace bpa
