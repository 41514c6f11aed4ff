#pragma once

#include <utility>
#include <vector>

#include "bpa/dependence.hpp"

namespace bpa {

/// Precision/recall/F1 with their defining counts. Degenerate denominators:
/// an empty prediction against an empty gold set scores 1.0; an empty
/// prediction against a non-empty gold set scores 0.0 (and symmetrically for
/// recall). F1 is 0 when P + R = 0.
struct Metrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  long long tp = 0;
  long long fp = 0;
  long long fn = 0;
};

Metrics metrics_from_counts(long long tp, long long fp, long long fn);

/// tp = |predicted ∩ gold|, fp = |predicted \ gold|, fn = |gold \ predicted|.
Metrics set_metrics(const LineSet& predicted, const LineSet& gold);

/// Positive class is "predicted pass": rows are (predicted_pass, actual_pass).
Metrics classifier_metrics(const std::vector<std::pair<bool, bool>>& rows);

/// Round a non-negative rational num/den to 2 decimals, half away from zero,
/// in integer arithmetic (no double rounding artifacts).
double round2_ratio(long long num, long long den);

/// The metric values rounded to 2 decimals, computed from the integer counts.
struct RoundedMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};
RoundedMetrics rounded(const Metrics& m);

}  // namespace bpa
