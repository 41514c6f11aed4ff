#include "bpa/metrics.hpp"

#include <algorithm>

namespace bpa {

Metrics metrics_from_counts(long long tp, long long fp, long long fn) {
  Metrics m;
  m.tp = tp;
  m.fp = fp;
  m.fn = fn;
  if (tp + fp == 0) {
    m.precision = (tp + fn == 0) ? 1.0 : 0.0;
  } else {
    m.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
  }
  if (tp + fn == 0) {
    m.recall = (tp + fp == 0) ? 1.0 : 0.0;
  } else {
    m.recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
  }
  double pr = m.precision + m.recall;
  m.f1 = pr == 0.0 ? 0.0 : 2.0 * m.precision * m.recall / pr;
  return m;
}

Metrics set_metrics(const LineSet& predicted, const LineSet& gold) {
  long long tp = 0, fp = 0, fn = 0;
  for (int line : predicted) {
    if (gold.count(line)) {
      ++tp;
    } else {
      ++fp;
    }
  }
  for (int line : gold) {
    if (!predicted.count(line)) ++fn;
  }
  return metrics_from_counts(tp, fp, fn);
}

Metrics classifier_metrics(const std::vector<std::pair<bool, bool>>& rows) {
  long long tp = 0, fp = 0, fn = 0;
  for (const auto& [predicted, actual] : rows) {
    if (predicted && actual) ++tp;
    if (predicted && !actual) ++fp;
    if (!predicted && actual) ++fn;
  }
  return metrics_from_counts(tp, fp, fn);
}

double round2_ratio(long long num, long long den) {
  if (den == 0) return 0.0;
  // floor((100*num/den) + 1/2) without leaving the integers
  long long hundred = 200 * num + den;
  long long units = hundred / (2 * den);
  return static_cast<double>(units) / 100.0;
}

RoundedMetrics rounded(const Metrics& m) {
  RoundedMetrics r;
  r.precision = (m.tp + m.fp == 0) ? (m.tp + m.fn == 0 ? 1.0 : 0.0)
                                   : round2_ratio(m.tp, m.tp + m.fp);
  r.recall = (m.tp + m.fn == 0) ? (m.tp + m.fp == 0 ? 1.0 : 0.0)
                                : round2_ratio(m.tp, m.tp + m.fn);
  // F1 = 2tp / (2tp + fp + fn) exactly, so the rounding can stay integral
  long long denom = 2 * m.tp + m.fp + m.fn;
  r.f1 = denom == 0 ? 1.0 : round2_ratio(2 * m.tp, denom);
  return r;
}

}  // namespace bpa
