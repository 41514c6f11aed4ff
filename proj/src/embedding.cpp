#include "bpa/embedding.hpp"

#include <cmath>

#include "bpa/hash.hpp"
#include "bpa/token.hpp"

namespace bpa {

double Embedding::norm() const {
  double sum = 0.0;
  for (double v : values) sum += v * v;
  return std::sqrt(sum);
}

Embedding embed_text(const std::string& text, int dimension) {
  std::vector<Token> tokens = tokenize(text);
  if (tokens.empty()) throw EmptyText();

  std::vector<double> counts(static_cast<std::size_t>(dimension), 0.0);
  auto bump = [&](const std::string& feature) {
    std::uint64_t bucket = fnv1a64(feature) % static_cast<std::uint64_t>(dimension);
    counts[static_cast<std::size_t>(bucket)] += 1.0;
  };
  for (const auto& t : tokens) bump("u:" + t.lexeme);
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    bump("b:" + tokens[i].lexeme + "\x1e" + tokens[i + 1].lexeme);
  }

  double norm_sq = 0.0;
  for (double c : counts) norm_sq += c * c;  // fixed index order keeps this byte-stable
  double norm = std::sqrt(norm_sq);
  Embedding e;
  e.values.resize(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) e.values[i] = counts[i] / norm;
  return e;
}

double cosine(const Embedding& a, const Embedding& b) {
  if (a.dimension() != b.dimension()) throw DimensionMismatch(a.dimension(), b.dimension());
  double dot = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) dot += a.values[i] * b.values[i];
  return dot;
}

}  // namespace bpa
