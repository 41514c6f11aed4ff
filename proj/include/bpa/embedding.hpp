#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bpa {

inline constexpr int kDefaultEmbeddingDim = 256;

/// L2-normalized fixed-dimension vector.
struct Embedding {
  std::vector<double> values;

  int dimension() const { return static_cast<int>(values.size()); }
  double norm() const;
};

struct EmptyText : std::runtime_error {
  EmptyText() : std::runtime_error("cannot embed text with zero tokens") {}
};

struct DimensionMismatch : std::runtime_error {
  DimensionMismatch(int a, int b)
      : std::runtime_error("embedding dimensions differ: " + std::to_string(a) + " vs " +
                           std::to_string(b)) {}
};

/// Deterministic hashing embedder: unigrams and bigrams of the token stream,
/// feature-hashed into `dimension` buckets with a fixed 64-bit seed,
/// term-frequency weighted, then L2-normalized. Byte-stable across runs and
/// platforms.
Embedding embed_text(const std::string& text, int dimension = kDefaultEmbeddingDim);

/// Dot product of two normalized vectors, in [-1, 1].
double cosine(const Embedding& a, const Embedding& b);

/// Provider seam: the default is the hashing embedder above; an HTTP-backed
/// implementation lives in providers.hpp.
class Embedder {
 public:
  virtual ~Embedder() = default;
  virtual Embedding embed(const std::string& text) = 0;
};

class HashingEmbedder final : public Embedder {
 public:
  explicit HashingEmbedder(int dimension = kDefaultEmbeddingDim) : dimension_(dimension) {}
  Embedding embed(const std::string& text) override { return embed_text(text, dimension_); }

 private:
  int dimension_;
};

}  // namespace bpa
