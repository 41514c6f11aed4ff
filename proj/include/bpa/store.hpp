#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bpa/embedding.hpp"

namespace bpa {

struct RetrievalConfig {
  double similarity_threshold = 0.8;  // a hit needs cosine >= threshold
  int dimension = kDefaultEmbeddingDim;
  std::string embedder = "default";   // "default" (hashing) or "http"
};

struct StoreEntry {
  std::string entry_id;
  std::string task_id;
  std::string source_text;  // canonical program text
  Embedding embedding;
  std::set<std::string> passing_test_ids;
  bool validated = false;  // true iff passing_test_ids came from actual execution
};

struct StoreError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DuplicateId : StoreError {
  explicit DuplicateId(const std::string& id) : StoreError("duplicate entry id '" + id + "'") {}
};

struct CorruptStore : StoreError {
  int line;
  CorruptStore(int line_, const std::string& message)
      : StoreError("corrupt store at line " + std::to_string(line_) + ": " + message),
        line(line_) {}
};

enum class StoreLoadMode { CreateIfMissing, Strict };

/// The retrieval database: validated solutions keyed by task with their
/// passing tests, searched by cosine similarity. Queries are concurrency-safe
/// against each other; writes go through a single-writer mutex.
class Store {
 public:
  Store() = default;
  explicit Store(int dimension) : dimension_(dimension) {}

  // moves transfer the data, not the writer mutex; the source must be idle
  Store(Store&& other) noexcept
      : entries_(std::move(other.entries_)),
        by_id_(std::move(other.by_id_)),
        dimension_(other.dimension_) {}
  Store& operator=(Store&& other) noexcept {
    entries_ = std::move(other.entries_);
    by_id_ = std::move(other.by_id_);
    dimension_ = other.dimension_;
    return *this;
  }
  Store(const Store&) = delete;
  Store& operator=(const Store&) = delete;

  /// Entry must be normalized (|norm - 1| <= 1e-9), dimension-consistent, and
  /// carry a fresh id.
  void put(StoreEntry entry);

  bool contains(const std::string& entry_id) const;

  /// Maximum-cosine entry among validated entries of `task_id` that pass
  /// `failed_test_id`, provided its similarity clears the threshold. Ties
  /// break toward the lexicographically smallest entry id.
  std::optional<StoreEntry> query(const std::string& task_id, const std::string& failed_test_id,
                                  const Embedding& q, const RetrievalConfig& cfg) const;

  const std::vector<StoreEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  int dimension() const { return dimension_; }

  /// Newline-delimited JSON records; saving then loading then saving again is
  /// byte-identical.
  static Store load(const std::string& path, StoreLoadMode mode);
  void save(const std::string& path) const;

  std::string to_jsonl() const;
  static Store from_jsonl(const std::string& text);

 private:
  std::vector<StoreEntry> entries_;
  std::map<std::string, std::size_t> by_id_;
  int dimension_ = 0;  // 0 = unset, adopted from the first entry
  mutable std::mutex write_mutex_;
};

}  // namespace bpa
