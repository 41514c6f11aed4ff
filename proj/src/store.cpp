#include "bpa/store.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bpa {

void Store::put(StoreEntry entry) {
  std::lock_guard<std::mutex> lock(write_mutex_);
  if (by_id_.count(entry.entry_id)) throw DuplicateId(entry.entry_id);
  if (std::abs(entry.embedding.norm() - 1.0) > 1e-9) {
    throw StoreError("entry '" + entry.entry_id + "' has an unnormalized embedding");
  }
  if (dimension_ == 0) {
    dimension_ = entry.embedding.dimension();
  } else if (entry.embedding.dimension() != dimension_) {
    throw StoreError("entry '" + entry.entry_id + "' dimension " +
                     std::to_string(entry.embedding.dimension()) + " does not match store " +
                     std::to_string(dimension_));
  }
  by_id_[entry.entry_id] = entries_.size();
  entries_.push_back(std::move(entry));
}

bool Store::contains(const std::string& entry_id) const { return by_id_.count(entry_id) > 0; }

std::optional<StoreEntry> Store::query(const std::string& task_id,
                                       const std::string& failed_test_id, const Embedding& q,
                                       const RetrievalConfig& cfg) const {
  const StoreEntry* best = nullptr;
  double best_sim = 0.0;
  for (const auto& entry : entries_) {
    if (!entry.validated) continue;
    if (entry.task_id != task_id) continue;
    if (!entry.passing_test_ids.count(failed_test_id)) continue;
    double sim = cosine(entry.embedding, q);
    if (!best || sim > best_sim ||
        (sim == best_sim && entry.entry_id < best->entry_id)) {
      best = &entry;
      best_sim = sim;
    }
  }
  if (!best || best_sim < cfg.similarity_threshold) return std::nullopt;
  return *best;
}

std::string Store::to_jsonl() const {
  std::string out;
  for (const auto& e : entries_) {
    nlohmann::ordered_json j;
    j["entry_id"] = e.entry_id;
    j["task_id"] = e.task_id;
    j["source_text"] = e.source_text;
    j["embedding"] = e.embedding.values;
    j["passing_test_ids"] = e.passing_test_ids;
    j["validated"] = e.validated;
    out += j.dump();
    out += '\n';
  }
  return out;
}

Store Store::from_jsonl(const std::string& text) {
  Store store;
  int line_no = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw CorruptStore(line_no, e.what());
    }
    try {
      StoreEntry e;
      e.entry_id = j.at("entry_id").get<std::string>();
      e.task_id = j.at("task_id").get<std::string>();
      e.source_text = j.at("source_text").get<std::string>();
      e.embedding.values = j.at("embedding").get<std::vector<double>>();
      for (const auto& id : j.at("passing_test_ids")) {
        e.passing_test_ids.insert(id.get<std::string>());
      }
      e.validated = j.at("validated").get<bool>();
      store.put(std::move(e));
    } catch (const nlohmann::json::exception& e) {
      throw CorruptStore(line_no, e.what());
    } catch (const StoreError& e) {
      throw CorruptStore(line_no, e.what());
    }
  }
  return store;
}

Store Store::load(const std::string& path, StoreLoadMode mode) {
  if (!std::filesystem::exists(path)) {
    if (mode == StoreLoadMode::CreateIfMissing) return Store{};
    throw StoreError("store file not found: " + path);
  }
  std::ifstream in(path);
  if (!in) throw StoreError("cannot open store file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_jsonl(buf.str());
}

void Store::save(const std::string& path) const {
  std::lock_guard<std::mutex> lock(write_mutex_);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw StoreError("cannot write store file: " + path);
  out << to_jsonl();
}

}  // namespace bpa
