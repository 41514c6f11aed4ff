#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "bpa/printer.hpp"
#include "bpa/store.hpp"
#include "support/reference.hpp"

using namespace bpa;

namespace {

// a valid alternative sum solution whose similarity to the student sits
// between 0.7 and 0.8 with the default embedder (value measured then pinned)
const char* kDistantSum =
    "fun sum(n) {\n"
    "  let acc = 0;\n"
    "  for (i in 1..n) {\n"
    "    acc = acc + i;\n"
    "  }\n"
    "  return acc;\n"
    "}\n";

Embedding unit_vector(int dim, int axis, double value = 1.0) {
  Embedding e;
  e.values.assign(static_cast<std::size_t>(dim), 0.0);
  e.values[static_cast<std::size_t>(axis)] = value;
  return e;
}

StoreEntry make_entry(std::string id, std::string task, Embedding emb,
                      std::set<std::string> passing, bool validated = true) {
  StoreEntry e;
  e.entry_id = std::move(id);
  e.task_id = std::move(task);
  e.source_text = "fun f() {\n  return 0;\n}\n";
  e.embedding = std::move(emb);
  e.passing_test_ids = std::move(passing);
  e.validated = validated;
  return e;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) {
    path = (std::filesystem::temp_directory_path() / name).string();
    std::remove(path.c_str());
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("embed: deterministic and self-similar") {
  Embedding a = embed_text(testref::kStudentSum);
  Embedding b = embed_text(testref::kStudentSum);
  CHECK(a.values == b.values);  // byte-identical
  CHECK(cosine(a, b) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(a.dimension() == kDefaultEmbeddingDim);
  CHECK(a.norm() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("embed: empty and token-free text is an error") {
  CHECK_THROWS_AS(embed_text(""), EmptyText);
  CHECK_THROWS_AS(embed_text("   // only a comment\n"), EmptyText);
}

TEST_CASE("embed: pinned reference cosines") {
  Embedding stu = embed_text(canonicalize(testref::kStudentSum));
  Embedding fix = embed_text(canonicalize(testref::kFixedSum));
  Embedding fac = embed_text(canonicalize(testref::kFactorial));
  double stu_fix = cosine(stu, fix);
  double stu_fac = cosine(stu, fac);
  CHECK(stu_fix == doctest::Approx(0.98572546180328713).epsilon(1e-9));
  CHECK(stu_fac == doctest::Approx(0.70009749970547308).epsilon(1e-9));
  CHECK(stu_fix > stu_fac);  // one-token fix stays closer than an unrelated program
}

TEST_CASE("cosine: identical, orthogonal, and opposite vectors") {
  Embedding e1 = unit_vector(8, 0);
  Embedding e2 = unit_vector(8, 3);
  Embedding neg = unit_vector(8, 0, -1.0);
  CHECK(cosine(e1, e1) == 1.0);
  CHECK(cosine(e1, e2) == 0.0);
  CHECK(cosine(e1, neg) == -1.0);
}

TEST_CASE("cosine: dimension mismatch") {
  CHECK_THROWS_AS(cosine(unit_vector(8, 0), unit_vector(16, 0)), DimensionMismatch);
}

TEST_CASE("store: put then query the same text hits with similarity 1") {
  Store store;
  Embedding emb = embed_text(canonicalize(testref::kFixedSum));
  store.put(make_entry("sum-1", "sum", emb, {"sum_3"}));
  RetrievalConfig cfg;
  auto hit = store.query("sum", "sum_3", emb, cfg);
  REQUIRE(hit.has_value());
  CHECK(hit->entry_id == "sum-1");
  CHECK(cosine(hit->embedding, emb) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("store: unnormalized embeddings are rejected") {
  Store store;
  Embedding bad;
  bad.values.assign(8, 0.5);  // norm sqrt(2)
  CHECK_THROWS_AS(store.put(make_entry("x", "t", bad, {})), StoreError);
}

TEST_CASE("store: duplicate ids are rejected") {
  Store store;
  store.put(make_entry("dup", "t", unit_vector(8, 0), {}));
  CHECK_THROWS_AS(store.put(make_entry("dup", "t", unit_vector(8, 1), {})), DuplicateId);
}

TEST_CASE("store: mixed dimensions are rejected") {
  Store store;
  store.put(make_entry("a", "t", unit_vector(8, 0), {}));
  CHECK_THROWS_AS(store.put(make_entry("b", "t", unit_vector(16, 0), {})), StoreError);
}

TEST_CASE("store: two entries for one task are both retrievable") {
  Store store;
  store.put(make_entry("a", "t", unit_vector(8, 0), {"t1"}));
  store.put(make_entry("b", "t", unit_vector(8, 1), {"t1"}));
  RetrievalConfig cfg;
  cfg.similarity_threshold = 0.5;
  CHECK(store.query("t", "t1", unit_vector(8, 0), cfg)->entry_id == "a");
  CHECK(store.query("t", "t1", unit_vector(8, 1), cfg)->entry_id == "b");
}

TEST_CASE("store: query filters by task, test, and validation") {
  Store store;
  Embedding q = unit_vector(8, 0);
  store.put(make_entry("wrong-task", "other", q, {"t1"}));
  store.put(make_entry("wrong-test", "t", q, {"t2"}));
  store.put(make_entry("unvalidated", "t", q, {"t1"}, false));
  RetrievalConfig cfg;
  CHECK(!store.query("t", "t1", q, cfg).has_value());
  store.put(make_entry("good", "t", q, {"t1", "t2"}));
  auto hit = store.query("t", "t1", q, cfg);
  REQUIRE(hit.has_value());
  CHECK(hit->entry_id == "good");
}

TEST_CASE("store: empty store misses") {
  Store store;
  CHECK(!store.query("t", "t1", unit_vector(8, 0), {}).has_value());
}

TEST_CASE("store: tie on similarity breaks to the smaller entry id") {
  Store store;
  Embedding q = unit_vector(8, 0);
  store.put(make_entry("zeta", "t", q, {"t1"}));
  store.put(make_entry("alpha", "t", q, {"t1"}));
  auto hit = store.query("t", "t1", q, {});
  REQUIRE(hit.has_value());
  CHECK(hit->entry_id == "alpha");
}

TEST_CASE("store: similarity exactly at the threshold is a hit") {
  // dot(q, e) is exactly 0.8 by construction: q = e0, e = 0.8*e0 + 0.6*e1
  Store store;
  Embedding e;
  e.values.assign(8, 0.0);
  e.values[0] = 0.8;
  e.values[1] = 0.6;
  store.put(make_entry("boundary", "t", e, {"t1"}));
  Embedding q = unit_vector(8, 0);
  RetrievalConfig cfg;
  cfg.similarity_threshold = 0.8;
  auto hit = store.query("t", "t1", q, cfg);
  REQUIRE(hit.has_value());
  CHECK(hit->entry_id == "boundary");
  CHECK(cosine(hit->embedding, q) == 0.8);

  cfg.similarity_threshold = std::nextafter(0.8, 1.0);  // a hair above -> miss
  CHECK(!store.query("t", "t1", q, cfg).has_value());
}

TEST_CASE("store: constructed sub-threshold pair misses at 0.8") {
  Store store;
  Embedding distant = embed_text(canonicalize(kDistantSum));
  store.put(make_entry("distant", "sum", distant, {"sum_3"}));
  Embedding q = embed_text(canonicalize(testref::kStudentSum));
  double measured = cosine(distant, q);
  CHECK(measured == doctest::Approx(0.72574346185427718).epsilon(1e-9));  // in (0.7, 0.8)
  RetrievalConfig cfg;
  cfg.similarity_threshold = 0.8;
  CHECK(!store.query("sum", "sum_3", q, cfg).has_value());
  // exactly at the measured similarity the same entry becomes a hit
  cfg.similarity_threshold = measured;
  REQUIRE(store.query("sum", "sum_3", q, cfg).has_value());
}

TEST_CASE("store: save/load round trip is byte-stable on re-save") {
  Store store;
  store.put(make_entry("a", "sum", embed_text(canonicalize(testref::kFixedSum)),
                       {"sum_0", "sum_3"}));
  store.put(make_entry("b", "fact", embed_text(canonicalize(testref::kFactorial)), {"fact_3"}));
  TempFile f1("bpa_store_rt1.jsonl"), f2("bpa_store_rt2.jsonl");
  store.save(f1.path);
  Store loaded = Store::load(f1.path, StoreLoadMode::Strict);
  loaded.save(f2.path);
  std::ifstream a(f1.path), b(f2.path);
  std::string text_a((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
  std::string text_b((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
  CHECK(text_a == text_b);
  CHECK(!text_a.empty());
  CHECK(loaded.size() == 2);
}

TEST_CASE("store: load modes for a missing file") {
  const char* missing = "/tmp/definitely_missing_store_bpa.jsonl";
  std::remove(missing);
  Store created = Store::load(missing, StoreLoadMode::CreateIfMissing);
  CHECK(created.size() == 0);
  CHECK_THROWS_AS(Store::load(missing, StoreLoadMode::Strict), StoreError);
}

TEST_CASE("store: truncated record reports the line") {
  TempFile f("bpa_store_corrupt.jsonl");
  {
    Store store;
    store.put(make_entry("a", "t", unit_vector(8, 0), {"t1"}));
    store.save(f.path);
    std::ofstream out(f.path, std::ios::app);
    out << "{\"entry_id\": \"trunc";  // chopped record
  }
  try {
    Store::load(f.path, StoreLoadMode::Strict);
    FAIL("expected CorruptStore");
  } catch (const CorruptStore& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("store: every query result satisfies the soundness conditions") {
  Store store;
  Embedding q = embed_text(canonicalize(testref::kStudentSum));
  store.put(make_entry("sum-close", "sum", embed_text(canonicalize(testref::kFixedSum)),
                       {"sum_3"}));
  store.put(make_entry("sum-far", "sum", embed_text(canonicalize(kDistantSum)), {"sum_3"}));
  store.put(make_entry("sum-unvalidated", "sum", q, {"sum_3"}, false));
  store.put(make_entry("fact", "fact", embed_text(canonicalize(testref::kFactorial)),
                       {"fact_1"}));
  RetrievalConfig cfg;
  for (const char* test_id : {"sum_3", "sum_0", "fact_1"}) {
    for (const char* task : {"sum", "fact"}) {
      auto hit = store.query(task, test_id, q, cfg);
      if (!hit) continue;
      CHECK(hit->task_id == task);
      CHECK(hit->passing_test_ids.count(test_id));
      CHECK(hit->validated);
      CHECK(cosine(hit->embedding, q) >= cfg.similarity_threshold);
    }
  }
}
