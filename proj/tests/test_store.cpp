#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "helpers.hpp"
#include "kgevo/hash.hpp"
#include "kgevo/store.hpp"

using namespace kgevo;
using namespace kgevo::testing;
namespace fs = std::filesystem;

namespace {

struct TempStore {
  fs::path dir;
  TempStore() {
    dir = fs::temp_directory_path() /
          ("kgevo_store_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
  }
  ~TempStore() { fs::remove_all(dir); }
};

SnapshotMeta meta_at(int month, const std::string& label) {
  char ts[32];
  std::snprintf(ts, sizeof ts, "2020-%02d-01T00:00:00Z", month);
  return {ts, label, ""};
}

std::vector<std::string> lines_of(const std::vector<Triple>& triples) {
  return canonical_lines(triples);
}

}  // namespace

TEST_CASE("empty commit hashes the empty byte string") {
  TempStore tmp;
  VersionStore store = VersionStore::open(tmp.dir);
  std::string id = store.commit({}, meta_at(1, "empty"));
  // SHA-256("") base64url-encoded, computed with an independent tool.
  CHECK(id == "RA47DEQpj8HBSa-_TImW-5JCeuQeRkm5NMpJWZG3hSuFU");
  CHECK(valid_trusty_code(id));
  CHECK(id.size() == 45);
}

TEST_CASE("content addressing: identical sets and insertion orders agree") {
  TempStore tmp;
  VersionStore store = VersionStore::open(tmp.dir);
  std::vector<Triple> forward{triple("a", "p", "b"), triple("a", "p", "c"),
                              triple("b", "q", "c")};
  std::vector<Triple> reversed(forward.rbegin(), forward.rend());
  std::string v1 = store.commit(forward, meta_at(1, "v1"));
  std::string v2 = store.commit(reversed, meta_at(2, "v2"));
  CHECK(v1 == v2);
}

TEST_CASE("materialize returns the committed set exactly") {
  TempStore tmp;
  VersionStore store = VersionStore::open(tmp.dir);
  std::mt19937 rng(5);
  std::vector<Triple> triples = random_triples(rng, 300);
  std::string id = store.commit(triples, meta_at(1, "v1"));
  CHECK(lines_of(store.materialize(id).to_triples()) == lines_of(triples));
}

TEST_CASE("single addition materializes through the delta") {
  TempStore tmp;
  VersionStore store = VersionStore::open(tmp.dir);
  std::vector<Triple> s1{triple("a", "p", "b")};
  std::vector<Triple> s2 = s1;
  s2.push_back(triple("a", "p", "c"));
  store.commit(s1, meta_at(1, "v1"));
  std::string v2 = store.commit(s2, meta_at(2, "v2"));
  CHECK(store.log().back().storage == StorageKind::delta);
  CHECK(lines_of(store.materialize(v2).to_triples()) == lines_of(s2));
}

TEST_CASE("random perturbation materializes to the set-algebra result") {
  TempStore tmp;
  VersionStore store = VersionStore::open(tmp.dir);
  std::mt19937 rng(17);
  std::vector<Triple> s1 = random_triples(rng, 500, 120, 10, 150);

  // independent set algebra: drop 50, add 50 fresh
  std::vector<Triple> s2(s1.begin() + 50, s1.end());
  for (int i = 0; i < 50; ++i) s2.push_back(triple("fresh", "p", "x" + std::to_string(i)));
  sort_unique(s2);

  store.commit(s1, meta_at(1, "v1"));
  std::string v2 = store.commit(s2, meta_at(2, "v2"));
  CHECK(lines_of(store.materialize(v2).to_triples()) == lines_of(s2));
}

TEST_CASE("chain policy: the 11th commit starts a new full snapshot") {
  TempStore tmp;
  VersionStore store = VersionStore::open(tmp.dir);
  std::vector<Triple> triples;
  for (int i = 1; i <= 11; ++i) {
    triples.push_back(triple("s", "p", "o" + std::to_string(i)));
    store.commit(triples, meta_at(i, "v" + std::to_string(i)));
  }
  const auto& records = store.log();
  REQUIRE(records.size() == 11);
  CHECK(records[0].storage == StorageKind::full);
  for (int i = 1; i <= 9; ++i) CHECK(records[i].storage == StorageKind::delta);
  CHECK(records[10].storage == StorageKind::full);
}

TEST_CASE("large deltas roll over to a full snapshot") {
  TempStore tmp;
  VersionStore store = VersionStore::open(tmp.dir);
  std::mt19937 rng(23);
  std::vector<Triple> s1 = random_triples(rng, 100, 30, 5, 40);
  store.commit(s1, meta_at(1, "v1"));
  std::vector<Triple> mostly_new;
  for (int i = 0; i < 100; ++i) mostly_new.push_back(triple("new", "p", "o" + std::to_string(i)));
  store.commit(mostly_new, meta_at(2, "v2"));
  CHECK(store.log().back().storage == StorageKind::full);
}

TEST_CASE("changeset: self-diff, direction, antisymmetry") {
  TempStore tmp;
  VersionStore store = VersionStore::open(tmp.dir);
  std::string v1 = store.commit({triple("x", "p", "a")}, meta_at(1, "v1"));
  std::string v2 = store.commit({triple("x", "p", "b")}, meta_at(2, "v2"));

  ChangeSet self = store.changeset(v1, v1);
  CHECK(self.added.empty());
  CHECK(self.deleted.empty());

  ChangeSet cs = store.changeset(v1, v2);
  CHECK(lines_of(cs.added) == std::vector<std::string>{triple("x", "p", "b").canonical()});
  CHECK(lines_of(cs.deleted) == std::vector<std::string>{triple("x", "p", "a").canonical()});

  ChangeSet swapped = store.changeset(v2, v1);
  CHECK(lines_of(swapped.added) == lines_of(cs.deleted));
  CHECK(lines_of(swapped.deleted) == lines_of(cs.added));
}

TEST_CASE("applying a changeset maps one materialization onto the other") {
  TempStore tmp;
  VersionStore store = VersionStore::open(tmp.dir);
  std::mt19937 rng(29);
  std::vector<std::string> ids;
  for (int v = 0; v < 6; ++v)
    ids.push_back(store.commit(random_triples(rng, 120), meta_at(v + 1, "v")));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = 0; j < ids.size(); ++j) {
      ChangeSet cs = store.changeset(ids[i], ids[j]);
      std::vector<Triple> patched = store.materialize(ids[i]).to_triples();
      std::vector<std::string> deleted = lines_of(cs.deleted);
      std::erase_if(patched, [&](const Triple& t) {
        return std::binary_search(deleted.begin(), deleted.end(), t.canonical());
      });
      patched.insert(patched.end(), cs.added.begin(), cs.added.end());
      CHECK(lines_of(patched) == lines_of(store.materialize(ids[j]).to_triples()));
    }
  }
}

TEST_CASE("verify: fresh commits and full chains verify; tampering fails") {
  TempStore tmp;
  VersionStore store = VersionStore::open(tmp.dir);
  std::mt19937 rng(31);
  std::vector<Triple> triples = random_triples(rng, 40, 10, 4, 12);
  std::vector<std::string> ids;
  for (int i = 1; i <= 10; ++i) {
    triples.push_back(triple("s", "grow", "o" + std::to_string(i)));
    ids.push_back(store.commit(triples, meta_at(i, "v" + std::to_string(i))));
  }
  for (const std::string& id : ids) CHECK(store.verify(id));

  // flip one byte in the base snapshot object
  fs::path base_file = tmp.dir / "objects" / (ids.front() + ".nt");
  std::string bytes;
  {
    std::ifstream in(base_file, std::ios::binary);
    bytes.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  bytes[bytes.size() / 2] ^= 0x01;
  {
    std::ofstream out(base_file, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  }
  VersionStore reopened = VersionStore::open(tmp.dir);
  CHECK_FALSE(reopened.verify(ids.front()));
  CHECK_FALSE(reopened.verify(ids.back()));  // chain descendants see it too
}

TEST_CASE("log: empty store, order, metadata round-trip") {
  TempStore tmp;
  {
    VersionStore store = VersionStore::open(tmp.dir);
    CHECK(store.log().empty());
    SnapshotMeta meta = meta_at(1, "first snapshot");
    meta.source = "unit-test";
    store.commit({triple("a", "p", "b")}, meta);
    store.commit({triple("a", "p", "c")}, meta_at(2, "second"));
    store.commit({triple("a", "p", "d")}, meta_at(3, "third"));
  }
  VersionStore reopened = VersionStore::open(tmp.dir);
  REQUIRE(reopened.log().size() == 3);
  CHECK(reopened.log()[0].meta.label == "first snapshot");
  CHECK(reopened.log()[0].meta.source == "unit-test");
  CHECK(reopened.log()[1].meta.label == "second");
  CHECK(reopened.log()[2].meta.timestamp == "2020-03-01T00:00:00Z");
}

TEST_CASE("non-monotone timestamps are rejected") {
  TempStore tmp;
  VersionStore store = VersionStore::open(tmp.dir);
  store.commit({triple("a", "p", "b")}, meta_at(5, "v1"));
  CHECK_THROWS_AS(store.commit({triple("a", "p", "c")}, meta_at(4, "v2")), Error);
  try {
    store.commit({triple("a", "p", "c")}, meta_at(4, "v2"));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::non_monotone_timestamp);
  }
  // equal timestamps are allowed
  CHECK_NOTHROW(store.commit({triple("a", "p", "c")}, meta_at(5, "v2")));
}

TEST_CASE("unknown version") {
  TempStore tmp;
  VersionStore store = VersionStore::open(tmp.dir);
  CHECK_THROWS_AS(store.materialize("RA0000000000000000000000000000000000000000000"), Error);
  CHECK_THROWS_AS(store.verify("RA0000000000000000000000000000000000000000000"), Error);
}

TEST_CASE("trusty codes") {
  CHECK(trusty_code("") == "RA47DEQpj8HBSa-_TImW-5JCeuQeRkm5NMpJWZG3hSuFU");
  CHECK(trusty_code("abc") == "RAungWv48Bz-pBQUDeXa4iI7ADYaOWF3qctBD_YfIAFa0");
  CHECK(valid_trusty_code("RA47DEQpj8HBSa-_TImW-5JCeuQeRkm5NMpJWZG3hSuFU"));
  CHECK_FALSE(valid_trusty_code("RAtooShort"));
  CHECK_FALSE(valid_trusty_code("XX47DEQpj8HBSa-_TImW-5JCeuQeRkm5NMpJWZG3hSuFU"));
}
