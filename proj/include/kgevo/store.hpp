#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "kgevo/rdf.hpp"

namespace kgevo {

struct SnapshotMeta {
  std::string timestamp;  // ISO-8601 UTC instant
  std::string label;
  std::string source;  // optional provenance note
};

/// Dictionary-encoded triple set at one timestep.
struct Snapshot {
  std::shared_ptr<Dictionary> dict;
  std::vector<EncodedTriple> triples;  // duplicate-free, sorted by id tuple
  SnapshotMeta meta;

  static Snapshot from_triples(std::vector<Triple> triples, SnapshotMeta meta = {},
                               std::shared_ptr<Dictionary> dict = nullptr);

  std::vector<Triple> to_triples() const;
  std::vector<std::string> lines() const;  // sorted canonical N-Triples lines
  std::size_t size() const { return triples.size(); }
};

/// Additions and deletions between two snapshots. Both sides are sorted,
/// duplicate-free, and disjoint; the update set U is their union.
struct ChangeSet {
  std::vector<Triple> added;
  std::vector<Triple> deleted;

  bool empty() const { return added.empty() && deleted.empty(); }
};

ChangeSet diff_lines(const std::vector<std::string>& old_lines,
                     const std::vector<std::string>& new_lines);

enum class StorageKind { full, delta };

struct VersionRecord {
  std::string id;  // RA + 43 base64url chars of the content hash
  SnapshotMeta meta;
  StorageKind storage = StorageKind::full;
  std::string base;  // delta records only
};

struct StorePolicy {
  std::size_t max_chain_length = 10;  // records per chain including the base snapshot
  double max_delta_ratio = 0.5;       // delta triples / materialized triples
};

/// Versioned triple store: full materializations followed by delta chains,
/// content-hash identifiers, on-disk layout `manifest.json` + `objects/`.
class VersionStore {
public:
  static VersionStore open(const std::filesystem::path& dir, StorePolicy policy = {});

  /// Persist a snapshot; returns its content-derived version id.
  std::string commit(const std::vector<Triple>& triples, const SnapshotMeta& meta);

  /// Reconstruct the full triple set of a version by replaying its chain.
  Snapshot materialize(const std::string& id) const;

  /// added = S_new \ S_old, deleted = S_old \ S_new.
  ChangeSet changeset(const std::string& old_id, const std::string& new_id) const;

  /// True iff the stored content still reproduces the version id.
  bool verify(const std::string& id) const;

  const std::vector<VersionRecord>& log() const { return records_; }

  const std::filesystem::path& dir() const { return dir_; }

private:
  VersionStore(std::filesystem::path dir, StorePolicy policy);

  const VersionRecord& find(const std::string& id) const;
  std::vector<std::string> materialize_lines(const std::string& id) const;
  void save_manifest() const;

  std::filesystem::path dir_;
  StorePolicy policy_;
  std::vector<VersionRecord> records_;
  std::shared_ptr<Dictionary> dict_;
};

}  // namespace kgevo
