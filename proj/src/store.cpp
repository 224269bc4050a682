#include "kgevo/store.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <set>

#include <json.hpp>

#include "kgevo/hash.hpp"
#include "kgevo/io.hpp"

namespace kgevo {

namespace {

using nlohmann::json;

// Advisory lock held for the duration of a commit.
class StoreLock {
public:
  explicit StoreLock(const std::filesystem::path& dir) {
    fd_ = ::open((dir / ".lock").c_str(), O_CREAT | O_RDWR, 0644);
    if (fd_ < 0) fail(Errc::io_failure, "cannot create lock file in " + dir.string());
    if (::flock(fd_, LOCK_EX) != 0) {
      ::close(fd_);
      fail(Errc::io_failure, "cannot lock store " + dir.string());
    }
  }
  ~StoreLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  StoreLock(const StoreLock&) = delete;
  StoreLock& operator=(const StoreLock&) = delete;

private:
  int fd_;
};

std::vector<Triple> parse_object_lines(const std::vector<std::string>& lines,
                                       const std::string& what) {
  std::string text;
  for (const std::string& l : lines) {
    text += l;
    text += '\n';
  }
  ParseResult r = parse_ntriples(text, /*strict=*/true);
  if (!r.errors.empty())
    fail(Errc::corrupt_chain, what + " holds a malformed line: " + r.errors.front().message);
  return std::move(r.triples);
}

}  // namespace

Snapshot Snapshot::from_triples(std::vector<Triple> triples, SnapshotMeta meta,
                                std::shared_ptr<Dictionary> dict) {
  Snapshot s;
  s.dict = dict ? std::move(dict) : std::make_shared<Dictionary>();
  s.meta = std::move(meta);
  s.triples.reserve(triples.size());
  for (const Triple& t : triples) s.triples.push_back(encode(*s.dict, t));
  std::sort(s.triples.begin(), s.triples.end());
  s.triples.erase(std::unique(s.triples.begin(), s.triples.end()), s.triples.end());
  return s;
}

std::vector<Triple> Snapshot::to_triples() const {
  std::vector<Triple> out;
  out.reserve(triples.size());
  for (const EncodedTriple& e : triples) out.push_back(decode(*dict, e));
  return out;
}

std::vector<std::string> Snapshot::lines() const { return canonical_lines(to_triples()); }

ChangeSet diff_lines(const std::vector<std::string>& old_lines,
                     const std::vector<std::string>& new_lines) {
  std::vector<std::string> added_lines, deleted_lines;
  std::set_difference(new_lines.begin(), new_lines.end(), old_lines.begin(), old_lines.end(),
                      std::back_inserter(added_lines));
  std::set_difference(old_lines.begin(), old_lines.end(), new_lines.begin(), new_lines.end(),
                      std::back_inserter(deleted_lines));
  ChangeSet cs;
  cs.added = parse_object_lines(added_lines, "changeset");
  cs.deleted = parse_object_lines(deleted_lines, "changeset");
  return cs;
}

VersionStore::VersionStore(std::filesystem::path dir, StorePolicy policy)
    : dir_(std::move(dir)), policy_(policy), dict_(std::make_shared<Dictionary>()) {}

VersionStore VersionStore::open(const std::filesystem::path& dir, StorePolicy policy) {
  VersionStore store(dir, policy);
  std::error_code ec;
  std::filesystem::create_directories(dir / "objects", ec);
  if (ec) fail(Errc::io_failure, "cannot create store directory " + dir.string());

  auto manifest_path = dir / "manifest.json";
  if (std::filesystem::exists(manifest_path)) {
    json manifest;
    try {
      manifest = json::parse(read_file(manifest_path));
    } catch (const json::exception& e) {
      fail(Errc::io_failure, "unreadable manifest in " + dir.string() + ": " + e.what());
    }
    for (const json& rec : manifest) {
      VersionRecord r;
      r.id = rec.at("id").get<std::string>();
      r.meta.timestamp = rec.at("timestamp").get<std::string>();
      r.meta.label = rec.at("label").get<std::string>();
      if (rec.contains("source")) r.meta.source = rec["source"].get<std::string>();
      std::string kind = rec.at("kind").get<std::string>();
      if (kind == "full") {
        r.storage = StorageKind::full;
      } else if (kind == "delta") {
        r.storage = StorageKind::delta;
        r.base = rec.at("base").get<std::string>();
      } else {
        fail(Errc::io_failure, "manifest record with unknown kind '" + kind + "'");
      }
      store.records_.push_back(std::move(r));
    }
  }
  return store;
}

void VersionStore::save_manifest() const {
  json manifest = json::array();
  for (const VersionRecord& r : records_) {
    json rec{{"id", r.id},
             {"timestamp", r.meta.timestamp},
             {"label", r.meta.label},
             {"kind", r.storage == StorageKind::full ? "full" : "delta"}};
    if (r.storage == StorageKind::delta) rec["base"] = r.base;
    if (!r.meta.source.empty()) rec["source"] = r.meta.source;
    manifest.push_back(std::move(rec));
  }
  write_file(dir_ / "manifest.json", manifest.dump(2) + "\n");
}

std::string VersionStore::commit(const std::vector<Triple>& triples, const SnapshotMeta& meta) {
  if (meta.label.empty()) fail(Errc::invalid_input, "snapshot label must be non-empty");
  std::int64_t ts = parse_iso8601_utc(meta.timestamp);
  if (!records_.empty() && ts < parse_iso8601_utc(records_.back().meta.timestamp))
    fail(Errc::non_monotone_timestamp,
         meta.timestamp + " precedes head version " + records_.back().meta.timestamp);

  StoreLock lock(dir_);

  std::vector<std::string> lines = canonical_lines(triples);
  std::string bytes;
  for (const std::string& l : lines) {
    bytes += l;
    bytes += '\n';
  }
  std::string id = trusty_code(bytes);

  VersionRecord rec;
  rec.id = id;
  rec.meta = meta;
  rec.storage = StorageKind::full;

  if (!records_.empty()) {
    // Length of the chain the head sits on, counting its base snapshot.
    std::size_t chain_len = 0;
    for (auto it = records_.rbegin(); it != records_.rend(); ++it) {
      ++chain_len;
      if (it->storage == StorageKind::full) break;
    }
    if (chain_len < policy_.max_chain_length) {
      const VersionRecord& head = records_.back();
      std::vector<std::string> head_lines = materialize_lines(head.id);
      std::vector<std::string> added, deleted;
      std::set_difference(lines.begin(), lines.end(), head_lines.begin(), head_lines.end(),
                          std::back_inserter(added));
      std::set_difference(head_lines.begin(), head_lines.end(), lines.begin(), lines.end(),
                          std::back_inserter(deleted));
      double delta_size = static_cast<double>(added.size() + deleted.size());
      if (delta_size <= policy_.max_delta_ratio * static_cast<double>(lines.size())) {
        rec.storage = StorageKind::delta;
        rec.base = head.id;
        json delta{{"added", added}, {"deleted", deleted}};
        write_file(dir_ / "objects" / (id + ".delta.json"), delta.dump(2) + "\n");
      }
    }
  }
  if (rec.storage == StorageKind::full) {
    write_file(dir_ / "objects" / (id + ".nt"), bytes);
  }

  records_.push_back(std::move(rec));
  save_manifest();
  return id;
}

const VersionRecord& VersionStore::find(const std::string& id) const {
  for (const VersionRecord& r : records_) {
    if (r.id == id) return r;
  }
  fail(Errc::unknown_version, id);
}

std::vector<std::string> VersionStore::materialize_lines(const std::string& id) const {
  // Walk back to the base snapshot, then replay deltas forward.
  std::vector<const VersionRecord*> chain;
  const VersionRecord* cur = &find(id);
  while (true) {
    chain.push_back(cur);
    if (cur->storage == StorageKind::full) break;
    if (chain.size() > records_.size())
      fail(Errc::corrupt_chain, "delta chain of " + id + " does not terminate");
    cur = &find(cur->base);
  }
  std::reverse(chain.begin(), chain.end());

  auto full_path = dir_ / "objects" / (chain.front()->id + ".nt");
  std::string text = read_file(full_path);
  std::set<std::string> state;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    if (eol > pos) state.insert(text.substr(pos, eol - pos));
    pos = eol + 1;
  }

  for (std::size_t i = 1; i < chain.size(); ++i) {
    json delta;
    try {
      delta = json::parse(read_file(dir_ / "objects" / (chain[i]->id + ".delta.json")));
    } catch (const json::exception& e) {
      fail(Errc::corrupt_chain, "unreadable delta for " + chain[i]->id + ": " + e.what());
    }
    for (const json& l : delta.at("deleted")) {
      auto it = state.find(l.get<std::string>());
      if (it == state.end())
        fail(Errc::corrupt_chain,
             "delta " + chain[i]->id + " deletes a triple absent from its base state");
      state.erase(it);
    }
    for (const json& l : delta.at("added")) {
      if (!state.insert(l.get<std::string>()).second)
        fail(Errc::corrupt_chain,
             "delta " + chain[i]->id + " adds a triple already present in its base state");
    }
  }
  return {state.begin(), state.end()};
}

Snapshot VersionStore::materialize(const std::string& id) const {
  const VersionRecord& rec = find(id);
  std::vector<Triple> triples = parse_object_lines(materialize_lines(id), "version " + id);
  return Snapshot::from_triples(std::move(triples), rec.meta, dict_);
}

ChangeSet VersionStore::changeset(const std::string& old_id, const std::string& new_id) const {
  find(old_id);
  find(new_id);
  return diff_lines(materialize_lines(old_id), materialize_lines(new_id));
}

bool VersionStore::verify(const std::string& id) const {
  find(id);  // UnknownVersion propagates; corruption below reports false
  try {
    std::vector<std::string> lines = materialize_lines(id);
    std::string bytes;
    for (const std::string& l : lines) {
      bytes += l;
      bytes += '\n';
    }
    return trusty_code(bytes) == id;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace kgevo
