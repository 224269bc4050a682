#pragma once

#include <map>
#include <optional>
#include <set>

#include "kgevo/store.hpp"

namespace kgevo {

struct PropertyChangeRecord {
  std::string property;
  std::uint64_t added_count = 0;
  std::uint64_t removed_count = 0;
  std::uint64_t edited_count = 0;        // added + removed
  std::uint64_t occurrence_old = 0;      // frequency in the older snapshot
  std::optional<double> ratio;           // edited / occurrence_old; nullopt = new property
};

struct PropertyRanking {
  std::vector<PropertyChangeRecord> records;  // sorted by edited_count desc, then IRI
  /// Properties changed exactly k times, for k = 1..20.
  std::map<std::uint64_t, std::uint64_t> low_frequency_histogram;
};

/// Property change frequencies over a changeset, irrespective of subjects
/// and objects. `top_k` truncates the record list, not the histogram.
PropertyRanking rank_properties(const ChangeSet& cs, std::size_t top_k);

/// Fill occurrence_old and the relative change rate from the older snapshot.
void relative_rates(PropertyRanking& ranking, const Snapshot& old_snapshot);

struct TypeMigration {
  std::string property;
  std::string from_class;
  std::string to_class;
  std::uint64_t object_count = 0;
};

struct TypeMigrationConfig {
  std::string type_predicate = iri::rdf_type;
  std::optional<std::set<std::string>> property_filter;
  std::uint64_t min_count = 1;
};

/// Objects that keep a property edge across versions but change rdf:type:
/// each (property, lost class, gained class) pair counts the object once.
std::vector<TypeMigration> type_migrations(const Snapshot& old_snapshot,
                                           const Snapshot& new_snapshot,
                                           const TypeMigrationConfig& cfg = {});

}  // namespace kgevo
