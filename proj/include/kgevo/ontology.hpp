#pragma once

#include <optional>
#include <set>

#include "kgevo/store.hpp"

namespace kgevo {

/// One recorded update to an ontology: when it happened and which terms
/// (subjects, predicates, resource objects of the changeset) it touched.
struct OntologyChange {
  std::string ontology;
  std::string timestamp;
  std::int64_t epoch_seconds = 0;
  std::set<std::string> touched_terms;
};

OntologyChange make_change(std::string ontology, std::string timestamp, const ChangeSet& cs);

/// Latest dct:modified literal in the snapshot, if any; in-data modification
/// times take precedence over store metadata when building change histories.
std::optional<std::string> dct_modified_of(const Snapshot& snapshot);

struct SyncResult {
  double es_seconds = 0.0;
  double threshold_seconds = 0.0;
  bool synchronized = false;
  std::set<std::string> aligned_terms;
};

/// ES = |t(C_O1) - t(C_O2)|; synchronized iff ES <= T.
SyncResult evolutionary_sync(const OntologyChange& c1, const OntologyChange& c2,
                             double threshold_seconds);

/// Terms touched by both changes; a non-empty intersection marks
/// corresponding changes.
std::set<std::string> change_alignment(const OntologyChange& c1, const OntologyChange& c2);

struct DependencyResult {
  std::size_t externally_induced = 0;  // EC
  std::size_t ontology_specific = 0;   // SC
  double ed = 0.0;                     // EC / SC
};

/// A change counts as externally induced iff some external change is both
/// synchronized (ES <= T) and aligned (shared touched term); ED = EC / SC.
/// SC = 0 raises undefined_dependency instead of dividing.
DependencyResult evolutionary_dependency(const std::vector<OntologyChange>& changes,
                                         const std::vector<OntologyChange>& external,
                                         double threshold_seconds);

struct SchemaCounts {
  std::size_t class_count = 0;
  std::size_t subclass_axiom_count = 0;
  std::size_t property_count = 0;
};

SchemaCounts schema_counts(const Snapshot& snapshot);

}  // namespace kgevo
