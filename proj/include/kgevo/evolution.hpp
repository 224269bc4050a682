#pragma once

#include <map>
#include <string>

#include "kgevo/community.hpp"
#include "kgevo/store.hpp"

namespace kgevo {

enum class FeatureSign { added, deleted };
enum class FeatureFamily { type_count, prop_count, type_prop_count };

/// One tracked change feature: insertions/deletions of a class, a property,
/// or a property on resources of a class.
struct FeatureKey {
  FeatureFamily family = FeatureFamily::prop_count;
  FeatureSign sign = FeatureSign::added;
  std::string iri;         // class IRI for type_count, property IRI for prop_count
  std::string second_iri;  // property IRI of type_prop_count

  auto operator<=>(const FeatureKey&) const = default;
  std::string to_string() const;
};

struct FeatureVector {
  std::string resource;
  std::map<FeatureKey, std::uint64_t> counts;
};

struct FeatureConfig {
  bool track_types = true;
  bool track_props = true;
  bool track_type_props = true;
  std::string type_predicate = iri::rdf_type;
};

using TypeIndex = std::map<std::string, std::set<std::string>>;

/// Resource -> class set, from the older snapshot's typing triples.
TypeIndex build_type_index(const Snapshot& snapshot,
                           const std::string& type_predicate = iri::rdf_type);

/// One feature vector per resource appearing as subject in U = A ∪ D.
std::vector<FeatureVector> extract_features(const ChangeSet& cs, const TypeIndex& type_index,
                                            const FeatureConfig& cfg = {});

struct FeatureStats {
  double mean = 0.0;
  double variance = 0.0;  // population variance
  std::size_t support = 0;
};

/// Expected evolution per feature: mean and variance over all resources,
/// counting resources without the feature as 0.
using EvolutionDescription = std::map<FeatureKey, FeatureStats>;

EvolutionDescription describe_evolution(const std::vector<FeatureVector>& vectors);

struct Trigger {
  FeatureKey key;
  std::uint64_t delta = 0;
  double mu = 0.0;
  double sigma2 = 0.0;
  double p = 0.0;  // two-sided Gaussian tail probability
};

struct NoteworthyReport {
  std::string resource;
  double theta = 0.0;
  std::vector<Trigger> triggers;  // every key with p < theta
};

/// Two-sided Gaussian tail probability of the z-score of `delta`; 0 when the
/// variance is degenerate and delta deviates from the mean.
double tail_probability(double delta, double mu, double sigma2);

/// Resources whose deviation from the expected evolution falls below theta
/// for at least one feature key.
std::vector<NoteworthyReport> flag_noteworthy(const std::vector<FeatureVector>& vectors,
                                              const EvolutionDescription& desc, double theta);

/// flag_noteworthy per community, each with its own evolution description.
/// Resources missing from the partition are skipped.
std::map<int, std::vector<NoteworthyReport>> local_noteworthy(
    const std::vector<FeatureVector>& vectors, const std::vector<Community>& communities,
    double theta);

struct CommunityFeatures {
  double density = 0.0;
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::size_t internal_triple_count = 0;
};

CommunityFeatures community_features(const Community& community, const Snapshot& snapshot,
                                     const ProjectionConfig& cfg = {});

}  // namespace kgevo
