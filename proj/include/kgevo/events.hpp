#pragma once

#include "kgevo/community.hpp"

namespace kgevo {

enum class EventKind { persist, emerge, disappear, merge, split };

struct EvolutionEvent {
  EventKind kind;
  std::vector<int> old_ids;  // community ids in the older snapshot
  std::vector<int> new_ids;  // community ids in the newer snapshot
  double iou = 0.0;
};

enum class OverlapBasis { triples, nodes };

struct EventConfig {
  double omega_overlap = 0.5;  // in (0, 1]
  OverlapBasis basis = OverlapBasis::triples;
  std::size_t max_merge_members = 5;
};

/// Intersection-over-union of two communities on the chosen basis sets;
/// 0 when both are empty.
double iou(const Community& a, const Community& b, OverlapBasis basis);

/// Classify community evolution between two snapshots: greedy best-overlap
/// persistence matching above omega, then merge/split detection over unions
/// of unmatched communities, then emergence/disappearance for the rest.
std::vector<EvolutionEvent> classify_events(const std::vector<Community>& old_communities,
                                            const std::vector<Community>& new_communities,
                                            const EventConfig& cfg);

}  // namespace kgevo
