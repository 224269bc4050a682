#pragma once

#include "kgevo/store.hpp"

namespace kgevo {

enum class PerturbMode { add, del, update, all };

struct PerturbConfig {
  std::size_t m = 1;      // number of target subjects
  double alpha = 0.1;     // fraction of each subject's triples, in (0, 1)
  PerturbMode mode = PerturbMode::update;
  std::uint64_t seed = 0;
};

struct PerturbResult {
  std::vector<Triple> snapshot;  // perturbed triple set, sorted
  ChangeSet ground_truth;        // exactly the applied changes
};

/// Sample m subjects and affect ceil(alpha * k) of each one's k triples:
/// delete removes them, add synthesizes fresh-object triples on the subject,
/// update replaces the object, and `all` cycles the three actions over the
/// affected triples. Deterministic for a fixed seed.
PerturbResult perturb(const std::vector<Triple>& snapshot, const PerturbConfig& cfg);

/// Apply an explicit removal plan step by step; each step's ground truth is
/// the planned deletion set verbatim.
std::vector<PerturbResult> controlled_series(const std::vector<Triple>& snapshot,
                                             const std::vector<std::vector<Triple>>& removal_plan);

}  // namespace kgevo
