#include "kgevo/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

namespace kgevo {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n)) % n;
}

// Deterministic partial Fisher-Yates: the first k slots of a shuffled copy.
std::vector<std::size_t> sample_indices(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + uniform_index(rng, n - i);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  return idx;
}

}  // namespace

PerturbResult perturb(const std::vector<Triple>& snapshot, const PerturbConfig& cfg) {
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0))
    fail(Errc::invalid_input, "alpha must lie in (0, 1)");
  if (cfg.m < 1) fail(Errc::invalid_input, "m must be at least 1");

  std::vector<Triple> base = snapshot;
  sort_unique(base);

  // Subjects in canonical order, with their triples.
  std::map<std::string, std::vector<std::size_t>> by_subject_key;
  for (std::size_t i = 0; i < base.size(); ++i)
    by_subject_key[base[i].subject.canonical()].push_back(i);
  std::vector<const std::vector<std::size_t>*> subjects;
  subjects.reserve(by_subject_key.size());
  for (const auto& [key, rows] : by_subject_key) subjects.push_back(&rows);

  if (subjects.size() < cfg.m)
    fail(Errc::too_few_entities, "snapshot has " + std::to_string(subjects.size()) +
                                     " subjects, need " + std::to_string(cfg.m));

  std::mt19937_64 rng(cfg.seed);
  std::vector<std::size_t> chosen = sample_indices(rng, subjects.size(), cfg.m);

  std::vector<bool> drop(base.size(), false);
  std::vector<Triple> fresh;

  // Reserved namespace; skip names already present so re-perturbing an
  // already perturbed snapshot stays collision-free.
  std::set<std::string> taken;
  for (const Triple& t : base) {
    if (t.object.kind == TermKind::iri) taken.insert(t.object.value);
  }
  std::uint64_t synth_counter = 0;
  auto synth_object = [&] {
    std::string name;
    do {
      name = "urn:kgevo:synth:" + std::to_string(cfg.seed) + "-" +
             std::to_string(synth_counter++);
    } while (taken.count(name));
    return Term::iri(name);
  };

  for (std::size_t subject_index : chosen) {
    const std::vector<std::size_t>& rows = *subjects[subject_index];
    std::size_t k = static_cast<std::size_t>(
        std::ceil(cfg.alpha * static_cast<double>(rows.size())));
    k = std::min(std::max<std::size_t>(k, 1), rows.size());
    std::vector<std::size_t> picks = sample_indices(rng, rows.size(), k);
    std::sort(picks.begin(), picks.end());

    for (std::size_t i = 0; i < picks.size(); ++i) {
      const Triple& target = base[rows[picks[i]]];
      PerturbMode action = cfg.mode;
      if (action == PerturbMode::all) {
        switch (i % 3) {
          case 0: action = PerturbMode::del; break;
          case 1: action = PerturbMode::update; break;
          default: action = PerturbMode::add; break;
        }
      }
      switch (action) {
        case PerturbMode::del:
          drop[rows[picks[i]]] = true;
          break;
        case PerturbMode::add:
          fresh.push_back({target.subject, target.predicate, synth_object()});
          break;
        case PerturbMode::update:
          drop[rows[picks[i]]] = true;
          fresh.push_back({target.subject, target.predicate, synth_object()});
          break;
        case PerturbMode::all:
          break;  // unreachable
      }
    }
  }

  PerturbResult result;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (drop[i]) {
      result.ground_truth.deleted.push_back(base[i]);
    } else {
      result.snapshot.push_back(base[i]);
    }
  }
  result.ground_truth.added = fresh;
  result.snapshot.insert(result.snapshot.end(), fresh.begin(), fresh.end());
  sort_unique(result.snapshot);
  sort_unique(result.ground_truth.added);
  sort_unique(result.ground_truth.deleted);
  return result;
}

std::vector<PerturbResult> controlled_series(
    const std::vector<Triple>& snapshot, const std::vector<std::vector<Triple>>& removal_plan) {
  std::vector<Triple> state = snapshot;
  sort_unique(state);

  std::vector<PerturbResult> steps;
  for (const std::vector<Triple>& planned : removal_plan) {
    std::vector<std::string> state_lines = canonical_lines(state);
    PerturbResult step;
    std::vector<Triple> removals = planned;
    sort_unique(removals);
    for (const Triple& t : removals) {
      if (!std::binary_search(state_lines.begin(), state_lines.end(), t.canonical()))
        fail(Errc::planned_triple_missing, t.canonical());
    }
    std::vector<std::string> removal_lines = canonical_lines(removals);
    for (const Triple& t : state) {
      if (!std::binary_search(removal_lines.begin(), removal_lines.end(), t.canonical()))
        step.snapshot.push_back(t);
    }
    step.ground_truth.deleted = std::move(removals);
    state = step.snapshot;
    steps.push_back(std::move(step));
  }
  return steps;
}

}  // namespace kgevo
