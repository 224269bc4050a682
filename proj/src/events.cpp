#include "kgevo/events.hpp"

#include <algorithm>

namespace kgevo {

namespace {

const std::set<std::string>& basis_set(const Community& c, OverlapBasis basis) {
  return basis == OverlapBasis::triples ? c.triples : c.nodes;
}

double iou_sets(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::size_t inter = 0;
  for (const std::string& x : a) inter += b.count(x);
  std::size_t uni = a.size() + b.size() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

struct GroupCandidate {
  std::vector<int> old_ids;
  std::vector<int> new_ids;
  double iou = 0.0;
  bool is_merge = false;  // several old -> one new; split is the inverse
};

// Greedy union growth: extend `members` while the IoU against `target`
// strictly improves, up to `cap` members.
template <typename Comms>
GroupCandidate grow_group(const Comms& pool, const std::vector<bool>& available,
                          const std::set<std::string>& target, OverlapBasis basis,
                          std::size_t cap) {
  GroupCandidate cand;
  std::set<std::string> group_union;
  std::vector<bool> used(pool.size(), false);
  double best = 0.0;
  for (std::size_t members = 0; members < cap; ++members) {
    int pick = -1;
    double pick_iou = best;
    std::set<std::string> pick_union;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (!available[i] || used[i]) continue;
      std::set<std::string> trial = group_union;
      const std::set<std::string>& s = basis_set(pool[i], basis);
      trial.insert(s.begin(), s.end());
      double value = iou_sets(trial, target);
      if (value > pick_iou + 1e-15) {
        pick = static_cast<int>(i);
        pick_iou = value;
        pick_union = std::move(trial);
      }
    }
    if (pick < 0) break;
    used[pick] = true;
    group_union = std::move(pick_union);
    best = pick_iou;
    cand.old_ids.push_back(pool[pick].id);
  }
  cand.iou = best;
  return cand;
}

// Swap-invariant candidate order: higher IoU first, then the normalized
// (smaller list, larger list) pair of sorted member id lists.
bool candidate_before(const GroupCandidate& a, const GroupCandidate& b) {
  if (a.iou != b.iou) return a.iou > b.iou;
  auto norm = [](const GroupCandidate& c) {
    return c.old_ids <= c.new_ids ? std::make_pair(c.old_ids, c.new_ids)
                                  : std::make_pair(c.new_ids, c.old_ids);
  };
  return norm(a) < norm(b);
}

}  // namespace

double iou(const Community& a, const Community& b, OverlapBasis basis) {
  return iou_sets(basis_set(a, basis), basis_set(b, basis));
}

std::vector<EvolutionEvent> classify_events(const std::vector<Community>& old_communities,
                                            const std::vector<Community>& new_communities,
                                            const EventConfig& cfg) {
  if (!(cfg.omega_overlap > 0.0 && cfg.omega_overlap <= 1.0))
    fail(Errc::invalid_omega, "omega_overlap must lie in (0, 1]");

  const std::size_t n_old = old_communities.size();
  const std::size_t n_new = new_communities.size();
  std::vector<bool> old_free(n_old, true), new_free(n_new, true);

  // Persisting pairs: greedy best-IoU matching above the threshold.
  struct Pair {
    double iou;
    std::size_t oi, ni;
  };
  // Overlap strictly above the threshold persists; identical sets (IoU 1)
  // persist at any threshold, including omega = 1.
  auto above = [&](double value) { return value > cfg.omega_overlap || value == 1.0; };

  std::vector<Pair> pairs;
  for (std::size_t oi = 0; oi < n_old; ++oi) {
    for (std::size_t ni = 0; ni < n_new; ++ni) {
      double value = iou(old_communities[oi], new_communities[ni], cfg.basis);
      if (above(value)) pairs.push_back({value, oi, ni});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
    if (a.iou != b.iou) return a.iou > b.iou;
    if (old_communities[a.oi].id != old_communities[b.oi].id)
      return old_communities[a.oi].id < old_communities[b.oi].id;
    return new_communities[a.ni].id < new_communities[b.ni].id;
  });

  std::vector<EvolutionEvent> events;
  for (const Pair& p : pairs) {
    if (!old_free[p.oi] || !new_free[p.ni]) continue;
    old_free[p.oi] = false;
    new_free[p.ni] = false;
    events.push_back({EventKind::persist,
                      {old_communities[p.oi].id},
                      {new_communities[p.ni].id},
                      p.iou});
  }

  // Merge / split candidates over the leftovers.
  std::vector<GroupCandidate> candidates;
  for (std::size_t ni = 0; ni < n_new; ++ni) {
    if (!new_free[ni]) continue;
    GroupCandidate cand = grow_group(old_communities, old_free,
                                     basis_set(new_communities[ni], cfg.basis), cfg.basis,
                                     cfg.max_merge_members);
    if (cand.old_ids.size() >= 2 && above(cand.iou)) {
      cand.new_ids = {new_communities[ni].id};
      cand.is_merge = true;
      candidates.push_back(std::move(cand));
    }
  }
  for (std::size_t oi = 0; oi < n_old; ++oi) {
    if (!old_free[oi]) continue;
    GroupCandidate cand = grow_group(new_communities, new_free,
                                     basis_set(old_communities[oi], cfg.basis), cfg.basis,
                                     cfg.max_merge_members);
    if (cand.old_ids.size() >= 2 && above(cand.iou)) {
      cand.new_ids.swap(cand.old_ids);  // grown members are new communities
      cand.old_ids = {old_communities[oi].id};
      cand.is_merge = false;
      candidates.push_back(std::move(cand));
    }
  }
  std::sort(candidates.begin(), candidates.end(), candidate_before);

  auto index_of = [](const std::vector<Community>& comms, int id) {
    for (std::size_t i = 0; i < comms.size(); ++i) {
      if (comms[i].id == id) return i;
    }
    return comms.size();
  };
  for (GroupCandidate& cand : candidates) {
    bool free = true;
    for (int id : cand.old_ids) free = free && old_free[index_of(old_communities, id)];
    for (int id : cand.new_ids) free = free && new_free[index_of(new_communities, id)];
    if (!free) continue;
    for (int id : cand.old_ids) old_free[index_of(old_communities, id)] = false;
    for (int id : cand.new_ids) new_free[index_of(new_communities, id)] = false;
    std::sort(cand.old_ids.begin(), cand.old_ids.end());
    std::sort(cand.new_ids.begin(), cand.new_ids.end());
    events.push_back({cand.is_merge ? EventKind::merge : EventKind::split, cand.old_ids,
                      cand.new_ids, cand.iou});
  }

  for (std::size_t oi = 0; oi < n_old; ++oi) {
    if (old_free[oi]) events.push_back({EventKind::disappear, {old_communities[oi].id}, {}, 0.0});
  }
  for (std::size_t ni = 0; ni < n_new; ++ni) {
    if (new_free[ni]) events.push_back({EventKind::emerge, {}, {new_communities[ni].id}, 0.0});
  }
  return events;
}

}  // namespace kgevo
