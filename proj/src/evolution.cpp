#include "kgevo/evolution.hpp"

#include <algorithm>
#include <cmath>

namespace kgevo {

namespace {

const char* family_name(FeatureFamily f) {
  switch (f) {
    case FeatureFamily::type_count: return "type";
    case FeatureFamily::prop_count: return "prop";
    case FeatureFamily::type_prop_count: return "typeprop";
  }
  return "?";
}

void tally_side(const std::vector<Triple>& side, FeatureSign sign, const TypeIndex& type_index,
                const FeatureConfig& cfg, std::map<std::string, FeatureVector>& by_resource) {
  for (const Triple& t : side) {
    FeatureVector& fv = by_resource[t.subject.label()];
    if (cfg.track_props) {
      fv.counts[{FeatureFamily::prop_count, sign, t.predicate.value}] += 1;
    }
    if (cfg.track_types && t.predicate.value == cfg.type_predicate && t.object.is_resource()) {
      fv.counts[{FeatureFamily::type_count, sign, t.object.label()}] += 1;
    }
    if (cfg.track_type_props) {
      auto it = type_index.find(t.subject.label());
      if (it != type_index.end()) {
        for (const std::string& cls : it->second) {
          fv.counts[{FeatureFamily::type_prop_count, sign, cls, t.predicate.value}] += 1;
        }
      }
    }
  }
}

}  // namespace

std::string FeatureKey::to_string() const {
  std::string out = family_name(family);
  out += sign == FeatureSign::added ? " added " : " deleted ";
  out += iri;
  if (family == FeatureFamily::type_prop_count) {
    out += ' ';
    out += second_iri;
  }
  return out;
}

TypeIndex build_type_index(const Snapshot& snapshot, const std::string& type_predicate) {
  TypeIndex index;
  const Dictionary& dict = *snapshot.dict;
  for (const EncodedTriple& e : snapshot.triples) {
    if (dict.decode(e.p).value != type_predicate) continue;
    const Term& obj = dict.decode(e.o);
    if (!obj.is_resource()) continue;
    index[dict.decode(e.s).label()].insert(obj.label());
  }
  return index;
}

std::vector<FeatureVector> extract_features(const ChangeSet& cs, const TypeIndex& type_index,
                                            const FeatureConfig& cfg) {
  std::map<std::string, FeatureVector> by_resource;
  tally_side(cs.added, FeatureSign::added, type_index, cfg, by_resource);
  tally_side(cs.deleted, FeatureSign::deleted, type_index, cfg, by_resource);
  std::vector<FeatureVector> out;
  out.reserve(by_resource.size());
  for (auto& [resource, fv] : by_resource) {
    fv.resource = resource;
    out.push_back(std::move(fv));
  }
  return out;
}

EvolutionDescription describe_evolution(const std::vector<FeatureVector>& vectors) {
  if (vectors.empty()) fail(Errc::empty_input, "describe_evolution needs at least one vector");
  const double n = static_cast<double>(vectors.size());
  EvolutionDescription desc;
  for (const FeatureVector& fv : vectors) {
    for (const auto& [key, count] : fv.counts) {
      desc[key].mean += static_cast<double>(count);
    }
  }
  for (auto& [key, stats] : desc) stats.mean /= n;
  for (const FeatureVector& fv : vectors) {
    for (auto& [key, stats] : desc) {
      auto it = fv.counts.find(key);
      double x = it == fv.counts.end() ? 0.0 : static_cast<double>(it->second);
      double d = x - stats.mean;
      stats.variance += d * d;
    }
  }
  for (auto& [key, stats] : desc) {
    stats.variance /= n;
    stats.support = vectors.size();
  }
  return desc;
}

double tail_probability(double delta, double mu, double sigma2) {
  if (sigma2 <= 0.0) return delta == mu ? 1.0 : 0.0;
  double z = (delta - mu) / std::sqrt(sigma2);
  return std::erfc(std::abs(z) / std::sqrt(2.0));
}

std::vector<NoteworthyReport> flag_noteworthy(const std::vector<FeatureVector>& vectors,
                                              const EvolutionDescription& desc, double theta) {
  if (!(theta > 0.0 && theta < 1.0)) fail(Errc::invalid_theta, "theta must lie in (0, 1)");
  std::vector<NoteworthyReport> reports;
  for (const FeatureVector& fv : vectors) {
    NoteworthyReport report;
    report.resource = fv.resource;
    report.theta = theta;
    for (const auto& [key, stats] : desc) {
      auto it = fv.counts.find(key);
      std::uint64_t delta = it == fv.counts.end() ? 0 : it->second;
      double p = tail_probability(static_cast<double>(delta), stats.mean, stats.variance);
      if (p < theta) report.triggers.push_back({key, delta, stats.mean, stats.variance, p});
    }
    if (!report.triggers.empty()) reports.push_back(std::move(report));
  }
  return reports;
}

std::map<int, std::vector<NoteworthyReport>> local_noteworthy(
    const std::vector<FeatureVector>& vectors, const std::vector<Community>& communities,
    double theta) {
  if (!(theta > 0.0 && theta < 1.0)) fail(Errc::invalid_theta, "theta must lie in (0, 1)");
  std::map<int, std::vector<NoteworthyReport>> out;
  for (const Community& community : communities) {
    std::vector<FeatureVector> members;
    for (const FeatureVector& fv : vectors) {
      if (community.nodes.count(fv.resource)) members.push_back(fv);
    }
    if (members.empty()) {
      out[community.id] = {};
      continue;
    }
    out[community.id] = flag_noteworthy(members, describe_evolution(members), theta);
  }
  return out;
}

CommunityFeatures community_features(const Community& community, const Snapshot& snapshot,
                                     const ProjectionConfig& cfg) {
  UndirectedGraph g = project(snapshot, cfg);
  CommunityFeatures f;
  f.node_count = community.nodes.size();
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (!community.nodes.count(g.labels[u])) continue;
    for (NodeId v : g.adj[u]) {
      if (u < v && community.nodes.count(g.labels[v])) ++f.edge_count;
    }
  }
  const Dictionary& dict = *snapshot.dict;
  for (const EncodedTriple& e : snapshot.triples) {
    const Term& obj = dict.decode(e.o);
    if (!obj.is_resource()) continue;
    if (community.nodes.count(dict.decode(e.s).label()) && community.nodes.count(obj.label()))
      ++f.internal_triple_count;
  }
  if (f.node_count >= 2) {
    double possible = static_cast<double>(f.node_count) * (f.node_count - 1) / 2.0;
    f.density = static_cast<double>(f.edge_count) / possible;
  }
  return f;
}

}  // namespace kgevo
