#include "kgevo/transe.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <json.hpp>

#include "kgevo/io.hpp"

namespace kgevo {

namespace {

using nlohmann::json;

// Uniform double in [0, 1) from the top 53 bits; bit-stable across platforms.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n)) % n;
}

struct IndexedTriple {
  std::size_t head, relation, tail;
};

double l2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

std::vector<double> neighborhood_mean(const std::set<std::string>& neighborhood,
                                      const EmbeddingModel& model) {
  std::vector<double> mean;
  std::size_t members = 0;
  for (const std::string& label : neighborhood) {
    const std::vector<double>* vec = model.entity(label);
    if (vec == nullptr) continue;  // unembedded members are skipped
    if (mean.empty()) mean.assign(vec->size(), 0.0);
    for (std::size_t i = 0; i < vec->size(); ++i) mean[i] += (*vec)[i];
    ++members;
  }
  if (members > 0) {
    for (double& x : mean) x /= static_cast<double>(members);
  }
  return mean;
}

// Undirected neighborhoods over non-literal triples, both edge directions.
std::map<std::string, std::set<std::string>> neighborhoods_of(const Snapshot& snapshot) {
  std::map<std::string, std::set<std::string>> out;
  const Dictionary& dict = *snapshot.dict;
  for (const EncodedTriple& e : snapshot.triples) {
    const Term& obj = dict.decode(e.o);
    const std::string subj = dict.decode(e.s).label();
    out[subj];  // every subject is a node even without resource links
    if (!obj.is_resource()) continue;
    out[subj].insert(obj.label());
    out[obj.label()].insert(subj);
  }
  return out;
}

}  // namespace

const std::vector<double>* EmbeddingModel::entity(const std::string& label) const {
  auto it = entities.find(label);
  return it == entities.end() ? nullptr : &it->second;
}

void save_model(const EmbeddingModel& model, const std::filesystem::path& path) {
  json j{{"dim", model.dim},
         {"seed", model.seed},
         {"entities", json::object()},
         {"relations", json::object()}};
  for (const auto& [label, vec] : model.entities) j["entities"][label] = vec;
  for (const auto& [label, vec] : model.relations) j["relations"][label] = vec;
  write_file(path, j.dump() + "\n");
}

EmbeddingModel load_model(const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    fail(Errc::io_failure, "unreadable model file " + path.string() + ": " + e.what());
  }
  EmbeddingModel model;
  model.dim = j.at("dim").get<std::size_t>();
  model.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& [label, vec] : j.at("entities").items())
    model.entities[label] = vec.get<std::vector<double>>();
  for (const auto& [label, vec] : j.at("relations").items())
    model.relations[label] = vec.get<std::vector<double>>();
  return model;
}

TrainResult train_transe(const std::vector<Triple>& triples, const TransEConfig& cfg) {
  if (cfg.dim < 2) fail(Errc::invalid_input, "embedding dimension must be at least 2");

  // Deterministic training order: canonical sort, resource objects only.
  std::vector<Triple> positives;
  for (const Triple& t : triples) {
    if (t.object.is_resource()) positives.push_back(t);
  }
  sort_unique(positives);
  if (positives.empty()) fail(Errc::no_trainable_triples, "no triples with resource objects");

  std::set<std::string> entity_set, relation_set;
  for (const Triple& t : positives) {
    entity_set.insert(t.subject.label());
    entity_set.insert(t.object.label());
    relation_set.insert(t.predicate.value);
  }
  std::vector<std::string> entities(entity_set.begin(), entity_set.end());
  std::vector<std::string> relations(relation_set.begin(), relation_set.end());
  auto entity_id = [&](const std::string& label) {
    return static_cast<std::size_t>(
        std::lower_bound(entities.begin(), entities.end(), label) - entities.begin());
  };
  std::vector<IndexedTriple> indexed;
  indexed.reserve(positives.size());
  for (const Triple& t : positives) {
    std::size_t r = static_cast<std::size_t>(
        std::lower_bound(relations.begin(), relations.end(), t.predicate.value) -
        relations.begin());
    indexed.push_back({entity_id(t.subject.label()), r, entity_id(t.object.label())});
  }

  const std::size_t dim = cfg.dim;
  std::mt19937_64 rng(cfg.seed);
  const double bound = 6.0 / std::sqrt(static_cast<double>(dim));
  auto init_vec = [&] {
    std::vector<double> v(dim);
    for (double& x : v) x = (2.0 * uniform01(rng) - 1.0) * bound;
    return v;
  };
  std::vector<std::vector<double>> ent(entities.size()), rel(relations.size());
  for (auto& v : ent) v = init_vec();
  for (auto& v : rel) v = init_vec();

  auto normalize_entities = [&] {
    for (auto& v : ent) {
      double norm = l2(v);
      if (norm > 0.0) {
        for (double& x : v) x /= norm;
      }
    }
  };
  normalize_entities();

  TrainResult result;
  std::vector<double> gap(dim), gap_neg(dim);
  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    double loss_sum = 0.0;
    for (const IndexedTriple& t : indexed) {
      // Corrupt head or tail with a uniformly drawn entity.
      bool corrupt_head = uniform01(rng) < 0.5;
      std::size_t replacement = uniform_index(rng, entities.size());
      std::size_t neg_head = corrupt_head ? replacement : t.head;
      std::size_t neg_tail = corrupt_head ? t.tail : replacement;

      double d_pos = 0.0, d_neg = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        gap[i] = ent[t.head][i] + rel[t.relation][i] - ent[t.tail][i];
        d_pos += gap[i] * gap[i];
        gap_neg[i] = ent[neg_head][i] + rel[t.relation][i] - ent[neg_tail][i];
        d_neg += gap_neg[i] * gap_neg[i];
      }
      d_pos = std::sqrt(d_pos);
      d_neg = std::sqrt(d_neg);

      double loss = cfg.margin + d_pos - d_neg;
      if (loss <= 0.0) continue;
      loss_sum += loss;

      // Subgradients of the L2 distances; zero-distance terms contribute none.
      for (std::size_t i = 0; i < dim; ++i) {
        if (d_pos > 0.0) {
          double g = cfg.learning_rate * gap[i] / d_pos;
          ent[t.head][i] -= g;
          rel[t.relation][i] -= g;
          ent[t.tail][i] += g;
        }
        if (d_neg > 0.0) {
          double g = cfg.learning_rate * gap_neg[i] / d_neg;
          ent[neg_head][i] += g;
          rel[t.relation][i] += g;
          ent[neg_tail][i] -= g;
        }
      }
    }
    normalize_entities();
    result.epoch_mean_loss.push_back(loss_sum / static_cast<double>(indexed.size()));
  }

  result.model.dim = dim;
  result.model.seed = cfg.seed;
  for (std::size_t i = 0; i < entities.size(); ++i) result.model.entities[entities[i]] = ent[i];
  for (std::size_t i = 0; i < relations.size(); ++i) result.model.relations[relations[i]] = rel[i];
  return result;
}

double node_sim(const std::set<std::string>& neighborhood_v1,
                const std::set<std::string>& neighborhood_v2, const EmbeddingModel& model) {
  std::vector<double> a = neighborhood_mean(neighborhood_v1, model);
  std::vector<double> b = neighborhood_mean(neighborhood_v2, model);
  if (a.empty() || b.empty()) return 0.0;
  double na = l2(a), nb = l2(b);
  if (na == 0.0 || nb == 0.0) return 0.0;
  double dot = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
  return dot / (na * nb);
}

SemanticSimReport semantic_sim(const Snapshot& v1, const Snapshot& v2,
                               const EmbeddingModel& model) {
  std::map<std::string, std::set<std::string>> n1 = neighborhoods_of(v1);
  if (n1.empty()) fail(Errc::empty_snapshot, "v1 has no nodes");
  std::map<std::string, std::set<std::string>> n2 = neighborhoods_of(v2);

  SemanticSimReport report;
  const std::set<std::string> empty;
  double sum = 0.0;
  for (const auto& [node, neigh1] : n1) {
    auto it = n2.find(node);
    double sim = node_sim(neigh1, it == n2.end() ? empty : it->second, model);
    report.per_node[node] = sim;
    sum += sim;
  }
  report.aggregate = sum / static_cast<double>(n1.size());
  return report;
}

double matetee_sim(const std::string& a, const std::string& b, const EmbeddingModel& model) {
  const std::vector<double>* va = model.entity(a);
  const std::vector<double>* vb = model.entity(b);
  if (va == nullptr) fail(Errc::unknown_entity, a);
  if (vb == nullptr) fail(Errc::unknown_entity, b);
  double d = 0.0;
  for (std::size_t i = 0; i < va->size(); ++i) {
    double diff = (*va)[i] - (*vb)[i];
    d += diff * diff;
  }
  return 1.0 / (1.0 + std::sqrt(d));
}

}  // namespace kgevo
