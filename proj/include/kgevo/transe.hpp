#pragma once

#include <filesystem>
#include <map>
#include <set>

#include "kgevo/store.hpp"

namespace kgevo {

struct EmbeddingModel {
  std::size_t dim = 0;
  std::uint64_t seed = 0;
  std::map<std::string, std::vector<double>> entities;   // node label -> vector
  std::map<std::string, std::vector<double>> relations;  // predicate IRI -> vector

  const std::vector<double>* entity(const std::string& label) const;
};

void save_model(const EmbeddingModel& model, const std::filesystem::path& path);
EmbeddingModel load_model(const std::filesystem::path& path);

struct TransEConfig {
  std::size_t dim = 32;
  double margin = 1.0;
  double learning_rate = 0.01;
  std::size_t epochs = 100;
  std::uint64_t seed = 42;
};

struct TrainResult {
  EmbeddingModel model;
  std::vector<double> epoch_mean_loss;
};

/// Margin-based ranking SGD over L2 translation distance, one corrupted
/// head-or-tail negative per positive per epoch; entity vectors are
/// L2-normalized after every epoch. Deterministic for a fixed seed.
/// Literal-valued triples are skipped.
TrainResult train_transe(const std::vector<Triple>& triples, const TransEConfig& cfg);

/// Cosine similarity of the two neighborhoods' mean embedding; 0 when either
/// effective neighborhood is empty.
double node_sim(const std::set<std::string>& neighborhood_v1,
                const std::set<std::string>& neighborhood_v2, const EmbeddingModel& model);

struct SemanticSimReport {
  std::map<std::string, double> per_node;
  double aggregate = 0.0;  // mean of per-node similarities
};

/// Average node_sim over every node of v1, comparing its neighborhood in v1
/// against its neighborhood in v2. The model is expected to be trained on v1.
SemanticSimReport semantic_sim(const Snapshot& v1, const Snapshot& v2,
                               const EmbeddingModel& model);

/// similarity(A, B) = 1 / (1 + euclidean_distance(A, B)), in (0, 1].
double matetee_sim(const std::string& a, const std::string& b, const EmbeddingModel& model);

}  // namespace kgevo
