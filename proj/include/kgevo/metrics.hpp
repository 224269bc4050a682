#pragma once

#include <map>

#include "kgevo/graph.hpp"

namespace kgevo {

/// True iff every triple of kg1 also occurs in kg2 (nodes and edges follow).
bool subgraph_included(const Snapshot& kg1, const Snapshot& kg2);

struct NodeDegrees {
  std::size_t n_in = 0;
  std::size_t n_out = 0;
  double ratio = 0.0;  // n_in / (n_out + 1)
};

struct DegreeStats {
  std::map<std::string, NodeDegrees> per_node;
  std::map<std::size_t, std::size_t> histogram;  // total degree -> node count
};

DegreeStats degree_stats(const DirectedGraph& g);

inline constexpr int kUnreachable = -1;

/// BFS eccentricities on the undirected projection; -1 marks nodes of
/// other components when measured from v's component. Parallel over sources.
std::vector<int> eccentricities(const UndirectedGraph& g);

int eccentricity(const UndirectedGraph& g, NodeId v);

struct GraphExtent {
  int radius = 0;
  int diameter = 0;
  std::size_t component_size = 0;  // largest component, which the values describe
};

GraphExtent radius_diameter(const UndirectedGraph& g);

using CentralityScores = std::map<std::string, double>;

struct PageRankConfig {
  double damping = 0.85;
  double tolerance = 1e-10;  // L1 change between iterations
  std::size_t max_iterations = 200;
};

/// Power iteration with dangling mass redistributed uniformly; scores sum
/// to 1. Throws not_converged with the residual after max_iterations.
CentralityScores pagerank(const DirectedGraph& g, const PageRankConfig& cfg = {});

struct HitsConfig {
  double tolerance = 1e-10;
  std::size_t max_iterations = 200;
};

struct HitsScores {
  CentralityScores hub;
  CentralityScores authority;
};

/// Alternating a = E^T h / h = E a updates with L2 normalization; an
/// edgeless graph yields all-zero scores.
HitsScores hits(const DirectedGraph& g, const HitsConfig& cfg = {});

}  // namespace kgevo
