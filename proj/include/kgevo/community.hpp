#pragma once

#include "kgevo/graph.hpp"

namespace kgevo {

/// Betweenness of every edge of `g`, indexed like g.edges(): the sum over
/// node pairs of the fraction of shortest paths crossing the edge, each
/// unordered pair counted once. Parallelized over BFS sources.
std::vector<double> edge_betweenness(const UndirectedGraph& g);

/// Newman modularity Q of a node partition; 0 on an edgeless graph.
double modularity(const UndirectedGraph& g, const std::vector<std::vector<NodeId>>& partition);

struct PartitionLevel {
  std::vector<std::vector<NodeId>> communities;
  double q = 0.0;
};

struct CommunityResult {
  std::vector<std::vector<NodeId>> best;  // partition maximizing modularity
  std::vector<PartitionLevel> dendrogram;
};

/// Girvan–Newman: repeatedly remove the edge of maximal betweenness (ties
/// broken by the lexicographically smallest node pair), record the partition
/// whenever the component count grows, and keep the modularity maximum.
CommunityResult detect_communities(const UndirectedGraph& g);

/// One detected community materialized against its snapshot.
struct Community {
  int id = 0;
  std::set<std::string> nodes;
  std::set<std::string> triples;  // induced: canonical lines with both endpoints inside
};

std::vector<Community> make_communities(const Snapshot& snapshot, const UndirectedGraph& g,
                                        const std::vector<std::vector<NodeId>>& partition);

}  // namespace kgevo
