#pragma once

// Serial reference implementations kept for testing and benchmarking. Each
// routine computes its result by a route independent of the main kernels:
// explicit path enumeration, Floyd-Warshall, and dense-matrix iteration.

#include <map>
#include <string>
#include <vector>

#include "kgevo/graph.hpp"

namespace kgevo::reference {

/// Serial Brandes accumulation; algorithmic twin of the parallel kernel,
/// used by the benchmark as its baseline.
std::vector<double> edge_betweenness_serial(const UndirectedGraph& g);

/// Brute force: enumerate every shortest path of every node pair and add
/// each pair's traversal fractions to the edges on it. Exponential in the
/// worst case; meant for fixtures of at most a few dozen nodes.
std::vector<double> edge_betweenness_enumeration(const UndirectedGraph& g);

/// Floyd-Warshall all-pairs distances; -1 encodes unreachable.
std::vector<std::vector<int>> all_pairs_distances(const UndirectedGraph& g);

/// Serial all-pairs BFS eccentricities, the baseline for the parallel kernel.
std::vector<int> eccentricities_serial(const UndirectedGraph& g);

/// Fixed-iteration dense power iteration on the full Google matrix.
std::map<std::string, double> pagerank_dense(const DirectedGraph& g, double damping,
                                             std::size_t iterations);

/// Fixed-iteration dense HITS on the adjacency matrix.
std::pair<std::map<std::string, double>, std::map<std::string, double>> hits_dense(
    const DirectedGraph& g, std::size_t iterations);

/// Direct evaluation of Q = sum_c (e_c/m - (d_c/2m)^2) from the edge list.
double modularity_direct(const UndirectedGraph& g,
                         const std::vector<std::vector<NodeId>>& partition);

/// Two-pass long-double mean and population variance.
std::pair<double, double> mean_variance(const std::vector<double>& values);

}  // namespace kgevo::reference
