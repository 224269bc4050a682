#include "kgevo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace kgevo {

namespace {

// Single-source BFS distances; unreached nodes stay at -1.
std::vector<int> bfs_distances(const UndirectedGraph& g, NodeId s) {
  std::vector<int> dist(g.node_count(), kUnreachable);
  dist[s] = 0;
  std::deque<NodeId> queue{s};
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : g.adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

double l2_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

bool subgraph_included(const Snapshot& kg1, const Snapshot& kg2) {
  std::vector<std::string> l1 = kg1.lines();
  std::vector<std::string> l2 = kg2.lines();
  return std::includes(l2.begin(), l2.end(), l1.begin(), l1.end());
}

DegreeStats degree_stats(const DirectedGraph& g) {
  DegreeStats stats;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    NodeDegrees d;
    d.n_in = g.in[v].size();
    d.n_out = g.out[v].size();
    d.ratio = static_cast<double>(d.n_in) / static_cast<double>(d.n_out + 1);
    stats.histogram[d.n_in + d.n_out] += 1;
    stats.per_node[g.labels[v]] = d;
  }
  return stats;
}

std::vector<int> eccentricities(const UndirectedGraph& g) {
  const int n = static_cast<int>(g.node_count());
  std::vector<int> ecc(n, 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist = bfs_distances(g, static_cast<NodeId>(s));
    int e = 0;
    for (int d : dist) e = std::max(e, d);
    ecc[s] = e;
  }
  return ecc;
}

int eccentricity(const UndirectedGraph& g, NodeId v) {
  if (g.node_count() == 0) fail(Errc::empty_graph, "eccentricity of an empty graph");
  std::vector<int> dist = bfs_distances(g, v);
  int e = 0;
  for (int d : dist) e = std::max(e, d);
  return e;
}

GraphExtent radius_diameter(const UndirectedGraph& g) {
  if (g.node_count() == 0) fail(Errc::empty_graph, "radius/diameter of an empty graph");
  std::vector<std::vector<NodeId>> comps = g.components();
  const std::vector<NodeId>* largest = &comps.front();
  for (const auto& c : comps) {
    if (c.size() > largest->size()) largest = &c;
  }
  std::vector<int> ecc = eccentricities(g);
  GraphExtent extent;
  extent.component_size = largest->size();
  extent.radius = std::numeric_limits<int>::max();
  extent.diameter = 0;
  for (NodeId v : *largest) {
    extent.radius = std::min(extent.radius, ecc[v]);
    extent.diameter = std::max(extent.diameter, ecc[v]);
  }
  return extent;
}

CentralityScores pagerank(const DirectedGraph& g, const PageRankConfig& cfg) {
  if (!(cfg.damping > 0.0 && cfg.damping < 1.0))
    fail(Errc::invalid_input, "damping must lie in (0, 1)");
  const int n = static_cast<int>(g.node_count());
  CentralityScores scores;
  if (n == 0) return scores;

  const double uniform = 1.0 / n;
  std::vector<double> x(n, uniform), next(n, 0.0);
  double residual = 0.0;
  bool converged = false;
  for (std::size_t iter = 0; iter < cfg.max_iterations && !converged; ++iter) {
    double dangling = 0.0;
    for (int v = 0; v < n; ++v) {
      if (g.out[v].empty()) dangling += x[v];
    }
    const double base = (1.0 - cfg.damping) * uniform + cfg.damping * dangling * uniform;
#pragma omp parallel for schedule(static)
    for (int v = 0; v < n; ++v) {
      double in_mass = 0.0;
      for (NodeId u : g.in[v]) in_mass += x[u] / static_cast<double>(g.out[u].size());
      next[v] = base + cfg.damping * in_mass;
    }
    residual = 0.0;
    for (int v = 0; v < n; ++v) residual += std::abs(next[v] - x[v]);
    x.swap(next);
    converged = residual < cfg.tolerance;
  }
  if (!converged)
    fail(Errc::not_converged,
         "pagerank residual " + std::to_string(residual) + " after " +
             std::to_string(cfg.max_iterations) + " iterations");
  for (int v = 0; v < n; ++v) scores[g.labels[v]] = x[v];
  return scores;
}

HitsScores hits(const DirectedGraph& g, const HitsConfig& cfg) {
  const int n = static_cast<int>(g.node_count());
  HitsScores scores;
  if (n == 0) return scores;

  auto normalize = [](std::vector<double>& v) {
    double norm = l2_norm(v);
    if (norm > 0.0) {
      for (double& x : v) x /= norm;
    }
  };

  std::vector<double> hub(n, 1.0), auth(n, 1.0);
  normalize(hub);
  normalize(auth);
  bool converged = false;
  double moved = 0.0;
  for (std::size_t iter = 0; iter < cfg.max_iterations && !converged; ++iter) {
    std::vector<double> auth_next(n, 0.0), hub_next(n, 0.0);
#pragma omp parallel for schedule(static)
    for (int v = 0; v < n; ++v) {
      double a = 0.0;
      for (NodeId u : g.in[v]) a += hub[u];
      auth_next[v] = a;
    }
    normalize(auth_next);
#pragma omp parallel for schedule(static)
    for (int v = 0; v < n; ++v) {
      double h = 0.0;
      for (NodeId w : g.out[v]) h += auth_next[w];
      hub_next[v] = h;
    }
    normalize(hub_next);

    double da = 0.0, dh = 0.0;
    for (int v = 0; v < n; ++v) {
      da += (auth_next[v] - auth[v]) * (auth_next[v] - auth[v]);
      dh += (hub_next[v] - hub[v]) * (hub_next[v] - hub[v]);
    }
    moved = std::max(std::sqrt(da), std::sqrt(dh));
    auth.swap(auth_next);
    hub.swap(hub_next);
    converged = moved < cfg.tolerance;
  }
  if (!converged)
    fail(Errc::not_converged, "hits moved " + std::to_string(moved) + " after " +
                                  std::to_string(cfg.max_iterations) + " iterations");
  for (int v = 0; v < n; ++v) {
    scores.hub[g.labels[v]] = hub[v];
    scores.authority[g.labels[v]] = auth[v];
  }
  return scores;
}

}  // namespace kgevo
