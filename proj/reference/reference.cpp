#include "reference.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>

namespace kgevo::reference {

namespace {

std::map<Edge, std::size_t> edge_ids(const std::vector<Edge>& edges) {
  std::map<Edge, std::size_t> ids;
  for (std::size_t i = 0; i < edges.size(); ++i) ids[edges[i]] = i;
  return ids;
}

std::vector<int> bfs(const UndirectedGraph& g, NodeId s) {
  std::vector<int> dist(g.node_count(), -1);
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

}  // namespace

std::vector<double> edge_betweenness_serial(const UndirectedGraph& g) {
  std::vector<Edge> edges = g.edges();
  std::map<Edge, std::size_t> ids = edge_ids(edges);
  std::vector<double> acc(edges.size(), 0.0);
  const std::size_t n = g.node_count();

  for (NodeId s = 0; s < n; ++s) {
    std::vector<double> sigma(n, 0.0);
    std::vector<int> dist(n, -1);
    std::vector<double> delta(n, 0.0);
    std::vector<NodeId> order;
    sigma[s] = 1.0;
    dist[s] = 0;
    std::deque<NodeId> queue{s};
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (NodeId v : g.adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
        if (dist[v] == dist[u] + 1) sigma[v] += sigma[u];
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      NodeId w = *it;
      for (NodeId v : g.adj[w]) {
        if (dist[v] != dist[w] - 1) continue;
        double c = sigma[v] / sigma[w] * (1.0 + delta[w]);
        acc[ids[v < w ? Edge{v, w} : Edge{w, v}]] += c;
        delta[v] += c;
      }
    }
  }
  for (double& x : acc) x /= 2.0;
  return acc;
}

std::vector<double> edge_betweenness_enumeration(const UndirectedGraph& g) {
  std::vector<Edge> edges = g.edges();
  std::map<Edge, std::size_t> ids = edge_ids(edges);
  std::vector<double> acc(edges.size(), 0.0);
  const std::size_t n = g.node_count();

  for (NodeId s = 0; s < n; ++s) {
    std::vector<int> dist = bfs(g, s);
    for (NodeId t = s + 1; t < n; ++t) {
      if (dist[t] < 0) continue;
      // Every shortest s->t path, walked backwards from t.
      std::vector<std::vector<NodeId>> paths;
      std::vector<NodeId> trail{t};
      std::function<void(NodeId)> walk = [&](NodeId v) {
        if (v == s) {
          paths.push_back(trail);
          return;
        }
        for (NodeId u : g.adj[v]) {
          if (dist[u] == dist[v] - 1) {
            trail.push_back(u);
            walk(u);
            trail.pop_back();
          }
        }
      };
      walk(t);
      const double fraction = 1.0 / static_cast<double>(paths.size());
      for (const std::vector<NodeId>& path : paths) {
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
          NodeId a = path[i], b = path[i + 1];
          acc[ids[a < b ? Edge{a, b} : Edge{b, a}]] += fraction;
        }
      }
    }
  }
  return acc;
}

std::vector<std::vector<int>> all_pairs_distances(const UndirectedGraph& g) {
  const std::size_t n = g.node_count();
  const int inf = std::numeric_limits<int>::max() / 2;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : g.adj[u]) d[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  for (auto& row : d) {
    for (int& x : row) {
      if (x >= inf) x = -1;
    }
  }
  return d;
}

std::vector<int> eccentricities_serial(const UndirectedGraph& g) {
  std::vector<int> ecc(g.node_count(), 0);
  for (NodeId s = 0; s < g.node_count(); ++s) {
    std::vector<int> dist = bfs(g, s);
    for (int d : dist) ecc[s] = std::max(ecc[s], d);
  }
  return ecc;
}

std::map<std::string, double> pagerank_dense(const DirectedGraph& g, double damping,
                                             std::size_t iterations) {
  const std::size_t n = g.node_count();
  std::map<std::string, double> scores;
  if (n == 0) return scores;

  // google[v][u]: mass flowing u -> v in one step.
  std::vector<std::vector<double>> google(n, std::vector<double>(n, (1.0 - damping) / n));
  for (NodeId u = 0; u < n; ++u) {
    if (g.out[u].empty()) {
      for (std::size_t v = 0; v < n; ++v) google[v][u] += damping / n;
    } else {
      for (NodeId v : g.out[u]) google[v][u] += damping / static_cast<double>(g.out[u].size());
    }
  }
  std::vector<double> x(n, 1.0 / n), next(n, 0.0);
  for (std::size_t it = 0; it < iterations; ++it) {
    for (std::size_t v = 0; v < n; ++v) {
      double sum = 0.0;
      for (std::size_t u = 0; u < n; ++u) sum += google[v][u] * x[u];
      next[v] = sum;
    }
    x.swap(next);
  }
  for (std::size_t v = 0; v < n; ++v) scores[g.labels[v]] = x[v];
  return scores;
}

std::pair<std::map<std::string, double>, std::map<std::string, double>> hits_dense(
    const DirectedGraph& g, std::size_t iterations) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<double>> adjacency(n, std::vector<double>(n, 0.0));
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : g.out[u]) adjacency[u][v] = 1.0;
  }
  auto normalize = [](std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    s = std::sqrt(s);
    if (s > 0.0) {
      for (double& x : v) x /= s;
    }
  };
  std::vector<double> hub(n, 1.0), auth(n, 1.0);
  normalize(hub);
  normalize(auth);
  for (std::size_t it = 0; it < iterations; ++it) {
    std::vector<double> a(n, 0.0), h(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t u = 0; u < n; ++u) a[v] += adjacency[u][v] * hub[u];
    }
    normalize(a);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) h[u] += adjacency[u][v] * a[v];
    }
    normalize(h);
    auth = std::move(a);
    hub = std::move(h);
  }
  std::map<std::string, double> hub_scores, auth_scores;
  for (std::size_t v = 0; v < n; ++v) {
    hub_scores[g.labels[v]] = hub[v];
    auth_scores[g.labels[v]] = auth[v];
  }
  return {hub_scores, auth_scores};
}

double modularity_direct(const UndirectedGraph& g,
                         const std::vector<std::vector<NodeId>>& partition) {
  const double m = static_cast<double>(g.edge_count());
  if (m == 0.0) return 0.0;
  double q = 0.0;
  for (const std::vector<NodeId>& nodes : partition) {
    std::set<NodeId> members(nodes.begin(), nodes.end());
    double internal = 0.0, degree = 0.0;
    for (NodeId u : members) degree += static_cast<double>(g.adj[u].size());
    for (const Edge& e : g.edges()) {
      if (members.count(e.first) && members.count(e.second)) internal += 1.0;
    }
    q += internal / m - (degree / (2.0 * m)) * (degree / (2.0 * m));
  }
  return q;
}

std::pair<double, double> mean_variance(const std::vector<double>& values) {
  long double mean = 0.0L;
  for (double x : values) mean += x;
  mean /= static_cast<long double>(values.size());
  long double var = 0.0L;
  for (double x : values) var += (x - mean) * (x - mean);
  var /= static_cast<long double>(values.size());
  return {static_cast<double>(mean), static_cast<double>(var)};
}

}  // namespace kgevo::reference
