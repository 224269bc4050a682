#include "kgevo/community.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kgevo {

namespace {

// CSR-ish edge id lookup: eid[u][k] is the edge id of {u, adj[u][k]}.
struct EdgeIndex {
  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> eid;

  explicit EdgeIndex(const UndirectedGraph& g) {
    edges = g.edges();
    eid.resize(g.node_count());
    std::map<Edge, std::size_t> ids;
    for (std::size_t i = 0; i < edges.size(); ++i) ids[edges[i]] = i;
    for (NodeId u = 0; u < g.node_count(); ++u) {
      eid[u].resize(g.adj[u].size());
      for (std::size_t k = 0; k < g.adj[u].size(); ++k) {
        NodeId v = g.adj[u][k];
        eid[u][k] = ids[u < v ? Edge{u, v} : Edge{v, u}];
      }
    }
  }
};

// Single-source Brandes pass accumulating edge dependencies into acc.
void accumulate_from_source(const UndirectedGraph& g, const EdgeIndex& index, NodeId s,
                            std::vector<double>& acc) {
  const std::size_t n = g.node_count();
  std::vector<double> sigma(n, 0.0);
  std::vector<int> dist(n, -1);
  std::vector<double> delta(n, 0.0);
  std::vector<NodeId> order;
  order.reserve(n);

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
    for (std::size_t k = 0; k < g.adj[w].size(); ++k) {
      NodeId v = g.adj[w][k];
      if (dist[v] != dist[w] - 1) continue;
      double c = sigma[v] / sigma[w] * (1.0 + delta[w]);
      acc[index.eid[w][k]] += c;
      delta[v] += c;
    }
  }
}

}  // namespace

std::vector<double> edge_betweenness(const UndirectedGraph& g) {
  EdgeIndex index(g);
  const std::size_t m = index.edges.size();
  const int n = static_cast<int>(g.node_count());

#ifdef _OPENMP
  const int threads = std::max(1, omp_get_max_threads());
#else
  const int threads = 1;
#endif
  std::vector<std::vector<double>> partial(threads, std::vector<double>(m, 0.0));

#pragma omp parallel for schedule(static)
  for (int s = 0; s < n; ++s) {
#ifdef _OPENMP
    std::vector<double>& acc = partial[omp_get_thread_num()];
#else
    std::vector<double>& acc = partial[0];
#endif
    accumulate_from_source(g, index, static_cast<NodeId>(s), acc);
  }

  std::vector<double> result(m, 0.0);
  for (const auto& acc : partial) {
    for (std::size_t i = 0; i < m; ++i) result[i] += acc[i];
  }
  for (double& x : result) x /= 2.0;  // each unordered pair is seen from both endpoints
  return result;
}

double modularity(const UndirectedGraph& g, const std::vector<std::vector<NodeId>>& partition) {
  const double m = static_cast<double>(g.edge_count());
  if (m == 0.0) return 0.0;
  std::vector<int> community_of(g.node_count(), -1);
  for (std::size_t c = 0; c < partition.size(); ++c) {
    for (NodeId v : partition[c]) community_of[v] = static_cast<int>(c);
  }
  std::vector<double> internal(partition.size(), 0.0), degree(partition.size(), 0.0);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (community_of[u] < 0) continue;
    degree[community_of[u]] += static_cast<double>(g.adj[u].size());
    for (NodeId v : g.adj[u]) {
      if (u < v && community_of[v] == community_of[u]) internal[community_of[u]] += 1.0;
    }
  }
  double q = 0.0;
  for (std::size_t c = 0; c < partition.size(); ++c) {
    double frac = degree[c] / (2.0 * m);
    q += internal[c] / m - frac * frac;
  }
  return q;
}

CommunityResult detect_communities(const UndirectedGraph& g) {
  CommunityResult result;
  if (g.node_count() == 0) return result;

  UndirectedGraph work = g;
  std::vector<std::vector<NodeId>> partition = work.components();
  result.dendrogram.push_back({partition, modularity(g, partition)});
  std::size_t best_level = 0;

  std::size_t component_count = partition.size();
  while (work.edge_count() > 0) {
    std::vector<double> bc = edge_betweenness(work);
    std::vector<Edge> edges = work.edges();
    double max_bc = *std::max_element(bc.begin(), bc.end());
    // Values tied up to FP noise are broken by edge order; edges() is
    // already sorted by (u, v).
    std::size_t pick = 0;
    while (bc[pick] < max_bc - 1e-9) ++pick;
    work.remove_edge(edges[pick].first, edges[pick].second);

    std::vector<std::vector<NodeId>> parts = work.components();
    if (parts.size() > component_count) {
      component_count = parts.size();
      result.dendrogram.push_back({parts, modularity(g, parts)});
      if (result.dendrogram.back().q > result.dendrogram[best_level].q)
        best_level = result.dendrogram.size() - 1;
    }
  }
  result.best = result.dendrogram[best_level].communities;
  return result;
}

std::vector<Community> make_communities(const Snapshot& snapshot, const UndirectedGraph& g,
                                        const std::vector<std::vector<NodeId>>& partition) {
  std::vector<Community> out;
  out.reserve(partition.size());
  for (std::size_t c = 0; c < partition.size(); ++c) {
    Community community;
    community.id = static_cast<int>(c);
    for (NodeId v : partition[c]) community.nodes.insert(g.labels[v]);
    out.push_back(std::move(community));
  }
  std::map<std::string, std::size_t> community_of;
  for (std::size_t c = 0; c < out.size(); ++c) {
    for (const std::string& node : out[c].nodes) community_of[node] = c;
  }
  const Dictionary& dict = *snapshot.dict;
  for (const EncodedTriple& e : snapshot.triples) {
    const Term& obj = dict.decode(e.o);
    if (!obj.is_resource()) continue;
    const Term& subj = dict.decode(e.s);
    auto cs = community_of.find(subj.label());
    auto co = community_of.find(obj.label());
    if (cs != community_of.end() && co != community_of.end() && cs->second == co->second)
      out[cs->second].triples.insert(decode(dict, e).canonical());
  }
  return out;
}

}  // namespace kgevo
