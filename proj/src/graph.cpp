#include "kgevo/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace kgevo {

namespace {

void insert_sorted(std::vector<NodeId>& v, NodeId x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}

void erase_sorted(std::vector<NodeId>& v, NodeId x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) v.erase(it);
}

// Collects node labels and label-pair edges for a snapshot under a shared
// filtering rule, then freezes them into dense sorted ids.
template <typename EdgeSink>
void scan_snapshot(const Snapshot& snapshot, const std::string& type_predicate,
                   bool include_rdf_type,
                   const std::optional<std::set<std::string>>& allowlist,
                   std::set<std::string>& nodes, EdgeSink&& sink) {
  const Dictionary& dict = *snapshot.dict;
  for (const EncodedTriple& e : snapshot.triples) {
    const Term& pred = dict.decode(e.p);
    if (allowlist && !allowlist->count(pred.value)) continue;
    const Term& subj = dict.decode(e.s);
    const Term& obj = dict.decode(e.o);
    nodes.insert(subj.label());
    if (!obj.is_resource()) continue;
    if (!include_rdf_type && pred.value == type_predicate) continue;
    nodes.insert(obj.label());
    sink(subj.label(), obj.label());
  }
}

}  // namespace

std::size_t UndirectedGraph::edge_count() const {
  std::size_t deg_sum = 0;
  for (const auto& neighbors : adj) deg_sum += neighbors.size();
  return deg_sum / 2;
}

std::vector<Edge> UndirectedGraph::edges() const {
  std::vector<Edge> out;
  for (NodeId u = 0; u < adj.size(); ++u) {
    for (NodeId v : adj[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool UndirectedGraph::has_edge(NodeId u, NodeId v) const {
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

void UndirectedGraph::add_edge(NodeId u, NodeId v) {
  if (u == v) return;
  insert_sorted(adj[u], v);
  insert_sorted(adj[v], u);
}

void UndirectedGraph::remove_edge(NodeId u, NodeId v) {
  erase_sorted(adj[u], v);
  erase_sorted(adj[v], u);
}

std::vector<std::vector<NodeId>> UndirectedGraph::components() const {
  std::vector<std::vector<NodeId>> comps;
  std::vector<bool> seen(node_count(), false);
  for (NodeId s = 0; s < node_count(); ++s) {
    if (seen[s]) continue;
    std::vector<NodeId> comp;
    std::deque<NodeId> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (NodeId v : adj[u]) {
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;  // ordered by smallest member because sources ascend
}

UndirectedGraph UndirectedGraph::from_labels(std::vector<std::string> sorted_labels) {
  UndirectedGraph g;
  g.labels = std::move(sorted_labels);
  g.adj.resize(g.labels.size());
  return g;
}

std::size_t DirectedGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& succ : out) n += succ.size();
  return n;
}

UndirectedGraph DirectedGraph::undirected() const {
  UndirectedGraph g = UndirectedGraph::from_labels(labels);
  for (NodeId u = 0; u < out.size(); ++u) {
    for (NodeId v : out[u]) g.add_edge(u, v);
  }
  return g;
}

UndirectedGraph project(const Snapshot& snapshot, const ProjectionConfig& cfg) {
  std::set<std::string> nodes;
  std::set<std::pair<std::string, std::string>> edges;
  scan_snapshot(snapshot, cfg.type_predicate, cfg.include_rdf_type, cfg.predicate_allowlist,
                nodes, [&](const std::string& s, const std::string& o) {
                  if (s == o) return;
                  edges.insert(s < o ? std::make_pair(s, o) : std::make_pair(o, s));
                });
  UndirectedGraph g = UndirectedGraph::from_labels({nodes.begin(), nodes.end()});
  auto index = [&](const std::string& label) {
    return static_cast<NodeId>(
        std::lower_bound(g.labels.begin(), g.labels.end(), label) - g.labels.begin());
  };
  for (const auto& [s, o] : edges) g.add_edge(index(s), index(o));
  return g;
}

DirectedGraph build_directed(const Snapshot& snapshot, const DirectedConfig& cfg) {
  std::set<std::string> nodes;
  std::set<std::pair<std::string, std::string>> edges;
  scan_snapshot(snapshot, cfg.type_predicate, cfg.include_rdf_type, cfg.predicate_allowlist,
                nodes, [&](const std::string& s, const std::string& o) { edges.emplace(s, o); });
  DirectedGraph g;
  g.labels.assign(nodes.begin(), nodes.end());
  g.out.resize(g.labels.size());
  g.in.resize(g.labels.size());
  auto index = [&](const std::string& label) {
    return static_cast<NodeId>(
        std::lower_bound(g.labels.begin(), g.labels.end(), label) - g.labels.begin());
  };
  for (const auto& [s, o] : edges) {
    NodeId u = index(s), v = index(o);
    g.out[u].push_back(v);
    g.in[v].push_back(u);
  }
  for (auto& succ : g.out) std::sort(succ.begin(), succ.end());
  for (auto& pred : g.in) std::sort(pred.begin(), pred.end());
  return g;
}

}  // namespace kgevo
