#pragma once

// Shared fixture builders for the test suites.

#include <algorithm>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "kgevo/graph.hpp"
#include "kgevo/store.hpp"

namespace kgevo::testing {

inline Term ex(const std::string& local) { return Term::iri("http://ex.org/" + local); }

inline Triple triple(const std::string& s, const std::string& p, const std::string& o) {
  return {ex(s), ex(p), ex(o)};
}

inline Triple literal_triple(const std::string& s, const std::string& p, const std::string& lex) {
  return {ex(s), ex(p), Term::literal(lex)};
}

// Random IRI-object triples over small subject/predicate/object pools.
inline std::vector<Triple> random_triples(std::mt19937& rng, std::size_t count,
                                          std::size_t subjects = 50, std::size_t predicates = 8,
                                          std::size_t objects = 60) {
  std::uniform_int_distribution<std::size_t> s(0, subjects - 1), p(0, predicates - 1),
      o(0, objects - 1);
  std::vector<Triple> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(triple("s" + std::to_string(s(rng)), "p" + std::to_string(p(rng)),
                         "o" + std::to_string(o(rng))));
  }
  sort_unique(out);
  return out;
}

inline Snapshot snapshot_of(std::vector<Triple> triples) {
  return Snapshot::from_triples(std::move(triples), {"2020-01-01T00:00:00Z", "test", ""});
}

// Zero-padded so lexicographic label order matches numeric node order.
inline std::string node_name(std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "n%04zu", i);
  return buf;
}

// Undirected graph straight from an edge list over n nodes.
inline UndirectedGraph graph_of(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(node_name(i));
  UndirectedGraph g = UndirectedGraph::from_labels(labels);
  for (const Edge& e : edges) g.add_edge(e.first, e.second);
  return g;
}

inline DirectedGraph digraph_of(std::size_t n, const std::vector<Edge>& edges) {
  DirectedGraph g;
  for (std::size_t i = 0; i < n; ++i) g.labels.push_back(node_name(i));
  g.out.resize(n);
  g.in.resize(n);
  for (const Edge& e : edges) {
    g.out[e.first].push_back(e.second);
    g.in[e.second].push_back(e.first);
  }
  for (auto& v : g.out) std::sort(v.begin(), v.end());
  for (auto& v : g.in) std::sort(v.begin(), v.end());
  return g;
}

inline UndirectedGraph random_graph(std::mt19937& rng, std::size_t n, double edge_probability) {
  std::vector<Edge> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng) < edge_probability) edges.emplace_back(u, v);
    }
  }
  return graph_of(n, edges);
}

}  // namespace kgevo::testing
