#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kgevo/store.hpp"

namespace kgevo {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;  // normalized u < v for undirected edges

/// Simple undirected graph over dense node ids. Node labels are sorted so
/// that ids (and every id-based tie-break) are stable across runs.
struct UndirectedGraph {
  std::vector<std::string> labels;
  std::vector<std::vector<NodeId>> adj;  // sorted neighbor lists, no self-loops

  std::size_t node_count() const { return labels.size(); }
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;  // sorted (u, v) pairs with u < v

  bool has_edge(NodeId u, NodeId v) const;
  void add_edge(NodeId u, NodeId v);
  void remove_edge(NodeId u, NodeId v);

  /// Connected components, each sorted, ordered by smallest member.
  std::vector<std::vector<NodeId>> components() const;

  static UndirectedGraph from_labels(std::vector<std::string> sorted_labels);
};

struct DirectedGraph {
  std::vector<std::string> labels;
  std::vector<std::vector<NodeId>> out;  // sorted successor lists
  std::vector<std::vector<NodeId>> in;   // sorted predecessor lists

  std::size_t node_count() const { return labels.size(); }
  std::size_t edge_count() const;

  UndirectedGraph undirected() const;  // self-loops dropped
};

struct ProjectionConfig {
  bool include_rdf_type = false;
  std::string type_predicate = iri::rdf_type;
  /// When set, only triples with these predicate IRIs contribute.
  std::optional<std::set<std::string>> predicate_allowlist;
};

/// Undirected projection of a snapshot: resources become nodes, each
/// resource-to-resource triple one edge. Subjects of literal-valued (and
/// skipped rdf:type) triples still appear as nodes; literals never do.
UndirectedGraph project(const Snapshot& snapshot, const ProjectionConfig& cfg = {});

struct DirectedConfig {
  bool include_rdf_type = true;
  std::string type_predicate = iri::rdf_type;
  std::optional<std::set<std::string>> predicate_allowlist;
};

/// Directed graph with edges subject -> object over non-literal triples.
DirectedGraph build_directed(const Snapshot& snapshot, const DirectedConfig& cfg = {});

}  // namespace kgevo
