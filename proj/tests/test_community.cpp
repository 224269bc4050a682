#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "helpers.hpp"
#include "kgevo/community.hpp"
#include "reference.hpp"

using namespace kgevo;
using namespace kgevo::testing;

namespace {

// Two k-cliques joined by a single bridge edge between node 0 and node k.
UndirectedGraph two_cliques(std::size_t k) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < k; ++u)
    for (NodeId v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  for (NodeId u = k; u < 2 * k; ++u)
    for (NodeId v = u + 1; v < 2 * k; ++v) edges.emplace_back(u, v);
  edges.emplace_back(0, static_cast<NodeId>(k));
  return graph_of(2 * k, edges);
}

// All set partitions of {0..n-1}, by restricted-growth strings.
void all_partitions(std::size_t n,
                    const std::function<void(const std::vector<std::vector<NodeId>>&)>& visit) {
  std::vector<std::size_t> assignment(n, 0);
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t groups) {
    if (i == n) {
      std::vector<std::vector<NodeId>> partition(groups);
      for (std::size_t v = 0; v < n; ++v) partition[assignment[v]].push_back(static_cast<NodeId>(v));
      visit(partition);
      return;
    }
    for (std::size_t g = 0; g <= groups; ++g) {
      assignment[i] = g;
      walk(i + 1, std::max(groups, g + 1));
    }
  };
  walk(0, 0);
}

}  // namespace

TEST_CASE("project: resource edge, literal exclusion, edge collapse") {
  Snapshot s1 = snapshot_of({triple("a", "p", "b")});
  UndirectedGraph g1 = project(s1);
  CHECK(g1.labels == std::vector<std::string>{"http://ex.org/a", "http://ex.org/b"});
  CHECK(g1.edge_count() == 1);

  Snapshot s2 = snapshot_of({literal_triple("a", "p", "lit")});
  UndirectedGraph g2 = project(s2);
  CHECK(g2.labels == std::vector<std::string>{"http://ex.org/a"});
  CHECK(g2.edge_count() == 0);

  Snapshot s3 = snapshot_of({triple("a", "p", "b"), triple("b", "q", "a")});
  UndirectedGraph g3 = project(s3);
  CHECK(g3.edge_count() == 1);
}

TEST_CASE("project: rdf:type edges are excluded by default, configurable") {
  Triple typed{ex("a"), Term::iri(iri::rdf_type), ex("T")};
  Snapshot s = snapshot_of({typed, triple("a", "p", "b")});
  UndirectedGraph by_default = project(s);
  CHECK(by_default.labels == std::vector<std::string>{"http://ex.org/a", "http://ex.org/b"});
  CHECK(by_default.edge_count() == 1);

  ProjectionConfig cfg;
  cfg.include_rdf_type = true;
  UndirectedGraph with_types = project(s, cfg);
  CHECK(with_types.node_count() == 3);
  CHECK(with_types.edge_count() == 2);
}

TEST_CASE("project: predicate allow-list restricts the projection") {
  Snapshot s = snapshot_of({triple("a", "p", "b"), triple("c", "q", "d")});
  ProjectionConfig cfg;
  cfg.predicate_allowlist = {{"http://ex.org/p"}};
  UndirectedGraph g = project(s, cfg);
  CHECK(g.labels == std::vector<std::string>{"http://ex.org/a", "http://ex.org/b"});
}

TEST_CASE("edge betweenness: single edge and path") {
  UndirectedGraph single = graph_of(2, {{0, 1}});
  CHECK(edge_betweenness(single) == std::vector<double>{1.0});

  UndirectedGraph path = graph_of(3, {{0, 1}, {1, 2}});
  std::vector<double> bc = edge_betweenness(path);
  // pairs and their shortest paths enumerated by hand: (0,1), (0,2), (1,2)
  CHECK(bc == std::vector<double>{2.0, 2.0});
}

TEST_CASE("edge betweenness: 4-cycle symmetry") {
  UndirectedGraph cycle = graph_of(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  std::vector<double> bc = edge_betweenness(cycle);
  for (double x : bc) CHECK(x == doctest::Approx(bc[0]).epsilon(1e-12));
}

TEST_CASE("edge betweenness agrees with brute-force enumeration on random graphs") {
  std::mt19937 rng(101);
  for (int round = 0; round < 25; ++round) {
    std::size_t n = 5 + static_cast<std::size_t>(rng() % 26);  // up to 30 nodes
    UndirectedGraph g = random_graph(rng, n, 0.15);
    std::vector<double> fast = edge_betweenness(g);
    std::vector<double> slow = reference::edge_betweenness_enumeration(g);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) CHECK(std::abs(fast[i] - slow[i]) <= 1e-9);
  }
}

TEST_CASE("parallel and serial Brandes agree") {
  std::mt19937 rng(103);
  UndirectedGraph g = random_graph(rng, 80, 0.06);
  std::vector<double> fast = edge_betweenness(g);
  std::vector<double> serial = reference::edge_betweenness_serial(g);
  REQUIRE(fast.size() == serial.size());
  for (std::size_t i = 0; i < fast.size(); ++i) CHECK(std::abs(fast[i] - serial[i]) <= 1e-9);
}

TEST_CASE("modularity: trivial partition scores zero") {
  std::mt19937 rng(5);
  UndirectedGraph g = random_graph(rng, 10, 0.4);
  std::vector<std::vector<NodeId>> whole{{}};
  for (NodeId v = 0; v < g.node_count(); ++v) whole[0].push_back(v);
  CHECK(modularity(g, whole) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("modularity: two separated triangles split correctly scores 0.5") {
  UndirectedGraph g = graph_of(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  std::vector<std::vector<NodeId>> split{{0, 1, 2}, {3, 4, 5}};
  CHECK(modularity(g, split) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("modularity matches the direct formula on random partitions") {
  std::mt19937 rng(7);
  for (int round = 0; round < 10; ++round) {
    UndirectedGraph g = random_graph(rng, 14, 0.3);
    std::vector<std::vector<NodeId>> partition(3);
    for (NodeId v = 0; v < g.node_count(); ++v) partition[rng() % 3].push_back(v);
    std::erase_if(partition, [](const auto& c) { return c.empty(); });
    CHECK(modularity(g, partition) ==
          doctest::Approx(reference::modularity_direct(g, partition)).epsilon(1e-12));
  }
}

TEST_CASE("detect_communities: empty graph") {
  UndirectedGraph g;
  CHECK(detect_communities(g).best.empty());
}

TEST_CASE("detect_communities recovers two 4-cliques joined by a bridge") {
  UndirectedGraph g = two_cliques(4);
  // the bridge carries every cross-clique pair: verified maximal by brute force
  std::vector<double> bc = reference::edge_betweenness_enumeration(g);
  std::vector<Edge> edges = g.edges();
  std::size_t bridge = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i] == Edge{0, 4}) bridge = i;
  }
  for (std::size_t i = 0; i < bc.size(); ++i) {
    if (i != bridge) CHECK(bc[bridge] > bc[i]);
  }

  CommunityResult result = detect_communities(g);
  REQUIRE(result.best.size() == 2);
  CHECK(result.best[0] == std::vector<NodeId>{0, 1, 2, 3});
  CHECK(result.best[1] == std::vector<NodeId>{4, 5, 6, 7});
}

TEST_CASE("detect_communities leaves a clique whole; exhaustive check at n = 5") {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < 5; ++u)
    for (NodeId v = u + 1; v < 5; ++v) edges.emplace_back(u, v);
  UndirectedGraph clique = graph_of(5, edges);

  // no partition beats the trivial one on a clique
  std::vector<std::vector<NodeId>> trivial{{0, 1, 2, 3, 4}};
  double best_q = reference::modularity_direct(clique, trivial);
  all_partitions(5, [&](const std::vector<std::vector<NodeId>>& partition) {
    CHECK(reference::modularity_direct(clique, partition) <= best_q + 1e-12);
  });

  CommunityResult result = detect_communities(clique);
  REQUIRE(result.best.size() == 1);
  CHECK(result.best[0].size() == 5);
}

TEST_CASE("detect_communities is deterministic and emits a true partition") {
  std::mt19937 rng(211);
  for (int round = 0; round < 6; ++round) {
    UndirectedGraph g = random_graph(rng, 24, 0.12);
    CommunityResult a = detect_communities(g);
    CommunityResult b = detect_communities(g);
    CHECK(a.best == b.best);

    std::vector<bool> seen(g.node_count(), false);
    for (const auto& community : a.best) {
      for (NodeId v : community) {
        CHECK_FALSE(seen[v]);
        seen[v] = true;
      }
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool x) { return x; }));
  }
}

TEST_CASE("isolated nodes become singleton communities") {
  UndirectedGraph g = graph_of(5, {{0, 1}, {0, 2}, {1, 2}});
  CommunityResult result = detect_communities(g);
  REQUIRE(result.best.size() == 3);
  CHECK(result.best[0] == std::vector<NodeId>{0, 1, 2});
  CHECK(result.best[1] == std::vector<NodeId>{3});
  CHECK(result.best[2] == std::vector<NodeId>{4});
}

TEST_CASE("make_communities carries node sets and induced triples") {
  Snapshot s = snapshot_of({triple("a", "p", "b"), triple("b", "p", "c"), triple("a", "p", "c"),
                            triple("x", "p", "y"), literal_triple("a", "name", "A")});
  UndirectedGraph g = project(s);
  CommunityResult result = detect_communities(g);
  std::vector<Community> communities = make_communities(s, g, result.best);
  REQUIRE(communities.size() == 2);
  CHECK(communities[0].nodes ==
        std::set<std::string>{"http://ex.org/a", "http://ex.org/b", "http://ex.org/c"});
  CHECK(communities[0].triples.size() == 3);  // literal triple is not induced
  CHECK(communities[1].nodes == std::set<std::string>{"http://ex.org/x", "http://ex.org/y"});
}
