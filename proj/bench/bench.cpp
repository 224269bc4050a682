// Benchmark: OpenMP kernels against their serial reference implementations.
//
//   kgevo_bench [nodes] [edge-degree]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kgevo/community.hpp"
#include "kgevo/metrics.hpp"
#include "reference.hpp"

using namespace kgevo;

namespace {

template <typename F>
double time_seconds(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

UndirectedGraph random_graph(std::mt19937& rng, std::size_t n, std::size_t mean_degree) {
  std::vector<std::string> labels;
  char buf[16];
  for (std::size_t i = 0; i < n; ++i) {
    std::snprintf(buf, sizeof buf, "n%06zu", i);
    labels.push_back(buf);
  }
  UndirectedGraph g = UndirectedGraph::from_labels(std::move(labels));
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
  for (std::size_t e = 0; e < n * mean_degree / 2; ++e) {
    NodeId u = pick(rng), v = pick(rng);
    if (u != v) g.add_edge(u, v);
  }
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 600;
  std::size_t degree = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 6;

  std::mt19937 rng(1);
  UndirectedGraph g = random_graph(rng, n, degree);
  std::printf("graph: %zu nodes, %zu edges\n", g.node_count(), g.edge_count());
#ifdef _OPENMP
  std::printf("openmp threads: %d\n\n", omp_get_max_threads());
#else
  std::printf("built without openmp\n\n");
#endif

  std::vector<double> parallel_bc, serial_bc;
  double t_parallel = time_seconds([&] { parallel_bc = edge_betweenness(g); });
  double t_serial = time_seconds([&] { serial_bc = reference::edge_betweenness_serial(g); });
  double max_gap = 0.0;
  for (std::size_t i = 0; i < parallel_bc.size(); ++i)
    max_gap = std::max(max_gap, std::abs(parallel_bc[i] - serial_bc[i]));
  std::printf("edge betweenness   parallel %8.3fs   serial %8.3fs   speedup %.2fx   max |delta| %.2e\n",
              t_parallel, t_serial, t_serial / t_parallel, max_gap);

  std::vector<int> parallel_ecc, serial_ecc;
  double t_ecc_par = time_seconds([&] { parallel_ecc = eccentricities(g); });
  double t_ecc_ser = time_seconds([&] { serial_ecc = reference::eccentricities_serial(g); });
  std::printf("eccentricities     parallel %8.3fs   serial %8.3fs   speedup %.2fx   equal %s\n",
              t_ecc_par, t_ecc_ser, t_ecc_ser / t_ecc_par,
              parallel_ecc == serial_ecc ? "yes" : "NO");

  return 0;
}
