#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "kgevo/perturb.hpp"

using namespace kgevo;
using namespace kgevo::testing;

namespace {

PerturbConfig cfg_of(std::size_t m, double alpha, PerturbMode mode, std::uint64_t seed) {
  PerturbConfig cfg;
  cfg.m = m;
  cfg.alpha = alpha;
  cfg.mode = mode;
  cfg.seed = seed;
  return cfg;
}

std::set<std::string> lines(const std::vector<Triple>& triples) {
  auto v = canonical_lines(triples);
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("delete mode with tiny alpha removes one triple per chosen subject") {
  std::vector<Triple> base;
  for (int i = 0; i < 8; ++i) base.push_back(triple("s" + std::to_string(i), "p", "o"));
  PerturbResult result = perturb(base, cfg_of(3, 0.01, PerturbMode::del, 5));
  CHECK(result.ground_truth.deleted.size() == 3);
  CHECK(result.ground_truth.added.empty());
  CHECK(result.snapshot.size() == 5);
}

TEST_CASE("same seed reproduces snapshot and truth exactly") {
  std::mt19937 rng(7);
  std::vector<Triple> base = random_triples(rng, 200);
  for (PerturbMode mode :
       {PerturbMode::add, PerturbMode::del, PerturbMode::update, PerturbMode::all}) {
    PerturbResult a = perturb(base, cfg_of(5, 0.4, mode, 99));
    PerturbResult b = perturb(base, cfg_of(5, 0.4, mode, 99));
    CHECK(lines(a.snapshot) == lines(b.snapshot));
    CHECK(lines(a.ground_truth.added) == lines(b.ground_truth.added));
    CHECK(lines(a.ground_truth.deleted) == lines(b.ground_truth.deleted));
    PerturbResult c = perturb(base, cfg_of(5, 0.4, mode, 100));
    CHECK(lines(a.snapshot) != lines(c.snapshot));
  }
}

TEST_CASE("ground truth is exactly the set difference, in every mode") {
  std::mt19937 rng(11);
  std::vector<Triple> base = random_triples(rng, 300, 40, 6, 80);
  for (PerturbMode mode :
       {PerturbMode::add, PerturbMode::del, PerturbMode::update, PerturbMode::all}) {
    PerturbResult result = perturb(base, cfg_of(8, 0.5, mode, 1234));
    ChangeSet recovered = diff_lines(canonical_lines(base), canonical_lines(result.snapshot));
    CHECK(lines(recovered.added) == lines(result.ground_truth.added));
    CHECK(lines(recovered.deleted) == lines(result.ground_truth.deleted));
    // added and deleted stay disjoint
    for (const Triple& t : result.ground_truth.added)
      CHECK_FALSE(lines(result.ground_truth.deleted).count(t.canonical()));
  }
}

TEST_CASE("non-selected subjects are untouched") {
  std::vector<Triple> base;
  for (int s = 0; s < 10; ++s) {
    for (int k = 0; k < 4; ++k)
      base.push_back(triple("s" + std::to_string(s), "p" + std::to_string(k), "o"));
  }
  PerturbResult result = perturb(base, cfg_of(2, 0.5, PerturbMode::all, 3));
  std::set<std::string> touched;
  for (const Triple& t : result.ground_truth.added) touched.insert(t.subject.label());
  for (const Triple& t : result.ground_truth.deleted) touched.insert(t.subject.label());
  CHECK(touched.size() <= 2);

  std::set<std::string> base_lines = lines(base);
  for (const Triple& t : base) {
    if (!touched.count(t.subject.label()))
      CHECK(lines(result.snapshot).count(t.canonical()) == 1);
  }
}

TEST_CASE("update mode deletes and re-adds with synthetic objects") {
  std::vector<Triple> base{triple("s", "p", "o1"), triple("s", "p", "o2")};
  PerturbResult result = perturb(base, cfg_of(1, 0.5, PerturbMode::update, 21));
  CHECK(result.ground_truth.deleted.size() == 1);
  REQUIRE(result.ground_truth.added.size() == 1);
  CHECK(result.ground_truth.added[0].object.value.rfind("urn:kgevo:synth:", 0) == 0);
  CHECK(result.ground_truth.added[0].subject.label() == "http://ex.org/s");
}

TEST_CASE("too few subjects") {
  std::vector<Triple> base{triple("s", "p", "o")};
  CHECK_THROWS_AS(perturb(base, cfg_of(2, 0.5, PerturbMode::del, 1)), Error);
  CHECK_THROWS_AS(perturb(base, cfg_of(1, 1.5, PerturbMode::del, 1)), Error);
}

TEST_CASE("controlled series: empty plan, single step, missing triple") {
  std::vector<Triple> base{triple("a", "p", "b"), triple("a", "p", "c"), triple("b", "p", "c"),
                           triple("c", "p", "d")};
  CHECK(controlled_series(base, {}).empty());

  std::vector<Triple> step{triple("a", "p", "b"), triple("b", "p", "c"), triple("c", "p", "d")};
  std::vector<PerturbResult> steps = controlled_series(base, {step});
  REQUIRE(steps.size() == 1);
  CHECK(lines(steps[0].ground_truth.deleted) == lines(step));
  CHECK(steps[0].ground_truth.added.empty());
  CHECK(lines(steps[0].snapshot) == std::set<std::string>{triple("a", "p", "c").canonical()});

  CHECK_THROWS_AS(controlled_series(base, {{triple("x", "y", "z")}}), Error);
}

TEST_CASE("a 4-step removal series materializes each intermediate state") {
  std::mt19937 rng(13);
  std::vector<Triple> base = random_triples(rng, 120, 25, 4, 30);
  std::vector<std::vector<Triple>> plan;
  std::vector<Triple> pool = base;
  for (int step = 0; step < 4; ++step) {
    std::vector<Triple> removals(pool.begin() + step * 10, pool.begin() + step * 10 + 10);
    plan.push_back(removals);
  }
  std::vector<PerturbResult> steps = controlled_series(base, plan);
  REQUIRE(steps.size() == 4);

  // chained set-algebra oracle
  std::set<std::string> expected = lines(base);
  for (std::size_t i = 0; i < plan.size(); ++i) {
    for (const Triple& t : plan[i]) expected.erase(t.canonical());
    CHECK(lines(steps[i].snapshot) == expected);
  }
}

TEST_CASE("planned triple already removed in an earlier step is an error") {
  std::vector<Triple> base{triple("a", "p", "b"), triple("a", "p", "c")};
  std::vector<std::vector<Triple>> plan{{triple("a", "p", "b")}, {triple("a", "p", "b")}};
  CHECK_THROWS_AS(controlled_series(base, plan), Error);
}
