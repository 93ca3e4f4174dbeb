#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "stabpoly/modular.hpp"

using namespace stabpoly;

TEST_CASE("modules agree with subset enumeration") {
  std::mt19937_64 rng(13);
  int primes = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const int n = 3 + trial % 6;
    const Graph g = oracle::random_graph(rng, n, 0.5);
    const auto want = oracle::maximal_homogeneous_sets(g);
    const ModuleReport r = find_modules(g);
    CHECK(r.maximal_homogeneous_sets == want);
    CHECK(r.is_prime == want.empty());
    CHECK(is_prime(g) == want.empty());
    primes += want.empty();
    for (const auto& s : oracle::subsets(n)) CHECK(is_module(g, oracle::bits(s)) == oracle::module(g, s));
  }
  CHECK(primes > 0);
}

TEST_CASE("module closure is the smallest module") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, 6, 0.5);
    const VertexSet seed = singleton(0) | singleton(1 + trial % 5);
    const VertexSet m = module_closure(g, seed);
    CHECK(is_module(g, m));
    for (const auto& s : oracle::subsets(6))
      if ((oracle::bits(s) & seed) == seed && oracle::module(g, s)) CHECK((oracle::bits(s) & m) == m);
  }
}

TEST_CASE("bi-modules agree with brute force") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + trial % 4;
    const Graph g = oracle::random_triangle_free(rng, n, 0.6);
    std::vector<std::pair<VertexSet, VertexSet>> want;
    for (const auto& a : oracle::subsets(n))
      for (const auto& b : oracle::subsets(n)) {
        const VertexSet x = oracle::bits(a), y = oracle::bits(b);
        if (x & y || !x || !y || lowest(x) > lowest(y)) continue;
        if (oracle::bimodule(g, a, b)) want.push_back({x, y});
      }
    std::sort(want.begin(), want.end());
    std::vector<std::pair<VertexSet, VertexSet>> got;
    for (const BiModulePair& p : enumerate_bimodules(g)) {
      got.push_back({p.h1, p.h2});
      CHECK(is_bimodule(g, p.h1, p.h2));
    }
    CHECK(got == want);
  }
}

TEST_CASE("substitution") {
  const Substitution s = substitute(graphs::cycle(5), 2, graphs::edgeless(2));
  CHECK(s.graph.order() == 6);
  CHECK(s.graph.edge_count() == 3 + 4);
  CHECK(s.from_first[2] == -1);
  CHECK(s.inserted() == (singleton(4) | singleton(5)));
  CHECK(is_module(s.graph, s.inserted()));
  CHECK_FALSE(is_prime(s.graph));
  CHECK_THROWS_AS(substitute(graphs::cycle(5), 5, graphs::edgeless(2)), DomainError);
}
