#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "stabpoly/composition.hpp"
#include "stabpoly/modular.hpp"
#include "stabpoly/recognition.hpp"
#include "stabpoly/verify.hpp"

using namespace stabpoly;

TEST_CASE("Chvatal substitution matches a direct hull") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g1 = oracle::random_graph(rng, 2 + trial % 4, 0.5);
    const Graph g2 = oracle::random_graph(rng, 1 + trial % 3, 0.5);
    const int v = static_cast<int>(rng() % g1.order());
    const LinearSystem direct = stab_facets(substitute(g1, v, g2).graph);
    const LinearSystem composed = chvatal_substitute(stab_facets(g1), v, stab_facets(g2));
    CHECK(composed.same_rows(direct));
  }
  const LinearSystem c5 = stab_facets(graphs::cycle(5));
  CHECK_THROWS_AS(chvatal_substitute(c5, 5, c5), DomainError);
}

TEST_CASE("redundant rows are removed") {
  LinearSystem s = clique_system(graphs::path(3));
  RationalVector c(3);
  c << 1, 1, 1;
  s.rows.push_back(Inequality{c, 2});
  s.rows.push_back(s.rows.back());
  CHECK(remove_redundant_rows(s).same_rows(clique_system(graphs::path(3))));
}

TEST_CASE("induced embeddings agree with brute force") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(rng, 7, 0.45);
    const Graph f = trial % 2 ? graphs::path(3) : graphs::cycle(4);
    std::set<VertexSet> want;
    for (const auto& s : oracle::subsets(g.order()))
      if (s.size() == static_cast<std::size_t>(f.order()) && oracle::isomorphic(induced_subgraph(g, oracle::bits(s)), f))
        want.insert(oracle::bits(s));
    std::set<VertexSet> got;
    for (const auto& e : induced_embeddings(g, f)) {
      VertexSet image = 0;
      for (int i = 0; i < f.order(); ++i) {
        image |= singleton(e[i]);
        for (int j = i + 1; j < f.order(); ++j) CHECK(g.adjacent(e[i], e[j]) == f.adjacent(i, j));
      }
      got.insert(image);
    }
    CHECK(got == want);
  }
}

TEST_CASE("clique-join extensions") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(rng, 8, 0.5);
    const Graph f = graphs::complete(2);
    for (const CliqueJoinExtension& ext : enumerate_clique_join_extensions(g, f)) {
      CHECK(g.is_clique(ext.clique));
      VertexSet common = g.vertices() & ~ext.core;
      for_each_vertex(ext.core, [&](int v) { common &= g.neighbors(v); });
      CHECK((ext.clique & ~common) == 0);
      for_each_vertex(common & ~ext.clique, [&](int v) { CHECK_FALSE(g.is_clique(ext.clique | singleton(v))); });
    }
  }
}

TEST_CASE("defining system of small (P6,paw)-free graphs") {
  const Catalog& catalog = fixture::small_catalog();
  std::mt19937_64 rng(59);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_p6paw_free_graph(rng, 9);
    if (g.order() > 9) continue;
    CHECK(defining_system_p6paw(g, catalog).same_rows(stab_facets(g)));
    ++checked;
  }
  CHECK(checked > 10);
  CHECK(defining_system_p6paw(from_graph6("G@Umf?"), catalog).same_rows(stab_facets(from_graph6("G@Umf?"))));
  CHECK_THROWS_AS(defining_system_p6paw(graphs::path(6), catalog), DomainError);
}

TEST_CASE("closure of a small catalog") {
  Catalog catalog;
  for (const CatalogEntry& e : fixture::small_catalog())
    if (e.graph.order() <= 9) catalog.push_back(e);
  const ClosureReport r = closure_check(catalog);
  CHECK(r.closed);
  CHECK(r.classes_visited > 0);
  Catalog partial(catalog.begin(), catalog.begin() + 2);
  partial.push_back(catalog.back());
  CHECK_FALSE(closure_check(partial).closed);
}
