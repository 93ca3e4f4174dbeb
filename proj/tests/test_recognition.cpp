#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "stabpoly/modular.hpp"
#include "stabpoly/recognition.hpp"

using namespace stabpoly;

TEST_CASE("forbidden subgraphs agree with brute force") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + trial % 6;
    const Graph g = trial % 2 ? oracle::random_graph(rng, n, 0.35) : oracle::random_triangle_free(rng, n, 0.5);
    CHECK(is_triangle_free(g) == !oracle::has_triangle(g));
    CHECK(is_paw_free(g) == !oracle::has_paw(g));
    for (int k : {3, 5, 6}) {
      if (k > n) continue;
      const auto path = find_induced_path(g, k);
      CHECK(path.has_value() == oracle::has_induced_path(g, k));
      if (path) {
        CHECK(static_cast<int>(path->size()) == k);
        for (int i = 0; i < k; ++i)
          for (int j = i + 1; j < k; ++j) CHECK(g.adjacent((*path)[i], (*path)[j]) == (j == i + 1));
      }
    }
    if (const auto paw = find_paw(g)) {
      const auto [a, b, c, d] = *paw;
      CHECK((g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c) && g.adjacent(a, d)));
      CHECK_FALSE((g.adjacent(b, d) || g.adjacent(c, d)));
    }
  }
}

TEST_CASE("known graphs") {
  CHECK(is_p6_triangle_free(graphs::cycle(5)));
  CHECK_FALSE(is_p6_triangle_free(graphs::path(6)));
  CHECK_FALSE(is_p6_triangle_free(graphs::cycle(7)));
  CHECK(is_p6_triangle_free(graphs::cycle(6)));
  CHECK(is_p6_paw_free(graphs::complete(5)));
  CHECK_FALSE(is_p6_triangle_free(graphs::complete(3)));
  const int parts[] = {2, 2, 3};
  const Graph k = graphs::complete_multipartite(parts);
  CHECK(is_complete_multipartite(k));
  CHECK(complete_multipartite_parts(k)->size() == 3);
  CHECK_FALSE(is_complete_multipartite(graphs::path(4)));
  CHECK(bipartition(graphs::cycle(6)).has_value());
  CHECK_FALSE(bipartition(graphs::cycle(5)).has_value());
}

TEST_CASE("paw-free components are triangle-free or complete multipartite") {
  std::mt19937_64 rng(5);
  int multipartite = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 7;
    Graph g = oracle::random_graph(rng, n, 0.5);
    if (!is_paw_free(g)) {
      CHECK_THROWS_AS(olariu_decompose(g), DomainError);
      continue;
    }
    VertexSet covered = 0;
    for (const ComponentTag& t : olariu_decompose(g)) {
      covered |= t.component;
      const Graph c = induced_subgraph(g, t.component);
      CHECK(is_connected(c));
      if (t.kind == ComponentTag::Kind::TriangleFree) {
        CHECK_FALSE(oracle::has_triangle(c));
      } else {
        ++multipartite;
        VertexSet parts = 0;
        for (VertexSet p : t.parts) {
          CHECK(g.is_stable(p));
          parts |= p;
        }
        CHECK(parts == t.component);
        for (std::size_t i = 0; i < t.parts.size(); ++i)
          for (std::size_t j = i + 1; j < t.parts.size(); ++j)
            for_each_vertex(t.parts[i], [&](int u) {
              for_each_vertex(t.parts[j], [&](int v) { CHECK(g.adjacent(u, v)); });
            });
      }
    }
    CHECK(covered == g.vertices());
  }
  CHECK(multipartite > 0);
}

TEST_CASE("ferries") {
  const Ferry f = build_ferry({3, 2, true, true, false});
  CHECK(f.graph.order() == 10);
  CHECK_FALSE(f.degenerate);
  CHECK(f.graph.is_stable(singleton(f.x[1]) | singleton(f.x[2]) | singleton(f.x[3]) | singleton(f.x[0])));
  CHECK(f.graph.adjacent(f.x[1], f.y[2]));
  CHECK_FALSE(f.graph.adjacent(f.x[1], f.y[1]));
  CHECK(f.graph.degree(f.z[0]) == 2);
  CHECK(f.graph.adjacent(f.x[0], f.y[3]));
  CHECK_FALSE(f.graph.adjacent(f.x[0], f.y[0]));
  CHECK(build_ferry({3, 2, true, true, true}).graph.adjacent(f.x[0], f.y[0]));
  CHECK(build_ferry({1, 0, false, false, false}).degenerate);
  CHECK_THROWS_AS(build_ferry({2, 3, false, false, false}), DomainError);
  for (int m = 2; m <= 4; ++m)
    for (int l = 0; l <= m; ++l) CHECK(is_p6_triangle_free(build_ferry({m, l, true, true, false}).graph));
}

TEST_CASE("co-matched bipartite") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  CHECK(is_co_matched_bipartite(g));
  CHECK(is_co_matched_bipartite(graphs::path(4)));
  const int claw[] = {1, 3};
  CHECK_FALSE(is_co_matched_bipartite(graphs::complete_multipartite(claw)));
}
