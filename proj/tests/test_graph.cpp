#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "stabpoly/graph.hpp"
#include "stabpoly/graph_io.hpp"

using namespace stabpoly;

TEST_CASE("basic graph operations") {
  Graph g = graphs::cycle(5);
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 5);
  CHECK(g.adjacent(0, 4));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.is_stable(singleton(0) | singleton(2)));
  CHECK(g.is_clique(singleton(0) | singleton(1)));
  g.remove_edge(0, 4);
  CHECK(g.edge_count() == 4);
  CHECK_THROWS_AS(g.add_edge(1, 1), DomainError);
  CHECK_THROWS_AS(g.add_edge(0, 7), DomainError);
  CHECK(graphs::complete(4).edge_count() == 6);
  const int parts[] = {1, 2, 3};
  CHECK(graphs::complete_multipartite(parts).edge_count() == 11);
  CHECK(complement(graphs::complete(4)).edge_count() == 0);
}

TEST_CASE("induced subgraphs and components") {
  const Graph p = graphs::path(6);
  const Graph h = induced_subgraph(p, singleton(0) | singleton(1) | singleton(3) | singleton(4));
  CHECK(h.order() == 4);
  CHECK(h.edge_count() == 2);
  CHECK_FALSE(is_connected(h));
  CHECK(connected_components(h).size() == 2);
  CHECK(delete_vertices(p, singleton(5)).edge_count() == 4);
  CHECK(disjoint_union(p, p).order() == 12);
  CHECK(join(graphs::edgeless(2), graphs::edgeless(3)).edge_count() == 6);
}

TEST_CASE("labels survive induced subgraphs") {
  Graph g = graphs::path(4);
  g.set_labels({4, 3, 2, 1});
  CHECK(g.vertex_with_label(2) == 2);
  const int wanted[] = {3, 1};
  CHECK(g.vertices_with_labels(wanted) == (singleton(1) | singleton(3)));
  const Graph h = induced_subgraph(g, singleton(1) | singleton(2));
  CHECK(h.labels() == std::vector<int>{2, 1});
}

TEST_CASE("canonical form matches brute-force isomorphism") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + trial % 6;
    const Graph a = oracle::random_graph(rng, n, 0.45);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph b = permute(a, perm);
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(is_isomorphic(a, b));
    const Graph c = oracle::random_graph(rng, n, 0.45);
    CHECK(is_isomorphic(a, c) == oracle::isomorphic(a, c));
    CHECK(canonical_graph(a).same_edges(permute(a, canonical_labeling(a))));
  }
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(11);
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(to_graph6(graphs::complete(2)) == "A_");
  CHECK(from_graph6(">>graph6<<Dhc\n").same_edges(from_graph6("Dhc")));
  for (int n : {1, 5, 6, 7, 12, 31, 32}) {
    const Graph g = oracle::random_graph(rng, n, 0.3);
    CHECK(from_graph6(to_graph6(g)).same_edges(g));
  }
  CHECK_THROWS_AS(from_graph6(""), DomainError);
  CHECK_THROWS_AS(from_graph6("D~~~~~~~"), DomainError);
  CHECK_THROWS_AS(from_graph6("A!"), DomainError);
}

TEST_CASE("JSON graphs") {
  Graph g = graphs::cycle(5);
  g.set_labels({1, 2, 3, 4, 5});
  const auto j = to_json(g);
  const Graph back = graph_from_json(j);
  CHECK(back.same_edges(g));
  CHECK(back.labels() == g.labels());
  CHECK(parse_graph(j.dump()).same_edges(g));
  CHECK(parse_graph("Dhc").same_edges(from_graph6("Dhc")));
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n": 3, "edges": [[0, 3]]})")), DomainError);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n": 3, "edges": [[1, 1]]})")), DomainError);
}
