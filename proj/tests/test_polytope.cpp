#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "stabpoly/double_description.hpp"
#include "stabpoly/graph_io.hpp"
#include "stabpoly/lp.hpp"
#include "stabpoly/polytope.hpp"
#include "stabpoly/recognition.hpp"
#include "stabpoly/system_io.hpp"

using namespace stabpoly;

TEST_CASE("rationals") {
  CHECK(parse_rational("-6/4") == make_rational(-3, 2));
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK(to_string(make_rational(-1, 3)) == "-1/3");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  RationalVector v(3);
  v << make_rational(1, 4), make_rational(1, 6), 1;
  CHECK(common_denominator(v) == 12);
}

TEST_CASE("exact simplex") {
  RationalMatrix a(2, 2);
  a << 1, 1, 1, 3;
  RationalVector b(2), c(2);
  b << 4, 6;
  c << 1, 2;
  const LPSolution s = maximize(c, a, b);
  REQUIRE(s.status == LPStatus::Optimal);
  CHECK(s.value == 5);
  CHECK(s.x(0) == 3);
  CHECK(s.x(1) == 1);
  RationalMatrix u(1, 2);
  u << 1, -1;
  RationalVector ub(1);
  ub << 1;
  CHECK(maximize(c, u, ub).status == LPStatus::Unbounded);
  RationalVector neg(1);
  neg << -1;
  RationalMatrix one(1, 2);
  one << 1, 1;
  CHECK_FALSE(feasible(one, neg));
  CHECK(feasible(one, ub));
}

TEST_CASE("double description on the cube cone") {
  // Homogenized unit square: rows for x >= 0, y >= 0, x <= t, y <= t.
  IntegerRows a(4, 3);
  a << 1, 0, 0, 0, 1, 0, -1, 0, 1, 0, -1, 1;
  const IntegerRows rays = extreme_rays(a);
  CHECK(rays.rows() == 4);
  for (Eigen::Index i = 0; i < rays.rows(); ++i) {
    CHECK(rays(i, 2) == 1);
    CHECK(((a * rays.row(i).transpose()).array() >= 0).all());
  }
  DDOptions tight;
  tight.ray_cap = 2;
  CHECK_THROWS_AS(extreme_rays(a, tight), BudgetExceeded);
}

TEST_CASE("C5 has eleven rows") {
  const LinearSystem s = stab_facets(graphs::cycle(5));
  CHECK(s.size() == 11);
  const auto phi = full_facets(s);
  REQUIRE(phi.size() == 1);
  CHECK(phi[0].rhs == 1);
  CHECK(phi[0].coeffs(0) == make_rational(1, 2));
  CHECK(oracle::check_stab_system(graphs::cycle(5), s).empty());
}

TEST_CASE("hull agrees with the vertex oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 5;
    const Graph g = oracle::random_graph(rng, n, 0.45);
    const LinearSystem s = stab_facets(g);
    CHECK(oracle::check_stab_system(g, s) == "");
    HullOptions slow;
    slow.method = HullMethod::AllStableSets;
    CHECK(stab_facets(g, slow).same_rows(s));
    if (n <= 6) {
      for (const Inequality& row : s.rows) CHECK(is_facet_of(g, row, all_stable_sets(g)));
    }
  }
}

TEST_CASE("perfect graphs need only clique rows") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_triangle_free(rng, 3 + trial % 6, 0.5);
    if (!bipartition(g)) continue;
    CHECK(stab_facets(g).same_rows(clique_system(g)));
  }
}

TEST_CASE("facet-inducing certificates") {
  const Graph c5 = graphs::cycle(5);
  const auto cert = is_facet_inducing(c5);
  REQUIRE(cert);
  CHECK(verify_certificate(c5, *cert).empty());
  FacetCertificate broken = *cert;
  broken.rows[0] = broken.rows[1];
  CHECK_FALSE(verify_certificate(c5, broken).empty());
  CHECK_FALSE(is_facet_inducing(graphs::path(5)));
  CHECK(is_facet_inducing(graphs::complete(2)));
  const Graph wagner = from_graph6("G@Umf?");
  const auto w = is_facet_inducing(wagner);
  REQUIRE(w);
  CHECK(verify_certificate(wagner, *w).empty());
  CHECK(check_mahjoub(c5, full_facets(c5)[0]));
  CHECK(check_degree2_tightset(c5, full_facets(c5)[0]));
}

TEST_CASE("clique cutsets agree with brute force") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_graph(rng, 3 + trial % 6, 0.4);
    if (!is_connected(g)) continue;
    const auto got = has_clique_cutset(g);
    CHECK(got.has_value() == oracle::clique_cutset(g).has_value());
    if (got) {
      CHECK(g.is_clique(*got));
      CHECK_FALSE(is_connected(delete_vertices(g, *got)));
    }
  }
}

TEST_CASE("inequality normal forms and JSON") {
  RationalVector c(3);
  c << make_rational(2, 3), make_rational(4, 3), 2;
  const Inequality row{c, 2};
  CHECK(row.primitive().coeffs(0) == 1);
  CHECK(row.primitive().rhs == 3);
  CHECK(row.normalized().rhs == 1);
  CHECK(row.normalized().coeffs(2) == 1);
  CHECK(row.is_full());
  CHECK(inequality_from_json(to_json(row)) == row);
  const LinearSystem s = stab_facets(graphs::cycle(5));
  CHECK(system_from_json(to_json(s)).same_rows(s));
  RationalVector x(2);
  x << make_rational(1, 2), -3;
  CHECK(vector_from_json(to_json(x)) == x);
}
