#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "stabpoly/separation.hpp"
#include "stabpoly/verify.hpp"

using namespace stabpoly;

TEST_CASE("membership oracle against the hull") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_graph(rng, 3 + trial % 4, 0.5);
    const LinearSystem s = stab_facets(g);
    for (int k = 0; k < 10; ++k) {
      const RationalVector y = random_query_point(rng, g);
      CHECK(membership_oracle(g, y) == s.satisfied_by(y));
    }
  }
}

TEST_CASE("separation agrees with membership") {
  const Catalog& catalog = fixture::small_catalog();
  std::mt19937_64 rng(67);
  int violated = 0, inside = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = random_p6paw_free_graph(rng, 9);
    if (g.order() > 9) continue;
    const LinearSystem stab = stab_facets(g);
    const Separator sep(g, catalog);
    for (int k = 0; k < 20; ++k) {
      const RationalVector y = random_query_point(rng, g);
      const SeparationResult r = sep.separate(y);
      CHECK(r.violated() == !membership_oracle(g, y));
      if (r.violated()) {
        ++violated;
        REQUIRE(r.row);
        CHECK(r.amount > 0);
        CHECK(r.amount == r.row->violation(y));
        CHECK(r.primitive_amount == r.row->primitive().violation(y));
        CHECK(stab.contains(r.row->primitive()));
      } else {
        ++inside;
      }
    }
  }
  CHECK(violated > 0);
  CHECK(inside > 0);
}

TEST_CASE("separation stages") {
  const Catalog& catalog = fixture::small_catalog();
  const Graph c5 = graphs::cycle(5);
  RationalVector y = RationalVector::Constant(5, make_rational(2, 5));
  CHECK_FALSE(separate(c5, y, catalog).violated());
  y = RationalVector::Constant(5, make_rational(9, 20));
  const SeparationResult odd = separate(c5, y, catalog);
  REQUIRE(odd.violated());
  CHECK(odd.row->is_full());
  y(0) = -1;
  const SeparationResult neg = separate(c5, y, catalog);
  REQUIRE(neg.violated());
  CHECK(neg.row->kind == Inequality::Kind::Nonnegativity);
  y = RationalVector::Constant(5, make_rational(1, 5));
  y(1) = 1;
  const SeparationResult edge = separate(c5, y, catalog);
  REQUIRE(edge.violated());
  CHECK(edge.row->support() != c5.vertices());
  CHECK_THROWS_AS(separate(c5, RationalVector::Zero(4), catalog), DomainError);
}
