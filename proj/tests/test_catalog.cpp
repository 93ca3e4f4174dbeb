#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "stabpoly/catalog.hpp"
#include "stabpoly/modular.hpp"
#include "stabpoly/recognition.hpp"

using namespace stabpoly;

TEST_CASE("mother graphs") {
  const Graph h1 = build_h1(), h2 = build_h2(), h3 = build_h3();
  CHECK(h1.order() == 16);
  CHECK(h2.order() == 16);
  CHECK(h3.order() == 15);
  for (const Graph* h : {&h1, &h2, &h3}) {
    CHECK(is_connected(*h));
    CHECK(h->labels().size() == static_cast<std::size_t>(h->order()));
  }
  CHECK_FALSE(is_p6_triangle_free(h1));
  CHECK(is_p6_triangle_free(h2));
  CHECK(is_triangle_free(h3));
  CHECK(is_prime(h2));
  for (int v = 0; v < 16; ++v) CHECK(h2.degree(v) == 5);
  const Graph g13 = delete_vertices(h2, [&] {
    const int labels[] = {1, 2, 3, 4, 5, 11, 14};
    return h2.vertices_with_labels(labels);
  }());
  CHECK(is_isomorphic(g13, from_graph6("H?TclRo")));
}

TEST_CASE("derive_catalog on small mothers") {
  const auto c5 = derive_catalog(graphs::cycle(5));
  REQUIRE(c5.size() == 2);
  CHECK(c5[0].graph.order() == 5);
  CHECK(c5[1].graph.order() == 2);
  const auto w = derive_catalog(from_graph6("H?TclRo"));
  std::vector<int> orders;
  for (const DerivedClass& d : w) {
    orders.push_back(d.graph.order());
    CHECK(is_prime(d.graph));
    CHECK(is_p6_triangle_free(d.graph));
    CHECK_FALSE(d.phi.empty());
  }
  CHECK(orders.front() == 9);
  CHECK(orders.back() == 2);
}

TEST_CASE("catalog save and load") {
  const Catalog& catalog = fixture::small_catalog();
  const auto path = std::filesystem::temp_directory_path() / "stabpoly_catalog_test.json";
  save_catalog(catalog, path);
  const Catalog back = load_catalog(path);
  REQUIRE(back.size() == catalog.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].name == catalog[i].name);
    CHECK(back[i].canonical == catalog[i].canonical);
    REQUIRE(back[i].phi.size() == catalog[i].phi.size());
    for (std::size_t k = 0; k < back[i].phi.size(); ++k) CHECK(back[i].phi[k] == catalog[i].phi[k]);
  }
  CHECK(find_entry(back, "G13") != nullptr);
  CHECK(find_entry(back, canonical_form(graphs::cycle(5)))->name == "C5");
  CHECK(find_entry(back, "nope") == nullptr);

  std::ofstream(path) << R"({"format": "something-else", "version": 1, "entries": []})";
  CHECK_THROWS_AS(load_catalog(path), DomainError);
  std::ofstream(path) << R"({"format": "stabpoly-catalog", "version": 99, "entries": []})";
  CHECK_THROWS_AS(load_catalog(path), DomainError);
  std::ofstream(path) << "not json";
  CHECK_THROWS_AS(load_catalog(path), DomainError);
  CHECK_THROWS_AS(load_catalog(path.string() + ".missing"), DomainError);
  std::filesystem::remove(path);
}

TEST_CASE("named deletions of the second mother") {
  const NamingReport r = map_named_deletions(fixture::small_catalog());
  REQUIRE(r.h2.size() == 12);
  for (const NamedDeletion& d : r.h2) {
    if (d.name == "G11" || d.name == "G12" || d.name == "G13") {
      CHECK(d.matches == 1);
    } else {
      CHECK(d.matches == 0);
    }
  }
  CHECK_FALSE(r.ok());
}
