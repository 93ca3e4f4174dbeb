#pragma once

#include "stabpoly/catalog.hpp"
#include "stabpoly/graph_io.hpp"
#include "stabpoly/polytope.hpp"

namespace fixture {

// Every prime facet-inducing (P6,triangle)-free class on at most 9 vertices,
// plus two larger graphs shared by all three mothers.
inline const stabpoly::Catalog& small_catalog() {
  static const stabpoly::Catalog catalog = [] {
    const std::pair<const char*, const char*> members[] = {
        {"K2", "A_"},           {"C5", "DLo"},           {"G1", "G@Umf?"},      {"F(2,2)", "G@TclO"},
        {"G13", "H?TclRo"},     {"G12", "I?Ca\\fSy?"},   {"G11", "J?CajQTieW?"},
    };
    stabpoly::Catalog out;
    for (auto [name, g6] : members) {
      stabpoly::CatalogEntry e;
      e.name = name;
      e.graph = stabpoly::canonical_graph(stabpoly::from_graph6(g6));
      e.canonical = stabpoly::canonical_form(e.graph);
      e.phi = stabpoly::full_facets(e.graph);
      e.sources = {"H2"};
      out.push_back(std::move(e));
    }
    return out;
  }();
  return catalog;
}

}  // namespace fixture
