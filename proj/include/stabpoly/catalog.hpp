#pragma once

#include "stabpoly/graph.hpp"
#include "stabpoly/polytope.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace stabpoly {

/// v1..v5, y1..y5, z1..z5 (z_i adjacent to v_{i-1}, v_{i+1}), x; labels
/// 1..16 in that order, so x carries label 16.
Graph build_h1();
/// a1..a4, b1..b4, c1..c4, d1..d4 labelled by the C4-expansion bijection.
Graph build_h2();
/// v1..v5, y2..y5, z24, z35, z52, z0_24, z0_35, x; labels 1..15 in order.
Graph build_h3();

struct CatalogEntry {
  std::string name;
  Graph graph;  // canonical labelling
  CanonicalForm canonical;
  std::vector<Inequality> phi;
  std::vector<std::string> sources;  // "H1", "H2", "H3"
};

using Catalog = std::vector<CatalogEntry>;

/// A prime facet-inducing class found among the facet supports of a
/// mother graph.
struct DerivedClass {
  Graph graph;  // canonical labelling
  CanonicalForm canonical;
  VertexSet support = 0;  // first support realizing the class
  std::vector<Inequality> phi;
};

/// Facet supports of STAB(h) inducing connected prime (P6,triangle)-free
/// graphs on at least two vertices, one per isomorphism class, ordered by
/// descending order then canonical form. Phi is computed per class.
std::vector<DerivedClass> derive_catalog(const Graph& h, const HullOptions& options = {});
std::vector<DerivedClass> derive_catalog(const Graph& h, const LinearSystem& stab, const HullOptions& options = {});

struct NamedDeletion {
  std::string name;
  std::vector<int> deleted_labels;
  CanonicalForm canonical;
  int matches = 0;  // derived H2 classes with that form
};

struct NamingReport {
  std::vector<NamedDeletion> h2;
  std::vector<int> h3_orders;  // orders of the H3-only classes, descending
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

struct CatalogBuild {
  Catalog catalog;
  std::vector<DerivedClass> h1, h2, h3;
  NamingReport naming;
};

/// Derives the three class lists and names their union: K2, C5, G1 (the
/// class shared by all three), G2..G13 by the named H2 deletions, G14..G24
/// for the H3-only classes by order and canonical form.
CatalogBuild build_catalog(const HullOptions& options = {});
Catalog name_classes(const std::vector<DerivedClass>& h1, const std::vector<DerivedClass>& h2,
                     const std::vector<DerivedClass>& h3, NamingReport& report);
NamingReport map_named_deletions(const Catalog& catalog);

const CatalogEntry* find_entry(const Catalog& catalog, const std::string& name);
const CatalogEntry* find_entry(const Catalog& catalog, const CanonicalForm& form);

inline constexpr const char* kCatalogFormat = "stabpoly-catalog";
inline constexpr int kCatalogVersion = 1;

void save_catalog(const Catalog& catalog, const std::filesystem::path& path);
/// DomainError on malformed content, wrong format tag or version, or a
/// stored canonical form that does not match the stored graph.
Catalog load_catalog(const std::filesystem::path& path);

}  // namespace stabpoly
