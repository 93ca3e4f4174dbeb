#pragma once

#include "stabpoly/catalog.hpp"
#include "stabpoly/graph.hpp"
#include "stabpoly/polytope.hpp"

#include <cstddef>
#include <vector>

namespace stabpoly {

/// The product system for g1(v, g2) followed by redundancy removal (exact
/// LP per row), so the result is the minimal system. Variables follow the
/// layout of substitute(): V1 - v in order, then V2.
LinearSystem chvatal_substitute(const LinearSystem& sys1, int v, const LinearSystem& sys2);

/// Rows other than nonnegativity that are implied by the remaining rows,
/// removed one at a time. Exact duplicates go first.
LinearSystem remove_redundant_rows(const LinearSystem& sys);

struct CliqueJoinExtension {
  VertexSet core = 0;
  /// embedding[i] = vertex of g playing vertex i of f.
  std::vector<int> embedding;
  VertexSet clique = 0;
  /// Not properly contained in another extension of the same f.
  bool maximal = true;
  VertexSet vertices() const { return core | clique; }
};

/// Induced copies of f (one per image vertex set), each with every maximal
/// clique of its common neighbourhood. Throws BudgetExceeded when more than
/// `limit` embeddings are explored.
std::vector<CliqueJoinExtension> enumerate_clique_join_extensions(const Graph& g, const Graph& f,
                                                                  std::size_t limit = 50'000'000);

/// One embedding per image vertex set of f as an induced subgraph of g.
std::vector<std::vector<int>> induced_embeddings(const Graph& g, const Graph& f, std::size_t limit = 50'000'000);

/// phi of f lifted onto an extension: phi on the core plus x(clique), rhs 1.
Inequality lift_full_facet(const Inequality& phi, const CliqueJoinExtension& ext, int n);

/// Nonnegativity, maximal cliques (isolated vertices included) and the
/// lifted full facet of every catalog graph over its extensions in g.
/// DomainError with a witness unless g is (P6,paw)-free.
LinearSystem defining_system_p6paw(const Graph& g, const Catalog& catalog);

/// Every prime facet-inducing induced subgraph of a catalog graph lies in
/// the catalog or is K2 or C5. Induced subgraphs are visited by isomorphism
/// class; classes with a clique cutset are skipped without a hull.
struct ClosureReport {
  bool closed = true;
  std::size_t classes_visited = 0;
  std::size_t hulls = 0;
  std::vector<std::string> missing;  // graph6 of offending subgraphs
};
ClosureReport closure_check(const Catalog& catalog, const HullOptions& options = {});

}  // namespace stabpoly
