#pragma once

#include "stabpoly/graph.hpp"

#include <vector>

namespace stabpoly {

/// No vertex outside m distinguishes two vertices of m.
bool is_module(const Graph& g, VertexSet m);

/// Smallest module containing `seed`.
VertexSet module_closure(const Graph& g, VertexSet seed);

struct ModuleReport {
  /// Inclusion-maximal modules with 1 < |M| < n, in increasing bit order.
  std::vector<VertexSet> maximal_homogeneous_sets;
  bool is_prime = true;
};

/// Every maximal homogeneous set M is the largest module containing some
/// u in M and avoiding some w outside M; those are found from pair closures.
ModuleReport find_modules(const Graph& g);
bool is_prime(const Graph& g);

struct BiModulePair {
  VertexSet h1 = 0;
  VertexSet h2 = 0;
  VertexSet vertices() const { return h1 | h2; }
};

/// All bi-modules as unordered pairs (lowest vertex in h1). Exhaustive;
/// throws BudgetExceeded for n > 16.
std::vector<BiModulePair> enumerate_bimodules(const Graph& g);
bool is_bimodule(const Graph& g, VertexSet h1, VertexSet h2);

struct Substitution {
  Graph graph;
  /// old vertex of g1 (other than v) -> new index; -1 at v.
  std::vector<int> from_first;
  /// vertex of g2 -> new index.
  std::vector<int> from_second;
  VertexSet inserted() const;
};

/// G1(v, G2): G1 - v followed by a copy of G2 joined to N(v).
/// New order: vertices of g1 except v in increasing order, then g2.
Substitution substitute(const Graph& g1, int v, const Graph& g2);

}  // namespace stabpoly
