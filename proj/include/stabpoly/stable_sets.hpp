#pragma once

#include "stabpoly/graph.hpp"
#include "stabpoly/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace stabpoly {

struct StableSetFamily {
  std::vector<VertexSet> sets;
  std::size_t size() const { return sets.size(); }
};

/// Every stable set including the empty one, in increasing bit order.
/// Throws BudgetExceeded past `limit` sets.
StableSetFamily all_stable_sets(const Graph& g, std::size_t limit = std::size_t{1} << 24);

/// Inclusion-maximal stable sets via pivoting Bron-Kerbosch on co-G.
/// Output order is unspecified.
StableSetFamily maximal_stable_sets(const Graph& g, std::size_t limit = std::size_t{1} << 24);
std::vector<VertexSet> maximal_cliques(const Graph& g, std::size_t limit = std::size_t{1} << 24);
std::size_t count_maximal_stable_sets(const Graph& g);

using WeightVector = RationalVector;

struct WeightedSet {
  VertexSet set = 0;
  Rational value;
};

/// Exact optimum; vertices of non-positive weight never enter the answer.
WeightedSet max_weight_stable_set(const Graph& g, const WeightVector& w);
WeightedSet max_weight_clique(const Graph& g, const WeightVector& w);
/// Uses the Olariu tags: edges on triangle-free components, heaviest vertex
/// per part on complete multipartite ones. DomainError if g has a paw.
WeightedSet max_weight_clique_pawfree(const Graph& g, const WeightVector& w);

/// Every maximal stable set of g meeting h meets it in a maximal stable set
/// of g[h].
bool is_repeating_subgraph(const Graph& g, VertexSet h);

}  // namespace stabpoly
