#pragma once

#include "stabpoly/catalog.hpp"
#include "stabpoly/graph.hpp"
#include "stabpoly/polytope.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace stabpoly {

struct CriterionResult {
  int id = 0;
  std::string suite;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  HullOptions hull;
  std::uint64_t seed = 20240617;
  int separation_graphs = 50;
  int separation_points = 500;
  int separation_max_order = 12;
};

/// Holds the derived catalog between criteria that need it.
class VerifyContext {
 public:
  explicit VerifyContext(VerifyOptions options = {}) : options_(std::move(options)) {}
  const VerifyOptions& options() const { return options_; }
  const CatalogBuild& build();
  /// Use a loaded catalog for the separation criterion instead of deriving one.
  void set_catalog(Catalog catalog) { loaded_ = std::move(catalog); }
  const Catalog& catalog();

 private:
  VerifyOptions options_;
  std::optional<CatalogBuild> build_;
  std::optional<Catalog> loaded_;
};

/// Suite names indexed by criterion id - 1.
const std::vector<std::string>& suite_names();
/// Criterion id for a suite name or its number; 0 when unknown.
int criterion_id(const std::string& name);
CriterionResult run_criterion(int id, VerifyContext& context);

/// Nonisomorphic connected graphs on n vertices, canonical labelling.
std::vector<Graph> connected_graphs(int n);
/// Connected bipartite P6-free graphs on n vertices with at least n maximal
/// stable sets.
std::vector<Graph> bipartite_mis_counterexamples(int n);

/// Disjoint union of complete multipartite and (P6,triangle)-free
/// components with at most max_order vertices in total.
Graph random_p6paw_free_graph(std::mt19937_64& rng, int max_order);
/// Rational point with denominators at most 64, near STAB(g) more often
/// than not.
RationalVector random_query_point(std::mt19937_64& rng, const Graph& g);

}  // namespace stabpoly
