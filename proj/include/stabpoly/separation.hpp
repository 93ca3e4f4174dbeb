#pragma once

#include "stabpoly/catalog.hpp"
#include "stabpoly/composition.hpp"
#include "stabpoly/graph.hpp"
#include "stabpoly/polytope.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace stabpoly {

struct SeparationResult {
  enum class Verdict { Inside, Violated };
  Verdict verdict = Verdict::Inside;
  /// Violated only. `row` is normalized (rhs 1, or primitive when rhs is 0).
  std::optional<Inequality> row;
  /// "nonnegativity", "clique" or the catalog name.
  std::string source;
  /// Catalog rows: the extension; clique rows: the clique in `clique`.
  std::optional<CliqueJoinExtension> extension;
  Rational amount;            // lhs - rhs of `row`
  Rational primitive_amount;  // the same for the primitive form
  bool violated() const { return verdict == Verdict::Violated; }
};

struct SeparationOptions {
  /// Zero means unlimited.
  std::chrono::milliseconds budget{0};
};

/// Stages in order: nonnegativity, maximal cliques, lifted catalog facets.
/// The first stage with a violated row answers with its most violated row,
/// ties broken by the lexicographically least normalized row.
class Separator {
 public:
  /// DomainError with a witness unless g is (P6,paw)-free.
  Separator(const Graph& g, const Catalog& catalog, const SeparationOptions& options = {});

  SeparationResult separate(const RationalVector& y) const;
  const Graph& graph() const { return g_; }

 private:
  struct Lifted {
    Inequality row;
    std::size_t entry;
    std::size_t extension;
  };

  Graph g_;
  const Catalog* catalog_;
  SeparationOptions options_;
  std::vector<std::vector<CliqueJoinExtension>> extensions_;
  std::vector<Lifted> lifted_;
};

SeparationResult separate(const Graph& g, const RationalVector& y, const Catalog& catalog,
                          const SeparationOptions& options = {});

/// Exact LP: y >= 0 and y is dominated by a convex combination of maximal
/// stable sets.
bool membership_oracle(const Graph& g, const RationalVector& y);

}  // namespace stabpoly
