#pragma once

#include "stabpoly/double_description.hpp"
#include "stabpoly/graph.hpp"
#include "stabpoly/rational.hpp"
#include "stabpoly/stable_sets.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stabpoly {

struct Inequality {
  enum class Kind { Nonnegativity, Facet };

  RationalVector coeffs;
  Rational rhs;
  Kind kind = Kind::Facet;

  static Inequality nonnegativity(int n, int v);

  int size() const { return static_cast<int>(coeffs.size()); }
  Rational lhs(const RationalVector& x) const;
  Rational lhs(VertexSet s) const;
  bool tight(VertexSet s) const { return lhs(s) == rhs; }
  /// Amount by which x violates the row (negative when strictly satisfied).
  Rational violation(const RationalVector& x) const { return lhs(x) - rhs; }
  VertexSet support() const;
  bool is_full() const;

  /// Integer coefficients with gcd 1 and the same orientation.
  Inequality primitive() const;
  /// rhs = 1 when rhs > 0, primitive form otherwise.
  Inequality normalized() const;

  friend bool operator==(const Inequality& a, const Inequality& b);
};

/// Lexicographic order on (coeffs, rhs); rows should be in one normal form.
bool row_less(const Inequality& a, const Inequality& b);

struct LinearSystem {
  int n = 0;
  std::vector<Inequality> rows;

  std::size_t size() const { return rows.size(); }
  std::vector<Inequality> facet_rows() const;
  bool satisfied_by(const RationalVector& x) const;
  /// Primitive rows in lexicographic order.
  LinearSystem canonical() const;
  bool same_rows(const LinearSystem& other) const;
  bool contains(const Inequality& row) const;
};

/// Nonnegativity rows and clique rows for every maximal clique (including
/// isolated vertices): the whole system when g is perfect.
LinearSystem clique_system(const Graph& g);

enum class HullMethod {
  /// Cone over all stable-set incidence vectors.
  AllStableSets,
  /// Maximal stable sets plus the negative orthant, then nonnegativity rows
  /// and a facet filter on the stable sets.
  DownClosure,
};

struct HullOptions {
  int budget_vertices = 18;
  DDOptions dd;
  HullMethod method = HullMethod::DownClosure;
};

/// Minimal defining system of STAB(g), canonical row order.
LinearSystem stab_facets(const Graph& g, const HullOptions& options = {});

/// Phi(g): full facets normalized to rhs = 1.
std::vector<Inequality> full_facets(const LinearSystem& stab);
std::vector<Inequality> full_facets(const Graph& g, const HullOptions& options = {});

struct FacetCertificate {
  /// n x n 0/1 rows: incidence vectors of maximal stable sets.
  Matrix<int> matrix;
  std::vector<VertexSet> rows;
  RationalVector coeffs;
  Rational rhs;
};

/// Certificate for the first full facet; nullopt when Phi(g) is empty.
std::optional<FacetCertificate> is_facet_inducing(const Graph& g, const HullOptions& options = {});
std::optional<FacetCertificate> certificate_for(const Graph& g, const Inequality& phi);
/// Empty string when valid, otherwise the first failed condition.
std::string verify_certificate(const Graph& g, const FacetCertificate& cert);

/// Row tight on n affinely independent stable-set incidence vectors of g.
bool is_facet_of(const Graph& g, const Inequality& row, const StableSetFamily& stable);
/// Valid for every stable set of g.
bool is_valid_for(const Graph& g, const Inequality& row, const StableSetFamily& stable);

std::optional<VertexSet> has_clique_cutset(const Graph& g);
std::vector<int> critical_vertices(const Graph& g, const FacetCertificate& cert);

/// Both require phi to be a full facet of STAB(g) and throw DomainError
/// otherwise.
bool check_mahjoub(const Graph& g, const Inequality& phi);
bool check_degree2_tightset(const Graph& g, const Inequality& phi);

/// g[h] has |h| maximal stable sets with linearly independent incidence
/// vectors. DomainError unless h is repeating in g.
bool check_repeating_rank(const Graph& g, VertexSet h);

}  // namespace stabpoly
