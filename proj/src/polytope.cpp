#include "stabpoly/polytope.hpp"

#include <algorithm>
#include <stdexcept>

#include "stabpoly/linalg.hpp"

namespace stabpoly {

Inequality Inequality::nonnegativity(int n, int v) {
  Inequality row;
  row.coeffs = RationalVector::Zero(n);
  row.coeffs(v) = -1;
  row.rhs = 0;
  row.kind = Kind::Nonnegativity;
  return row;
}

Rational Inequality::lhs(const RationalVector& x) const {
  if (x.size() != coeffs.size()) throw DomainError("point length does not match the inequality");
  Rational s = 0;
  for (Eigen::Index i = 0; i < coeffs.size(); ++i)
    if (coeffs(i) != 0) s += coeffs(i) * x(i);
  return s;
}

Rational Inequality::lhs(VertexSet s) const {
  Rational total = 0;
  for_each_vertex(s, [&](int v) { total += coeffs(v); });
  return total;
}

VertexSet Inequality::support() const {
  VertexSet s = 0;
  for (Eigen::Index i = 0; i < coeffs.size(); ++i)
    if (coeffs(i) != 0) s |= singleton(static_cast<int>(i));
  return s;
}

bool Inequality::is_full() const { return support() == all_vertices(size()); }

Inequality Inequality::primitive() const {
  Integer l = denominator(rhs);
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) l = lcm(l, denominator(coeffs(i)));
  Integer g = numerator(rhs * Rational(l));
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) g = gcd(g, numerator(coeffs(i) * Rational(l)));
  if (g == 0) throw DomainError("inequality has no nonzero entry");
  if (g < 0) g = -g;
  const Rational scale(l, g);
  Inequality out = *this;
  out.coeffs *= scale;
  out.rhs *= scale;
  return out;
}

Inequality Inequality::normalized() const {
  if (rhs <= 0) return primitive();
  Inequality out = *this;
  const Rational inv = Rational(1) / rhs;
  out.coeffs *= inv;
  out.rhs = 1;
  return out;
}

bool operator==(const Inequality& a, const Inequality& b) {
  return a.rhs == b.rhs && a.coeffs.size() == b.coeffs.size() && a.coeffs == b.coeffs;
}

bool row_less(const Inequality& a, const Inequality& b) {
  for (Eigen::Index i = 0; i < std::min(a.coeffs.size(), b.coeffs.size()); ++i)
    if (a.coeffs(i) != b.coeffs(i)) return a.coeffs(i) < b.coeffs(i);
  if (a.coeffs.size() != b.coeffs.size()) return a.coeffs.size() < b.coeffs.size();
  return a.rhs < b.rhs;
}

std::vector<Inequality> LinearSystem::facet_rows() const {
  std::vector<Inequality> out;
  for (const Inequality& r : rows)
    if (r.kind == Inequality::Kind::Facet) out.push_back(r);
  return out;
}

bool LinearSystem::satisfied_by(const RationalVector& x) const {
  for (const Inequality& r : rows)
    if (r.lhs(x) > r.rhs) return false;
  return true;
}

LinearSystem LinearSystem::canonical() const {
  LinearSystem out{n, {}};
  out.rows.reserve(rows.size());
  for (const Inequality& r : rows) out.rows.push_back(r.primitive());
  std::sort(out.rows.begin(), out.rows.end(), row_less);
  out.rows.erase(std::unique(out.rows.begin(), out.rows.end()), out.rows.end());
  return out;
}

bool LinearSystem::same_rows(const LinearSystem& other) const {
  if (n != other.n) return false;
  const LinearSystem a = canonical();
  const LinearSystem b = other.canonical();
  return a.rows == b.rows;
}

bool LinearSystem::contains(const Inequality& row) const {
  const Inequality key = row.primitive();
  return std::any_of(rows.begin(), rows.end(), [&](const Inequality& r) { return r.primitive() == key; });
}

LinearSystem clique_system(const Graph& g) {
  LinearSystem sys{g.order(), {}};
  for (int v = 0; v < g.order(); ++v) sys.rows.push_back(Inequality::nonnegativity(g.order(), v));
  for (VertexSet q : maximal_cliques(g)) {
    Inequality row;
    row.coeffs = RationalVector::Zero(g.order());
    for_each_vertex(q, [&](int v) { row.coeffs(v) = 1; });
    row.rhs = 1;
    sys.rows.push_back(row);
  }
  return sys.canonical();
}

namespace {

// Lexicographic order of incidence vectors (x_1 first, 0 < 1).
bool incidence_less(VertexSet a, VertexSet b) {
  if (a == b) return false;
  return !contains(a, lowest(a ^ b));
}

// a.x <= b with a, b integer, from a ray of the dual cone.
struct IntRow {
  std::vector<std::int64_t> a;
  std::int64_t b = 0;

  std::int64_t lhs(VertexSet s) const {
    std::int64_t t = 0;
    for_each_vertex(s, [&](int v) { t += a[v]; });
    return t;
  }
};

bool tight_rank_full(const IntRow& row, const std::vector<VertexSet>& stable, int n, std::vector<std::int64_t>& buf) {
  buf.clear();
  int count = 0;
  for (VertexSet s : stable) {
    if (row.lhs(s) != row.b) continue;
    buf.push_back(1);
    for (int v = 0; v < n; ++v) buf.push_back(contains(s, v) ? 1 : 0);
    ++count;
  }
  if (count < n) return false;
  return bareiss_rank(buf, count, n + 1, n) >= n;
}

Inequality to_inequality(const IntRow& row) {
  Inequality out;
  const int n = static_cast<int>(row.a.size());
  out.coeffs.resize(n);
  for (int v = 0; v < n; ++v) out.coeffs(v) = Rational(row.a[v]);
  out.rhs = Rational(row.b);
  int nonzero = 0, neg = -1;
  for (int v = 0; v < n; ++v)
    if (row.a[v] != 0) {
      ++nonzero;
      if (row.a[v] < 0) neg = v;
    }
  if (nonzero == 1 && neg >= 0 && row.b == 0) out.kind = Inequality::Kind::Nonnegativity;
  return out;
}

IntegerRows homogenized(const std::vector<VertexSet>& sets, int n) {
  IntegerRows a = IntegerRows::Zero(static_cast<Eigen::Index>(sets.size()), n + 1);
  for (std::size_t r = 0; r < sets.size(); ++r) {
    a(static_cast<Eigen::Index>(r), 0) = 1;
    for_each_vertex(sets[r], [&](int v) { a(static_cast<Eigen::Index>(r), v + 1) = 1; });
  }
  return a;
}

}  // namespace

LinearSystem stab_facets(const Graph& g, const HullOptions& options) {
  const int n = g.order();
  if (n > options.budget_vertices)
    throw BudgetExceeded("hull budget is " + std::to_string(options.budget_vertices) + " vertices, graph has " +
                         std::to_string(n));
  LinearSystem sys{n, {}};
  if (n == 0) return sys;

  std::vector<IntRow> rows;
  auto from_ray = [&](const IntegerRows& rays, Eigen::Index r) {
    // Ray h = (b, -a) of {h : g.h >= 0}.
    IntRow row;
    row.b = rays(r, 0);
    row.a.resize(n);
    for (int v = 0; v < n; ++v) row.a[v] = -rays(r, v + 1);
    return row;
  };

  if (options.method == HullMethod::AllStableSets) {
    std::vector<VertexSet> stable = all_stable_sets(g).sets;
    std::sort(stable.begin(), stable.end(), incidence_less);
    const IntegerRows rays = extreme_rays(homogenized(stable, n), options.dd);
    for (Eigen::Index r = 0; r < rays.rows(); ++r) rows.push_back(from_ray(rays, r));
  } else {
    // Orthant rows first, then larger maximal sets first: keeps the
    // intermediate cones small.
    std::vector<VertexSet> maximal = maximal_stable_sets(g).sets;
    std::sort(maximal.begin(), maximal.end(), [](VertexSet x, VertexSet y) {
      return set_size(x) != set_size(y) ? set_size(x) > set_size(y) : incidence_less(x, y);
    });
    IntegerRows a = IntegerRows::Zero(static_cast<Eigen::Index>(maximal.size()) + n, n + 1);
    for (int v = 0; v < n; ++v) a(v, v + 1) = -1;
    a.bottomRows(static_cast<Eigen::Index>(maximal.size())) = homogenized(maximal, n);
    const IntegerRows rays = extreme_rays(a, options.dd);
    const std::vector<VertexSet> stable = all_stable_sets(g).sets;
    std::vector<std::int64_t> buf;
    for (Eigen::Index r = 0; r < rays.rows(); ++r) {
      IntRow row = from_ray(rays, r);
      if (std::all_of(row.a.begin(), row.a.end(), [](std::int64_t c) { return c == 0; })) continue;
      if (tight_rank_full(row, stable, n, buf)) rows.push_back(std::move(row));
    }
    for (int v = 0; v < n; ++v) {
      IntRow row;
      row.a.assign(n, 0);
      row.a[v] = -1;
      rows.push_back(std::move(row));
    }
  }
  sys.rows.reserve(rows.size());
  for (const IntRow& row : rows) sys.rows.push_back(to_inequality(row));
  std::sort(sys.rows.begin(), sys.rows.end(), row_less);
  return sys;
}

std::vector<Inequality> full_facets(const LinearSystem& stab) {
  std::vector<Inequality> out;
  for (const Inequality& r : stab.rows) {
    if (r.kind != Inequality::Kind::Facet || !r.is_full()) continue;
    if (r.rhs <= 0) throw std::logic_error("full facet with non-positive right-hand side");
    out.push_back(r.normalized());
  }
  std::sort(out.begin(), out.end(), row_less);
  return out;
}

std::vector<Inequality> full_facets(const Graph& g, const HullOptions& options) {
  return full_facets(stab_facets(g, options));
}

std::optional<FacetCertificate> certificate_for(const Graph& g, const Inequality& phi) {
  const int n = g.order();
  if (phi.size() != n) throw DomainError("inequality length does not match graph order");
  std::vector<VertexSet> maximal = maximal_stable_sets(g).sets;
  std::sort(maximal.begin(), maximal.end(), incidence_less);
  IncrementalBasis<Rational> basis(n);
  FacetCertificate cert;
  for (VertexSet s : maximal) {
    if (!phi.tight(s)) continue;
    RationalVector chi = RationalVector::Zero(n);
    for_each_vertex(s, [&](int v) { chi(v) = 1; });
    if (basis.insert(chi.transpose())) cert.rows.push_back(s);
    if (basis.full()) break;
  }
  if (!basis.full()) return std::nullopt;
  cert.matrix = Matrix<int>::Zero(n, n);
  RationalMatrix m = RationalMatrix::Zero(n, n);
  for (int r = 0; r < n; ++r)
    for_each_vertex(cert.rows[r], [&](int v) {
      cert.matrix(r, v) = 1;
      m(r, v) = 1;
    });
  const auto c = exact_solve(m, RationalVector::Constant(n, phi.rhs));
  if (!c) return std::nullopt;
  cert.coeffs = *c;
  cert.rhs = phi.rhs;
  return cert;
}

std::optional<FacetCertificate> is_facet_inducing(const Graph& g, const HullOptions& options) {
  const std::vector<Inequality> phi = full_facets(g, options);
  if (phi.empty()) return std::nullopt;
  auto cert = certificate_for(g, phi.front());
  if (!cert) throw std::logic_error("full facet without a maximal-stable-set certificate");
  return cert;
}

std::string verify_certificate(const Graph& g, const FacetCertificate& cert) {
  const int n = g.order();
  if (cert.matrix.rows() != n || cert.matrix.cols() != n || static_cast<int>(cert.rows.size()) != n)
    return "matrix is not n x n";
  if (cert.coeffs.size() != n) return "coefficient vector has the wrong length";
  RationalMatrix m(n, n);
  VertexSet all = g.vertices();
  for (int r = 0; r < n; ++r) {
    const VertexSet s = cert.rows[r];
    if (!g.is_stable(s)) return "row " + std::to_string(r) + " is not a stable set";
    for (int v = 0; v < n; ++v) {
      if (cert.matrix(r, v) != (contains(s, v) ? 1 : 0)) return "matrix row " + std::to_string(r) + " disagrees";
      m(r, v) = cert.matrix(r, v);
    }
    VertexSet dominated = s;
    for_each_vertex(s, [&](int v) { dominated |= g.neighbors(v); });
    if (dominated != all) return "row " + std::to_string(r) + " is not a maximal stable set";
  }
  if (exact_rank(m) != n) return "matrix is singular";
  for (int v = 0; v < n; ++v)
    if (cert.coeffs(v) == 0) return "coefficient " + std::to_string(v) + " is zero";
  const RationalVector lhs = m * cert.coeffs;
  for (int r = 0; r < n; ++r)
    if (lhs(r) != cert.rhs) return "M c differs from b at row " + std::to_string(r);
  if (max_weight_stable_set(g, cert.coeffs).value > cert.rhs) return "inequality is not valid";
  return {};
}

bool is_valid_for(const Graph& g, const Inequality& row, const StableSetFamily& stable) {
  if (row.size() != g.order()) return false;
  return std::all_of(stable.sets.begin(), stable.sets.end(), [&](VertexSet s) { return row.lhs(s) <= row.rhs; });
}

bool is_facet_of(const Graph& g, const Inequality& row, const StableSetFamily& stable) {
  const int n = g.order();
  if (row.size() != n || !is_valid_for(g, row, stable)) return false;
  IncrementalBasis<Rational> basis(n + 1);
  for (VertexSet s : stable.sets) {
    if (!row.tight(s)) continue;
    RationalVector h = RationalVector::Zero(n + 1);
    h(0) = 1;
    for_each_vertex(s, [&](int v) { h(v + 1) = 1; });
    basis.insert(h.transpose());
    if (basis.rank() == n) return true;
  }
  return false;
}

namespace {

void grow_cliques(const Graph& g, VertexSet clique, VertexSet cand, std::vector<VertexSet>& out) {
  out.push_back(clique);
  while (cand) {
    const int v = lowest(cand);
    cand &= cand - 1;
    grow_cliques(g, clique | singleton(v), cand & g.neighbors(v), out);
  }
}

bool disconnects(const Graph& g, VertexSet c) {
  const VertexSet rest = g.vertices() & ~c;
  if (!rest) return false;
  return component_of(g, lowest(rest), rest) != rest;
}

}  // namespace

std::optional<VertexSet> has_clique_cutset(const Graph& g) {
  std::vector<VertexSet> cliques;
  grow_cliques(g, 0, g.vertices(), cliques);
  std::sort(cliques.begin(), cliques.end(), [](VertexSet a, VertexSet b) {
    return set_size(a) != set_size(b) ? set_size(a) < set_size(b) : a < b;
  });
  for (VertexSet c : cliques)
    if (disconnects(g, c)) return c;
  return std::nullopt;
}

std::vector<int> critical_vertices(const Graph& g, const FacetCertificate& cert) {
  const std::string problem = verify_certificate(g, cert);
  if (!problem.empty()) throw DomainError("invalid certificate: " + problem);
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (cert.matrix.col(v).sum() == 1) out.push_back(v);
  return out;
}

namespace {

void require_full_facet(const Graph& g, const Inequality& phi) {
  if (phi.size() != g.order() || !phi.is_full()) throw DomainError("inequality is not full");
  if (!is_facet_of(g, phi, all_stable_sets(g))) throw DomainError("inequality is not a facet of STAB(G)");
}

template <typename F>
bool all_degree2(const Graph& g, F&& check) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) continue;
    const int a = lowest(g.neighbors(v));
    const int b = lowest(g.neighbors(v) & ~singleton(a));
    if (g.adjacent(a, b)) continue;
    if (!check(v, a, b)) return false;
  }
  return true;
}

}  // namespace

bool check_mahjoub(const Graph& g, const Inequality& phi) {
  require_full_facet(g, phi);
  return all_degree2(g, [&](int v, int a, int b) {
    return phi.coeffs(v) <= phi.coeffs(a) && phi.coeffs(v) <= phi.coeffs(b);
  });
}

bool check_degree2_tightset(const Graph& g, const Inequality& phi) {
  require_full_facet(g, phi);
  const std::vector<VertexSet> maximal = maximal_stable_sets(g).sets;
  return all_degree2(g, [&](int, int a, int b) {
    const VertexSet ab = singleton(a) | singleton(b);
    return std::any_of(maximal.begin(), maximal.end(),
                       [&](VertexSet s) { return (s & ab) == ab && phi.tight(s); });
  });
}

bool check_repeating_rank(const Graph& g, VertexSet h) {
  if (!h || (h & ~g.vertices())) throw DomainError("vertex set must be a nonempty subset of V");
  if (!is_repeating_subgraph(g, h)) throw DomainError("vertex set is not repeating");
  const Graph sub = induced_subgraph(g, h);
  const int k = sub.order();
  IncrementalBasis<Rational> basis(k);
  for (VertexSet s : maximal_stable_sets(sub).sets) {
    RationalVector chi = RationalVector::Zero(k);
    for_each_vertex(s, [&](int v) { chi(v) = 1; });
    basis.insert(chi.transpose());
    if (basis.full()) return true;
  }
  return false;
}

}  // namespace stabpoly
