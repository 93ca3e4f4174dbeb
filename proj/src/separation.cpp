#include "stabpoly/separation.hpp"

#include "stabpoly/lp.hpp"
#include "stabpoly/recognition.hpp"
#include "stabpoly/stable_sets.hpp"

namespace stabpoly {

namespace {

void require_p6paw_free(const Graph& g) {
  if (auto paw = find_paw(g))
    throw DomainError("graph has a paw on vertices " + std::to_string((*paw)[0]) + "," + std::to_string((*paw)[1]) +
                      "," + std::to_string((*paw)[2]) + "," + std::to_string((*paw)[3]));
  if (g.order() >= 6)
    if (auto p = find_induced_path(g, 6)) {
      std::string s;
      for (int v : *p) s += (s.empty() ? "" : "-") + std::to_string(v);
      throw DomainError("graph has an induced P6: " + s);
    }
}

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds budget)
      : active_(budget.count() > 0), end_(std::chrono::steady_clock::now() + budget) {}
  void check() const {
    if (active_ && std::chrono::steady_clock::now() > end_) throw BudgetExceeded("separation exceeded its time budget");
  }

 private:
  bool active_;
  std::chrono::steady_clock::time_point end_;
};

// Keeps the most violated row; ties go to the least normalized row.
struct Best {
  std::optional<Inequality> row;
  Rational amount;

  bool offer(const Inequality& candidate, const Rational& violation) {
    if (violation <= 0) return false;
    if (row && (violation < amount || (violation == amount && !row_less(candidate, *row)))) return false;
    row = candidate;
    amount = violation;
    return true;
  }
};

Inequality clique_row(int n, VertexSet q) {
  Inequality row;
  row.coeffs = RationalVector::Zero(n);
  for_each_vertex(q, [&](int v) { row.coeffs(v) = 1; });
  row.rhs = 1;
  return row;
}

SeparationResult violated(const Inequality& row, const Rational& amount, std::string source) {
  SeparationResult r;
  r.verdict = SeparationResult::Verdict::Violated;
  r.row = row;
  r.source = std::move(source);
  r.amount = amount;
  const Inequality p = row.primitive();
  int i = 0;
  while (row.coeffs(i) == 0) ++i;
  r.primitive_amount = amount * (p.coeffs(i) / row.coeffs(i));
  return r;
}

}  // namespace

Separator::Separator(const Graph& g, const Catalog& catalog, const SeparationOptions& options)
    : g_(g), catalog_(&catalog), options_(options) {
  require_p6paw_free(g);
  const Deadline deadline(options.budget);
  extensions_.resize(catalog.size());
  for (std::size_t e = 0; e < catalog.size(); ++e) {
    const CatalogEntry& entry = catalog[e];
    if (entry.graph.order() <= 2 || entry.graph.order() > g.order()) continue;
    for (CliqueJoinExtension& ext : enumerate_clique_join_extensions(g, entry.graph)) {
      deadline.check();
      if (!ext.maximal) continue;
      extensions_[e].push_back(std::move(ext));
      for (const Inequality& phi : entry.phi)
        lifted_.push_back({lift_full_facet(phi, extensions_[e].back(), g.order()), e, extensions_[e].size() - 1});
    }
  }
}

SeparationResult Separator::separate(const RationalVector& y) const {
  const int n = g_.order();
  if (y.size() != n) throw DomainError("point length does not match graph order");
  const Deadline deadline(options_.budget);

  Best best;
  for (int v = 0; v < n; ++v) best.offer(Inequality::nonnegativity(n, v), -y(v));
  if (best.row) return violated(*best.row, best.amount, "nonnegativity");

  if (max_weight_clique_pawfree(g_, y).value > 1) {
    // Every maximal clique is an edge, an isolated vertex, or one vertex per
    // part of a complete multipartite component.
    VertexSet best_clique = 0;
    auto offer = [&](VertexSet q) {
      const Inequality row = clique_row(n, q);
      if (best.offer(row, row.violation(y))) best_clique = q;
    };
    for (const ComponentTag& tag : olariu_decompose(g_)) {
      if (tag.kind == ComponentTag::Kind::TriangleFree) {
        if (set_size(tag.component) == 1) offer(tag.component);
        for_each_vertex(tag.component, [&](int v) {
          for_each_vertex(g_.neighbors(v) & tag.component, [&](int u) {
            if (u > v) offer(singleton(u) | singleton(v));
          });
        });
      } else {
        VertexSet pick = 0;
        for (VertexSet part : tag.parts) {
          int top = -1;
          for_each_vertex(part, [&](int v) {
            if (top < 0 || y(v) >= y(top)) top = v;
          });
          pick |= singleton(top);
        }
        offer(pick);
      }
    }
    if (best.row) {
      SeparationResult r = violated(*best.row, best.amount, "clique");
      r.extension = CliqueJoinExtension{0, {}, best_clique, true};
      return r;
    }
  }

  const Lifted* found = nullptr;
  for (const Lifted& l : lifted_) {
    deadline.check();
    if (best.offer(l.row, l.row.violation(y))) found = &l;
  }
  if (found) {
    SeparationResult r = violated(*best.row, best.amount, (*catalog_)[found->entry].name);
    r.extension = extensions_[found->entry][found->extension];
    return r;
  }
  return {};
}

SeparationResult separate(const Graph& g, const RationalVector& y, const Catalog& catalog,
                          const SeparationOptions& options) {
  return Separator(g, catalog, options).separate(y);
}

bool membership_oracle(const Graph& g, const RationalVector& y) {
  const int n = g.order();
  if (y.size() != n) throw DomainError("point length does not match graph order");
  for (int v = 0; v < n; ++v)
    if (y(v) < 0) return false;
  const std::vector<VertexSet> sets = maximal_stable_sets(g).sets;
  const auto m = static_cast<Eigen::Index>(sets.size());
  RationalMatrix a = RationalMatrix::Zero(n + 1, m);
  RationalVector b(n + 1);
  for (Eigen::Index s = 0; s < m; ++s) {
    for_each_vertex(sets[s], [&](int v) { a(v, s) = -1; });
    a(n, s) = 1;
  }
  for (int v = 0; v < n; ++v) b(v) = -y(v);
  b(n) = 1;
  return feasible(a, b);
}

}  // namespace stabpoly
