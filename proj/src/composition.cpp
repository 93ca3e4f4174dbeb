#include "stabpoly/composition.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "stabpoly/graph_io.hpp"
#include "stabpoly/linalg.hpp"
#include "stabpoly/lp.hpp"
#include "stabpoly/modular.hpp"
#include "stabpoly/recognition.hpp"

namespace stabpoly {

namespace {

bool is_nonnegativity(const Inequality& row) {
  if (row.rhs != 0) return false;
  int nonzero = 0;
  for (int i = 0; i < row.size(); ++i) {
    if (row.coeffs(i) > 0) return false;
    if (row.coeffs(i) < 0) ++nonzero;
  }
  return nonzero == 1;
}

Inequality with_kind(Inequality row) {
  row.kind = is_nonnegativity(row) ? Inequality::Kind::Nonnegativity : Inequality::Kind::Facet;
  return row;
}

void check_system(const LinearSystem& sys, const char* what) {
  for (const Inequality& row : sys.rows)
    if (row.size() != sys.n) throw DomainError(std::string(what) + ": row length differs from the system size");
}

bool is_zero(const Inequality& row) {
  for (int i = 0; i < row.size(); ++i)
    if (row.coeffs(i) != 0) return false;
  return true;
}

}  // namespace

LinearSystem remove_redundant_rows(const LinearSystem& sys) {
  LinearSystem work = sys.canonical();
  for (Inequality& row : work.rows) row = with_kind(row);
  std::vector<bool> alive(work.rows.size(), true);
  for (std::size_t r = 0; r < work.rows.size(); ++r) {
    if (work.rows[r].kind == Inequality::Kind::Nonnegativity) continue;
    std::vector<std::size_t> others;
    for (std::size_t s = 0; s < work.rows.size(); ++s)
      if (s != r && alive[s] && work.rows[s].kind != Inequality::Kind::Nonnegativity) others.push_back(s);
    RationalMatrix a(static_cast<Eigen::Index>(others.size()), work.n);
    RationalVector b(static_cast<Eigen::Index>(others.size()));
    for (std::size_t k = 0; k < others.size(); ++k) {
      a.row(static_cast<Eigen::Index>(k)) = work.rows[others[k]].coeffs.transpose();
      b(static_cast<Eigen::Index>(k)) = work.rows[others[k]].rhs;
    }
    const LPSolution sol = maximize(work.rows[r].coeffs, a, b);
    if (sol.status == LPStatus::Optimal && sol.value <= work.rows[r].rhs) alive[r] = false;
  }
  LinearSystem out{work.n, {}};
  for (std::size_t r = 0; r < work.rows.size(); ++r)
    if (alive[r]) out.rows.push_back(work.rows[r]);
  return out;
}

LinearSystem chvatal_substitute(const LinearSystem& sys1, int v, const LinearSystem& sys2) {
  check_system(sys1, "first system");
  check_system(sys2, "second system");
  if (v < 0 || v >= sys1.n) throw DomainError("substitution vertex out of range");
  const int n = sys1.n - 1 + sys2.n;
  if (n > kMaxVertices) throw DomainError("substituted system exceeds 32 variables");
  const int offset = sys1.n - 1;
  auto first_pos = [v](int u) { return u < v ? u : u - 1; };

  LinearSystem raw{n, {}};
  for (int u = 0; u < n; ++u) raw.rows.push_back(Inequality::nonnegativity(n, u));
  for (const Inequality& ri : sys1.rows) {
    const Rational lift = ri.coeffs(v) > 0 ? ri.coeffs(v) : Rational(0);
    for (const Inequality& rj : sys2.rows) {
      Inequality row;
      row.coeffs = RationalVector::Zero(n);
      for (int u = 0; u < sys1.n; ++u)
        if (u != v) row.coeffs(first_pos(u)) = rj.rhs * ri.coeffs(u);
      for (int u = 0; u < sys2.n; ++u) row.coeffs(offset + u) = lift * rj.coeffs(u);
      row.rhs = ri.rhs * rj.rhs;
      if (is_zero(row)) continue;
      raw.rows.push_back(row);
    }
  }
  return remove_redundant_rows(raw);
}

namespace {

// Vertex order for embedding search: each vertex after the first of its
// component has an earlier neighbour.
std::vector<int> search_order(const Graph& f) {
  std::vector<int> order;
  VertexSet placed = 0;
  for (int start = 0; start < f.order(); ++start) {
    if (contains(placed, start)) continue;
    std::vector<int> queue{start};
    placed |= singleton(start);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      order.push_back(queue[i]);
      for_each_vertex(f.neighbors(queue[i]) & ~placed, [&](int u) {
        placed |= singleton(u);
        queue.push_back(u);
      });
    }
  }
  return order;
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& g, const Graph& f, std::size_t limit)
      : g_(g), f_(f), order_(search_order(f)), image_(f.order(), -1), limit_(limit) {}

  std::vector<std::vector<int>> run() {
    if (f_.order() == 0 || f_.order() > g_.order()) return {};
    go(0, 0);
    return std::move(found_);
  }

 private:
  void go(std::size_t depth, VertexSet used) {
    if (++explored_ > limit_) throw BudgetExceeded("embedding enumeration exceeded its limit");
    if (depth == order_.size()) {
      if (seen_.insert(used).second) found_.push_back(image_);
      return;
    }
    const int fv = order_[depth];
    VertexSet cand = g_.vertices() & ~used;
    for (std::size_t k = 0; k < depth && cand; ++k) {
      const int fu = order_[k];
      const VertexSet nbr = g_.neighbors(image_[fu]);
      cand &= f_.adjacent(fu, fv) ? nbr : ~nbr;
    }
    for_each_vertex(cand, [&](int gv) {
      image_[fv] = gv;
      go(depth + 1, used | singleton(gv));
    });
    image_[fv] = -1;
  }

  const Graph& g_;
  const Graph& f_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::size_t limit_;
  std::size_t explored_ = 0;
  std::set<VertexSet> seen_;
  std::vector<std::vector<int>> found_;
};

}  // namespace

std::vector<std::vector<int>> induced_embeddings(const Graph& g, const Graph& f, std::size_t limit) {
  return EmbeddingSearch(g, f, limit).run();
}

std::vector<CliqueJoinExtension> enumerate_clique_join_extensions(const Graph& g, const Graph& f,
                                                                  std::size_t limit) {
  std::vector<CliqueJoinExtension> out;
  for (std::vector<int>& emb : induced_embeddings(g, f, limit)) {
    VertexSet core = 0;
    VertexSet common = g.vertices();
    for (int u : emb) {
      core |= singleton(u);
      common &= g.neighbors(u);
    }
    if (!common) {
      out.push_back({core, emb, 0, true});
      continue;
    }
    const std::vector<int> inside = to_vector(common);
    for (VertexSet q : maximal_cliques(induced_subgraph(g, common))) {
      VertexSet clique = 0;
      for_each_vertex(q, [&](int i) { clique |= singleton(inside[i]); });
      out.push_back({core, emb, clique, true});
    }
  }
  for (CliqueJoinExtension& e : out)
    for (const CliqueJoinExtension& other : out) {
      const VertexSet a = e.vertices(), b = other.vertices();
      if (a != b && (a & b) == a) {
        e.maximal = false;
        break;
      }
    }
  return out;
}

Inequality lift_full_facet(const Inequality& phi, const CliqueJoinExtension& ext, int n) {
  if (phi.size() != static_cast<int>(ext.embedding.size()))
    throw DomainError("full facet and embedding have different sizes");
  const Inequality unit = phi.normalized();
  Inequality row;
  row.coeffs = RationalVector::Zero(n);
  for (int i = 0; i < unit.size(); ++i) row.coeffs(ext.embedding[i]) = unit.coeffs(i);
  for_each_vertex(ext.clique, [&](int u) { row.coeffs(u) = 1; });
  row.rhs = 1;
  return row;
}

namespace {

std::string describe_path(const std::vector<int>& p) {
  std::string s;
  for (int v : p) s += (s.empty() ? "" : "-") + std::to_string(v);
  return s;
}

}  // namespace

LinearSystem defining_system_p6paw(const Graph& g, const Catalog& catalog) {
  if (auto paw = find_paw(g))
    throw DomainError("graph has a paw on vertices " + std::to_string((*paw)[0]) + "," + std::to_string((*paw)[1]) +
                      "," + std::to_string((*paw)[2]) + "," + std::to_string((*paw)[3]));
  if (g.order() >= 6)
    if (auto p = find_induced_path(g, 6)) throw DomainError("graph has an induced P6: " + describe_path(*p));
  LinearSystem sys = clique_system(g);
  for (const CatalogEntry& entry : catalog) {
    if (entry.graph.order() <= 2 || entry.graph.order() > g.order()) continue;
    for (const CliqueJoinExtension& ext : enumerate_clique_join_extensions(g, entry.graph)) {
      if (!ext.maximal) continue;
      for (const Inequality& phi : entry.phi) sys.rows.push_back(lift_full_facet(phi, ext, g.order()));
    }
  }
  LinearSystem out = sys.canonical();
  for (Inequality& row : out.rows) row = with_kind(row);
  return out;
}

namespace {

// Maximal stable sets span R^n: necessary for a full facet.
bool enough_maximal_sets(const Graph& g) {
  const auto sets = maximal_stable_sets(g).sets;
  if (static_cast<int>(sets.size()) < g.order()) return false;
  std::vector<std::int64_t> buf;
  buf.reserve(sets.size() * g.order());
  for (VertexSet s : sets)
    for (int v = 0; v < g.order(); ++v) buf.push_back(contains(s, v) ? 1 : 0);
  return bareiss_rank(buf, static_cast<int>(sets.size()), g.order(), g.order()) == g.order();
}

}  // namespace

ClosureReport closure_check(const Catalog& catalog, const HullOptions& options) {
  ClosureReport report;
  std::set<CanonicalForm> known;
  for (const CatalogEntry& e : catalog) known.insert(e.canonical);
  known.insert(canonical_form(graphs::complete(2)));
  known.insert(canonical_form(graphs::cycle(5)));

  std::set<CanonicalForm> visited;
  for (const CatalogEntry& e : catalog) {
    std::vector<Graph> frontier;
    if (visited.insert(e.canonical).second) frontier.push_back(e.graph);
    while (!frontier.empty()) {
      std::vector<Graph> next;
      for (const Graph& h : frontier) {
        ++report.classes_visited;
        const CanonicalForm form = canonical_form(h);
        if (!known.count(form) && h.order() >= 2 && is_connected(h) && is_prime(h) && !has_clique_cutset(h) &&
            enough_maximal_sets(h)) {
          ++report.hulls;
          if (!full_facets(h, options).empty()) {
            report.closed = false;
            report.missing.push_back(to_graph6(h));
          }
        }
        if (h.order() <= 2) continue;
        for (int v = 0; v < h.order(); ++v) {
          Graph child = canonical_graph(delete_vertices(h, singleton(v)));
          if (visited.insert(canonical_form(child)).second) next.push_back(std::move(child));
        }
      }
      frontier = std::move(next);
    }
  }
  return report;
}

}  // namespace stabpoly
