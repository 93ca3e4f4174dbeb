#pragma once

// Brute-force reference implementations for small graphs. They only use
// Graph::adjacent and plain subset enumeration.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "stabpoly/graph.hpp"
#include "stabpoly/polytope.hpp"
#include "stabpoly/rational.hpp"

namespace oracle {

using stabpoly::Graph;
using stabpoly::Rational;
using stabpoly::RationalMatrix;
using stabpoly::RationalVector;

using Subset = std::vector<int>;

inline std::vector<Subset> subsets(int n) {
  std::vector<Subset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Subset s;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    out.push_back(s);
  }
  return out;
}

inline std::uint32_t bits(const Subset& s) {
  std::uint32_t m = 0;
  for (int v : s) m |= std::uint32_t{1} << v;
  return m;
}

inline bool in(const Subset& s, int v) { return std::find(s.begin(), s.end(), v) != s.end(); }

inline int edges_within(const Graph& g, const Subset& s) {
  int e = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) e += g.adjacent(s[i], s[j]);
  return e;
}

inline int degree_within(const Graph& g, const Subset& s, int v) {
  int d = 0;
  for (int u : s) d += u != v && g.adjacent(u, v);
  return d;
}

inline bool connected_within(const Graph& g, const Subset& s) {
  if (s.empty()) return true;
  std::vector<int> seen{s[0]};
  for (std::size_t head = 0; head < seen.size(); ++head)
    for (int u : s)
      if (!in(seen, u) && g.adjacent(seen[head], u)) seen.push_back(u);
  return seen.size() == s.size();
}

inline bool stable(const Graph& g, const Subset& s) { return edges_within(g, s) == 0; }

inline bool clique(const Graph& g, const Subset& s) {
  return edges_within(g, s) == static_cast<int>(s.size() * (s.size() - 1) / 2);
}

inline Subset complement_of(int n, const Subset& s) {
  Subset out;
  for (int v = 0; v < n; ++v)
    if (!in(s, v)) out.push_back(v);
  return out;
}

inline bool has_induced_path(const Graph& g, int k) {
  for (const Subset& s : subsets(g.order())) {
    if (static_cast<int>(s.size()) != k || edges_within(g, s) != k - 1 || !connected_within(g, s)) continue;
    bool ok = true;
    for (int v : s) ok = ok && degree_within(g, s, v) <= 2;
    if (ok) return true;
  }
  return false;
}

inline bool has_triangle(const Graph& g) {
  for (const Subset& s : subsets(g.order()))
    if (s.size() == 3 && edges_within(g, s) == 3) return true;
  return false;
}

inline bool has_paw(const Graph& g) {
  for (const Subset& s : subsets(g.order())) {
    if (s.size() != 4 || edges_within(g, s) != 4) continue;
    std::vector<int> deg;
    for (int v : s) deg.push_back(degree_within(g, s, v));
    std::sort(deg.begin(), deg.end());
    if (deg == std::vector<int>{1, 2, 2, 3}) return true;
  }
  return false;
}

inline bool module(const Graph& g, const Subset& m) {
  for (int z = 0; z < g.order(); ++z) {
    if (in(m, z)) continue;
    int hit = 0;
    for (int v : m) hit += g.adjacent(z, v);
    if (hit != 0 && hit != static_cast<int>(m.size())) return false;
  }
  return true;
}

inline std::vector<std::uint32_t> homogeneous_sets(const Graph& g) {
  std::vector<std::uint32_t> out;
  for (const Subset& s : subsets(g.order()))
    if (s.size() > 1 && static_cast<int>(s.size()) < g.order() && module(g, s)) out.push_back(bits(s));
  return out;
}

inline std::vector<std::uint32_t> maximal_homogeneous_sets(const Graph& g) {
  const auto all = homogeneous_sets(g);
  std::vector<std::uint32_t> out;
  for (std::uint32_t m : all) {
    bool maximal = true;
    for (std::uint32_t o : all) maximal = maximal && (o == m || (o & m) != m);
    if (maximal) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::uint32_t> maximal_stable_sets(const Graph& g) {
  std::vector<std::uint32_t> out;
  for (const Subset& s : subsets(g.order())) {
    if (!stable(g, s)) continue;
    bool maximal = true;
    for (int v = 0; v < g.order() && maximal; ++v) {
      if (in(s, v)) continue;
      bool free = true;
      for (int u : s) free = free && !g.adjacent(u, v);
      maximal = !free;
    }
    if (maximal) out.push_back(bits(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Rational best_weight(const Graph& g, const RationalVector& w, bool cliques) {
  Rational best = 0;
  for (const Subset& s : subsets(g.order())) {
    if (cliques ? !clique(g, s) : !stable(g, s)) continue;
    Rational total = 0;
    for (int v : s) total += w(v);
    best = std::max(best, total);
  }
  return best;
}

// Some clique C with G - C having more components than G, or nullopt.
inline std::optional<std::uint32_t> clique_cutset(const Graph& g) {
  auto components = [&](const Subset& s) {
    int count = 0;
    Subset seen;
    for (int v : s) {
      if (in(seen, v)) continue;
      ++count;
      Subset reach{v};
      for (std::size_t h = 0; h < reach.size(); ++h)
        for (int u : s)
          if (!in(reach, u) && g.adjacent(reach[h], u)) reach.push_back(u);
      seen.insert(seen.end(), reach.begin(), reach.end());
    }
    return count;
  };
  const Subset all = complement_of(g.order(), {});
  const int base = components(all);
  for (const Subset& c : subsets(g.order()))
    if (clique(g, c) && components(complement_of(g.order(), c)) > base) return bits(c);
  return std::nullopt;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < a.order() && ok; ++u)
      for (int v = u + 1; v < a.order() && ok; ++v) ok = a.adjacent(u, v) == b.adjacent(p[u], p[v]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline bool bimodule(const Graph& g, const Subset& h1, const Subset& h2) {
  if (h1.empty() || h2.empty() || !stable(g, h1) || !stable(g, h2)) return false;
  for (int a : h1) {
    bool hit = false;
    for (int b : h2) hit = hit || g.adjacent(a, b);
    if (!hit) return false;
  }
  for (int b : h2) {
    bool hit = false;
    for (int a : h1) hit = hit || g.adjacent(a, b);
    if (!hit) return false;
  }
  for (int z = 0; z < g.order(); ++z) {
    if (in(h1, z) || in(h2, z)) continue;
    for (const Subset* h : {&h1, &h2}) {
      int hit = 0;
      for (int v : *h) hit += g.adjacent(z, v);
      if (hit != 0 && hit != static_cast<int>(h->size())) return false;
    }
  }
  return true;
}

// Gaussian elimination on a copy; returns x with a x = b when a is square
// and nonsingular.
inline std::optional<RationalVector> solve(RationalMatrix a, RationalVector b) {
  const int n = static_cast<int>(a.rows());
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    a.row(c).swap(a.row(p));
    std::swap(b(c), b(p));
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Rational f = a(r, c) / a(c, c);
      for (int k = c; k < n; ++k) a(r, k) -= f * a(c, k);
      b(r) -= f * b(c);
    }
  }
  RationalVector x(n);
  for (int i = 0; i < n; ++i) x(i) = b(i) / a(i, i);
  return x;
}

inline int rank(RationalMatrix a) {
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.row(r).swap(a.row(p));
    for (int i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(r, c);
      for (int k = c; k < a.cols(); ++k) a(i, k) -= f * a(r, k);
    }
    ++r;
  }
  return r;
}

inline RationalVector incidence(int n, std::uint32_t s) {
  RationalVector x = RationalVector::Zero(n);
  for (int v = 0; v < n; ++v)
    if (s >> v & 1) x(v) = 1;
  return x;
}

inline Rational lhs(const stabpoly::Inequality& row, const RationalVector& x) {
  Rational t = 0;
  for (int i = 0; i < row.size(); ++i) t += row.coeffs(i) * x(i);
  return t;
}

// The system describes STAB(g) exactly and minimally:
//  - every row holds on every stable set;
//  - every basic solution of the system that satisfies it is a stable set;
//  - every row is tight on n affinely independent stable sets.
// Returns an empty string or the first failure.
inline std::string check_stab_system(const Graph& g, const stabpoly::LinearSystem& sys) {
  const int n = g.order();
  std::vector<std::uint32_t> stable_sets;
  for (const Subset& s : subsets(n))
    if (stable(g, s)) stable_sets.push_back(bits(s));
  for (const auto& row : sys.rows) {
    RationalMatrix tight(0, n + 1);
    for (std::uint32_t s : stable_sets) {
      const RationalVector x = incidence(n, s);
      const Rational l = lhs(row, x);
      if (l > row.rhs) return "row not valid";
      if (l == row.rhs) {
        tight.conservativeResize(tight.rows() + 1, n + 1);
        tight.row(tight.rows() - 1).head(n) = x.transpose();
        tight(tight.rows() - 1, n) = 1;
      }
    }
    if (rank(tight) != n) return "row is not a facet";
  }
  const int m = static_cast<int>(sys.rows.size());
  std::vector<int> pick(n);
  std::function<std::string(int, int)> choose = [&](int start, int depth) -> std::string {
    if (depth == n) {
      RationalMatrix a(n, n);
      RationalVector b(n);
      for (int i = 0; i < n; ++i) {
        a.row(i) = sys.rows[pick[i]].coeffs.transpose();
        b(i) = sys.rows[pick[i]].rhs;
      }
      const auto x = solve(a, b);
      if (!x) return "";
      for (const auto& row : sys.rows)
        if (lhs(row, *x) > row.rhs) return "";
      std::uint32_t s = 0;
      for (int v = 0; v < n; ++v) {
        if ((*x)(v) != 0 && (*x)(v) != 1) return "fractional vertex";
        if ((*x)(v) == 1) s |= std::uint32_t{1} << v;
      }
      if (std::find(stable_sets.begin(), stable_sets.end(), s) == stable_sets.end()) return "non-stable vertex";
      return "";
    }
    for (int i = start; i < m; ++i) {
      pick[depth] = i;
      std::string r = choose(i + 1, depth + 1);
      if (!r.empty()) return r;
    }
    return "";
  };
  return choose(0, 0);
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

inline Graph random_triangle_free(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng) && !(g.neighbors(u) & g.neighbors(v))) g.add_edge(u, v);
  return g;
}

}  // namespace oracle
