#include "stabpoly/modular.hpp"

#include <algorithm>

#include "stabpoly/stable_sets.hpp"

namespace stabpoly {

bool is_module(const Graph& g, VertexSet m) {
  m &= g.vertices();
  const VertexSet outside = g.vertices() & ~m;
  bool ok = true;
  for_each_vertex(outside, [&](int z) {
    const VertexSet hit = g.neighbors(z) & m;
    ok = ok && (hit == 0 || hit == m);
  });
  return ok;
}

VertexSet module_closure(const Graph& g, VertexSet seed) {
  VertexSet m = seed & g.vertices();
  while (true) {
    VertexSet add = 0;
    for_each_vertex(g.vertices() & ~m, [&](int z) {
      const VertexSet hit = g.neighbors(z) & m;
      if (hit != 0 && hit != m) add |= singleton(z);
    });
    if (!add) return m;
    m |= add;
  }
}

ModuleReport find_modules(const Graph& g) {
  const int n = g.order();
  ModuleReport report;
  if (n <= 2) {
    // K2 and its complement: the only candidate is V itself.
    report.is_prime = true;
    return report;
  }
  std::vector<VertexSet> closure(n * n, 0);
  for (int u = 0; u < n; ++u)
    for (int x = u + 1; x < n; ++x)
      closure[u * n + x] = closure[x * n + u] = module_closure(g, singleton(u) | singleton(x));

  std::vector<VertexSet> candidates;
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w) {
      if (w == u) continue;
      VertexSet m = singleton(u);
      for (int x = 0; x < n; ++x)
        if (x != u && !contains(closure[u * n + x], w)) m |= closure[u * n + x];
      if (set_size(m) > 1) candidates.push_back(m);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (VertexSet m : candidates) {
    bool maximal = true;
    for (VertexSet other : candidates)
      if (other != m && (other & m) == m) maximal = false;
    if (maximal) report.maximal_homogeneous_sets.push_back(m);
  }
  report.is_prime = report.maximal_homogeneous_sets.empty();
  return report;
}

bool is_prime(const Graph& g) {
  // Prime iff every pair closure is the whole vertex set.
  const int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int x = u + 1; x < n; ++x)
      if (module_closure(g, singleton(u) | singleton(x)) != g.vertices()) return false;
  return true;
}

namespace {

// m is a module of G[ambient].
bool is_module_within(const Graph& g, VertexSet m, VertexSet ambient) {
  bool ok = true;
  for_each_vertex(ambient & ~m, [&](int z) {
    const VertexSet hit = g.neighbors(z) & m;
    ok = ok && (hit == 0 || hit == m);
  });
  return ok;
}

VertexSet distinguishers(const Graph& g, VertexSet m) {
  VertexSet d = 0;
  for_each_vertex(g.vertices() & ~m, [&](int z) {
    const VertexSet hit = g.neighbors(z) & m;
    if (hit != 0 && hit != m) d |= singleton(z);
  });
  return d;
}

}  // namespace

bool is_bimodule(const Graph& g, VertexSet h1, VertexSet h2) {
  if (!h1 || !h2 || (h1 & h2)) return false;
  if (!g.is_stable(h1) || !g.is_stable(h2)) return false;
  bool covered = true;
  for_each_vertex(h1, [&](int v) { covered = covered && (g.neighbors(v) & h2); });
  for_each_vertex(h2, [&](int v) { covered = covered && (g.neighbors(v) & h1); });
  if (!covered) return false;
  return is_module_within(g, h1, g.vertices() & ~h2) && is_module_within(g, h2, g.vertices() & ~h1);
}

std::vector<BiModulePair> enumerate_bimodules(const Graph& g) {
  if (g.order() > 16) throw BudgetExceeded("bi-module enumeration is limited to 16 vertices");
  constexpr std::uint64_t kWorkLimit = 200'000'000;
  std::uint64_t work = 0;
  std::vector<BiModulePair> out;
  for (VertexSet h1 : all_stable_sets(g).sets) {
    if (!h1) continue;
    VertexSet reach = 0;
    for_each_vertex(h1, [&](int v) { reach |= g.neighbors(v); });
    // Everything distinguishing h1 outside h2 breaks condition (ii), so h2
    // contains all distinguishers and lies inside N(h1).
    const VertexSet forced = distinguishers(g, h1);
    if (!g.is_stable(forced)) continue;
    const VertexSet free = reach & ~forced;
    VertexSet extra = free;
    while (true) {
      if (++work > kWorkLimit) throw BudgetExceeded("bi-module enumeration exceeded its work limit");
      const VertexSet h2 = forced | extra;
      if (h2 && lowest(h1) < lowest(h2) && is_bimodule(g, h1, h2)) out.push_back({h1, h2});
      if (extra == 0) break;
      extra = (extra - 1) & free;
    }
  }
  std::sort(out.begin(), out.end(), [](const BiModulePair& a, const BiModulePair& b) {
    return a.h1 != b.h1 ? a.h1 < b.h1 : a.h2 < b.h2;
  });
  return out;
}

VertexSet Substitution::inserted() const {
  VertexSet s = 0;
  for (int v : from_second) s |= singleton(v);
  return s;
}

Substitution substitute(const Graph& g1, int v, const Graph& g2) {
  if (v < 0 || v >= g1.order()) throw DomainError("substitution vertex out of range");
  const int n = g1.order() - 1 + g2.order();
  if (n > kMaxVertices) throw DomainError("substitution result exceeds 32 vertices");
  Substitution s;
  s.graph = Graph(n);
  s.from_first.assign(g1.order(), -1);
  int next = 0;
  for (int u = 0; u < g1.order(); ++u)
    if (u != v) s.from_first[u] = next++;
  for (int u = 0; u < g2.order(); ++u) s.from_second.push_back(next++);
  for (auto [a, b] : g1.edges())
    if (a != v && b != v) s.graph.add_edge(s.from_first[a], s.from_first[b]);
  for (auto [a, b] : g2.edges()) s.graph.add_edge(s.from_second[a], s.from_second[b]);
  for_each_vertex(g1.neighbors(v), [&](int u) {
    for (int w : s.from_second) s.graph.add_edge(s.from_first[u], w);
  });
  return s;
}

}  // namespace stabpoly
