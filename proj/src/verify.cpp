#include "stabpoly/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "stabpoly/composition.hpp"
#include "stabpoly/graph_io.hpp"
#include "stabpoly/linalg.hpp"
#include "stabpoly/modular.hpp"
#include "stabpoly/recognition.hpp"
#include "stabpoly/separation.hpp"
#include "stabpoly/stable_sets.hpp"

namespace stabpoly {

const CatalogBuild& VerifyContext::build() {
  if (!build_) build_ = build_catalog(options_.hull);
  return *build_;
}

const Catalog& VerifyContext::catalog() {
  if (loaded_) return *loaded_;
  return build().catalog;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "h1-641",      "h2-26617",    "catalog-counts", "h2-structure", "ferry",
      "lemma3",      "structure",   "composition",    "separation",   "p5-corollary",
  };
  return names;
}

int criterion_id(const std::string& name) {
  const auto& names = suite_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name || std::to_string(i + 1) == name) return static_cast<int>(i) + 1;
  return 0;
}

std::vector<Graph> connected_graphs(int n) {
  static std::vector<std::vector<Graph>> all = {{Graph(0)}};
  while (static_cast<int>(all.size()) <= n) {
    const int k = static_cast<int>(all.size());
    std::map<CanonicalForm, Graph> next;
    for (const Graph& small : all.back())
      for (VertexSet nbr = 0; nbr < (VertexSet{1} << (k - 1)); ++nbr) {
        Graph g(k);
        for (auto [a, b] : small.edges()) g.add_edge(a, b);
        for_each_vertex(nbr, [&](int u) { g.add_edge(k - 1, u); });
        Graph c = canonical_graph(g);
        c.set_labels({});
        next.try_emplace(canonical_form(c), std::move(c));
      }
    std::vector<Graph> level;
    for (auto& [form, g] : next) level.push_back(std::move(g));
    all.push_back(std::move(level));
  }
  std::vector<Graph> out;
  for (const Graph& g : all[n])
    if (is_connected(g)) out.push_back(g);
  return out;
}

std::vector<Graph> bipartite_mis_counterexamples(int n) {
  std::vector<Graph> out;
  for (int a = 1; 2 * a <= n; ++a) {
    const int b = n - a;
    const VertexSet top = VertexSet{1} << b;
    std::vector<VertexSet> rows(a, 1);
    // Rows of the biadjacency matrix in nondecreasing order.
    while (true) {
      Graph g(n);
      for (int i = 0; i < a; ++i)
        for_each_vertex(rows[i], [&](int j) { g.add_edge(i, a + j); });
      if (is_connected(g) && !contains_induced_path(g, 6) &&
          static_cast<int>(count_maximal_stable_sets(g)) >= n)
        out.push_back(g);
      int i = a - 1;
      while (i >= 0 && rows[i] + 1 == top) --i;
      if (i < 0) break;
      ++rows[i];
      for (int j = i + 1; j < a; ++j) rows[j] = rows[i];
    }
  }
  return out;
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Replaces vertex v by a stable set of `copies` twins.
Graph blow_up(const Graph& g, int v, int copies) {
  Graph out = g;
  if (copies <= 1) return out;
  return substitute(g, v, graphs::edgeless(copies)).graph;
}

Graph greedy_triangle_p6_free(std::mt19937_64& rng, int k) {
  Graph g(k);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) pairs.push_back({u, v});
  std::shuffle(pairs.begin(), pairs.end(), rng);
  const int target = uniform(rng, k - 1, 2 * k);
  for (auto [u, v] : pairs) {
    if (g.edge_count() >= target) break;
    if (g.neighbors(u) & g.neighbors(v)) continue;
    g.add_edge(u, v);
    if (k >= 6 && contains_induced_path(g, 6)) g.remove_edge(u, v);
  }
  return g;
}

Graph random_triangle_free_component(std::mt19937_64& rng, int budget) {
  const int kind = uniform(rng, 0, 2);
  Graph base;
  if (kind == 0 && budget >= 5) {
    const Graph h2 = build_h2();
    const int k = uniform(rng, 5, std::min(budget, 16));
    std::vector<int> order(16);
    for (int i = 0; i < 16; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    VertexSet w = 0;
    for (int i = 0; i < k; ++i) w |= singleton(order[i]);
    base = induced_subgraph(h2, w);
  } else if (kind == 1 && budget >= 5) {
    base = graphs::cycle(5);
  } else {
    base = greedy_triangle_p6_free(rng, uniform(rng, 1, std::min(budget, 9)));
  }
  base.set_labels({});
  while (base.order() < budget && uniform(rng, 0, 2) == 0) {
    const int copies = uniform(rng, 2, std::min(3, budget - base.order() + 1));
    base = blow_up(base, uniform(rng, 0, base.order() - 1), copies);
  }
  return base;
}

Graph random_multipartite(std::mt19937_64& rng, int budget) {
  std::vector<int> parts;
  int used = 0;
  const int count = uniform(rng, 2, 4);
  for (int i = 0; i < count && used < budget; ++i) {
    const int size = uniform(rng, 1, std::min(3, budget - used));
    parts.push_back(size);
    used += size;
  }
  if (parts.size() < 2) return Graph(1);
  return graphs::complete_multipartite(parts);
}

}  // namespace

Graph random_p6paw_free_graph(std::mt19937_64& rng, int max_order) {
  Graph g(0);
  const int components = uniform(rng, 1, 3);
  for (int c = 0; c < components && g.order() < max_order; ++c) {
    const int budget = max_order - g.order();
    Graph part = (c > 0 && uniform(rng, 0, 2) == 0) ? random_multipartite(rng, budget)
                                                     : random_triangle_free_component(rng, budget);
    if (part.order() > budget) continue;
    g = disjoint_union(g, part);
  }
  if (g.order() == 0) g = graphs::cycle(5);
  g.set_labels({});
  return g;
}

RationalVector random_query_point(std::mt19937_64& rng, const Graph& g) {
  const int n = g.order();
  const int d = uniform(rng, 1, 64);
  std::vector<int> k(n, 0);
  const int mode = uniform(rng, 0, 9);
  if (mode < 8) {
    const std::vector<VertexSet> sets = maximal_stable_sets(g).sets;
    int left = d;
    const int t = uniform(rng, 1, 3);
    for (int i = 0; i < t && left > 0; ++i) {
      const int w = i + 1 == t ? left : uniform(rng, 1, left);
      left -= w;
      for_each_vertex(sets[uniform(rng, 0, static_cast<int>(sets.size()) - 1)], [&](int v) { k[v] += w; });
    }
    if (mode >= 3)
      for (int v = 0; v < n; ++v)
        if (uniform(rng, 0, 9) < 3) k[v] = std::max(0, k[v] + uniform(rng, -2, 3));
    if (mode == 7 && uniform(rng, 0, 3) == 0) k[uniform(rng, 0, n - 1)] = -uniform(rng, 1, 3);
  } else {
    for (int v = 0; v < n; ++v) k[v] = uniform(rng, 0, d);
  }
  RationalVector y(n);
  for (int v = 0; v < n; ++v) y(v) = make_rational(k[v], d);
  return y;
}

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep = ", ") {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : sep) + p;
  return s;
}

using Check = std::pair<bool, std::string>;

// Facet-inducing classes among single-vertex deletions, by canonical form.
std::map<CanonicalForm, std::vector<int>> deletion_classes(const Graph& g) {
  std::map<CanonicalForm, std::vector<int>> classes;
  for (int v = 0; v < g.order(); ++v) classes[canonical_form(delete_vertices(g, singleton(v)))].push_back(v);
  return classes;
}

std::string label_list(const Graph& g, const std::vector<int>& vs) {
  std::vector<std::string> parts;
  for (int v : vs) parts.push_back(std::to_string(g.labels().empty() ? v + 1 : g.labels()[v]));
  return join(parts, ",");
}

Check c1_h1(VerifyContext& ctx) {
  const Graph h1 = build_h1();
  const int x = h1.vertex_with_label(16);
  std::vector<std::string> parts;
  std::vector<int> hits;
  std::size_t central = 0;
  for (const auto& [form, vs] : deletion_classes(h1)) {
    const std::size_t count = full_facets(delete_vertices(h1, singleton(vs.front())), ctx.options().hull).size();
    parts.push_back("{" + label_list(h1, vs) + "}:" + std::to_string(count));
    if (count == 641) hits.insert(hits.end(), vs.begin(), vs.end());
    if (std::find(vs.begin(), vs.end(), x) != vs.end()) central = count;
  }
  return {central == 641, "|Phi(H1-{16})| = " + std::to_string(central) + " (expected 641); deletions by class " +
                              join(parts, " ") + "; deletions giving 641: " +
                              (hits.empty() ? std::string("none") : label_list(h1, hits))};
}

Check c2_h2(VerifyContext& ctx) {
  const std::size_t count = stab_facets(build_h2(), ctx.options().hull).size();
  return {count == 26617, "STAB(H2) has " + std::to_string(count) + " facets (expected 26617)"};
}

Check c3_counts(VerifyContext& ctx) {
  const CatalogBuild& b = ctx.build();
  std::set<CanonicalForm> f1, f2, f3, all;
  for (const auto& c : b.h1) f1.insert(c.canonical);
  for (const auto& c : b.h2) f2.insert(c.canonical);
  for (const auto& c : b.h3) f3.insert(c.canonical);
  all.insert(f1.begin(), f1.end());
  all.insert(f2.begin(), f2.end());
  all.insert(f3.begin(), f3.end());
  const CanonicalForm k2 = canonical_form(graphs::complete(2)), c5 = canonical_form(graphs::cycle(5));
  int common = 0;
  for (const auto& f : f1)
    if (f2.count(f) && f3.count(f) && f != k2 && f != c5) ++common;
  const bool ok = f1.size() == 3 && f2.size() == 15 && f3.size() == 14 && all.size() == 26 && common == 1;
  std::string detail = "H1 " + std::to_string(f1.size()) + " (3), H2 " + std::to_string(f2.size()) + " (15), H3 " +
                       std::to_string(f3.size()) + " (14), union " + std::to_string(all.size()) +
                       " (26), common beyond K2,C5 " + std::to_string(common) + " (1)";
  if (!b.naming.problems.empty()) detail += "; naming: " + join(b.naming.problems, "; ");
  return {ok, detail};
}

Check c4_h2_structure(VerifyContext& ctx) {
  const HullOptions& hull = ctx.options().hull;
  const Graph h2 = build_h2();
  std::vector<std::string> failed;
  for (int v = 0; v < h2.order(); ++v)
    if (h2.degree(v) != 5) failed.push_back("degree of " + std::to_string(v) + " is " + std::to_string(h2.degree(v)));
  const auto vclasses = deletion_classes(h2);
  if (vclasses.size() != 1) failed.push_back(std::to_string(vclasses.size()) + " classes of H2-{v}");

  std::map<CanonicalForm, std::vector<std::pair<int, int>>> eclasses;
  const auto edges = h2.edges();
  std::vector<CanonicalForm> eform;
  for (auto [u, v] : edges) {
    eform.push_back(canonical_form(delete_vertices(h2, singleton(u) | singleton(v))));
    eclasses[eform.back()].push_back({u, v});
  }
  int disjoint_mismatch = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [a, b] = edges[i];
      const auto [c, d] = edges[j];
      if (a != c && a != d && b != c && b != d && eform[i] != eform[j]) ++disjoint_mismatch;
    }
  if (disjoint_mismatch) failed.push_back(std::to_string(disjoint_mismatch) + " pairs of disjoint edges differ");

  auto inducing = [&](const Graph& g) {
    auto cert = is_facet_inducing(g, hull);
    return cert && verify_certificate(g, *cert).empty();
  };
  for (const auto& [form, vs] : vclasses)
    if (!inducing(delete_vertices(h2, singleton(vs.front()))))
      failed.push_back("H2-{" + label_list(h2, vs) + "} not facet-inducing");
  for (const auto& [form, es] : eclasses)
    if (!inducing(delete_vertices(h2, singleton(es.front().first) | singleton(es.front().second))))
      failed.push_back("an H2 edge deletion class is not facet-inducing");
  const Graph h1 = build_h1();
  for (const auto& [form, vs] : deletion_classes(h1))
    if (!inducing(delete_vertices(h1, singleton(vs.front()))))
      failed.push_back("H1-{" + label_list(h1, vs) + "} not facet-inducing");
  std::string detail = "5-regular, " + std::to_string(vclasses.size()) + " class of H2-{v}, " +
                       std::to_string(eclasses.size()) + " class(es) of H2-{u,v} over " +
                       std::to_string(edges.size()) + " edges, " + std::to_string(deletion_classes(h1).size()) +
                       " classes of H1-{v} checked with certificates";
  if (!failed.empty()) detail = join(failed, "; ");
  return {failed.empty(), detail};
}

Check c5_ferry(VerifyContext& ctx) {
  int tested = 0;
  std::vector<std::string> failed;
  for (int m = 2; m <= 4; ++m)
    for (int l = 0; l <= m; ++l)
      for (int flags = 0; flags < 5; ++flags) {
        FerrySpec s{m, l, flags == 1 || flags >= 3, flags == 2 || flags >= 3, flags == 4};
        const Ferry f = build_ferry(s);
        ++tested;
        if (is_facet_inducing(f.graph, ctx.options().hull))
          failed.push_back("m=" + std::to_string(m) + " l=" + std::to_string(l) + " flags=" + std::to_string(flags));
      }
  return {failed.empty(), std::to_string(tested) + " ferries, facet-inducing: " +
                              (failed.empty() ? std::string("none") : join(failed))};
}

Check c6_bipartite(VerifyContext&) {
  std::vector<std::string> per_n;
  std::string witness;
  int total = 0, full_rank = 0;
  for (int n = 3; n <= 9; ++n) {
    const std::vector<Graph> bad = bipartite_mis_counterexamples(n);
    if (bad.empty()) continue;
    per_n.push_back("n=" + std::to_string(n) + ": " + std::to_string(bad.size()));
    if (witness.empty())
      witness = to_graph6(bad.front()) + " with " + std::to_string(maximal_stable_sets(bad.front()).size()) +
                " maximal stable sets";
    for (const Graph& g : bad) {
      ++total;
      const auto sets = maximal_stable_sets(g).sets;
      RationalMatrix m = RationalMatrix::Zero(static_cast<Eigen::Index>(sets.size()), n);
      for (std::size_t r = 0; r < sets.size(); ++r) for_each_vertex(sets[r], [&](int v) { m(r, v) = 1; });
      full_rank += exact_rank(m) == n;
    }
  }
  if (!total) return {true, "no connected bipartite P6-free graph on 3..9 vertices has n maximal stable sets"};
  return {false, std::to_string(total) + " counterexamples (" + join(per_n) + "), smallest " + witness +
                     "; with n linearly independent maximal stable sets: " + std::to_string(full_rank)};
}

Check c7_structure(VerifyContext& ctx) {
  const HullOptions& hull = ctx.options().hull;
  std::map<std::string, int> violations;
  int graphs_seen = 0, inducing = 0, facets_checked = 0;
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : connected_graphs(n)) {
      ++graphs_seen;
      const std::vector<Inequality> phi = full_facets(g, hull);
      if (phi.empty()) continue;
      ++inducing;
      if (has_clique_cutset(g)) ++violations["clique cutset"];
      for (VertexSet m : find_modules(g).maximal_homogeneous_sets)
        if (full_facets(induced_subgraph(g, m), hull).empty()) ++violations["homogeneous set"];
      if (is_triangle_free(g) && !is_prime(g)) ++violations["triangle-free not prime"];
      if (g.order() < 6 || !contains_induced_path(g, 6))
        for (const BiModulePair& bm : enumerate_bimodules(g))
          if (set_size(bm.h1) != 1 || set_size(bm.h2) != 1) ++violations["bi-module"];
      for (const Inequality& f : phi) {
        ++facets_checked;
        if (!check_mahjoub(g, f)) ++violations["Mahjoub bound"];
        if (!check_degree2_tightset(g, f)) ++violations["degree-2 tight set"];
      }
    }
  std::string detail = std::to_string(graphs_seen) + " connected graphs, " + std::to_string(inducing) +
                       " facet-inducing, " + std::to_string(facets_checked) + " full facets";
  for (const auto& [what, count] : violations) detail += "; " + what + ": " + std::to_string(count);
  return {violations.empty(), detail};
}

Check c8_composition(VerifyContext& ctx) {
  const HullOptions& hull = ctx.options().hull;
  const std::vector<std::pair<std::string, Graph>> base = {
      {"K2", graphs::complete(2)}, {"P3", graphs::path(3)},      {"P4", graphs::path(4)},
      {"C5", graphs::cycle(5)},    {"E2", graphs::edgeless(2)}, {"E3", graphs::edgeless(3)},
  };
  int cases = 0;
  std::vector<std::string> bad;
  for (const auto& [n1, g1] : base)
    for (const auto& [n2, g2] : base)
      for (int v = 0; v < g1.order(); ++v) {
        ++cases;
        const LinearSystem composed = chvatal_substitute(stab_facets(g1, hull), v, stab_facets(g2, hull));
        if (!composed.same_rows(stab_facets(substitute(g1, v, g2).graph, hull)))
          bad.push_back(n1 + "(" + std::to_string(v) + "," + n2 + ")");
      }
  return {bad.empty(), std::to_string(cases) + " substitutions" + (bad.empty() ? "" : ", mismatches: " + join(bad))};
}

Check c9_separation(VerifyContext& ctx) {
  const VerifyOptions& opt = ctx.options();
  const Catalog& catalog = ctx.catalog();
  std::mt19937_64 rng(opt.seed);
  int inside = 0, violated = 0, mismatches = 0, not_facet = 0, wrong_amount = 0;
  std::map<std::string, int> sources;
  for (int i = 0; i < opt.separation_graphs; ++i) {
    const Graph g = random_p6paw_free_graph(rng, opt.separation_max_order);
    const Separator sep(g, catalog);
    const LinearSystem stab = stab_facets(g, opt.hull);
    for (int p = 0; p < opt.separation_points; ++p) {
      const RationalVector y = random_query_point(rng, g);
      const SeparationResult r = sep.separate(y);
      const bool member = membership_oracle(g, y);
      if (member == r.violated()) ++mismatches;
      if (!r.violated()) {
        ++inside;
        continue;
      }
      ++violated;
      ++sources[r.source];
      if (!stab.contains(r.row->primitive())) ++not_facet;
      if (r.row->violation(y) != r.amount || r.amount <= 0) ++wrong_amount;
    }
  }
  std::string detail = std::to_string(opt.separation_graphs) + " graphs x " + std::to_string(opt.separation_points) +
                       " points: " + std::to_string(inside) + " inside, " + std::to_string(violated) + " violated (";
  std::vector<std::string> parts;
  for (const auto& [s, c] : sources) parts.push_back(s + " " + std::to_string(c));
  detail += join(parts) + "); verdict mismatches " + std::to_string(mismatches) + ", rows not facets " +
            std::to_string(not_facet) + ", amount errors " + std::to_string(wrong_amount);
  return {mismatches == 0 && not_facet == 0 && wrong_amount == 0, detail};
}

Check c10_p5(VerifyContext& ctx) {
  std::vector<std::string> kept;
  for (const CatalogEntry& e : ctx.build().catalog)
    if (e.graph.order() < 5 || !contains_induced_path(e.graph, 5)) kept.push_back(e.name);
  std::sort(kept.begin(), kept.end());
  return {kept == std::vector<std::string>{"C5", "K2"}, "P5-free catalog members: " + join(kept)};
}

const char* titles[] = {
    "full facets of H1 minus its central vertex",
    "facet count of STAB(H2)",
    "derived catalog class counts",
    "H2 and H1 structural claims",
    "ferries are not facet-inducing",
    "bipartite P6-free graphs have fewer than n maximal stable sets",
    "structure properties on connected graphs up to 7 vertices",
    "substitution product equals the direct hull",
    "separation oracle agrees with LP membership",
    "P5-free catalog members are K2 and C5",
};

}  // namespace

CriterionResult run_criterion(int id, VerifyContext& context) {
  if (id < 1 || id > 10) throw DomainError("unknown criterion " + std::to_string(id));
  using Fn = Check (*)(VerifyContext&);
  static const Fn fns[] = {c1_h1,   c2_h2,    c3_counts,      c4_h2_structure, c5_ferry,
                           c6_bipartite, c7_structure, c8_composition, c9_separation,   c10_p5};
  CriterionResult r;
  r.id = id;
  r.suite = suite_names()[id - 1];
  r.title = titles[id - 1];
  const auto t0 = std::chrono::steady_clock::now();
  try {
    auto [ok, detail] = fns[id - 1](context);
    r.passed = ok;
    r.detail = std::move(detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace stabpoly
