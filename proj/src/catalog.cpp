#include "stabpoly/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "stabpoly/graph_io.hpp"
#include "stabpoly/modular.hpp"
#include "stabpoly/recognition.hpp"
#include "stabpoly/system_io.hpp"

namespace stabpoly {

namespace {

int mod5(int i) { return ((i % 5) + 5) % 5; }

std::vector<int> iota_labels(int n) {
  std::vector<int> labels(n);
  for (int v = 0; v < n; ++v) labels[v] = v + 1;
  return labels;
}

}  // namespace

Graph build_h1() {
  Graph g(16);
  const int y = 5, z = 10, x = 15;
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, mod5(i + 1));
    g.add_edge(y + i, i);
    g.add_edge(y + i, y + mod5(i + 2));
    g.add_edge(z + i, mod5(i - 1));
    g.add_edge(z + i, mod5(i + 1));
    g.add_edge(z + i, y + mod5(i + 2));
    g.add_edge(z + i, y + mod5(i + 3));
    g.add_edge(z + i, z + mod5(i + 1));
    g.add_edge(x, z + i);
  }
  g.set_labels(iota_labels(16));
  return g;
}

Graph build_h2() {
  Graph g(16);
  auto at = [](int layer, int i) { return 4 * layer + ((i % 4) + 4) % 4; };
  const int a = 0, b = 1, c = 2, d = 3;
  for (int layer = 0; layer < 4; ++layer)
    for (int i = 0; i < 4; ++i) g.add_edge(at(layer, i), at(layer, i + 1));
  for (int i = 0; i < 4; ++i) {
    g.add_edge(at(a, i), at(b, i));
    g.add_edge(at(b, i), at(c, i));
    g.add_edge(at(c, i), at(d, i));
    g.add_edge(at(d, i), at(a, i));
    g.add_edge(at(a, i), at(c, i + 2));
    g.add_edge(at(b, i), at(d, i + 2));
  }
  g.set_labels({16, 11, 9, 12, 14, 5, 4, 3, 6, 1, 15, 8, 13, 2, 7, 10});
  return g;
}

Graph build_h3() {
  Graph g(15);
  auto v = [](int i) { return i - 1; };
  auto y = [](int i) { return 5 + (i - 2); };
  const int z24 = 9, z35 = 10, z52 = 11, w24 = 12, w35 = 13, x = 14;
  for (int i = 1; i <= 5; ++i) g.add_edge(v(i), v(i % 5 + 1));
  for (int i = 2; i <= 5; ++i) g.add_edge(y(i), v(i));
  g.add_edge(y(2), y(4));
  g.add_edge(y(2), y(5));
  g.add_edge(y(3), y(5));
  for (int z : {z24, w24}) {
    g.add_edge(z, v(2));
    g.add_edge(z, v(4));
    g.add_edge(z, y(5));
  }
  for (int z : {z35, w35}) {
    g.add_edge(z, v(3));
    g.add_edge(z, v(5));
    g.add_edge(z, y(2));
  }
  g.add_edge(z52, v(5));
  g.add_edge(z52, v(2));
  g.add_edge(z52, y(3));
  g.add_edge(z52, y(4));
  g.add_edge(z24, z35);
  g.add_edge(z24, w35);
  g.add_edge(z35, w24);
  g.add_edge(x, w24);
  g.add_edge(x, w35);
  g.set_labels(iota_labels(15));
  return g;
}

namespace {

Inequality permute_row(const Inequality& row, const std::vector<int>& perm) {
  Inequality out = row;
  for (int v = 0; v < row.size(); ++v) out.coeffs(perm[v]) = row.coeffs(v);
  return out;
}

bool class_less(const DerivedClass& a, const DerivedClass& b) {
  if (a.graph.order() != b.graph.order()) return a.graph.order() > b.graph.order();
  return a.canonical < b.canonical;
}

}  // namespace

std::vector<DerivedClass> derive_catalog(const Graph& h, const HullOptions& options) {
  return derive_catalog(h, stab_facets(h, options), options);
}

std::vector<DerivedClass> derive_catalog(const Graph& h, const LinearSystem& stab, const HullOptions& options) {
  std::set<VertexSet> seen;
  std::map<CanonicalForm, DerivedClass> classes;
  for (const Inequality& row : stab.rows) {
    if (row.kind != Inequality::Kind::Facet) continue;
    const VertexSet w = row.support();
    if (set_size(w) < 2 || !seen.insert(w).second) continue;
    const Graph sub = induced_subgraph(h, w);
    if (!is_connected(sub) || !is_p6_triangle_free(sub) || !is_prime(sub)) continue;
    const std::vector<int> perm = canonical_labeling(sub);
    Graph canon = permute(sub, perm);
    canon.set_labels({});
    CanonicalForm form = canonical_form(canon);
    if (classes.count(form)) continue;
    DerivedClass cls{canon, form, w, {}};
    if (w == h.vertices()) {
      for (const Inequality& phi : full_facets(stab)) cls.phi.push_back(permute_row(phi, perm));
      std::sort(cls.phi.begin(), cls.phi.end(), row_less);
    } else {
      cls.phi = full_facets(canon, options);
    }
    if (cls.phi.empty()) throw std::logic_error("facet support without a full facet");
    classes.emplace(std::move(form), std::move(cls));
  }
  std::vector<DerivedClass> out;
  for (auto& [form, cls] : classes) out.push_back(std::move(cls));
  std::sort(out.begin(), out.end(), class_less);
  return out;
}

namespace {

struct DeletionName {
  const char* name;
  std::vector<int> labels;
};

const std::vector<DeletionName>& h2_deletions() {
  static const std::vector<DeletionName> list = {
      {"G2", {}},
      {"G3", {1}},
      {"G4", {1, 2}},
      {"G5", {1, 2, 3}},
      {"G6", {1, 2, 4}},
      {"G7", {1, 2, 3, 4}},
      {"G8", {1, 2, 3, 12}},
      {"G9", {1, 2, 3, 13}},
      {"G10", {1, 2, 3, 4, 5}},
      {"G11", {1, 2, 3, 4, 12}},
      {"G12", {1, 2, 3, 4, 5, 11}},
      {"G13", {1, 2, 3, 4, 5, 11, 14}},
  };
  return list;
}

// Orders of G14..G24 implied by the sizes of their deletion sets from H3.
const std::vector<int>& h3_expected_orders() {
  static const std::vector<int> orders = {15, 14, 14, 13, 12, 12, 11, 11, 10, 10, 9};
  return orders;
}

CanonicalForm form_of(const Graph& g) { return canonical_form(g); }

std::vector<NamedDeletion> compute_h2_deletions() {
  const Graph h2 = build_h2();
  std::vector<NamedDeletion> out;
  for (const auto& d : h2_deletions()) {
    const VertexSet w = h2.vertices_with_labels(d.labels);
    out.push_back({d.name, d.labels, form_of(delete_vertices(h2, w)), 0});
  }
  return out;
}

std::string join_names(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
  return s;
}

int name_rank(const std::string& name) {
  if (name == "K2") return 0;
  if (name == "C5") return 1;
  if (name.size() > 1 && name[0] == 'G' && std::all_of(name.begin() + 1, name.end(), ::isdigit))
    return 1 + std::stoi(name.substr(1));
  if (name.rfind("F(", 0) == 0) return 500;
  return 1000;
}

}  // namespace

Catalog name_classes(const std::vector<DerivedClass>& h1, const std::vector<DerivedClass>& h2,
                     const std::vector<DerivedClass>& h3, NamingReport& report) {
  const CanonicalForm k2 = form_of(graphs::complete(2));
  const CanonicalForm c5 = form_of(graphs::cycle(5));
  std::map<CanonicalForm, CatalogEntry> entries;
  auto absorb = [&](const std::vector<DerivedClass>& list, const char* source) {
    for (const DerivedClass& cls : list) {
      auto [it, fresh] = entries.try_emplace(cls.canonical);
      if (fresh) {
        it->second.graph = cls.graph;
        it->second.canonical = cls.canonical;
        it->second.phi = cls.phi;
      }
      it->second.sources.push_back(source);
    }
  };
  absorb(h1, "H1");
  absorb(h2, "H2");
  absorb(h3, "H3");

  auto by_order = [](const CatalogEntry* a, const CatalogEntry* b) {
    if (a->graph.order() != b->graph.order()) return a->graph.order() > b->graph.order();
    return a->canonical < b->canonical;
  };
  auto has = [](const CatalogEntry& e, const char* s) {
    return std::find(e.sources.begin(), e.sources.end(), s) != e.sources.end();
  };
  for (auto* fixed : {&k2, &c5}) {
    auto it = entries.find(*fixed);
    if (it == entries.end()) {
      report.problems.push_back(std::string(fixed == &k2 ? "K2" : "C5") + " was not derived");
    } else {
      it->second.name = fixed == &k2 ? "K2" : "C5";
    }
  }
  report.h2 = compute_h2_deletions();
  for (NamedDeletion& d : report.h2) {
    auto it = entries.find(d.canonical);
    d.matches = it != entries.end() && has(it->second, "H2") ? 1 : 0;
    if (!d.matches) {
      report.problems.push_back(d.name + " (H2 deletion) matches no derived H2 class");
      continue;
    }
    if (!it->second.name.empty()) {
      report.problems.push_back(d.name + " coincides with " + it->second.name);
      continue;
    }
    it->second.name = d.name;
  }

  // Balanced ferries with x0 ~ y0 are facet-inducing; keep them apart from G1.
  for (auto& [form, e] : entries) {
    const int n = e.graph.order();
    if (!e.name.empty() || n < 8 || (n - 2) % 3 != 0) continue;
    const int m = (n - 2) / 3;
    if (form_of(build_ferry({m, m, true, true, true}).graph) == form) {
      e.name = "F(" + std::to_string(m) + "," + std::to_string(m) + ")";
      report.problems.push_back("ferry " + e.name + " is facet-inducing");
    }
  }

  std::vector<CatalogEntry*> common;
  for (auto& [form, e] : entries)
    if (e.name.empty() && has(e, "H1") && has(e, "H2") && has(e, "H3")) common.push_back(&e);
  std::sort(common.begin(), common.end(), by_order);
  if (!common.empty()) common.front()->name = "G1";
  if (common.size() != 1)
    report.problems.push_back(std::to_string(common.size()) +
                              " unnamed classes besides K2 and C5 are common to H1, H2 and H3 (expected 1)");

  std::vector<CatalogEntry*> h3_only;
  for (auto& [form, e] : entries)
    if (e.name.empty() && has(e, "H3") && !has(e, "H1") && !has(e, "H2")) h3_only.push_back(&e);
  std::sort(h3_only.begin(), h3_only.end(), by_order);
  for (std::size_t i = 0; i < h3_only.size(); ++i) {
    h3_only[i]->name = "G" + std::to_string(14 + i);
    report.h3_orders.push_back(h3_only[i]->graph.order());
  }
  if (report.h3_orders != h3_expected_orders())
    report.problems.push_back("orders of the H3-only classes differ from the named H3 deletions");

  int extra = 0;
  for (auto& [form, e] : entries)
    if (e.name.empty()) {
      e.name = "X" + std::to_string(++extra);
      report.problems.push_back("unnamed class " + e.name + " on " + std::to_string(e.graph.order()) +
                                " vertices from " + join_names(e.sources));
    }

  Catalog out;
  for (auto& [form, e] : entries) out.push_back(std::move(e));
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    const int ra = name_rank(a.name), rb = name_rank(b.name);
    return ra != rb ? ra < rb : a.name < b.name;
  });
  return out;
}

CatalogBuild build_catalog(const HullOptions& options) {
  CatalogBuild build;
  build.h1 = derive_catalog(build_h1(), options);
  build.h2 = derive_catalog(build_h2(), options);
  build.h3 = derive_catalog(build_h3(), options);
  build.catalog = name_classes(build.h1, build.h2, build.h3, build.naming);
  return build;
}

NamingReport map_named_deletions(const Catalog& catalog) {
  NamingReport report;
  report.h2 = compute_h2_deletions();
  for (NamedDeletion& d : report.h2) {
    const CatalogEntry* e = find_entry(catalog, d.canonical);
    d.matches = e ? 1 : 0;
    if (!e) {
      report.problems.push_back(d.name + " matches no catalog class");
    } else if (e->name != d.name) {
      report.problems.push_back(d.name + " matches the class named " + e->name);
    }
  }
  for (const CatalogEntry& e : catalog) {
    const int rank = name_rank(e.name);
    if (rank >= 15 && rank <= 25) report.h3_orders.push_back(e.graph.order());
  }
  if (report.h3_orders != h3_expected_orders())
    report.problems.push_back("orders of G14..G24 differ from the named H3 deletions");
  return report;
}

const CatalogEntry* find_entry(const Catalog& catalog, const std::string& name) {
  for (const CatalogEntry& e : catalog)
    if (e.name == name) return &e;
  return nullptr;
}

const CatalogEntry* find_entry(const Catalog& catalog, const CanonicalForm& form) {
  for (const CatalogEntry& e : catalog)
    if (e.canonical == form) return &e;
  return nullptr;
}

void save_catalog(const Catalog& catalog, const std::filesystem::path& path) {
  nlohmann::json entries = nlohmann::json::array();
  for (const CatalogEntry& e : catalog) {
    nlohmann::json phi = nlohmann::json::array();
    for (const Inequality& row : e.phi) phi.push_back(to_json(row));
    entries.push_back({{"name", e.name},
                       {"graph6", to_graph6(e.graph)},
                       {"labels", e.graph.labels()},
                       {"phi", phi},
                       {"source", e.sources},
                       {"canonical", to_graph6(canonical_graph(e.graph))}});
  }
  const nlohmann::json doc = {{"format", kCatalogFormat}, {"version", kCatalogVersion}, {"entries", entries}};
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write catalog file " + path.string());
  out << doc.dump(1) << '\n';
  if (!out) throw DomainError("failed writing catalog file " + path.string());
}

Catalog load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read catalog file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("catalog file " + path.string() + " is not valid JSON: " + e.what());
  }
  try {
    if (doc.at("format").get<std::string>() != kCatalogFormat) throw DomainError("catalog: wrong format tag");
    const int version = doc.at("version").get<int>();
    if (version != kCatalogVersion)
      throw DomainError("catalog: version " + std::to_string(version) + " is not supported");
    Catalog catalog;
    for (const auto& item : doc.at("entries")) {
      CatalogEntry e;
      e.name = item.at("name").get<std::string>();
      e.graph = from_graph6(item.at("graph6").get<std::string>());
      const auto labels = item.value("labels", std::vector<int>{});
      if (!labels.empty()) e.graph.set_labels(labels);
      e.canonical = canonical_form(e.graph);
      if (to_graph6(canonical_graph(e.graph)) != item.at("canonical").get<std::string>())
        throw DomainError("catalog: canonical form of " + e.name + " does not match its graph");
      for (const auto& row : item.at("phi")) {
        e.phi.push_back(inequality_from_json(row));
        if (e.phi.back().size() != e.graph.order()) throw DomainError("catalog: phi row of wrong length");
      }
      e.sources = item.at("source").get<std::vector<std::string>>();
      catalog.push_back(std::move(e));
    }
    return catalog;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("catalog: ") + e.what());
  }
}

}  // namespace stabpoly
