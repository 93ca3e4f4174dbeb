#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "stabpoly/catalog.hpp"
#include "stabpoly/composition.hpp"
#include "stabpoly/graph_io.hpp"
#include "stabpoly/modular.hpp"
#include "stabpoly/polytope.hpp"
#include "stabpoly/recognition.hpp"
#include "stabpoly/separation.hpp"
#include "stabpoly/system_io.hpp"
#include "stabpoly/verify.hpp"

using namespace stabpoly;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kViolated = 1, kInputError = 2, kBudget = 3 };

struct Config {
  int budget_vertices = 18;
  std::size_t ray_cap = 4'000'000;
  int workers = 1;
  std::string catalog;
  std::uint64_t seed = 20240617;
  std::string format = "table";

  HullOptions hull() const {
    HullOptions o;
    o.budget_vertices = budget_vertices;
    o.dd.ray_cap = ray_cap;
    o.dd.workers = workers;
    return o;
  }
  bool as_json() const { return format == "json"; }
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph read_graph(const std::string& path) { return parse_graph(read_text(path)); }

std::string row_text(const Inequality& row) {
  std::string s;
  for (int i = 0; i < row.size(); ++i) s += (i ? " " : "") + to_string(row.coeffs(i));
  return s + " <= " + to_string(row.rhs);
}

std::string flag(bool b) { return b ? "yes" : "no"; }

std::string vertex_list(VertexSet s) {
  std::string out;
  for (int v : to_vector(s)) out += (out.empty() ? "" : ",") + std::to_string(v);
  return "{" + out + "}";
}

const Catalog& require_catalog(const Config& cfg, std::optional<Catalog>& cache) {
  if (!cache) {
    if (cfg.catalog.empty())
      throw DomainError("no catalog: pass --catalog or set STABPOLY_CATALOG (build one with 'catalog build')");
    cache = load_catalog(cfg.catalog);
  }
  return *cache;
}

int cmd_facets(const Config& cfg, const std::string& path) {
  const Graph g = read_graph(path);
  const LinearSystem stab = stab_facets(g, cfg.hull());
  const std::vector<Inequality> phi = full_facets(stab);
  if (cfg.as_json()) {
    json out = to_json(stab);
    json full = json::array();
    for (const Inequality& r : phi) full.push_back(to_json(r));
    out["full_facets"] = full;
    std::cout << out.dump(1) << '\n';
  } else {
    std::cout << "n " << g.order() << ", " << stab.size() << " rows, " << phi.size() << " full facets\n";
    for (const Inequality& r : stab.rows)
      std::cout << (r.kind == Inequality::Kind::Nonnegativity ? "nonneg " : "facet  ") << row_text(r) << '\n';
    for (const Inequality& r : phi) std::cout << "full   " << row_text(r) << '\n';
  }
  return kOk;
}

int cmd_classify(const Config& cfg, const std::string& path) {
  const Graph g = read_graph(path);
  const auto cutset = has_clique_cutset(g);
  const auto p6 = g.order() >= 6 ? find_induced_path(g, 6) : std::nullopt;
  const auto triangle = find_triangle(g);
  const auto paw = find_paw(g);
  const bool connected = is_connected(g);
  const bool prime = is_prime(g);
  const auto cert = is_facet_inducing(g, cfg.hull());
  const std::string cert_error = cert ? verify_certificate(g, *cert) : std::string();
  if (cfg.as_json()) {
    json out = {{"n", g.order()},
                {"edges", g.edge_count()},
                {"connected", connected},
                {"prime", prime},
                {"clique_cutset", cutset ? json(to_vector(*cutset)) : json(nullptr)},
                {"triangle_free", !triangle},
                {"paw_free", !paw},
                {"p6_free", !p6},
                {"p6_witness", p6 ? json(*p6) : json(nullptr)},
                {"facet_inducing", cert.has_value()}};
    if (cert) {
      out["certificate"] = {{"coeffs", to_json(cert->coeffs)},
                            {"rhs", to_string(cert->rhs)},
                            {"stable_sets", json::array()},
                            {"verified", cert_error.empty()}};
      for (VertexSet s : cert->rows) out["certificate"]["stable_sets"].push_back(to_vector(s));
    }
    std::cout << out.dump(1) << '\n';
  } else {
    std::cout << "vertices       " << g.order() << "\nedges          " << g.edge_count() << '\n'
              << "connected      " << flag(connected) << "\nprime          " << flag(prime) << '\n'
              << "clique cutset  " << (cutset ? vertex_list(*cutset) : std::string("none")) << '\n'
              << "triangle-free  " << flag(!triangle) << "\npaw-free       " << flag(!paw) << '\n'
              << "P6-free        " << flag(!p6) << '\n'
              << "facet-inducing " << flag(cert.has_value()) << '\n';
    if (cert) {
      std::cout << "full facet     " << row_text(Inequality{cert->coeffs, cert->rhs}) << '\n'
                << "certificate    " << (cert_error.empty() ? "verified" : "FAILED: " + cert_error) << '\n';
      for (VertexSet s : cert->rows) std::cout << "  tight " << vertex_list(s) << '\n';
    }
  }
  return kOk;
}

void print_naming(const NamingReport& report) {
  for (const NamedDeletion& d : report.h2) {
    std::string labels;
    for (int l : d.deleted_labels) labels += (labels.empty() ? "" : ",") + std::to_string(l);
    std::cout << "  " << d.name << " = H2 - {" << labels << "}: " << (d.matches ? "matched" : "NOT matched") << '\n';
  }
  std::cout << "  H3-only class orders:";
  for (int o : report.h3_orders) std::cout << ' ' << o;
  std::cout << '\n';
  for (const std::string& p : report.problems) std::cout << "  problem: " << p << '\n';
}

void print_catalog(const Catalog& catalog, bool as_json) {
  if (as_json) {
    json out = json::array();
    for (const CatalogEntry& e : catalog)
      out.push_back({{"name", e.name}, {"n", e.graph.order()}, {"graph6", to_graph6(e.graph)},
                     {"phi", e.phi.size()}, {"source", e.sources}});
    std::cout << out.dump(1) << '\n';
    return;
  }
  for (const CatalogEntry& e : catalog) {
    std::string src;
    for (const auto& s : e.sources) src += (src.empty() ? "" : ",") + s;
    std::cout << e.name << "\tn=" << e.graph.order() << "\tphi=" << e.phi.size() << "\t" << src << "\t"
              << to_graph6(e.graph) << '\n';
  }
}

int cmd_catalog_build(const Config& cfg, const std::string& out_path) {
  const std::string path = !out_path.empty() ? out_path : (!cfg.catalog.empty() ? cfg.catalog : "catalog.json");
  const CatalogBuild b = build_catalog(cfg.hull());
  save_catalog(b.catalog, path);
  std::cout << "H1 " << b.h1.size() << " classes, H2 " << b.h2.size() << " classes, H3 " << b.h3.size()
            << " classes, union " << b.catalog.size() << "\n";
  print_catalog(b.catalog, false);
  std::cout << "naming:\n";
  print_naming(b.naming);
  std::cout << "saved " << path << '\n';
  return kOk;
}

int cmd_catalog_verify(const Config& cfg, std::optional<Catalog>& cache, bool closure) {
  const Catalog& catalog = require_catalog(cfg, cache);
  int failures = 0;
  for (const CatalogEntry& e : catalog) {
    std::vector<std::string> bad;
    const Graph& g = e.graph;
    if (!is_connected(g)) bad.push_back("disconnected");
    if (!is_prime(g)) bad.push_back("not prime");
    if (has_clique_cutset(g)) bad.push_back("clique cutset");
    if (!is_p6_triangle_free(g)) bad.push_back("not (P6,triangle)-free");
    if (e.phi.empty()) bad.push_back("empty phi");
    const StableSetFamily stable = all_stable_sets(g);
    for (const Inequality& phi : e.phi)
      if (!phi.is_full() || !is_valid_for(g, phi, stable) || !is_facet_of(g, phi, stable)) {
        bad.push_back("phi row is not a full facet");
        break;
      }
    std::cout << e.name << ": " << (bad.empty() ? "ok" : "FAILED") ;
    for (const auto& b : bad) std::cout << " [" << b << "]";
    std::cout << '\n';
    if (!bad.empty()) ++failures;
  }
  const NamingReport naming = map_named_deletions(catalog);
  std::cout << catalog.size() << " classes (26 expected)\nnaming:\n";
  print_naming(naming);
  if (catalog.size() != 26 || !naming.ok()) ++failures;
  if (closure) {
    const ClosureReport r = closure_check(catalog, cfg.hull());
    std::cout << "closure: " << (r.closed ? "closed" : "NOT closed") << ", " << r.classes_visited
              << " classes visited, " << r.hulls << " hulls\n";
    for (const auto& m : r.missing) std::cout << "  missing " << m << '\n';
    if (!r.closed) ++failures;
  }
  return failures ? kViolated : kOk;
}

int cmd_catalog_show(const Config& cfg, std::optional<Catalog>& cache, const std::string& name) {
  const Catalog& catalog = require_catalog(cfg, cache);
  if (name.empty()) {
    print_catalog(catalog, cfg.as_json());
    return kOk;
  }
  const CatalogEntry* e = find_entry(catalog, name);
  if (!e) throw DomainError("no catalog entry named " + name);
  if (cfg.as_json()) {
    json phi = json::array();
    for (const Inequality& r : e->phi) phi.push_back(to_json(r));
    std::cout << json{{"name", e->name}, {"graph", to_json(e->graph)}, {"graph6", to_graph6(e->graph)},
                      {"phi", phi}, {"source", e->sources}}
                     .dump(1)
              << '\n';
  } else {
    std::cout << e->name << ": " << e->graph.order() << " vertices, " << e->graph.edge_count() << " edges, graph6 "
              << to_graph6(e->graph) << '\n';
    for (auto [u, v] : e->graph.edges()) std::cout << u << '-' << v << ' ';
    std::cout << '\n';
    for (const Inequality& r : e->phi) std::cout << "phi " << row_text(r) << '\n';
  }
  return kOk;
}

int cmd_separate(const Config& cfg, std::optional<Catalog>& cache, const std::string& input,
                 const std::string& point_path) {
  Graph g;
  RationalVector y;
  if (point_path.empty()) {
    const json doc = json::parse(read_text(input));
    const json& jg = doc.at("graph");
    g = jg.is_string() ? parse_graph(jg.get<std::string>()) : graph_from_json(jg);
    y = vector_from_json(doc.at("point"));
  } else {
    g = read_graph(input);
    y = vector_from_json(json::parse(read_text(point_path)));
  }
  const SeparationResult r = separate(g, y, require_catalog(cfg, cache));
  json out = {{"verdict", r.violated() ? "violated" : "inside"}};
  if (r.violated()) {
    out["row"] = to_json(*r.row);
    out["source"] = r.source;
    out["amount"] = to_string(r.amount);
    out["primitive_amount"] = to_string(r.primitive_amount);
    if (r.extension) {
      out["embedding"] = r.extension->embedding;
      out["clique"] = to_vector(r.extension->clique);
    }
  }
  if (cfg.as_json()) {
    std::cout << out.dump(1) << '\n';
  } else if (!r.violated()) {
    std::cout << "inside\n";
  } else {
    std::cout << "violated by " << r.source << " row " << row_text(*r.row) << "\namount " << to_string(r.amount)
              << " (primitive form " << to_string(r.primitive_amount) << ")\n";
    if (r.extension && !r.extension->embedding.empty()) std::cout << "embedding " << out["embedding"].dump() << '\n';
    if (r.extension && r.extension->clique) std::cout << "clique " << vertex_list(r.extension->clique) << '\n';
  }
  return r.violated() ? kViolated : kOk;
}

int cmd_verify(const Config& cfg, std::optional<Catalog>& cache, const std::vector<std::string>& suites) {
  VerifyOptions opt;
  opt.hull = cfg.hull();
  opt.seed = cfg.seed;
  VerifyContext ctx(opt);
  if (!cfg.catalog.empty()) ctx.set_catalog(require_catalog(cfg, cache));
  std::vector<int> ids;
  for (const std::string& s : suites) {
    if (s == "all") {
      for (int i = 1; i <= 10; ++i) ids.push_back(i);
      continue;
    }
    const int id = criterion_id(s);
    if (!id) throw DomainError("unknown suite " + s);
    ids.push_back(id);
  }
  if (ids.empty())
    for (int i = 1; i <= 10; ++i) ids.push_back(i);
  bool all_passed = true;
  json out = json::array();
  for (int id : ids) {
    const CriterionResult r = run_criterion(id, ctx);
    all_passed = all_passed && r.passed;
    if (cfg.as_json()) {
      out.push_back({{"id", r.id}, {"suite", r.suite}, {"passed", r.passed}, {"seconds", r.seconds},
                     {"detail", r.detail}});
    } else {
      std::printf("%s %2d %-15s %8.1fs  %s\n", r.passed ? "PASS" : "FAIL", r.id, r.suite.c_str(), r.seconds,
                  r.detail.c_str());
      std::fflush(stdout);
    }
  }
  if (cfg.as_json()) std::cout << out.dump(1) << '\n';
  return all_passed ? kOk : kViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable set polytopes of (P6,triangle)-free and (P6,paw)-free graphs"};
  app.require_subcommand(1);
  Config cfg;
  if (const char* env = std::getenv("STABPOLY_CATALOG")) cfg.catalog = env;
  app.add_option("--budget-vertices", cfg.budget_vertices, "Largest graph order for a hull")
      ->check(CLI::PositiveNumber);
  app.add_option("--dd-ray-cap", cfg.ray_cap, "Ray limit of the double description engine")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--catalog", cfg.catalog, "Catalog file (default $STABPOLY_CATALOG)");
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));

  std::string graph_path, point_path, out_path, entry_name;
  std::vector<std::string> suites;
  bool closure = false;

  auto* facets = app.add_subcommand("facets", "Print the minimal system of STAB(G) and its full facets");
  facets->add_option("graph", graph_path, "graph6 or JSON graph file ('-' for stdin)")->required();
  auto* classify = app.add_subcommand("classify", "Structural report and facet-inducing certificate");
  classify->add_option("graph", graph_path, "graph6 or JSON graph file ('-' for stdin)")->required();

  auto* catalog = app.add_subcommand("catalog", "Build, verify or show the catalog");
  catalog->require_subcommand(1);
  auto* cat_build = catalog->add_subcommand("build", "Derive the catalog from H1, H2, H3 and save it");
  cat_build->add_option("-o,--out", out_path, "Output file (default --catalog or catalog.json)");
  auto* cat_verify = catalog->add_subcommand("verify", "Check a saved catalog");
  cat_verify->add_flag("--closure", closure, "Also check closure under prime facet-inducing subgraphs");
  auto* cat_show = catalog->add_subcommand("show", "List entries or print one");
  cat_show->add_option("name", entry_name, "Entry name");

  auto* sep = app.add_subcommand("separate", "Separate a point from STAB(G)");
  sep->add_option("input", graph_path, "JSON {graph, point}, or a graph file when a point file follows")->required();
  sep->add_option("point", point_path, "JSON array of rationals");

  auto* verify = app.add_subcommand("verify", "Run acceptance criteria");
  verify->add_option("suites", suites, "Suite names or numbers (default all)");

  CLI11_PARSE(app, argc, argv);

  std::optional<Catalog> cache;
  try {
    if (*facets) return cmd_facets(cfg, graph_path);
    if (*classify) return cmd_classify(cfg, graph_path);
    if (*cat_build) return cmd_catalog_build(cfg, out_path);
    if (*cat_verify) return cmd_catalog_verify(cfg, cache, closure);
    if (*cat_show) return cmd_catalog_show(cfg, cache, entry_name);
    if (*sep) return cmd_separate(cfg, cache, graph_path, point_path);
    if (*verify) return cmd_verify(cfg, cache, suites);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
