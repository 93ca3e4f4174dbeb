#include "stabpoly/graph.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace stabpoly {

std::vector<int> to_vector(VertexSet s) {
  std::vector<int> out;
  out.reserve(set_size(s));
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

VertexSet from_vector(std::span<const int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) s |= singleton(v);
  return s;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw DomainError("graph order must lie in [0, 32], got " + std::to_string(n));
}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw DomainError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
  adj_[u] |= singleton(v);
  adj_[v] |= singleton(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~singleton(v);
  adj_[v] &= ~singleton(u);
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for_each_vertex(adj_[u] & ~all_vertices(u + 1), [&](int v) { out.emplace_back(u, v); });
  return out;
}

void Graph::set_labels(std::vector<int> labels) {
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != n_) throw DomainError("label count does not match graph order");
    std::vector<int> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n_; ++i)
      if (sorted[i] != i + 1) throw DomainError("labels must be a bijection onto 1..n");
  }
  labels_ = std::move(labels);
}

int Graph::vertex_with_label(int label) const {
  for (int v = 0; v < static_cast<int>(labels_.size()); ++v)
    if (labels_[v] == label) return v;
  throw DomainError("no vertex labeled " + std::to_string(label));
}

VertexSet Graph::vertices_with_labels(std::span<const int> labels) const {
  VertexSet s = 0;
  for (int l : labels) s |= singleton(vertex_with_label(l));
  return s;
}

bool Graph::is_stable(VertexSet s) const {
  bool ok = true;
  for_each_vertex(s, [&](int v) { ok = ok && !(adj_[v] & s); });
  return ok;
}

bool Graph::is_clique(VertexSet s) const {
  bool ok = true;
  for_each_vertex(s, [&](int v) { ok = ok && ((adj_[v] | singleton(v)) & s) == s; });
  return ok;
}

bool Graph::same_edges(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

Graph induced_subgraph(const Graph& g, VertexSet w) {
  w &= g.vertices();
  if (w == 0) throw DomainError("induced subgraph of an empty vertex set");
  const std::vector<int> keep = to_vector(w);
  std::array<int, kMaxVertices> index{};
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) index[keep[i]] = i;
  Graph h(static_cast<int>(keep.size()));
  for (int i = 0; i < static_cast<int>(keep.size()); ++i)
    for_each_vertex(g.neighbors(keep[i]) & w, [&](int u) {
      if (index[u] > i) h.add_edge(i, index[u]);
    });
  if (!g.labels().empty()) {
    // Relabel 1..|W| preserving the relative order of the original labels.
    std::vector<int> order(keep.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.labels()[keep[a]] < g.labels()[keep[b]]; });
    std::vector<int> labels(keep.size());
    for (int r = 0; r < static_cast<int>(order.size()); ++r) labels[order[r]] = r + 1;
    h.set_labels(std::move(labels));
  }
  return h;
}

Graph delete_vertices(const Graph& g, VertexSet w) { return induced_subgraph(g, g.vertices() & ~w); }

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  h.set_labels(g.labels());
  return h;
}

Graph permute(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw DomainError("permutation size mismatch");
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  if (!g.labels().empty()) {
    std::vector<int> labels(g.order());
    for (int v = 0; v < g.order(); ++v) labels[perm[v]] = g.labels()[v];
    h.set_labels(std::move(labels));
  }
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph h(a.order() + b.order());
  for (auto [u, v] : a.edges()) h.add_edge(u, v);
  for (auto [u, v] : b.edges()) h.add_edge(a.order() + u, a.order() + v);
  return h;
}

Graph join(const Graph& a, const Graph& b) {
  Graph h = disjoint_union(a, b);
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v) h.add_edge(u, a.order() + v);
  return h;
}

VertexSet component_of(const Graph& g, int v, VertexSet within) {
  VertexSet seen = singleton(v);
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int u) { next |= g.neighbors(u); });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (left) {
    VertexSet c = component_of(g, lowest(left), g.vertices());
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

namespace {

// Colour refinement, individualisation and leaf comparison. Colours are
// renumbered by sorted signature, so every step depends only on structure.
class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<int> run() {
    std::vector<int> colors(n_, 0);
    refine(colors);
    search(colors, 0);
    return best_perm_;
  }

 private:
  int refine(std::vector<int>& colors) const {
    int count = 1 + *std::max_element(colors.begin(), colors.end());
    std::vector<std::pair<std::vector<int>, int>> sig(n_);
    while (true) {
      std::vector<VertexSet> cls(count, 0);
      for (int v = 0; v < n_; ++v) cls[colors[v]] |= singleton(v);
      for (int v = 0; v < n_; ++v) {
        std::vector<int>& s = sig[v].first;
        s.assign(count + 1, 0);
        s[0] = colors[v];
        for (int c = 0; c < count; ++c) s[c + 1] = set_size(g_.neighbors(v) & cls[c]);
        sig[v].second = v;
      }
      std::vector<std::vector<int>> keys(n_);
      for (int v = 0; v < n_; ++v) keys[v] = sig[v].first;
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      const int next = static_cast<int>(keys.size());
      for (int v = 0; v < n_; ++v)
        colors[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
      if (next == count) return count;
      count = next;
    }
  }

  void search(std::vector<int> colors, int depth) {
    const int count = refine(colors);
    if (count == n_) {
      leaf(colors);
      return;
    }
    std::vector<int> size(count, 0);
    for (int c : colors) ++size[c];
    int target = 0;
    while (size[target] == 1) ++target;
    std::vector<std::vector<int>> explored_images;
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      if (depth == 0 && pruned_at_root(v)) continue;
      std::vector<int> next(n_);
      for (int u = 0; u < n_; ++u) next[u] = 2 * colors[u] + (colors[u] == target && u != v ? 1 : 0);
      search(std::move(next), depth + 1);
      if (depth == 0) root_explored_.push_back(v);
    }
  }

  // A root branch is redundant when a known automorphism maps an explored
  // root vertex onto it.
  bool pruned_at_root(int v) const {
    for (int u : root_explored_)
      for (const auto& aut : automorphisms_)
        if (aut[u] == v) return true;
    return false;
  }

  void leaf(const std::vector<int>& perm) {
    std::vector<VertexSet> rows(n_, 0);
    for (int v = 0; v < n_; ++v)
      for_each_vertex(g_.neighbors(v), [&](int u) { rows[perm[v]] |= singleton(perm[u]); });
    if (best_perm_.empty() || rows < best_rows_) {
      best_rows_ = std::move(rows);
      best_perm_ = perm;
    } else if (rows == best_rows_) {
      // perm^-1 o best: an automorphism of g.
      std::vector<int> inv(n_);
      for (int v = 0; v < n_; ++v) inv[perm[v]] = v;
      std::vector<int> aut(n_);
      for (int v = 0; v < n_; ++v) aut[v] = inv[best_perm_[v]];
      automorphisms_.push_back(std::move(aut));
      close_orbits();
    }
  }

  // Keep automorphisms_ closed under composition with the stored generators
  // only as far as root-orbit pruning needs: store powers of the new element.
  void close_orbits() {
    const std::vector<int> base = automorphisms_.back();
    std::vector<int> power = base;
    for (int k = 0; k < n_; ++k) {
      std::vector<int> next(n_);
      for (int v = 0; v < n_; ++v) next[v] = base[power[v]];
      bool identity = true;
      for (int v = 0; v < n_; ++v) identity = identity && next[v] == v;
      if (identity) break;
      automorphisms_.push_back(next);
      power = std::move(next);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<VertexSet> best_rows_;
  std::vector<int> best_perm_;
  std::vector<std::vector<int>> automorphisms_;
  std::vector<int> root_explored_;
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  if (g.order() == 0) return {};
  return Canonizer(g).run();
}

CanonicalForm canonical_form(const Graph& g) {
  const std::vector<int> perm = canonical_labeling(g);
  CanonicalForm form;
  form.n = g.order();
  form.rows.assign(g.order(), 0);
  for (int v = 0; v < g.order(); ++v)
    for_each_vertex(g.neighbors(v), [&](int u) { form.rows[perm[v]] |= singleton(perm[u]); });
  return form;
}

Graph canonical_graph(const Graph& g) {
  const std::vector<int> perm = canonical_labeling(g);
  Graph h = permute(g, perm);
  h.set_labels({});
  return h;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

namespace graphs {

Graph path(int k) {
  Graph g(k);
  for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int k) {
  if (k < 3) throw DomainError("cycle needs at least 3 vertices");
  Graph g = path(k);
  g.add_edge(k - 1, 0);
  return g;
}

Graph complete(int k) {
  Graph g(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
  return g;
}

Graph edgeless(int k) { return Graph(k); }

Graph complete_multipartite(std::span<const int> part_sizes) {
  int n = 0;
  std::vector<int> part;
  for (int p = 0; p < static_cast<int>(part_sizes.size()); ++p)
    for (int i = 0; i < part_sizes[p]; ++i, ++n) part.push_back(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part[u] != part[v]) g.add_edge(u, v);
  return g;
}

}  // namespace graphs
}  // namespace stabpoly
