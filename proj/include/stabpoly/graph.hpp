#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stabpoly {

/// Bit-mask over the vertices {0..n-1} of an ambient graph.
using VertexSet = std::uint32_t;

inline constexpr int kMaxVertices = 32;

constexpr VertexSet singleton(int v) { return VertexSet{1} << v; }
constexpr VertexSet all_vertices(int n) { return n >= 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }
constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }
constexpr int set_size(VertexSet s) { return std::popcount(s); }
constexpr int lowest(VertexSet s) { return std::countr_zero(s); }

/// Calls f(v) for every vertex of s in increasing order.
template <typename F>
constexpr void for_each_vertex(VertexSet s, F&& f) {
  while (s) {
    f(std::countr_zero(s));
    s &= s - 1;
  }
}

std::vector<int> to_vector(VertexSet s);
VertexSet from_vector(std::span<const int> vertices);

/// Input outside a documented domain (bad vertex, empty set, wrong class).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computation would exceed its configured size or time budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph on at most 32 vertices, adjacency as bit rows.
/// Labels are external names (1..n) kept as metadata only.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  VertexSet vertices() const { return all_vertices(n_); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return contains(adj_[u], v); }
  int degree(int v) const { return set_size(adj_[v]); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// External names; empty when the graph is unlabeled.
  const std::vector<int>& labels() const { return labels_; }
  void set_labels(std::vector<int> labels);
  /// Index of the vertex carrying `label`; DomainError if absent.
  int vertex_with_label(int label) const;
  VertexSet vertices_with_labels(std::span<const int> labels) const;

  bool is_stable(VertexSet s) const;
  bool is_clique(VertexSet s) const;

  /// Structural equality (labels ignored).
  bool same_edges(const Graph& other) const;
  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
  std::vector<int> labels_;
};

/// G[W]; vertices renumbered in increasing order of their index in g.
Graph induced_subgraph(const Graph& g, VertexSet w);
/// G - W.
Graph delete_vertices(const Graph& g, VertexSet w);
Graph complement(const Graph& g);
/// Image graph where vertex v of g becomes vertex perm[v].
Graph permute(const Graph& g, std::span<const int> perm);
Graph disjoint_union(const Graph& a, const Graph& b);
/// Every vertex of a adjacent to every vertex of b.
Graph join(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
/// Connected component of the subgraph induced by `within` containing v.
VertexSet component_of(const Graph& g, int v, VertexSet within);

/// Isomorphism-class key: the lexicographically least adjacency matrix
/// reachable by refinement-guided relabeling.
struct CanonicalForm {
  int n = 0;
  std::vector<VertexSet> rows;
  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g);
/// perm[v] = canonical position of v; permute(g, perm) has the canonical rows.
std::vector<int> canonical_labeling(const Graph& g);
Graph canonical_graph(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

namespace graphs {
Graph path(int k);
Graph cycle(int k);
Graph complete(int k);
Graph edgeless(int k);
Graph complete_multipartite(std::span<const int> part_sizes);
}  // namespace graphs

}  // namespace stabpoly
