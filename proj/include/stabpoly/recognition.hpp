#pragma once

#include "stabpoly/graph.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace stabpoly {

/// Vertices of an induced P_k in path order, or nullopt. Requires 2 <= k <= n.
std::optional<std::vector<int>> find_induced_path(const Graph& g, int k);
bool contains_induced_path(const Graph& g, int k);

std::optional<VertexSet> find_triangle(const Graph& g);
/// Paw witness (a, b, c, d): triangle abc with d adjacent to a only.
std::optional<std::array<int, 4>> find_paw(const Graph& g);
bool is_triangle_free(const Graph& g);
bool is_paw_free(const Graph& g);
bool is_p6_triangle_free(const Graph& g);
bool is_p6_paw_free(const Graph& g);

/// Partition into stable sets with pairwise joins, or nullopt.
std::optional<std::vector<VertexSet>> complete_multipartite_parts(const Graph& g);
bool is_complete_multipartite(const Graph& g);

struct ComponentTag {
  enum class Kind { TriangleFree, CompleteMultipartite };
  VertexSet component = 0;
  Kind kind = Kind::TriangleFree;
  std::vector<VertexSet> parts;  // CompleteMultipartite only
};

/// Tags each connected component per Olariu's paw-free dichotomy. Components
/// that are both (e.g. K_{2,3}) are tagged TriangleFree. Throws DomainError
/// naming a paw if g has one.
std::vector<ComponentTag> olariu_decompose(const Graph& g);

/// Two-colouring with the lowest vertex of every component in the first
/// side, or nullopt when an odd cycle exists.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

/// Complement is matched co-bipartite: two cliques of sizes differing by at
/// most one, a matching between them, at most one unmatched vertex per side.
bool is_co_matched_bipartite(const Graph& g);

/// X = {x0, x1..xm}, Y = {y0, y1..ym} stable; x_i ~ y_j iff i != j for
/// i, j >= 1; x0 dominates Y, y0 dominates X; z_i of degree 2 on x_i, y_i.
struct FerrySpec {
  int m = 1;
  int l = 0;
  bool has_x0 = false;
  bool has_y0 = false;
  /// Only meaningful when both x0 and y0 exist.
  bool x0_adjacent_y0 = false;
};

struct Ferry {
  Graph graph;
  /// true when the ferry is disconnected (m = 1 without x0/y0 and l = 0).
  bool degenerate = false;
  std::vector<int> x, y, z;  // x[0] / y[0] are x0 / y0 when present (-1 otherwise)
};

/// Vertex order: x1..xm, y1..ym, z1..zl, then x0, y0 when present.
Ferry build_ferry(const FerrySpec& spec);

}  // namespace stabpoly
