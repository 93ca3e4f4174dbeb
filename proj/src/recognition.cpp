#include "stabpoly/recognition.hpp"

#include <array>
#include <string>

namespace stabpoly {

namespace {

// `blocked` holds the path and every neighbour of a non-tail path vertex.
bool extend_path(const Graph& g, int k, std::vector<int>& path, VertexSet blocked) {
  if (static_cast<int>(path.size()) == k) return true;
  const int tail = path.back();
  VertexSet cand = g.neighbors(tail) & ~blocked;
  const VertexSet next_blocked = blocked | g.neighbors(tail);
  while (cand) {
    const int v = lowest(cand);
    cand &= cand - 1;
    path.push_back(v);
    if (extend_path(g, k, path, next_blocked | singleton(v))) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_induced_path(const Graph& g, int k) {
  if (k < 2 || k > g.order())
    throw DomainError("induced path length " + std::to_string(k) + " outside [2, n]");
  std::vector<int> path;
  for (int s = 0; s < g.order(); ++s) {
    path.assign(1, s);
    if (extend_path(g, k, path, singleton(s))) return path;
  }
  return std::nullopt;
}

bool contains_induced_path(const Graph& g, int k) {
  if (k > g.order()) return false;
  return find_induced_path(g, k).has_value();
}

std::optional<VertexSet> find_triangle(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    const VertexSet common = g.neighbors(u) & g.neighbors(v);
    if (common) return singleton(u) | singleton(v) | singleton(lowest(common));
  }
  return std::nullopt;
}

std::optional<std::array<int, 4>> find_paw(const Graph& g) {
  for (auto [a, b] : g.edges()) {
    VertexSet cs = g.neighbors(a) & g.neighbors(b);
    while (cs) {
      const int c = lowest(cs);
      cs &= cs - 1;
      const VertexSet tri = singleton(a) | singleton(b) | singleton(c);
      for (int d = 0; d < g.order(); ++d) {
        if (contains(tri, d)) continue;
        const VertexSet hit = g.neighbors(d) & tri;
        if (set_size(hit) == 1) {
          const int apex = lowest(hit);
          const VertexSet rest = tri & ~hit;
          return std::array<int, 4>{apex, lowest(rest), lowest(rest & (rest - 1)), d};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_triangle_free(const Graph& g) { return !find_triangle(g); }
bool is_paw_free(const Graph& g) { return !find_paw(g); }
bool is_p6_triangle_free(const Graph& g) { return is_triangle_free(g) && !contains_induced_path(g, 6); }
bool is_p6_paw_free(const Graph& g) { return is_paw_free(g) && !contains_induced_path(g, 6); }

std::optional<std::vector<VertexSet>> complete_multipartite_parts(const Graph& g) {
  // Non-adjacency must be an equivalence relation whose classes are the parts.
  std::vector<VertexSet> parts;
  VertexSet left = g.vertices();
  while (left) {
    const int v = lowest(left);
    const VertexSet part = g.vertices() & ~g.neighbors(v);
    if (!g.is_stable(part)) return std::nullopt;
    bool consistent = true;
    for_each_vertex(part, [&](int u) { consistent = consistent && (g.vertices() & ~g.neighbors(u)) == part; });
    if (!consistent) return std::nullopt;
    parts.push_back(part);
    left &= ~part;
  }
  return parts;
}

bool is_complete_multipartite(const Graph& g) { return complete_multipartite_parts(g).has_value(); }

std::vector<ComponentTag> olariu_decompose(const Graph& g) {
  if (auto paw = find_paw(g)) {
    const auto& p = *paw;
    throw DomainError("graph is not paw-free: triangle {" + std::to_string(p[0]) + "," + std::to_string(p[1]) +
                      "," + std::to_string(p[2]) + "} with pendant " + std::to_string(p[3]) + " on " +
                      std::to_string(p[0]));
  }
  std::vector<ComponentTag> tags;
  for (VertexSet comp : connected_components(g)) {
    const Graph h = induced_subgraph(g, comp);
    ComponentTag tag;
    tag.component = comp;
    if (is_triangle_free(h)) {
      tag.kind = ComponentTag::Kind::TriangleFree;
    } else {
      auto parts = complete_multipartite_parts(h);
      if (!parts) throw std::logic_error("paw-free component neither triangle-free nor complete multipartite");
      tag.kind = ComponentTag::Kind::CompleteMultipartite;
      const std::vector<int> back = to_vector(comp);
      for (VertexSet local : *parts) {
        VertexSet global = 0;
        for_each_vertex(local, [&](int v) { global |= singleton(back[v]); });
        tag.parts.push_back(global);
      }
    }
    tags.push_back(std::move(tag));
  }
  return tags;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
  std::array<int, kMaxVertices> color;
  color.fill(-1);
  std::vector<int> queue;
  for (int s = 0; s < g.order(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      bool odd = false;
      for_each_vertex(g.neighbors(v), [&](int u) {
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          odd = true;
        }
      });
      if (odd) return std::nullopt;
    }
  }
  VertexSet first = 0;
  for (int v = 0; v < g.order(); ++v)
    if (color[v] == 0) first |= singleton(v);
  return std::make_pair(first, g.vertices() & ~first);
}

bool is_co_matched_bipartite(const Graph& g) {
  if (g.order() == 0) return false;
  // The two cliques of co-G are the two stable sides of G; sides of each
  // component of G may be swapped independently.
  const auto sides = bipartition(g);
  if (!sides) return false;
  const std::vector<VertexSet> comps = connected_components(g);
  if (comps.size() > 20) throw BudgetExceeded("co-matched bipartite test: too many components");
  const Graph co = complement(g);
  for (std::uint32_t flip = 0; flip < (1U << (comps.size() - 1)); ++flip) {
    VertexSet c1 = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const bool swap = i > 0 && ((flip >> (i - 1)) & 1U);
      c1 |= comps[i] & (swap ? sides->second : sides->first);
    }
    const VertexSet c2 = g.vertices() & ~c1;
    const int d = set_size(c1) - set_size(c2);
    if (d < -1 || d > 1) continue;
    bool matching = true;
    int unmatched1 = 0;
    int unmatched2 = 0;
    for_each_vertex(c1, [&](int v) {
      const int k = set_size(co.neighbors(v) & c2);
      matching = matching && k <= 1;
      unmatched1 += k == 0;
    });
    for_each_vertex(c2, [&](int v) {
      const int k = set_size(co.neighbors(v) & c1);
      matching = matching && k <= 1;
      unmatched2 += k == 0;
    });
    if (matching && unmatched1 <= 1 && unmatched2 <= 1) return true;
  }
  return false;
}

Ferry build_ferry(const FerrySpec& spec) {
  if (spec.m < 1 || spec.l < 0 || spec.l > spec.m)
    throw DomainError("ferry requires m >= 1 and 0 <= l <= m");
  const int n = 2 * spec.m + spec.l + (spec.has_x0 ? 1 : 0) + (spec.has_y0 ? 1 : 0);
  if (n > kMaxVertices) throw DomainError("ferry exceeds 32 vertices");
  Ferry f;
  f.graph = Graph(n);
  f.x.assign(spec.m + 1, -1);
  f.y.assign(spec.m + 1, -1);
  int next = 0;
  for (int i = 1; i <= spec.m; ++i) f.x[i] = next++;
  for (int i = 1; i <= spec.m; ++i) f.y[i] = next++;
  for (int i = 1; i <= spec.l; ++i) f.z.push_back(next++);
  if (spec.has_x0) f.x[0] = next++;
  if (spec.has_y0) f.y[0] = next++;
  Graph& g = f.graph;
  for (int i = 1; i <= spec.m; ++i)
    for (int j = 1; j <= spec.m; ++j)
      if (i != j) g.add_edge(f.x[i], f.y[j]);
  for (int i = 1; i <= spec.l; ++i) {
    g.add_edge(f.z[i - 1], f.x[i]);
    g.add_edge(f.z[i - 1], f.y[i]);
  }
  if (spec.has_x0)
    for (int j = 1; j <= spec.m; ++j) g.add_edge(f.x[0], f.y[j]);
  if (spec.has_y0)
    for (int i = 1; i <= spec.m; ++i) g.add_edge(f.y[0], f.x[i]);
  if (spec.has_x0 && spec.has_y0 && spec.x0_adjacent_y0) g.add_edge(f.x[0], f.y[0]);
  f.degenerate = !is_connected(g);
  return f;
}

}  // namespace stabpoly
