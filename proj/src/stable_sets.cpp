#include "stabpoly/stable_sets.hpp"

#include <algorithm>
#include <limits>

#include "stabpoly/recognition.hpp"

namespace stabpoly {

namespace {

void grow_stable(const Graph& g, int v, VertexSet current, VertexSet allowed, std::vector<VertexSet>& out,
                 std::size_t limit) {
  if (v == g.order()) {
    if (out.size() >= limit) throw BudgetExceeded("stable set enumeration exceeded its limit");
    out.push_back(current);
    return;
  }
  grow_stable(g, v + 1, current, allowed, out, limit);
  if (contains(allowed, v)) grow_stable(g, v + 1, current | singleton(v), allowed & ~g.neighbors(v), out, limit);
}

// Pivoting Bron-Kerbosch over the adjacency rows `nbr`.
class CliqueEnumerator {
 public:
  CliqueEnumerator(std::array<VertexSet, kMaxVertices> nbr, std::size_t limit) : nbr_(nbr), limit_(limit) {}

  void run(VertexSet r, VertexSet p, VertexSet x) {
    if (!p && !x) {
      if (out.size() >= limit_) throw BudgetExceeded("maximal clique enumeration exceeded its limit");
      out.push_back(r);
      return;
    }
    int pivot = -1;
    int best = -1;
    for_each_vertex(p | x, [&](int u) {
      const int k = set_size(p & nbr_[u]);
      if (k > best) {
        best = k;
        pivot = u;
      }
    });
    VertexSet branch = p & ~nbr_[pivot];
    while (branch) {
      const int v = lowest(branch);
      branch &= branch - 1;
      run(r | singleton(v), p & nbr_[v], x & nbr_[v]);
      p &= ~singleton(v);
      x |= singleton(v);
    }
  }

  std::vector<VertexSet> out;

 private:
  std::array<VertexSet, kMaxVertices> nbr_;
  std::size_t limit_;
};

std::array<VertexSet, kMaxVertices> rows_of(const Graph& g, bool complemented) {
  std::array<VertexSet, kMaxVertices> rows{};
  for (int v = 0; v < g.order(); ++v)
    rows[v] = complemented ? (g.vertices() & ~g.neighbors(v) & ~singleton(v)) : g.neighbors(v);
  return rows;
}

// Branch and bound over positive-weight vertices with integer weights.
template <typename Int>
class StableSearch {
 public:
  StableSearch(const Graph& g, std::vector<Int> w) : g_(g), w_(std::move(w)) {}

  VertexSet run(VertexSet candidates) {
    best_value_ = Int(0);
    best_ = 0;
    go(0, Int(0), candidates);
    return best_;
  }

 private:
  void go(VertexSet current, Int value, VertexSet cand) {
    if (value > best_value_) {
      best_value_ = value;
      best_ = current;
    }
    if (!cand) return;
    Int bound = value;
    for_each_vertex(cand, [&](int v) { bound += w_[v]; });
    if (bound <= best_value_) return;
    int pick = lowest(cand);
    for_each_vertex(cand, [&](int v) {
      if (w_[v] > w_[pick]) pick = v;
    });
    go(current | singleton(pick), value + w_[pick], cand & ~g_.neighbors(pick) & ~singleton(pick));
    go(current, value, cand & ~singleton(pick));
  }

  const Graph& g_;
  std::vector<Int> w_;
  Int best_value_{0};
  VertexSet best_ = 0;
};

Rational weight_of(const WeightVector& w, VertexSet s) {
  Rational total = 0;
  for_each_vertex(s, [&](int v) { total += w(v); });
  return total;
}

void check_weights(const Graph& g, const WeightVector& w) {
  if (w.size() != g.order()) throw DomainError("weight vector length does not match graph order");
}

}  // namespace

StableSetFamily all_stable_sets(const Graph& g, std::size_t limit) {
  StableSetFamily fam;
  grow_stable(g, 0, 0, g.vertices(), fam.sets, limit);
  std::sort(fam.sets.begin(), fam.sets.end());
  return fam;
}

std::vector<VertexSet> maximal_cliques(const Graph& g, std::size_t limit) {
  CliqueEnumerator e(rows_of(g, false), limit);
  if (g.order() > 0) e.run(0, g.vertices(), 0);
  return std::move(e.out);
}

StableSetFamily maximal_stable_sets(const Graph& g, std::size_t limit) {
  CliqueEnumerator e(rows_of(g, true), limit);
  if (g.order() > 0) e.run(0, g.vertices(), 0);
  return StableSetFamily{std::move(e.out)};
}

std::size_t count_maximal_stable_sets(const Graph& g) { return maximal_stable_sets(g).size(); }

WeightedSet max_weight_stable_set(const Graph& g, const WeightVector& w) {
  check_weights(g, w);
  VertexSet positive = 0;
  for (int v = 0; v < g.order(); ++v)
    if (w(v) > 0) positive |= singleton(v);
  const Integer den = common_denominator(w);
  std::vector<Integer> scaled(g.order());
  bool small = true;
  const Integer cap = Integer(std::numeric_limits<std::int64_t>::max() / (kMaxVertices + 1));
  for (int v = 0; v < g.order(); ++v) {
    const Rational s = w(v) * Rational(den);
    scaled[v] = numerator(s);
    if (scaled[v] > cap || scaled[v] < -cap) small = false;
  }
  VertexSet best;
  if (small) {
    std::vector<std::int64_t> fast(g.order());
    for (int v = 0; v < g.order(); ++v) fast[v] = scaled[v].convert_to<std::int64_t>();
    best = StableSearch<std::int64_t>(g, std::move(fast)).run(positive);
  } else {
    best = StableSearch<Integer>(g, std::move(scaled)).run(positive);
  }
  return {best, weight_of(w, best)};
}

WeightedSet max_weight_clique(const Graph& g, const WeightVector& w) {
  check_weights(g, w);
  return max_weight_stable_set(complement(g), w);
}

WeightedSet max_weight_clique_pawfree(const Graph& g, const WeightVector& w) {
  check_weights(g, w);
  WeightedSet best{0, Rational(0)};
  auto offer = [&](VertexSet s) {
    Rational value = weight_of(w, s);
    if (value > best.value) best = {s, value};
  };
  for (const ComponentTag& tag : olariu_decompose(g)) {
    if (tag.kind == ComponentTag::Kind::TriangleFree) {
      for_each_vertex(tag.component, [&](int v) {
        if (w(v) > 0) offer(singleton(v));
        for_each_vertex(g.neighbors(v) & tag.component, [&](int u) {
          if (u > v && w(u) > 0 && w(v) > 0) offer(singleton(u) | singleton(v));
        });
      });
    } else {
      VertexSet pick = 0;
      for (VertexSet part : tag.parts) {
        int top = -1;
        for_each_vertex(part, [&](int v) {
          if (w(v) > 0 && (top < 0 || w(v) > w(top))) top = v;
        });
        if (top >= 0) pick |= singleton(top);
      }
      offer(pick);
    }
  }
  return best;
}

bool is_repeating_subgraph(const Graph& g, VertexSet h) {
  h &= g.vertices();
  if (!h) throw DomainError("repeating subgraph test needs a nonempty vertex set");
  for (VertexSet s : maximal_stable_sets(g).sets) {
    const VertexSet t = s & h;
    if (!t) continue;
    bool maximal = true;
    for_each_vertex(h & ~t, [&](int v) { maximal = maximal && (g.neighbors(v) & t); });
    if (!maximal) return false;
  }
  return true;
}

}  // namespace stabpoly
