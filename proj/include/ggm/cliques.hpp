#pragma once

#include <algorithm>
#include <vector>

#include "ggm/graph.hpp"

namespace ggm {

namespace detail {

inline void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  // Tomita pivot: the vertex of P ∪ X with most neighbours in P.
  int pivot = -1;
  int best = -1;
  for (int u : members(p | x)) {
    const int c = cardinality(p & g.neighbors(u));
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (int v : members(p & ~g.neighbors(pivot))) {
    bron_kerbosch(g, r | singleton(v), p & g.neighbors(v), x & g.neighbors(v), out);
    p &= ~singleton(v);
    x |= singleton(v);
  }
}

}  // namespace detail

/// All inclusion-maximal cliques, each sorted, list sorted lexicographically.
inline std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> found;
  if (g.order() > 0) detail::bron_kerbosch(g, 0, g.all_vertices(), 0, found);
  std::vector<std::vector<int>> out;
  out.reserve(found.size());
  for (VertexSet c : found) out.push_back(members(c));
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_clique(const Graph& g, VertexSet s) {
  for (int v : members(s))
    if (!is_subset(s & ~singleton(v), g.neighbors(v))) return false;
  return true;
}

/// Maximum cardinality search visit order (ties broken by smallest vertex).
/// For a chordal graph the reverse of this order is a perfect elimination order.
inline std::vector<int> maximum_cardinality_search(const Graph& g) {
  const int m = g.order();
  std::vector<int> weight(static_cast<std::size_t>(m), 0);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(m));
  VertexSet left = g.all_vertices();
  while (left != 0) {
    int best = -1;
    for (int v : members(left))
      if (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]) best = v;
    order.push_back(best);
    left &= ~singleton(best);
    for (int u : members(g.neighbors(best) & left)) ++weight[static_cast<std::size_t>(u)];
  }
  return order;
}

/// For each vertex in `order`, its neighbours that appear earlier.
inline std::vector<VertexSet> earlier_neighbors(const Graph& g, const std::vector<int>& order) {
  std::vector<VertexSet> out;
  out.reserve(order.size());
  VertexSet seen = 0;
  for (int v : order) {
    out.push_back(g.neighbors(v) & seen);
    seen |= singleton(v);
  }
  return out;
}

inline bool is_chordal(const Graph& g) {
  const auto order = maximum_cardinality_search(g);
  const auto earlier = earlier_neighbors(g, order);
  return std::all_of(earlier.begin(), earlier.end(), [&](VertexSet s) { return is_clique(g, s); });
}

/// True iff some four vertices induce a path a-b-c-d.
inline bool has_induced_4chain(const Graph& g) {
  for (auto [b, c] : g.edges()) {
    const VertexSet ends_b = g.neighbors(b) & ~g.closed_neighborhood(c);
    const VertexSet ends_c = g.neighbors(c) & ~g.closed_neighborhood(b);
    for (int a : members(ends_b))
      if ((ends_c & ~g.neighbors(a)) != 0) return true;
  }
  return false;
}

}  // namespace ggm
