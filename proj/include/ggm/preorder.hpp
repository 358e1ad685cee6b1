#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "ggm/graph.hpp"

namespace ggm {

/// The neighbourhood preorder of a graph: i ≼ j iff N[j] ⊆ N[i], where N[v]
/// is the closed neighbourhood. Equivalence classes are ordered by their
/// smallest member and each class lists its members in increasing order.
struct Preorder {
  int order = 0;
  std::vector<VertexSet> down;  // down[i] = { j : j ≼ i }
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;

  /// i ≼ j
  bool leq(int i, int j) const { return contains(down[static_cast<std::size_t>(j)], i); }
  bool equivalent(int i, int j) const { return leq(i, j) && leq(j, i); }
  bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }

  std::vector<int> down_set(int i) const { return members(down[static_cast<std::size_t>(i)]); }
  int down_size(int i) const { return cardinality(down[static_cast<std::size_t>(i)]); }

  int class_count() const { return static_cast<int>(classes.size()); }
  const std::vector<int>& members_of(int c) const { return classes[static_cast<std::size_t>(c)]; }
  int class_size(int c) const { return static_cast<int>(members_of(c).size()); }
  /// Down set of (any member of) class c.
  VertexSet class_down(int c) const { return down[static_cast<std::size_t>(members_of(c).front())]; }
};

inline Preorder compute_preorder(const Graph& g) {
  const int m = g.order();
  Preorder p;
  p.order = m;
  p.down.assign(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (is_subset(g.closed_neighborhood(i), g.closed_neighborhood(j))) p.down[static_cast<std::size_t>(i)] |= singleton(j);

  p.class_of.assign(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    if (p.class_of[static_cast<std::size_t>(i)] >= 0) continue;
    const int c = static_cast<int>(p.classes.size());
    p.classes.emplace_back();
    for (int j = i; j < m; ++j)
      if (g.closed_neighborhood(i) == g.closed_neighborhood(j)) {
        p.classes.back().push_back(j);
        p.class_of[static_cast<std::size_t>(j)] = c;
      }
  }
  return p;
}

inline std::vector<int> down_set(const Preorder& p, int i) { return p.down_set(i); }

/// The partial order induced on equivalence classes, with its Hasse diagram.
struct Poset {
  int size = 0;
  std::vector<VertexSet> below;          // below[a] = { b : b ≼ a }, reflexive
  std::vector<std::pair<int, int>> hasse;  // (lower, upper) cover pairs, sorted
  std::vector<int> depth;                // length of the longest chain strictly below

  bool leq(int a, int b) const { return contains(below[static_cast<std::size_t>(b)], a); }
};

inline Poset poset_of(const Preorder& p) {
  const int k = p.class_count();
  Poset s;
  s.size = k;
  s.below.assign(static_cast<std::size_t>(k), 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (p.leq(p.members_of(b).front(), p.members_of(a).front())) s.below[static_cast<std::size_t>(a)] |= singleton(b);

  // a ≺ b is a cover iff no c with a ≺ c ≺ b.
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a == b || !s.leq(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < k && cover; ++c)
        if (c != a && c != b && s.leq(a, c) && s.leq(c, b)) cover = false;
      if (cover) s.hasse.emplace_back(a, b);
    }

  // Depth by relaxation in order of increasing down-set size.
  std::vector<int> by_size(static_cast<std::size_t>(k));
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(), [&](int a, int b) {
    return cardinality(s.below[static_cast<std::size_t>(a)]) < cardinality(s.below[static_cast<std::size_t>(b)]);
  });
  s.depth.assign(static_cast<std::size_t>(k), 0);
  for (int a : by_size)
    for (int b : members(s.below[static_cast<std::size_t>(a)]))
      if (b != a) s.depth[static_cast<std::size_t>(a)] = std::max(s.depth[static_cast<std::size_t>(a)], s.depth[static_cast<std::size_t>(b)] + 1);
  return s;
}

/// Classes sorted by (depth, smallest member); every class comes after all
/// classes strictly below it.
inline std::vector<int> linear_extension(const Poset& s) {
  std::vector<int> order(static_cast<std::size_t>(s.size));
  std::iota(order.begin(), order.end(), 0);
  // Classes are already indexed by smallest member, so a stable sort by depth suffices.
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return s.depth[static_cast<std::size_t>(a)] < s.depth[static_cast<std::size_t>(b)];
  });
  return order;
}

/// Transitive closure of a cover relation on k elements, as reflexive
/// down-set masks (same layout as Poset::below).
inline std::vector<VertexSet> reflexive_transitive_closure(int k, const std::vector<std::pair<int, int>>& covers) {
  std::vector<VertexSet> below(static_cast<std::size_t>(k), 0);
  for (int a = 0; a < k; ++a) below[static_cast<std::size_t>(a)] = singleton(a);
  for (auto [lo, hi] : covers) below[static_cast<std::size_t>(hi)] |= singleton(lo);
  for (int pass = 0; pass < k; ++pass) {
    bool changed = false;
    for (int a = 0; a < k; ++a) {
      VertexSet acc = below[static_cast<std::size_t>(a)];
      for (int b : members(acc)) acc |= below[static_cast<std::size_t>(b)];
      if (acc != below[static_cast<std::size_t>(a)]) {
        below[static_cast<std::size_t>(a)] = acc;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return below;
}

/// Quotient graph on the equivalence classes, vertex-coloured by class size.
struct ColoredQuotient {
  Graph graph;
  std::vector<int> sizes;
};

inline ColoredQuotient quotient_colored(const Graph& g, const Preorder& p) {
  const int k = p.class_count();
  ColoredQuotient q{Graph(k), std::vector<int>(static_cast<std::size_t>(k))};
  for (int c = 0; c < k; ++c) q.sizes[static_cast<std::size_t>(c)] = p.class_size(c);
  for (auto [i, j] : g.edges()) {
    const int a = p.class_of[static_cast<std::size_t>(i)];
    const int b = p.class_of[static_cast<std::size_t>(j)];
    if (a != b && !q.graph.adjacent(a, b)) q.graph.add_edge(a, b);
  }
  return q;
}

enum class EdgeColor { red, green, blue };

inline const char* to_string(EdgeColor c) {
  switch (c) {
    case EdgeColor::red: return "red";
    case EdgeColor::green: return "green";
    case EdgeColor::blue: return "blue";
  }
  return "?";
}

struct ColoredEdge {
  Edge edge;
  EdgeColor color;
};

/// Red: endpoints equivalent. Green: comparable one way only. Blue: incomparable.
struct EdgeColoring {
  std::vector<ColoredEdge> edges;  // in lexicographic edge order

  std::size_t count(EdgeColor c) const {
    return static_cast<std::size_t>(
        std::count_if(edges.begin(), edges.end(), [c](const ColoredEdge& e) { return e.color == c; }));
  }

  std::vector<Edge> with_color(EdgeColor c) const {
    std::vector<Edge> out;
    for (const auto& e : edges)
      if (e.color == c) out.push_back(e.edge);
    return out;
  }
};

inline EdgeColoring color_edges(const Graph& g, const Preorder& p) {
  EdgeColoring col;
  for (auto [i, j] : g.edges()) {
    const bool ij = p.leq(i, j);
    const bool ji = p.leq(j, i);
    const EdgeColor c = (ij && ji) ? EdgeColor::red : (ij || ji) ? EdgeColor::green : EdgeColor::blue;
    col.edges.push_back({{i, j}, c});
  }
  return col;
}

}  // namespace ggm
