#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ggm {

/// Vertex subsets are stored as 64-bit masks; graphs are limited to 64
/// vertices (clique and automorphism enumeration are practical to ~30).
using VertexSet = std::uint64_t;
using Edge = std::pair<int, int>;

inline constexpr int max_order = 64;

constexpr VertexSet singleton(int v) { return VertexSet{1} << v; }
constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }
constexpr bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }
constexpr int cardinality(VertexSet s) { return std::popcount(s); }
/// Vertices strictly greater than v.
constexpr VertexSet above(int v) { return ~((VertexSet{2} << v) - 1); }

inline std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality(s)));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

inline VertexSet to_set(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) s |= singleton(v);
  return s;
}

/// Undirected simple graph on vertices 0..m-1 (1..m in all external text).
class Graph {
 public:
  Graph() = default;

  explicit Graph(int order) : adj_(check_order(order), 0) {}

  Graph(int order, const std::vector<Edge>& edges) : Graph(order) {
    for (auto [i, j] : edges) add_edge(i, j);
  }

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t size() const noexcept { return edge_count_; }

  void add_edge(int i, int j) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw std::invalid_argument("self-loop at vertex " + std::to_string(i + 1));
    if (adjacent(i, j))
      throw std::invalid_argument("duplicate edge {" + std::to_string(std::min(i, j) + 1) + "," +
                                  std::to_string(std::max(i, j) + 1) + "}");
    adj_[static_cast<std::size_t>(i)] |= singleton(j);
    adj_[static_cast<std::size_t>(j)] |= singleton(i);
    ++edge_count_;
  }

  bool adjacent(int i, int j) const { return contains(adj_[static_cast<std::size_t>(i)], j); }
  VertexSet neighbors(int i) const { return adj_[static_cast<std::size_t>(i)]; }
  VertexSet closed_neighborhood(int i) const { return neighbors(i) | singleton(i); }
  int degree(int i) const { return cardinality(neighbors(i)); }

  VertexSet all_vertices() const {
    return order() == 64 ? ~VertexSet{0} : singleton(order()) - 1;
  }

  /// Edges as (i, j) with i < j, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int i = 0; i < order(); ++i)
      for (int j : members(neighbors(i) & above(i))) out.emplace_back(i, j);
    return out;
  }

  /// Subgraph induced on `keep`, relabelled to 0..|keep|-1 in increasing order.
  Graph induced(const std::vector<int>& keep) const {
    Graph h(static_cast<int>(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a)
      for (std::size_t b = a + 1; b < keep.size(); ++b)
        if (adjacent(keep[a], keep[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
    return h;
  }

  /// Image of the graph under the relabelling v -> perm[v].
  Graph relabel(const std::vector<int>& perm) const {
    Graph h(order());
    for (auto [i, j] : edges()) h.add_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    return h;
  }

  std::vector<std::vector<int>> connected_components() const {
    std::vector<std::vector<int>> comps;
    VertexSet unseen = all_vertices();
    while (unseen != 0) {
      VertexSet comp = singleton(std::countr_zero(unseen));
      VertexSet frontier = comp;
      while (frontier != 0) {
        VertexSet next = 0;
        for (int v : members(frontier)) next |= neighbors(v);
        frontier = next & ~comp;
        comp |= next;
      }
      comps.push_back(members(comp));
      unseen &= ~comp;
    }
    return comps;
  }

  bool is_connected() const { return order() <= 1 || connected_components().size() == 1; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

  static Graph complete(int m) {
    Graph g(m);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) g.add_edge(i, j);
    return g;
  }

  static Graph path(int m) {
    Graph g(m);
    for (int i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
    return g;
  }

  static Graph cycle(int m) {
    Graph g = path(m);
    if (m >= 3) g.add_edge(0, m - 1);
    return g;
  }

  /// Star with centre 0 and `leaves` leaves.
  static Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
  }

  /// Labeled graph on m vertices whose edges are the set bits of `code`
  /// over the pairs (0,1),(0,2),...,(m-2,m-1).
  static Graph from_code(int m, std::uint64_t code) {
    Graph g(m);
    int bit = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j, ++bit)
        if ((code >> bit) & 1U) g.add_edge(i, j);
    return g;
  }

 private:
  static std::size_t check_order(int m) {
    if (m < 0 || m > max_order)
      throw std::invalid_argument("graph order must be in [0, 64], got " + std::to_string(m));
    return static_cast<std::size_t>(m);
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= order())
      throw std::out_of_range("vertex " + std::to_string(v + 1) + " outside 1.." + std::to_string(order()));
  }

  std::vector<VertexSet> adj_;
  std::size_t edge_count_ = 0;
};

}  // namespace ggm
