#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ggm/cliques.hpp"
#include "ggm/errors.hpp"
#include "ggm/group.hpp"
#include "ggm/linalg.hpp"
#include "ggm/preorder.hpp"

namespace ggm {

inline long long choose2(long long n) { return n <= 1 ? 0 : n * (n - 1) / 2; }

struct CombinatorialDimension {
  long long dimension = 0;
  long long surviving_red = 0;
};

/// Orbit-space dimension by edge deletion: drop green edges, then repeatedly
/// remove a blue edge together with both endpoints (and every blue or red
/// edge at them) until no blue edge is left. The result is
/// #blue - #red + #red remaining.
///
/// `blue_order` fixes the choice: at each step the first listed blue edge
/// whose endpoints are both still present is removed. It must be a
/// permutation of the blue edges; empty means ascending lexicographic.
inline CombinatorialDimension orbit_dim_combinatorial(const Graph& g, const Preorder& p,
                                                      std::vector<Edge> blue_order = {}) {
  const EdgeColoring col = color_edges(g, p);
  const auto blue = col.with_color(EdgeColor::blue);
  const auto red = col.with_color(EdgeColor::red);
  if (blue_order.empty()) {
    blue_order = blue;
  } else {
    auto sorted = blue_order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != blue) throw std::invalid_argument("deletion order is not a permutation of the blue edges");
  }

  VertexSet alive = g.all_vertices();
  for (auto [i, j] : blue_order) {
    if (contains(alive, i) && contains(alive, j)) alive &= ~(singleton(i) | singleton(j));
  }
  long long remaining_red = 0;
  for (auto [i, j] : red)
    if (contains(alive, i) && contains(alive, j)) ++remaining_red;

  return {static_cast<long long>(blue.size()) - static_cast<long long>(red.size()) + remaining_red, remaining_red};
}

inline CombinatorialDimension orbit_dim_combinatorial(const Graph& g) {
  return orbit_dim_combinatorial(g, compute_preorder(g));
}

/// The deletion procedure minimised over every deletion sequence. The
/// outcome of a single sequence depends on the order (vertex 1 joined to 4,6
/// and the twins 2,3 joined to 4,5 give 3 or 2), and the smallest outcome is
/// the orbit-space dimension. Exhaustive search memoised on the set of
/// surviving vertices.
inline CombinatorialDimension orbit_dim_combinatorial_min(const Graph& g, const Preorder& p) {
  const EdgeColoring col = color_edges(g, p);
  const auto blue = col.with_color(EdgeColor::blue);
  const auto red = col.with_color(EdgeColor::red);
  std::unordered_map<VertexSet, long long> memo;
  auto surviving = [&](auto&& self, VertexSet alive) -> long long {
    if (auto it = memo.find(alive); it != memo.end()) return it->second;
    long long best = -1;
    for (auto [i, j] : blue)
      if (contains(alive, i) && contains(alive, j)) {
        const long long r = self(self, alive & ~(singleton(i) | singleton(j)));
        if (best < 0 || r < best) best = r;
      }
    if (best < 0) {
      best = 0;
      for (auto [i, j] : red)
        if (contains(alive, i) && contains(alive, j)) ++best;
    }
    memo.emplace(alive, best);
    return best;
  };
  const long long remaining_red = surviving(surviving, g.all_vertices());
  return {static_cast<long long>(blue.size()) - static_cast<long long>(red.size()) + remaining_red, remaining_red};
}

inline CombinatorialDimension orbit_dim_combinatorial_min(const Graph& g) {
  return orbit_dim_combinatorial_min(g, compute_preorder(g));
}

/// n_a = max(0, |a| - sum of |b| over quotient neighbours b incomparable to a).
inline std::vector<long long> stabilizer_class_excess(const Preorder& p, const Poset& s, const ColoredQuotient& q) {
  std::vector<long long> excess(static_cast<std::size_t>(p.class_count()));
  for (int a = 0; a < p.class_count(); ++a) {
    long long n = p.class_size(a);
    for (int b : members(q.graph.neighbors(a)))
      if (!s.leq(a, b) && !s.leq(b, a)) n -= p.class_size(b);
    excess[static_cast<std::size_t>(a)] = std::max(0LL, n);
  }
  return excess;
}

inline long long stabilizer_dim_formula(const Graph& g) {
  const Preorder p = compute_preorder(g);
  long long d = 0;
  for (long long n : stabilizer_class_excess(p, poset_of(p), quotient_colored(g, p))) d += choose2(n);
  return d;
}

/// (m + |E|) - dim G0 + generic stabilizer dimension.
inline long long orbit_dim_formula(const Graph& g) {
  const Preorder p = compute_preorder(g);
  return static_cast<long long>(g.order()) + static_cast<long long>(g.size()) - g0_dimension(p) +
         stabilizer_dim_formula(g);
}

inline constexpr double default_svd_tol = 1e-8;

/// Nullity of A -> A^T K + K A over matrices A with the identity-component
/// pattern (the Lie algebra of the stabilizer of K). Singular values below
/// tol * sigma_max count as zero.
inline long long stabilizer_dim_numeric(const Graph& g, const Matrix& k, double tol = default_svd_tol) {
  const int m = g.order();
  if (k.rows() != m || k.cols() != m) throw std::invalid_argument("concentration matrix has wrong dimension");
  if (!is_symmetric(k, 1e-12)) throw std::invalid_argument("concentration matrix is not symmetric");
  if (non_edge_violation(k, g) > 1e-12 * (1.0 + k.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("concentration matrix is nonzero at a non-edge");
  if (!is_positive_definite(k)) throw std::invalid_argument("concentration matrix is not positive definite");

  const auto basis = lie_algebra_basis(compute_preorder(g));
  const auto rows = static_cast<Eigen::Index>(m * (m + 1) / 2);
  Matrix map = Matrix::Zero(rows, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const auto [i, j] = basis[c];
    // E_ij^T K + K E_ij : row j gets K.row(i), column j gets K.col(i).
    Matrix img = Matrix::Zero(m, m);
    img.row(j) += k.row(i);
    img.col(j) += k.col(i);
    Eigen::Index r = 0;
    for (int a = 0; a < m; ++a)
      for (int b = a; b < m; ++b) map(r++, static_cast<Eigen::Index>(c)) = img(a, b);
  }
  return static_cast<long long>(basis.size()) - numeric_rank(map, tol);
}

struct TransitivityReport {
  bool edges_comparable = false;       // every edge joins comparable vertices
  bool chordal_without_4chain = false;  // decomposable, no induced path on 4 vertices
  bool hasse_rooted_trees = false;     // per component: Hasse diagram a tree with one minimum
  bool transitive = false;
};

/// The Hasse condition evaluated per connected component of the graph, so that
/// disconnected graphs are handled (comparability never crosses components).
inline bool hasse_is_rooted_forest(const Graph& g, const Preorder& p, const Poset& s) {
  for (const auto& comp : g.connected_components()) {
    VertexSet classes = 0;
    for (int v : comp) classes |= singleton(p.class_of[static_cast<std::size_t>(v)]);
    const int k = cardinality(classes);
    int covers = 0;
    std::vector<int> lower_covers(static_cast<std::size_t>(s.size), 0);
    // union-find over classes for connectivity
    std::vector<int> parent(static_cast<std::size_t>(s.size));
    for (int a = 0; a < s.size; ++a) parent[static_cast<std::size_t>(a)] = a;
    auto find = [&](int a) {
      while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)];
      return a;
    };
    int merges = 0;
    for (auto [lo, hi] : s.hasse) {
      if (!contains(classes, lo)) continue;
      ++covers;
      ++lower_covers[static_cast<std::size_t>(hi)];
      const int ra = find(lo), rb = find(hi);
      if (ra != rb) {
        parent[static_cast<std::size_t>(ra)] = rb;
        ++merges;
      }
    }
    const bool tree = covers == k - 1 && merges == k - 1;
    int minima = 0;
    for (int a : members(classes))
      if (lower_covers[static_cast<std::size_t>(a)] == 0) ++minima;
    if (!tree || minima != 1) return false;
  }
  return true;
}

/// Evaluates the three transitivity conditions. The first two are equivalent
/// and decide the verdict. The Hasse condition is necessary but not
/// sufficient: the Hasse diagram cannot see edges between incomparable
/// classes (vertex 1 joined to the path 5-2-3-4 has a rooted-tree Hasse
/// diagram but a blue edge {2,3}). Disagreement between the first two, or a
/// transitive graph failing the third, is an internal error.
inline TransitivityReport is_transitive(const Graph& g) {
  const Preorder p = compute_preorder(g);
  const Poset s = poset_of(p);
  TransitivityReport r;
  r.edges_comparable = color_edges(g, p).count(EdgeColor::blue) == 0;
  r.chordal_without_4chain = is_chordal(g) && !has_induced_4chain(g);
  r.hasse_rooted_trees = hasse_is_rooted_forest(g, p, s);
  if (r.edges_comparable != r.chordal_without_4chain || (r.edges_comparable && !r.hasse_rooted_trees))
    throw std::logic_error("transitivity conditions disagree");
  r.transitive = r.edges_comparable;
  return r;
}

struct OrbitReport {
  long long dim_combinatorial = 0;       // minimised over deletion orders
  long long dim_combinatorial_lex = 0;   // ascending lexicographic deletion order
  long long dim_formula = 0;
  std::optional<long long> dim_numeric;  // filled by the numeric oracle when requested
  std::vector<long long> n_bar;          // per class
  std::size_t blue_count = 0;
  std::size_t green_count = 0;
  std::size_t red_count = 0;
  long long surviving_red = 0;
  bool transitive = false;
};

/// Orbit report; with `numeric_seed` set, also runs the numeric oracle at a
/// random generic concentration matrix drawn from that seed.
inline OrbitReport orbit_report(const Graph& g, std::optional<std::uint64_t> numeric_seed = std::nullopt,
                                double svd_tol = default_svd_tol) {
  const Preorder p = compute_preorder(g);
  const Poset s = poset_of(p);
  const EdgeColoring col = color_edges(g, p);
  OrbitReport r;
  const auto comb = orbit_dim_combinatorial_min(g, p);
  r.dim_combinatorial = comb.dimension;
  r.surviving_red = comb.surviving_red;
  r.dim_combinatorial_lex = orbit_dim_combinatorial(g, p).dimension;
  r.dim_formula = orbit_dim_formula(g);
  r.n_bar = stabilizer_class_excess(p, s, quotient_colored(g, p));
  r.blue_count = col.count(EdgeColor::blue);
  r.green_count = col.count(EdgeColor::green);
  r.red_count = col.count(EdgeColor::red);
  r.transitive = is_transitive(g).transitive;
  if (numeric_seed) {
    Rng rng(*numeric_seed);
    const Matrix k = random_concentration(g, rng);
    r.dim_numeric = static_cast<long long>(g.order()) + static_cast<long long>(g.size()) - g0_dimension(p) +
                    stabilizer_dim_numeric(g, k, svd_tol);
  }
  return r;
}

}  // namespace ggm
