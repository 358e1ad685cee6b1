#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ggm/automorphism.hpp"
#include "ggm/errors.hpp"
#include "ggm/graph.hpp"
#include "ggm/linalg.hpp"
#include "ggm/preorder.hpp"

namespace ggm {

/// Zero pattern of the identity component: entry (i, j) may be nonzero iff j ≼ i.
struct ZeroPattern {
  std::vector<VertexSet> rows;  // rows[i] = allowed columns of row i

  int order() const { return static_cast<int>(rows.size()); }
  bool allowed(int i, int j) const { return contains(rows[static_cast<std::size_t>(i)], j); }
};

inline ZeroPattern g0_pattern(const Preorder& p) { return ZeroPattern{p.down}; }

/// Index pairs (i, j), j ≼ i, spanning the Lie algebra; lexicographic order.
inline std::vector<std::pair<int, int>> lie_algebra_basis(const Preorder& p) {
  std::vector<std::pair<int, int>> basis;
  for (int i = 0; i < p.order; ++i)
    for (int j : p.down_set(i)) basis.emplace_back(i, j);
  return basis;
}

inline int g0_dimension(const Preorder& p) {
  int d = 0;
  for (VertexSet s : p.down) d += cardinality(s);
  return d;
}

/// Largest |entry| at positions the pattern forbids.
inline double pattern_violation(const Matrix& a, const ZeroPattern& pat) {
  double worst = 0.0;
  for (int i = 0; i < pat.order(); ++i)
    for (int j = 0; j < pat.order(); ++j)
      if (!pat.allowed(i, j)) worst = std::max(worst, std::abs(a(i, j)));
  return worst;
}

/// Largest |entry| at off-diagonal non-edge positions.
inline double non_edge_violation(const Matrix& k, const Graph& g) {
  double worst = 0.0;
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j)
      if (i != j && !g.adjacent(i, j)) worst = std::max(worst, std::abs(k(i, j)));
  return worst;
}

/// Everything combinatorial about a graph that the group and estimation code
/// needs, computed once. Immutable after construction.
class GraphStructure {
 public:
  explicit GraphStructure(Graph g, std::size_t group_limit = default_group_limit)
      : graph_(std::move(g)),
        preorder_(compute_preorder(graph_)),
        poset_(poset_of(preorder_)),
        quotient_(quotient_colored(graph_, preorder_)),
        coloring_(color_edges(graph_, preorder_)),
        pattern_(g0_pattern(preorder_)),
        quotient_group_(colored_quotient_automorphisms(quotient_, group_limit)),
        lifted_(lift_all(quotient_group_, preorder_)) {}

  const Graph& graph() const noexcept { return graph_; }
  const Preorder& preorder() const noexcept { return preorder_; }
  const Poset& poset() const noexcept { return poset_; }
  const ColoredQuotient& quotient() const noexcept { return quotient_; }
  const EdgeColoring& coloring() const noexcept { return coloring_; }
  const ZeroPattern& pattern() const noexcept { return pattern_; }
  /// Aut of the coloured quotient, acting on class indices.
  const PermGroup& quotient_group() const noexcept { return quotient_group_; }
  /// The quotient group lifted to vertex permutations, in the same order.
  const std::vector<Permutation>& lifted_group() const noexcept { return lifted_; }

  int order() const noexcept { return graph_.order(); }

 private:
  Graph graph_;
  Preorder preorder_;
  Poset poset_;
  ColoredQuotient quotient_;
  EdgeColoring coloring_;
  ZeroPattern pattern_;
  PermGroup quotient_group_;
  std::vector<Permutation> lifted_;
};

inline constexpr double default_tol = 1e-9;

namespace detail {

inline Eigen::FullPivLU<Matrix> checked_lu(const Matrix& g) {
  if (g.rows() != g.cols()) throw std::invalid_argument("group element must be square");
  Eigen::FullPivLU<Matrix> lu(g);
  if (!lu.isInvertible()) throw std::invalid_argument("group element is singular");
  return lu;
}

}  // namespace detail

/// g · K = g^{-T} K g^{-1}
inline Matrix act_on_concentration(const Matrix& g, const Matrix& k) {
  const auto lu = detail::checked_lu(g);
  const Matrix ginv = lu.inverse();
  return symmetrize(ginv.transpose() * k * ginv);
}

/// Whether g maps the span of admissible concentration matrices into itself.
/// Checks g^T B g for the basis E_ii, E_ij + E_ji ({i,j} an edge); this is
/// the action of g^{-1}, and G is closed under inverses. An entry counts as
/// zero when |entry| <= tol * (1 + |g|_inf^2 |B|_inf).
inline bool is_in_G(const Matrix& g, const Graph& graph, double tol = default_tol) {
  detail::checked_lu(g);
  const int m = graph.order();
  if (g.rows() != m) throw std::invalid_argument("group element has wrong dimension");
  const double gn = inf_norm(g);
  auto check = [&](const Matrix& b) {
    const Matrix img = g.transpose() * b * g;
    return non_edge_violation(img, graph) <= tol * (1.0 + gn * gn * inf_norm(b));
  };
  for (int i = 0; i < m; ++i) {
    Matrix b = Matrix::Zero(m, m);
    b(i, i) = 1.0;
    if (!check(b)) return false;
  }
  for (auto [i, j] : graph.edges()) {
    Matrix b = Matrix::Zero(m, m);
    b(i, j) = b(j, i) = 1.0;
    if (!check(b)) return false;
  }
  return true;
}

struct Decomposition {
  Permutation sigma;  // g = P_sigma · g0
  Matrix g0;
};

/// Splits g = P_sigma · g0 with sigma a lifted quotient automorphism and g0
/// in the identity component. Under the semidirect structure the split is
/// unique; the search runs over the lifted group in its fixed order.
inline Decomposition decompose(const Matrix& g, const GraphStructure& s, double tol = default_tol) {
  detail::checked_lu(g);
  const double scale = tol * (1.0 + inf_norm(g));
  for (const auto& sigma : s.lifted_group()) {
    Matrix g0 = permutation_matrix(sigma).transpose() * g;
    if (pattern_violation(g0, s.pattern()) <= scale) {
      for (int i = 0; i < s.order(); ++i)
        for (int j = 0; j < s.order(); ++j)
          if (!s.pattern().allowed(i, j)) g0(i, j) = 0.0;
      return {sigma, std::move(g0)};
    }
  }
  throw not_a_member("matrix is not a member of the stabilizing group");
}

/// Random element of the identity component: pattern entries i.i.d. N(0,1),
/// resampled while |det| < 1e-6.
inline Matrix random_g0(const ZeroPattern& pat, Rng& rng) {
  std::normal_distribution<double> normal;
  const int m = pat.order();
  for (;;) {
    Matrix g = Matrix::Zero(m, m);
    for (int i = 0; i < m; ++i)
      for (int j : members(pat.rows[static_cast<std::size_t>(i)])) g(i, j) = normal(rng);
    if (std::abs(g.determinant()) >= 1e-6) return g;
  }
}

/// Random element P_sigma · g0 of the full group, sigma uniform over the
/// lifted quotient automorphisms.
inline Matrix random_group_element(const GraphStructure& s, Rng& rng) {
  const auto& lifted = s.lifted_group();
  std::uniform_int_distribution<std::size_t> pick(0, lifted.size() - 1);
  const auto& sigma = lifted[pick(rng)];
  return permutation_matrix(sigma) * random_g0(s.pattern(), rng);
}

/// Random concentration matrix with exactly the graph's zero pattern: edge
/// entries N(0,1), diagonal |N(0,1)| + 1 + (absolute off-diagonal row sum),
/// so strict diagonal dominance certifies positive definiteness.
inline Matrix random_concentration(const Graph& g, Rng& rng) {
  std::normal_distribution<double> normal;
  const int m = g.order();
  Matrix k = Matrix::Zero(m, m);
  for (auto [i, j] : g.edges()) k(i, j) = k(j, i) = normal(rng);
  for (int i = 0; i < m; ++i) k(i, i) = std::abs(normal(rng)) + 1.0 + k.row(i).cwiseAbs().sum();
  return k;
}

}  // namespace ggm
