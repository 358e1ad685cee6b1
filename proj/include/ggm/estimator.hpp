#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ggm/bounds.hpp"
#include "ggm/cliques.hpp"
#include "ggm/errors.hpp"
#include "ggm/group.hpp"
#include "ggm/invariant.hpp"
#include "ggm/linalg.hpp"
#include "ggm/orbit.hpp"

namespace ggm {

/// Throws std::invalid_argument unless k is symmetric, positive definite and
/// zero at the graph's non-edges (relative tolerance tol).
inline void check_concentration(const Graph& g, const Matrix& k, double tol, const std::string& what) {
  if (k.rows() != g.order() || k.cols() != g.order()) throw std::invalid_argument(what + " has wrong dimension");
  const double scale = 1.0 + k.cwiseAbs().maxCoeff();
  if (!is_symmetric(k, tol)) throw std::invalid_argument(what + " is not symmetric");
  if (non_edge_violation(k, g) > tol * scale) throw std::invalid_argument(what + " is nonzero at a non-edge");
  if (!is_positive_definite(k)) throw std::invalid_argument(what + " is not positive definite");
}

/// Arbitrary map from slice points to admissible concentration matrices.
using SliceEstimate = std::function<Matrix(const Matrix&)>;

inline SliceEstimate constant_identity() {
  return [](const Matrix& y) { return Matrix::Identity(y.rows(), y.rows()); };
}

/// Equivariant estimator built from an arbitrary slice map T'. On the slice,
/// T is the average of P·T'(P^{-1} y) over the lifted quotient automorphisms
/// P; elsewhere T(x) = g0^{-1}·T(g0 x) with g0 from the slice reduction.
inline Matrix equivariant_estimator(const GraphStructure& s, const Matrix& x, const SliceEstimate& t_prime,
                                    double tol = default_tol) {
  const SliceReduction red = reduce_to_slice(s.preorder(), x);
  const int m = s.order();
  Matrix on_slice = Matrix::Zero(m, m);
  for (const auto& sigma : s.lifted_group()) {
    const Matrix perm = permutation_matrix(sigma);
    const Matrix k = t_prime(perm.transpose() * red.reduced);
    check_concentration(s.graph(), k, tol, "slice estimate");
    on_slice += perm * k * perm.transpose();
  }
  on_slice /= static_cast<double>(s.lifted_group().size());
  return symmetrize(red.g0.transpose() * on_slice * red.g0);
}

inline Matrix equivariant_estimator(const Graph& g, const Matrix& x, const SliceEstimate& t_prime,
                                    double tol = default_tol) {
  return equivariant_estimator(GraphStructure(g), x, t_prime, tol);
}

inline Matrix sample_covariance(const Matrix& x) { return x * x.transpose() / static_cast<double>(x.cols()); }

namespace detail {

/// Adds sign * [S(vs)^{-1}]^0 to k, S = x x^T / n. With x[vs]^T = QR the
/// inverse is n R^{-1} R^{-T}, which avoids forming the covariance and so
/// loses accuracy only linearly in the condition number of x[vs].
inline void add_padded_inverse(Matrix& k, const Matrix& x, const std::vector<int>& vs, double sign) {
  if (vs.empty()) return;
  const auto d = static_cast<Eigen::Index>(vs.size());
  const Eigen::HouseholderQR<Matrix> qr(rows_of(x, vs).transpose());
  const Matrix r = qr.matrixQR().topRows(d).triangularView<Eigen::Upper>();
  for (Eigen::Index a = 0; a < d; ++a)
    if (r(a, a) == 0.0)
      throw degenerate_sample("degenerate sample: marginal covariance of " + format_set(vs) + " is singular");
  const Matrix r_inv = r.triangularView<Eigen::Upper>().solve(Matrix::Identity(d, d));
  const Matrix inv = static_cast<double>(x.cols()) * (r_inv * r_inv.transpose());
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b) k(vs[a], vs[b]) += sign * inv(a, b);
}

}  // namespace detail

/// Maximum likelihood concentration matrix of a decomposable (chordal) model,
/// zero mean. Uses the perfect sequence from maximum cardinality search:
/// K = sum_k [S(F_k)^{-1}]^0 - [S(P_k)^{-1}]^0 with P_k the earlier
/// neighbours of the k-th visited vertex and F_k = P_k plus that vertex.
/// A marginal counts as singular when x[F_k] is not of full row rank.
inline Matrix mle_decomposable(const Graph& g, const Matrix& x, double rank_tol = default_rank_tol) {
  if (x.rows() != g.order()) throw std::invalid_argument("sample has wrong number of rows");
  if (!is_chordal(g)) throw unsupported_graph("maximum likelihood closed form requires a chordal graph");
  if (x.cols() == 0) throw degenerate_sample("degenerate sample: no observations");
  const auto order = maximum_cardinality_search(g);
  const auto earlier = earlier_neighbors(g, order);
  Matrix k = Matrix::Zero(g.order(), g.order());
  for (std::size_t t = 0; t < order.size(); ++t) {
    const auto family = members(earlier[t] | singleton(order[t]));
    if (!full_row_rank(rows_of(x, family), rank_tol))
      throw degenerate_sample("degenerate sample: marginal covariance of " + detail::format_set(family) + " is singular");
    detail::add_padded_inverse(k, x, family, 1.0);
    detail::add_padded_inverse(k, x, members(earlier[t]), -1.0);
  }
  return symmetrize(k);
}

/// h in the identity component with h^T h = k, for transitive graphs.
/// Classes are processed from the top of a linear extension down: the
/// diagonal block is the upper Cholesky factor R (R^T R = residual block,
/// positive diagonal) and the block row to the left is R^{-T} times the
/// residual, followed by a Schur-complement update. In the transitive case
/// the residual keeps the graph's zero pattern, so h has the pattern of G0.
inline Matrix g0_factorization(const GraphStructure& s, const Matrix& k, double tol = default_tol) {
  if (!is_transitive(s.graph()).transitive)
    throw unsupported_graph("identity-component factorization requires a transitive graph");
  check_concentration(s.graph(), k, tol, "concentration matrix");
  const Preorder& p = s.preorder();
  const auto order = linear_extension(s.poset());
  const int m = s.order();

  Matrix residual = symmetrize(k);
  Matrix h = Matrix::Zero(m, m);
  std::vector<int> earlier;
  for (int c : order)
    for (int v : p.members_of(c)) earlier.push_back(v);

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto& mem = p.members_of(*it);
    earlier.resize(earlier.size() - mem.size());
    Eigen::LLT<Matrix> llt(block_of(residual, mem, mem));
    if (llt.info() != Eigen::Success) throw numeric_failure("factorization failed: diagonal block not positive definite");
    const Matrix r = llt.matrixU();
    for (std::size_t a = 0; a < mem.size(); ++a)
      for (std::size_t b = 0; b < mem.size(); ++b)
        h(mem[a], mem[b]) = r(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
    if (earlier.empty()) continue;
    const Matrix left = r.transpose().triangularView<Eigen::Lower>().solve(block_of(residual, mem, earlier));
    for (std::size_t a = 0; a < mem.size(); ++a)
      for (std::size_t b = 0; b < earlier.size(); ++b)
        h(mem[a], earlier[b]) = left(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
    const Matrix update = left.transpose() * left;
    for (std::size_t a = 0; a < earlier.size(); ++a)
      for (std::size_t b = 0; b < earlier.size(); ++b)
        residual(earlier[a], earlier[b]) -= update(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
  }

  const double scale = 1.0 + inf_norm(h);
  if (pattern_violation(h, s.pattern()) > 1e-8 * scale)
    throw numeric_failure("factorization left the identity-component pattern");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (!s.pattern().allowed(i, j)) h(i, j) = 0.0;
  if ((h.transpose() * h - k).cwiseAbs().maxCoeff() > 1e-8 * (1.0 + k.cwiseAbs().maxCoeff()))
    throw numeric_failure("factorization residual too large");
  return h;
}

inline Matrix g0_factorization(const Graph& g, const Matrix& k, double tol = default_tol) {
  return g0_factorization(GraphStructure(g), k, tol);
}

/// Whether M = h0^T h0 is fixed by the stabilizer of the identity matrix:
/// block diagonal over classes, each block a scalar multiple of I, and the
/// scalars constant on orbits of the quotient automorphism group. Only such
/// h0 give equivariant estimators (h0 h(x))^T (h0 h(x)).
inline bool preserves_equivariance(const GraphStructure& s, const Matrix& h0, double tol = default_tol) {
  const Matrix mm = h0.transpose() * h0;
  const Preorder& p = s.preorder();
  const double scale = tol * (1.0 + mm.cwiseAbs().maxCoeff());
  std::vector<double> level(static_cast<std::size_t>(p.class_count()));
  for (int i = 0; i < p.order; ++i)
    for (int j = 0; j < p.order; ++j) {
      const int ci = p.class_of[static_cast<std::size_t>(i)];
      if (i != j && std::abs(mm(i, j)) > scale) return false;
      if (i == j && std::abs(mm(i, i) - mm(p.members_of(ci).front(), p.members_of(ci).front())) > scale) return false;
    }
  for (int c = 0; c < p.class_count(); ++c) level[static_cast<std::size_t>(c)] = mm(p.members_of(c).front(), p.members_of(c).front());
  for (const auto& tau : s.quotient_group().elements())
    for (int c = 0; c < p.class_count(); ++c)
      if (std::abs(level[static_cast<std::size_t>(c)] - level[static_cast<std::size_t>(tau[static_cast<std::size_t>(c)])]) > scale)
        return false;
  return true;
}

/// (h0 h(x))^T (h0 h(x)) where h(x)^T h(x) = S(x)^{-1} and S(x) = n times
/// the maximum likelihood covariance. Transitive graphs only; h0 must have the
/// identity-component pattern and satisfy preserves_equivariance.
inline Matrix transitive_equivariant_estimator(const GraphStructure& s, const Matrix& x, const Matrix& h0,
                                               double tol = default_tol) {
  if (!is_transitive(s.graph()).transitive)
    throw unsupported_graph("closed-form equivariant estimator requires a transitive graph");
  const int m = s.order();
  if (h0.rows() != m || h0.cols() != m) throw std::invalid_argument("h0 has wrong dimension");
  if (pattern_violation(h0, s.pattern()) > tol * (1.0 + inf_norm(h0)))
    throw std::invalid_argument("h0 does not have the identity-component pattern");
  if (!Eigen::FullPivLU<Matrix>(h0).isInvertible()) throw std::invalid_argument("h0 is singular");
  if (!preserves_equivariance(s, h0, tol))
    throw std::invalid_argument("h0^T h0 is not invariant under the stabilizer of the identity; estimator would not be equivariant");
  const Matrix s_inv = mle_decomposable(s.graph(), x) / static_cast<double>(x.cols());
  const Matrix h = g0_factorization(s, s_inv, tol);
  const Matrix hh = h0 * h;
  return symmetrize(hh.transpose() * hh);
}

/// D(K1, K2) = |log det K1 - log det K2|
inline double pseudo_metric_D(const Matrix& k1, const Matrix& k2) {
  const auto a = log_det_pd(k1);
  const auto b = log_det_pd(k2);
  if (!a || !b) throw std::invalid_argument("pseudo-metric needs positive definite arguments");
  return std::abs(*a - *b);
}

struct StabilizerReport {
  int n = 0;
  bool unique = false;              // every row system has a unique solution
  std::vector<int> row_nullity;     // per vertex: dimension of the free row solutions
  bool trace_unconstrained = false;
  /// A with the identity-component pattern, A x = 0 and trace A = 1, supported
  /// on a single row; present when trace_unconstrained.
  std::optional<Matrix> free_direction;
};

/// Solves the per-row systems sum_{j ≼ i} g_ij x_j = x_i for the stabilizer of
/// the sample columns in the identity component.
inline StabilizerReport verify_stabilizer_triviality(const Preorder& p, const Matrix& x,
                                                     double rank_tol = default_rank_tol) {
  const int m = p.order;
  StabilizerReport r;
  r.n = static_cast<int>(x.cols());
  r.unique = true;
  double best = 0.0;
  for (int i = 0; i < m; ++i) {
    const auto down = p.down_set(i);
    const auto d = static_cast<Eigen::Index>(down.size());
    const auto pos = static_cast<Eigen::Index>(std::find(down.begin(), down.end(), i) - down.begin());
    Matrix null_basis;
    if (x.cols() == 0) {
      null_basis = Matrix::Identity(d, d);
    } else {
      const Matrix sys = rows_of(x, down).transpose();  // n x d
      Eigen::JacobiSVD<Matrix> svd(sys, Eigen::ComputeFullV);
      const Vector sv = svd.singularValues();
      Eigen::Index rank = 0;
      for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(0) > 0.0 && sv(k) >= rank_tol * sv(0)) ++rank;
      null_basis = svd.matrixV().rightCols(d - rank);
    }
    r.row_nullity.push_back(static_cast<int>(null_basis.cols()));
    if (null_basis.cols() > 0) r.unique = false;
    for (Eigen::Index k = 0; k < null_basis.cols(); ++k) {
      const double diag = std::abs(null_basis(pos, k));
      if (diag > 1e-8 && diag > best) {
        best = diag;
        Matrix a = Matrix::Zero(m, m);
        for (Eigen::Index t = 0; t < d; ++t) a(i, down[static_cast<std::size_t>(t)]) = null_basis(t, k) / null_basis(pos, k);
        r.free_direction = std::move(a);
      }
    }
  }
  r.trace_unconstrained = r.free_direction.has_value();
  return r;
}

/// Same, on a standard normal sample of size n drawn from `seed`.
inline StabilizerReport verify_stabilizer_triviality(const Graph& g, int n, std::uint64_t seed) {
  Rng rng(seed);
  return verify_stabilizer_triviality(compute_preorder(g), standard_normal_matrix(g.order(), n, rng));
}

/// I + t A for a free direction A (trace 1, single row): fixes the sample
/// columns used to find A and has determinant exactly 1 + t.
inline Matrix stabilizer_element(const StabilizerReport& r, double t) {
  if (!r.free_direction) throw std::invalid_argument("stabilizer has no trace-changing direction");
  const auto m = r.free_direction->rows();
  return Matrix::Identity(m, m) + t * *r.free_direction;
}

}  // namespace ggm
