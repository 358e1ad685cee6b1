#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "ggm/graph.hpp"

namespace ggm {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Rng = std::mt19937_64;

/// Maximum absolute row sum; zero for empty matrices.
inline double inf_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().rowwise().sum().maxCoeff();
}

inline Matrix rows_of(const Matrix& a, const std::vector<int>& rows) { return a(rows, Eigen::all); }

inline Matrix block_of(const Matrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
  return a(rows, cols);
}

inline std::vector<int> iota_vector(int n, int start = 0) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = start + i;
  return v;
}

inline Vector singular_values(const Matrix& a) {
  if (a.size() == 0) return Vector();
  return Eigen::JacobiSVD<Matrix>(a).singularValues();
}

/// Number of singular values >= rel_tol * largest singular value.
inline int numeric_rank(const Matrix& a, double rel_tol) {
  const Vector s = singular_values(a);
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s(k) >= rel_tol * s(0)) ++r;
  return r;
}

/// Full row rank with smallest/largest singular value ratio at least `rel_tol`.
inline bool full_row_rank(const Matrix& a, double rel_tol) {
  if (a.rows() == 0) return true;
  if (a.cols() < a.rows()) return false;
  const Vector s = singular_values(a);
  return s(0) > 0.0 && s(s.size() - 1) >= rel_tol * s(0);
}

inline bool is_symmetric(const Matrix& a, double tol) {
  return a.rows() == a.cols() && (a - a.transpose()).cwiseAbs().maxCoeff() <= tol * (1.0 + a.cwiseAbs().maxCoeff());
}

/// log det of a positive definite matrix via Cholesky; empty if not PD.
inline std::optional<double> log_det_pd(const Matrix& a) {
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success) return std::nullopt;
  const Matrix& l = llt.matrixLLT();
  double s = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    const double d = l(i, i);
    if (!(d > 0.0)) return std::nullopt;
    s += std::log(d);
  }
  return 2.0 * s;
}

inline bool is_positive_definite(const Matrix& a) { return log_det_pd(a).has_value(); }

inline Matrix symmetrize(const Matrix& a) { return 0.5 * (a + a.transpose()); }

inline Matrix standard_normal_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal;
  Matrix a(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) a(i, j) = normal(rng);
  return a;
}

/// Permutation matrix with ones at (i, perm[i]), so (P x)_i = x_{perm[i]}.
inline Matrix permutation_matrix(const std::vector<int>& perm) {
  const auto m = static_cast<Eigen::Index>(perm.size());
  Matrix p = Matrix::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) p(i, perm[static_cast<std::size_t>(i)]) = 1.0;
  return p;
}

}  // namespace ggm
