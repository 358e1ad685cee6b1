#pragma once

#include <string>
#include <vector>

#include "ggm/bounds.hpp"
#include "ggm/errors.hpp"
#include "ggm/linalg.hpp"
#include "ggm/preorder.hpp"

namespace ggm {

/// Smallest/largest singular value ratio below which a block counts as singular.
inline constexpr double default_rank_tol = 1e-10;

namespace detail {

inline std::string format_set(const std::vector<int>& vs) {
  std::string s = "{";
  for (std::size_t k = 0; k < vs.size(); ++k) s += (k ? "," : "") + std::to_string(vs[k] + 1);
  return s + "}";
}

}  // namespace detail

/// Orthogonal projector onto the row space of x[↓i] for one class.
struct ClassProjector {
  int class_index = 0;
  std::vector<int> down_set;
  Matrix projector;  // n x n
};

using InvariantValue = std::vector<ClassProjector>;

/// Genericity certificate: every x[↓i] has full row rank.
inline bool is_generic_sample(const Preorder& p, const Matrix& x, double rank_tol = default_rank_tol) {
  for (int c = 0; c < p.class_count(); ++c)
    if (!full_row_rank(rows_of(x, members(p.class_down(c))), rank_tol)) return false;
  return true;
}

/// Maximal invariant of the identity component: per class, the projector
/// x[↓i]^T (x[↓i] x[↓i]^T)^{-1} x[↓i], computed from the thin SVD of x[↓i].
inline InvariantValue maximal_invariant(const Preorder& p, const Matrix& x, double rank_tol = default_rank_tol) {
  if (x.rows() != p.order) throw std::invalid_argument("sample has wrong number of rows");
  InvariantValue out;
  for (int c = 0; c < p.class_count(); ++c) {
    const auto down = members(p.class_down(c));
    const Matrix xd = rows_of(x, down);
    if (!full_row_rank(xd, rank_tol))
      throw degenerate_sample("degenerate sample: rows " + detail::format_set(down) + " are not of full rank");
    Eigen::JacobiSVD<Matrix> svd(xd, Eigen::ComputeThinV);
    const Matrix& v = svd.matrixV();
    out.push_back({c, down, symmetrize(v * v.transpose())});
  }
  return out;
}

/// Column layout of the slice. For class c with down set of size d, the
/// rows of c are pinned on columns 0..d-1: zero on `zero_columns[c]`
/// (0..d-|c|-1) and the identity on `unit_columns[c]` (d-|c|..d-1).
/// `f` sends each vertex to its unit column, so f(ℓ(τ)(i)) = f(i) for every
/// lifted quotient automorphism. When every ↓i \ ī is a chain of classes this
/// coincides with the inductive rule "f(ī) = the |ī| smallest columns not in
/// f(↓i \ ī)", and then zero_columns[c] = f(↓i \ ī).
struct SliceMap {
  int n = 0;
  std::vector<int> f;
  std::vector<std::vector<int>> zero_columns;
  std::vector<std::vector<int>> unit_columns;
};

inline SliceMap build_slice_map(const Preorder& p, int n) {
  if (n < min_sample_size(p)) throw std::invalid_argument("sample size below the minimum for a slice");
  SliceMap s;
  s.n = n;
  s.f.assign(static_cast<std::size_t>(p.order), -1);
  for (int c = 0; c < p.class_count(); ++c) {
    const int d = cardinality(p.class_down(c));
    const int lower = d - p.class_size(c);
    s.zero_columns.push_back(iota_vector(lower));
    s.unit_columns.push_back(iota_vector(p.class_size(c), lower));
    const auto& mem = p.members_of(c);
    for (std::size_t k = 0; k < mem.size(); ++k) s.f[static_cast<std::size_t>(mem[k])] = lower + static_cast<int>(k);
  }
  return s;
}

/// Whether y satisfies the slice equations (within tol).
inline bool in_slice(const Preorder& p, const SliceMap& s, const Matrix& y, double tol) {
  for (int c = 0; c < p.class_count(); ++c) {
    const auto& mem = p.members_of(c);
    for (std::size_t r = 0; r < mem.size(); ++r) {
      for (int col : s.zero_columns[static_cast<std::size_t>(c)])
        if (std::abs(y(mem[r], col)) > tol) return false;
      const auto& unit = s.unit_columns[static_cast<std::size_t>(c)];
      for (std::size_t k = 0; k < unit.size(); ++k)
        if (std::abs(y(mem[r], unit[k]) - (k == r ? 1.0 : 0.0)) > tol) return false;
    }
  }
  return true;
}

struct SliceReduction {
  Matrix g0;       // identity-component element with g0 * x in the slice
  Matrix reduced;  // g0 * x
};

/// The unique g0 in the identity component moving x into the slice. Rows of
/// class c only see x[↓c], so each class is solved independently:
/// g0[c, ↓c] = E_c * x[↓c, 0..d-1]^{-1} with E_c = [0 | I].
inline SliceReduction reduce_to_slice(const Preorder& p, const Matrix& x, double rank_tol = default_rank_tol) {
  const int m = p.order;
  if (x.rows() != m) throw std::invalid_argument("sample has wrong number of rows");
  const SliceMap slice = build_slice_map(p, static_cast<int>(x.cols()));
  Matrix g0 = Matrix::Zero(m, m);
  for (int c = 0; c < p.class_count(); ++c) {
    const auto down = members(p.class_down(c));
    const int d = static_cast<int>(down.size());
    const auto& mem = p.members_of(c);
    const int size = static_cast<int>(mem.size());
    const Matrix pivot = block_of(x, down, iota_vector(d));
    if (!full_row_rank(pivot, rank_tol))
      throw degenerate_sample("degenerate sample: pivot block of rows " + detail::format_set(down) + " is singular");
    Matrix target = Matrix::Zero(size, d);
    target.rightCols(size).setIdentity();
    // rows = target * pivot^{-1}  <=>  pivot^T rows^T = target^T
    const Matrix rows = pivot.transpose().partialPivLu().solve(target.transpose()).transpose();
    for (int r = 0; r < size; ++r)
      for (int k = 0; k < d; ++k) g0(mem[static_cast<std::size_t>(r)], down[static_cast<std::size_t>(k)]) = rows(r, k);
    if (!full_row_rank(block_of(g0, mem, mem), rank_tol))
      throw degenerate_sample("degenerate sample: diagonal block of class " + detail::format_set(mem) + " is singular");
  }
  Matrix reduced = g0 * x;
  for (int c = 0; c < p.class_count(); ++c) {
    const auto& mem = p.members_of(c);
    for (std::size_t r = 0; r < mem.size(); ++r) {
      for (int col : slice.zero_columns[static_cast<std::size_t>(c)]) reduced(mem[r], col) = 0.0;
      const auto& unit = slice.unit_columns[static_cast<std::size_t>(c)];
      for (std::size_t k = 0; k < unit.size(); ++k) reduced(mem[r], unit[k]) = (k == r ? 1.0 : 0.0);
    }
  }
  return {std::move(g0), std::move(reduced)};
}

}  // namespace ggm
