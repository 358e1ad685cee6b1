#pragma once

// Independent reference implementations used only by the tests. They work
// from adjacency matrices and exhaustive search rather than the library's
// bitset code paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "ggm/graph.hpp"

namespace oracle {

using Adjacency = std::vector<std::vector<bool>>;
using Matrix = Eigen::MatrixXd;

inline Adjacency adjacency(const ggm::Graph& g) {
  const int m = g.order();
  Adjacency a(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m), false));
  for (auto [i, j] : g.edges()) a[i][j] = a[j][i] = true;
  return a;
}

inline std::vector<bool> closed_nbhd(const Adjacency& a, int i) {
  auto row = a[static_cast<std::size_t>(i)];
  row[static_cast<std::size_t>(i)] = true;
  return row;
}

/// i ≼ j iff N[j] ⊆ N[i].
inline bool leq(const Adjacency& a, int i, int j) {
  const auto ni = closed_nbhd(a, i), nj = closed_nbhd(a, j);
  for (std::size_t v = 0; v < ni.size(); ++v)
    if (nj[v] && !ni[v]) return false;
  return true;
}

inline std::vector<int> down_set(const Adjacency& a, int i) {
  std::vector<int> out;
  for (int j = 0; j < static_cast<int>(a.size()); ++j)
    if (leq(a, j, i)) out.push_back(j);
  return out;
}

inline int g0_dimension(const Adjacency& a) {
  int d = 0;
  for (int i = 0; i < static_cast<int>(a.size()); ++i) d += static_cast<int>(down_set(a, i).size());
  return d;
}

inline int max_down_size(const Adjacency& a) {
  int q = 0;
  for (int i = 0; i < static_cast<int>(a.size()); ++i) q = std::max(q, static_cast<int>(down_set(a, i).size()));
  return q;
}

inline bool subset_is_clique(const Adjacency& a, const std::vector<int>& s) {
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = x + 1; y < s.size(); ++y)
      if (!a[s[x]][s[y]]) return false;
  return true;
}

inline std::vector<int> subset_members(std::uint64_t mask, int m) {
  std::vector<int> out;
  for (int v = 0; v < m; ++v)
    if ((mask >> v) & 1U) out.push_back(v);
  return out;
}

/// Maximal cliques by checking every vertex subset.
inline std::vector<std::vector<int>> maximal_cliques(const Adjacency& a) {
  const int m = static_cast<int>(a.size());
  std::vector<std::uint64_t> cliques;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s)
    if (subset_is_clique(a, subset_members(s, m))) cliques.push_back(s);
  std::vector<std::vector<int>> out;
  for (auto s : cliques) {
    bool maximal = true;
    for (auto t : cliques)
      if (t != s && (s & t) == s) maximal = false;
    if (maximal) out.push_back(subset_members(s, m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Whether the induced subgraph on `s` is a single cycle through all of s.
inline bool induces_cycle(const Adjacency& a, const std::vector<int>& s) {
  for (int v : s) {
    int deg = 0;
    for (int u : s) deg += (u != v && a[v][u]) ? 1 : 0;
    if (deg != 2) return false;
  }
  std::vector<int> seen{s.front()};
  for (std::size_t k = 0; k < seen.size(); ++k)
    for (int u : s)
      if (a[seen[k]][u] && std::find(seen.begin(), seen.end(), u) == seen.end()) seen.push_back(u);
  return seen.size() == s.size();
}

/// Chordal iff no vertex subset of size >= 4 induces a cycle.
inline bool is_chordal(const Adjacency& a) {
  const int m = static_cast<int>(a.size());
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    const auto vs = subset_members(s, m);
    if (vs.size() >= 4 && induces_cycle(a, vs)) return false;
  }
  return true;
}

/// Some ordered 4-tuple induces the path a-b-c-d.
inline bool has_induced_p4(const Adjacency& a) {
  const int m = static_cast<int>(a.size());
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s) {
          if (p == q || p == r || p == s || q == r || q == s || r == s) continue;
          if (a[p][q] && a[q][r] && a[r][s] && !a[p][r] && !a[p][s] && !a[q][s]) return true;
        }
  return false;
}

inline bool is_connected(const Adjacency& a) {
  const int m = static_cast<int>(a.size());
  if (m <= 1) return true;
  std::vector<int> seen{0};
  for (std::size_t k = 0; k < seen.size(); ++k)
    for (int u = 0; u < m; ++u)
      if (a[seen[k]][u] && std::find(seen.begin(), seen.end(), u) == seen.end()) seen.push_back(u);
  return static_cast<int>(seen.size()) == m;
}

/// Every permutation of [m] preserving adjacency (m small).
inline std::vector<std::vector<int>> automorphisms(const Adjacency& a) {
  const int m = static_cast<int>(a.size());
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = 0; j < m && ok; ++j) ok = a[i][j] == a[p[i]][p[j]];
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Classes of ∼ ordered by smallest member, and the coloured quotient
/// automorphisms found by trying every class permutation.
struct Quotient {
  std::vector<std::vector<int>> classes;
  std::size_t aut_order = 0;
};

inline Quotient quotient(const Adjacency& a) {
  const int m = static_cast<int>(a.size());
  Quotient q;
  std::vector<int> cls(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    if (cls[i] >= 0) continue;
    q.classes.emplace_back();
    for (int j = i; j < m; ++j)
      if (closed_nbhd(a, i) == closed_nbhd(a, j)) {
        cls[j] = static_cast<int>(q.classes.size()) - 1;
        q.classes.back().push_back(j);
      }
  }
  const int k = static_cast<int>(q.classes.size());
  auto joined = [&](int x, int y) { return a[q.classes[x].front()][q.classes[y].front()]; };
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < k && ok; ++x) {
      ok = q.classes[x].size() == q.classes[p[x]].size();
      for (int y = 0; y < k && ok; ++y)
        if (x != y) ok = joined(x, y) == joined(p[x], p[y]);
    }
    if (ok) ++q.aut_order;
  } while (std::next_permutation(p.begin(), p.end()));
  return q;
}

/// Smallest edge code over all relabelings; equal iff isomorphic.
inline std::uint64_t canonical_code(const Adjacency& a) {
  const int m = static_cast<int>(a.size());
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    int bit = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j, ++bit)
        if (a[p[i]][p[j]]) code |= std::uint64_t{1} << bit;
    best = std::min(best, code);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

/// One representative (smallest code) per isomorphism class on m vertices.
inline std::vector<ggm::Graph> isomorphism_classes(int m) {
  std::set<std::uint64_t> seen;
  std::vector<ggm::Graph> reps;
  const std::uint64_t count = std::uint64_t{1} << (m * (m - 1) / 2);
  for (std::uint64_t code = 0; code < count; ++code) {
    const ggm::Graph g = ggm::Graph::from_code(m, code);
    if (seen.insert(canonical_code(adjacency(g))).second) reps.push_back(g);
  }
  return reps;
}

inline Matrix sample_covariance(const Matrix& x) { return x * x.transpose() / static_cast<double>(x.cols()); }

/// Iterative proportional scaling over the maximal cliques, started at I.
inline Matrix ips_mle(const ggm::Graph& g, const Matrix& x, double tol = 1e-13, int max_sweeps = 100000) {
  const auto a = adjacency(g);
  const Matrix s = sample_covariance(x);
  const int m = g.order();
  Matrix k = Matrix::Identity(m, m);
  const auto cliques = maximal_cliques(a);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double change = 0.0;
    for (const auto& c : cliques) {
      const Matrix sigma = k.inverse();
      const auto d = static_cast<Eigen::Index>(c.size());
      Matrix s_cc(d, d), sig_cc(d, d);
      for (Eigen::Index u = 0; u < d; ++u)
        for (Eigen::Index v = 0; v < d; ++v) {
          s_cc(u, v) = s(c[u], c[v]);
          sig_cc(u, v) = sigma(c[u], c[v]);
        }
      const Matrix delta = s_cc.inverse() - sig_cc.inverse();
      for (Eigen::Index u = 0; u < d; ++u)
        for (Eigen::Index v = 0; v < d; ++v) k(c[u], c[v]) += delta(u, v);
      change = std::max(change, delta.cwiseAbs().maxCoeff());
    }
    if (change < tol * (1.0 + k.cwiseAbs().maxCoeff())) break;
  }
  return 0.5 * (k + k.transpose());
}

/// Orbit-space dimension at K: dim of admissible matrices minus the rank of
/// the tangent map A -> A^T K + K A on the identity-component pattern,
/// with the image read off the full m x m matrix.
inline long long numeric_orbit_space_dimension(const ggm::Graph& g, const Matrix& k, double rel_tol = 1e-8) {
  const auto a = adjacency(g);
  const int m = g.order();
  std::vector<std::pair<int, int>> basis;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (leq(a, j, i)) basis.emplace_back(i, j);
  Matrix map = Matrix::Zero(m * m, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c) {
    Matrix e = Matrix::Zero(m, m);
    e(basis[c].first, basis[c].second) = 1.0;
    const Matrix img = e.transpose() * k + k * e;
    for (int r = 0; r < m; ++r)
      for (int s = 0; s < m; ++s) map(r * m + s, static_cast<Eigen::Index>(c)) = img(r, s);
  }
  Eigen::ColPivHouseholderQR<Matrix> qr(map);
  qr.setThreshold(rel_tol);
  return static_cast<long long>(m) + static_cast<long long>(g.size()) - qr.rank();
}

/// The inductive column assignment: classes in a linear extension, each class
/// gets the smallest columns not used by the strictly smaller part of its
/// down set. Returns f on vertices (0-based columns).
inline std::vector<int> inductive_f(const ggm::Graph& g, int n) {
  const auto a = adjacency(g);
  const int m = g.order();
  const auto q = quotient(a);
  std::vector<int> order(q.classes.size());
  std::iota(order.begin(), order.end(), 0);
  // any linear extension: sort by down-set size
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return down_set(a, q.classes[x].front()).size() < down_set(a, q.classes[y].front()).size();
  });
  std::vector<int> f(static_cast<std::size_t>(m), -1);
  for (int c : order) {
    const auto& mem = q.classes[c];
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int j : down_set(a, mem.front()))
      if (std::find(mem.begin(), mem.end(), j) == mem.end()) used[f[j]] = true;
    std::size_t next = 0;
    for (int col = 0; col < n && next < mem.size(); ++col)
      if (!used[col]) f[mem[next++]] = col;
  }
  return f;
}

/// Whether every down set minus its own class is a chain of classes.
inline bool strict_down_sets_are_chains(const ggm::Graph& g) {
  const auto a = adjacency(g);
  const int m = g.order();
  for (int i = 0; i < m; ++i)
    for (int j : down_set(a, i))
      for (int k : down_set(a, i)) {
        const bool j_in_class = leq(a, i, j), k_in_class = leq(a, i, k);
        if (!j_in_class && !k_in_class && !leq(a, j, k) && !leq(a, k, j)) return false;
      }
  return true;
}

}  // namespace oracle
