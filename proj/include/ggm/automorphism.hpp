#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "ggm/graph.hpp"
#include "ggm/preorder.hpp"

namespace ggm {

/// perm[v] is the image of v.
using Permutation = std::vector<int>;

inline Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

/// (a ∘ b)(v) = a(b(v))
inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(b.size());
  for (std::size_t v = 0; v < b.size(); ++v) c[v] = a[static_cast<std::size_t>(b[v])];
  return c;
}

inline Permutation inverse(const Permutation& a) {
  Permutation inv(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) inv[static_cast<std::size_t>(a[v])] = static_cast<int>(v);
  return inv;
}

inline bool is_identity(const Permutation& p) {
  for (std::size_t v = 0; v < p.size(); ++v)
    if (p[v] != static_cast<int>(v)) return false;
  return true;
}

/// A finite permutation group stored by explicit enumeration of its elements,
/// sorted lexicographically (the identity is always first).
class PermGroup {
 public:
  PermGroup() = default;

  PermGroup(int degree, std::vector<Permutation> elements) : degree_(degree), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  }

  int degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }

  bool contains(const Permutation& p) const { return std::binary_search(elements_.begin(), elements_.end(), p); }

  /// Identity present and closed under composition and inverse.
  bool satisfies_group_axioms() const {
    if (elements_.empty() || !is_identity(elements_.front())) return false;
    for (const auto& a : elements_) {
      if (!contains(inverse(a))) return false;
      for (const auto& b : elements_)
        if (!contains(compose(a, b))) return false;
    }
    return true;
  }

  /// Greedy generating set: scan elements in order, keep those not already
  /// generated by the ones kept so far.
  std::vector<Permutation> generators() const {
    std::vector<Permutation> gens;
    std::set<Permutation> span{identity_permutation(degree_)};
    for (const auto& p : elements_) {
      if (span.count(p) != 0) continue;
      gens.push_back(p);
      std::vector<Permutation> frontier(span.begin(), span.end());
      while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& q : frontier)
          for (const auto& s : gens) {
            auto r = compose(s, q);
            if (span.insert(r).second) next.push_back(std::move(r));
          }
        frontier = std::move(next);
      }
    }
    return gens;
  }

 private:
  int degree_ = 0;
  std::vector<Permutation> elements_;
};

/// Raised when an automorphism group exceeds the enumeration limit.
class group_too_large : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t default_group_limit = 1'000'000;

namespace detail {

struct AutomorphismSearch {
  const Graph& g;
  std::vector<int> order;                  // search order of source vertices
  std::vector<std::vector<int>> candidates;  // per source vertex: targets with equal invariants
  std::size_t limit;
  Permutation image;
  VertexSet used = 0;
  std::vector<Permutation> found;

  void run(std::size_t depth) {
    if (depth == order.size()) {
      if (found.size() >= limit)
        throw group_too_large("automorphism group exceeds " + std::to_string(limit) + " elements");
      found.push_back(image);
      return;
    }
    const int v = order[depth];
    for (int w : candidates[static_cast<std::size_t>(v)]) {
      if (contains(used, w)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const int u = order[k];
        ok = g.adjacent(v, u) == g.adjacent(w, image[static_cast<std::size_t>(u)]);
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = w;
      used |= singleton(w);
      run(depth + 1);
      used &= ~singleton(w);
    }
  }
};

}  // namespace detail

/// All colour-preserving automorphisms of `g`, by backtracking over vertices
/// with pruning on (colour, degree, sorted neighbour-degree multiset).
inline PermGroup automorphisms(const Graph& g, const std::vector<int>& colors,
                               std::size_t limit = default_group_limit) {
  const int m = g.order();
  std::vector<std::vector<int>> invariant(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) {
    auto& inv = invariant[static_cast<std::size_t>(v)];
    inv.push_back(colors[static_cast<std::size_t>(v)]);
    inv.push_back(g.degree(v));
    std::vector<int> nd;
    for (int u : members(g.neighbors(v))) nd.push_back(g.degree(u));
    std::sort(nd.begin(), nd.end());
    inv.insert(inv.end(), nd.begin(), nd.end());
  }

  detail::AutomorphismSearch search{g, {}, std::vector<std::vector<int>>(static_cast<std::size_t>(m)), limit,
                                    Permutation(static_cast<std::size_t>(m), -1), 0, {}};
  for (int v = 0; v < m; ++v)
    for (int w = 0; w < m; ++w)
      if (invariant[static_cast<std::size_t>(v)] == invariant[static_cast<std::size_t>(w)])
        search.candidates[static_cast<std::size_t>(v)].push_back(w);

  // Highest degree first, then prefer vertices with most already-ordered neighbours.
  VertexSet placed = 0;
  for (int step = 0; step < m; ++step) {
    int best = -1;
    auto key = [&](int v) { return std::tuple(cardinality(g.neighbors(v) & placed), g.degree(v), -v); };
    for (int v = 0; v < m; ++v)
      if (!contains(placed, v) && (best < 0 || key(v) > key(best))) best = v;
    search.order.push_back(best);
    placed |= singleton(best);
  }
  search.run(0);
  return PermGroup(m, std::move(search.found));
}

inline PermGroup graph_automorphisms(const Graph& g, std::size_t limit = default_group_limit) {
  return automorphisms(g, std::vector<int>(static_cast<std::size_t>(g.order()), 0), limit);
}

/// Automorphisms of the quotient graph preserving the class-size colouring.
inline PermGroup colored_quotient_automorphisms(const ColoredQuotient& q, std::size_t limit = default_group_limit) {
  return automorphisms(q.graph, q.sizes, limit);
}

/// Lifts a class permutation to [m]: the k-th smallest member of class a is
/// sent to the k-th smallest member of class tau(a).
inline Permutation lift(const Permutation& tau, const Preorder& p) {
  if (static_cast<int>(tau.size()) != p.class_count())
    throw std::invalid_argument("class permutation has wrong degree");
  Permutation sigma(static_cast<std::size_t>(p.order), -1);
  for (int a = 0; a < p.class_count(); ++a) {
    const int b = tau[static_cast<std::size_t>(a)];
    if (p.class_size(a) != p.class_size(b))
      throw std::invalid_argument("class permutation does not preserve class sizes (class " + std::to_string(a + 1) +
                                  " -> " + std::to_string(b + 1) + ")");
    const auto& from = p.members_of(a);
    const auto& to = p.members_of(b);
    for (std::size_t k = 0; k < from.size(); ++k) sigma[static_cast<std::size_t>(from[k])] = to[k];
  }
  return sigma;
}

inline std::vector<Permutation> lift_all(const PermGroup& quotient_group, const Preorder& p) {
  std::vector<Permutation> out;
  out.reserve(quotient_group.order());
  for (const auto& tau : quotient_group.elements()) out.push_back(lift(tau, p));
  return out;
}

}  // namespace ggm
