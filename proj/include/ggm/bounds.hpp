#pragma once

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "ggm/graph.hpp"
#include "ggm/preorder.hpp"

namespace ggm {

/// Exact nonnegative fraction in lowest terms.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    if (d <= 0) throw std::invalid_argument("rational denominator must be positive");
    const long long g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }
};

/// Smallest sample size for which equivariant estimators exist: max |↓i|.
inline int min_sample_size(const Preorder& p) {
  int q = 0;
  for (int i = 0; i < p.order; ++i) q = std::max(q, p.down_size(i));
  return q;
}

inline int min_sample_size(const Graph& g) { return min_sample_size(compute_preorder(g)); }

/// Upper bound ceil((n - q + 1) / 2) / n on the finite-sample breakdown point
/// of any equivariant estimator at a generic sample, q = max |↓i|.
inline Rational breakdown_upper_bound(const Preorder& p, int n) {
  const int q = min_sample_size(p);
  if (n < q || n <= 0)
    throw std::invalid_argument("sample size " + std::to_string(n) + " below the minimum " + std::to_string(q));
  const long long d = (static_cast<long long>(n) - q + 1 + 1) / 2;
  return Rational(d, n);
}

inline Rational breakdown_upper_bound(const Graph& g, int n) { return breakdown_upper_bound(compute_preorder(g), n); }

}  // namespace ggm
