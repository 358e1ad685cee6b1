#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ggm/bounds.hpp"
#include "ggm/estimator.hpp"
#include "ggm/group.hpp"
#include "ggm/invariant.hpp"
#include "ggm/orbit.hpp"

namespace ggm {

using Json = nlohmann::ordered_json;

/// Row-major array of arrays.
inline Json to_json(const Matrix& a) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json one_based(const std::vector<int>& vs) {
  Json out = Json::array();
  for (int v : vs) out.push_back(v + 1);
  return out;
}

inline Json one_based(const std::vector<std::vector<int>>& vss) {
  Json out = Json::array();
  for (const auto& vs : vss) out.push_back(one_based(vs));
  return out;
}

inline Json edge_list_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (auto [i, j] : edges) out.push_back({i + 1, j + 1});
  return out;
}

inline Json group_json(const GraphStructure& s) {
  const int m = s.order();
  Json pattern = Json::array();
  for (int i = 0; i < m; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m; ++j) row.push_back(s.pattern().allowed(i, j));
    pattern.push_back(std::move(row));
  }
  Json gens = Json::array();
  for (const auto& gen : s.quotient_group().generators()) gens.push_back(one_based(gen));
  return Json{{"g0_dimension", g0_dimension(s.preorder())},
              {"pattern", std::move(pattern)},
              {"aut_graph_order", graph_automorphisms(s.graph()).order()},
              {"aut_quotient_order", s.quotient_group().order()},
              {"quotient_generators", std::move(gens)}};
}

inline Json orbit_json(const OrbitReport& r) {
  Json j{{"dimension", r.dim_combinatorial},
         {"combinatorial", r.dim_combinatorial},
         {"combinatorial_lex_order", r.dim_combinatorial_lex},
         {"formula", r.dim_formula}};
  if (r.dim_numeric) j["numeric"] = *r.dim_numeric;
  j["n_bar"] = r.n_bar;
  j["edge_colors"] = {{"red", r.red_count}, {"green", r.green_count}, {"blue", r.blue_count}};
  j["surviving_red"] = r.surviving_red;
  j["transitive"] = r.transitive;
  return j;
}

inline Json transitivity_json(const TransitivityReport& t) {
  return Json{{"edges_comparable", t.edges_comparable},
              {"chordal_without_4chain", t.chordal_without_4chain},
              {"hasse_rooted_trees", t.hasse_rooted_trees},
              {"transitive", t.transitive}};
}

inline Json bounds_json(const Preorder& p, std::optional<int> n) {
  Json j{{"min_sample_size", min_sample_size(p)}};
  if (n) {
    const Rational b = breakdown_upper_bound(p, *n);
    j["n"] = *n;
    j["breakdown_bound"] = b.to_string();
    j["breakdown_bound_value"] = b.to_double();
  }
  return j;
}

struct AnalysisOptions {
  std::uint64_t seed = 0;
  bool numeric = false;        // run the numeric orbit-dimension oracle
  std::optional<int> n;        // sample size for the breakdown bound
  double svd_tol = default_svd_tol;
};

/// Full structural report of a graph. Deterministic given the options.
inline Json analyze(const Graph& g, const AnalysisOptions& opts = {}) {
  const GraphStructure s(g);
  const Preorder& p = s.preorder();
  const OrbitReport orbit = orbit_report(g, opts.numeric ? std::optional<std::uint64_t>(opts.seed) : std::nullopt,
                                         opts.svd_tol);
  const TransitivityReport trans = is_transitive(g);
  if (trans.transitive != (orbit.dim_combinatorial == 0))
    throw std::logic_error("transitivity verdict disagrees with orbit dimension");

  Json down = Json::array();
  for (int i = 0; i < p.order; ++i) down.push_back(one_based(p.down_set(i)));
  Json hasse = Json::array();
  for (auto [lo, hi] : s.poset().hasse) hasse.push_back({lo + 1, hi + 1});

  Json j;
  j["graph"] = {{"order", g.order()}, {"edges", edge_list_json(g.edges())}};
  j["preorder"] = {{"down_sets", std::move(down)}, {"classes", one_based(p.classes)}, {"hasse", std::move(hasse)}};
  j["group"] = group_json(s);
  j["orbit"] = orbit_json(orbit);
  j["transitivity"] = transitivity_json(trans);
  j["bounds"] = bounds_json(p, opts.n);
  return j;
}

/// Pass/fail tally per named property.
class PropertyTally {
 public:
  void record(const std::string& name, bool ok) {
    auto& [pass, fail] = counts_[name];
    (ok ? pass : fail) += 1;
  }

  void merge(const PropertyTally& other) {
    for (const auto& [name, c] : other.counts_) {
      counts_[name].first += c.first;
      counts_[name].second += c.second;
    }
  }

  bool all_passed() const {
    for (const auto& [name, c] : counts_)
      if (c.second != 0) return false;
    return true;
  }

  Json to_json() const {
    Json j = Json::object();
    for (const auto& [name, c] : counts_) j[name] = {{"pass", c.first}, {"fail", c.second}};
    return j;
  }

 private:
  std::map<std::string, std::pair<long long, long long>> counts_;
};

/// |a - b|_max / (1 + |b|_max)
inline double relative_error(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff() / (1.0 + b.cwiseAbs().maxCoeff());
}

struct VerifyOptions {
  std::uint64_t seed = 0;
  int trials = 5;
  double tol = 1e-8;
};

/// Randomized property checks on one graph, recorded into `tally`.
inline void verify_graph(const Graph& g, const VerifyOptions& opts, PropertyTally& tally) {
  const GraphStructure s(g);
  const Preorder& p = s.preorder();
  Rng rng(opts.seed);
  const int m = g.order();

  const OrbitReport orbit = orbit_report(g, rng());
  tally.record("orbit_dimension_agreement",
               orbit.dim_combinatorial == orbit.dim_formula && orbit.dim_numeric == orbit.dim_formula);
  bool trans_ok = true;
  try {
    trans_ok = is_transitive(g).transitive == (orbit.dim_formula == 0);
  } catch (const std::logic_error&) {
    trans_ok = false;
  }
  tally.record("transitivity_conditions", trans_ok);

  bool lifted_ok = s.quotient_group().satisfies_group_axioms();
  for (const auto& sigma : s.lifted_group()) lifted_ok = lifted_ok && is_in_G(permutation_matrix(sigma), g);
  tally.record("lifted_automorphisms_in_group", lifted_ok);

  const bool transitive = orbit.dim_formula == 0;
  const bool chordal = is_chordal(g);
  const int q = min_sample_size(p);
  // the maximum likelihood estimate needs every clique marginal to be regular
  std::size_t largest_clique = 0;
  for (const auto& c : maximal_cliques(g)) largest_clique = std::max(largest_clique, c.size());
  const int n = std::max(q, static_cast<int>(largest_clique)) + 1;
  for (int t = 0; t < opts.trials; ++t) {
    const Matrix x = standard_normal_matrix(m, n, rng);
    const Matrix g0 = random_g0(s.pattern(), rng);
    const Matrix gfull = random_group_element(s, rng);
    tally.record("random_element_in_group", is_in_G(gfull, g));

    const auto tau_x = maximal_invariant(p, x);
    const auto tau_gx = maximal_invariant(p, g0 * x);
    bool inv_ok = true;
    for (std::size_t c = 0; c < tau_x.size(); ++c)
      inv_ok = inv_ok && relative_error(tau_gx[c].projector, tau_x[c].projector) <= opts.tol;
    tally.record("invariant_under_identity_component", inv_ok);

    const auto red_x = reduce_to_slice(p, x);
    const auto red_gx = reduce_to_slice(p, g0 * x);
    tally.record("slice_reduction_unique", relative_error(red_gx.reduced, red_x.reduced) <= opts.tol);

    const Matrix tx = equivariant_estimator(s, x, constant_identity());
    const Matrix tgx = equivariant_estimator(s, gfull * x, constant_identity());
    tally.record("estimator_equivariance", relative_error(tgx, act_on_concentration(gfull, tx)) <= opts.tol);

    if (chordal) {
      const Matrix k = mle_decomposable(g, x);
      const Matrix sigma = k.inverse();
      const Matrix cov = sample_covariance(x);
      bool match = non_edge_violation(k, g) <= 1e-9 * (1.0 + k.cwiseAbs().maxCoeff());
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          if (i == j || g.adjacent(i, j))
            match = match && std::abs(sigma(i, j) - cov(i, j)) <= 1e-9 * (1.0 + cov.cwiseAbs().maxCoeff());
      tally.record("mle_matching_conditions", match);
    }
    if (transitive) {
      const Matrix h0 = Matrix::Identity(m, m);
      const Matrix tx2 = transitive_equivariant_estimator(s, x, h0);
      const Matrix tgx2 = transitive_equivariant_estimator(s, gfull * x, h0);
      tally.record("transitive_estimator_equivariance",
                   relative_error(tgx2, act_on_concentration(gfull, tx2)) <= opts.tol);
    }

    const auto at_q = verify_stabilizer_triviality(p, standard_normal_matrix(m, q, rng));
    const auto below_q = verify_stabilizer_triviality(p, standard_normal_matrix(m, q - 1, rng));
    tally.record("stabilizer_threshold", at_q.unique && !below_q.unique && below_q.trace_unconstrained);
  }
}

inline constexpr int sweep_max_order = 6;

/// Exhaustive verification over every labeled graph on 1..max_m vertices.
inline Json sweep(int max_m, std::uint64_t seed, int trials = 1) {
  if (max_m < 1 || max_m > sweep_max_order)
    throw std::invalid_argument("limit exceeded: sweep order must be between 1 and " +
                                std::to_string(sweep_max_order));
  PropertyTally tally;
  Json per_order = Json::array();
  Rng seeds(seed);
  for (int m = 1; m <= max_m; ++m) {
    const std::uint64_t count = std::uint64_t{1} << (m * (m - 1) / 2);
    PropertyTally local;
    for (std::uint64_t code = 0; code < count; ++code)
      verify_graph(Graph::from_code(m, code), {seeds(), trials, 1e-8}, local);
    per_order.push_back({{"order", m}, {"graphs", count}, {"passed", local.all_passed()}});
    tally.merge(local);
  }
  return Json{{"max_order", max_m},
              {"seed", seed},
              {"orders", std::move(per_order)},
              {"properties", tally.to_json()},
              {"passed", tally.all_passed()}};
}

}  // namespace ggm
