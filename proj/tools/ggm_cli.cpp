#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ggm/ggm.hpp"

namespace {

using ggm::Json;

void render_text(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    const bool nested_array = value.is_array() && !value.empty() && value.front().is_structured();
    if (value.is_object()) {
      os << pad << key << ":\n";
      render_text(os, value, indent + 2);
    } else if (nested_array) {
      os << pad << key << ":\n";
      for (const auto& row : value) {
        if (row.is_object()) {
          render_text(os, row, indent + 2);
          os << "\n";
        } else {
          os << pad << "  " << row.dump() << "\n";
        }
      }
    } else {
      os << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

struct Output {
  bool pretty = false;

  void emit(const Json& j) const {
    if (pretty)
      render_text(std::cout, j, 0);
    else
      std::cout << j.dump() << "\n";
  }
};

ggm::Graph load_graph(const std::string& path) { return ggm::parse_graph(ggm::read_text_file(path)); }

ggm::Matrix load_sample(const std::string& path, const ggm::Graph& g) {
  ggm::Matrix x = ggm::parse_matrix_csv(ggm::read_text_file(path));
  if (x.rows() != g.order())
    throw std::invalid_argument("sample has " + std::to_string(x.rows()) + " rows, graph has " +
                                std::to_string(g.order()) + " vertices");
  return x;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure, orbit dimension and equivariant estimation for Gaussian graphical models"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  std::optional<double> tol;
  Output out;
  app.add_option("--seed", seed, "Seed for all randomness")->capture_default_str();
  app.add_option("--tol", tol, "Override the subcommand's numerical tolerance");
  auto* json_flag = app.add_flag("--json", "Machine-readable JSON output (default)");
  app.add_flag("--pretty", out.pretty, "Human-readable text output")->excludes(json_flag);

  std::string graph_path;
  std::string csv_path;
  std::optional<int> n;
  bool check_numeric = false;

  auto* analyze = app.add_subcommand("analyze", "Full structural report of a graph");
  analyze->add_option("graph", graph_path, "Graph file")->required();
  analyze->add_option("--n", n, "Sample size for the breakdown bound");
  analyze->add_flag("--check-numeric", check_numeric, "Also run the numeric orbit-dimension oracle");

  auto* dim = app.add_subcommand("dim", "Orbit-space dimension");
  dim->add_option("graph", graph_path, "Graph file")->required();
  dim->add_flag("--check-numeric", check_numeric, "Also run the numeric orbit-dimension oracle");

  auto* bounds = app.add_subcommand("bounds", "Minimum sample size and breakdown bound");
  bounds->add_option("graph", graph_path, "Graph file")->required();
  bounds->add_option("--n", n, "Sample size");

  bool ranks_only = false;
  auto* invariant = app.add_subcommand("invariant", "Maximal invariant of a sample");
  invariant->add_option("graph", graph_path, "Graph file")->required();
  invariant->add_option("sample", csv_path, "CSV sample, one row per variable")->required();
  invariant->add_flag("--ranks-only", ranks_only, "Report projector ranks only");

  std::string h0_path;
  std::string tprime = "identity";
  auto* estimate = app.add_subcommand("estimate", "Equivariant concentration estimate");
  estimate->add_option("graph", graph_path, "Graph file")->required();
  estimate->add_option("sample", csv_path, "CSV sample, one row per variable")->required();
  estimate->add_option("--h0", h0_path, "CSV matrix h0; uses the closed form for transitive graphs");
  estimate->add_option("--tprime", tprime, "Map on the slice")
      ->check(CLI::IsMember({"identity", "mle"}))
      ->capture_default_str();

  int trials = 5;
  auto* verify = app.add_subcommand("verify", "Randomized property checks on one graph");
  verify->add_option("graph", graph_path, "Graph file")->required();
  verify->add_option("--trials", trials, "Random trials")->capture_default_str()->check(CLI::PositiveNumber);

  int max_m = 4;
  int sweep_trials = 1;
  auto* sweep = app.add_subcommand("sweep", "Property checks over every labeled graph up to a given order");
  sweep->add_option("--max-m", max_m, "Largest order (at most 6)")->capture_default_str();
  sweep->add_option("--trials", sweep_trials, "Random trials per graph")->capture_default_str()->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      ggm::AnalysisOptions opts;
      opts.seed = seed;
      opts.numeric = check_numeric;
      opts.n = n;
      if (tol) opts.svd_tol = *tol;
      out.emit(ggm::analyze(load_graph(graph_path), opts));
    } else if (dim->parsed()) {
      const auto r = ggm::orbit_report(load_graph(graph_path),
                                       check_numeric ? std::optional<std::uint64_t>(seed) : std::nullopt,
                                       tol.value_or(ggm::default_svd_tol));
      out.emit(ggm::orbit_json(r));
    } else if (bounds->parsed()) {
      out.emit(ggm::bounds_json(ggm::compute_preorder(load_graph(graph_path)), n));
    } else if (invariant->parsed()) {
      const ggm::Graph g = load_graph(graph_path);
      const ggm::Preorder p = ggm::compute_preorder(g);
      const auto value = ggm::maximal_invariant(p, load_sample(csv_path, g), tol.value_or(ggm::default_rank_tol));
      Json classes = Json::array();
      for (const auto& c : value) {
        Json entry{{"class", ggm::one_based(p.members_of(c.class_index))},
                   {"down_set", ggm::one_based(c.down_set)},
                   {"rank", c.down_set.size()}};
        if (!ranks_only) entry["projector"] = ggm::to_json(c.projector);
        classes.push_back(std::move(entry));
      }
      out.emit(Json{{"classes", std::move(classes)}});
    } else if (estimate->parsed()) {
      const ggm::GraphStructure s(load_graph(graph_path));
      const ggm::Matrix x = load_sample(csv_path, s.graph());
      const double t = tol.value_or(ggm::default_tol);
      ggm::Matrix k;
      std::string method;
      if (!h0_path.empty()) {
        const ggm::Matrix h0 = ggm::parse_matrix_csv(ggm::read_text_file(h0_path));
        k = ggm::transitive_equivariant_estimator(s, x, h0, t);
        method = "transitive_closed_form";
      } else if (tprime == "mle") {
        const ggm::Graph& g = s.graph();
        k = ggm::equivariant_estimator(s, x, [&g](const ggm::Matrix& y) { return ggm::mle_decomposable(g, y); }, t);
        method = "slice_average_mle";
      } else {
        k = ggm::equivariant_estimator(s, x, ggm::constant_identity(), t);
        method = "slice_average_identity";
      }
      out.emit(Json{{"method", method}, {"n", x.cols()}, {"concentration", ggm::to_json(k)}});
    } else if (verify->parsed()) {
      ggm::PropertyTally tally;
      ggm::verify_graph(load_graph(graph_path), {seed, trials, tol.value_or(1e-8)}, tally);
      out.emit(Json{{"seed", seed}, {"trials", trials}, {"properties", tally.to_json()}, {"passed", tally.all_passed()}});
      return tally.all_passed() ? 0 : 1;
    } else if (sweep->parsed()) {
      const Json summary = ggm::sweep(max_m, seed, sweep_trials);
      out.emit(summary);
      return summary["passed"].get<bool>() ? 0 : 1;
    }
  } catch (const ggm::degenerate_sample& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
