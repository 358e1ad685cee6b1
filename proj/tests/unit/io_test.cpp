#include <catch_amalgamated.hpp>

#include "ggm/io.hpp"
#include "ggm/report.hpp"
#include "support/graphs.hpp"

using ggm::Graph;

namespace {

int error_line(const std::string& text) {
  try {
    ggm::parse_graph(text);
  } catch (const ggm::parse_error& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parsing graphs") {
  CHECK(ggm::parse_graph("3\n1 2\n1 3\n") == fixtures::p3());
  CHECK(ggm::parse_graph("2\n") == Graph(2));
  CHECK(ggm::parse_graph("# comment\n3 # order\n\n2 1\n3 1 # edge\n") == fixtures::p3());
}

TEST_CASE("parse errors carry the line number") {
  CHECK(error_line("3\n1 1\n") == 2);
  CHECK_THROWS_WITH(ggm::parse_graph("3\n1 1\n"), Catch::Matchers::ContainsSubstring("self-loop"));
  CHECK(error_line("3\n1 2\n2 1\n") == 3);
  CHECK(error_line("3\n1 4\n") == 2);
  CHECK(error_line("3\n1 2 3\n") == 2);
  CHECK(error_line("3\n1 x\n") == 2);
  CHECK(error_line("three\n") == 1);
  CHECK(error_line("0\n") == 1);
  CHECK(error_line("# nothing\n") == 2);
}

TEST_CASE("serialization round-trips") {
  ggm::Rng rng(1);
  std::bernoulli_distribution coin(0.4);
  for (int t = 0; t < 200; ++t) {
    const int m = 1 + static_cast<int>(rng() % 12);
    Graph g(m);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (coin(rng)) g.add_edge(i, j);
    REQUIRE(ggm::parse_graph(ggm::serialize_graph(g)) == g);
  }
}

TEST_CASE("parsing CSV samples") {
  const ggm::Matrix x = ggm::parse_matrix_csv("1, 2.5,-3\n4e-1,5,6\n");
  REQUIRE(x.rows() == 2);
  REQUIRE(x.cols() == 3);
  CHECK(x(0, 1) == 2.5);
  CHECK(x(1, 0) == 0.4);
  CHECK_THROWS_AS(ggm::parse_matrix_csv("1,2\n3\n"), ggm::parse_error);
  CHECK_THROWS_AS(ggm::parse_matrix_csv("1,abc\n"), ggm::parse_error);
  CHECK_THROWS_AS(ggm::parse_matrix_csv("1,,2\n"), ggm::parse_error);
}

TEST_CASE("analysis reports") {
  SECTION("path with centre 1") {
    const auto r = ggm::analyze(fixtures::p3());
    CHECK(r["group"]["g0_dimension"] == 5);
    CHECK(r["group"]["aut_quotient_order"] == 2);
    CHECK(r["orbit"]["dimension"] == 0);
    CHECK(r["transitivity"]["transitive"] == true);
    CHECK(r["bounds"]["min_sample_size"] == 2);
  }
  SECTION("bull") {
    const auto r = ggm::analyze(fixtures::bull());
    CHECK(r["group"]["g0_dimension"] == 9);
    CHECK(r["group"]["aut_quotient_order"] == 2);
    CHECK(r["group"]["quotient_generators"] == ggm::Json::parse("[[2,1,3,5,4]]"));
    CHECK(r["orbit"]["dimension"] == 1);
    CHECK(r["transitivity"]["transitive"] == false);
    CHECK(r["bounds"]["min_sample_size"] == 3);
  }
  SECTION("4-cycle") {
    const auto r = ggm::analyze(fixtures::c4(), {0, true, 4});
    CHECK(r["group"]["g0_dimension"] == 4);
    CHECK(r["group"]["aut_graph_order"] == 8);
    CHECK(r["group"]["aut_quotient_order"] == 8);
    CHECK(r["orbit"]["dimension"] == 4);
    CHECK(r["orbit"]["numeric"] == 4);
    CHECK(r["transitivity"]["transitive"] == false);
    CHECK(r["bounds"]["min_sample_size"] == 1);
    CHECK(r["bounds"]["breakdown_bound"] == "1/2");
  }
}

TEST_CASE("analysis is deterministic") {
  const ggm::AnalysisOptions opts{42, true, 7};
  CHECK(ggm::analyze(fixtures::bull(), opts).dump() == ggm::analyze(fixtures::bull(), opts).dump());
}

TEST_CASE("matrices serialize row-major and round-trip exactly") {
  ggm::Matrix a(2, 2);
  a << 0.1, 1.0 / 3.0, -2.5e-17, 12345.678901234567;
  const auto j = ggm::to_json(a);
  const auto back = ggm::Json::parse(j.dump());
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) CHECK(back[r][c].get<double>() == a(r, c));
}

TEST_CASE("sweep") {
  const auto two = ggm::sweep(2, 0);
  CHECK(two["orders"][1]["graphs"] == 2);
  CHECK(two["passed"] == true);
  const auto four = ggm::sweep(4, 0);
  CHECK(four["orders"][3]["graphs"] == 64);
  CHECK(four["passed"] == true);
  CHECK_THROWS_WITH(ggm::sweep(7, 0), Catch::Matchers::ContainsSubstring("limit exceeded"));
}
