#include <catch_amalgamated.hpp>

#include "ggm/cliques.hpp"
#include "ggm/linalg.hpp"
#include "ggm/preorder.hpp"
#include "support/graphs.hpp"
#include "support/oracles.hpp"

using ggm::Graph;

TEST_CASE("preorder of the path with centre 1") {
  const auto p = ggm::compute_preorder(fixtures::p3());
  CHECK(p.leq(0, 1));
  CHECK(p.leq(0, 2));
  CHECK_FALSE(p.leq(1, 0));
  CHECK_FALSE(p.comparable(1, 2));
  CHECK(ggm::down_set(p, 0) == std::vector<int>{0});
  CHECK(ggm::down_set(p, 1) == std::vector<int>{0, 1});
  CHECK(ggm::down_set(p, 2) == std::vector<int>{0, 2});
  CHECK(p.class_count() == 3);
}

TEST_CASE("preorder of the complete graph is a single class") {
  const auto p = ggm::compute_preorder(Graph::complete(4));
  CHECK(p.class_count() == 1);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(p.equivalent(i, j));
}

TEST_CASE("preorder of the bull") {
  const auto p = ggm::compute_preorder(fixtures::bull());
  std::vector<std::pair<int, int>> strict;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (i != j && p.leq(i, j)) strict.emplace_back(i, j);
  const std::vector<std::pair<int, int>> expected{{0, 2}, {0, 3}, {1, 2}, {1, 4}};
  CHECK(strict == expected);
  CHECK(p.class_count() == 5);
  CHECK(ggm::down_set(p, 2) == std::vector<int>{0, 1, 2});
}

TEST_CASE("poset of the path with centre 1 has a unique minimum below two maxima") {
  const auto p = ggm::compute_preorder(fixtures::p3());
  const auto s = ggm::poset_of(p);
  const std::vector<std::pair<int, int>> hasse{{0, 1}, {0, 2}};
  CHECK(s.hasse == hasse);
  CHECK(s.depth == std::vector<int>{0, 1, 1});
}

TEST_CASE("poset of the empty graph is an antichain") {
  const auto s = ggm::poset_of(ggm::compute_preorder(Graph(4)));
  CHECK(s.size == 4);
  CHECK(s.hasse.empty());
}

TEST_CASE("poset of a chain of classes skips implied relations") {
  const Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
  const auto p = ggm::compute_preorder(g);
  const auto s = ggm::poset_of(p);
  CHECK(ggm::reflexive_transitive_closure(s.size, s.hasse) == s.below);
}

TEST_CASE("coloured quotient") {
  SECTION("complete graph") {
    const Graph g = Graph::complete(3);
    const auto q = ggm::quotient_colored(g, ggm::compute_preorder(g));
    CHECK(q.graph.order() == 1);
    CHECK(q.graph.size() == 0);
    CHECK(q.sizes == std::vector<int>{3});
  }
  SECTION("path with centre 1") {
    const Graph g = fixtures::p3();
    const auto q = ggm::quotient_colored(g, ggm::compute_preorder(g));
    CHECK(q.graph == g);
    CHECK(q.sizes == std::vector<int>{1, 1, 1});
  }
  SECTION("4-cycle") {
    const Graph g = fixtures::c4();
    const auto q = ggm::quotient_colored(g, ggm::compute_preorder(g));
    CHECK(q.graph == g);
    CHECK(q.sizes == std::vector<int>{1, 1, 1, 1});
  }
  SECTION("diamond") {
    const Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
    const auto q = ggm::quotient_colored(g, ggm::compute_preorder(g));
    CHECK(q.sizes == std::vector<int>{2, 1, 1});
    CHECK(q.graph.size() == 2);
  }
}

TEST_CASE("edge colours") {
  using ggm::EdgeColor;
  const auto col = [](const Graph& g) { return ggm::color_edges(g, ggm::compute_preorder(g)); };
  CHECK(col(Graph::complete(4)).count(EdgeColor::red) == 6);
  const auto bull = col(fixtures::bull());
  CHECK(bull.with_color(EdgeColor::blue) == std::vector<ggm::Edge>{{0, 1}});
  CHECK(bull.with_color(EdgeColor::green) == std::vector<ggm::Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 4}});
  CHECK(col(fixtures::c4()).count(EdgeColor::blue) == 4);
}

TEST_CASE("preorder matches the neighbourhood-inclusion oracle on all graphs up to 5 vertices") {
  for (const auto& g : fixtures::all_graphs_up_to(5)) {
    const auto p = ggm::compute_preorder(g);
    const auto a = oracle::adjacency(g);
    for (int i = 0; i < g.order(); ++i) {
      REQUIRE(p.down_set(i) == oracle::down_set(a, i));
      for (int j = 0; j < g.order(); ++j) REQUIRE(p.equivalent(i, j) == (p.leq(i, j) && p.leq(j, i)));
    }
  }
}

TEST_CASE("structural laws on all graphs up to 6 vertices") {
  for (const auto& g : fixtures::all_graphs_up_to(6)) {
    const auto p = ggm::compute_preorder(g);
    const auto s = ggm::poset_of(p);
    const auto cliques = ggm::maximal_cliques(g);
    const int m = g.order();
    for (int i = 0; i < m; ++i) {
      // down sets are cliques and nested
      REQUIRE(ggm::is_clique(g, p.down[static_cast<std::size_t>(i)]));
      for (int j : p.down_set(i)) REQUIRE(ggm::is_subset(p.down[static_cast<std::size_t>(j)], p.down[static_cast<std::size_t>(i)]));
      // j ≼ i iff every maximal clique containing i contains j
      for (int j = 0; j < m; ++j) {
        bool all = true;
        for (const auto& c : cliques)
          if (std::count(c.begin(), c.end(), i) && !std::count(c.begin(), c.end(), j)) all = false;
        REQUIRE(p.leq(j, i) == all);
      }
    }
    REQUIRE(ggm::reflexive_transitive_closure(s.size, s.hasse) == s.below);
    // antisymmetric on classes
    for (int a = 0; a < s.size; ++a)
      for (int b = 0; b < s.size; ++b)
        if (a != b) REQUIRE_FALSE((s.leq(a, b) && s.leq(b, a)));
    // linear extension respects the order
    const auto ext = ggm::linear_extension(s);
    for (std::size_t x = 0; x < ext.size(); ++x)
      for (std::size_t y = x + 1; y < ext.size(); ++y) REQUIRE_FALSE(s.leq(ext[y], ext[x]));
    // quotient sizes sum to m
    const auto q = ggm::quotient_colored(g, p);
    int total = 0;
    for (int c : q.sizes) total += c;
    REQUIRE(total == m);
  }
}

TEST_CASE("preorder is invariant under relabeling") {
  ggm::Rng rng(11);
  for (const auto& g : fixtures::all_graphs(5)) {
    std::vector<int> perm{0, 1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto p = ggm::compute_preorder(g);
    const auto r = ggm::compute_preorder(g.relabel(perm));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) REQUIRE(p.leq(i, j) == r.leq(perm[i], perm[j]));
  }
}
