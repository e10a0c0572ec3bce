#include "doctest.h"
#include "pathbetti/errors.hpp"
#include "pathbetti/graph.hpp"

using namespace pathbetti;

namespace {

const Graph kExample = graph_from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {3, 4}});

}  // namespace

TEST_CASE("standard graphs follow the order/size convention") {
  const Graph l4 = standard_graph(GraphFamily::Line, 4);
  CHECK(l4.order() == 4);
  CHECK(l4.size() == 3);

  const Graph c4 = standard_graph(GraphFamily::Cycle, 4);
  CHECK(c4.order() == 4);
  CHECK(c4.size() == 4);
  CHECK(c4.adjacent(4, 1));

  const Graph s4 = standard_graph(GraphFamily::Star, 4);
  CHECK(s4.order() == 5);
  CHECK(s4.size() == 4);
  CHECK(s4.degree(1) == 4);

  CHECK_THROWS_AS(standard_graph(GraphFamily::Cycle, 2), InputError);
  CHECK_THROWS_AS(standard_graph(GraphFamily::Line, 0), InputError);
  CHECK_THROWS_AS(standard_graph(GraphFamily::Star, 0), InputError);
}

TEST_CASE("graph_from_edges normalises and validates") {
  CHECK(kExample.size() == 4);
  const Graph g = graph_from_edges(3, {{2, 1}, {1, 2}, {3, 2}});
  CHECK(g.edges() == std::vector<Edge>{{1, 2}, {2, 3}});
  CHECK_THROWS_WITH_AS(graph_from_edges(3, {{1, 1}}), doctest::Contains("[1,1]"), InputError);
  CHECK_THROWS_WITH_AS(graph_from_edges(3, {{1, 4}}), doctest::Contains("[1,4]"), InputError);
  const Graph empty = graph_from_edges(2, {});
  CHECK(empty.order() == 2);
  CHECK(empty.size() == 0);
}

TEST_CASE("graph JSON") {
  const Graph g = graph_from_json(R"({"n": 4, "edges": [[3,4],[1,2],[1,3],[1,4]]})");
  CHECK(g == kExample);
  CHECK(graph_from_json(graph_to_json(g)) == g);
  CHECK(graph_to_json(g) == R"({"n":4,"edges":[[1,2],[1,3],[1,4],[3,4]]})");
  CHECK_THROWS_AS(graph_from_json("{\"edges\": []}"), InputError);
  CHECK_THROWS_AS(graph_from_json("{\"n\": 2, \"edges\": [[1]]}"), InputError);
  CHECK_THROWS_AS(graph_from_json("not json"), InputError);
}

TEST_CASE("induced_subgraph keeps labels") {
  const Graph l5 = standard_graph(GraphFamily::Line, 5);
  const Graph h = induced_subgraph(l5, {1, 2, 4, 5});
  CHECK(h.vertices() == VertexSet{1, 2, 4, 5});
  CHECK(h.edges() == std::vector<Edge>{{1, 2}, {4, 5}});
  CHECK(line_decomposition(h) == std::vector<int>{2, 2});

  const Graph c = induced_subgraph(standard_graph(GraphFamily::Cycle, 4), {1, 2, 3});
  CHECK(c.edges() == std::vector<Edge>{{1, 2}, {2, 3}});
  CHECK(line_decomposition(c) == std::vector<int>{3});

  CHECK(induced_subgraph(kExample, {}).order() == 0);
}

TEST_CASE("enumerate_t_paths") {
  CHECK(enumerate_t_paths(kExample, 3) ==
        std::vector<VertexSet>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});
  CHECK(enumerate_t_paths(kExample, 4) == std::vector<VertexSet>{{1, 2, 3, 4}});
  CHECK(enumerate_t_paths(kExample, 2).size() == 4);
  CHECK(enumerate_t_paths(kExample, 1).size() == 4);
  CHECK(enumerate_t_paths(standard_graph(GraphFamily::Line, 3), 5).empty());
  CHECK(enumerate_t_paths(standard_graph(GraphFamily::Star, 3), 3) ==
        std::vector<VertexSet>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});
  CHECK_THROWS_AS(enumerate_t_paths(kExample, 0), InputError);
}

TEST_CASE("property: path counts and supports") {
  for (int n = 1; n <= 9; ++n) {
    const Graph l = standard_graph(GraphFamily::Line, n);
    for (int t = 1; t <= 10; ++t) {
      CHECK(enumerate_t_paths(l, t).size() == static_cast<std::size_t>(std::max(0, n - t + 1)));
    }
    const auto edges = enumerate_t_paths(l, 2);
    REQUIRE(edges.size() == l.edges().size());
    for (std::size_t k = 0; k < edges.size(); ++k) {
      CHECK(edges[k] == VertexSet{l.edges()[k].first, l.edges()[k].second});
    }
  }
  // Each support spans a connected induced subgraph on exactly t vertices.
  for (int t = 1; t <= 4; ++t) {
    for (const auto& s : enumerate_t_paths(standard_graph(GraphFamily::Star, 4), t)) {
      CHECK(s.size() == static_cast<std::size_t>(t));
      CHECK(connected_components(induced_subgraph(standard_graph(GraphFamily::Star, 4), s))
                .size() == 1);
    }
  }
  // Every induced subgraph of a line is a disjoint union of lines.
  const Graph l8 = standard_graph(GraphFamily::Line, 8);
  for (std::uint32_t mask = 0; mask < 256; ++mask) {
    std::vector<Vertex> w;
    for (int b = 0; b < 8; ++b) {
      if (mask >> b & 1) w.push_back(b + 1);
    }
    CHECK(line_decomposition(induced_subgraph(l8, VertexSet(w))).has_value());
  }
}

TEST_CASE("components and isolated vertices") {
  const Graph h = induced_subgraph(standard_graph(GraphFamily::Line, 5), {1, 3, 5});
  CHECK(connected_components(h).size() == 3);
  CHECK(has_isolated_vertex(h));
  const Graph l4 = standard_graph(GraphFamily::Line, 4);
  CHECK(connected_components(l4).size() == 1);
  CHECK_FALSE(has_isolated_vertex(l4));
  const Graph none = graph_from_edges(0, {});
  CHECK(connected_components(none).empty());
  CHECK_FALSE(has_isolated_vertex(none));
}

TEST_CASE("line_decomposition") {
  const Graph l7 = standard_graph(GraphFamily::Line, 7);
  CHECK(line_decomposition(induced_subgraph(l7, {1, 2, 3, 5, 6})) == std::vector<int>{3, 2});
  CHECK_FALSE(line_decomposition(standard_graph(GraphFamily::Cycle, 4)).has_value());
  CHECK_FALSE(line_decomposition(standard_graph(GraphFamily::Star, 3)).has_value());
  CHECK(line_decomposition(standard_graph(GraphFamily::Star, 2)) == std::vector<int>{3});
}
