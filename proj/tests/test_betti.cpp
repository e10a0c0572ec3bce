#include <random>

#include "doctest.h"
#include "pathbetti/betti.hpp"
#include "pathbetti/errors.hpp"

using namespace pathbetti;

namespace {

BettiTable table_of(std::initializer_list<std::tuple<int, int, std::uint64_t>> xs) {
  BettiTable t;
  for (auto [i, j, b] : xs) t.add(i, j, b);
  return t;
}

MonomialIdeal line_ideal(int n, int t) {
  return path_ideal(standard_graph(GraphFamily::Line, n), t);
}

}  // namespace

TEST_CASE("multigraded_betti") {
  const auto star3 = path_ideal(standard_graph(GraphFamily::Star, 2), 3);
  CHECK(multigraded_betti(star3, {1, 2, 3}) == BettiVector{{1, 1}});
  CHECK(multigraded_betti(line_ideal(3, 2), {1, 2, 3}) == BettiVector{{2, 1}});
  CHECK(multigraded_betti(line_ideal(4, 2), {1, 3}).empty());
  // Not lcm-closed: {2} is no generator, so no spurious b_{1,{2}}.
  CHECK(multigraded_betti(line_ideal(4, 2), {2}).empty());
  CHECK(multigraded_betti(line_ideal(4, 2), {}) == BettiVector{{0, 1}});
}

TEST_CASE("graded_betti_table") {
  CHECK(graded_betti_table(standard_graph(GraphFamily::Line, 4), 2) ==
        table_of({{0, 0, 1}, {1, 2, 3}, {2, 3, 2}}));
  CHECK(graded_betti_table(standard_graph(GraphFamily::Star, 3), 2) ==
        table_of({{0, 0, 1}, {1, 2, 3}, {2, 3, 3}, {3, 4, 1}}));
  CHECK(graded_betti_table(standard_graph(GraphFamily::Line, 3), 5) == table_of({{0, 0, 1}}));
  // t = 1: the ideal of the variables, resolved by the Koszul complex.
  CHECK(graded_betti_table(standard_graph(GraphFamily::Line, 3), 1) ==
        table_of({{0, 0, 1}, {1, 1, 3}, {2, 2, 3}, {3, 3, 1}}));
  CHECK(graded_betti_table(standard_graph(GraphFamily::Line, 4), 2).ambient_n() == 4);
}

TEST_CASE("graded_betti_table reports the size cap") {
  OracleOptions opts;
  opts.face_cap = 8;
  CHECK_THROWS_AS(graded_betti_table(standard_graph(GraphFamily::Star, 4), 2, opts),
                  SizeLimitError);
}

TEST_CASE("BettiTable helpers") {
  BettiTable t(5);
  t.add(1, 2, 4);
  t.add(2, 5, 1);
  t.add(3, 4, 0);
  CHECK(t.at(3, 4) == 0);
  CHECK(t.entries().size() == 3);
  CHECK(t.max_degree() == 5);
  CHECK(t.max_index() == 2);
  CHECK(t.restricted_to_degrees_below(5) == table_of({{0, 0, 1}, {1, 2, 4}}));
}

TEST_CASE("top_betti_product") {
  CHECK(top_betti_product({{{2, 1}}}) == BettiVector{{2, 1}});
  CHECK(top_betti_product({{{2, 1}}, {{1, 1}}}) == BettiVector{{3, 1}});
  CHECK(top_betti_product({{{1, 1}}, {{1, 1}}, {{1, 1}}}) == BettiVector{{3, 1}});
  CHECK(top_betti_product({}) == BettiVector{{0, 1}});
  CHECK(top_betti_product({{{1, 2}, {2, 1}}, {{1, 3}}}) == BettiVector{{2, 6}, {3, 3}});
  // The L_3 + L_2 decomposition inside L_6.
  CHECK(multigraded_betti(line_ideal(6, 2), {1, 2, 3, 5, 6}) == BettiVector{{3, 1}});
}

TEST_CASE("canonical_key is exact on small graphs") {
  const Graph a = graph_from_edges(4, {{1, 2}, {2, 3}});
  const Graph b = graph_from_edges(4, {{3, 4}, {2, 4}});
  const Graph c = graph_from_edges(4, {{1, 2}, {3, 4}});
  CHECK(canonical_key(a) == canonical_key(b));
  CHECK(canonical_key(a) != canonical_key(c));
  CHECK(canonical_key(standard_graph(GraphFamily::Star, 3)) ==
        canonical_key(graph_from_edges(4, {{4, 1}, {4, 2}, {4, 3}})));
  CHECK(canonical_key(standard_graph(GraphFamily::Cycle, 6)) !=
        canonical_key(induced_subgraph(standard_graph(GraphFamily::Line, 7), {1, 2, 3, 5, 6, 7})));
}

TEST_CASE("property: memoisation and the field do not change tables") {
  std::mt19937 rng(29);
  std::bernoulli_distribution coin(0.45);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 4;
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) {
        if (coin(rng)) edges.emplace_back(u, v);
      }
    }
    const Graph g = graph_from_edges(n, edges);
    const int t = 2 + trial % 2;
    if (path_ideal(g, t).generators.size() > 12) continue;
    OracleOptions plain, memo, two;
    memo.memo = true;
    two.prime = 2;
    const auto base = graded_betti_table(g, t, plain);
    CHECK(graded_betti_table(g, t, memo) == base);
    CHECK(graded_betti_table(g, t, two) == base);
  }
}

TEST_CASE("multigraded record sums to the graded table") {
  const Graph c6 = standard_graph(GraphFamily::Cycle, 6);
  const auto rec = multigraded_record(c6, 2);
  BettiTable summed(6);
  for (const auto& [key, b] : rec) {
    if (!key.second.empty()) summed.add(key.first, static_cast<int>(key.second.size()), b);
  }
  CHECK(summed == graded_betti_table(c6, 2));
}
