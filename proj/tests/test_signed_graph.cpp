#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "sg/signed_graph.hpp"

using namespace sg;

TEST_CASE("construction normalizes and validates") {
  SignedGraph g(4, {{2, 0, Sign::negative}, {1, 2, Sign::positive}});
  CHECK(g.order() == 4);
  CHECK(g.edges()[0].u == 0);
  CHECK(g.edges()[0].v == 2);
  CHECK(g.edge_sign(0, 2) == Sign::negative);
  CHECK(g.edge_sign(2, 0) == Sign::negative);
  CHECK(!g.has_edge(0, 1));
  CHECK(g.degree(2) == 2);

  CHECK_THROWS_AS(SignedGraph(2, {}), InputError);
  CHECK_THROWS_AS(SignedGraph(4, {{1, 1, Sign::positive}}), InputError);
  CHECK_THROWS_AS(SignedGraph(4, {{0, 4, Sign::positive}}), InputError);
  CHECK_THROWS_AS(SignedGraph(4, {{0, 1, Sign::positive},
                                  {1, 0, Sign::negative}}),
                  InputError);
}

TEST_CASE("connectivity helpers") {
  // One negative edge leaves a spanning positive path.
  auto g = sgtest::ring_graph(5, {{0, 1}});
  CHECK(g.connected());
  CHECK(g.has_negative_edge());
  CHECK(g.positive_connected());
  CHECK(positive_components(g).size() == 1);

  // Two negative edges split the positive subgraph in two.
  auto h = sgtest::ring_graph(5, {{0, 1}, {2, 3}});
  CHECK(h.connected());
  CHECK(!h.positive_connected());
  auto comps = positive_components(h);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].front() == 0);
}

TEST_CASE("file round trip and parse errors") {
  auto g = sgtest::complete_graph(4, {{0, 3}, {1, 2}});
  std::ostringstream buf;
  write_graph(g, buf);
  std::istringstream in(buf.str());
  auto h = read_graph(in);
  CHECK(h.order() == 4);
  CHECK(h.edges() == g.edges());

  std::istringstream bad1("3 1\n0 1 *\n");
  CHECK_THROWS_WITH_AS(read_graph(bad1), doctest::Contains("line 2"),
                       InputError);
  std::istringstream bad2("3\n");
  CHECK_THROWS_AS(read_graph(bad2), InputError);
  std::istringstream bad3("3 2\n0 1 +\n");
  CHECK_THROWS_AS(read_graph(bad3), InputError);
  std::istringstream comments("# header\n3 1\n# edge\n1 2 -\n");
  CHECK(read_graph(comments).edge_sign(1, 2) == Sign::negative);
}

TEST_CASE("strong balance on hand-built graphs") {
  // Two positive triangles, all cross edges negative: strongly balanced.
  std::vector<Edge> edges;
  for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}})
    edges.push_back({u, v, Sign::positive});
  for (int u : {0, 1, 2})
    for (int v : {3, 4, 5}) edges.push_back({u, v, Sign::negative});
  SignedGraph g(6, edges);
  auto sb = check_strong_balance(g);
  REQUIRE(sb.partition.has_value());
  CHECK((*sb.partition)[0] == std::vector<int>{0, 1, 2});
  CHECK((*sb.partition)[1] == std::vector<int>{3, 4, 5});
  auto wb = check_weak_balance(g);
  CHECK(wb.partition.has_value());

  // Flip one cross edge positive: a cycle picks up an odd negative count.
  edges[6].sign = Sign::positive;  // (0,3)
  SignedGraph h(6, edges);
  auto sb2 = check_strong_balance(h);
  CHECK(!sb2.partition.has_value());
  CHECK(sgtest::negative_edge_count(h, sb2.witness_cycle) % 2 == 1);
}

TEST_CASE("weak balance distinguishes three groups") {
  // K6 in three groups of two: weakly but not strongly balanced.
  std::vector<std::pair<int, int>> neg;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (u / 2 != v / 2) neg.push_back({u, v});
  auto g = sgtest::complete_graph(6, neg);
  CHECK(!check_strong_balance(g).partition.has_value());
  auto wb = check_weak_balance(g);
  REQUIRE(wb.partition.has_value());
  CHECK(wb.partition->size() == 3);

  // A single negative edge inside a positive triangle breaks weak balance.
  auto h = sgtest::complete_graph(3, {{0, 1}});
  auto wb2 = check_weak_balance(h);
  CHECK(!wb2.partition.has_value());
  CHECK(sgtest::negative_edge_count(h, wb2.witness_cycle) == 1);
}

TEST_CASE("balance agrees with the cycle oracle on random n=6 graphs") {
  RngStream rng(99);
  int tested = 0;
  while (tested < 150) {
    std::vector<Edge> edges;
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v) {
        double r = rng.next_double();
        if (r < 0.45)
          edges.push_back({u, v, Sign::positive});
        else if (r < 0.7)
          edges.push_back({u, v, Sign::negative});
      }
    SignedGraph g(6, edges);
    if (!g.connected()) continue;
    ++tested;
    CHECK(check_strong_balance(g).partition.has_value() ==
          sgtest::strong_balance_oracle(g));
    CHECK(check_weak_balance(g).partition.has_value() ==
          sgtest::weak_balance_oracle(g));
  }
}

TEST_CASE("perfect matching agrees with the pairing oracle") {
  RngStream rng(7);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 4 + 2 * rng.next_index(3);  // 4, 6, 8
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        double r = rng.next_double();
        if (r < 0.35)
          edges.push_back({u, v, Sign::positive});
        else if (r < 0.5)
          edges.push_back({u, v, Sign::negative});
      }
    SignedGraph g(n, edges);
    auto m = find_perfect_matching(g, true);
    CHECK(m.has_value() == sgtest::matching_oracle(g, true));
    if (m) {
      std::vector<char> seen(n, 0);
      for (auto [u, v] : *m) {
        CHECK(g.edge_sign(u, v) == Sign::positive);
        CHECK(!seen[u]);
        CHECK(!seen[v]);
        seen[u] = seen[v] = 1;
      }
    }
  }
  CHECK(!find_perfect_matching(sgtest::ring_graph(5), false).has_value());
}
