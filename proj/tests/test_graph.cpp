#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "nrwalk/errors.hpp"
#include "nrwalk/generators.hpp"
#include "nrwalk/graph.hpp"

using namespace nrw;

TEST_SUITE_BEGIN("graph");

TEST_CASE("from_edges rejects bad input") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), PreconditionError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), PreconditionError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 0}}), PreconditionError);
  CHECK_NOTHROW(Graph::from_edges(0, {}));
}

TEST_CASE("adjacency is sorted and symmetric") {
  const Graph g = Graph::from_edges(5, {{3, 1}, {0, 3}, {2, 0}, {4, 0}});
  CHECK(g.num_vertices() == 5);
  CHECK(g.num_edges() == 4);
  CHECK(g.neighbors(0) == std::vector<int>{2, 3, 4});
  CHECK(g.neighbors(3) == std::vector<int>{0, 1});
  CHECK(g.has_edge(1, 3));
  CHECK(g.has_edge(3, 1));
  CHECK_FALSE(g.has_edge(1, 2));
  CHECK(g.edges() == std::vector<Edge>{{0, 2}, {0, 3}, {0, 4}, {1, 3}});
}

TEST_CASE("degree statistics") {
  const Graph g = make_complete_bipartite(2, 3);
  const auto stats = degree_stats(g);
  CHECK(stats.min_degree == 2);
  CHECK(stats.max_degree == 3);
  CHECK(stats.average_degree == Rational(12, 5));
}

TEST_CASE("girth on known graphs") {
  CHECK(girth(make_cycle(3)) == 3);
  CHECK(girth(make_cycle(12)) == 12);
  CHECK(girth(make_complete(4)) == 3);
  CHECK(girth(make_complete_bipartite(2, 3)) == 4);
  CHECK(girth(make_petersen()) == 5);
  CHECK(girth(make_heawood()) == 6);
  // Forests have no cycle.
  CHECK_FALSE(girth(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}})));
  CHECK_FALSE(girth(Graph(3)));
  CHECK_FALSE(girth(Graph(0)));
}

TEST_CASE("removing a Petersen edge leaves girth 5") {
  auto edges = make_petersen().edges();
  edges.erase(std::find(edges.begin(), edges.end(), Edge{0, 1}));
  const Graph g = Graph::from_edges(10, edges);
  CHECK(girth(g) == 5);
  CHECK(girth(g) == test::girth_oracle(g));
}

TEST_CASE("girth matches the edge-deletion oracle on random graphs") {
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + trial % 9;
    const Graph g = test::random_connected_graph(n, trial % 6, 7000u + trial);
    CAPTURE(trial);
    CHECK(girth(g) == test::girth_oracle(g));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = test::random_bipartite_graph(4 + trial % 5, 3, trial % 4,
                                                 7100u + trial);
    CAPTURE(trial);
    CHECK(girth(g) == test::girth_oracle(g));
    const Graph s = test::subdivide(g);
    CHECK(girth(s) == test::girth_oracle(s));
  }
}

TEST_CASE("subdividing doubles the girth") {
  for (const auto& [name, g] : test::tightness_corpus()) {
    CAPTURE(name);
    CHECK(girth(test::subdivide(g)) == 2 * *girth(g));
  }
}

TEST_CASE("connectivity") {
  CHECK(is_connected(make_petersen()));
  CHECK(component_count(make_petersen()) == 1);
  const Graph two = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0},
                                          {3, 4}, {4, 5}, {5, 3}});
  CHECK_FALSE(is_connected(two));
  CHECK(component_count(two) == 2);
  CHECK(component_count(Graph(3)) == 3);
  CHECK(is_connected(Graph(0)));
  CHECK(is_connected(Graph(1)));
}

TEST_CASE("edge list round trip") {
  const Graph g = make_heawood();
  const Graph back = parse_edge_list(write_edge_list(g));
  CHECK(back.num_vertices() == g.num_vertices());
  CHECK(back.edges() == g.edges());
}

TEST_CASE("edge list parsing details") {
  const Graph g = parse_edge_list("# comment\n\nn 4\n0 1\n2 3\n");
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 2);
  // Without a header the vertex count is max id + 1.
  CHECK(parse_edge_list("0 5\n").num_vertices() == 6);

  CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 2\n0 5\n"), ParseError);
  // Errors carry the offending line number.
  try {
    parse_edge_list("0 1\n\n0 bad\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("3") != std::string::npos);
  }
}

TEST_SUITE_END();
