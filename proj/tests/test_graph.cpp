#include "doctest.h"

#include "fas/errors.hpp"
#include "fas/graph.hpp"

using namespace fas;

TEST_SUITE("graph") {

TEST_CASE("neighbors are sorted and adjacency is symmetric") {
  const SimpleGraph g(4, {{2, 0}, {0, 1}, {3, 0}});
  const auto n0 = neighbors(g, 0);
  CHECK(n0 == std::vector<VertexId>{1, 2, 3});
  CHECK(g.adjacent(2, 0));
  CHECK(g.adjacent(0, 2));
  CHECK_FALSE(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 99));
  CHECK(g.edges().front() == Edge{0, 1});
}

TEST_CASE("neighbors of a missing vertex is an error") {
  const SimpleGraph g = SimpleGraph::path(3);
  CHECK_THROWS_AS(g.neighbors(3), InputError);
}

TEST_CASE("malformed edge lists are rejected") {
  CHECK_THROWS_AS(SimpleGraph(3, {{1, 1}}), InputError);
  CHECK_THROWS_AS(SimpleGraph(3, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(SimpleGraph(3, {{0, 3}}), InputError);
}

TEST_CASE("max degree") {
  CHECK(max_degree(SimpleGraph(5, std::span<const Edge>{})) == 0);
  CHECK(max_degree(SimpleGraph::path(5)) == 2);
  CHECK(max_degree(SimpleGraph::complete(6)) == 5);
  CHECK(max_degree(SimpleGraph::complete_bipartite(2, 4)) == 4);
}

TEST_CASE("planarity of the Kuratowski graphs") {
  CHECK(is_planar_small(SimpleGraph::complete(4)));
  CHECK_FALSE(is_planar_small(SimpleGraph::complete(5)));
  CHECK_FALSE(is_planar_small(SimpleGraph::complete_bipartite(3, 3)));
  CHECK(is_planar_small(SimpleGraph::complete_bipartite(2, 7)));
  CHECK(is_planar_small(SimpleGraph(0, std::span<const Edge>{})));
}

TEST_CASE("subdivided K3,3 is still non-planar") {
  // K3,3 with the edge 0-3 replaced by the path 0-6-3.
  std::vector<Edge> es;
  for (VertexId a = 0; a < 3; ++a) {
    for (VertexId b = 3; b < 6; ++b) {
      if (a == 0 && b == 3) continue;
      es.push_back({a, b});
    }
  }
  es.push_back({0, 6});
  es.push_back({3, 6});
  CHECK_FALSE(is_planar_small(SimpleGraph(7, es)));
}

TEST_CASE("planarity cap is a resource limit, not a verdict") {
  CHECK_THROWS_AS(is_planar_small(SimpleGraph::path(10), 5), ResourceLimitError);
}

TEST_CASE("dot export lists every node and edge") {
  const SimpleGraph g = SimpleGraph::path(3);
  const std::vector<std::string> fills{"red", "blue", "green"};
  const std::string dot = to_dot(g, fills);
  CHECK(dot.find("fillcolor=\"blue\"") != std::string::npos);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  CHECK(dot.find("1 -- 2;") != std::string::npos);
}

}
