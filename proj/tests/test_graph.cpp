#include <doctest.h>

#include "zs/generators.hpp"
#include "zs/graph.hpp"

using namespace zs;

TEST_CASE("cycle basics") {
  auto g = cycle(9);
  CHECK(g.order() == 9);
  CHECK(g.size() == 9);
  CHECK(g.diameter() == 4);
  CHECK(g.distance(0, 5) == 4);
  auto rep = validate(g);
  CHECK(rep.connected);
  CHECK_FALSE(rep.bipartite);
  CHECK(rep.regular_degree == 2);
  CHECK(rep.girth == 9);
}

TEST_CASE("hypercube labels and metric agree with BFS") {
  auto g = hypercube(4);
  CHECK(g.order() == 16);
  CHECK(g.size() == 32);
  CHECK(g.label(5) == "0101");
  auto d = allPairsDistances(g.adjacency());
  for (Vertex u = 0; u < 16; ++u)
    for (Vertex v = 0; v < 16; ++v) CHECK(g.distance(u, v) == d(u, v));
  auto rep = validate(g);
  CHECK(rep.bipartite);
  CHECK(rep.girth == 4);
}

TEST_CASE("torus and grid closed forms match BFS") {
  for (std::size_t n : {2u, 3u, 5u, 6u}) {
    auto t = torus(n);
    auto d = allPairsDistances(t.adjacency());
    for (Vertex u = 0; u < t.order(); ++u)
      for (Vertex v = 0; v < t.order(); ++v) REQUIRE(t.distance(u, v) == d(u, v));
    auto gr = grid(n);
    auto e = allPairsDistances(gr.adjacency());
    for (Vertex u = 0; u < gr.order(); ++u)
      for (Vertex v = 0; v < gr.order(); ++v) REQUIRE(gr.distance(u, v) == e(u, v));
  }
  CHECK(torus(4).size() == 32);
  CHECK(torus(2).order() == 4);
}

TEST_CASE("large torus has no dense table") {
  auto t = torus(256);
  CHECK(t.order() == 65536);
  CHECK(t.distanceTable() == nullptr);
  CHECK(t.distance(0, 128 * 256 + 128) == 256);
  CHECK(t.diameter() == 256);
}

TEST_CASE("projective incidence graph") {
  auto g = projectiveIncidence(3);
  CHECK(g.order() == 26);
  CHECK(g.size() == 13 * 4);
  auto rep = validate(g);
  CHECK(rep.bipartite);
  CHECK(rep.regular_degree == 4);
  CHECK(rep.girth == 6);
  CHECK(g.diameter() == 3);
  CHECK_THROWS_WITH(projectiveIncidence(4),
                    "projective plane order 4 is not prime; only prime orders are supported");
}

TEST_CASE("leafy cycle") {
  auto g = leafyCycle(10);
  CHECK(g.order() == 10);
  CHECK(g.size() == 10);
  CHECK(g.degree(0) == 7);
  CHECK(validate(g).girth == 5);
}

TEST_CASE("random trees are trees and deterministic") {
  auto a = randomTree(40, 7), b = randomTree(40, 7);
  CHECK(a.size() == 39);
  CHECK(a.hash() == b.hash());
  CHECK_FALSE(validate(a).girth.has_value());
}

TEST_CASE("invalid graphs are rejected") {
  CHECK_THROWS(Graph("loop", 2, {{0, 0}, {0, 1}}));
  CHECK_THROWS(Graph("disc", 4, {{0, 1}, {2, 3}}));
  CHECK_THROWS(Graph("multi", 2, {{0, 1}, {0, 1}}));
  CHECK_THROWS(Graph("range", 2, {{0, 2}}));
}

TEST_CASE("json round trip preserves hash") {
  auto g = projectiveIncidence(2);
  auto h = Graph::fromJson(g.toJson());
  CHECK(h.hash() == g.hash());
  CHECK(h.family() == g.family());
  auto t = Graph::fromJson(torus(5).toJson());
  CHECK(t.metric() == Metric::Torus);
}

TEST_CASE("cartesian product of two cycles is the torus") {
  auto p = cartesianProduct(cycle(4), cycle(4));
  CHECK(p.size() == torus(4).size());
  CHECK(validate(p).regular_degree == 4);
}
