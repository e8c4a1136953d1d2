#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "rgl/graph.hpp"
#include "rgl/random_models.hpp"

using namespace rgl;

namespace {

// the worked 8-vertex example, 0-indexed
Graph figure_graph() {
  const std::vector<Edge> edges = {{0, 2}, {2, 7}, {0, 7}, {1, 3}, {3, 6},
                                   {1, 6}, {3, 5}, {4, 5}, {1, 5}};
  return Graph::from_edges(8, edges);
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

}  // namespace

TEST_CASE("graph construction rejects loops, duplicates and bad indices") {
  Graph g(4);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(1, 0));
}

TEST_CASE("edge count equals half the degree sum") {
  const Graph g = gnm(30, 60, 99);
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
  CHECK(degree_sum == 2 * g.edge_count());
}

TEST_CASE("external neighborhood") {
  const Graph g = figure_graph();
  SUBCASE("single vertex from the worked example") {
    CHECK(external_neighborhood(g, VertexSet{0}) == VertexSet{2, 7});
  }
  SUBCASE("empty set") {
    CHECK(external_neighborhood(g, VertexSet{}).empty());
  }
  SUBCASE("out of range input") {
    CHECK_THROWS_AS(external_neighborhood(g, VertexSet{9}), std::out_of_range);
  }
  SUBCASE("random triples agree with the membership-scan oracle") {
    const Graph h = gnp(10, 0.4, 2024);
    for (Vertex a = 0; a < 8; ++a) {
      const VertexSet u{a, a + 1, a + 2};
      const auto got = external_neighborhood(h, u);
      CHECK(got == oracle::external_neighborhood(h, u));
      for (Vertex x : got) {
        CHECK(std::find(u.begin(), u.end(), x) == u.end());
      }
    }
  }
}

TEST_CASE("edges between disjoint sets") {
  const Graph g = figure_graph();
  CHECK(edges_between(g, VertexSet{1, 3}, VertexSet{5, 6}) == 4);
  CHECK(edges_between(g, VertexSet{}, VertexSet{1, 2}) == 0);
  CHECK_THROWS_AS(edges_between(g, VertexSet{1, 2}, VertexSet{2, 3}),
                  std::invalid_argument);
  const Graph k6 = complete_graph(6);
  CHECK(edges_between(k6, VertexSet{0, 1}, VertexSet{2, 3, 4}) == 6);
  SUBCASE("symmetry") {
    const Graph h = gnp(14, 0.3, 5);
    const VertexSet u{0, 3, 5, 9};
    const VertexSet w{1, 2, 8};
    CHECK(edges_between(h, u, w) == edges_between(h, w, u));
  }
}

TEST_CASE("edges within") {
  const Graph g = figure_graph();
  CHECK(edges_within(g, VertexSet{0, 2, 7}) == 3);  // the triangle
  CHECK(edges_within(g, VertexSet{4}) == 0);
  CHECK(edges_within(g, VertexSet{}) == 0);
  SUBCASE("random sets agree with the pairwise oracle") {
    const Graph h = gnp(12, 0.35, 77);
    const VertexSet u{0, 2, 3, 7, 8, 11};
    CHECK(edges_within(h, u) == oracle::edges_within(h, u));
  }
}

TEST_CASE("edge partition identity over random cuts") {
  const Graph g = gnp(25, 0.2, 31);
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    VertexSet u, rest;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      (rng.next_unit() < 0.5 ? u : rest).push_back(v);
    }
    CHECK(edges_within(g, u) + edges_within(g, rest) + edges_between(g, u, rest) ==
          g.edge_count());
  }
}

TEST_CASE("connected components") {
  SUBCASE("worked example splits into the triangle and the rest") {
    const auto comps = connected_components(figure_graph());
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{0, 2, 7});
    CHECK(comps[1] == VertexSet{1, 3, 4, 5, 6});
  }
  SUBCASE("edgeless graph: all singletons") {
    CHECK(connected_components(Graph(5)).size() == 5);
  }
  SUBCASE("random graph matches the union-find oracle") {
    const Graph g = gnp(50, 0.05, 123);
    CHECK(connected_components(g) == oracle::components(g));
  }
}

TEST_CASE("digraph basics") {
  DiGraph g(3);
  g.add_arc(0, 1);
  g.add_arc(1, 0);
  CHECK(g.has_arc(0, 1));
  CHECK(g.has_arc(1, 0));
  CHECK_THROWS_AS(g.add_arc(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_arc(1, 1), std::invalid_argument);
  CHECK(g.out_neighbors(0) == VertexSet{1});
  CHECK(g.in_neighbors(0) == VertexSet{1});
}

TEST_CASE("path and cycle validation") {
  const Graph g = path_graph(5);
  CHECK(is_path_in(g, Path{{0, 1, 2, 3, 4}}));
  CHECK_FALSE(is_path_in(g, Path{{0, 2}}));
  CHECK_FALSE(is_path_in(g, Path{{0, 1, 0}}));
  Graph c4 = path_graph(4);
  c4.add_edge(0, 3);
  CHECK(is_cycle_in(c4, Cycle{{0, 1, 2, 3}}));
  CHECK(is_hamilton_cycle(c4, Cycle{{0, 1, 2, 3}}));
  CHECK_FALSE(is_cycle_in(c4, Cycle{{0, 1, 2}}));
}

TEST_CASE("edge list round trip and rejection") {
  const Graph g = gnm(12, 20, 7);
  std::stringstream buf;
  write_edge_list(buf, g);
  const Graph back = read_edge_list(buf);
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(back.edges() == g.edges());

  std::stringstream dup("3 2\n0 1\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(dup), std::invalid_argument);
  std::stringstream loop("3 1\n1 1\n");
  CHECK_THROWS_AS(read_edge_list(loop), std::invalid_argument);
  std::stringstream reversed("3 1\n2 1\n");
  CHECK_THROWS_AS(read_edge_list(reversed), std::invalid_argument);

  DiGraph d(4);
  d.add_arc(2, 1);
  d.add_arc(1, 2);
  std::stringstream dbuf;
  write_arc_list(dbuf, d);
  const DiGraph dback = read_arc_list(dbuf);
  CHECK(dback.arc_count() == 2);
  CHECK(dback.has_arc(2, 1));
  std::stringstream wrong("3 1\n0 1\n");
  CHECK_THROWS_AS(read_arc_list(wrong), std::invalid_argument);
}
