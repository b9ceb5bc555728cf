#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "lec/generators.hpp"
#include "lec/graph.hpp"
#include "support/brute.hpp"
#include "support/graphs.hpp"

using namespace lec;

TEST_CASE("graph rejects loops, parallel edges and unknown endpoints") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(1, 1), GraphError);
  CHECK_THROWS_AS(g.add_edge(1, 0), GraphError);
  CHECK_THROWS_AS(g.add_edge(0, 3), GraphError);
  CHECK_THROWS_AS(g.add_edge(-1, 2), GraphError);
  CHECK(g.num_edges() == 1);
}

TEST_CASE("adjacency agrees with the edge list") {
  const Graph g = fixtures::petersen();
  std::vector<int> deg(10, 0);
  for (const Edge& e : g.edges()) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  for (VertexId v = 0; v < 10; ++v) {
    CHECK(g.degree(v) == deg[static_cast<std::size_t>(v)]);
    for (EdgeId e : g.incident(v)) CHECK(g.edge(e).has(v));
  }
  CHECK(g.max_degree() == 3);
  CHECK(g.find_edge(0, 1).has_value());
  CHECK_FALSE(g.find_edge(0, 2).has_value());
}

TEST_CASE("triangle has two faces of length 3") {
  const Graph g = fixtures::cycle(3);
  const auto ft = faces(g, RotationSystem::from_incidence(g));
  REQUIRE(ft.faces.size() == 2);
  for (const Face& f : ft.faces) CHECK(f.length() == 3);
  CHECK(ft.planar());
}

TEST_CASE("K4 planar embedding has four triangles") {
  const Graph g = fixtures::complete(4);
  const auto rot = planar_rotation(g);
  REQUIRE(rot);
  const auto ft = faces(g, *rot);
  CHECK(ft.faces.size() == 4);
  for (const Face& f : ft.faces) {
    CHECK(f.length() == 3);
    CHECK(face_class(f, g) == 3);
  }
  REQUIRE(ft.components.size() == 1);
  CHECK(ft.components[0].characteristic() == 2);
}

TEST_CASE("tree on five vertices has one face") {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(3, 4);
  const auto ft = faces(g, RotationSystem::from_incidence(g));
  REQUIRE(ft.faces.size() == 1);
  CHECK(ft.faces[0].length() == 8);
  CHECK(ft.planar());
}

TEST_CASE("face class counts distinct major vertices") {
  const Graph s = fixtures::star(4);
  const auto fs = faces(s, RotationSystem::from_incidence(s));
  REQUIRE(fs.faces.size() == 1);
  CHECK(face_class(fs.faces[0], s) == 1);

  const Graph p = fixtures::path(3);
  const auto fp = faces(p, RotationSystem::from_incidence(p));
  REQUIRE(fp.faces.size() == 1);
  CHECK(face_class(fp.faces[0], p) == 0);
}

TEST_CASE("isolated vertex and disconnected input") {
  const auto single = faces(Graph(1), RotationSystem::from_incidence(Graph(1)));
  REQUIRE(single.faces.size() == 1);
  REQUIRE(single.faces[0].walk.size() == 1);
  CHECK(single.faces[0].walk[0].edge == kNoEdge);
  CHECK(single.planar());

  Graph two(6);
  for (VertexId base : {0, 3}) {
    two.add_edge(base, base + 1);
    two.add_edge(base + 1, base + 2);
    two.add_edge(base + 2, base);
  }
  const auto ft = faces(two, RotationSystem::from_incidence(two));
  CHECK(ft.components.size() == 2);
  CHECK(ft.faces.size() == 4);
  CHECK(ft.planar());
}

TEST_CASE("non-planar rotation is reported, not thrown") {
  for (const Graph& g : {fixtures::complete(5), fixtures::complete_bipartite(3, 3)}) {
    CHECK_FALSE(is_planar(g));
    const auto ft = faces(g, RotationSystem::from_incidence(g));
    CHECK_FALSE(ft.planar());
    CHECK_FALSE(ft.diagnostic().empty());
  }
}

TEST_CASE("rotation validation") {
  const Graph g = fixtures::cycle(4);
  RotationSystem bad({{0}, {0, 1}, {1, 2}, {2, 3}});
  CHECK_THROWS_AS(bad.validate(g), GraphError);
  CHECK_NOTHROW(RotationSystem::from_incidence(g).validate(g));
}

TEST_CASE("degree classes") {
  const auto k4 = degree_classes(fixtures::complete(4));
  CHECK(k4.count(3) == 4);
  for (int i = 0; i < 3; ++i) CHECK(k4.count(i) == 0);
  CHECK(k4.count(7) == 0);

  const auto fig2 = degree_classes(gen_fig2(4, 2, 2).graph);
  CHECK(fig2.count(4) == 1);
  CHECK(fig2.count(3) == 4);
  CHECK(fig2.count(1) == 8);
  CHECK(fig2.count_range(1, 4) == 13);

  CHECK(degree_classes(Graph()).empty());
}

TEST_CASE("split of a single edge gives two pendants on four vertices") {
  const Graph g = fixtures::path(2);
  const std::vector<EdgeId> h{0};
  const SplitGraph s = split_precoloured_edges(g, h);
  CHECK(s.graph.num_vertices() == 4);
  CHECK(s.graph.num_edges() == 2);
  CHECK(brute::components(s.graph) == 2);
  CHECK_FALSE(s.graph.edges_adjacent(s.pairs[0][0], s.pairs[0][1]));
}

TEST_CASE("split of one triangle edge keeps degrees") {
  const Graph g = fixtures::cycle(3);
  const std::vector<EdgeId> h{1};
  const SplitGraph s = split_precoloured_edges(g, h);
  CHECK(s.graph.num_vertices() == 5);
  CHECK(s.graph.num_edges() == 4);
  for (VertexId v = 0; v < 3; ++v) CHECK(s.graph.degree(v) == 2);
  CHECK(s.pair_of[1] == 0);
  CHECK(s.pair_of[0] == -1);
}

TEST_CASE("split of every precoloured edge of the second family") {
  const ProblemInstance inst = gen_fig2(4, 2, 2);
  const auto h = inst.precol.edges();
  REQUIRE(h.size() == 8);
  const SplitGraph s = split_precoloured_edges(inst.graph, h);
  CHECK(s.graph.num_edges() == 4 + 16);
  CHECK(s.graph.max_degree() == 4);
  int pendants = 0;
  for (const auto& pair : s.pairs)
    for (EdgeId e : pair) pendants += s.graph.degree(s.graph.edge(e).u) == 1 || s.graph.degree(s.graph.edge(e).v) == 1;
  CHECK(pendants == 16);
  CHECK_THROWS(split_precoloured_edges(inst.graph, std::vector<EdgeId>{99}));
}

TEST_CASE("split rotation stays planar") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ProblemInstance inst = gen_random_planar_instance(seed, 12, 6, 2, 2);
    REQUIRE(inst.rotation);
    const auto h = inst.precol.edges();
    const SplitGraph s = split_precoloured_edges(inst.graph, h);
    const RotationSystem rot = split_rotation(*inst.rotation, s);
    CHECK_NOTHROW(rot.validate(s.graph));
    CHECK(faces(s.graph, rot).planar());
  }
}

TEST_CASE("properties on generated planar graphs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 3 + static_cast<int>(seed % 25);
    const EmbeddedGraph eg = gen_random_planar_graph(seed, n, 40);
    const Graph& g = eg.graph;
    CAPTURE(seed);
    const auto ft = faces(g, eg.rotation);
    REQUIRE(ft.components.size() == 1);
    CHECK(g.num_vertices() - g.num_edges() + static_cast<int>(ft.faces.size()) == 2);

    // Edge slots: each edge appears twice across all walks.
    int slots = 0;
    for (const Face& f : ft.faces) slots += f.length();
    CHECK(slots == 2 * g.num_edges());

    // sum_m m|F_m| <= sum over major vertices of incident faces.
    std::vector<int> incident_faces(static_cast<std::size_t>(g.num_vertices()), 0);
    int lhs = 0;
    for (const Face& f : ft.faces) {
      lhs += face_class(f, g);
      for (VertexId v : f.vertices()) ++incident_faces[static_cast<std::size_t>(v)];
    }
    int rhs = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
      if (g.degree(v) >= 3) rhs += incident_faces[static_cast<std::size_t>(v)];
    CHECK(lhs <= rhs);

    // Degree classes partition V.
    const auto classes = degree_classes(g);
    std::vector<int> seen(static_cast<std::size_t>(g.num_vertices()), 0);
    for (int i = 0; i <= classes.max_degree(); ++i)
      for (VertexId v : classes.of(i)) {
        CHECK(g.degree(v) == i);
        ++seen[static_cast<std::size_t>(v)];
      }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  }
}
