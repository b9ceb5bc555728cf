#pragma once

#include <cstdint>

#include "lec/colouring.hpp"

namespace lec {

/// Star K_{1,Delta} with one edge coloured Delta; every leaf gets Delta-1
/// pendant edges coloured 1..Delta-1. Lists are {1..Delta+t}, d = Delta.
ProblemInstance gen_fig1(int Delta, int t = 1);

/// Uncoloured star K_{1,Delta}; every leaf gets d pendant edges coloured
/// 1..d. Star edges come first, then pendants leaf by leaf.
ProblemInstance gen_fig2(int Delta, int d, int t);

enum class ListMode {
  Uniform,  ///< every list is {1..Delta+t}
  Random,   ///< Delta+t colours drawn per edge from {1..Delta+t+slack}
};

struct RandomInstanceOptions {
  std::uint64_t seed = 0;
  int n = 8;
  int Delta = 5;
  int t = 2;
  int d = 1;
  ListMode lists = ListMode::Uniform;
  int slack = 0;
  bool adversarial = false;  ///< allow d > t
  int keep_percent = 100;    ///< chance an edge of the triangulation survives
  int h_percent = 50;        ///< chance an edge is offered to H
};

/// Random stacked triangulation, thinned to maximum degree <= Delta, with an
/// embedding. H is grown greedily with deg_H <= d and coloured from the
/// lists.
ProblemInstance gen_random_planar_instance(const RandomInstanceOptions& options);
ProblemInstance gen_random_planar_instance(std::uint64_t seed, int n, int Delta, int t, int d);

/// Connected embedded planar graph: a stacked triangulation with random
/// edges removed while connectivity holds.
struct EmbeddedGraph {
  Graph graph;
  RotationSystem rotation;
};
EmbeddedGraph gen_random_planar_graph(std::uint64_t seed, int n, int drop_percent);

/// Erdos-Renyi style simple graph.
Graph gen_random_graph(std::uint64_t seed, int n, int edge_percent);

struct RandomBipartiteOptions {
  std::uint64_t seed = 0;
  int nx = 6;
  int ny = 6;
  int edge_percent = 50;
  int t = 1;
  int d = 1;
  ListMode lists = ListMode::Uniform;
  int slack = 0;
  int h_percent = 40;
};

/// Bipartite instance (X = 0..nx-1) with Delta the actual maximum degree
/// and H grown as in gen_random_planar_instance.
ProblemInstance gen_random_bipartite_instance(const RandomBipartiteOptions& options);

/// Per-edge lists of size exactly max{deg(u), deg(v)} drawn from
/// {1..Delta(g)+extra}.
ListAssignment gen_tight_lists(const Graph& g, std::uint64_t seed, int extra);

struct HubOptions {
  std::uint64_t seed = 0;
  int Delta = 18;
  int t = 1;
  int poles = 3;  ///< 2, 3 (a triangle of poles, Delta even) or an even number in a cycle
  ListMode lists = ListMode::Uniform;
  int slack = 0;
};

/// Poles of degree Delta joined through rim vertices, each rim carrying t
/// precoloured leaves (d = t). No edge has a small degree sum, so greedy
/// deferral never fires on the rim and the interface between rims and poles
/// is left to the bad-subgraph step. With three poles the poles also form
/// a triangle, so the uncoloured graph is not bipartite.
ProblemInstance gen_hub_instance(const HubOptions& options);

/// Random planar G - E(H) with extra precoloured edges added until G is not
/// planar. No rotation system is attached.
ProblemInstance gen_nonplanar_h_instance(std::uint64_t seed, int n, int Delta, int t, int d);

}  // namespace lec
