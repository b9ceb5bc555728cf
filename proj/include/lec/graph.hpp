#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lec {

using VertexId = int;
using EdgeId = int;
using Colour = int;

inline constexpr EdgeId kNoEdge = -1;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  VertexId other(VertexId w) const { return w == u ? v : u; }
  bool has(VertexId w) const { return w == u || w == v; }
};

/// Simple undirected graph with dense vertex ids [0, n) and dense edge ids
/// [0, m) in insertion order. Loops and parallel edges are rejected.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);
  Graph(int num_vertices, std::span<const Edge> edges);

  VertexId add_vertex();
  EdgeId add_edge(VertexId u, VertexId v);

  int num_vertices() const { return static_cast<int>(incidence_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> incident(VertexId v) const {
    return incidence_.at(static_cast<std::size_t>(v));
  }
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }
  int max_degree() const;

  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;
  bool edges_adjacent(EdgeId a, EdgeId b) const;
  bool contains_vertex(VertexId v) const { return v >= 0 && v < num_vertices(); }

  /// Connected component label per vertex, labels dense from 0.
  std::vector<int> component_labels() const;
  int num_components() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// Per-vertex cyclic order of incident edges. Faces are the orbits of
/// (u -> v via e) |-> (v -> w via successor of e in the rotation at v).
class RotationSystem {
 public:
  RotationSystem() = default;
  explicit RotationSystem(std::vector<std::vector<EdgeId>> order) : order_(std::move(order)) {}

  /// Rotation taken from the adjacency order of the graph. Planar only for
  /// special graphs (forests, cycles, ...).
  static RotationSystem from_incidence(const Graph& g);

  std::span<const EdgeId> at(VertexId v) const { return order_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::vector<EdgeId>>& orders() const { return order_; }
  int num_vertices() const { return static_cast<int>(order_.size()); }

  /// Edge following `e` in the cyclic order at `v`.
  EdgeId successor(VertexId v, EdgeId e) const;

  /// Throws GraphError unless each vertex's cycle holds exactly its incident
  /// edges, once each.
  void validate(const Graph& g) const;

 private:
  std::vector<std::vector<EdgeId>> order_;
};

struct BoundarySlot {
  VertexId vertex = 0;
  EdgeId edge = kNoEdge;  ///< edge leaving `vertex` along the walk; kNoEdge for an isolated vertex
};

struct Face {
  int id = 0;
  int component = 0;
  std::vector<BoundarySlot> walk;

  /// Distinct boundary vertices in order of first appearance.
  std::vector<VertexId> vertices() const;
  int length() const;  ///< number of edge slots on the walk
};

struct ComponentEuler {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int characteristic() const { return vertices - edges + faces; }
};

struct FaceTraversal {
  std::vector<Face> faces;
  std::vector<ComponentEuler> components;

  /// Every component has Euler characteristic 2.
  bool planar() const;
  /// Human-readable diagnostic naming the non-planar components; empty when planar.
  std::string diagnostic() const;
};

/// Enumerates faces component by component. An isolated vertex contributes
/// one face whose walk is a single slot with edge == kNoEdge.
FaceTraversal faces(const Graph& g, const RotationSystem& rot);

/// Number of distinct vertices on the boundary of `face` with degree >= 3.
int face_class(const Face& face, const Graph& g);

/// Tries to find a planar rotation system (Boyer-Myrvold). Empty when the
/// graph is not planar.
std::optional<RotationSystem> planar_rotation(const Graph& g);
bool is_planar(const Graph& g);

class DegreeClassIndex {
 public:
  DegreeClassIndex() = default;
  explicit DegreeClassIndex(const Graph& g);
  explicit DegreeClassIndex(std::span<const int> degrees);

  std::span<const VertexId> of(int degree) const;
  int count(int degree) const { return static_cast<int>(of(degree).size()); }
  /// V_[lo, hi], empty when lo > hi.
  std::vector<VertexId> range(int lo, int hi) const;
  int count_range(int lo, int hi) const;
  int max_degree() const { return static_cast<int>(classes_.size()) - 1; }
  bool empty() const { return classes_.empty(); }

 private:
  std::vector<std::vector<VertexId>> classes_;
};

DegreeClassIndex degree_classes(const Graph& g);

/// Result of replacing each listed edge uv by pendant edges uu', vv'.
/// The u-side pendant keeps the old edge id; the v-side pendant is appended.
struct SplitGraph {
  Graph graph;
  /// For each listed edge (in the order given), {kept id, appended id}.
  std::vector<std::array<EdgeId, 2>> pairs;
  /// Old edge id -> index into `pairs`, or -1 when the edge was not split.
  std::vector<int> pair_of;
  int original_vertices = 0;
  int original_edges = 0;
};

SplitGraph split_precoloured_edges(const Graph& g, std::span<const EdgeId> h_edges);

/// Rotation for the split graph: the appended pendant takes the old edge's
/// place at v; new leaves have a one-edge rotation.
RotationSystem split_rotation(const RotationSystem& rot, const SplitGraph& split);

}  // namespace lec
