#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lec/colouring.hpp"
#include "lec/exact.hpp"

namespace lec {

enum class Side : std::uint8_t { X, Y };

struct Bipartition {
  std::vector<Side> side;  ///< per vertex

  Side operator[](VertexId v) const { return side.at(static_cast<std::size_t>(v)); }
  /// Every edge has one endpoint per side.
  bool separates(const Multigraph& g) const;
};

/// Two-colouring by BFS; isolated vertices go to X. Empty when g has an odd cycle.
std::optional<Bipartition> find_bipartition(const Multigraph& g);
std::optional<Bipartition> find_bipartition(const Graph& g);

class BipartiteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A list is shorter than max{deg(x), deg(y)} at `witness`.
class PreconditionError : public BipartiteError {
 public:
  PreconditionError(const std::string& what, EdgeId witness) : BipartiteError(what), witness(witness) {}
  EdgeId witness;
};

/// Proper edge colouring with colours 1..Delta(g) by alternating-path swaps.
std::vector<Colour> konig_edge_colour(const Multigraph& g, const Bipartition& bip);
FullColouring konig_edge_colour(const Graph& g, const Bipartition& bip);

/// Strict per-vertex order on incident edges; rank 0 is the most preferred.
/// rank[e] = {rank of e at edges[e].u, rank of e at edges[e].v}.
struct PriorityScheme {
  std::vector<std::array<int, 2>> rank;

  /// From an auxiliary proper colouring: X vertices prefer higher colours,
  /// Y vertices lower ones. `swap_sides` exchanges the roles.
  static PriorityScheme from_colouring(const Multigraph& g, const Bipartition& bip, std::span<const Colour> aux,
                                       bool swap_sides = false);
  int rank_at(const Multigraph& g, EdgeId e, VertexId v) const;
};

/// Stable matching on `candidates` (local edge ids), X side proposing, ties
/// broken by lowest edge id. Every candidate outside the result shares an
/// endpoint with a chosen edge that endpoint prefers.
std::vector<EdgeId> kernel_round(const Multigraph& g, const Bipartition& bip, const PriorityScheme& scheme,
                                 std::span<const EdgeId> candidates);

enum class BipartiteRoute { Kernel, Fallback };

struct BipartiteOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::vector<Colour> colours;  ///< per local edge when Found
  BipartiteRoute route = BipartiteRoute::Kernel;
  int kernel_attempts = 0;
  std::uint64_t search_nodes = 0;
};

struct BipartiteOptions {
  std::uint64_t node_budget = 10'000'000;
  /// Reject lists shorter than max{deg(x), deg(y)} with PreconditionError.
  bool require_degree_bound = true;
};

/// Colour-by-colour kernel method, with exact search as fallback when a
/// round leaves an edge without colours. Throws PreconditionError when
/// require_degree_bound and a list is too short; throws BipartiteError when
/// the lists meet the bound but no colouring is found.
BipartiteOutcome list_edge_colour_bipartite(const Multigraph& g, const Bipartition& bip,
                                            std::span<const ColourSet> lists, const BipartiteOptions& options = {});
FullColouring list_edge_colour_bipartite(const Graph& g, const Bipartition& bip, const ListAssignment& lists);

/// Colours G - E(H) from the residual lists of a bipartite instance. Throws
/// PreconditionError when some residual list is shorter than
/// max{deg(x), deg(y)} in G - E(H), which t >= d and |L(e)| >= Delta + t
/// rule out.
FullColouring extend_bipartite(const ProblemInstance& instance, const Bipartition& bip);
FullColouring extend_bipartite(const ProblemInstance& instance);

}  // namespace lec
