#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lec/colouring.hpp"

namespace lec {

/// Edge list with local ids; parallel edges allowed.
struct Multigraph {
  int num_vertices = 0;
  std::vector<Edge> edges;

  static Multigraph from(const Graph& g);
  /// Subgraph on `edge_ids` of g; local edge i is g's edge edge_ids[i].
  /// Vertex ids are kept.
  static Multigraph subgraph(const Graph& g, std::span<const EdgeId> edge_ids);

  int num_edges() const { return static_cast<int>(edges.size()); }
  std::vector<int> degrees() const;
  int max_degree() const;
  std::vector<std::vector<EdgeId>> incidence() const;
};

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::vector<Colour> colours;  ///< per local edge, when Found
  std::uint64_t nodes = 0;
};

/// Complete backtracking search for a proper list edge colouring of `g`
/// with colours from `lists` (one set per local edge). Picks the edge with
/// the fewest available colours first and prunes when a neighbour runs dry.
SearchResult exact_list_edge_colour(const Multigraph& g, std::span<const ColourSet> lists,
                                    std::uint64_t node_budget);

}  // namespace lec
