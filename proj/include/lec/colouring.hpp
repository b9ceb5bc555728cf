#pragma once

#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lec/graph.hpp"

namespace lec {

using ColourSet = std::set<Colour>;

/// Sentinel for an uncoloured slot; never a legal colour.
inline constexpr Colour kNoColour = std::numeric_limits<Colour>::min();

class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Edge id -> allowed colours. May cover a subset of a graph's edges (the
/// residual lists only cover uncoloured edges).
class ListAssignment {
 public:
  ListAssignment() = default;

  static ListAssignment uniform(const Graph& g, const ColourSet& palette);
  static ListAssignment range(const Graph& g, Colour lo, Colour hi);

  void set(EdgeId e, ColourSet colours) { lists_[e] = std::move(colours); }
  const ColourSet& at(EdgeId e) const;
  ColourSet& at(EdgeId e);
  bool contains(EdgeId e) const { return lists_.count(e) != 0; }
  int size_of(EdgeId e) const { return static_cast<int>(at(e).size()); }
  std::size_t size() const { return lists_.size(); }
  bool covers(const Graph& g) const;
  int min_size() const;

  auto begin() const { return lists_.begin(); }
  auto end() const { return lists_.end(); }

  bool operator==(const ListAssignment&) const = default;

 private:
  std::map<EdgeId, ColourSet> lists_;
};

/// Colours fixed on the subgraph H = dom(precolouring).
class Precolouring {
 public:
  Precolouring() = default;

  void set(EdgeId e, Colour c) { colours_[e] = c; }
  bool contains(EdgeId e) const { return colours_.count(e) != 0; }
  Colour at(EdgeId e) const { return colours_.at(e); }
  std::optional<Colour> find(EdgeId e) const;
  std::size_t size() const { return colours_.size(); }
  bool empty() const { return colours_.empty(); }
  std::vector<EdgeId> edges() const;
  ColourSet palette() const;

  /// deg_H(v).
  int degree_in(const Graph& g, VertexId v) const;
  /// Delta(H).
  int max_degree(const Graph& g) const;

  auto begin() const { return colours_.begin(); }
  auto end() const { return colours_.end(); }

  bool operator==(const Precolouring&) const = default;

 private:
  std::map<EdgeId, Colour> colours_;
};

/// One colour per edge id; kNoColour marks an uncoloured edge while a
/// colouring is under construction.
class FullColouring {
 public:
  FullColouring() = default;
  explicit FullColouring(int num_edges) : colours_(static_cast<std::size_t>(num_edges), kNoColour) {}
  explicit FullColouring(std::vector<Colour> colours) : colours_(std::move(colours)) {}

  Colour operator[](EdgeId e) const { return colours_.at(static_cast<std::size_t>(e)); }
  void set(EdgeId e, Colour c) { colours_.at(static_cast<std::size_t>(e)) = c; }
  bool coloured(EdgeId e) const { return (*this)[e] != kNoColour; }
  int size() const { return static_cast<int>(colours_.size()); }
  bool complete() const;
  const std::vector<Colour>& values() const { return colours_; }
  ColourSet palette() const;

  bool operator==(const FullColouring&) const = default;

 private:
  std::vector<Colour> colours_;
};

struct Params {
  int Delta = 0;
  int t = 1;
  int d = 0;

  /// t - d when 0 <= t - d <= 3, else empty.
  std::optional<int> ell() const;
  bool operator==(const Params&) const = default;
};

struct ProblemInstance {
  Graph graph;
  std::optional<RotationSystem> rotation;
  ListAssignment lists;
  Precolouring precol;
  Params params;
  std::optional<int> euler;        ///< surface Euler characteristic, when given
  std::optional<std::uint64_t> seed;

  /// Throws InstanceError: lists missing, precolouring improper or outside
  /// its list, Delta < max degree, d < Delta(H), t < 1, bad rotation.
  void validate() const;
  /// Human-readable problems; empty when valid.
  std::vector<std::string> problems() const;

  bool is_precoloured(EdgeId e) const { return precol.contains(e); }
  std::vector<EdgeId> uncoloured_edges() const;

  /// |L(e)| >= Delta + t for every edge.
  bool lists_meet_bound() const;
  /// The degree/list hypotheses under which an extension is guaranteed for
  /// planar graphs: d <= t - 4, or t - 3 <= d <= t with Delta above the
  /// per-gap threshold; lists of size >= Delta + t.
  bool meets_extension_hypotheses() const;
};

/// Minimum Delta for the guarantee at gap t - d in {0,1,2,3}: 16+d, 9+d, 8+d, 7+d.
int delta_threshold(int t, int d);

enum class ViolationKind { Uncoloured, NotInList, Conflict, PrecolourChanged };

struct Violation {
  ViolationKind kind;
  EdgeId edge = kNoEdge;
  EdgeId other = kNoEdge;  ///< second edge for Conflict
  Colour colour = kNoColour;
  std::string describe() const;
};

struct Verdict {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
};

/// Checks col is complete, proper, within lists, and agrees with the
/// precolouring. Every violation is listed.
Verdict verify_colouring(const ProblemInstance& instance, const FullColouring& col);

/// For each uncoloured edge e, L(e) minus colours on precoloured edges incident to e.
ListAssignment residual_lists(const ProblemInstance& instance);

/// For each edge of `j_edges`, L(e) minus colours already placed by
/// `partial` on edges adjacent to e (edges of J are uncoloured in `partial`).
ListAssignment residual_lists_for_subgraph(const ProblemInstance& instance, const FullColouring& partial,
                                           std::span<const EdgeId> j_edges);

/// Colours on edges adjacent to `e` under `col` (uncoloured neighbours skipped).
ColourSet colours_seen(const Graph& g, const FullColouring& col, EdgeId e);

/// Colouring holding only the precoloured edges.
FullColouring colouring_from_precolouring(const ProblemInstance& instance);

/// Deletes the listed uncoloured edges; edge ids are renumbered densely and
/// `kept` maps new id -> old id.
struct SubInstance {
  ProblemInstance instance;
  std::vector<EdgeId> kept;
};
SubInstance delete_edges(const ProblemInstance& instance, std::span<const EdgeId> edges);

/// Instance-level form of split_precoloured_edges: both pendants inherit the
/// list and colour of the edge they replace.
struct SplitInstance {
  ProblemInstance instance;
  SplitGraph split;
};
SplitInstance split_instance(const ProblemInstance& instance);
/// Maps a colouring of the split instance back onto the original edges.
FullColouring pull_back(const FullColouring& col, const SplitGraph& split);

}  // namespace lec
