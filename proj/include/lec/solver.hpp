#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lec/colouring.hpp"

namespace lec {

/// Degrees and uncoloured edges of a (possibly reduced) instance: the data
/// the bad-subgraph machinery reads.
struct ReductionView {
  std::vector<int> degree;  ///< deg_G per vertex; -1 marks a deleted vertex
  struct FreeEdge {
    EdgeId id;
    VertexId u, v;
  };
  std::vector<FreeEdge> free_edges;  ///< edges of G - E(H)
  Params params;

  static ReductionView of(const ProblemInstance& instance);
  DegreeClassIndex classes() const { return DegreeClassIndex(degree); }
};

/// Degree-class thresholds: A = V_[a0, a], B = V_[b0, Delta].
struct BadSubgraphParams {
  int a0 = 0;
  int a = 0;
  int b0 = 0;

  /// a0 >= t+1, a0 <= a, b0 > a, b0 <= Delta, a + b0 >= Delta + t + 1.
  bool valid_for(const Params& p) const;
  void validate(const Params& p) const;  ///< throws InstanceError

  /// k-th member of the family a0 = t+2, a = t+5-ell-k, b0 = Delta-3+ell+k.
  static BadSubgraphParams proof_family(const Params& p, int ell, int k);
  /// Proof family for k = 0..3-ell, or every valid (a, b0) with a0 = t+1
  /// when `wide` or ell is undefined.
  static std::vector<BadSubgraphParams> scan(const Params& p, bool wide);

  bool operator==(const BadSubgraphParams&) const = default;
};

struct BadSubgraph {
  std::vector<VertexId> vertices;  ///< sorted
  std::vector<EdgeId> edges;       ///< sorted
  bool empty() const { return vertices.empty(); }
  bool operator==(const BadSubgraph&) const = default;
};

/// Largest induced subgraph J of X (uncoloured A-B edges) with
/// deg_J(u) >= deg_G(u) - t on A and deg_J(v) >= a + deg_G(v) - (Delta+t)
/// on B, found by deleting violators until none remain.
BadSubgraph peel_bad_subgraph(const ReductionView& view, const BadSubgraphParams& bp);
BadSubgraph peel_bad_subgraph(const ProblemInstance& instance, const BadSubgraphParams& bp);
/// Same fixed point, deleting at each step the first violator in `order`
/// (a permutation of vertex ids).
BadSubgraph peel_bad_subgraph(const ReductionView& view, const BadSubgraphParams& bp, std::span<const VertexId> order);

struct PeelCountCheck {
  long long lhs = 0;  ///< (t+1-d)|A|
  long long rhs = 0;  ///< sum_{i=b0}^{Delta} (a+i-1-(Delta+t)) |V_i|
  bool strict = false;      ///< a0 > t+1, a+b0 > Delta+t+1 and A u B nonempty
  bool hypothesis = false;  ///< deg_X(u) >= deg_G(u) - d for all u in A
  bool holds() const { return strict ? lhs < rhs : lhs <= rhs; }
};

PeelCountCheck peel_count_check(const ReductionView& view, const BadSubgraphParams& bp);
PeelCountCheck peel_count_check(const ProblemInstance& instance, const BadSubgraphParams& bp);

/// Smallest colour of L(uv) not on an edge adjacent to uv in `partial`;
/// empty when every colour is taken.
std::optional<Colour> greedy_colour_edge(const ProblemInstance& instance, const FullColouring& partial, EdgeId uv);

/// Replaces v (2 <= deg(v) <= t+1, every edge precoloured) by one new leaf
/// per incident edge. Edge ids, lists and colours are kept; vertex ids above
/// v shift down by one and new leaves are appended.
ProblemInstance split_low_degree_vertex(const ProblemInstance& instance, VertexId v);

/// 3|E| + |V_[2, t+1]|.
long long reduction_measure(const Graph& g, int t);

enum class OutcomeKind { Coloured, Infeasible, HypothesisViolation, BudgetExceeded };
const char* to_string(OutcomeKind kind);

struct SolveStats {
  int greedy_edges = 0;
  int vertex_splits = 0;
  int bipartite_components = 0;
  int bad_subgraphs = 0;
  int kernel_fallbacks = 0;  ///< bipartite colourings that needed exact search
  bool exact_completion = false;  ///< no reduction applied and the remainder was searched
  std::uint64_t search_nodes = 0;
  std::vector<long long> measures;  ///< reduction measure before each reduction
};

/// The working instance at the point where no reduction applied.
struct FrozenState {
  ProblemInstance instance;
  std::vector<EdgeId> original_edge;  ///< frozen edge id -> original edge id
  std::string reason;
};

struct SolveOutcome {
  OutcomeKind kind = OutcomeKind::Infeasible;
  FullColouring colouring;  ///< complete when kind == Coloured
  std::optional<FrozenState> frozen;
  std::string detail;
  SolveStats stats;

  bool coloured() const { return kind == OutcomeKind::Coloured; }
};

struct SolveOptions {
  bool scan_wide = false;
  /// Search the remainder exactly when no reduction applies; otherwise
  /// report HypothesisViolation.
  bool exact_completion = true;
  std::uint64_t node_budget = 10'000'000;
};

/// Reduction loop: greedy deferral of low-degree-sum edges, splitting of
/// fully precoloured low-degree vertices, bipartite components of G - E(H),
/// bad-subgraph deferral. Coloured results are verified before returning.
SolveOutcome solve(const ProblemInstance& instance, const SolveOptions& options = {});

/// Exhaustive search over the uncoloured edges; independent of solve.
SolveOutcome oracle_solve(const ProblemInstance& instance, std::uint64_t node_budget = 10'000'000);

class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lec
