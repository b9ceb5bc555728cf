#include <algorithm>
#include <numeric>
#include <sstream>
#include <variant>

#include "lec/bipartite.hpp"
#include "lec/exact.hpp"
#include "lec/solver.hpp"

namespace lec {

const char* to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::Coloured: return "Coloured";
    case OutcomeKind::Infeasible: return "Infeasible";
    case OutcomeKind::HypothesisViolation: return "HypothesisViolation";
    case OutcomeKind::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

std::optional<Colour> greedy_colour_edge(const ProblemInstance& instance, const FullColouring& partial, EdgeId uv) {
  const ColourSet seen = colours_seen(instance.graph, partial, uv);
  for (Colour c : instance.lists.at(uv))
    if (!seen.count(c)) return c;
  return std::nullopt;
}

ProblemInstance split_low_degree_vertex(const ProblemInstance& instance, VertexId v) {
  const Graph& g = instance.graph;
  if (!g.contains_vertex(v)) throw InstanceError("split: unknown vertex " + std::to_string(v));
  const int deg = g.degree(v);
  if (deg < 2 || deg > instance.params.t + 1)
    throw InstanceError("split: vertex " + std::to_string(v) + " has degree " + std::to_string(deg) +
                        ", outside [2, t+1]");
  for (EdgeId e : g.incident(v))
    if (!instance.precol.contains(e))
      throw InstanceError("split: edge " + std::to_string(e) + " at vertex " + std::to_string(v) + " is uncoloured");

  auto renumber = [v](VertexId w) { return w < v ? w : w - 1; };
  const int base = g.num_vertices() - 1;
  ProblemInstance out;
  out.graph = Graph(base + deg);
  int next_leaf = base;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.u == v)
      out.graph.add_edge(next_leaf++, renumber(ed.v));
    else if (ed.v == v)
      out.graph.add_edge(renumber(ed.u), next_leaf++);
    else
      out.graph.add_edge(renumber(ed.u), renumber(ed.v));
  }
  out.lists = instance.lists;
  out.precol = instance.precol;
  out.params = instance.params;
  out.euler = instance.euler;
  out.seed = instance.seed;
  if (instance.rotation) {
    std::vector<std::vector<EdgeId>> order;
    for (VertexId w = 0; w < g.num_vertices(); ++w)
      if (w != v) order.emplace_back(instance.rotation->at(w).begin(), instance.rotation->at(w).end());
    for (VertexId leaf = base; leaf < out.graph.num_vertices(); ++leaf)
      order.emplace_back(out.graph.incident(leaf).begin(), out.graph.incident(leaf).end());
    out.rotation = RotationSystem(std::move(order));
  }
  return out;
}

long long reduction_measure(const Graph& g, int t) {
  const auto classes = degree_classes(g);
  return 3LL * g.num_edges() + classes.count_range(2, t + 1);
}

namespace {

/// Graph being reduced. Uncoloured edges keep their original endpoints;
/// precoloured edges may be moved onto new leaves by vertex splits.
class WorkingState {
 public:
  explicit WorkingState(const ProblemInstance& instance) : inst_(instance) {
    const Graph& g = instance.graph;
    ends_.assign(g.edges().begin(), g.edges().end());
    active_.assign(static_cast<std::size_t>(g.num_edges()), 1);
    inc_.resize(static_cast<std::size_t>(g.num_vertices()));
    alive_.assign(static_cast<std::size_t>(g.num_vertices()), 1);
    for (VertexId v = 0; v < g.num_vertices(); ++v) inc_[static_cast<std::size_t>(v)].assign(g.incident(v).begin(), g.incident(v).end());
  }

  int degree(VertexId v) const { return static_cast<int>(inc_[static_cast<std::size_t>(v)].size()); }
  int num_vertices() const { return static_cast<int>(inc_.size()); }
  bool alive(VertexId v) const { return alive_[static_cast<std::size_t>(v)] != 0; }
  bool active(EdgeId e) const { return active_[static_cast<std::size_t>(e)] != 0; }
  bool precoloured(EdgeId e) const { return inst_.precol.contains(e); }
  const Edge& ends(EdgeId e) const { return ends_[static_cast<std::size_t>(e)]; }
  std::span<const EdgeId> incident(VertexId v) const { return inc_[static_cast<std::size_t>(v)]; }
  int num_edges() const { return static_cast<int>(ends_.size()); }

  std::vector<EdgeId> active_free_edges() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < num_edges(); ++e)
      if (active(e) && !precoloured(e)) out.push_back(e);
    return out;
  }

  void deactivate(EdgeId e) {
    active_[static_cast<std::size_t>(e)] = 0;
    for (VertexId w : {ends(e).u, ends(e).v}) {
      auto& inc = inc_[static_cast<std::size_t>(w)];
      inc.erase(std::find(inc.begin(), inc.end(), e));
    }
  }

  void split(VertexId v) {
    const std::vector<EdgeId> edges = inc_[static_cast<std::size_t>(v)];
    for (EdgeId e : edges) {
      const VertexId leaf = num_vertices();
      inc_.push_back({e});
      alive_.push_back(1);
      Edge& ed = ends_[static_cast<std::size_t>(e)];
      if (ed.u == v)
        ed.u = leaf;
      else
        ed.v = leaf;
    }
    inc_[static_cast<std::size_t>(v)].clear();
    alive_[static_cast<std::size_t>(v)] = 0;
  }

  long long measure(int t) const {
    long long m = 0;
    for (EdgeId e = 0; e < num_edges(); ++e) m += active(e) ? 3 : 0;
    for (VertexId v = 0; v < num_vertices(); ++v)
      if (alive(v) && degree(v) >= 2 && degree(v) <= t + 1) ++m;
    return m;
  }

  ReductionView view() const {
    ReductionView out;
    out.params = inst_.params;
    out.degree.resize(static_cast<std::size_t>(num_vertices()));
    for (VertexId v = 0; v < num_vertices(); ++v) out.degree[static_cast<std::size_t>(v)] = alive(v) ? degree(v) : -1;
    for (EdgeId e : active_free_edges()) out.free_edges.push_back({e, ends(e).u, ends(e).v});
    return out;
  }

  /// Active part as a standalone instance (deleted vertices dropped, ids renumbered).
  FrozenState freeze(std::string reason) const {
    FrozenState out;
    out.reason = std::move(reason);
    std::vector<VertexId> vid(static_cast<std::size_t>(num_vertices()), -1);
    int n = 0;
    for (VertexId v = 0; v < num_vertices(); ++v)
      if (alive(v)) vid[static_cast<std::size_t>(v)] = n++;
    ProblemInstance& fi = out.instance;
    fi.graph = Graph(n);
    for (EdgeId e = 0; e < num_edges(); ++e) {
      if (!active(e)) continue;
      const EdgeId id = fi.graph.add_edge(vid[static_cast<std::size_t>(ends(e).u)], vid[static_cast<std::size_t>(ends(e).v)]);
      out.original_edge.push_back(e);
      fi.lists.set(id, inst_.lists.at(e));
      if (auto c = inst_.precol.find(e)) fi.precol.set(id, *c);
    }
    fi.params = inst_.params;
    return out;
  }

 private:
  const ProblemInstance& inst_;
  std::vector<Edge> ends_;
  std::vector<char> active_;
  std::vector<std::vector<EdgeId>> inc_;
  std::vector<char> alive_;
};

struct DeferredEdge {
  EdgeId edge;
};
struct DeferredBad {
  std::vector<EdgeId> edges;
  std::vector<VertexId> a_side;
};
using Deferred = std::variant<DeferredEdge, DeferredBad>;

class Solver {
 public:
  Solver(const ProblemInstance& instance, const SolveOptions& options)
      : inst_(instance), opt_(options), ws_(instance), col_(colouring_from_precolouring(instance)) {}

  SolveOutcome run() {
    const int t = inst_.params.t;
    const int list_floor = inst_.params.Delta + inst_.params.t;
    for (;;) {
      const auto free_edges = ws_.active_free_edges();
      if (free_edges.empty()) break;
      const long long before = ws_.measure(t);

      // (1) an edge seeing fewer colours than its list holds
      if (auto e = find_greedy_edge(free_edges)) {
        out_.stats.measures.push_back(before);
        ++out_.stats.greedy_edges;
        ws_.deactivate(*e);
        stack_.push_back(DeferredEdge{*e});
        continue;
      }

      // (2) low-degree vertices
      std::optional<VertexId> split_v;
      std::optional<std::pair<VertexId, EdgeId>> blocked;
      for (VertexId v = 0; v < ws_.num_vertices() && !split_v; ++v) {
        if (!ws_.alive(v) || ws_.degree(v) < 2 || ws_.degree(v) > t + 1) continue;
        auto inc = ws_.incident(v);
        auto it = std::find_if(inc.begin(), inc.end(), [&](EdgeId e) { return !ws_.precoloured(e); });
        if (it == inc.end())
          split_v = v;
        else if (!blocked)
          blocked = {{v, *it}};
      }
      if (split_v) {
        out_.stats.measures.push_back(before);
        ++out_.stats.vertex_splits;
        ws_.split(*split_v);
        continue;
      }
      if (blocked) {
        std::ostringstream os;
        os << "vertex of degree " << ws_.degree(blocked->first) << " <= t+1 carries uncoloured edge " << blocked->second
           << " whose list is not larger than the colours it sees";
        return stuck(os.str());
      }

      // (3) bipartite components of G - E(H)
      bool progressed = false;
      for (auto& component : free_components(free_edges)) {
        const auto sub = Multigraph::subgraph(inst_.graph, component);
        auto bip = find_bipartition(sub);
        if (!bip) continue;
        out_.stats.measures.push_back(ws_.measure(t));
        ++out_.stats.bipartite_components;
        std::vector<ColourSet> lists;
        for (EdgeId e : component) lists.push_back(current_residual(e));
        BipartiteOutcome res =
            list_edge_colour_bipartite(sub, *bip, lists, {remaining_budget(), /*require_degree_bound=*/false});
        out_.stats.search_nodes += res.search_nodes;
        if (res.route == BipartiteRoute::Fallback) ++out_.stats.kernel_fallbacks;
        if (res.status == SearchStatus::BudgetExceeded) return finish(OutcomeKind::BudgetExceeded, "node budget exhausted in a bipartite component");
        if (res.status == SearchStatus::Exhausted) {
          std::ostringstream os;
          os << "bipartite component with " << component.size() << " uncoloured edges has no list colouring";
          return finish(OutcomeKind::Infeasible, os.str());
        }
        for (std::size_t i = 0; i < component.size(); ++i) {
          col_.set(component[i], res.colours[i]);
          ws_.deactivate(component[i]);
        }
        progressed = true;
      }
      if (progressed) continue;

      // (4) bad subgraphs
      const auto view = ws_.view();
      bool removed = false;
      for (const auto& bp : BadSubgraphParams::scan(inst_.params, opt_.scan_wide)) {
        BadSubgraph j = peel_bad_subgraph(view, bp);
        if (j.empty()) continue;
        if (std::any_of(j.edges.begin(), j.edges.end(), [&](EdgeId e) { return inst_.lists.size_of(e) < list_floor; }))
          continue;
        out_.stats.measures.push_back(before);
        ++out_.stats.bad_subgraphs;
        DeferredBad deferred;
        deferred.edges = j.edges;
        for (VertexId v : j.vertices)
          if (view.degree[static_cast<std::size_t>(v)] >= bp.a0 && view.degree[static_cast<std::size_t>(v)] <= bp.a)
            deferred.a_side.push_back(v);
        for (EdgeId e : j.edges) ws_.deactivate(e);
        stack_.push_back(std::move(deferred));
        removed = true;
        break;
      }
      if (removed) continue;

      // (5)
      return stuck("no reduction applies: every uncoloured edge sees at least its list size in colours, "
                   "every vertex of degree <= t+1 is a leaf, G - E(H) has an odd cycle in each remaining "
                   "component, and no bad subgraph exists for the scanned parameters");
    }
    return unwind();
  }

 private:
  std::uint64_t remaining_budget() const {
    return opt_.node_budget > out_.stats.search_nodes ? opt_.node_budget - out_.stats.search_nodes : 0;
  }

  ColourSet current_residual(EdgeId e) const {
    ColourSet l = inst_.lists.at(e);
    for (Colour c : colours_seen(inst_.graph, col_, e)) l.erase(c);
    return l;
  }

  std::optional<EdgeId> find_greedy_edge(std::span<const EdgeId> free_edges) const {
    for (EdgeId e : free_edges) {
      const Edge& ed = ws_.ends(e);
      if (ws_.degree(ed.u) + ws_.degree(ed.v) - 2 < inst_.lists.size_of(e)) return e;
    }
    return std::nullopt;
  }

  std::vector<std::vector<EdgeId>> free_components(std::span<const EdgeId> free_edges) const {
    std::vector<int> parent(static_cast<std::size_t>(ws_.num_vertices()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    for (EdgeId e : free_edges) parent[static_cast<std::size_t>(find(ws_.ends(e).u))] = find(ws_.ends(e).v);
    std::vector<std::vector<EdgeId>> out;
    std::vector<int> slot(parent.size(), -1);
    for (EdgeId e : free_edges) {
      const auto root = static_cast<std::size_t>(find(ws_.ends(e).u));
      if (slot[root] < 0) {
        slot[root] = static_cast<int>(out.size());
        out.emplace_back();
      }
      out[static_cast<std::size_t>(slot[root])].push_back(e);
    }
    return out;
  }

  SolveOutcome stuck(std::string reason) {
    out_.frozen = ws_.freeze(reason);
    if (!opt_.exact_completion) return finish(OutcomeKind::HypothesisViolation, std::move(reason));
    const auto free_edges = ws_.active_free_edges();
    const auto sub = Multigraph::subgraph(inst_.graph, free_edges);
    std::vector<ColourSet> lists;
    for (EdgeId e : free_edges) lists.push_back(current_residual(e));
    const auto res = exact_list_edge_colour(sub, lists, remaining_budget());
    out_.stats.search_nodes += res.nodes;
    out_.stats.exact_completion = true;
    if (res.status == SearchStatus::BudgetExceeded)
      return finish(OutcomeKind::BudgetExceeded, "node budget exhausted completing: " + reason);
    if (res.status == SearchStatus::Exhausted)
      return finish(OutcomeKind::Infeasible, "exhaustive search of the irreducible remainder failed (" +
                                                 std::to_string(res.nodes) + " nodes)");
    for (std::size_t i = 0; i < free_edges.size(); ++i) {
      col_.set(free_edges[i], res.colours[i]);
      ws_.deactivate(free_edges[i]);
    }
    return unwind();
  }

  SolveOutcome unwind() {
    while (!stack_.empty()) {
      Deferred step = std::move(stack_.back());
      stack_.pop_back();
      if (auto* single = std::get_if<DeferredEdge>(&step)) {
        auto c = greedy_colour_edge(inst_, col_, single->edge);
        if (!c) throw TheoremViolation("deferred edge " + std::to_string(single->edge) + " found no free colour");
        col_.set(single->edge, *c);
        continue;
      }
      auto& bad = std::get<DeferredBad>(step);
      const auto sub = Multigraph::subgraph(inst_.graph, bad.edges);
      Bipartition bip;
      bip.side.assign(static_cast<std::size_t>(sub.num_vertices), Side::Y);
      for (VertexId v : bad.a_side) bip.side[static_cast<std::size_t>(v)] = Side::X;
      const auto lists = residual_lists_for_subgraph(inst_, col_, bad.edges);
      std::vector<ColourSet> l;
      for (EdgeId e : bad.edges) l.push_back(lists.at(e));
      BipartiteOutcome res;
      try {
        res = list_edge_colour_bipartite(sub, bip, l, {remaining_budget(), true});
      } catch (const PreconditionError& err) {
        throw TheoremViolation(std::string("bad subgraph residual lists too short: ") + err.what());
      }
      out_.stats.search_nodes += res.search_nodes;
      if (res.route == BipartiteRoute::Fallback) ++out_.stats.kernel_fallbacks;
      if (res.status == SearchStatus::BudgetExceeded)
        return finish(OutcomeKind::BudgetExceeded, "node budget exhausted colouring a bad subgraph");
      for (std::size_t i = 0; i < bad.edges.size(); ++i) col_.set(bad.edges[i], res.colours[i]);
    }
    const Verdict verdict = verify_colouring(inst_, col_);
    if (!verdict) throw TheoremViolation("solver produced an invalid colouring: " + verdict.violations.front().describe());
    out_.colouring = col_;
    return finish(OutcomeKind::Coloured, out_.stats.exact_completion ? "coloured after exact completion" : "coloured by reductions");
  }

  SolveOutcome finish(OutcomeKind kind, std::string detail) {
    out_.kind = kind;
    out_.detail = std::move(detail);
    if (kind != OutcomeKind::Coloured) out_.colouring = FullColouring();
    return std::move(out_);
  }

  const ProblemInstance& inst_;
  SolveOptions opt_;
  WorkingState ws_;
  FullColouring col_;
  std::vector<Deferred> stack_;
  SolveOutcome out_;
};

}  // namespace

SolveOutcome solve(const ProblemInstance& instance, const SolveOptions& options) {
  instance.validate();
  return Solver(instance, options).run();
}

}  // namespace lec
