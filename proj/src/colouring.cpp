#include "lec/colouring.hpp"

#include <algorithm>
#include <sstream>

namespace lec {

ListAssignment ListAssignment::uniform(const Graph& g, const ColourSet& palette) {
  ListAssignment out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) out.set(e, palette);
  return out;
}

ListAssignment ListAssignment::range(const Graph& g, Colour lo, Colour hi) {
  ColourSet palette;
  for (Colour c = lo; c <= hi; ++c) palette.insert(c);
  return uniform(g, palette);
}

const ColourSet& ListAssignment::at(EdgeId e) const {
  auto it = lists_.find(e);
  if (it == lists_.end()) throw InstanceError("no list for edge " + std::to_string(e));
  return it->second;
}

ColourSet& ListAssignment::at(EdgeId e) {
  auto it = lists_.find(e);
  if (it == lists_.end()) throw InstanceError("no list for edge " + std::to_string(e));
  return it->second;
}

bool ListAssignment::covers(const Graph& g) const {
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (!contains(e)) return false;
  return true;
}

int ListAssignment::min_size() const {
  int best = std::numeric_limits<int>::max();
  for (const auto& [e, l] : lists_) best = std::min(best, static_cast<int>(l.size()));
  return lists_.empty() ? 0 : best;
}

std::optional<Colour> Precolouring::find(EdgeId e) const {
  auto it = colours_.find(e);
  if (it == colours_.end()) return std::nullopt;
  return it->second;
}

std::vector<EdgeId> Precolouring::edges() const {
  std::vector<EdgeId> out;
  out.reserve(colours_.size());
  for (const auto& [e, c] : colours_) out.push_back(e);
  return out;
}

ColourSet Precolouring::palette() const {
  ColourSet out;
  for (const auto& [e, c] : colours_) out.insert(c);
  return out;
}

int Precolouring::degree_in(const Graph& g, VertexId v) const {
  int n = 0;
  for (EdgeId e : g.incident(v))
    if (contains(e)) ++n;
  return n;
}

int Precolouring::max_degree(const Graph& g) const {
  int best = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) best = std::max(best, degree_in(g, v));
  return best;
}

bool FullColouring::complete() const {
  return std::none_of(colours_.begin(), colours_.end(), [](Colour c) { return c == kNoColour; });
}

ColourSet FullColouring::palette() const {
  ColourSet out;
  for (Colour c : colours_)
    if (c != kNoColour) out.insert(c);
  return out;
}

std::optional<int> Params::ell() const {
  const int gap = t - d;
  if (gap < 0 || gap > 3) return std::nullopt;
  return gap;
}

int delta_threshold(int t, int d) {
  switch (t - d) {
    case 0: return 16 + d;
    case 1: return 9 + d;
    case 2: return 8 + d;
    case 3: return 7 + d;
    default: return 0;
  }
}

std::vector<std::string> ProblemInstance::problems() const {
  std::vector<std::string> out;
  const Graph& g = graph;
  if (params.t < 1) out.push_back("t must be a positive integer, got " + std::to_string(params.t));
  if (params.Delta < g.max_degree())
    out.push_back("Delta = " + std::to_string(params.Delta) + " is below the maximum degree " +
                  std::to_string(g.max_degree()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!lists.contains(e)) {
      out.push_back("edge " + std::to_string(e) + " has no list");
      continue;
    }
    if (lists.at(e).count(kNoColour)) out.push_back("edge " + std::to_string(e) + " lists a reserved colour value");
  }
  for (const auto& [e, c] : lists)
    if (e < 0 || e >= g.num_edges()) out.push_back("list given for unknown edge " + std::to_string(e));
  for (const auto& [e, c] : precol) {
    if (e < 0 || e >= g.num_edges()) {
      out.push_back("precolour given for unknown edge " + std::to_string(e));
      continue;
    }
    if (lists.contains(e) && !lists.at(e).count(c))
      out.push_back("precoloured edge " + std::to_string(e) + " has colour " + std::to_string(c) + " outside its list");
  }
  if (out.empty()) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      auto inc = g.incident(v);
      for (std::size_t i = 0; i < inc.size(); ++i) {
        auto ci = precol.find(inc[i]);
        if (!ci) continue;
        for (std::size_t j = i + 1; j < inc.size(); ++j) {
          auto cj = precol.find(inc[j]);
          if (cj && *ci == *cj)
            out.push_back("precoloured edges " + std::to_string(inc[i]) + " and " + std::to_string(inc[j]) +
                          " share colour " + std::to_string(*ci) + " at vertex " + std::to_string(v));
        }
      }
    }
    const int dh = precol.max_degree(g);
    if (params.d < dh)
      out.push_back("d = " + std::to_string(params.d) + " is below the precoloured maximum degree " +
                    std::to_string(dh));
  }
  if (rotation) {
    try {
      rotation->validate(g);
    } catch (const GraphError& err) {
      out.push_back(std::string("rotation: ") + err.what());
    }
  }
  return out;
}

void ProblemInstance::validate() const {
  const auto p = problems();
  if (p.empty()) return;
  std::ostringstream os;
  os << "invalid instance:";
  for (const auto& s : p) os << "\n  " << s;
  throw InstanceError(os.str());
}

std::vector<EdgeId> ProblemInstance::uncoloured_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < graph.num_edges(); ++e)
    if (!precol.contains(e)) out.push_back(e);
  return out;
}

bool ProblemInstance::lists_meet_bound() const {
  for (EdgeId e = 0; e < graph.num_edges(); ++e)
    if (lists.size_of(e) < params.Delta + params.t) return false;
  return true;
}

bool ProblemInstance::meets_extension_hypotheses() const {
  const auto& [Delta, t, d] = params;
  if (t < 1 || d > t || !lists_meet_bound()) return false;
  if (d <= t - 4) return true;
  return Delta >= delta_threshold(t, d);
}

std::string Violation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case ViolationKind::Uncoloured: os << "edge " << edge << " is uncoloured"; break;
    case ViolationKind::NotInList: os << "edge " << edge << " has colour " << colour << " outside its list"; break;
    case ViolationKind::Conflict:
      os << "adjacent edges " << edge << " and " << other << " share colour " << colour;
      break;
    case ViolationKind::PrecolourChanged: os << "precoloured edge " << edge << " recoloured to " << colour; break;
  }
  return os.str();
}

Verdict verify_colouring(const ProblemInstance& instance, const FullColouring& col) {
  Verdict verdict;
  const Graph& g = instance.graph;
  auto& out = verdict.violations;
  if (col.size() != g.num_edges()) {
    for (EdgeId e = col.size(); e < g.num_edges(); ++e) out.push_back({ViolationKind::Uncoloured, e});
  }
  const int m = std::min(col.size(), g.num_edges());
  for (EdgeId e = 0; e < m; ++e) {
    const Colour c = col[e];
    if (c == kNoColour) {
      out.push_back({ViolationKind::Uncoloured, e});
      continue;
    }
    if (auto pc = instance.precol.find(e); pc && *pc != c) out.push_back({ViolationKind::PrecolourChanged, e, kNoEdge, c});
    if (instance.lists.contains(e) && !instance.lists.at(e).count(c))
      out.push_back({ViolationKind::NotInList, e, kNoEdge, c});
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      if (inc[i] >= m || col[inc[i]] == kNoColour) continue;
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        if (inc[j] >= m) continue;
        if (col[inc[i]] == col[inc[j]])
          out.push_back({ViolationKind::Conflict, std::min(inc[i], inc[j]), std::max(inc[i], inc[j]), col[inc[i]]});
      }
    }
  }
  return verdict;
}

ColourSet colours_seen(const Graph& g, const FullColouring& col, EdgeId e) {
  ColourSet seen;
  const Edge& ed = g.edge(e);
  for (VertexId w : {ed.u, ed.v})
    for (EdgeId f : g.incident(w))
      if (f != e && col.coloured(f)) seen.insert(col[f]);
  return seen;
}

FullColouring colouring_from_precolouring(const ProblemInstance& instance) {
  FullColouring col(instance.graph.num_edges());
  for (const auto& [e, c] : instance.precol) col.set(e, c);
  return col;
}

ListAssignment residual_lists(const ProblemInstance& instance) {
  const Graph& g = instance.graph;
  ListAssignment out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (instance.precol.contains(e)) continue;
    ColourSet l = instance.lists.at(e);
    const Edge& ed = g.edge(e);
    for (VertexId w : {ed.u, ed.v})
      for (EdgeId f : g.incident(w))
        if (auto c = instance.precol.find(f)) l.erase(*c);
    out.set(e, std::move(l));
  }
  return out;
}

ListAssignment residual_lists_for_subgraph(const ProblemInstance& instance, const FullColouring& partial,
                                           std::span<const EdgeId> j_edges) {
  ListAssignment out;
  for (EdgeId e : j_edges) {
    ColourSet l = instance.lists.at(e);
    for (Colour c : colours_seen(instance.graph, partial, e)) l.erase(c);
    out.set(e, std::move(l));
  }
  return out;
}

SubInstance delete_edges(const ProblemInstance& instance, std::span<const EdgeId> edges) {
  const Graph& g = instance.graph;
  std::vector<char> drop(static_cast<std::size_t>(g.num_edges()), 0);
  for (EdgeId e : edges) {
    if (instance.precol.contains(e)) throw InstanceError("cannot delete precoloured edge " + std::to_string(e));
    drop.at(static_cast<std::size_t>(e)) = 1;
  }
  SubInstance out;
  ProblemInstance& sub = out.instance;
  sub.graph = Graph(g.num_vertices());
  std::vector<EdgeId> new_id(static_cast<std::size_t>(g.num_edges()), kNoEdge);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (drop[static_cast<std::size_t>(e)]) continue;
    new_id[static_cast<std::size_t>(e)] = sub.graph.add_edge(g.edge(e).u, g.edge(e).v);
    out.kept.push_back(e);
    sub.lists.set(new_id[static_cast<std::size_t>(e)], instance.lists.at(e));
    if (auto c = instance.precol.find(e)) sub.precol.set(new_id[static_cast<std::size_t>(e)], *c);
  }
  if (instance.rotation) {
    std::vector<std::vector<EdgeId>> order(static_cast<std::size_t>(g.num_vertices()));
    for (VertexId v = 0; v < g.num_vertices(); ++v)
      for (EdgeId e : instance.rotation->at(v))
        if (new_id[static_cast<std::size_t>(e)] != kNoEdge) order[static_cast<std::size_t>(v)].push_back(new_id[static_cast<std::size_t>(e)]);
    sub.rotation = RotationSystem(std::move(order));
  }
  sub.params = instance.params;
  sub.euler = instance.euler;
  sub.seed = instance.seed;
  return out;
}

SplitInstance split_instance(const ProblemInstance& instance) {
  SplitInstance out;
  const auto h = instance.precol.edges();
  out.split = split_precoloured_edges(instance.graph, h);
  ProblemInstance& s = out.instance;
  s.graph = out.split.graph;
  for (EdgeId e = 0; e < instance.graph.num_edges(); ++e) s.lists.set(e, instance.lists.at(e));
  for (const auto& [kept, appended] : out.split.pairs) {
    s.lists.set(appended, instance.lists.at(kept));
    s.precol.set(kept, instance.precol.at(kept));
    s.precol.set(appended, instance.precol.at(kept));
  }
  if (instance.rotation) s.rotation = split_rotation(*instance.rotation, out.split);
  s.params = instance.params;
  s.euler = instance.euler;
  s.seed = instance.seed;
  return out;
}

FullColouring pull_back(const FullColouring& col, const SplitGraph& split) {
  FullColouring out(split.original_edges);
  for (EdgeId e = 0; e < split.original_edges; ++e) out.set(e, col[e]);
  return out;
}

}  // namespace lec
