#include "lec/bipartite.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace lec {

bool Bipartition::separates(const Multigraph& g) const {
  if (static_cast<int>(side.size()) != g.num_vertices) return false;
  return std::all_of(g.edges.begin(), g.edges.end(), [&](const Edge& e) { return (*this)[e.u] != (*this)[e.v]; });
}

std::optional<Bipartition> find_bipartition(const Multigraph& g) {
  Bipartition bip;
  bip.side.assign(static_cast<std::size_t>(g.num_vertices), Side::X);
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices), 0);
  const auto inc = g.incidence();
  std::deque<VertexId> queue;
  for (VertexId s = 0; s < g.num_vertices; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    seen[static_cast<std::size_t>(s)] = 1;
    queue.push_back(s);
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (EdgeId e : inc[static_cast<std::size_t>(x)]) {
        const VertexId y = g.edges[static_cast<std::size_t>(e)].other(x);
        const Side want = bip[x] == Side::X ? Side::Y : Side::X;
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          bip.side[static_cast<std::size_t>(y)] = want;
          queue.push_back(y);
        } else if (bip[y] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return bip;
}

std::optional<Bipartition> find_bipartition(const Graph& g) { return find_bipartition(Multigraph::from(g)); }

std::vector<Colour> konig_edge_colour(const Multigraph& g, const Bipartition& bip) {
  if (!bip.separates(g)) throw BipartiteError("konig_edge_colour: graph is not bipartite for the given sides");
  const int delta = g.max_degree();
  const auto width = static_cast<std::size_t>(delta);
  // at[v * delta + c] = edge coloured c at v, or kNoEdge.
  std::vector<EdgeId> at(static_cast<std::size_t>(g.num_vertices) * width, kNoEdge);
  std::vector<int> colour(static_cast<std::size_t>(g.num_edges()), -1);
  auto slot = [&](VertexId v, int c) -> EdgeId& { return at[static_cast<std::size_t>(v) * width + static_cast<std::size_t>(c)]; };
  auto free_at = [&](VertexId v) {
    for (int c = 0; c < delta; ++c)
      if (slot(v, c) == kNoEdge) return c;
    throw BipartiteError("konig_edge_colour: no free colour");
  };

  std::vector<EdgeId> path;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const VertexId u = g.edges[static_cast<std::size_t>(e)].u;
    const VertexId v = g.edges[static_cast<std::size_t>(e)].v;
    const int a = free_at(u);
    if (slot(v, a) != kNoEdge) {
      const int b = free_at(v);
      // Swap a and b along the a/b path leaving v; it cannot end at u.
      path.clear();
      VertexId x = v;
      int want = a;
      while (slot(x, want) != kNoEdge) {
        const EdgeId f = slot(x, want);
        path.push_back(f);
        x = g.edges[static_cast<std::size_t>(f)].other(x);
        want = want == a ? b : a;
      }
      for (EdgeId f : path) {
        const Edge& fe = g.edges[static_cast<std::size_t>(f)];
        slot(fe.u, colour[static_cast<std::size_t>(f)]) = kNoEdge;
        slot(fe.v, colour[static_cast<std::size_t>(f)]) = kNoEdge;
      }
      for (EdgeId f : path) {
        const Edge& fe = g.edges[static_cast<std::size_t>(f)];
        const int c = colour[static_cast<std::size_t>(f)] == a ? b : a;
        colour[static_cast<std::size_t>(f)] = c;
        slot(fe.u, c) = f;
        slot(fe.v, c) = f;
      }
    }
    colour[static_cast<std::size_t>(e)] = a;
    slot(u, a) = e;
    slot(v, a) = e;
  }
  std::vector<Colour> out(colour.size());
  std::transform(colour.begin(), colour.end(), out.begin(), [](int c) { return c + 1; });
  return out;
}

FullColouring konig_edge_colour(const Graph& g, const Bipartition& bip) {
  return FullColouring(konig_edge_colour(Multigraph::from(g), bip));
}

PriorityScheme PriorityScheme::from_colouring(const Multigraph& g, const Bipartition& bip, std::span<const Colour> aux,
                                              bool swap_sides) {
  PriorityScheme s;
  s.rank.assign(static_cast<std::size_t>(g.num_edges()), {0, 0});
  const auto inc = g.incidence();
  for (VertexId v = 0; v < g.num_vertices; ++v) {
    std::vector<EdgeId> order = inc[static_cast<std::size_t>(v)];
    const bool prefers_high = (bip[v] == Side::X) != swap_sides;
    std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
      const Colour ca = aux[static_cast<std::size_t>(a)];
      const Colour cb = aux[static_cast<std::size_t>(b)];
      if (ca != cb) return prefers_high ? ca > cb : ca < cb;
      return a < b;
    });
    for (std::size_t r = 0; r < order.size(); ++r) {
      const EdgeId e = order[r];
      const int end = g.edges[static_cast<std::size_t>(e)].u == v ? 0 : 1;
      s.rank[static_cast<std::size_t>(e)][static_cast<std::size_t>(end)] = static_cast<int>(r);
    }
  }
  return s;
}

int PriorityScheme::rank_at(const Multigraph& g, EdgeId e, VertexId v) const {
  const Edge& ed = g.edges.at(static_cast<std::size_t>(e));
  return rank.at(static_cast<std::size_t>(e))[ed.u == v ? 0 : 1];
}

std::vector<EdgeId> kernel_round(const Multigraph& g, const Bipartition& bip, const PriorityScheme& scheme,
                                 std::span<const EdgeId> candidates) {
  // Proposal lists per X vertex in preference order.
  std::vector<std::vector<EdgeId>> proposals(static_cast<std::size_t>(g.num_vertices));
  for (EdgeId e : candidates) {
    const Edge& ed = g.edges[static_cast<std::size_t>(e)];
    const VertexId x = bip[ed.u] == Side::X ? ed.u : ed.v;
    proposals[static_cast<std::size_t>(x)].push_back(e);
  }
  for (VertexId x = 0; x < g.num_vertices; ++x) {
    auto& p = proposals[static_cast<std::size_t>(x)];
    std::sort(p.begin(), p.end(), [&](EdgeId a, EdgeId b) {
      const int ra = scheme.rank_at(g, a, x);
      const int rb = scheme.rank_at(g, b, x);
      return ra != rb ? ra < rb : a < b;
    });
  }
  std::vector<std::size_t> next(static_cast<std::size_t>(g.num_vertices), 0);
  std::vector<EdgeId> held(static_cast<std::size_t>(g.num_vertices), kNoEdge);  // at Y vertices
  std::vector<VertexId> free_x;
  for (VertexId x = g.num_vertices - 1; x >= 0; --x)
    if (!proposals[static_cast<std::size_t>(x)].empty()) free_x.push_back(x);

  while (!free_x.empty()) {
    const VertexId x = free_x.back();
    free_x.pop_back();
    auto& p = proposals[static_cast<std::size_t>(x)];
    auto& i = next[static_cast<std::size_t>(x)];
    while (i < p.size()) {
      const EdgeId e = p[i++];
      const VertexId y = g.edges[static_cast<std::size_t>(e)].other(x);
      const EdgeId cur = held[static_cast<std::size_t>(y)];
      if (cur == kNoEdge) {
        held[static_cast<std::size_t>(y)] = e;
        break;
      }
      const int rn = scheme.rank_at(g, e, y);
      const int rc = scheme.rank_at(g, cur, y);
      if (rn < rc || (rn == rc && e < cur)) {
        held[static_cast<std::size_t>(y)] = e;
        free_x.push_back(g.edges[static_cast<std::size_t>(cur)].other(y));
        break;
      }
    }
  }
  std::vector<EdgeId> matched;
  for (VertexId y = 0; y < g.num_vertices; ++y)
    if (held[static_cast<std::size_t>(y)] != kNoEdge) matched.push_back(held[static_cast<std::size_t>(y)]);
  std::sort(matched.begin(), matched.end());
  return matched;
}

namespace {

std::optional<std::vector<Colour>> kernel_colour(const Multigraph& g, const Bipartition& bip,
                                                 std::span<const ColourSet> lists, const PriorityScheme& scheme,
                                                 bool descending) {
  std::vector<ColourSet> remaining(lists.begin(), lists.end());
  std::vector<Colour> colour(static_cast<std::size_t>(g.num_edges()), kNoColour);
  ColourSet all;
  for (const auto& l : lists) all.insert(l.begin(), l.end());
  std::vector<Colour> order(all.begin(), all.end());
  if (descending) std::reverse(order.begin(), order.end());

  std::vector<EdgeId> candidates;
  for (Colour c : order) {
    candidates.clear();
    for (EdgeId e = 0; e < g.num_edges(); ++e)
      if (colour[static_cast<std::size_t>(e)] == kNoColour && remaining[static_cast<std::size_t>(e)].count(c))
        candidates.push_back(e);
    if (candidates.empty()) continue;
    const auto kernel = kernel_round(g, bip, scheme, candidates);
    for (EdgeId e : kernel) colour[static_cast<std::size_t>(e)] = c;
    for (EdgeId e : candidates) {
      if (colour[static_cast<std::size_t>(e)] != kNoColour) continue;
      auto& l = remaining[static_cast<std::size_t>(e)];
      l.erase(c);
      if (l.empty()) return std::nullopt;
    }
  }
  if (std::any_of(colour.begin(), colour.end(), [](Colour c) { return c == kNoColour; })) return std::nullopt;
  return colour;
}

}  // namespace

BipartiteOutcome list_edge_colour_bipartite(const Multigraph& g, const Bipartition& bip,
                                            std::span<const ColourSet> lists, const BipartiteOptions& options) {
  if (static_cast<int>(lists.size()) != g.num_edges()) throw BipartiteError("one list per edge required");
  if (!bip.separates(g)) throw BipartiteError("list_edge_colour_bipartite: graph is not bipartite for the given sides");
  const auto deg = g.degrees();
  bool bound_holds = true;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edges[static_cast<std::size_t>(e)];
    const int need = std::max(deg[static_cast<std::size_t>(ed.u)], deg[static_cast<std::size_t>(ed.v)]);
    if (static_cast<int>(lists[static_cast<std::size_t>(e)].size()) >= need) continue;
    bound_holds = false;
    if (options.require_degree_bound) {
      std::ostringstream os;
      os << "edge " << e << " = {" << ed.u << "," << ed.v << "} has " << lists[static_cast<std::size_t>(e)].size()
         << " colours, needs max{deg} = " << need;
      throw PreconditionError(os.str(), e);
    }
  }

  BipartiteOutcome out;
  if (g.num_edges() == 0) {
    out.status = SearchStatus::Found;
    return out;
  }
  if (bound_holds) {
    const auto aux = konig_edge_colour(g, bip);
    for (bool swap : {false, true}) {
      const auto scheme = PriorityScheme::from_colouring(g, bip, aux, swap);
      for (bool descending : {false, true}) {
        ++out.kernel_attempts;
        if (auto col = kernel_colour(g, bip, lists, scheme, descending)) {
          out.status = SearchStatus::Found;
          out.colours = std::move(*col);
          out.route = BipartiteRoute::Kernel;
          return out;
        }
      }
    }
  }
  out.route = BipartiteRoute::Fallback;
  auto res = exact_list_edge_colour(g, lists, options.node_budget);
  out.status = res.status;
  out.search_nodes = res.nodes;
  out.colours = std::move(res.colours);
  if (bound_holds && out.status == SearchStatus::Exhausted)
    throw BipartiteError("bipartite lists meet max{deg(x),deg(y)} but no list edge colouring exists");
  return out;
}

FullColouring list_edge_colour_bipartite(const Graph& g, const Bipartition& bip, const ListAssignment& lists) {
  std::vector<ColourSet> l;
  l.reserve(static_cast<std::size_t>(g.num_edges()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) l.push_back(lists.at(e));
  auto res = list_edge_colour_bipartite(Multigraph::from(g), bip, l);
  if (res.status != SearchStatus::Found) throw BipartiteError("bipartite list colouring: search budget exceeded");
  return FullColouring(std::move(res.colours));
}

FullColouring extend_bipartite(const ProblemInstance& instance, const Bipartition& bip) {
  // t >= d and |L| >= Delta + t imply the residual bound checked by the
  // colourer; only the residual bound is enforced.
  if (!bip.separates(Multigraph::from(instance.graph))) throw BipartiteError("extend_bipartite: graph is not bipartite");
  const auto free_edges = instance.uncoloured_edges();
  const auto sub = Multigraph::subgraph(instance.graph, free_edges);
  const auto residual = residual_lists(instance);
  std::vector<ColourSet> lists;
  lists.reserve(free_edges.size());
  for (EdgeId e : free_edges) lists.push_back(residual.at(e));
  auto res = list_edge_colour_bipartite(sub, bip, lists);
  if (res.status != SearchStatus::Found) throw BipartiteError("extend_bipartite: search budget exceeded");
  FullColouring col = colouring_from_precolouring(instance);
  for (std::size_t i = 0; i < free_edges.size(); ++i) col.set(free_edges[i], res.colours[i]);
  return col;
}

FullColouring extend_bipartite(const ProblemInstance& instance) {
  auto bip = find_bipartition(instance.graph);
  if (!bip) throw BipartiteError("extend_bipartite: graph is not bipartite");
  return extend_bipartite(instance, *bip);
}

}  // namespace lec
