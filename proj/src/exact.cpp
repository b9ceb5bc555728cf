#include "lec/exact.hpp"

#include <algorithm>
#include <map>

namespace lec {

Multigraph Multigraph::from(const Graph& g) {
  Multigraph m;
  m.num_vertices = g.num_vertices();
  m.edges.assign(g.edges().begin(), g.edges().end());
  return m;
}

Multigraph Multigraph::subgraph(const Graph& g, std::span<const EdgeId> edge_ids) {
  Multigraph m;
  m.num_vertices = g.num_vertices();
  m.edges.reserve(edge_ids.size());
  for (EdgeId e : edge_ids) m.edges.push_back(g.edge(e));
  return m;
}

std::vector<int> Multigraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(num_vertices), 0);
  for (const Edge& e : edges) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  return deg;
}

int Multigraph::max_degree() const {
  const auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::vector<std::vector<EdgeId>> Multigraph::incidence() const {
  std::vector<std::vector<EdgeId>> inc(static_cast<std::size_t>(num_vertices));
  for (EdgeId e = 0; e < num_edges(); ++e) {
    inc[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].u)].push_back(e);
    inc[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].v)].push_back(e);
  }
  return inc;
}

namespace {

class Search {
 public:
  Search(const Multigraph& g, std::span<const ColourSet> lists, std::uint64_t budget)
      : g_(g), inc_(g.incidence()), budget_(budget) {
    std::map<Colour, int> index;
    for (const auto& l : lists)
      for (Colour c : l) index.emplace(c, 0);
    int next = 0;
    for (auto& [c, i] : index) {
      i = next++;
      palette_.push_back(c);
    }
    lists_.reserve(lists.size());
    for (const auto& l : lists) {
      std::vector<int> dense;
      for (Colour c : l) dense.push_back(index.at(c));
      lists_.push_back(std::move(dense));
    }
    used_.assign(static_cast<std::size_t>(g.num_vertices) * palette_.size(), 0);
    assigned_.assign(static_cast<std::size_t>(g.num_edges()), -1);
  }

  SearchResult run() {
    SearchResult out;
    const bool found = descend(0);
    out.nodes = nodes_;
    if (found) {
      out.status = SearchStatus::Found;
      for (int c : assigned_) out.colours.push_back(palette_[static_cast<std::size_t>(c)]);
    } else {
      out.status = aborted_ ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted;
    }
    return out;
  }

 private:
  char& used(VertexId v, int c) { return used_[static_cast<std::size_t>(v) * palette_.size() + static_cast<std::size_t>(c)]; }

  int available(EdgeId e) {
    const Edge& ed = g_.edges[static_cast<std::size_t>(e)];
    int n = 0;
    for (int c : lists_[static_cast<std::size_t>(e)])
      if (!used(ed.u, c) && !used(ed.v, c)) ++n;
    return n;
  }

  bool neighbours_alive(EdgeId e) {
    const Edge& ed = g_.edges[static_cast<std::size_t>(e)];
    for (VertexId w : {ed.u, ed.v})
      for (EdgeId f : inc_[static_cast<std::size_t>(w)])
        if (assigned_[static_cast<std::size_t>(f)] < 0 && available(f) == 0) return false;
    return true;
  }

  bool descend(int depth) {
    if (depth == g_.num_edges()) return true;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    EdgeId pick = kNoEdge;
    int best = std::numeric_limits<int>::max();
    for (EdgeId e = 0; e < g_.num_edges(); ++e) {
      if (assigned_[static_cast<std::size_t>(e)] >= 0) continue;
      const int a = available(e);
      if (a < best) {
        best = a;
        pick = e;
      }
    }
    if (best == 0) return false;
    const Edge& ed = g_.edges[static_cast<std::size_t>(pick)];
    for (int c : lists_[static_cast<std::size_t>(pick)]) {
      if (used(ed.u, c) || used(ed.v, c)) continue;
      assigned_[static_cast<std::size_t>(pick)] = c;
      used(ed.u, c) = 1;
      used(ed.v, c) = 1;
      if (neighbours_alive(pick) && descend(depth + 1)) return true;
      used(ed.u, c) = 0;
      used(ed.v, c) = 0;
      assigned_[static_cast<std::size_t>(pick)] = -1;
      if (aborted_) return false;
    }
    return false;
  }

  const Multigraph& g_;
  std::vector<std::vector<EdgeId>> inc_;
  std::vector<Colour> palette_;
  std::vector<std::vector<int>> lists_;
  std::vector<char> used_;
  std::vector<int> assigned_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

SearchResult exact_list_edge_colour(const Multigraph& g, std::span<const ColourSet> lists, std::uint64_t node_budget) {
  if (static_cast<int>(lists.size()) != g.num_edges()) throw InstanceError("exact search: one list per edge required");
  return Search(g, lists, node_budget).run();
}

}  // namespace lec
