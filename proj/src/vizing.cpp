#include "lec/vizing.hpp"

#include <algorithm>
#include <stdexcept>

namespace lec {

namespace {

// Misra-Gries. Colours are 0..Delta internally.
class FanColourer {
 public:
  explicit FanColourer(const Graph& g)
      : g_(g), palette_(g.max_degree() + 1),
        at_(static_cast<std::size_t>(g.num_vertices()) * static_cast<std::size_t>(palette_), kNoEdge),
        colour_(static_cast<std::size_t>(g.num_edges()), -1) {}

  std::vector<int> run() {
    for (EdgeId e = 0; e < g_.num_edges(); ++e) colour_edge(e);
    return colour_;
  }

 private:
  EdgeId& slot(VertexId v, int c) {
    return at_[static_cast<std::size_t>(v) * static_cast<std::size_t>(palette_) + static_cast<std::size_t>(c)];
  }
  int colour_of(EdgeId e) const { return colour_[static_cast<std::size_t>(e)]; }
  bool is_free(VertexId v, int c) { return slot(v, c) == kNoEdge; }
  int free_at(VertexId v) {
    for (int c = 0; c < palette_; ++c)
      if (is_free(v, c)) return c;
    throw std::logic_error("vizing: vertex has no free colour");
  }
  void assign(EdgeId e, int c) {
    const Edge& ed = g_.edge(e);
    colour_[static_cast<std::size_t>(e)] = c;
    slot(ed.u, c) = e;
    slot(ed.v, c) = e;
  }
  void clear(EdgeId e) {
    const int c = colour_of(e);
    if (c < 0) return;
    const Edge& ed = g_.edge(e);
    slot(ed.u, c) = kNoEdge;
    slot(ed.v, c) = kNoEdge;
    colour_[static_cast<std::size_t>(e)] = -1;
  }

  void colour_edge(EdgeId e0) {
    const VertexId u = g_.edge(e0).u;
    // Fan at u: fan_edges[i] joins u to fan[i]; colour of fan_edges[i+1] is free at fan[i].
    std::vector<VertexId> fan{g_.edge(e0).v};
    std::vector<EdgeId> fan_edges{e0};
    std::vector<char> in_fan(static_cast<std::size_t>(g_.num_vertices()), 0);
    in_fan[static_cast<std::size_t>(fan[0])] = 1;
    for (bool grown = true; grown;) {
      grown = false;
      for (EdgeId f : g_.incident(u)) {
        const VertexId x = g_.edge(f).other(u);
        if (in_fan[static_cast<std::size_t>(x)] || colour_of(f) < 0) continue;
        if (!is_free(fan.back(), colour_of(f))) continue;
        fan.push_back(x);
        fan_edges.push_back(f);
        in_fan[static_cast<std::size_t>(x)] = 1;
        grown = true;
        break;
      }
    }
    const int c = free_at(u);
    const int d = free_at(fan.back());

    // Invert the c/d path that starts at u with colour d.
    if (!is_free(u, d)) {
      std::vector<EdgeId> path;
      VertexId x = u;
      int want = d;
      while (!is_free(x, want)) {
        const EdgeId f = slot(x, want);
        path.push_back(f);
        x = g_.edge(f).other(x);
        want = want == d ? c : d;
      }
      std::vector<int> old;
      for (EdgeId f : path) old.push_back(colour_of(f));
      for (EdgeId f : path) clear(f);
      for (std::size_t i = 0; i < path.size(); ++i) assign(path[i], old[i] == d ? c : d);
    }

    // Shortest prefix that is still a fan and ends where d is free.
    std::size_t w = fan.size();
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (i > 0) {
        const int ci = colour_of(fan_edges[i]);
        if (ci < 0 || !is_free(fan[i - 1], ci)) break;
      }
      if (is_free(fan[i], d)) {
        w = i;
        break;
      }
    }
    if (w == fan.size()) throw std::logic_error("vizing: no fan prefix admits the inverted colour");

    std::vector<int> shifted(w + 1);
    for (std::size_t i = 0; i < w; ++i) shifted[i] = colour_of(fan_edges[i + 1]);
    shifted[w] = d;
    for (std::size_t i = 0; i <= w; ++i) clear(fan_edges[i]);
    for (std::size_t i = 0; i <= w; ++i) assign(fan_edges[i], shifted[i]);
  }

  const Graph& g_;
  int palette_;
  std::vector<EdgeId> at_;
  std::vector<int> colour_;
};

}  // namespace

FullColouring vizing_edge_colour(const Graph& g) {
  const auto raw = FanColourer(g).run();
  std::vector<Colour> out(raw.size());
  std::transform(raw.begin(), raw.end(), out.begin(), [](int c) { return c + 1; });
  return FullColouring(std::move(out));
}

FullColouring extend_fresh_palette(const Graph& g, const Precolouring& precol) {
  std::vector<EdgeId> rest;
  Graph sub(g.num_vertices());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (precol.contains(e)) continue;
    rest.push_back(e);
    sub.add_edge(g.edge(e).u, g.edge(e).v);
  }
  const auto palette = precol.palette();
  const Colour offset = palette.empty() ? 0 : std::max(0, *palette.rbegin());
  const auto fresh = vizing_edge_colour(sub);
  FullColouring out(g.num_edges());
  for (const auto& [e, c] : precol) out.set(e, c);
  for (std::size_t i = 0; i < rest.size(); ++i) out.set(rest[i], offset + fresh[static_cast<EdgeId>(i)]);
  return out;
}

}  // namespace lec
