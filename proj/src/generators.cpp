#include "lec/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "lec/random.hpp"

namespace lec {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InstanceError(message);
}

struct Triangulation {
  int n = 0;
  std::vector<Edge> edges;
};

// Stacked triangulation: start from a triangle and repeatedly place a new
// vertex inside a random face.
Triangulation stacked_triangulation(Rng& rng, int n) {
  Triangulation tri;
  tri.n = n;
  if (n == 2) tri.edges.push_back({0, 1});
  if (n < 3) return tri;
  tri.edges = {{0, 1}, {1, 2}, {0, 2}};
  std::vector<std::array<VertexId, 3>> faces{{0, 1, 2}, {0, 2, 1}};
  for (VertexId w = 3; w < n; ++w) {
    const auto i = static_cast<std::size_t>(rng.below(faces.size()));
    const auto [a, b, c] = faces[i];
    tri.edges.push_back({a, w});
    tri.edges.push_back({b, w});
    tri.edges.push_back({c, w});
    faces[i] = {a, b, w};
    faces.push_back({b, c, w});
    faces.push_back({c, a, w});
  }
  return tri;
}

Graph build(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

std::vector<std::size_t> shuffled_indices(Rng& rng, std::size_t n) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  rng.shuffle(std::span<std::size_t>(idx));
  return idx;
}

ColourSet random_list(Rng& rng, int size, int universe) {
  std::vector<Colour> pool(static_cast<std::size_t>(universe));
  std::iota(pool.begin(), pool.end(), 1);
  rng.shuffle(std::span<Colour>(pool));
  return ColourSet(pool.begin(), pool.begin() + size);
}

ListAssignment make_lists(Rng& rng, const Graph& g, int size, ListMode mode, int slack) {
  if (mode == ListMode::Uniform) return ListAssignment::range(g, 1, size);
  ListAssignment lists;
  for (EdgeId e = 0; e < g.num_edges(); ++e) lists.set(e, random_list(rng, size, size + slack));
  return lists;
}

std::optional<Colour> pick_colour(Rng& rng, const ColourSet& list, const ColourSet& used_u, const ColourSet& used_v) {
  std::vector<Colour> free;
  for (Colour c : list)
    if (!used_u.count(c) && !used_v.count(c)) free.push_back(c);
  if (free.empty()) return std::nullopt;
  return free[static_cast<std::size_t>(rng.below(free.size()))];
}

// Offers each edge to H with probability h_percent, keeping deg_H <= d and
// the colouring proper.
Precolouring grow_h(Rng& rng, const Graph& g, const ListAssignment& lists, int d, int h_percent) {
  Precolouring pre;
  std::vector<int> deg_h(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<ColourSet> used(static_cast<std::size_t>(g.num_vertices()));
  for (std::size_t i : shuffled_indices(rng, static_cast<std::size_t>(g.num_edges()))) {
    if (!rng.chance(static_cast<std::uint64_t>(h_percent), 100)) continue;
    const auto e = static_cast<EdgeId>(i);
    const auto u = static_cast<std::size_t>(g.edge(e).u);
    const auto v = static_cast<std::size_t>(g.edge(e).v);
    if (deg_h[u] >= d || deg_h[v] >= d) continue;
    const auto c = pick_colour(rng, lists.at(e), used[u], used[v]);
    if (!c) continue;
    pre.set(e, *c);
    ++deg_h[u];
    ++deg_h[v];
    used[u].insert(*c);
    used[v].insert(*c);
  }
  return pre;
}

bool connected_without(const Graph& g, const std::vector<char>& alive, std::size_t skip) {
  if (g.num_vertices() == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(v)) {
      const auto ei = static_cast<std::size_t>(e);
      if (ei == skip || !alive[ei]) continue;
      const VertexId w = g.edge(e).other(v);
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == g.num_vertices();
}

}  // namespace

ProblemInstance gen_fig1(int Delta, int t) {
  require(Delta >= 2, "fig1 needs Delta >= 2");
  require(t >= 1, "fig1 needs t >= 1");
  ProblemInstance inst;
  Graph& g = inst.graph;
  g = Graph(1 + Delta);
  for (VertexId leaf = 1; leaf <= Delta; ++leaf) g.add_edge(0, leaf);
  inst.precol.set(0, Delta);
  for (VertexId leaf = 1; leaf <= Delta; ++leaf)
    for (Colour c = 1; c <= Delta - 1; ++c) inst.precol.set(g.add_edge(leaf, g.add_vertex()), c);
  inst.params = {Delta, t, Delta};
  inst.lists = ListAssignment::range(g, 1, Delta + t);
  inst.rotation = RotationSystem::from_incidence(g);
  return inst;
}

ProblemInstance gen_fig2(int Delta, int d, int t) {
  require(d >= 1 && d < Delta, "fig2 needs 1 <= d < Delta");
  require(t >= 1, "fig2 needs t >= 1");
  ProblemInstance inst;
  Graph& g = inst.graph;
  g = Graph(1 + Delta);
  for (VertexId leaf = 1; leaf <= Delta; ++leaf) g.add_edge(0, leaf);
  for (VertexId leaf = 1; leaf <= Delta; ++leaf)
    for (Colour c = 1; c <= d; ++c) inst.precol.set(g.add_edge(leaf, g.add_vertex()), c);
  inst.params = {Delta, t, d};
  inst.lists = ListAssignment::range(g, 1, Delta + t);
  inst.rotation = RotationSystem::from_incidence(g);
  return inst;
}

ProblemInstance gen_random_planar_instance(const RandomInstanceOptions& o) {
  require(o.n >= 1, "n must be >= 1");
  require(o.Delta >= 1, "Delta must be >= 1");
  require(o.t >= 1, "t must be >= 1");
  require(o.d >= 0, "d must be >= 0");
  require(o.adversarial || o.d <= o.t, "d > t needs adversarial mode");
  require(o.slack >= 0, "slack must be >= 0");
  require(o.keep_percent >= 0 && o.keep_percent <= 100 && o.h_percent >= 0 && o.h_percent <= 100,
          "percentages must lie in [0, 100]");
  Rng rng(o.seed);
  const Triangulation tri = stacked_triangulation(rng, o.n);
  std::vector<int> deg(static_cast<std::size_t>(o.n), 0);
  std::vector<char> keep(tri.edges.size(), 0);
  for (std::size_t i : shuffled_indices(rng, tri.edges.size())) {
    const auto u = static_cast<std::size_t>(tri.edges[i].u);
    const auto v = static_cast<std::size_t>(tri.edges[i].v);
    if (deg[u] >= o.Delta || deg[v] >= o.Delta) continue;
    if (!rng.chance(static_cast<std::uint64_t>(o.keep_percent), 100)) continue;
    keep[i] = 1;
    ++deg[u];
    ++deg[v];
  }
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < tri.edges.size(); ++i)
    if (keep[i]) kept.push_back(tri.edges[i]);

  ProblemInstance inst;
  inst.graph = build(o.n, kept);
  inst.rotation = planar_rotation(inst.graph);
  inst.params = {o.Delta, o.t, o.d};
  inst.lists = make_lists(rng, inst.graph, o.Delta + o.t, o.lists, o.slack);
  inst.precol = grow_h(rng, inst.graph, inst.lists, o.d, o.h_percent);
  inst.seed = o.seed;
  return inst;
}

ProblemInstance gen_random_planar_instance(std::uint64_t seed, int n, int Delta, int t, int d) {
  RandomInstanceOptions o;
  o.seed = seed;
  o.n = n;
  o.Delta = Delta;
  o.t = t;
  o.d = d;
  return gen_random_planar_instance(o);
}

EmbeddedGraph gen_random_planar_graph(std::uint64_t seed, int n, int drop_percent) {
  require(n >= 1, "n must be >= 1");
  Rng rng(seed);
  const Triangulation tri = stacked_triangulation(rng, n);
  const Graph full = build(n, tri.edges);
  std::vector<char> alive(tri.edges.size(), 1);
  for (std::size_t i : shuffled_indices(rng, tri.edges.size())) {
    if (!rng.chance(static_cast<std::uint64_t>(drop_percent), 100)) continue;
    if (connected_without(full, alive, i)) alive[i] = 0;
  }
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < tri.edges.size(); ++i)
    if (alive[i]) kept.push_back(tri.edges[i]);
  EmbeddedGraph out{build(n, kept), {}};
  out.rotation = *planar_rotation(out.graph);
  return out;
}

Graph gen_random_graph(std::uint64_t seed, int n, int edge_percent) {
  Rng rng(seed);
  Graph g(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (rng.chance(static_cast<std::uint64_t>(edge_percent), 100)) g.add_edge(u, v);
  return g;
}

ProblemInstance gen_random_bipartite_instance(const RandomBipartiteOptions& o) {
  require(o.nx >= 0 && o.ny >= 0, "side sizes must be >= 0");
  require(o.t >= 1 && o.d >= 0, "need t >= 1 and d >= 0");
  Rng rng(o.seed);
  ProblemInstance inst;
  Graph& g = inst.graph;
  g = Graph(o.nx + o.ny);
  for (VertexId x = 0; x < o.nx; ++x)
    for (VertexId y = o.nx; y < o.nx + o.ny; ++y)
      if (rng.chance(static_cast<std::uint64_t>(o.edge_percent), 100)) g.add_edge(x, y);
  inst.params = {g.max_degree(), o.t, o.d};
  inst.lists = make_lists(rng, g, inst.params.Delta + o.t, o.lists, o.slack);
  inst.precol = grow_h(rng, g, inst.lists, o.d, o.h_percent);
  inst.seed = o.seed;
  return inst;
}

ListAssignment gen_tight_lists(const Graph& g, std::uint64_t seed, int extra) {
  Rng rng(seed);
  const int universe = g.max_degree() + extra;
  ListAssignment lists;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const int size = std::max(g.degree(g.edge(e).u), g.degree(g.edge(e).v));
    lists.set(e, random_list(rng, size, universe));
  }
  return lists;
}

ProblemInstance gen_hub_instance(const HubOptions& o) {
  require(o.Delta >= 2 && o.t >= 1, "hubs need Delta >= 2 and t >= 1");
  require(o.poles >= 2, "need at least two poles");
  require(o.poles != 3 || (o.Delta % 2 == 0 && o.Delta >= 4), "three poles need an even Delta >= 4");
  require(o.poles <= 3 || o.poles % 2 == 0, "more than three poles must be an even number");
  Rng rng(o.seed);
  // Rim counts per consecutive pole pair; every pole ends with degree Delta.
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::vector<int> rims;
  if (o.poles == 2) {
    pairs.push_back({0, 1});
    rims.push_back(o.Delta);
  } else if (o.poles == 3) {
    for (int i = 0; i < 3; ++i) {
      pairs.push_back({i, (i + 1) % 3});
      rims.push_back((o.Delta - 2) / 2);
    }
  } else {
    const int a = rng.between(1, o.Delta - 1);
    for (int i = 0; i < o.poles; ++i) {
      pairs.push_back({i, (i + 1) % o.poles});
      rims.push_back(i % 2 == 0 ? a : o.Delta - a);
    }
  }
  ProblemInstance inst;
  Graph& g = inst.graph;
  g = Graph(o.poles);
  if (o.poles == 3)
    for (const auto& [p, q] : pairs) g.add_edge(p, q);
  std::vector<VertexId> rim_vertices;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (int r = 0; r < rims[i]; ++r) {
      const VertexId w = g.add_vertex();
      rim_vertices.push_back(w);
      g.add_edge(pairs[i].first, w);
      g.add_edge(pairs[i].second, w);
    }
  std::vector<EdgeId> leaf_edges;
  for (VertexId w : rim_vertices)
    for (int k = 0; k < o.t; ++k) leaf_edges.push_back(g.add_edge(w, g.add_vertex()));
  inst.params = {o.Delta, o.t, o.t};
  inst.lists = make_lists(rng, g, o.Delta + o.t, o.lists, o.slack);
  for (std::size_t i = 0; i < rim_vertices.size(); ++i) {
    ColourSet used;
    for (int k = 0; k < o.t; ++k) {
      const EdgeId e = leaf_edges[i * static_cast<std::size_t>(o.t) + static_cast<std::size_t>(k)];
      const auto c = pick_colour(rng, inst.lists.at(e), used, {});
      inst.precol.set(e, *c);
      used.insert(*c);
    }
  }
  inst.rotation = planar_rotation(g);
  inst.seed = o.seed;
  return inst;
}

ProblemInstance gen_nonplanar_h_instance(std::uint64_t seed, int n, int Delta, int t, int d) {
  require(n >= 6, "need n >= 6 for a non-planar completion");
  require(d >= 1 && d <= t, "need 1 <= d <= t");
  Rng rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    RandomInstanceOptions o;
    o.seed = rng.next();
    o.n = n;
    o.Delta = Delta;
    o.t = t;
    o.d = d;
    o.h_percent = 0;
    ProblemInstance inst = gen_random_planar_instance(o);
    inst.rotation.reset();
    Graph& g = inst.graph;
    std::vector<int> deg_h(static_cast<std::size_t>(n), 0);
    std::vector<ColourSet> used(static_cast<std::size_t>(n));
    std::vector<std::pair<VertexId, VertexId>> candidates;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (!g.find_edge(u, v)) candidates.push_back({u, v});
    rng.shuffle(std::span<std::pair<VertexId, VertexId>>(candidates));
    for (const auto& [u, v] : candidates) {
      const auto ui = static_cast<std::size_t>(u), vi = static_cast<std::size_t>(v);
      if (g.degree(u) >= Delta || g.degree(v) >= Delta || deg_h[ui] >= d || deg_h[vi] >= d) continue;
      const ColourSet list = [&] {
        ColourSet s;
        for (Colour c = 1; c <= Delta + t; ++c) s.insert(c);
        return s;
      }();
      const auto c = pick_colour(rng, list, used[ui], used[vi]);
      if (!c) continue;
      const EdgeId e = g.add_edge(u, v);
      inst.lists.set(e, list);
      inst.precol.set(e, *c);
      ++deg_h[ui];
      ++deg_h[vi];
      used[ui].insert(*c);
      used[vi].insert(*c);
      if (!is_planar(g)) {
        inst.seed = seed;
        return inst;
      }
    }
  }
  throw InstanceError("could not make G non-planar within the degree bounds");
}

}  // namespace lec
