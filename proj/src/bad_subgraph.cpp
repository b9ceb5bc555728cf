#include <algorithm>
#include <deque>
#include <sstream>

#include "lec/solver.hpp"

namespace lec {

ReductionView ReductionView::of(const ProblemInstance& instance) {
  ReductionView view;
  const Graph& g = instance.graph;
  view.degree.resize(static_cast<std::size_t>(g.num_vertices()));
  for (VertexId v = 0; v < g.num_vertices(); ++v) view.degree[static_cast<std::size_t>(v)] = g.degree(v);
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (!instance.precol.contains(e)) view.free_edges.push_back({e, g.edge(e).u, g.edge(e).v});
  view.params = instance.params;
  return view;
}

bool BadSubgraphParams::valid_for(const Params& p) const {
  return a0 >= p.t + 1 && a0 <= a && b0 > a && b0 <= p.Delta && a + b0 >= p.Delta + p.t + 1;
}

void BadSubgraphParams::validate(const Params& p) const {
  if (valid_for(p)) return;
  std::ostringstream os;
  os << "bad-subgraph parameters (a0=" << a0 << ", a=" << a << ", b0=" << b0 << ") violate a0 >= t+1, a0 <= a, "
     << "a < b0 <= Delta, a + b0 >= Delta + t + 1 for Delta=" << p.Delta << ", t=" << p.t;
  throw InstanceError(os.str());
}

BadSubgraphParams BadSubgraphParams::proof_family(const Params& p, int ell, int k) {
  return {p.t + 2, p.t + 5 - ell - k, p.Delta - 3 + ell + k};
}

std::vector<BadSubgraphParams> BadSubgraphParams::scan(const Params& p, bool wide) {
  std::vector<BadSubgraphParams> out;
  const auto ell = p.ell();
  if (!wide && ell) {
    for (int k = 0; k <= 3 - *ell; ++k) {
      const auto bp = proof_family(p, *ell, k);
      if (bp.valid_for(p)) out.push_back(bp);
    }
    return out;
  }
  for (int a = p.t + 1; a <= p.Delta; ++a)
    for (int b0 = std::max(a + 1, p.Delta + p.t + 1 - a); b0 <= p.Delta; ++b0) out.push_back({p.t + 1, a, b0});
  return out;
}

namespace {

struct PeelSetup {
  std::vector<char> member;  // vertex in A u B
  std::vector<char> in_a;
  std::vector<int> threshold;
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj;  // X edges
  std::vector<int> deg_x;
};

PeelSetup setup(const ReductionView& view, const BadSubgraphParams& bp) {
  bp.validate(view.params);
  const auto& [Delta, t, d] = view.params;
  const auto n = view.degree.size();
  PeelSetup s;
  s.member.assign(n, 0);
  s.in_a.assign(n, 0);
  s.threshold.assign(n, 0);
  s.adj.resize(n);
  s.deg_x.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const int deg = view.degree[v];
    if (deg < 0) continue;
    if (deg >= bp.a0 && deg <= bp.a) {
      s.member[v] = 1;
      s.in_a[v] = 1;
      s.threshold[v] = deg - t;
    } else if (deg >= bp.b0 && deg <= Delta) {
      s.member[v] = 1;
      s.threshold[v] = bp.a + deg - (Delta + t);
    }
  }
  for (const auto& fe : view.free_edges) {
    const auto u = static_cast<std::size_t>(fe.u);
    const auto v = static_cast<std::size_t>(fe.v);
    if (!s.member[u] || !s.member[v] || s.in_a[u] == s.in_a[v]) continue;
    s.adj[u].push_back({fe.v, fe.id});
    s.adj[v].push_back({fe.u, fe.id});
    ++s.deg_x[u];
    ++s.deg_x[v];
  }
  return s;
}

BadSubgraph collect(const PeelSetup& s, const std::vector<char>& alive) {
  BadSubgraph out;
  for (std::size_t v = 0; v < alive.size(); ++v) {
    if (!alive[v]) continue;
    out.vertices.push_back(static_cast<VertexId>(v));
    for (const auto& [w, e] : s.adj[v])
      if (alive[static_cast<std::size_t>(w)] && static_cast<std::size_t>(w) > v) out.edges.push_back(e);
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace

BadSubgraph peel_bad_subgraph(const ReductionView& view, const BadSubgraphParams& bp) {
  PeelSetup s = setup(view, bp);
  std::vector<char> alive = s.member;
  std::vector<int> deg = s.deg_x;
  std::deque<VertexId> queue;
  for (std::size_t v = 0; v < alive.size(); ++v)
    if (alive[v] && deg[v] < s.threshold[v]) queue.push_back(static_cast<VertexId>(v));
  while (!queue.empty()) {
    const auto v = static_cast<std::size_t>(queue.front());
    queue.pop_front();
    if (!alive[v]) continue;
    alive[v] = 0;
    for (const auto& [w, e] : s.adj[v]) {
      const auto wi = static_cast<std::size_t>(w);
      if (!alive[wi]) continue;
      if (--deg[wi] < s.threshold[wi]) queue.push_back(w);
    }
  }
  return collect(s, alive);
}

BadSubgraph peel_bad_subgraph(const ReductionView& view, const BadSubgraphParams& bp, std::span<const VertexId> order) {
  PeelSetup s = setup(view, bp);
  std::vector<char> alive = s.member;
  std::vector<int> deg = s.deg_x;
  for (;;) {
    std::size_t victim = alive.size();
    for (VertexId v : order) {
      const auto vi = static_cast<std::size_t>(v);
      if (vi < alive.size() && alive[vi] && deg[vi] < s.threshold[vi]) {
        victim = vi;
        break;
      }
    }
    if (victim == alive.size()) break;
    alive[victim] = 0;
    for (const auto& [w, e] : s.adj[victim])
      if (alive[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
  }
  return collect(s, alive);
}

BadSubgraph peel_bad_subgraph(const ProblemInstance& instance, const BadSubgraphParams& bp) {
  return peel_bad_subgraph(ReductionView::of(instance), bp);
}

PeelCountCheck peel_count_check(const ReductionView& view, const BadSubgraphParams& bp) {
  const PeelSetup s = setup(view, bp);
  const auto& [Delta, t, d] = view.params;
  const auto classes = view.classes();
  PeelCountCheck out;
  const int size_a = classes.count_range(bp.a0, bp.a);
  out.lhs = static_cast<long long>(t + 1 - d) * size_a;
  for (int i = bp.b0; i <= Delta; ++i)
    out.rhs += static_cast<long long>(bp.a + i - 1 - (Delta + t)) * classes.count(i);
  const bool any_vertex = size_a + classes.count_range(bp.b0, Delta) > 0;
  out.strict = bp.a0 > t + 1 && bp.a + bp.b0 > Delta + t + 1 && any_vertex;
  out.hypothesis = true;
  for (std::size_t u = 0; u < s.in_a.size(); ++u)
    if (s.in_a[u] && s.deg_x[u] < view.degree[u] - d) out.hypothesis = false;
  return out;
}

PeelCountCheck peel_count_check(const ProblemInstance& instance, const BadSubgraphParams& bp) {
  return peel_count_check(ReductionView::of(instance), bp);
}

}  // namespace lec
