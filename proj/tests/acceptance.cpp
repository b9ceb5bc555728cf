// Acceptance run: one PASS/FAIL line per criterion, exit code 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "lec/bipartite.hpp"
#include "lec/discharging.hpp"
#include "lec/generators.hpp"
#include "lec/random.hpp"
#include "lec/solver.hpp"
#include "lec/vizing.hpp"
#include "support/brute.hpp"
#include "support/graphs.hpp"

using namespace lec;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Failures are collected, first one kept for the report line.
struct Tally {
  int runs = 0;
  int failures = 0;
  std::string first;
  void fail(std::string why) {
    if (failures++ == 0) first = std::move(why);
  }
  Result result(const std::string& summary) const {
    if (failures == 0) return {true, summary};
    return {false, fmt("%d of %d failed; first: %s", failures, runs, first.c_str())};
  }
};

Result fig1_sharpness() {
  const auto start = Clock::now();
  const auto t1 = oracle_solve(gen_fig1(3, 1)).kind;
  const auto t2 = oracle_solve(gen_fig1(3, 2)).kind;
  const double secs = seconds_since(start);
  const bool ok = t1 == OutcomeKind::Infeasible && t2 == OutcomeKind::Coloured && secs < 1.0;
  return {ok, fmt("Delta=3: t=1 %s, t=2 %s, %.3f s", to_string(t1), to_string(t2), secs)};
}

Result fig2_sharpness() {
  const auto start = Clock::now();
  const auto a1 = oracle_solve(gen_fig2(4, 2, 1)).kind;
  const auto a2 = oracle_solve(gen_fig2(4, 2, 2)).kind;
  const auto b2 = oracle_solve(gen_fig2(5, 3, 2)).kind;
  const auto b3 = oracle_solve(gen_fig2(5, 3, 3)).kind;
  const double secs = seconds_since(start);
  const bool ok = a1 == OutcomeKind::Infeasible && a2 == OutcomeKind::Coloured && b2 == OutcomeKind::Infeasible &&
                  b3 == OutcomeKind::Coloured && secs < 10.0;
  return {ok, fmt("(4,2): t=1 %s, t=2 %s; (5,3): t=2 %s, t=3 %s; %.3f s", to_string(a1), to_string(a2),
                  to_string(b2), to_string(b3), secs)};
}

Result bipartite_extension() {
  Tally tally;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Rng rng(seed ^ 0x5eedULL);
    RandomBipartiteOptions o;
    o.seed = seed;
    o.nx = rng.between(1, 12);
    o.ny = rng.between(1, 12);
    o.edge_percent = rng.between(20, 90);
    o.t = rng.between(1, 4);
    o.d = rng.between(0, o.t);
    o.lists = rng.chance(1, 2) ? ListMode::Random : ListMode::Uniform;
    o.slack = rng.between(0, 6);
    o.h_percent = rng.between(0, 80);
    const ProblemInstance inst = gen_random_bipartite_instance(o);
    ++tally.runs;
    try {
      const FullColouring col = extend_bipartite(inst);
      const Verdict v = verify_colouring(inst, col);
      if (!v) tally.fail(fmt("seed %llu: %s", static_cast<unsigned long long>(seed), v.violations.front().describe().c_str()));
    } catch (const std::exception& err) {
      tally.fail(fmt("seed %llu: %s", static_cast<unsigned long long>(seed), err.what()));
    }
  }
  return tally.result(fmt("%d/%d extended and verified", tally.runs - tally.failures, tally.runs));
}

Result bipartite_tight_lists() {
  Tally tally;
  int fallbacks = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Rng rng(seed ^ 0xb1b1ULL);
    RandomBipartiteOptions o;
    o.seed = seed;
    o.nx = rng.between(1, 15);
    o.ny = rng.between(1, 30 - o.nx);
    o.edge_percent = rng.between(15, 95);
    o.h_percent = 0;
    const Graph g = gen_random_bipartite_instance(o).graph;
    const ListAssignment lists = gen_tight_lists(g, seed, rng.between(0, 4));
    std::vector<ColourSet> per_edge;
    for (EdgeId e = 0; e < g.num_edges(); ++e) per_edge.push_back(lists.at(e));
    ++tally.runs;
    const auto out = list_edge_colour_bipartite(Multigraph::from(g), *find_bipartition(g), per_edge);
    if (out.status != SearchStatus::Found) {
      tally.fail(fmt("seed %llu: no colouring", static_cast<unsigned long long>(seed)));
      continue;
    }
    fallbacks += out.route == BipartiteRoute::Fallback;
    ProblemInstance inst;
    inst.graph = g;
    inst.lists = lists;
    inst.params = {std::max(1, g.max_degree()), 1, 0};
    const Verdict v = verify_colouring(inst, FullColouring(out.colours));
    if (!v) tally.fail(fmt("seed %llu: %s", static_cast<unsigned long long>(seed), v.violations.front().describe().c_str()));
  }
  return tally.result(fmt("%d/%d coloured, %d via fallback", tally.runs - tally.failures, tally.runs, fallbacks));
}

Result oracle_equivalence() {
  Tally tally;
  int small = 0, coloured = 0, hypothesis = 0, hubs = 0;
  SolveOptions reductions_only;
  reductions_only.exact_completion = false;
  auto check_hypothesis = [&](const ProblemInstance& inst, const std::string& name) {
    ++hypothesis;
    const SolveOutcome r = solve(inst, reductions_only);
    if (r.kind == OutcomeKind::HypothesisViolation) tally.fail(name + ": HypothesisViolation: " + r.detail);
    else if (!r.coloured()) tally.fail(name + ": " + to_string(r.kind));
  };
  for (std::uint64_t seed = 0; seed < 900; ++seed) {
    Rng rng(seed ^ 0x0acaULL);
    RandomInstanceOptions o;
    o.seed = seed;
    o.n = rng.between(2, 9);
    o.t = rng.between(1, 6);
    const int kind = rng.between(0, 3);
    if (kind == 0) {  // meets the hypotheses
      o.d = rng.between(std::max(0, o.t - 3), o.t);
      o.Delta = o.t - o.d >= 4 ? rng.between(3, 8) : delta_threshold(o.t, o.d) + rng.between(0, 2);
    } else if (kind == 1) {  // small Delta, lists just Delta+t
      o.d = rng.between(0, o.t);
      o.Delta = rng.between(2, 6);
    } else if (kind == 2) {  // d > t
      o.adversarial = true;
      o.d = o.t + rng.between(1, 2);
      o.Delta = rng.between(o.d, o.d + 3);
    } else {  // random lists
      o.d = rng.between(0, o.t);
      o.Delta = rng.between(2, 6);
      o.lists = ListMode::Random;
      o.slack = rng.between(1, 5);
    }
    o.keep_percent = rng.between(40, 100);
    o.h_percent = rng.between(20, 90);
    ProblemInstance inst = gen_random_planar_instance(o);
    if (seed % 3 == 0) {  // lists of size max{deg} or one less, drawn from a small range
      inst.precol = Precolouring();
      inst.lists = gen_tight_lists(inst.graph, seed, 1);
      for (EdgeId e = 0; e < inst.graph.num_edges(); ++e) {
        ColourSet& l = inst.lists.at(e);
        if (l.size() > 1 && rng.chance(1, 3)) l.erase(std::next(l.begin(), static_cast<std::ptrdiff_t>(rng.below(l.size()))));
      }
    }
    if (inst.uncoloured_edges().size() > 10) continue;
    ++small;
    ++tally.runs;
    const std::string name = fmt("seed %llu", static_cast<unsigned long long>(seed));
    const SolveOutcome s = solve(inst);
    const SolveOutcome x = oracle_solve(inst);
    if (s.kind == OutcomeKind::BudgetExceeded || x.kind == OutcomeKind::BudgetExceeded) {
      tally.fail(name + ": budget exceeded");
      continue;
    }
    if (s.coloured() != x.coloured()) tally.fail(name + ": solve " + to_string(s.kind) + ", oracle " + to_string(x.kind));
    coloured += s.coloured();
    if (inst.meets_extension_hypotheses()) check_hypothesis(inst, name);
  }
  for (int Delta = 2; Delta <= 6; ++Delta)
    for (int t = 1; t <= 3; ++t) {
      for (const ProblemInstance& inst : {gen_fig1(Delta, t), gen_fig2(Delta, std::min(Delta - 1, 3), t)}) {
        if (inst.uncoloured_edges().size() > 10) continue;
        ++small;
        ++tally.runs;
        const SolveOutcome s = solve(inst);
        const SolveOutcome x = oracle_solve(inst);
        if (s.kind != x.kind) tally.fail(fmt("family Delta=%d t=%d: solve %s, oracle %s", Delta, t, to_string(s.kind), to_string(x.kind)));
        coloured += s.coloured();
      }
    }
  // Larger instances meeting the hypotheses, where the reductions do real work.
  for (int t = 1; t <= 4; ++t)
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      HubOptions h;
      h.seed = seed;
      h.t = t;
      h.Delta = 16 + t + static_cast<int>(seed % 2) * 2 + (16 + t) % 2;
      h.poles = seed % 4 == 3 ? 4 : 3;
      h.lists = seed % 2 ? ListMode::Random : ListMode::Uniform;
      h.slack = 3;
      const ProblemInstance inst = gen_hub_instance(h);
      if (!inst.meets_extension_hypotheses()) continue;
      ++tally.runs;
      ++hubs;
      check_hypothesis(inst, fmt("hubs t=%d seed %llu", t, static_cast<unsigned long long>(seed)));
    }
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    RandomInstanceOptions o;
    o.seed = seed;
    o.n = 20 + static_cast<int>(seed % 40);
    o.t = 1 + static_cast<int>(seed % 5);
    o.d = std::max(0, o.t - static_cast<int>(seed / 5 % 4));
    o.Delta = delta_threshold(o.t, o.d);
    o.h_percent = 70;
    const ProblemInstance inst = gen_random_planar_instance(o);
    if (!inst.meets_extension_hypotheses()) continue;
    ++tally.runs;
    check_hypothesis(inst, fmt("large seed %llu", static_cast<unsigned long long>(seed)));
  }
  if (small < 500) tally.fail(fmt("only %d instances with <= 10 uncoloured edges", small));
  return tally.result(fmt("%d small instances agree (%d coloured, %d not); %d hypothesis instances (%d hubs) reduce without search",
                          small, coloured, small - coloured, hypothesis, hubs));
}

Result vizing_bound() {
  Tally tally;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Rng rng(seed ^ 0x717aULL);
    const Graph g = gen_random_graph(seed, rng.between(1, 40), rng.between(5, 95));
    ++tally.runs;
    const FullColouring col = vizing_edge_colour(g);
    ProblemInstance inst;
    inst.graph = g;
    inst.params = {std::max(1, g.max_degree()), 1, 0};
    inst.lists = ListAssignment::range(g, 1, g.max_degree() + 1);
    const Verdict v = verify_colouring(inst, col);
    if (!v) tally.fail(fmt("seed %llu: %s", static_cast<unsigned long long>(seed), v.violations.front().describe().c_str()));
  }
  const Graph pet = fixtures::petersen();
  const int used = static_cast<int>(vizing_edge_colour(pet).palette().size());
  const bool three = brute::edge_colourable(pet, 3);
  if (used != 4 || three) tally.fail(fmt("Petersen used %d colours, 3-colourable=%d", used, three));
  return tally.result(fmt("%d graphs within Delta+1; Petersen uses 4, 3 impossible", tally.runs));
}

Result fresh_palette_bound() {
  Tally tally;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed ^ 0xf8e5ULL);
    RandomInstanceOptions o;
    o.seed = seed;
    o.n = rng.between(4, 40);
    o.Delta = rng.between(3, 10);
    o.t = rng.between(1, 4);
    o.d = rng.between(1, o.Delta);
    o.adversarial = true;
    o.h_percent = rng.between(20, 100);
    const ProblemInstance inst = gen_random_planar_instance(o);
    const Graph& g = inst.graph;
    // H recoloured with at most Delta(H)+1 <= d+1 colours.
    const std::vector<EdgeId> h = inst.precol.edges();
    Graph hg(g.num_vertices());
    for (EdgeId e : h) hg.add_edge(g.edge(e).u, g.edge(e).v);
    const FullColouring hc = vizing_edge_colour(hg);
    Precolouring precol;
    for (std::size_t i = 0; i < h.size(); ++i) precol.set(h[i], hc[static_cast<EdgeId>(i)]);
    const int d = precol.max_degree(g);
    ++tally.runs;
    const int h_colours = static_cast<int>(precol.palette().size());
    const FullColouring col = extend_fresh_palette(g, precol);
    const int total = static_cast<int>(col.palette().size());
    const std::string name = fmt("seed %llu", static_cast<unsigned long long>(seed));
    if (h_colours > d + 1) tally.fail(name + ": H uses too many colours");
    if (!brute::proper(g, col.values())) tally.fail(name + ": not proper");
    for (EdgeId e : h)
      if (col[e] != precol.at(e)) tally.fail(name + ": precoloured edge changed");
    if (total > g.max_degree() + d + 2) tally.fail(fmt("%s: %d colours > %d", name.c_str(), total, g.max_degree() + d + 2));
  }
  return tally.result(fmt("%d instances within Delta+d+2", tally.runs));
}

Result discharging_arithmetic() {
  Tally tally;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed ^ 0xd15cULL);
    const EmbeddedGraph eg = gen_random_planar_graph(seed, rng.between(3, 60), rng.between(0, 60));
    const Graph& g = eg.graph;
    const std::string name = fmt("seed %llu", static_cast<unsigned long long>(seed));
    ++tally.runs;
    const InitialCharges ic = initial_charges(g, eg.rotation);
    const long long formula = 6LL * g.num_edges() - 6LL * g.num_vertices() - 6LL * static_cast<long long>(ic.faces.faces.size());
    if (ic.total != Charge(formula) || ic.total != Charge(-12) || ic.ledger.total() != ic.total)
      tally.fail(name + ": initial total " + to_string(ic.total));

    ProblemInstance inst;
    inst.graph = g;
    inst.rotation = eg.rotation;
    const int t = rng.between(1, 4);
    const int d = rng.between(std::max(0, t - 3), t);
    inst.params = {std::max(g.max_degree(), delta_threshold(t, d)), t, d};
    inst.lists = ListAssignment::range(g, 1, inst.params.Delta + t);
    try {
      const RuleApplication applied = apply_rules(ic.ledger, inst, eg.rotation);
      if (!applied.conserved || applied.ledger.total() != ic.total) tally.fail(name + ": charge not conserved");
      const bool clean_faces = std::all_of(ic.faces.faces.begin(), ic.faces.faces.end(),
                                           [&](const Face& f) { return face_class(f, g) >= 3; });
      for (std::size_t f = 0; f < ic.faces.faces.size(); ++f) {
        const bool settled = applied.ledger.face[f] == Charge(0);
        if ((clean_faces || face_class(ic.faces.faces[f], g) > 0) && !settled)
          tally.fail(fmt("%s: face %zu ends at %s", name.c_str(), f, to_string(applied.ledger.face[f]).c_str()));
      }
    } catch (const DischargingError& err) {
      tally.fail(name + ": " + err.what());
    }
  }

  // The ten (ell, deg) cells, deg = Delta - h + ell.
  const std::map<std::pair<int, int>, Charge> cells{
      {{0, 0}, Charge(16)}, {{0, 1}, Charge(13)},    {{0, 2}, Charge(11)}, {{0, 3}, Charge(10)},
      {{1, 1}, Charge(9)},  {{1, 2}, Charge(17, 2)}, {{1, 3}, Charge(17, 2)}, {{2, 2}, Charge(7)},
      {{2, 3}, Charge(22, 3)}, {{3, 3}, Charge(25, 4)},
  };
  int cells_ok = 0;
  for (const auto& [key, term] : cells) {
    const auto [ell, h] = key;
    bool all = true;
    for (int d = 0; d <= 8; ++d)
      for (int extra = 0; extra <= 5; ++extra) {
        const int Delta = 16 + d + extra;
        all = all && deposit_vertex_bound(Delta - h + ell, Delta, d, ell) == Charge(Delta - d) - term;
      }
    if (all) ++cells_ok;
    else tally.fail(fmt("table cell ell=%d h=%d", ell, h));
  }
  return tally.result(fmt("%d graphs: totals -12, conserved, faces settle; %d/10 table cells", tally.runs, cells_ok));
}

// Interface graph: B hubs, A vertices joined mostly to hubs, padding by leaves.
ReductionView interface_view(std::uint64_t seed, BadSubgraphParams& bp) {
  Rng rng(seed);
  ReductionView v;
  const int t = rng.between(1, 4);
  const int d = rng.between(std::max(0, t - 3), t);
  const int ell = t - d;
  const int Delta = delta_threshold(t, d) + rng.between(0, 3);
  v.params = {Delta, t, d};
  bp = BadSubgraphParams::proof_family(v.params, ell, rng.between(0, 3 - ell));
  const int nb = rng.between(1, 24);
  const int na = rng.between(0, 2 * nb);
  const bool honest = rng.chance(9, 10);
  std::vector<int> cap;
  for (int i = 0; i < nb; ++i) {
    const int target = rng.between(bp.b0, Delta);
    v.degree.push_back(target);
    cap.push_back(target);
  }
  auto leaf_for = [&](VertexId) {
    v.degree.push_back(1);
  };
  for (int i = 0; i < na; ++i) {
    const VertexId u = static_cast<VertexId>(v.degree.size());
    const int target = rng.between(bp.a0, bp.a);
    v.degree.push_back(target);
    const int want = honest ? rng.between(std::max(0, target - d), target) : rng.between(0, target);
    int got = 0;
    std::vector<VertexId> hubs(static_cast<std::size_t>(nb));
    std::iota(hubs.begin(), hubs.end(), 0);
    rng.shuffle(std::span<VertexId>(hubs));
    for (VertexId b : hubs) {
      if (got == want) break;
      if (cap[static_cast<std::size_t>(b)] == 0) continue;
      --cap[static_cast<std::size_t>(b)];
      v.free_edges.push_back({static_cast<EdgeId>(v.free_edges.size()), u, b});
      ++got;
    }
    for (int k = got; k < target; ++k) leaf_for(u);
  }
  for (int b = 0; b < nb; ++b)
    for (int k = 0; k < cap[static_cast<std::size_t>(b)]; ++k) leaf_for(b);
  return v;
}

Result peel_fixed_point() {
  Tally tally;
  int empty_checked = 0, strict_checked = 0, nonempty = 0;
  auto examine = [&](const ReductionView& view, const BadSubgraphParams& bp, std::uint64_t seed, const std::string& name) {
    const BadSubgraph j = peel_bad_subgraph(view, bp);
    Rng rng(seed * 7919 + static_cast<std::uint64_t>(bp.a * 131 + bp.b0));
    std::vector<VertexId> order(view.degree.size());
    std::iota(order.begin(), order.end(), 0);
    for (int round = 0; round < 5; ++round) {
      rng.shuffle(std::span<VertexId>(order));
      if (!(peel_bad_subgraph(view, bp, order) == j)) tally.fail(name + ": deletion order changes the fixed point");
    }
    if (!j.empty()) {
      ++nonempty;
      return;
    }
    const PeelCountCheck c = peel_count_check(view, bp);
    if (!c.hypothesis) return;
    ++empty_checked;
    strict_checked += c.strict;
    if (!c.holds())
      tally.fail(fmt("%s: %lld %s %lld", name.c_str(), c.lhs, c.strict ? "<" : "<=", c.rhs));
  };
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed ^ 0x9ee1ULL);
    RandomInstanceOptions o;
    o.seed = seed;
    o.n = rng.between(6, 40);
    o.t = rng.between(1, 3);
    o.d = rng.between(0, o.t);
    o.Delta = rng.between(o.t + 3, 12);
    o.h_percent = rng.between(10, 80);
    const ProblemInstance inst = gen_random_planar_instance(o);
    ++tally.runs;
    const ReductionView view = ReductionView::of(inst);
    for (const auto& bp : BadSubgraphParams::scan(inst.params, true))
      examine(view, bp, seed, fmt("planar seed %llu (%d,%d,%d)", static_cast<unsigned long long>(seed), bp.a0, bp.a, bp.b0));
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    BadSubgraphParams family;
    const ReductionView view = interface_view(seed, family);
    ++tally.runs;
    const int ell = *view.params.ell();
    for (int k = 0; k <= 3 - ell; ++k) {
      const auto bp = BadSubgraphParams::proof_family(view.params, ell, k);
      examine(view, bp, seed, fmt("interface seed %llu k=%d", static_cast<unsigned long long>(seed), k));
    }
  }
  return tally.result(fmt("%d instances order independent; inequality held on %d empty peels (%d strict), %d nonempty",
                          tally.runs, empty_checked, strict_checked, nonempty));
}

Result split_transform() {
  Tally tally;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed ^ 0x5b11ULL);
    const int t = rng.between(1, 4);
    const int d = rng.between(std::max(1, t - 3), t);
    const int Delta = delta_threshold(t, d) + rng.between(0, 2);
    const ProblemInstance inst = gen_nonplanar_h_instance(seed, rng.between(6, 16), Delta, t, d);
    const std::string name = fmt("seed %llu", static_cast<unsigned long long>(seed));
    ++tally.runs;
    if (is_planar(inst.graph)) {
      tally.fail(name + ": G is planar");
      continue;
    }
    const SplitInstance s = split_instance(inst);
    if (!is_planar(s.instance.graph)) tally.fail(name + ": split graph is not planar");
    try {
      const SolveOutcome out = solve(s.instance);
      if (!out.coloured()) {
        tally.fail(name + ": " + to_string(out.kind) + " " + out.detail);
        continue;
      }
      const Verdict v = verify_colouring(inst, pull_back(out.colouring, s.split));
      if (!v) tally.fail(name + ": " + v.violations.front().describe());
    } catch (const std::exception& err) {
      tally.fail(name + ": " + err.what());
    }
  }
  return tally.result(fmt("%d non-planar instances solved through the split and verified", tally.runs));
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria{
      {"first family sharpness", fig1_sharpness},
      {"second family sharpness", fig2_sharpness},
      {"bipartite extension", bipartite_extension},
      {"bipartite tight lists", bipartite_tight_lists},
      {"solve/oracle equivalence", oracle_equivalence},
      {"Vizing bound", vizing_bound},
      {"fresh palette bound", fresh_palette_bound},
      {"discharging arithmetic", discharging_arithmetic},
      {"peel fixed point and count", peel_fixed_point},
      {"precoloured edge split", split_transform},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& err) {
      r = {false, std::string("exception: ") + err.what()};
    }
    failed += !r.pass;
    std::printf("%s %2zu %-28s %s (%.2f s)\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, r.detail.c_str(),
                seconds_since(start));
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
