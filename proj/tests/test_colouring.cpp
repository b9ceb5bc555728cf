#include <doctest.h>

#include <algorithm>

#include "lec/generators.hpp"
#include "lec/random.hpp"
#include "lec/solver.hpp"
#include "support/brute.hpp"
#include "support/graphs.hpp"

using namespace lec;

namespace {

ProblemInstance plain(const Graph& g, int Delta, int t, int d) {
  ProblemInstance inst;
  inst.graph = g;
  inst.params = {Delta, t, d};
  inst.lists = ListAssignment::range(g, 1, Delta + t);
  return inst;
}

int count_kind(const Verdict& v, ViolationKind kind) {
  return static_cast<int>(std::count_if(v.violations.begin(), v.violations.end(),
                                        [&](const Violation& x) { return x.kind == kind; }));
}

}  // namespace

TEST_CASE("single edge coloured from its list verifies") {
  ProblemInstance inst = plain(fixtures::path(2), 1, 1, 0);
  inst.lists.set(0, {1, 2});
  CHECK(verify_colouring(inst, FullColouring(std::vector<Colour>{1})).ok());
  const Verdict off = verify_colouring(inst, FullColouring(std::vector<Colour>{3}));
  CHECK(count_kind(off, ViolationKind::NotInList) == 1);
}

TEST_CASE("adjacent equal colours are a conflict") {
  const ProblemInstance inst = plain(fixtures::cycle(3), 2, 1, 0);
  const Verdict v = verify_colouring(inst, FullColouring(std::vector<Colour>{1, 1, 2}));
  CHECK_FALSE(v.ok());
  CHECK(count_kind(v, ViolationKind::Conflict) == 1);
  const Verdict all = verify_colouring(inst, FullColouring(std::vector<Colour>{1, 1, 1}));
  CHECK(count_kind(all, ViolationKind::Conflict) == 3);
  FullColouring partial(3);
  partial.set(0, 1);
  CHECK(count_kind(verify_colouring(inst, partial), ViolationKind::Uncoloured) == 2);
}

TEST_CASE("verifier agrees with the pairwise check on the first family") {
  const ProblemInstance inst = gen_fig1(3, 2);
  const auto found = oracle_solve(inst);
  REQUIRE(found.coloured());
  CHECK(verify_colouring(inst, found.colouring).ok());
  CHECK(brute::valid_extension(inst, found.colouring.values()));
  for (EdgeId e = 1; e < 3; ++e) {
    FullColouring bad = found.colouring;
    bad.set(e, 6);
    CHECK(count_kind(verify_colouring(inst, bad), ViolationKind::NotInList) == 1);
    CHECK_FALSE(brute::valid_extension(inst, bad.values()));
  }
  FullColouring moved = found.colouring;
  moved.set(0, 4);
  CHECK(count_kind(verify_colouring(inst, moved), ViolationKind::PrecolourChanged) == 1);
}

TEST_CASE("residual list drops colours of incident precoloured edges") {
  ProblemInstance inst = plain(fixtures::path(3), 4, 1, 1);
  inst.precol.set(0, 3);
  const ListAssignment res = residual_lists(inst);
  CHECK_FALSE(res.contains(0));
  CHECK(res.at(1) == ColourSet{1, 2, 4, 5});
}

TEST_CASE("equal colours on both sides remove one colour") {
  ProblemInstance inst = plain(fixtures::path(4), 4, 1, 1);
  inst.precol.set(0, 3);
  inst.precol.set(2, 3);
  const ListAssignment res = residual_lists(inst);
  CHECK(res.size_of(1) == inst.lists.size_of(1) - 1);
}

TEST_CASE("residual list properties on random instances") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomInstanceOptions o;
    o.seed = seed;
    o.n = 10;
    o.Delta = 6;
    o.t = 3;
    o.d = 3;
    o.lists = ListMode::Random;
    o.slack = 4;
    const ProblemInstance inst = gen_random_planar_instance(o);
    const Graph& g = inst.graph;
    const ListAssignment res = residual_lists(inst);
    CAPTURE(seed);
    for (EdgeId e : inst.uncoloured_edges()) {
      const ColourSet& l = inst.lists.at(e);
      const ColourSet& r = res.at(e);
      CHECK(std::includes(l.begin(), l.end(), r.begin(), r.end()));
      const int bound = static_cast<int>(l.size()) - inst.precol.degree_in(g, g.edge(e).u) -
                        inst.precol.degree_in(g, g.edge(e).v);
      CHECK(static_cast<int>(r.size()) >= bound);
      for (Colour c : l) {
        if (r.count(c)) continue;
        bool seen = false;
        for (const auto& [f, fc] : inst.precol) seen = seen || (fc == c && g.edges_adjacent(e, f));
        CHECK(seen);
      }
    }
    // Monotone: a bigger list never gives a smaller residual.
    ProblemInstance grown = inst;
    for (EdgeId e : inst.uncoloured_edges()) grown.lists.at(e).insert(1000 + e);
    const ListAssignment res2 = residual_lists(grown);
    for (EdgeId e : inst.uncoloured_edges()) {
      const ColourSet& a = res.at(e);
      const ColourSet& b = res2.at(e);
      CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
    }
  }
}

TEST_CASE("subgraph residual lists") {
  const ProblemInstance inst = gen_random_planar_instance(7, 9, 5, 2, 0);
  REQUIRE(inst.precol.empty());
  std::vector<EdgeId> all(static_cast<std::size_t>(inst.graph.num_edges()));
  for (EdgeId e = 0; e < inst.graph.num_edges(); ++e) all[static_cast<std::size_t>(e)] = e;
  const ListAssignment lj = residual_lists_for_subgraph(inst, FullColouring(inst.graph.num_edges()), all);
  for (EdgeId e : all) CHECK(lj.at(e) == inst.lists.at(e));

  // Size bound with J a random edge subset and the rest coloured properly.
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const ProblemInstance p = gen_random_planar_instance(seed, 9, 6, 3, 2);
    const auto sol = oracle_solve(p);
    if (!sol.coloured()) continue;
    Rng rng(seed);
    std::vector<EdgeId> j;
    for (EdgeId e : p.uncoloured_edges())
      if (rng.chance(1, 2)) j.push_back(e);
    FullColouring partial = sol.colouring;
    for (EdgeId e : j) partial.set(e, kNoColour);
    const ListAssignment l = residual_lists_for_subgraph(p, partial, j);
    const Graph& g = p.graph;
    auto deg_j = [&](VertexId v) {
      return static_cast<int>(std::count_if(j.begin(), j.end(), [&](EdgeId e) { return g.edge(e).has(v); }));
    };
    for (EdgeId e : j) {
      const auto [u, v] = std::pair{g.edge(e).u, g.edge(e).v};
      const int bound = p.params.Delta + p.params.t - g.degree(u) - g.degree(v) + deg_j(u) + deg_j(v);
      CHECK(static_cast<int>(l.at(e).size()) >= bound);
      CHECK(l.at(e).count(sol.colouring[e]) == 1);
    }
  }
}

TEST_CASE("instance validation") {
  ProblemInstance ok = plain(fixtures::path(3), 2, 1, 1);
  ok.precol.set(0, 1);
  CHECK_NOTHROW(ok.validate());

  ProblemInstance t0 = ok;
  t0.params.t = 0;
  CHECK_THROWS_AS(t0.validate(), InstanceError);

  ProblemInstance small_delta = ok;
  small_delta.params.Delta = 1;
  CHECK_THROWS_AS(small_delta.validate(), InstanceError);

  ProblemInstance small_d = ok;
  small_d.params.d = 0;
  CHECK_THROWS_AS(small_d.validate(), InstanceError);

  ProblemInstance off_list = ok;
  off_list.precol.set(0, 9);
  CHECK_THROWS_AS(off_list.validate(), InstanceError);

  ProblemInstance improper = ok;
  improper.params.d = 2;
  improper.precol.set(1, 1);
  CHECK_THROWS_AS(improper.validate(), InstanceError);

  ProblemInstance missing = ok;
  missing.lists = ListAssignment();
  missing.lists.set(0, {1, 2, 3});
  CHECK_THROWS_AS(missing.validate(), InstanceError);
  CHECK_FALSE(missing.problems().empty());
}

TEST_CASE("extension hypotheses") {
  CHECK(delta_threshold(5, 5) == 21);
  CHECK(delta_threshold(5, 4) == 13);
  CHECK(delta_threshold(5, 3) == 11);
  CHECK(delta_threshold(5, 2) == 9);
  ProblemInstance inst = plain(fixtures::path(3), 17, 1, 1);
  CHECK(inst.meets_extension_hypotheses());
  inst.params.Delta = 16;
  inst.lists = ListAssignment::range(inst.graph, 1, 17);
  CHECK_FALSE(inst.meets_extension_hypotheses());
  ProblemInstance far = plain(fixtures::path(3), 2, 5, 1);
  CHECK(far.meets_extension_hypotheses());
  far.lists.set(0, {1, 2});
  CHECK_FALSE(far.meets_extension_hypotheses());
  CHECK(Params{10, 3, 1}.ell() == 2);
  CHECK_FALSE(Params{10, 5, 1}.ell());
  CHECK_FALSE(Params{10, 1, 2}.ell());
}

TEST_CASE("verification survives deleting uncoloured edges") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const ProblemInstance inst = gen_random_planar_instance(seed, 8, 5, 2, 1);
    const auto sol = oracle_solve(inst);
    REQUIRE(sol.coloured());
    REQUIRE(verify_colouring(inst, sol.colouring).ok());
    std::vector<EdgeId> drop;
    for (EdgeId e : inst.uncoloured_edges())
      if (e % 2 == static_cast<EdgeId>(seed % 2)) drop.push_back(e);
    const SubInstance sub = delete_edges(inst, drop);
    FullColouring restricted(sub.instance.graph.num_edges());
    for (EdgeId e = 0; e < sub.instance.graph.num_edges(); ++e)
      restricted.set(e, sol.colouring[sub.kept[static_cast<std::size_t>(e)]]);
    CHECK(verify_colouring(sub.instance, restricted).ok());
  }
}

TEST_CASE("split instance pulls back") {
  const ProblemInstance inst = gen_fig2(4, 2, 2);
  const SplitInstance s = split_instance(inst);
  CHECK(s.instance.graph.num_edges() == inst.graph.num_edges() + 8);
  std::multiset<Colour> before, after;
  for (const auto& [e, c] : inst.precol) before.insert(c);
  for (const auto& [e, c] : s.instance.precol) after.insert(c);
  CHECK(after.size() == 2 * before.size());
  for (Colour c : before) CHECK(after.count(c) == 2 * before.count(c));
  for (VertexId v = 0; v < inst.graph.num_vertices(); ++v) CHECK(s.instance.graph.degree(v) == inst.graph.degree(v));

  const auto sol = oracle_solve(s.instance);
  REQUIRE(sol.coloured());
  CHECK(verify_colouring(inst, pull_back(sol.colouring, s.split)).ok());
}
