#include <algorithm>
#include <bit>
#include <map>

#include "lec/solver.hpp"

namespace lec {

namespace {

using Word = std::uint64_t;

// Colour sets as fixed-width bitsets over the colours appearing in the
// uncoloured edges' lists.
class BitOracle {
 public:
  BitOracle(const ProblemInstance& instance, std::uint64_t budget) : inst_(instance), budget_(budget) {
    const Graph& g = instance.graph;
    free_ = instance.uncoloured_edges();
    std::map<Colour, int> index;
    for (EdgeId e : free_)
      for (Colour c : instance.lists.at(e)) index.emplace(c, 0);
    for (auto& [c, i] : index) {
      i = static_cast<int>(colour_of_.size());
      colour_of_.push_back(c);
    }
    words_ = std::max<std::size_t>(1, (colour_of_.size() + 63) / 64);
    blocked_.assign(static_cast<std::size_t>(g.num_vertices()) * words_, 0);
    for (const auto& [e, c] : instance.precol) {
      auto it = index.find(c);
      if (it == index.end()) continue;
      set_bit(block(g.edge(e).u), it->second);
      set_bit(block(g.edge(e).v), it->second);
    }
    list_.assign(free_.size() * words_, 0);
    for (std::size_t i = 0; i < free_.size(); ++i)
      for (Colour c : instance.lists.at(free_[i])) set_bit(&list_[i * words_], index.at(c));
    slot_of_.assign(static_cast<std::size_t>(g.num_edges()), -1);
    for (std::size_t i = 0; i < free_.size(); ++i) slot_of_[static_cast<std::size_t>(free_[i])] = static_cast<int>(i);
    chosen_.assign(free_.size(), -1);
  }

  SolveOutcome run() {
    SolveOutcome out;
    const bool found = branch(free_.size());
    out.stats.search_nodes = nodes_;
    if (found) {
      out.kind = OutcomeKind::Coloured;
      out.colouring = colouring_from_precolouring(inst_);
      for (std::size_t i = 0; i < free_.size(); ++i)
        out.colouring.set(free_[i], colour_of_[static_cast<std::size_t>(chosen_[i])]);
      out.detail = "extension found by exhaustive search";
    } else if (aborted_) {
      out.kind = OutcomeKind::BudgetExceeded;
      out.detail = "node budget of " + std::to_string(budget_) + " exhausted";
    } else {
      out.kind = OutcomeKind::Infeasible;
      out.detail = "search space exhausted after " + std::to_string(nodes_) + " nodes";
    }
    return out;
  }

 private:
  Word* block(VertexId v) { return &blocked_[static_cast<std::size_t>(v) * words_]; }
  static void set_bit(Word* w, int i) { w[i / 64] |= Word{1} << (i % 64); }
  static void clear_bit(Word* w, int i) { w[i / 64] &= ~(Word{1} << (i % 64)); }
  static bool test_bit(const Word* w, int i) { return (w[i / 64] >> (i % 64)) & 1U; }

  int options(std::size_t slot, Word* scratch) {
    const Edge& ed = inst_.graph.edge(free_[slot]);
    const Word* bu = block(ed.u);
    const Word* bv = block(ed.v);
    int n = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      scratch[w] = list_[slot * words_ + w] & ~bu[w] & ~bv[w];
      n += std::popcount(scratch[w]);
    }
    return n;
  }

  bool branch(std::size_t remaining) {
    if (remaining == 0) return true;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    std::vector<Word> avail(words_), scratch(words_);
    std::size_t pick = free_.size();
    int best = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < free_.size(); ++i) {
      if (chosen_[i] >= 0) continue;
      const int n = options(i, scratch.data());
      if (n < best) {
        best = n;
        pick = i;
        avail = scratch;
        if (n == 0) return false;
      }
    }
    const Edge& ed = inst_.graph.edge(free_[pick]);
    for (int c = 0; c < static_cast<int>(colour_of_.size()); ++c) {
      if (!test_bit(avail.data(), c)) continue;
      const bool had_u = test_bit(block(ed.u), c);
      const bool had_v = test_bit(block(ed.v), c);
      set_bit(block(ed.u), c);
      set_bit(block(ed.v), c);
      chosen_[pick] = c;
      if (neighbours_ok(ed, scratch.data()) && branch(remaining - 1)) return true;
      chosen_[pick] = -1;
      if (!had_u) clear_bit(block(ed.u), c);
      if (!had_v) clear_bit(block(ed.v), c);
      if (aborted_) return false;
    }
    return false;
  }

  bool neighbours_ok(const Edge& ed, Word* scratch) {
    for (VertexId w : {ed.u, ed.v})
      for (EdgeId f : inst_.graph.incident(w)) {
        const int s = slot_of_[static_cast<std::size_t>(f)];
        if (s >= 0 && chosen_[static_cast<std::size_t>(s)] < 0 && options(static_cast<std::size_t>(s), scratch) == 0)
          return false;
      }
    return true;
  }

  const ProblemInstance& inst_;
  std::uint64_t budget_;
  std::vector<EdgeId> free_;
  std::vector<Colour> colour_of_;
  std::size_t words_ = 1;
  std::vector<Word> blocked_;
  std::vector<Word> list_;
  std::vector<int> slot_of_;
  std::vector<int> chosen_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

SolveOutcome oracle_solve(const ProblemInstance& instance, std::uint64_t node_budget) {
  instance.validate();
  return BitOracle(instance, node_budget).run();
}

}  // namespace lec
