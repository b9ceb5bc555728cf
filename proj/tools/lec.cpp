// Command-line front end: solve, search, verify, audit and generate
// precolouring-extension instances.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <atomic>
#include <iomanip>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "lec/bipartite.hpp"
#include "lec/discharging.hpp"
#include "lec/generators.hpp"
#include "lec/io.hpp"
#include "lec/solver.hpp"

namespace {

using namespace lec;

enum Exit : int { kOk = 0, kInputError = 1, kInfeasible = 2, kHypothesis = 3, kBudget = 4 };

int exit_code(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::Coloured: return kOk;
    case OutcomeKind::Infeasible: return kInfeasible;
    case OutcomeKind::HypothesisViolation: return kHypothesis;
    case OutcomeKind::BudgetExceeded: return kBudget;
  }
  return kInputError;
}

void print_colouring(const ProblemInstance& inst, const FullColouring& col) {
  for (EdgeId e = 0; e < inst.graph.num_edges(); ++e) {
    const Edge& ed = inst.graph.edge(e);
    std::cout << "  e" << e << " (" << ed.u << "," << ed.v << ") -> " << col[e]
              << (inst.precol.contains(e) ? "  [precoloured]" : "") << "\n";
  }
}

// A Coloured result only leaves the process after an independent check.
int report(const ProblemInstance& inst, SolveOutcome outcome, bool as_json) {
  if (outcome.coloured()) {
    const Verdict verdict = verify_colouring(inst, outcome.colouring);
    if (!verdict.ok()) {
      std::cerr << "internal error: colouring failed verification: " << verdict.violations.front().describe() << "\n";
      return kInputError;
    }
  }
  if (as_json) {
    std::cout << to_json(outcome).dump(1) << "\n";
  } else {
    std::cout << to_string(outcome.kind) << ": " << outcome.detail << "\n";
    const auto& s = outcome.stats;
    std::cout << "  greedy " << s.greedy_edges << ", splits " << s.vertex_splits << ", bipartite components "
              << s.bipartite_components << ", bad subgraphs " << s.bad_subgraphs << ", kernel fallbacks "
              << s.kernel_fallbacks << ", search nodes " << s.search_nodes << "\n";
    if (outcome.frozen) std::cout << "  stuck: " << outcome.frozen->reason << "\n";
    if (outcome.coloured()) print_colouring(inst, outcome.colouring);
  }
  return exit_code(outcome.kind);
}

void emit(const ProblemInstance& inst, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << dump_instance(inst);
    return;
  }
  std::ofstream file(out);
  if (!file) throw ParseError(out, "cannot write file");
  file << dump_instance(inst);
}

RotationSystem embedding_for(const ProblemInstance& inst) {
  if (inst.rotation) return *inst.rotation;
  if (auto rot = planar_rotation(inst.graph)) return *rot;
  throw ParseError("rotation", "no rotation given and the graph is not planar");
}

struct BenchRow {
  std::string file;
  std::string outcome;
  double ms = 0;
  int edges = 0;
  int uncoloured = 0;
};

BenchRow bench_one(const std::filesystem::path& path, const SolveOptions& options) {
  BenchRow row;
  row.file = path.filename().string();
  const auto start = std::chrono::steady_clock::now();
  try {
    const ProblemInstance inst = load_instance(path.string());
    row.edges = inst.graph.num_edges();
    row.uncoloured = static_cast<int>(inst.uncoloured_edges().size());
    row.outcome = to_string(solve(inst, options).kind);
  } catch (const std::exception& err) {
    row.outcome = std::string("error: ") + err.what();
  }
  row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"List edge colouring and precolouring extension on planar graphs"};
  app.require_subcommand(1);

  bool as_json = false;
  bool scan_wide = false;
  bool no_exact = false;
  std::uint64_t budget = 10'000'000;
  std::string file, colouring_file, out;

  auto* solve_cmd = app.add_subcommand("solve", "Extend the precolouring by the reduction algorithm");
  solve_cmd->add_option("file", file, "Instance JSON, - for stdin")->required();
  solve_cmd->add_flag("--json", as_json, "Machine-readable output");
  solve_cmd->add_flag("--scan-wide", scan_wide, "Scan every valid (a0, a, b0) for bad subgraphs");
  solve_cmd->add_flag("--no-exact", no_exact, "Report a hypothesis violation instead of searching when stuck");
  solve_cmd->add_option("--budget", budget, "Node budget for exact search");

  auto* oracle_cmd = app.add_subcommand("oracle", "Decide extendability by exhaustive search");
  oracle_cmd->add_option("file", file, "Instance JSON, - for stdin")->required();
  oracle_cmd->add_flag("--json", as_json, "Machine-readable output");
  oracle_cmd->add_option("--budget", budget, "Node budget");

  auto* verify_cmd = app.add_subcommand("verify", "Check a colouring against an instance");
  verify_cmd->add_option("file", file, "Instance JSON")->required();
  verify_cmd->add_option("colouring", colouring_file, "Colouring JSON")->required();
  verify_cmd->add_flag("--json", as_json, "Machine-readable output");

  int euler = 2;
  auto* audit_cmd = app.add_subcommand("audit", "Run the discharging rules on an embedded instance");
  audit_cmd->add_option("file", file, "Instance JSON, - for stdin")->required();
  audit_cmd->add_flag("--json", as_json, "Machine-readable output");
  audit_cmd->add_option("--euler", euler, "Euler characteristic of the surface (default: file's, else 2)");

  auto* bip_cmd = app.add_subcommand("bipartite-colour", "Colour the uncoloured edges of a bipartite instance");
  bip_cmd->add_option("file", file, "Instance JSON, - for stdin")->required();
  bip_cmd->add_flag("--json", as_json, "Machine-readable output");
  bip_cmd->add_option("--budget", budget, "Node budget for the fallback search");

  int jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  std::string dir;
  auto* bench_cmd = app.add_subcommand("bench", "Solve every *.json instance in a directory");
  bench_cmd->add_option("dir", dir, "Directory of instances")->required();
  bench_cmd->add_option("--jobs", jobs, "Parallel workers")->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--json", as_json, "Machine-readable output");
  bench_cmd->add_flag("--scan-wide", scan_wide, "Widened bad-subgraph scan");
  bench_cmd->add_option("--budget", budget, "Node budget for exact search");

  auto* gen_cmd = app.add_subcommand("generate", "Emit an instance");
  gen_cmd->require_subcommand(1);
  gen_cmd->add_option("-o,--out", out, "Output file (default stdout)");
  int Delta = 3, t = 1, d = 1, n = 8, slack = 0, keep = 100, h_percent = 50, poles = 3;
  std::uint64_t seed = 0;
  std::string list_mode = "uniform";
  bool adversarial = false;

  auto* fig1 = gen_cmd->add_subcommand("fig1", "Star with a coloured edge and coloured pendants");
  fig1->add_option("--Delta", Delta)->required();
  fig1->add_option("--t", t);

  auto* fig2 = gen_cmd->add_subcommand("fig2", "Uncoloured star with d coloured pendants per leaf");
  fig2->add_option("--Delta", Delta)->required();
  fig2->add_option("--d", d)->required();
  fig2->add_option("--t", t, "Default: d");

  auto* random = gen_cmd->add_subcommand("random", "Random planar instance");
  random->add_option("--seed", seed);
  random->add_option("--n", n);
  random->add_option("--Delta", Delta);
  random->add_option("--t", t);
  random->add_option("--d", d);
  random->add_option("--lists", list_mode)->check(CLI::IsMember({"uniform", "random"}));
  random->add_option("--slack", slack);
  random->add_option("--keep", keep, "Percent of triangulation edges kept");
  random->add_option("--h-percent", h_percent, "Percent of edges offered to H");
  random->add_flag("--adversarial", adversarial, "Allow d > t");

  auto* hubs = gen_cmd->add_subcommand("hubs", "Poles of degree Delta joined through rims with t coloured leaves");
  hubs->add_option("--seed", seed);
  hubs->add_option("--Delta", Delta);
  hubs->add_option("--t", t);
  hubs->add_option("--poles", poles);
  hubs->add_option("--lists", list_mode)->check(CLI::IsMember({"uniform", "random"}));
  hubs->add_option("--slack", slack);
  for (auto* sub : {fig1, fig2, random, hubs}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*solve_cmd) {
      const ProblemInstance inst = load_instance(file);
      SolveOptions options;
      options.scan_wide = scan_wide;
      options.exact_completion = !no_exact;
      options.node_budget = budget;
      return report(inst, solve(inst, options), as_json);
    }
    if (*oracle_cmd) {
      const ProblemInstance inst = load_instance(file);
      return report(inst, oracle_solve(inst, budget), as_json);
    }
    if (*verify_cmd) {
      const ProblemInstance inst = load_instance(file);
      const FullColouring col = parse_colouring(read_text(colouring_file), inst.graph.num_edges());
      const Verdict verdict = verify_colouring(inst, col);
      if (as_json) {
        std::cout << to_json(verdict).dump(1) << "\n";
      } else if (verdict.ok()) {
        std::cout << "ok\n";
      } else {
        for (const auto& v : verdict.violations) std::cout << v.describe() << "\n";
      }
      return verdict.ok() ? kOk : kInfeasible;
    }
    if (*audit_cmd) {
      const ProblemInstance inst = load_instance(file);
      SurfaceSpec surface;
      surface.euler = audit_cmd->count("--euler") ? euler : inst.euler.value_or(2);
      const AuditReport report = audit(inst, embedding_for(inst), surface);
      if (as_json)
        std::cout << to_json(report).dump(1) << "\n";
      else
        std::cout << render_table(report);
      return kOk;
    }
    if (*bip_cmd) {
      const ProblemInstance inst = load_instance(file);
      const auto bip = find_bipartition(inst.graph);
      if (!bip) throw ParseError("edges", "graph is not bipartite");
      const std::vector<EdgeId> free = inst.uncoloured_edges();
      const Multigraph sub = Multigraph::subgraph(inst.graph, free);
      const ListAssignment residual = residual_lists(inst);
      std::vector<ColourSet> lists;
      for (EdgeId e : free) lists.push_back(residual.at(e));
      BipartiteOptions options;
      options.node_budget = budget;
      BipartiteOutcome outcome;
      try {
        outcome = list_edge_colour_bipartite(sub, *bip, lists, options);
      } catch (const PreconditionError& err) {
        std::cerr << "hypothesis violated: " << err.what() << "\n";
        return kHypothesis;
      } catch (const BipartiteError& err) {
        std::cerr << "no colouring: " << err.what() << "\n";
        return kInfeasible;
      }
      if (outcome.status == SearchStatus::BudgetExceeded) {
        std::cerr << "node budget exhausted\n";
        return kBudget;
      }
      FullColouring col = colouring_from_precolouring(inst);
      for (std::size_t i = 0; i < free.size(); ++i) col.set(free[i], outcome.colours[i]);
      const Verdict verdict = verify_colouring(inst, col);
      if (!verdict.ok()) {
        std::cerr << "internal error: " << verdict.violations.front().describe() << "\n";
        return kInputError;
      }
      if (as_json) {
        json doc = to_json(outcome);
        doc["colouring"] = to_json(col)["colouring"];
        std::cout << doc.dump(1) << "\n";
      } else {
        std::cout << "Coloured via " << (outcome.route == BipartiteRoute::Kernel ? "kernel" : "fallback search") << " ("
                  << outcome.kernel_attempts << " kernel attempts)\n";
        print_colouring(inst, col);
      }
      return kOk;
    }
    if (*bench_cmd) {
      std::vector<std::filesystem::path> paths;
      for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json") paths.push_back(entry.path());
      std::sort(paths.begin(), paths.end());
      SolveOptions options;
      options.scan_wide = scan_wide;
      options.node_budget = budget;
      std::vector<BenchRow> rows(paths.size());
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> workers;
      for (int w = 0; w < std::min<int>(jobs, static_cast<int>(paths.size())); ++w)
        workers.emplace_back([&] {
          for (std::size_t i = next++; i < paths.size(); i = next++) rows[i] = bench_one(paths[i], options);
        });
      for (auto& th : workers) th.join();
      bool failed = false;
      json doc = json::array();
      for (const auto& row : rows) {
        failed = failed || row.outcome.rfind("error", 0) == 0;
        if (as_json) {
          doc.push_back({{"file", row.file}, {"outcome", row.outcome}, {"ms", row.ms}, {"edges", row.edges},
                         {"uncoloured", row.uncoloured}});
        } else {
          std::cout << std::left << std::setw(32) << row.file << std::setw(22) << row.outcome << std::right
                    << std::setw(6) << row.edges << std::setw(6) << row.uncoloured << std::setw(12) << std::fixed
                    << std::setprecision(2) << row.ms << " ms\n";
        }
      }
      if (as_json) std::cout << doc.dump(1) << "\n";
      return failed ? kInputError : kOk;
    }
    if (*gen_cmd) {
      const ListMode mode = list_mode == "random" ? ListMode::Random : ListMode::Uniform;
      if (*fig1) emit(gen_fig1(Delta, t), out);
      if (*fig2) emit(gen_fig2(Delta, d, fig2->count("--t") ? t : d), out);
      if (*random) {
        RandomInstanceOptions o;
        o.seed = seed;
        o.n = n;
        o.Delta = Delta;
        o.t = t;
        o.d = d;
        o.lists = mode;
        o.slack = slack;
        o.adversarial = adversarial;
        o.keep_percent = keep;
        o.h_percent = h_percent;
        emit(gen_random_planar_instance(o), out);
      }
      if (*hubs) {
        HubOptions o;
        o.seed = seed;
        o.Delta = hubs->count("--Delta") ? Delta : 18;
        o.t = t;
        o.poles = poles;
        o.lists = mode;
        o.slack = slack;
        emit(gen_hub_instance(o), out);
      }
      return kOk;
    }
  } catch (const ParseError& err) {
    std::cerr << "input error at " << err.what() << "\n";
    return kInputError;
  } catch (const InstanceError& err) {
    std::cerr << "invalid instance: " << err.what() << "\n";
    return kInputError;
  } catch (const GraphError& err) {
    std::cerr << "invalid graph: " << err.what() << "\n";
    return kInputError;
  } catch (const TheoremViolation& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return kInputError;
  }
  return kOk;
}
