#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "lec/colouring.hpp"

namespace lec {

/// Exact charge arithmetic.
using Charge = boost::rational<long long>;

std::string to_string(const Charge& q);

enum class ElementKind { Vertex, Face, Pot };

/// Discharging rules, in application order.
enum class Rule {
  FaceShare,     ///< a face with m major vertices takes 6/m from each of them
  LeafSupport,   ///< a degree-1 vertex takes 3 from its neighbour
  PotDraw,       ///< degree i in [t+2, t+5-ell] takes t+6-ell-i from the pot
  PotDeposit,    ///< degree j in [Delta-3+ell, Delta] gives q(q+1)/(2(ell+1)) to the pot, q = j-Delta+4-ell
};
const char* to_string(Rule rule);

struct Transfer {
  Rule rule;
  ElementKind from_kind;
  int from;
  ElementKind to_kind;
  int to;
  Charge amount;
};

struct ChargeLedger {
  std::vector<Charge> vertex;
  std::vector<Charge> face;
  Charge pot{0};
  std::vector<Transfer> log;

  Charge total() const;
  void move(Rule rule, ElementKind from_kind, int from, ElementKind to_kind, int to, const Charge& amount);
};

struct SurfaceSpec {
  int euler = 2;
};

class DischargingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InitialCharges {
  ChargeLedger ledger;
  FaceTraversal faces;
  Charge total{0};         ///< 6|E| - 6|V| - 6|F|
  bool within_bound = false;  ///< total <= -6 * euler
};

/// alpha(v) = 3 deg(v) - 6, alpha(f) = -6, pot 0.
InitialCharges initial_charges(const Graph& g, const RotationSystem& rot, const SurfaceSpec& surface = {});

/// q(j) = j - Delta + 4 - ell.
int pot_q(int j, int Delta, int ell);
/// Charge a degree-j vertex deposits: q(q+1) / (2(ell+1)).
Charge pot_deposit(int j, int Delta, int ell);
/// Charge a degree-i vertex draws: t+6-ell-i.
Charge pot_draw(int i, int t, int ell);

struct RuleApplication {
  ChargeLedger ledger;
  bool conserved = true;  ///< total unchanged after every rule
  bool pot_rules_applied = false;
};

/// Applies the four rules to a copy of `initial`. Pot rules run only when
/// ell = t - d is in {0,1,2,3}. Throws DischargingError naming the vertex
/// when a vertex falls in both pot windows.
RuleApplication apply_rules(const ChargeLedger& initial, const ProblemInstance& instance, const RotationSystem& rot);

/// Closed form of the lower bound on a deposit vertex's final charge,
/// Delta - d - (6 + h - ell + (4-h)(5-h)/(2(ell+1))) with deg = Delta - h + ell.
Charge deposit_vertex_bound(int deg, int Delta, int d, int ell);

struct VertexBound {
  VertexId vertex = 0;
  int degree = 0;
  int faces = 0;   ///< x: distinct incident faces
  int leaves = 0;  ///< y: adjacent degree-1 vertices
  Charge p{0};     ///< net charge received from the pot
  Charge after_local{0};  ///< charge after the face and leaf rules
  Charge actual{0};
  std::optional<Charge> bound;  ///< deg - 6 - d + p (leaves: p)
  std::optional<Charge> table_bound;  ///< closed form for deposit vertices
  bool premises = false;  ///< incident faces have >= 3 major vertices, y <= d, x + y <= deg (leaves: neighbour not a leaf)
  bool holds() const { return !premises || !bound || actual >= *bound; }
};

std::vector<VertexBound> vertex_bound_report(const ProblemInstance& instance, const RotationSystem& rot,
                                             const RuleApplication& applied);

struct PotInequality {
  int ell = 0;
  Charge lhs{0};  ///< sum_{i=t+2}^{t+5-ell} (t+6-ell-i)|V_i|
  Charge rhs{0};  ///< sum_{j=Delta-3+ell}^{Delta} q(j)(q(j)+1)/(2(ell+1)) |V_j|
  std::vector<int> a_sizes;  ///< |A_k| = |V_[t+2, t+5-ell-k]|, k = 0..3-ell
  bool lhs_matches_decomposition = false;  ///< lhs == sum_k |A_k|
  bool telescoping_identity = false;       ///< sum_{k<q}(q-k) == q(q+1)/2 for each q used
  bool strict() const { return lhs < rhs; }
};

/// Requires ell = t - d in {0,1,2,3}.
PotInequality pot_inequality_sides(const ProblemInstance& instance);

struct StructureCheck {
  std::string name;
  std::string description;
  bool passed = true;
  std::vector<std::string> witnesses;
};

struct AuditReport {
  Params params;
  SurfaceSpec surface;
  InitialCharges initial;
  std::optional<RuleApplication> applied;
  std::string rule_error;  ///< set when the pot windows overlap at some vertex
  std::vector<int> face_class;
  std::vector<VertexBound> vertices;
  std::optional<PotInequality> pot;
  std::vector<StructureCheck> checks;

  Charge final_total() const;
  int negative_vertices() const;
  int negative_faces() const;
};

/// Runs the whole argument on a concrete embedded instance and records which
/// structural premise fails.
AuditReport audit(const ProblemInstance& instance, const RotationSystem& rot, const SurfaceSpec& surface = {});

/// Fixed-width text rendering: premises, charge totals, per-vertex bounds.
std::string render_table(const AuditReport& report);

}  // namespace lec
