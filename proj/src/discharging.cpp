#include "lec/discharging.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace lec {

std::string to_string(const Charge& q) {
  std::ostringstream os;
  os << q.numerator();
  if (q.denominator() != 1) os << '/' << q.denominator();
  return os.str();
}

const char* to_string(Rule rule) {
  switch (rule) {
    case Rule::FaceShare: return "face_share";
    case Rule::LeafSupport: return "leaf_support";
    case Rule::PotDraw: return "pot_draw";
    case Rule::PotDeposit: return "pot_deposit";
  }
  return "?";
}

Charge ChargeLedger::total() const {
  Charge sum = pot;
  for (const auto& c : vertex) sum += c;
  for (const auto& c : face) sum += c;
  return sum;
}

void ChargeLedger::move(Rule rule, ElementKind from_kind, int from, ElementKind to_kind, int to, const Charge& amount) {
  auto slot = [this](ElementKind k, int i) -> Charge& {
    switch (k) {
      case ElementKind::Vertex: return vertex.at(static_cast<std::size_t>(i));
      case ElementKind::Face: return face.at(static_cast<std::size_t>(i));
      case ElementKind::Pot: break;
    }
    return pot;
  };
  slot(from_kind, from) -= amount;
  slot(to_kind, to) += amount;
  log.push_back({rule, from_kind, from, to_kind, to, amount});
}

InitialCharges initial_charges(const Graph& g, const RotationSystem& rot, const SurfaceSpec& surface) {
  InitialCharges out;
  out.faces = faces(g, rot);
  out.ledger.vertex.reserve(static_cast<std::size_t>(g.num_vertices()));
  for (VertexId v = 0; v < g.num_vertices(); ++v) out.ledger.vertex.emplace_back(3 * g.degree(v) - 6);
  out.ledger.face.assign(out.faces.faces.size(), Charge(-6));
  out.total = out.ledger.total();
  out.within_bound = out.total <= Charge(-6 * surface.euler);
  return out;
}

int pot_q(int j, int Delta, int ell) { return j - Delta + 4 - ell; }

Charge pot_deposit(int j, int Delta, int ell) {
  const int q = pot_q(j, Delta, ell);
  return Charge(q * (q + 1), 2 * (ell + 1));
}

Charge pot_draw(int i, int t, int ell) { return Charge(t + 6 - ell - i); }

RuleApplication apply_rules(const ChargeLedger& initial, const ProblemInstance& instance, const RotationSystem& rot) {
  const Graph& g = instance.graph;
  const auto& [Delta, t, d] = instance.params;
  RuleApplication out;
  out.ledger = initial;
  ChargeLedger& L = out.ledger;
  const Charge start = L.total();
  auto check = [&] {
    if (L.total() != start) out.conserved = false;
  };

  const auto traversal = faces(g, rot);
  if (traversal.faces.size() != L.face.size()) throw DischargingError("ledger face count does not match the rotation system");
  for (const Face& f : traversal.faces) {
    const int m = face_class(f, g);
    if (m == 0) continue;
    for (VertexId v : f.vertices())
      if (g.degree(v) >= 3) L.move(Rule::FaceShare, ElementKind::Vertex, v, ElementKind::Face, f.id, Charge(6, m));
  }
  check();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 1) continue;
    const VertexId w = g.edge(g.incident(v).front()).other(v);
    L.move(Rule::LeafSupport, ElementKind::Vertex, w, ElementKind::Vertex, v, Charge(3));
  }
  check();

  const auto ell = instance.params.ell();
  if (!ell) return out;
  out.pot_rules_applied = true;
  const int draw_lo = t + 2, draw_hi = t + 5 - *ell;
  const int dep_lo = Delta - 3 + *ell, dep_hi = Delta;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const int deg = g.degree(v);
    const bool draws = deg >= draw_lo && deg <= draw_hi;
    const bool deposits = deg >= dep_lo && deg <= dep_hi;
    if (draws && deposits) {
      std::ostringstream os;
      os << "vertex " << v << " of degree " << deg << " lies in both pot windows [" << draw_lo << "," << draw_hi
         << "] and [" << dep_lo << "," << dep_hi << "]: Delta-3+ell > t+5-ell fails (Delta=" << Delta << ", t=" << t
         << ", ell=" << *ell << ")";
      throw DischargingError(os.str());
    }
    if (draws) L.move(Rule::PotDraw, ElementKind::Pot, 0, ElementKind::Vertex, v, pot_draw(deg, t, *ell));
    if (deposits) L.move(Rule::PotDeposit, ElementKind::Vertex, v, ElementKind::Pot, 0, pot_deposit(deg, Delta, *ell));
  }
  check();
  return out;
}

Charge deposit_vertex_bound(int deg, int Delta, int d, int ell) {
  const int h = Delta - deg + ell;
  return Charge(Delta - d) - (Charge(6 + h - ell) + Charge((4 - h) * (5 - h), 2 * (ell + 1)));
}

std::vector<VertexBound> vertex_bound_report(const ProblemInstance& instance, const RotationSystem& rot,
                                             const RuleApplication& applied) {
  const Graph& g = instance.graph;
  const auto& [Delta, t, d] = instance.params;
  const auto traversal = faces(g, rot);
  std::vector<std::vector<int>> faces_at(static_cast<std::size_t>(g.num_vertices()));
  std::vector<int> m_of(traversal.faces.size());
  for (const Face& f : traversal.faces) {
    m_of[static_cast<std::size_t>(f.id)] = face_class(f, g);
    for (VertexId v : f.vertices()) faces_at[static_cast<std::size_t>(v)].push_back(f.id);
  }
  std::vector<Charge> p(static_cast<std::size_t>(g.num_vertices()), Charge(0));
  std::vector<Charge> local = applied.ledger.vertex;
  for (const Transfer& tr : applied.ledger.log) {
    if (tr.rule == Rule::PotDraw) {
      p[static_cast<std::size_t>(tr.to)] += tr.amount;
      local[static_cast<std::size_t>(tr.to)] -= tr.amount;
    } else if (tr.rule == Rule::PotDeposit) {
      p[static_cast<std::size_t>(tr.from)] -= tr.amount;
      local[static_cast<std::size_t>(tr.from)] += tr.amount;
    }
  }
  const auto ell = instance.params.ell();

  std::vector<VertexBound> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    VertexBound b;
    b.vertex = v;
    b.degree = g.degree(v);
    b.faces = static_cast<int>(faces_at[static_cast<std::size_t>(v)].size());
    for (EdgeId e : g.incident(v))
      if (g.degree(g.edge(e).other(v)) == 1) ++b.leaves;
    b.p = p[static_cast<std::size_t>(v)];
    b.after_local = local[static_cast<std::size_t>(v)];
    b.actual = applied.ledger.vertex[static_cast<std::size_t>(v)];
    if (b.degree == 1) {
      b.bound = b.p;
      b.premises = g.degree(g.edge(g.incident(v).front()).other(v)) >= 2;
    } else if (b.degree >= 2) {
      b.bound = Charge(b.degree - 6 - d) + b.p;
      const bool faces_ok = std::all_of(faces_at[static_cast<std::size_t>(v)].begin(), faces_at[static_cast<std::size_t>(v)].end(),
                                        [&](int f) { return m_of[static_cast<std::size_t>(f)] >= 3; });
      b.premises = faces_ok && b.leaves <= d && b.faces + b.leaves <= b.degree;
      if (ell && applied.pot_rules_applied && b.degree >= Delta - 3 + *ell && b.degree <= Delta)
        b.table_bound = deposit_vertex_bound(b.degree, Delta, d, *ell);
    }
    out.push_back(std::move(b));
  }
  return out;
}

PotInequality pot_inequality_sides(const ProblemInstance& instance) {
  const auto& [Delta, t, d] = instance.params;
  const auto ell = instance.params.ell();
  if (!ell) throw DischargingError("pot inequality needs t - d in {0,1,2,3}");
  const auto classes = degree_classes(instance.graph);
  PotInequality out;
  out.ell = *ell;
  for (int i = t + 2; i <= t + 5 - *ell; ++i) out.lhs += pot_draw(i, t, *ell) * classes.count(i);
  for (int j = Delta - 3 + *ell; j <= Delta; ++j) out.rhs += pot_deposit(j, Delta, *ell) * classes.count(j);
  long long decomposed = 0;
  for (int k = 0; k <= 3 - *ell; ++k) {
    out.a_sizes.push_back(classes.count_range(t + 2, t + 5 - *ell - k));
    decomposed += out.a_sizes.back();
  }
  out.lhs_matches_decomposition = out.lhs == Charge(decomposed);
  out.telescoping_identity = true;
  for (int j = Delta - 3 + *ell; j <= Delta; ++j) {
    const int q = pot_q(j, Delta, *ell);
    long long sum = 0;
    for (int k = 0; k <= q - 1; ++k) sum += q - k;
    if (sum * 2 != static_cast<long long>(q) * (q + 1)) out.telescoping_identity = false;
  }
  return out;
}

Charge AuditReport::final_total() const { return applied ? applied->ledger.total() : initial.total; }

int AuditReport::negative_vertices() const {
  if (!applied) return 0;
  return static_cast<int>(std::count_if(applied->ledger.vertex.begin(), applied->ledger.vertex.end(),
                                        [](const Charge& c) { return c < 0; }));
}

int AuditReport::negative_faces() const {
  if (!applied) return 0;
  return static_cast<int>(std::count_if(applied->ledger.face.begin(), applied->ledger.face.end(),
                                        [](const Charge& c) { return c < 0; }));
}

namespace {

constexpr std::size_t kMaxWitnesses = 12;

void witness(StructureCheck& c, const std::string& w) {
  c.passed = false;
  if (c.witnesses.size() < kMaxWitnesses) c.witnesses.push_back(w);
}

}  // namespace

AuditReport audit(const ProblemInstance& instance, const RotationSystem& rot, const SurfaceSpec& surface) {
  const Graph& g = instance.graph;
  const auto& [Delta, t, d] = instance.params;
  AuditReport r;
  r.params = instance.params;
  r.surface = surface;
  r.initial = initial_charges(g, rot, surface);
  for (const Face& f : r.initial.faces.faces) r.face_class.push_back(face_class(f, g));

  try {
    r.applied = apply_rules(r.initial.ledger, instance, rot);
  } catch (const DischargingError& err) {
    r.rule_error = err.what();
    // Local rules alone, so the report still carries a final ledger.
    ProblemInstance local = instance;
    local.params.d = -100;  // ell undefined: pot rules skipped
    r.applied = apply_rules(r.initial.ledger, local, rot);
  }
  r.vertices = vertex_bound_report(instance, rot, *r.applied);
  if (instance.params.ell()) r.pot = pot_inequality_sides(instance);

  auto& checks = r.checks;
  {
    StructureCheck c{"euler_bound", "initial total <= -6 * euler characteristic", true, {}};
    if (!r.initial.within_bound) witness(c, "total " + to_string(r.initial.total));
    if (!r.initial.faces.planar()) witness(c, r.initial.faces.diagnostic());
    checks.push_back(std::move(c));
  }
  {
    StructureCheck c{"uncoloured_degree_sum", "every uncoloured edge uv has deg(u)+deg(v) >= Delta+t+2", true, {}};
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (instance.precol.contains(e)) continue;
      const int s = g.degree(g.edge(e).u) + g.degree(g.edge(e).v);
      if (s < Delta + t + 2) witness(c, "edge " + std::to_string(e) + " degree sum " + std::to_string(s));
    }
    checks.push_back(std::move(c));
  }
  {
    StructureCheck c{"low_degree_edges_precoloured", "every vertex of degree 1..t+1 has only precoloured edges", true, {}};
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (g.degree(v) < 1 || g.degree(v) > t + 1) continue;
      for (EdgeId e : g.incident(v))
        if (!instance.precol.contains(e))
          witness(c, "vertex " + std::to_string(v) + " (degree " + std::to_string(g.degree(v)) + ") edge " + std::to_string(e));
    }
    checks.push_back(std::move(c));
  }
  {
    StructureCheck c{"no_low_degree_vertices", "no vertex has degree in [2, t+1]", true, {}};
    for (VertexId v : degree_classes(g).range(2, t + 1))
      witness(c, "vertex " + std::to_string(v) + " degree " + std::to_string(g.degree(v)));
    checks.push_back(std::move(c));
  }
  {
    StructureCheck c{"leaf_or_high_degree", "every vertex is a leaf on a precoloured edge or has degree >= t+2", true, {}};
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      const int deg = g.degree(v);
      const bool leaf_ok = deg == 1 && instance.precol.contains(g.incident(v).front());
      if (!leaf_ok && deg < t + 2) witness(c, "vertex " + std::to_string(v) + " degree " + std::to_string(deg));
    }
    checks.push_back(std::move(c));
  }
  {
    StructureCheck c{"faces_have_three_major_vertices", "every face has >= 3 boundary vertices of degree >= 3", true, {}};
    for (std::size_t f = 0; f < r.face_class.size(); ++f)
      if (r.face_class[f] < 3) witness(c, "face " + std::to_string(f) + " class " + std::to_string(r.face_class[f]));
    checks.push_back(std::move(c));
  }
  if (const auto ell = instance.params.ell()) {
    StructureCheck disjoint{"pot_windows_disjoint", "Delta-3+ell > t+5-ell", true, {}};
    if (!(Delta - 3 + *ell > t + 5 - *ell)) witness(disjoint, "windows overlap for Delta=" + std::to_string(Delta));
    if (!r.rule_error.empty()) witness(disjoint, r.rule_error);
    checks.push_back(std::move(disjoint));
    StructureCheck pot{"pot_inequality", "pot draws are strictly below pot deposits", true, {}};
    if (!r.pot->strict()) witness(pot, "draws " + to_string(r.pot->lhs) + " >= deposits " + to_string(r.pot->rhs));
    checks.push_back(std::move(pot));
  }
  {
    StructureCheck c{"vertex_bounds", "final vertex charge >= its lower bound wherever the bound's premises hold", true, {}};
    for (const auto& b : r.vertices)
      if (!b.holds()) witness(c, "vertex " + std::to_string(b.vertex) + " charge " + to_string(b.actual) + " < " + to_string(*b.bound));
    checks.push_back(std::move(c));
  }
  {
    StructureCheck c{"conservation", "total charge unchanged by every rule", true, {}};
    if (!r.applied->conserved) witness(c, "total drifted");
    checks.push_back(std::move(c));
  }
  {
    StructureCheck c{"final_charges_nonnegative", "every vertex, face and the pot end nonnegative", true, {}};
    const auto& L = r.applied->ledger;
    for (std::size_t v = 0; v < L.vertex.size(); ++v)
      if (L.vertex[v] < 0) witness(c, "vertex " + std::to_string(v) + " " + to_string(L.vertex[v]));
    for (std::size_t f = 0; f < L.face.size(); ++f)
      if (L.face[f] < 0) witness(c, "face " + std::to_string(f) + " " + to_string(L.face[f]));
    if (L.pot < 0) witness(c, "pot " + to_string(L.pot));
    checks.push_back(std::move(c));
  }
  return r;
}

std::string render_table(const AuditReport& r) {
  std::ostringstream os;
  const auto& p = r.params;
  os << "Delta=" << p.Delta << " t=" << p.t << " d=" << p.d;
  if (auto ell = p.ell()) os << " ell=" << *ell;
  os << " euler=" << r.surface.euler << "\n";
  os << "initial total " << to_string(r.initial.total) << "  final total " << to_string(r.final_total())
     << "  pot " << to_string(r.applied->ledger.pot) << "\n";
  if (!r.rule_error.empty()) os << "rule error: " << r.rule_error << "\n";
  if (r.pot)
    os << "pot draws " << to_string(r.pot->lhs) << " vs deposits " << to_string(r.pot->rhs) << "\n";
  os << "\n";
  for (const auto& c : r.checks) {
    os << (c.passed ? "  ok    " : "  FAIL  ") << std::left << std::setw(34) << c.name << c.description << "\n";
    for (const auto& w : c.witnesses) os << "          - " << w << "\n";
  }
  os << "\n" << std::right << std::setw(6) << "vertex" << std::setw(5) << "deg" << std::setw(4) << "x" << std::setw(4)
     << "y" << std::setw(8) << "p" << std::setw(10) << "local" << std::setw(10) << "final" << std::setw(10) << "bound"
     << std::setw(10) << "closed" << "  premises\n";
  for (const auto& b : r.vertices) {
    os << std::setw(6) << b.vertex << std::setw(5) << b.degree << std::setw(4) << b.faces << std::setw(4) << b.leaves
       << std::setw(8) << to_string(b.p) << std::setw(10) << to_string(b.after_local) << std::setw(10)
       << to_string(b.actual) << std::setw(10) << (b.bound ? to_string(*b.bound) : "-") << std::setw(10)
       << (b.table_bound ? to_string(*b.table_bound) : "-") << "  " << (b.premises ? "yes" : "no") << "\n";
  }
  return os.str();
}

}  // namespace lec
