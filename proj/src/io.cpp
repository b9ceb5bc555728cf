#include "lec/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <unordered_map>

namespace lec {

ParseError::ParseError(std::string where, const std::string& message)
    : std::runtime_error(where + ": " + message), where_(std::move(where)) {}

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

namespace {

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& err) {
    // err.byte is 1-based and points just past the offending character.
    const std::size_t stop = std::min<std::size_t>(err.byte == 0 ? 0 : err.byte - 1, text.size());
    int line = 1, column = 1;
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string message = err.what();
    if (auto pos = message.find("syntax error"); pos != std::string::npos) message = message.substr(pos);
    throw ParseError(std::to_string(line) + ":" + std::to_string(column), message);
  }
}

const json& field(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path.empty() ? key : path + "." + key, "required field missing");
  return *it;
}

long long as_integer(const json& node, const std::string& path) {
  if (!node.is_number_integer()) throw ParseError(path, std::string("expected an integer, found ") + node.type_name());
  return node.get<long long>();
}

int as_int(const json& node, const std::string& path) {
  const long long v = as_integer(node, path);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw ParseError(path, "integer out of range");
  return static_cast<int>(v);
}

const json& as_array(const json& node, const std::string& path) {
  if (!node.is_array()) throw ParseError(path, std::string("expected an array, found ") + node.type_name());
  return node;
}

const json& as_object(const json& node, const std::string& path) {
  if (!node.is_object()) throw ParseError(path, std::string("expected an object, found ") + node.type_name());
  return node;
}

long long parse_key(const std::string& key, const std::string& path) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != key.size()) throw ParseError(path, "key \"" + key + "\" is not an integer");
  return v;
}

EdgeId edge_key(const std::string& key, const std::string& path, int num_edges) {
  const long long e = parse_key(key, path);
  if (e < 0 || e >= num_edges) throw ParseError(path, "edge id " + key + " out of range [0," + std::to_string(num_edges) + ")");
  return static_cast<EdgeId>(e);
}

void check_format(const json& doc) {
  if (auto it = doc.find("format"); it != doc.end()) {
    const int version = as_int(*it, "format");
    if (version != kFormatVersion) throw ParseError("format", "unsupported format version " + std::to_string(version));
  }
}

}  // namespace

ProblemInstance parse_instance(std::string_view text) { return instance_from_json(parse_document(text)); }

ProblemInstance instance_from_json(const json& doc) {
  as_object(doc, "<root>");
  check_format(doc);
  ProblemInstance inst;

  std::unordered_map<long long, VertexId> dense;
  const json& vertices = as_array(field(doc, "vertices", ""), "vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string path = "vertices[" + std::to_string(i) + "]";
    const long long id = as_integer(vertices[i], path);
    if (!dense.emplace(id, static_cast<VertexId>(i)).second) throw ParseError(path, "duplicate vertex id " + std::to_string(id));
  }
  inst.graph = Graph(static_cast<int>(vertices.size()));
  auto vertex = [&](const json& node, const std::string& path) {
    const long long id = as_integer(node, path);
    auto it = dense.find(id);
    if (it == dense.end()) throw ParseError(path, "unknown vertex " + std::to_string(id));
    return it->second;
  };

  const json& edges = as_array(field(doc, "edges", ""), "edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string path = "edges[" + std::to_string(i) + "]";
    const json& pair = as_array(edges[i], path);
    if (pair.size() != 2) throw ParseError(path, "expected [u, v]");
    const VertexId u = vertex(pair[0], path + "[0]");
    const VertexId v = vertex(pair[1], path + "[1]");
    try {
      inst.graph.add_edge(u, v);
    } catch (const GraphError& err) {
      throw ParseError(path, err.what());
    }
  }
  const int m = inst.graph.num_edges();

  const json& params = as_object(field(doc, "params", ""), "params");
  inst.params.Delta = as_int(field(params, "Delta", "params"), "params.Delta");
  inst.params.t = as_int(field(params, "t", "params"), "params.t");
  inst.params.d = as_int(field(params, "d", "params"), "params.d");

  if (auto it = doc.find("rotation"); it != doc.end()) {
    as_object(*it, "rotation");
    std::vector<std::vector<EdgeId>> order(static_cast<std::size_t>(inst.graph.num_vertices()));
    for (const auto& [key, value] : it->items()) {
      const std::string path = "rotation." + key;
      auto v = dense.find(parse_key(key, path));
      if (v == dense.end()) throw ParseError(path, "unknown vertex " + key);
      const json& arr = as_array(value, path);
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string ep = path + "[" + std::to_string(i) + "]";
        const int e = as_int(arr[i], ep);
        if (e < 0 || e >= m) throw ParseError(ep, "edge id out of range");
        order[static_cast<std::size_t>(v->second)].push_back(e);
      }
    }
    RotationSystem rot(std::move(order));
    try {
      rot.validate(inst.graph);
    } catch (const GraphError& err) {
      throw ParseError("rotation", err.what());
    }
    inst.rotation = std::move(rot);
  }

  if (auto it = doc.find("lists"); it != doc.end()) {
    as_object(*it, "lists");
    for (const auto& [key, value] : it->items()) {
      const std::string path = "lists." + key;
      const EdgeId e = edge_key(key, path, m);
      const json& arr = as_array(value, path);
      ColourSet colours;
      for (std::size_t i = 0; i < arr.size(); ++i) colours.insert(as_int(arr[i], path + "[" + std::to_string(i) + "]"));
      inst.lists.set(e, std::move(colours));
    }
    for (EdgeId e = 0; e < m; ++e)
      if (!inst.lists.contains(e)) throw ParseError("lists", "edge " + std::to_string(e) + " has no list");
  } else {
    inst.lists = ListAssignment::range(inst.graph, 1, inst.params.Delta + inst.params.t);
  }

  if (auto it = doc.find("precoloured"); it != doc.end()) {
    as_object(*it, "precoloured");
    for (const auto& [key, value] : it->items()) {
      const std::string path = "precoloured." + key;
      inst.precol.set(edge_key(key, path, m), as_int(value, path));
    }
  }

  if (auto it = doc.find("surface"); it != doc.end()) {
    as_object(*it, "surface");
    inst.euler = as_int(field(*it, "euler", "surface"), "surface.euler");
  }
  if (auto it = doc.find("seed"); it != doc.end()) {
    if (!it->is_number_unsigned()) throw ParseError("seed", "expected a non-negative integer");
    inst.seed = it->get<std::uint64_t>();
  }

  const auto problems = inst.problems();
  if (!problems.empty()) throw ParseError("<instance>", problems.front());
  return inst;
}

ProblemInstance load_instance(const std::string& path) { return parse_instance(read_text(path)); }

json to_json(const ProblemInstance& inst) {
  const Graph& g = inst.graph;
  json doc;
  doc["format"] = kFormatVersion;
  json vertices = json::array();
  for (VertexId v = 0; v < g.num_vertices(); ++v) vertices.push_back(v);
  doc["vertices"] = std::move(vertices);
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  doc["edges"] = std::move(edges);
  if (inst.rotation) {
    json rot = json::object();
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      const auto order = inst.rotation->at(v);
      rot[std::to_string(v)] = std::vector<EdgeId>(order.begin(), order.end());
    }
    doc["rotation"] = std::move(rot);
  }
  json lists = json::object();
  for (const auto& [e, colours] : inst.lists) lists[std::to_string(e)] = std::vector<Colour>(colours.begin(), colours.end());
  doc["lists"] = std::move(lists);
  json pre = json::object();
  for (const auto& [e, c] : inst.precol) pre[std::to_string(e)] = c;
  doc["precoloured"] = std::move(pre);
  doc["params"] = {{"Delta", inst.params.Delta}, {"t", inst.params.t}, {"d", inst.params.d}};
  if (inst.euler) doc["surface"] = {{"euler", *inst.euler}};
  if (inst.seed) doc["seed"] = *inst.seed;
  return doc;
}

std::string dump_instance(const ProblemInstance& instance) { return to_json(instance).dump(1) + "\n"; }

FullColouring parse_colouring(std::string_view text, int num_edges) {
  const json doc = parse_document(text);
  as_object(doc, "<root>");
  check_format(doc);
  FullColouring col(num_edges);
  const json& map = as_object(field(doc, "colouring", ""), "colouring");
  for (const auto& [key, value] : map.items()) {
    const std::string path = "colouring." + key;
    col.set(edge_key(key, path, num_edges), as_int(value, path));
  }
  return col;
}

json to_json(const FullColouring& col) {
  json map = json::object();
  for (EdgeId e = 0; e < col.size(); ++e)
    if (col.coloured(e)) map[std::to_string(e)] = col[e];
  return {{"format", kFormatVersion}, {"colouring", std::move(map)}};
}

json to_json(const Verdict& verdict) {
  json list = json::array();
  for (const auto& v : verdict.violations) list.push_back(v.describe());
  return {{"ok", verdict.ok()}, {"violations", std::move(list)}};
}

json to_json(const SolveOutcome& outcome) {
  json doc;
  doc["outcome"] = to_string(outcome.kind);
  doc["detail"] = outcome.detail;
  if (outcome.coloured()) doc["colouring"] = to_json(outcome.colouring)["colouring"];
  const auto& s = outcome.stats;
  doc["stats"] = {{"greedy_edges", s.greedy_edges},
                  {"vertex_splits", s.vertex_splits},
                  {"bipartite_components", s.bipartite_components},
                  {"bad_subgraphs", s.bad_subgraphs},
                  {"kernel_fallbacks", s.kernel_fallbacks},
                  {"exact_completion", s.exact_completion},
                  {"search_nodes", s.search_nodes},
                  {"measures", s.measures}};
  if (outcome.frozen) {
    json frozen = to_json(outcome.frozen->instance);
    doc["frozen"] = {{"reason", outcome.frozen->reason},
                     {"original_edge", outcome.frozen->original_edge},
                     {"instance", std::move(frozen)}};
  }
  return doc;
}

json to_json(const BipartiteOutcome& outcome) {
  const char* status = outcome.status == SearchStatus::Found       ? "Found"
                       : outcome.status == SearchStatus::Exhausted ? "Exhausted"
                                                                   : "BudgetExceeded";
  json doc{{"status", status},
           {"route", outcome.route == BipartiteRoute::Kernel ? "kernel" : "fallback"},
           {"kernel_attempts", outcome.kernel_attempts},
           {"search_nodes", outcome.search_nodes}};
  if (outcome.status == SearchStatus::Found) doc["colours"] = outcome.colours;
  return doc;
}

json to_json(const AuditReport& r) {
  json doc;
  doc["params"] = {{"Delta", r.params.Delta}, {"t", r.params.t}, {"d", r.params.d}};
  if (auto ell = r.params.ell()) doc["params"]["ell"] = *ell;
  doc["euler"] = r.surface.euler;
  doc["faces"] = r.initial.faces.faces.size();
  doc["face_class"] = r.face_class;
  doc["initial_total"] = to_string(r.initial.total);
  doc["initial_within_bound"] = r.initial.within_bound;
  doc["final_total"] = to_string(r.final_total());
  if (r.applied) {
    const auto& L = r.applied->ledger;
    doc["conserved"] = r.applied->conserved;
    doc["pot_rules_applied"] = r.applied->pot_rules_applied;
    doc["pot"] = to_string(L.pot);
    json vc = json::array(), fc = json::array();
    for (const auto& c : L.vertex) vc.push_back(to_string(c));
    for (const auto& c : L.face) fc.push_back(to_string(c));
    doc["vertex_charges"] = std::move(vc);
    doc["face_charges"] = std::move(fc);
    json log = json::array();
    auto kind = [](ElementKind k) { return k == ElementKind::Vertex ? "vertex" : k == ElementKind::Face ? "face" : "pot"; };
    for (const auto& tr : L.log)
      log.push_back({{"rule", to_string(tr.rule)},
                     {"from", {kind(tr.from_kind), tr.from}},
                     {"to", {kind(tr.to_kind), tr.to}},
                     {"amount", to_string(tr.amount)}});
    doc["transfers"] = std::move(log);
  }
  if (!r.rule_error.empty()) doc["rule_error"] = r.rule_error;
  if (r.pot) {
    doc["pot_inequality"] = {{"lhs", to_string(r.pot->lhs)},
                             {"rhs", to_string(r.pot->rhs)},
                             {"strict", r.pot->strict()},
                             {"a_sizes", r.pot->a_sizes},
                             {"lhs_matches_decomposition", r.pot->lhs_matches_decomposition},
                             {"telescoping_identity", r.pot->telescoping_identity}};
  }
  json verts = json::array();
  for (const auto& b : r.vertices) {
    json row{{"vertex", b.vertex}, {"degree", b.degree}, {"faces", b.faces}, {"leaves", b.leaves},
             {"p", to_string(b.p)}, {"after_local", to_string(b.after_local)}, {"final", to_string(b.actual)},
             {"premises", b.premises}, {"holds", b.holds()}};
    if (b.bound) row["bound"] = to_string(*b.bound);
    if (b.table_bound) row["table_bound"] = to_string(*b.table_bound);
    verts.push_back(std::move(row));
  }
  doc["vertices"] = std::move(verts);
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"description", c.description}, {"passed", c.passed}, {"witnesses", c.witnesses}});
  doc["checks"] = std::move(checks);
  return doc;
}

}  // namespace lec
