#include "lec/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace lec {

Graph::Graph(int num_vertices) {
  if (num_vertices < 0) throw GraphError("negative vertex count");
  incidence_.resize(static_cast<std::size_t>(num_vertices));
}

Graph::Graph(int num_vertices, std::span<const Edge> edges) : Graph(num_vertices) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

VertexId Graph::add_vertex() {
  incidence_.emplace_back();
  return num_vertices() - 1;
}

EdgeId Graph::add_edge(VertexId u, VertexId v) {
  if (!contains_vertex(u) || !contains_vertex(v)) {
    std::ostringstream os;
    os << "edge {" << u << "," << v << "} has an endpoint outside [0," << num_vertices() << ")";
    throw GraphError(os.str());
  }
  if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
  if (find_edge(u, v)) {
    std::ostringstream os;
    os << "parallel edge {" << u << "," << v << "}";
    throw GraphError(os.str());
  }
  const EdgeId id = num_edges();
  edges_.push_back({u, v});
  incidence_[static_cast<std::size_t>(u)].push_back(id);
  incidence_[static_cast<std::size_t>(v)].push_back(id);
  return id;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& inc : incidence_) best = std::max(best, static_cast<int>(inc.size()));
  return best;
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  if (!contains_vertex(u) || !contains_vertex(v)) return std::nullopt;
  const VertexId base = degree(u) <= degree(v) ? u : v;
  const VertexId target = base == u ? v : u;
  for (EdgeId e : incident(base))
    if (edges_[static_cast<std::size_t>(e)].other(base) == target) return e;
  return std::nullopt;
}

bool Graph::edges_adjacent(EdgeId a, EdgeId b) const {
  if (a == b) return false;
  const Edge& ea = edge(a);
  const Edge& eb = edge(b);
  return eb.has(ea.u) || eb.has(ea.v);
}

std::vector<int> Graph::component_labels() const {
  std::vector<int> label(static_cast<std::size_t>(num_vertices()), -1);
  int next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < num_vertices(); ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    label[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (EdgeId e : incident(x)) {
        const VertexId y = edge(e).other(x);
        if (label[static_cast<std::size_t>(y)] < 0) {
          label[static_cast<std::size_t>(y)] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return label;
}

int Graph::num_components() const {
  const auto labels = component_labels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

RotationSystem RotationSystem::from_incidence(const Graph& g) {
  std::vector<std::vector<EdgeId>> order;
  order.reserve(static_cast<std::size_t>(g.num_vertices()));
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto inc = g.incident(v);
    order.emplace_back(inc.begin(), inc.end());
  }
  return RotationSystem(std::move(order));
}

EdgeId RotationSystem::successor(VertexId v, EdgeId e) const {
  auto cyc = at(v);
  auto it = std::find(cyc.begin(), cyc.end(), e);
  if (it == cyc.end()) throw GraphError("edge " + std::to_string(e) + " not in rotation at " + std::to_string(v));
  ++it;
  return it == cyc.end() ? cyc.front() : *it;
}

void RotationSystem::validate(const Graph& g) const {
  if (num_vertices() != g.num_vertices())
    throw GraphError("rotation system covers " + std::to_string(num_vertices()) + " vertices, graph has " +
                     std::to_string(g.num_vertices()));
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    std::vector<EdgeId> want(g.incident(v).begin(), g.incident(v).end());
    std::vector<EdgeId> got(at(v).begin(), at(v).end());
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    if (want != got) throw GraphError("rotation at vertex " + std::to_string(v) + " does not match its incident edges");
  }
}

std::vector<VertexId> Face::vertices() const {
  std::vector<VertexId> out;
  for (const auto& slot : walk)
    if (std::find(out.begin(), out.end(), slot.vertex) == out.end()) out.push_back(slot.vertex);
  return out;
}

int Face::length() const {
  return static_cast<int>(std::count_if(walk.begin(), walk.end(), [](const BoundarySlot& s) { return s.edge != kNoEdge; }));
}

bool FaceTraversal::planar() const {
  return std::all_of(components.begin(), components.end(),
                     [](const ComponentEuler& c) { return c.characteristic() == 2; });
}

std::string FaceTraversal::diagnostic() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    if (c.characteristic() == 2) continue;
    os << "component " << i << ": V - E + F = " << c.vertices << " - " << c.edges << " + " << c.faces << " = "
       << c.characteristic() << " (expected 2; rotation system is not planar)\n";
  }
  return os.str();
}

FaceTraversal faces(const Graph& g, const RotationSystem& rot) {
  rot.validate(g);
  FaceTraversal out;
  const auto label = g.component_labels();
  const int ncomp = g.num_components();
  out.components.assign(static_cast<std::size_t>(ncomp), {});
  for (VertexId v = 0; v < g.num_vertices(); ++v) ++out.components[static_cast<std::size_t>(label[v])].vertices;
  for (const Edge& e : g.edges()) ++out.components[static_cast<std::size_t>(label[e.u])].edges;

  // Dart 2e leaves edge(e).u, dart 2e+1 leaves edge(e).v.
  std::vector<char> seen(2 * static_cast<std::size_t>(g.num_edges()), 0);
  auto tail_of = [&](int dart) {
    const Edge& e = g.edge(dart / 2);
    return dart % 2 == 0 ? e.u : e.v;
  };
  for (int start = 0; start < 2 * g.num_edges(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    Face f;
    f.id = static_cast<int>(out.faces.size());
    f.component = label[static_cast<std::size_t>(tail_of(start))];
    int dart = start;
    do {
      seen[static_cast<std::size_t>(dart)] = 1;
      const EdgeId e = dart / 2;
      const VertexId tail = tail_of(dart);
      f.walk.push_back({tail, e});
      const VertexId head = g.edge(e).other(tail);
      const EdgeId next = rot.successor(head, e);
      dart = 2 * next + (g.edge(next).u == head ? 0 : 1);
    } while (dart != start);
    ++out.components[static_cast<std::size_t>(f.component)].faces;
    out.faces.push_back(std::move(f));
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 0) continue;
    Face f;
    f.id = static_cast<int>(out.faces.size());
    f.component = label[static_cast<std::size_t>(v)];
    f.walk.push_back({v, kNoEdge});
    ++out.components[static_cast<std::size_t>(f.component)].faces;
    out.faces.push_back(std::move(f));
  }
  return out;
}

int face_class(const Face& face, const Graph& g) {
  int m = 0;
  for (VertexId v : face.vertices())
    if (g.degree(v) >= 3) ++m;
  return m;
}

std::optional<RotationSystem> planar_rotation(const Graph& g) {
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                       boost::property<boost::vertex_index_t, int>,
                                       boost::property<boost::edge_index_t, int>>;
  using BEdge = boost::graph_traits<BGraph>::edge_descriptor;
  BGraph bg(static_cast<std::size_t>(g.num_vertices()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [desc, ok] = boost::add_edge(static_cast<std::size_t>(g.edge(e).u), static_cast<std::size_t>(g.edge(e).v), bg);
    (void)ok;
    boost::put(boost::edge_index, bg, desc, e);
  }
  std::vector<std::vector<BEdge>> embedding(static_cast<std::size_t>(g.num_vertices()));
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)));
  if (!planar) return std::nullopt;
  std::vector<std::vector<EdgeId>> order(static_cast<std::size_t>(g.num_vertices()));
  for (std::size_t v = 0; v < embedding.size(); ++v)
    for (const BEdge& be : embedding[v]) order[v].push_back(boost::get(boost::edge_index, bg, be));
  return RotationSystem(std::move(order));
}

bool is_planar(const Graph& g) { return planar_rotation(g).has_value(); }

DegreeClassIndex::DegreeClassIndex(const Graph& g) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto d = static_cast<std::size_t>(g.degree(v));
    if (classes_.size() <= d) classes_.resize(d + 1);
    classes_[d].push_back(v);
  }
}

DegreeClassIndex::DegreeClassIndex(std::span<const int> degrees) {
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    if (degrees[v] < 0) continue;  // inactive vertex
    const auto d = static_cast<std::size_t>(degrees[v]);
    if (classes_.size() <= d) classes_.resize(d + 1);
    classes_[d].push_back(static_cast<VertexId>(v));
  }
}

std::span<const VertexId> DegreeClassIndex::of(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(classes_.size())) return {};
  return classes_[static_cast<std::size_t>(degree)];
}

std::vector<VertexId> DegreeClassIndex::range(int lo, int hi) const {
  std::vector<VertexId> out;
  for (int i = std::max(lo, 0); i <= hi && i < static_cast<int>(classes_.size()); ++i) {
    auto cls = of(i);
    out.insert(out.end(), cls.begin(), cls.end());
  }
  return out;
}

int DegreeClassIndex::count_range(int lo, int hi) const {
  int n = 0;
  for (int i = std::max(lo, 0); i <= hi && i < static_cast<int>(classes_.size()); ++i) n += count(i);
  return n;
}

DegreeClassIndex degree_classes(const Graph& g) { return DegreeClassIndex(g); }

SplitGraph split_precoloured_edges(const Graph& g, std::span<const EdgeId> h_edges) {
  SplitGraph out;
  out.original_vertices = g.num_vertices();
  out.original_edges = g.num_edges();
  out.pair_of.assign(static_cast<std::size_t>(g.num_edges()), -1);
  for (std::size_t i = 0; i < h_edges.size(); ++i) {
    const EdgeId e = h_edges[i];
    if (e < 0 || e >= g.num_edges()) throw GraphError("unknown edge id " + std::to_string(e));
    if (out.pair_of[static_cast<std::size_t>(e)] >= 0) throw GraphError("edge " + std::to_string(e) + " listed twice");
    out.pair_of[static_cast<std::size_t>(e)] = static_cast<int>(i);
  }
  // New leaves: u' for pair i is vertex n + 2i, v' is n + 2i + 1.
  Graph h(g.num_vertices() + 2 * static_cast<int>(h_edges.size()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    const int p = out.pair_of[static_cast<std::size_t>(e)];
    if (p < 0)
      h.add_edge(ed.u, ed.v);
    else
      h.add_edge(ed.u, g.num_vertices() + 2 * p);
  }
  out.pairs.resize(h_edges.size());
  for (std::size_t i = 0; i < h_edges.size(); ++i) {
    const Edge& ed = g.edge(h_edges[i]);
    const EdgeId appended = h.add_edge(ed.v, g.num_vertices() + 2 * static_cast<int>(i) + 1);
    out.pairs[i] = {h_edges[i], appended};
  }
  out.graph = std::move(h);
  return out;
}

RotationSystem split_rotation(const RotationSystem& rot, const SplitGraph& split) {
  std::vector<std::vector<EdgeId>> order(static_cast<std::size_t>(split.graph.num_vertices()));
  for (VertexId v = 0; v < split.original_vertices; ++v) {
    for (EdgeId e : rot.at(v)) {
      const int p = split.pair_of.at(static_cast<std::size_t>(e));
      // The kept id stays at u; at v the appended pendant replaces it.
      if (p >= 0 && split.graph.edge(e).u != v)
        order[static_cast<std::size_t>(v)].push_back(split.pairs[static_cast<std::size_t>(p)][1]);
      else
        order[static_cast<std::size_t>(v)].push_back(e);
    }
  }
  for (VertexId v = split.original_vertices; v < split.graph.num_vertices(); ++v) {
    auto inc = split.graph.incident(v);
    order[static_cast<std::size_t>(v)].assign(inc.begin(), inc.end());
  }
  return RotationSystem(std::move(order));
}

}  // namespace lec
