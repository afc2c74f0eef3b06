#ifndef SKEIN_DIAGRAM_HPP
#define SKEIN_DIAGRAM_HPP

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "skein/coeff.hpp"
#include "skein/errors.hpp"

namespace skein {

/// A half-edge slot on a node: node index (not id) and slot number.
struct Port {
  int node = 0;
  int slot = 0;
  friend bool operator==(const Port& a, const Port& b) { return a.node == b.node && a.slot == b.slot; }
  friend bool operator!=(const Port& a, const Port& b) { return !(a == b); }
  friend bool operator<(const Port& a, const Port& b) {
    return a.node != b.node ? a.node < b.node : a.slot < b.slot;
  }
};

// ---------------------------------------------------------------------------
// Rotation systems

/// Half-edge view of an embedded graph: every vertex lists its darts in
/// counterclockwise order and every dart knows its partner across the edge.
struct RotationSystem {
  std::vector<int> offset;  // darts of vertex v are offset[v] .. offset[v+1]-1
  std::vector<int> opp;     // partner dart, or -1 when unpaired

  int vertex_count() const { return static_cast<int>(offset.size()) - 1; }
  int dart_count() const { return offset.back(); }
  int degree(int v) const { return offset[v + 1] - offset[v]; }
  int dart(int v, int slot) const { return offset[v] + slot; }
  int vertex_of(int d) const {
    int v = static_cast<int>(std::upper_bound(offset.begin(), offset.end(), d) - offset.begin()) - 1;
    return v;
  }
  /// Next dart counterclockwise around the same vertex.
  int succ(int d) const {
    const int v = vertex_of(d);
    return offset[v] + (d - offset[v] + 1) % degree(v);
  }

  /// Number of faces, tracing d -> succ(opp(d)).
  int face_count() const {
    std::vector<char> seen(static_cast<std::size_t>(dart_count()), 0);
    int faces = 0;
    for (int d0 = 0; d0 < dart_count(); ++d0) {
      if (seen[static_cast<std::size_t>(d0)]) continue;
      ++faces;
      for (int d = d0; !seen[static_cast<std::size_t>(d)]; d = succ(opp[static_cast<std::size_t>(d)])) {
        seen[static_cast<std::size_t>(d)] = 1;
      }
    }
    return faces;
  }

  int component_count() const {
    std::vector<int> parent(static_cast<std::size_t>(vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    for (int d = 0; d < dart_count(); ++d) {
      int a = find(vertex_of(d)), b = find(vertex_of(opp[static_cast<std::size_t>(d)]));
      if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
    int c = 0;
    for (int v = 0; v < vertex_count(); ++v) c += find(v) == v ? 1 : 0;
    return c;
  }

  /// Euler characteristic check V - E + F = 2C for a fully paired system.
  bool is_planar() const {
    const int v = vertex_count();
    if (v == 0) return true;
    const int e = dart_count() / 2;
    return v - e + face_count() == 2 * component_count();
  }
};

// ---------------------------------------------------------------------------
// Singular link diagrams

enum class NodeKind { Crossing, Singular };

struct DiagramNode {
  int id = 0;
  NodeKind kind = NodeKind::Crossing;
};

struct DiagramEdge {
  int id = 0;
  std::array<Port, 2> ends{};
};

/// A singular link diagram. Every node has four slots numbered
/// counterclockwise; at a crossing the strand through slots 0 and 2 passes
/// over the strand through slots 1 and 3. Ports refer to node indices.
struct SingularDiagram {
  std::vector<DiagramNode> nodes;
  std::vector<DiagramEdge> edges;
  int free_circles = 0;

  std::size_t singular_count() const {
    std::size_t k = 0;
    for (const auto& n : nodes) k += n.kind == NodeKind::Singular ? 1 : 0;
    return k;
  }

  /// The port at the other end of the edge attached to p.
  Port opposite(const Port& p) const {
    for (const auto& e : edges) {
      if (e.ends[0] == p) return e.ends[1];
      if (e.ends[1] == p) return e.ends[0];
    }
    fail(ErrorKind::DanglingEdge, "no edge is attached to slot " + std::to_string(p.slot));
  }

  RotationSystem rotation() const {
    RotationSystem r;
    r.offset.resize(nodes.size() + 1);
    for (std::size_t i = 0; i <= nodes.size(); ++i) r.offset[i] = static_cast<int>(4 * i);
    r.opp.assign(4 * nodes.size(), -1);
    for (const auto& e : edges) {
      const int a = 4 * e.ends[0].node + e.ends[0].slot, b = 4 * e.ends[1].node + e.ends[1].slot;
      r.opp[static_cast<std::size_t>(a)] = b;
      r.opp[static_cast<std::size_t>(b)] = a;
    }
    return r;
  }
};

/// Checks slot usage and planarity; throws DanglingEdge or NotPlanar.
inline void validate_diagram(const SingularDiagram& d) {
  const int n = static_cast<int>(d.nodes.size());
  std::set<Port> used;
  for (const auto& e : d.edges) {
    for (const auto& p : e.ends) {
      if (p.node < 0 || p.node >= n || p.slot < 0 || p.slot > 3) {
        fail(ErrorKind::DanglingEdge, "edge " + std::to_string(e.id) + " refers to a missing node or slot");
      }
      if (!used.insert(p).second) {
        fail(ErrorKind::DanglingEdge, "slot " + std::to_string(p.slot) + " of node " +
                                          std::to_string(d.nodes[static_cast<std::size_t>(p.node)].id) + " is used twice");
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    for (int s = 0; s < 4; ++s) {
      if (!used.count(Port{v, s})) {
        fail(ErrorKind::DanglingEdge,
             "slot " + std::to_string(s) + " of node " + std::to_string(d.nodes[static_cast<std::size_t>(v)].id) + " is unused");
      }
    }
  }
  if (d.free_circles < 0) fail(ErrorKind::ParseError, "free_circles must be non-negative");
  if (!d.rotation().is_planar()) fail(ErrorKind::NotPlanar, "rotation system does not have genus 0");
}

/// Oriented traversal data: the strands of a diagram, each a cyclic sequence
/// of (entry port, exit port) passages through nodes.
struct Passage {
  Port in;
  Port out;
};

/// Traces the link components through crossings (slot s continues to s+2).
/// Singular nodes are traversed the same way. Free circles are not listed.
inline std::vector<std::vector<Passage>> trace_components(const SingularDiagram& d) {
  std::set<Port> visited;
  std::vector<std::vector<Passage>> comps;
  for (int v = 0; v < static_cast<int>(d.nodes.size()); ++v) {
    for (int s = 0; s < 4; ++s) {
      Port start{v, s};
      if (visited.count(start)) continue;
      std::vector<Passage> comp;
      Port out = start;
      while (!visited.count(out)) {
        const Port in{out.node, (out.slot + 2) % 4};
        visited.insert(out);
        visited.insert(in);
        comp.push_back(Passage{in, out});
        out = d.opposite(out);
        out = Port{out.node, (out.slot + 2) % 4};
      }
      comps.push_back(std::move(comp));
    }
  }
  return comps;
}

/// Standard writhe: sum of crossing signs under the traversal orientation of
/// trace_components. A crossing is positive when the under strand exits one
/// slot counterclockwise after the over strand's exit.
inline int writhe(const SingularDiagram& d) {
  std::map<int, int> over_exit, under_exit;
  for (const auto& comp : trace_components(d)) {
    for (const auto& p : comp) {
      if (d.nodes[static_cast<std::size_t>(p.out.node)].kind != NodeKind::Crossing) continue;
      (p.out.slot % 2 == 0 ? over_exit : under_exit)[p.out.node] = p.out.slot;
    }
  }
  int w = 0;
  for (const auto& [node, ko] : over_exit) w += under_exit.at(node) == (ko + 1) % 4 ? 1 : -1;
  return w;
}

// ---------------------------------------------------------------------------
// Colored trivalent graphs

struct GraphVertex {
  int id = 0;
};

struct GraphEdge {
  int id = 0;
  std::array<Port, 2> ends{};
  int color = 0;
};

/// A planar colored trivalent graph: three slots per vertex in
/// counterclockwise order, plus disjoint colored loops.
struct ColoredGraph {
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;
  std::vector<int> free_loops;

  RotationSystem rotation() const {
    RotationSystem r;
    r.offset.resize(vertices.size() + 1);
    for (std::size_t i = 0; i <= vertices.size(); ++i) r.offset[i] = static_cast<int>(3 * i);
    r.opp.assign(3 * vertices.size(), -1);
    for (const auto& e : edges) {
      const int a = 3 * e.ends[0].node + e.ends[0].slot, b = 3 * e.ends[1].node + e.ends[1].slot;
      r.opp[static_cast<std::size_t>(a)] = b;
      r.opp[static_cast<std::size_t>(b)] = a;
    }
    return r;
  }

  /// Colors at slots 0, 1, 2 of every vertex.
  std::vector<std::array<int, 3>> vertex_colors() const {
    std::vector<std::array<int, 3>> c(vertices.size(), {-1, -1, -1});
    for (const auto& e : edges) {
      for (const auto& p : e.ends) c[static_cast<std::size_t>(p.node)][static_cast<std::size_t>(p.slot)] = e.color;
    }
    return c;
  }
};

enum class ViolationKind { DanglingSlot, NegativeColor, InadmissibleVertex, NotPlanar };

struct GraphViolation {
  ViolationKind kind;
  int vertex_id;  // -1 when not tied to a vertex
  std::string message;
};

/// Lists every reason the graph cannot be evaluated as a nonzero planar
/// network. An empty result means evaluable.
inline std::vector<GraphViolation> validate_graph(const ColoredGraph& g) {
  std::vector<GraphViolation> out;
  const int n = static_cast<int>(g.vertices.size());
  std::set<Port> used;
  bool structural = true;
  for (const auto& e : g.edges) {
    if (e.color < 0) out.push_back({ViolationKind::NegativeColor, -1, "edge " + std::to_string(e.id) + " has a negative color"});
    for (const auto& p : e.ends) {
      if (p.node < 0 || p.node >= n || p.slot < 0 || p.slot > 2 || !used.insert(p).second) {
        out.push_back({ViolationKind::DanglingSlot, -1, "edge " + std::to_string(e.id) + " has an invalid or reused end"});
        structural = false;
      }
    }
  }
  for (int c : g.free_loops) {
    if (c < 0) out.push_back({ViolationKind::NegativeColor, -1, "free loop has a negative color"});
  }
  for (int v = 0; v < n; ++v) {
    for (int s = 0; s < 3; ++s) {
      if (!used.count(Port{v, s})) {
        out.push_back({ViolationKind::DanglingSlot, g.vertices[static_cast<std::size_t>(v)].id,
                       "slot " + std::to_string(s) + " is unused"});
        structural = false;
      }
    }
  }
  if (!structural) return out;
  const auto colors = g.vertex_colors();
  for (int v = 0; v < n; ++v) {
    const auto& c = colors[static_cast<std::size_t>(v)];
    if (!admissible(c[0], c[1], c[2])) {
      out.push_back({ViolationKind::InadmissibleVertex, g.vertices[static_cast<std::size_t>(v)].id,
                     "colors (" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) +
                         ") are not admissible"});
    }
  }
  if (!g.rotation().is_planar()) out.push_back({ViolationKind::NotPlanar, -1, "rotation system does not have genus 0"});
  return out;
}

// ---------------------------------------------------------------------------
// Standard graphs

/// Two vertices joined by edges a, b, c.
inline ColoredGraph theta_graph(int a, int b, int c) {
  ColoredGraph g;
  g.vertices = {{0}, {1}};
  g.edges = {{0, {Port{0, 0}, Port{1, 0}}, a}, {1, {Port{0, 1}, Port{1, 2}}, b}, {2, {Port{0, 2}, Port{1, 1}}, c}};
  return g;
}

/// The tetrahedron [a d e; f c b] with vertices (a,d,e), (d,b,f), (e,c,f),
/// (a,b,c); the last vertex sits inside the triangle of the first three.
inline ColoredGraph tet_graph(const TetLabels& t) {
  ColoredGraph g;
  g.vertices = {{0}, {1}, {2}, {3}};
  // Counterclockwise slots: v0 (d, a, e), v1 (f, b, d), v2 (e, c, f), v3 (a, b, c).
  g.edges = {{0, {Port{0, 0}, Port{1, 2}}, t.d}, {1, {Port{0, 1}, Port{3, 0}}, t.a}, {2, {Port{0, 2}, Port{2, 0}}, t.e},
             {3, {Port{1, 0}, Port{2, 2}}, t.f}, {4, {Port{1, 1}, Port{3, 1}}, t.b}, {5, {Port{2, 1}, Port{3, 2}}, t.c}};
  return g;
}

// ---------------------------------------------------------------------------
// JSON

namespace detail {

using nlohmann::json;

inline int require_int(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    fail(ErrorKind::ParseError, std::string("missing or non-integer field \"") + key + "\"");
  }
  return j.at(key).get<int>();
}

inline const json& require_array(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
    fail(ErrorKind::ParseError, std::string("missing or non-array field \"") + key + "\"");
  }
  return j.at(key);
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

inline std::array<Port, 2> parse_ends(const json& e, const std::map<int, int>& index, int max_slot) {
  const json& ends = require_array(e, "ends");
  if (ends.size() != 2) fail(ErrorKind::ParseError, "an edge needs exactly two ends");
  std::array<Port, 2> out{};
  for (std::size_t i = 0; i < 2; ++i) {
    const json& p = ends[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
      fail(ErrorKind::ParseError, "an edge end must be [node, slot]");
    }
    auto it = index.find(p[0].get<int>());
    if (it == index.end()) fail(ErrorKind::DanglingEdge, "edge end refers to unknown node " + std::to_string(p[0].get<int>()));
    const int slot = p[1].get<int>();
    if (slot < 0 || slot > max_slot) fail(ErrorKind::DanglingEdge, "slot " + std::to_string(slot) + " is out of range");
    out[i] = Port{it->second, slot};
  }
  return out;
}

}  // namespace detail

inline SingularDiagram parse_diagram(const std::string& text) {
  using detail::json;
  const json j = detail::parse_json(text);
  if (!j.is_object()) fail(ErrorKind::ParseError, "diagram must be a JSON object");
  SingularDiagram d;
  d.free_circles = j.contains("free_circles") ? detail::require_int(j, "free_circles") : 0;
  std::map<int, int> index;
  if (j.contains("nodes")) {
    for (const json& n : detail::require_array(j, "nodes")) {
      DiagramNode node;
      node.id = detail::require_int(n, "id");
      if (!n.contains("kind") || !n.at("kind").is_string()) fail(ErrorKind::ParseError, "node needs a string \"kind\"");
      const std::string kind = n.at("kind").get<std::string>();
      if (kind == "crossing") {
        node.kind = NodeKind::Crossing;
      } else if (kind == "singular") {
        node.kind = NodeKind::Singular;
      } else {
        fail(ErrorKind::ParseError, "unknown node kind \"" + kind + "\"");
      }
      if (!index.emplace(node.id, static_cast<int>(d.nodes.size())).second) {
        fail(ErrorKind::ParseError, "duplicate node id " + std::to_string(node.id));
      }
      d.nodes.push_back(node);
    }
  }
  if (j.contains("edges")) {
    for (const json& e : detail::require_array(j, "edges")) {
      DiagramEdge edge;
      edge.id = detail::require_int(e, "id");
      edge.ends = detail::parse_ends(e, index, 3);
      d.edges.push_back(edge);
    }
  }
  validate_diagram(d);
  return d;
}

inline std::string render_diagram(const SingularDiagram& d) {
  using detail::json;
  json j;
  j["free_circles"] = d.free_circles;
  j["nodes"] = json::array();
  for (const auto& n : d.nodes) {
    j["nodes"].push_back({{"id", n.id}, {"kind", n.kind == NodeKind::Crossing ? "crossing" : "singular"}});
  }
  j["edges"] = json::array();
  for (const auto& e : d.edges) {
    json ends = json::array();
    for (const auto& p : e.ends) ends.push_back({d.nodes[static_cast<std::size_t>(p.node)].id, p.slot});
    j["edges"].push_back({{"id", e.id}, {"ends", ends}});
  }
  return j.dump(2);
}

/// Parses the graph schema. Structural problems (unknown nodes, bad JSON)
/// throw; admissibility and genus are reported by validate_graph.
inline ColoredGraph parse_graph(const std::string& text) {
  using detail::json;
  const json j = detail::parse_json(text);
  if (!j.is_object()) fail(ErrorKind::ParseError, "graph must be a JSON object");
  ColoredGraph g;
  std::map<int, int> index;
  if (j.contains("vertices")) {
    for (const json& v : detail::require_array(j, "vertices")) {
      GraphVertex vert{detail::require_int(v, "id")};
      if (!index.emplace(vert.id, static_cast<int>(g.vertices.size())).second) {
        fail(ErrorKind::ParseError, "duplicate vertex id " + std::to_string(vert.id));
      }
      g.vertices.push_back(vert);
    }
  }
  if (j.contains("edges")) {
    for (const json& e : detail::require_array(j, "edges")) {
      GraphEdge edge;
      edge.id = detail::require_int(e, "id");
      edge.color = detail::require_int(e, "color");
      edge.ends = detail::parse_ends(e, index, 2);
      g.edges.push_back(edge);
    }
  }
  if (j.contains("free_loops")) {
    for (const json& c : detail::require_array(j, "free_loops")) {
      if (!c.is_number_integer()) fail(ErrorKind::ParseError, "free loop colors must be integers");
      g.free_loops.push_back(c.get<int>());
    }
  }
  return g;
}

inline std::string render_graph(const ColoredGraph& g) {
  using detail::json;
  json j;
  j["vertices"] = json::array();
  for (const auto& v : g.vertices) j["vertices"].push_back({{"id", v.id}});
  j["edges"] = json::array();
  for (const auto& e : g.edges) {
    json ends = json::array();
    for (const auto& p : e.ends) ends.push_back({g.vertices[static_cast<std::size_t>(p.node)].id, p.slot});
    j["edges"].push_back({{"id", e.id}, {"color", e.color}, {"ends", ends}});
  }
  j["free_loops"] = g.free_loops;
  return j.dump(2);
}

}  // namespace skein

#endif  // SKEIN_DIAGRAM_HPP
