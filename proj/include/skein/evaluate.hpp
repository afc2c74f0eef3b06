#ifndef SKEIN_EVALUATE_HPP
#define SKEIN_EVALUATE_HPP

#include <algorithm>
#include <future>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "skein/coeff.hpp"
#include "skein/diagram.hpp"

namespace skein {

/// One term of a graph expansion.
struct GraphTerm {
  RationalFn coeff;
  ColoredGraph graph;
};

using GraphSum = std::vector<GraphTerm>;

/// The framing monomial (-1)^m A^{m(m+2)} picked up by a color-m kink.
inline LaurentPoly twist_factor(int m) {
  return LaurentPoly::monomial(Rational(m % 2 == 0 ? 1 : -1), m * (m + 2));
}

// ---------------------------------------------------------------------------
// Expansion

/// Replaces every crossing by its fusion-channel expansion
///   sum_i (Delta_i / theta(m,m,i)) lambda^i_{m,m} V_i
/// where V_i joins slots 0,1 at one vertex and slots 2,3 at another through
/// an i-colored edge, and every singular vertex by the square of n-colored
/// edges (m = 2n). Free circles become free loops.
inline GraphSum expand_to_graphs(const SingularDiagram& d, int m) {
  if (m < 0) fail(ErrorKind::InvalidArgument, "color must be non-negative");
  if (d.singular_count() > 0 && m % 2 != 0) fail(ErrorKind::OddColorOnSingular, "singular vertices need an even color");
  validate_diagram(d);

  // Per node: graph vertex and slot carrying each diagram slot.
  struct Leg {
    int vertex;
    int slot;
  };
  ColoredGraph base;
  std::vector<std::array<Leg, 4>> legs(d.nodes.size());
  std::vector<int> channel_edge(d.nodes.size(), -1);
  int next_edge_id = 0;
  auto add_vertex = [&base] {
    base.vertices.push_back(GraphVertex{static_cast<int>(base.vertices.size())});
    return static_cast<int>(base.vertices.size()) - 1;
  };
  for (std::size_t v = 0; v < d.nodes.size(); ++v) {
    if (d.nodes[v].kind == NodeKind::Crossing) {
      // u: (leg0, leg1, channel); w: (leg2, leg3, channel).
      const int u = add_vertex(), w = add_vertex();
      legs[v] = {Leg{u, 0}, Leg{u, 1}, Leg{w, 0}, Leg{w, 1}};
      channel_edge[v] = static_cast<int>(base.edges.size());
      base.edges.push_back(GraphEdge{next_edge_id++, {Port{u, 2}, Port{w, 2}}, 0});
    } else {
      // P_s: (leg_s, edge to P_{s+1}, edge to P_{s-1}).
      std::array<int, 4> p{};
      for (int s = 0; s < 4; ++s) p[static_cast<std::size_t>(s)] = add_vertex();
      for (int s = 0; s < 4; ++s) {
        legs[v][static_cast<std::size_t>(s)] = Leg{p[static_cast<std::size_t>(s)], 0};
        const int t = (s + 1) % 4;
        base.edges.push_back(GraphEdge{next_edge_id++, {Port{p[static_cast<std::size_t>(s)], 1}, Port{p[static_cast<std::size_t>(t)], 2}}, m / 2});
      }
    }
  }
  for (const auto& e : d.edges) {
    const Leg& x = legs[static_cast<std::size_t>(e.ends[0].node)][static_cast<std::size_t>(e.ends[0].slot)];
    const Leg& y = legs[static_cast<std::size_t>(e.ends[1].node)][static_cast<std::size_t>(e.ends[1].slot)];
    base.edges.push_back(GraphEdge{next_edge_id++, {Port{x.vertex, x.slot}, Port{y.vertex, y.slot}}, m});
  }
  base.free_loops.assign(static_cast<std::size_t>(d.free_circles), m);

  // Distribute the crossing expansions.
  std::vector<std::vector<std::pair<int, RationalFn>>> options;
  std::vector<int> crossing_nodes;
  for (std::size_t v = 0; v < d.nodes.size(); ++v) {
    if (d.nodes[v].kind != NodeKind::Crossing) continue;
    crossing_nodes.push_back(static_cast<int>(v));
    std::vector<std::pair<int, RationalFn>> opts;
    for (int i = 0; i <= 2 * m; i += 2) {
      opts.emplace_back(i, fusion_coef(m, m, i) * RationalFn(lambda_coef(i, m, m)));
    }
    options.push_back(std::move(opts));
  }
  GraphSum out;
  std::vector<std::size_t> choice(options.size(), 0);
  for (;;) {
    GraphTerm term{RationalFn(1L), base};
    for (std::size_t k = 0; k < options.size(); ++k) {
      const auto& [i, c] = options[k][choice[k]];
      term.coeff *= c;
      term.graph.edges[static_cast<std::size_t>(channel_edge[static_cast<std::size_t>(crossing_nodes[k])])].color = i;
    }
    out.push_back(std::move(term));
    std::size_t k = 0;
    while (k < options.size() && ++choice[k] == options[k].size()) choice[k++] = 0;
    if (k == options.size()) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reduction

namespace detail {

/// Mutable half-edge graph used during reduction. Vertices list their darts
/// counterclockwise; a vertex with an empty list is deleted.
struct RGraph {
  std::vector<std::vector<int>> rot;
  std::vector<int> opp;
  std::vector<int> color;
  std::vector<int> vert;

  static RGraph from(const ColoredGraph& g) {
    RGraph r;
    const std::size_t n = g.vertices.size();
    r.rot.resize(n);
    r.opp.assign(3 * n, -1);
    r.color.assign(3 * n, 0);
    r.vert.resize(3 * n);
    for (std::size_t v = 0; v < n; ++v) {
      for (int s = 0; s < 3; ++s) {
        const int d = static_cast<int>(3 * v) + s;
        r.rot[v].push_back(d);
        r.vert[static_cast<std::size_t>(d)] = static_cast<int>(v);
      }
    }
    for (const auto& e : g.edges) {
      const int a = 3 * e.ends[0].node + e.ends[0].slot, b = 3 * e.ends[1].node + e.ends[1].slot;
      r.opp[static_cast<std::size_t>(a)] = b;
      r.opp[static_cast<std::size_t>(b)] = a;
      r.color[static_cast<std::size_t>(a)] = r.color[static_cast<std::size_t>(b)] = e.color;
    }
    return r;
  }

  std::size_t live_vertices() const {
    std::size_t k = 0;
    for (const auto& r : rot) k += r.empty() ? 0 : 1;
    return k;
  }

  /// Renumbers live vertices and darts densely, keeping rotation order.
  RGraph compact() const {
    RGraph out;
    std::vector<int> dart_map(opp.size(), -1);
    for (const auto& r : rot) {
      if (r.empty()) continue;
      const int v = static_cast<int>(out.rot.size());
      out.rot.emplace_back();
      for (int d : r) {
        dart_map[static_cast<std::size_t>(d)] = static_cast<int>(out.opp.size());
        out.rot.back().push_back(static_cast<int>(out.opp.size()));
        out.opp.push_back(d);
        out.color.push_back(color[static_cast<std::size_t>(d)]);
        out.vert.push_back(v);
      }
    }
    for (auto& o : out.opp) o = dart_map[static_cast<std::size_t>(opp[static_cast<std::size_t>(o)])];
    return out;
  }

  int pos(int d) const {
    const auto& r = rot[static_cast<std::size_t>(vert[static_cast<std::size_t>(d)])];
    return static_cast<int>(std::find(r.begin(), r.end(), d) - r.begin());
  }
  /// Clockwise neighbour of d at its vertex.
  int pred(int d) const {
    const auto& r = rot[static_cast<std::size_t>(vert[static_cast<std::size_t>(d)])];
    const int k = pos(d);
    return r[static_cast<std::size_t>((k + static_cast<int>(r.size()) - 1) % static_cast<int>(r.size()))];
  }
  /// Next dart of the face on the left of d, traversed counterclockwise.
  int face_next(int d) const { return pred(opp[static_cast<std::size_t>(d)]); }

  /// Rotation of vertex vert(d) starting at d.
  std::vector<int> rotation_from(int d) const {
    const auto& r = rot[static_cast<std::size_t>(vert[static_cast<std::size_t>(d)])];
    const int k = pos(d);
    std::vector<int> out;
    for (std::size_t i = 0; i < r.size(); ++i) out.push_back(r[(static_cast<std::size_t>(k) + i) % r.size()]);
    return out;
  }

  /// Canonical code of a connected compact graph: the lexicographically least
  /// breadth-first dart numbering over all starting darts.
  std::string canonical_code() const {
    const int n = static_cast<int>(opp.size());
    std::vector<int> best;
    std::vector<int> num(static_cast<std::size_t>(n));
    std::vector<int> order;
    for (int start = 0; start < n; ++start) {
      std::fill(num.begin(), num.end(), -1);
      order.clear();
      auto claim_vertex = [&](int d) {
        for (int x : rotation_from(d)) {
          num[static_cast<std::size_t>(x)] = static_cast<int>(order.size());
          order.push_back(x);
        }
      };
      claim_vertex(start);
      for (std::size_t k = 0; k < order.size(); ++k) {
        const int o = opp[static_cast<std::size_t>(order[k])];
        if (num[static_cast<std::size_t>(o)] < 0) claim_vertex(o);
      }
      std::vector<int> code;
      code.reserve(3 * order.size());
      for (int x : order) {
        code.push_back(static_cast<int>(rot[static_cast<std::size_t>(vert[static_cast<std::size_t>(x)])].size()));
        code.push_back(num[static_cast<std::size_t>(opp[static_cast<std::size_t>(x)])]);
        code.push_back(color[static_cast<std::size_t>(x)]);
      }
      if (best.empty() || code < best) best = std::move(code);
    }
    std::string s;
    for (int x : best) s += std::to_string(x) + ',';
    return s;
  }
};

/// Memo of reduced values keyed by canonical code.
class ReductionMemo {
 public:
  bool find(const std::string& key, RationalFn& out) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = table_.find(key);
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }
  void store(const std::string& key, const RationalFn& value) {
    std::lock_guard<std::mutex> lock(mu_);
    table_.emplace(key, value);
  }
  void clear() {
    std::lock_guard<std::mutex> lock(mu_);
    table_.clear();
  }
  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return table_.size();
  }

 private:
  mutable std::mutex mu_;
  std::map<std::string, RationalFn> table_;
};

inline ReductionMemo& reduction_memo() {
  static ReductionMemo memo;
  return memo;
}

RationalFn reduce_connected(const RGraph& g);

/// Removes color-0 edges, smooths 2-valent vertices and strips free loops.
/// Returns the accumulated scalar, or zero when the graph vanishes.
inline RationalFn simplify(RGraph& g) {
  RationalFn scalar(1L);
  const std::size_t cap = 10 * (g.opp.size() * g.opp.size() / 4 + 1);
  std::vector<char> dead(g.opp.size(), 0);
  auto erase_dart = [&](int d) {
    auto& r = g.rot[static_cast<std::size_t>(g.vert[static_cast<std::size_t>(d)])];
    r.erase(std::find(r.begin(), r.end(), d));
    dead[static_cast<std::size_t>(d)] = 1;
  };
  for (std::size_t step = 0;; ++step) {
    if (step > cap) fail(ErrorKind::ReductionStuck, "simplification did not terminate");
    bool changed = false;
    for (std::size_t d = 0; d < g.opp.size(); ++d) {
      if (dead[d] || g.color[d] != 0) continue;
      const int o = g.opp[d];
      erase_dart(static_cast<int>(d));
      if (o != static_cast<int>(d) && !dead[static_cast<std::size_t>(o)]) erase_dart(o);
      changed = true;
    }
    for (std::size_t v = 0; v < g.rot.size(); ++v) {
      auto& r = g.rot[v];
      if (r.empty() || r.size() == 3) continue;
      if (r.size() == 1) return {};
      if (r.size() > 3) fail(ErrorKind::InvalidArgument, "vertex of valence above 3");
      const int d1 = r[0], d2 = r[1];
      if (g.color[static_cast<std::size_t>(d1)] != g.color[static_cast<std::size_t>(d2)]) return {};
      const int p1 = g.opp[static_cast<std::size_t>(d1)], p2 = g.opp[static_cast<std::size_t>(d2)];
      if (p1 == d2) {
        scalar *= delta_rf(g.color[static_cast<std::size_t>(d1)]);
      } else {
        g.opp[static_cast<std::size_t>(p1)] = p2;
        g.opp[static_cast<std::size_t>(p2)] = p1;
      }
      dead[static_cast<std::size_t>(d1)] = dead[static_cast<std::size_t>(d2)] = 1;
      r.clear();
      changed = true;
    }
    if (!changed) break;
  }
  for (const auto& r : g.rot) {
    if (r.size() != 3) continue;
    if (!admissible(g.color[static_cast<std::size_t>(r[0])], g.color[static_cast<std::size_t>(r[1])],
                    g.color[static_cast<std::size_t>(r[2])])) {
      return {};
    }
  }
  g = g.compact();
  return scalar;
}

/// Value of an arbitrary reduced graph: product over connected components.
inline RationalFn reduce_components(const RGraph& g) {
  const std::size_t n = g.rot.size();
  if (n == 0) return RationalFn(1L);
  std::vector<int> comp(n, -1);
  int count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{static_cast<int>(s)};
    comp[s] = count;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int d : g.rot[static_cast<std::size_t>(v)]) {
        const int w = g.vert[static_cast<std::size_t>(g.opp[static_cast<std::size_t>(d)])];
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  if (count == 1) return reduce_connected(g);
  RationalFn value(1L);
  for (int c = 0; c < count; ++c) {
    RGraph part = g;
    for (std::size_t v = 0; v < n; ++v) {
      if (comp[v] != c) part.rot[v].clear();
    }
    value *= reduce_connected(part.compact());
    if (value.is_zero()) return {};
  }
  return value;
}

/// Simplifies a graph and evaluates it.
inline RationalFn reduce_any(RGraph g) {
  RationalFn scalar = simplify(g);
  if (scalar.is_zero()) return {};
  return scalar * reduce_components(g);
}

/// Evaluates a connected, compact, admissible trivalent graph.
inline RationalFn reduce_connected(const RGraph& g) {
  const std::string key = g.canonical_code();
  RationalFn cached;
  if (reduction_memo().find(key, cached)) return cached;

  const int n = static_cast<int>(g.opp.size());
  // Faces on the left of each dart.
  std::vector<int> face(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> faces;
  for (int d0 = 0; d0 < n; ++d0) {
    if (face[static_cast<std::size_t>(d0)] >= 0) continue;
    faces.emplace_back();
    for (int d = d0; face[static_cast<std::size_t>(d)] < 0; d = g.face_next(d)) {
      face[static_cast<std::size_t>(d)] = static_cast<int>(faces.size()) - 1;
      faces.back().push_back(d);
    }
  }
  if (static_cast<int>(g.rot.size()) - n / 2 + static_cast<int>(faces.size()) != 2) {
    fail(ErrorKind::NotPlanar, "rotation system does not have genus 0");
  }
  RationalFn value;
  // An edge with the same face on both sides is a bridge; Schur's lemma
  // kills it unless its color is 0, and 0-colored edges are gone already.
  bool bridge = false;
  for (int d = 0; d < n; ++d) {
    if (face[static_cast<std::size_t>(d)] == face[static_cast<std::size_t>(g.opp[static_cast<std::size_t>(d)])]) bridge = true;
  }
  if (!bridge) {
    std::size_t best = 0;
    for (std::size_t f = 1; f < faces.size(); ++f) {
      if (faces[f].size() < faces[best].size()) best = f;
    }
    const std::vector<int>& F = faces[best];
    auto col = [&g](int d) { return g.color[static_cast<std::size_t>(d)]; };
    auto op = [&g](int d) { return g.opp[static_cast<std::size_t>(d)]; };
    // The dart of d's vertex that is neither d nor `other`.
    auto third = [&g](int d, int other) {
      for (int x : g.rot[static_cast<std::size_t>(g.vert[static_cast<std::size_t>(d)])]) {
        if (x != d && x != other) return x;
      }
      fail(ErrorKind::ReductionStuck, "malformed vertex");
    };
    if (F.size() == 2) {
      const int d1 = F[0], d2 = F[1];
      const int x1 = third(d1, op(d2)), x2 = third(d2, op(d1));
      const RationalFn c = bubble_coef(col(x1), col(d1), col(d2), col(x2));
      if (!c.is_zero()) {
        if (op(x1) == x2) {
          value = c * delta_rf(col(x1));
        } else {
          RGraph h = g;
          const int p1 = op(x1), p2 = op(x2);
          h.opp[static_cast<std::size_t>(p1)] = p2;
          h.opp[static_cast<std::size_t>(p2)] = p1;
          h.rot[static_cast<std::size_t>(g.vert[static_cast<std::size_t>(d1)])].clear();
          h.rot[static_cast<std::size_t>(g.vert[static_cast<std::size_t>(d2)])].clear();
          value = c * reduce_any(h.compact());
        }
      }
    } else if (F.size() == 3) {
      const int d1 = F[0], d2 = F[1], d3 = F[2];
      const int x1 = third(d1, op(d3)), x2 = third(d2, op(d1)), x3 = third(d3, op(d2));
      const int a = col(x1), b = col(x2), c = col(x3);
      if (admissible(a, b, c)) {
        const RationalFn k = tet(TetLabels{a, col(d1), col(d3), col(d2), c, b}) / theta(a, b, c);
        RGraph h = g;
        const int v1 = g.vert[static_cast<std::size_t>(d1)];
        h.rot[static_cast<std::size_t>(g.vert[static_cast<std::size_t>(d2)])].clear();
        h.rot[static_cast<std::size_t>(g.vert[static_cast<std::size_t>(d3)])].clear();
        h.rot[static_cast<std::size_t>(v1)] = {x1, x2, x3};
        for (int x : {x1, x2, x3}) h.vert[static_cast<std::size_t>(x)] = v1;
        value = k * reduce_any(h.compact());
      }
    } else if (F.size() >= 4) {
      const int du = F[0], dv = op(du);
      const auto ru = g.rotation_from(du), rv = g.rotation_from(dv);
      const int p = ru[1], q = ru[2], r = rv[1], s = rv[2];
      const int u = g.vert[static_cast<std::size_t>(du)], v = g.vert[static_cast<std::size_t>(dv)];
      // Upper-left p, lower-left q, lower-right r, upper-right s around the
      // edge u -> v; recoupling turns it into an edge from the (q, r)
      // vertex up to the (s, p) vertex.
      const int a = col(q), b = col(p), c = col(r), d = col(s), j = col(du);
      for (int i = std::max(std::abs(a - c), std::abs(b - d)); i <= std::min(a + c, b + d); i += 2) {
        const RationalFn k = sixj(a, b, i, c, d, j);
        if (k.is_zero()) continue;
        RGraph h = g;
        h.rot[static_cast<std::size_t>(u)] = {du, q, r};
        h.rot[static_cast<std::size_t>(v)] = {dv, s, p};
        h.vert[static_cast<std::size_t>(r)] = u;
        h.vert[static_cast<std::size_t>(p)] = v;
        h.color[static_cast<std::size_t>(du)] = h.color[static_cast<std::size_t>(dv)] = i;
        value += k * reduce_any(h);
      }
    } else {
      fail(ErrorKind::ReductionStuck, "face of length one in a bridgeless graph");
    }
  }
  reduction_memo().store(key, value);
  return value;
}

}  // namespace detail

/// Evaluates a planar colored trivalent graph; 0 when a vertex is
/// inadmissible.
inline RationalFn reduce_graph(const ColoredGraph& g) {
  for (const auto& v : validate_graph(g)) {
    switch (v.kind) {
      case ViolationKind::InadmissibleVertex: return {};
      case ViolationKind::NotPlanar: fail(ErrorKind::NotPlanar, v.message);
      default: fail(ErrorKind::DanglingEdge, v.message);
    }
  }
  RationalFn loops(1L);
  for (int c : g.free_loops) loops *= delta_rf(c);
  if (g.vertices.empty()) return loops;
  return loops * detail::reduce_any(detail::RGraph::from(g));
}

struct EvalOptions {
  bool normalized = false;
  bool writhe_correct = false;
  unsigned threads = 1;
};

/// Sums coefficient times reduced value over the terms; the order of
/// summation is the term order regardless of threading.
inline RationalFn evaluate_sum(const GraphSum& terms, unsigned threads = 1) {
  std::vector<RationalFn> values(terms.size());
  if (threads <= 1 || terms.size() < 2) {
    for (std::size_t k = 0; k < terms.size(); ++k) values[k] = terms[k].coeff * reduce_graph(terms[k].graph);
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned t = 0; t < threads; ++t) {
      jobs.push_back(std::async(std::launch::async, [&, t] {
        for (std::size_t k = t; k < terms.size(); k += threads) values[k] = terms[k].coeff * reduce_graph(terms[k].graph);
      }));
    }
    for (auto& j : jobs) j.get();
  }
  RationalFn total;
  for (const auto& v : values) total += v;
  return total;
}

/// [d] at color m, optionally framing-corrected and divided by Delta_m.
inline RationalFn colored_jones(const SingularDiagram& d, int m, const EvalOptions& opts = {}) {
  RationalFn value = evaluate_sum(expand_to_graphs(d, m), opts.threads);
  if (opts.writhe_correct) value *= RationalFn(twist_factor(m)).pow(writhe(d));
  if (opts.normalized) value /= delta_rf(m);
  return value;
}

}  // namespace skein

#endif  // SKEIN_EVALUATE_HPP
