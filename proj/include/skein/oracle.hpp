#ifndef SKEIN_ORACLE_HPP
#define SKEIN_ORACLE_HPP

#include <vector>

#include "skein/diagram.hpp"
#include "skein/tl.hpp"

namespace skein {

namespace detail {

/// Assigns network-wide ids to the strands leaving every dart.
class StrandIds {
 public:
  StrandIds(int darts, int width) : width_(width), next_(darts * width) {}
  int at(int dart, int strand) const { return dart * width_ + strand; }
  int fresh() { return next_++; }

 private:
  int width_;
  int next_;
};

/// f^(m) along an edge. Strand k at the first end meets strand m-1-k at the
/// second; jw bottom j sits on first-end strand m-1-j, top j on second-end
/// strand j.
inline StrandBox edge_box(const StrandIds& ids, int dart0, int dart1, int m) {
  StrandBox b;
  for (int j = 0; j < m; ++j) b.ports.push_back(ids.at(dart0, m - 1 - j));
  for (int j = 0; j < m; ++j) b.ports.push_back(ids.at(dart1, j));
  for (const auto& [match, c] : jw(m).terms()) b.terms.emplace(match.pair, c);
  return b;
}

/// Trivalent wiring: with colors c0, c1, c2 on counterclockwise darts,
/// (c0+c1-c2)/2 strands run from the end of dart 0 to the start of dart 1,
/// and cyclically. Strand numbers increase counterclockwise at every dart.
inline StrandBox vertex_box(const StrandIds& ids, const std::array<int, 3>& darts, const std::array<int, 3>& colors) {
  StrandBox b;
  std::vector<int> local_base(3);
  for (int s = 0; s < 3; ++s) {
    local_base[static_cast<std::size_t>(s)] = static_cast<int>(b.ports.size());
    for (int k = 0; k < colors[static_cast<std::size_t>(s)]; ++k) b.ports.push_back(ids.at(darts[static_cast<std::size_t>(s)], k));
  }
  std::vector<int> pairing(b.ports.size(), -1);
  for (int s = 0; s < 3; ++s) {
    const int t = (s + 1) % 3, u = (s + 2) % 3;
    const int cs = colors[static_cast<std::size_t>(s)], ct = colors[static_cast<std::size_t>(t)],
              cu = colors[static_cast<std::size_t>(u)];
    const int joined = (cs + ct - cu) / 2;
    for (int k = 0; k < joined; ++k) {
      const int x = local_base[static_cast<std::size_t>(s)] + cs - 1 - k;
      const int y = local_base[static_cast<std::size_t>(t)] + k;
      pairing[static_cast<std::size_t>(x)] = y;
      pairing[static_cast<std::size_t>(y)] = x;
    }
  }
  b.terms.emplace(std::move(pairing), RationalFn(1L));
  return b;
}

}  // namespace detail

/// Brute-force evaluation of a colored planar trivalent graph: every edge
/// becomes f^(color) on parallel strands, every vertex the standard wiring
/// of its interior colors, and the strand network is contracted exactly.
/// Inadmissible vertices give 0.
inline RationalFn eval_graph_bruteforce(const ColoredGraph& g, std::size_t budget = kDefaultTermBudget) {
  int max_color = 0;
  for (const auto& e : g.edges) max_color = std::max(max_color, e.color);
  for (int c : g.free_loops) max_color = std::max(max_color, c);
  if (max_color > 4) fail(ErrorKind::TooLarge, "the strand oracle handles colors up to 4");
  for (const auto& v : validate_graph(g)) {
    switch (v.kind) {
      case ViolationKind::InadmissibleVertex: return {};
      case ViolationKind::NotPlanar: fail(ErrorKind::NotPlanar, v.message);
      default: fail(ErrorKind::DanglingEdge, v.message);
    }
  }
  detail::StrandIds ids(static_cast<int>(3 * g.vertices.size()), std::max(max_color, 1));
  std::vector<StrandBox> boxes;
  for (const auto& e : g.edges) {
    if (e.color == 0) continue;
    boxes.push_back(detail::edge_box(ids, 3 * e.ends[0].node + e.ends[0].slot, 3 * e.ends[1].node + e.ends[1].slot, e.color));
  }
  const auto colors = g.vertex_colors();
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const int base = static_cast<int>(3 * v);
    boxes.push_back(detail::vertex_box(ids, {base, base + 1, base + 2}, colors[v]));
  }
  RationalFn value = contract_network(std::move(boxes), budget);
  for (int c : g.free_loops) value *= jw(c).trace_closure();
  return value;
}

/// Brute-force [d] at cable color m: every edge carries f^(m) on m parallel
/// strands, every crossing becomes an m x m grid of Kauffman crossings, and
/// every singular vertex (m = 2n) turns n strands from each leg into the
/// next leg counterclockwise.
inline RationalFn eval_diagram_bruteforce(const SingularDiagram& d, int m, std::size_t budget = kDefaultTermBudget) {
  if (m < 0) fail(ErrorKind::InvalidArgument, "color must be non-negative");
  if (d.singular_count() > 0 && m % 2 != 0) fail(ErrorKind::OddColorOnSingular, "singular vertices need an even color");
  validate_diagram(d);
  const RationalFn circle = jw(m).trace_closure();
  RationalFn value = circle.pow(d.free_circles);
  if (d.nodes.empty()) return value;
  if (m == 0) return value;

  detail::StrandIds ids(static_cast<int>(4 * d.nodes.size()), m);
  auto dart = [](const Port& p) { return 4 * p.node + p.slot; };
  std::vector<StrandBox> boxes;
  for (const auto& e : d.edges) boxes.push_back(detail::edge_box(ids, dart(e.ends[0]), dart(e.ends[1]), m));

  const LaurentPoly a = LaurentPoly::A(1), a_inv = LaurentPoly::A(-1);
  for (std::size_t v = 0; v < d.nodes.size(); ++v) {
    const int base = static_cast<int>(4 * v);
    if (d.nodes[v].kind == NodeKind::Singular) {
      const int n = m / 2;
      StrandBox b;
      for (int s = 0; s < 4; ++s) {
        for (int k = 0; k < m; ++k) b.ports.push_back(ids.at(base + s, k));
      }
      std::vector<int> pairing(b.ports.size());
      for (int s = 0; s < 4; ++s) {
        const int t = (s + 1) % 4;
        for (int k = 0; k < n; ++k) {
          const int x = s * m + (m - 1 - k), y = t * m + k;
          pairing[static_cast<std::size_t>(x)] = y;
          pairing[static_cast<std::size_t>(y)] = x;
        }
      }
      b.terms.emplace(std::move(pairing), RationalFn(1L));
      boxes.push_back(std::move(b));
      continue;
    }
    // Row r (from the south) runs slot 0 strand r -> slot 2 strand m-1-r over
    // every column; column c (from the east) runs slot 1 strand c -> slot 3
    // strand m-1-c underneath.
    std::vector<int> h(static_cast<std::size_t>(m * (m + 1))), vert(static_cast<std::size_t>(m * (m + 1)));
    auto hid = [&](int r, int c) -> int& { return h[static_cast<std::size_t>(r * (m + 1) + c)]; };
    auto vid = [&](int r, int c) -> int& { return vert[static_cast<std::size_t>(c * (m + 1) + r)]; };
    for (int r = 0; r < m; ++r) {
      hid(r, 0) = ids.at(base + 0, r);
      hid(r, m) = ids.at(base + 2, m - 1 - r);
      for (int c = 1; c < m; ++c) hid(r, c) = ids.fresh();
    }
    for (int c = 0; c < m; ++c) {
      vid(0, c) = ids.at(base + 3, m - 1 - c);
      vid(m, c) = ids.at(base + 1, c);
      for (int r = 1; r < m; ++r) vid(r, c) = ids.fresh();
    }
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) {
        StrandBox x;
        x.ports = {hid(r, c), vid(r + 1, c), hid(r, c + 1), vid(r, c)};  // E, N, W, S
        x.terms.emplace(std::vector<int>{1, 0, 3, 2}, RationalFn(a));
        x.terms.emplace(std::vector<int>{3, 2, 1, 0}, RationalFn(a_inv));
        boxes.push_back(std::move(x));
      }
    }
  }
  return value * contract_network(std::move(boxes), budget);
}

}  // namespace skein

#endif  // SKEIN_ORACLE_HPP
