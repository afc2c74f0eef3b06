#ifndef SKEIN_TL_HPP
#define SKEIN_TL_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "skein/rational_fn.hpp"

namespace skein {

inline constexpr std::size_t kDefaultTermBudget = 1000000;

/// Loop value delta = -A^2 - A^-2.
inline LaurentPoly loop_value() { return LaurentPoly::from_terms({{2, -1}, {-2, -1}}); }

// ---------------------------------------------------------------------------
// Strand networks

/// A tangle box: ports carry network-wide ids and every term is a perfect
/// matching of the ports (by local index) with its coefficient. Two ports of
/// different boxes with the same id are glued.
struct StrandBox {
  std::vector<int> ports;
  std::map<std::vector<int>, RationalFn> terms;

  static StrandBox single(std::vector<int> ports, std::vector<int> pairing, RationalFn c = RationalFn(1L)) {
    StrandBox b;
    b.ports = std::move(ports);
    b.terms.emplace(std::move(pairing), std::move(c));
    return b;
  }
};

/// Glues two boxes along their shared port ids. The result lists a's free
/// ports, then b's, each in original order; every closed loop contributes
/// a factor of delta.
inline StrandBox contract(const StrandBox& a, const StrandBox& b, std::size_t budget = kDefaultTermBudget) {
  const int na = static_cast<int>(a.ports.size());
  const int nb = static_cast<int>(b.ports.size());
  std::vector<int> cross(static_cast<std::size_t>(na + nb), -1);
  std::map<int, int> where_b;
  for (int j = 0; j < nb; ++j) where_b[b.ports[static_cast<std::size_t>(j)]] = j;
  for (int i = 0; i < na; ++i) {
    auto it = where_b.find(a.ports[static_cast<std::size_t>(i)]);
    if (it == where_b.end()) continue;
    cross[static_cast<std::size_t>(i)] = na + it->second;
    cross[static_cast<std::size_t>(na + it->second)] = i;
  }
  StrandBox out;
  std::vector<int> external;  // local index of each output port
  for (int x = 0; x < na + nb; ++x) {
    if (cross[static_cast<std::size_t>(x)] < 0) {
      external.push_back(x);
      out.ports.push_back(x < na ? a.ports[static_cast<std::size_t>(x)] : b.ports[static_cast<std::size_t>(x - na)]);
    }
  }
  std::vector<int> out_pos(static_cast<std::size_t>(na + nb), -1);
  for (std::size_t k = 0; k < external.size(); ++k) out_pos[static_cast<std::size_t>(external[k])] = static_cast<int>(k);

  std::vector<LaurentPoly> loop_pow{LaurentPoly(1L)};
  std::vector<int> link(static_cast<std::size_t>(na + nb));
  std::vector<char> seen(static_cast<std::size_t>(na + nb));
  std::map<std::vector<int>, RationalFn> acc;
  for (const auto& [ma, ca] : a.terms) {
    for (int i = 0; i < na; ++i) link[static_cast<std::size_t>(i)] = ma[static_cast<std::size_t>(i)];
    for (const auto& [mb, cb] : b.terms) {
      for (int j = 0; j < nb; ++j) link[static_cast<std::size_t>(na + j)] = na + mb[static_cast<std::size_t>(j)];
      std::fill(seen.begin(), seen.end(), 0);
      std::vector<int> pairing(external.size(), -1);
      for (int e : external) {
        if (seen[static_cast<std::size_t>(e)]) continue;
        int cur = e;
        seen[static_cast<std::size_t>(cur)] = 1;
        for (;;) {
          const int p = link[static_cast<std::size_t>(cur)];
          seen[static_cast<std::size_t>(p)] = 1;
          const int c = cross[static_cast<std::size_t>(p)];
          if (c < 0) {
            pairing[static_cast<std::size_t>(out_pos[static_cast<std::size_t>(e)])] = out_pos[static_cast<std::size_t>(p)];
            pairing[static_cast<std::size_t>(out_pos[static_cast<std::size_t>(p)])] = out_pos[static_cast<std::size_t>(e)];
            break;
          }
          seen[static_cast<std::size_t>(c)] = 1;
          cur = c;
        }
      }
      int loops = 0;
      for (int x = 0; x < na + nb; ++x) {
        if (seen[static_cast<std::size_t>(x)]) continue;
        ++loops;
        int cur = x;
        while (!seen[static_cast<std::size_t>(cur)]) {
          seen[static_cast<std::size_t>(cur)] = 1;
          const int p = link[static_cast<std::size_t>(cur)];
          seen[static_cast<std::size_t>(p)] = 1;
          cur = cross[static_cast<std::size_t>(p)];
        }
      }
      while (static_cast<int>(loop_pow.size()) <= loops) loop_pow.push_back(loop_pow.back() * loop_value());
      RationalFn c = ca * cb * RationalFn(loop_pow[static_cast<std::size_t>(loops)]);
      auto it = acc.find(pairing);
      if (it == acc.end()) {
        acc.emplace(std::move(pairing), std::move(c));
        if (acc.size() > budget) fail(ErrorKind::TooLarge, "strand expansion exceeded the term budget");
      } else {
        it->second += c;
      }
    }
  }
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) out.terms.emplace(m, std::move(c));
  }
  return out;
}

/// Contracts a closed network to a scalar, greedily merging the pair of
/// boxes whose union leaves the fewest free ports.
inline RationalFn contract_network(std::vector<StrandBox> boxes, std::size_t budget = kDefaultTermBudget) {
  RationalFn scalar(1L);
  auto absorb_closed = [&] {
    for (auto it = boxes.begin(); it != boxes.end();) {
      if (!it->ports.empty()) {
        ++it;
        continue;
      }
      auto t = it->terms.find({});
      if (t == it->terms.end()) return false;
      scalar *= t->second;
      it = boxes.erase(it);
    }
    return true;
  };
  if (!absorb_closed()) return {};
  while (!boxes.empty()) {
    std::size_t best_i = 0, best_j = 0;
    long best_score = -1;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      for (std::size_t j = i + 1; j < boxes.size(); ++j) {
        int shared = 0;
        for (int p : boxes[i].ports) shared += static_cast<int>(std::count(boxes[j].ports.begin(), boxes[j].ports.end(), p));
        if (shared == 0) continue;
        const long free_ports = static_cast<long>(boxes[i].ports.size() + boxes[j].ports.size()) - 2L * shared;
        const long size = static_cast<long>(boxes[i].terms.size() * boxes[j].terms.size());
        const long score = free_ports * 1000000L + std::min(size, 999999L);
        if (best_score < 0 || score < best_score) {
          best_score = score;
          best_i = i;
          best_j = j;
        }
      }
    }
    if (best_score < 0) fail(ErrorKind::BoundaryMismatch, "network has unglued ports");
    StrandBox merged = contract(boxes[best_i], boxes[best_j], budget);
    boxes.erase(boxes.begin() + static_cast<std::ptrdiff_t>(best_j));
    boxes[best_i] = std::move(merged);
    if (boxes[best_i].terms.empty()) return {};
    if (!absorb_closed()) return {};
  }
  return scalar;
}

// ---------------------------------------------------------------------------
// Temperley-Lieb algebra

/// A non-crossing perfect matching of `bottom` points (indices 0..bottom-1,
/// left to right) and `top` points (indices bottom.., left to right).
struct PlanarMatching {
  int bottom = 0;
  int top = 0;
  std::vector<int> pair;

  friend bool operator<(const PlanarMatching& x, const PlanarMatching& y) {
    return std::tie(x.bottom, x.top, x.pair) < std::tie(y.bottom, y.top, y.pair);
  }
  friend bool operator==(const PlanarMatching& x, const PlanarMatching& y) {
    return x.bottom == y.bottom && x.top == y.top && x.pair == y.pair;
  }

  /// Non-crossing in the rectangle: reading the boundary bottom left to
  /// right, then top right to left, no two chords interleave.
  bool is_planar() const {
    const int n = bottom + top;
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < bottom; ++i) pos[static_cast<std::size_t>(i)] = i;
    for (int j = 0; j < top; ++j) pos[static_cast<std::size_t>(bottom + j)] = n - 1 - j;
    for (int i = 0; i < n; ++i) {
      const int a = pos[static_cast<std::size_t>(i)], b = pos[static_cast<std::size_t>(pair[static_cast<std::size_t>(i)])];
      for (int k = 0; k < n; ++k) {
        const int c = pos[static_cast<std::size_t>(k)], d = pos[static_cast<std::size_t>(pair[static_cast<std::size_t>(k)])];
        const bool c_in = std::min(a, b) < c && c < std::max(a, b);
        const bool d_in = std::min(a, b) < d && d < std::max(a, b);
        if (c_in != d_in) return false;
      }
    }
    return true;
  }
};

/// Formal linear combination of planar matchings sharing boundary counts.
class TLElement {
 public:
  TLElement(int bottom, int top) : bottom_(bottom), top_(top) {}

  static TLElement identity(int n) {
    TLElement x(n, n);
    PlanarMatching m{n, n, std::vector<int>(static_cast<std::size_t>(2 * n))};
    for (int i = 0; i < n; ++i) {
      m.pair[static_cast<std::size_t>(i)] = n + i;
      m.pair[static_cast<std::size_t>(n + i)] = i;
    }
    x.terms_.emplace(std::move(m), RationalFn(1L));
    return x;
  }

  /// The hook e_i in TL_n (1 <= i < n): cup-cap on strands i-1 and i.
  static TLElement hook(int i, int n) {
    if (i < 1 || i >= n) fail(ErrorKind::InvalidArgument, "hook index out of range");
    TLElement x(n, n);
    PlanarMatching m{n, n, std::vector<int>(static_cast<std::size_t>(2 * n))};
    for (int k = 0; k < n; ++k) {
      m.pair[static_cast<std::size_t>(k)] = n + k;
      m.pair[static_cast<std::size_t>(n + k)] = k;
    }
    m.pair[static_cast<std::size_t>(i - 1)] = i;
    m.pair[static_cast<std::size_t>(i)] = i - 1;
    m.pair[static_cast<std::size_t>(n + i - 1)] = n + i;
    m.pair[static_cast<std::size_t>(n + i)] = n + i - 1;
    x.terms_.emplace(std::move(m), RationalFn(1L));
    return x;
  }

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const std::map<PlanarMatching, RationalFn>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const PlanarMatching& m, const RationalFn& c) {
    if (m.bottom != bottom_ || m.top != top_) fail(ErrorKind::BoundaryMismatch, "matching boundary differs from element");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(m, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  friend TLElement operator+(TLElement x, const TLElement& y) {
    if (x.bottom_ != y.bottom_ || x.top_ != y.top_) fail(ErrorKind::BoundaryMismatch, "sum of elements with different boundaries");
    for (const auto& [m, c] : y.terms_) x.add(m, c);
    return x;
  }
  friend TLElement operator-(const TLElement& x, const TLElement& y) { return x + y * RationalFn(-1L); }
  friend TLElement operator*(TLElement x, const RationalFn& c) {
    if (c.is_zero()) return TLElement(x.bottom_, x.top_);
    for (auto& [m, v] : x.terms_) v *= c;
    return x;
  }
  friend bool operator==(const TLElement& x, const TLElement& y) {
    return x.bottom_ == y.bottom_ && x.top_ == y.top_ && (x - y).is_zero();
  }

  /// Stacks x on top of y; loops created in the middle are worth delta.
  friend TLElement compose(const TLElement& x, const TLElement& y) {
    if (y.top_ != x.bottom_) fail(ErrorKind::BoundaryMismatch, "top of the lower factor must match bottom of the upper");
    const int mid = 1 << 20;
    const int top_base = 2 << 20;
    TLElement out(y.bottom_, x.top_);
    StrandBox lower = to_box(y, 0, mid), upper = to_box(x, mid, top_base);
    StrandBox r = contract(lower, upper);
    for (auto& [pairing, c] : r.terms) out.add(PlanarMatching{out.bottom_, out.top_, pairing}, c);
    return out;
  }

  /// Places x to the left of y.
  friend TLElement tensor(const TLElement& x, const TLElement& y) {
    TLElement out(x.bottom_ + y.bottom_, x.top_ + y.top_);
    for (const auto& [mx, cx] : x.terms_) {
      for (const auto& [my, cy] : y.terms_) {
        // Output order: x bottom, y bottom, x top, y top.
        auto remap_x = [&](int i) { return i < x.bottom_ ? i : y.bottom_ + i; };
        auto remap_y = [&](int j) { return j < y.bottom_ ? x.bottom_ + j : x.bottom_ + x.top_ + j; };
        PlanarMatching m{out.bottom_, out.top_, std::vector<int>(static_cast<std::size_t>(out.bottom_ + out.top_))};
        for (int i = 0; i < x.bottom_ + x.top_; ++i) m.pair[static_cast<std::size_t>(remap_x(i))] = remap_x(mx.pair[static_cast<std::size_t>(i)]);
        for (int j = 0; j < y.bottom_ + y.top_; ++j) m.pair[static_cast<std::size_t>(remap_y(j))] = remap_y(my.pair[static_cast<std::size_t>(j)]);
        out.add(m, cx * cy);
      }
    }
    return out;
  }

  /// Joins bottom i to top i outside the rectangle and evaluates.
  RationalFn trace_closure() const {
    if (bottom_ != top_) fail(ErrorKind::BoundaryMismatch, "trace closure needs equal boundary counts");
    if (bottom_ == 0) {
      auto it = terms_.begin();
      return it == terms_.end() ? RationalFn{} : it->second;
    }
    const int top_base = 1 << 20;
    StrandBox box = to_box(*this, 0, top_base);
    std::vector<int> pairing(box.ports.size());
    for (int i = 0; i < bottom_; ++i) {
      pairing[static_cast<std::size_t>(i)] = bottom_ + i;
      pairing[static_cast<std::size_t>(bottom_ + i)] = i;
    }
    StrandBox r = contract(box, StrandBox::single(box.ports, pairing));
    auto it = r.terms.find({});
    return it == r.terms.end() ? RationalFn{} : it->second;
  }

  /// Converts to a box with bottom ports bottom_base+i and top ports top_base+j.
  static StrandBox to_box(const TLElement& x, int bottom_base, int top_base) {
    StrandBox b;
    for (int i = 0; i < x.bottom_; ++i) b.ports.push_back(bottom_base + i);
    for (int j = 0; j < x.top_; ++j) b.ports.push_back(top_base + j);
    for (const auto& [m, c] : x.terms_) b.terms.emplace(m.pair, c);
    return b;
  }

 private:
  int bottom_, top_;
  std::map<PlanarMatching, RationalFn> terms_;
};

/// Delta_n from the Chebyshev recursion Delta_n = delta Delta_{n-1} - Delta_{n-2}.
inline LaurentPoly chebyshev_delta(int n) {
  LaurentPoly prev(1L), cur = loop_value();
  if (n == 0) return prev;
  for (int k = 2; k <= n; ++k) {
    LaurentPoly next = loop_value() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// The Jones-Wenzl idempotent f^(n) by the Wenzl recursion, memoized; the
/// reference stays valid for the life of the process.
inline const TLElement& jw(int n) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "Jones-Wenzl index must be non-negative");
  static std::mutex mu;
  static std::map<int, TLElement> table;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = table.find(n);
    if (it != table.end()) return it->second;
  }
  TLElement f = TLElement::identity(n);
  if (n >= 2) {
    const TLElement g = tensor(jw(n - 1), TLElement::identity(1));
    const RationalFn ratio = RationalFn(chebyshev_delta(n - 2)) / RationalFn(chebyshev_delta(n - 1));
    f = g - compose(g, compose(TLElement::hook(n - 1, n), g)) * ratio;
  }
  std::lock_guard<std::mutex> lock(mu);
  return table.emplace(n, std::move(f)).first->second;
}

}  // namespace skein

#endif  // SKEIN_TL_HPP
