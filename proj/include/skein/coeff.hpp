#ifndef SKEIN_COEFF_HPP
#define SKEIN_COEFF_HPP

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

#include "skein/cyclotomic.hpp"
#include "skein/laurent.hpp"
#include "skein/qseries.hpp"
#include "skein/rational_fn.hpp"

namespace skein {

/// Edge label of a Jones-Wenzl decorated strand bundle.
struct Color {
  int value = 0;
};

// ---------------------------------------------------------------------------
// Quantum integers

/// [n] = (A^{2n} - A^{-2n}) / (A^2 - A^{-2}) in factored form.
inline RationalFn qint_rf(int n) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "quantum integer index must be non-negative");
  if (n == 0) return {};
  std::map<int, int> f;
  for (int d = 1; d <= 4 * n; ++d) {
    if ((4 * n) % d == 0 && 4 % d != 0) f[d] = 1;
  }
  return RationalFn::factored(LaurentPoly::A(2 - 2 * n), std::move(f));
}

inline LaurentPoly quantum_int(int n) { return qint_rf(n).as_laurent(); }

/// [n]! = [1][2]...[n].
inline RationalFn qfactorial_rf(int n) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "quantum factorial index must be non-negative");
  std::map<int, int> f;
  int shift = 0;
  for (int m = 2; m <= n; ++m) {
    shift += 2 - 2 * m;
    for (int d = 1; d <= 4 * m; ++d) {
      if ((4 * m) % d == 0 && 4 % d != 0) ++f[d];
    }
  }
  return RationalFn::factored(LaurentPoly::A(shift), std::move(f));
}

/// Delta_n = (-1)^n [n+1], the value of an n-colored unknot.
inline RationalFn delta_rf(int n) {
  RationalFn r = qint_rf(n + 1);
  return n % 2 == 0 ? r : -r;
}

inline LaurentPoly delta(int n) { return delta_rf(n).as_laurent(); }

/// (q;q)_n in factored form, using 1 - A^{4i} = -prod_{d | 4i} Phi_d(A).
inline RationalFn pochhammer_rf(int n) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "pochhammer index must be non-negative");
  std::map<int, int> f;
  for (int i = 1; i <= n; ++i) {
    for (int d = 1; d <= 4 * i; ++d) {
      if ((4 * i) % d == 0) ++f[d];
    }
  }
  return RationalFn::factored(LaurentPoly(n % 2 == 0 ? 1L : -1L), std::move(f));
}

// ---------------------------------------------------------------------------
// Admissibility

inline bool admissible(int a, int b, int c) {
  return a >= 0 && b >= 0 && c >= 0 && (a + b + c) % 2 == 0 && a + b >= c && c >= std::abs(a - b);
}

/// An admissible triple together with its interior colors: x strands join a
/// and b, y join a and c, z join b and c.
struct AdmissibleTriple {
  int a, b, c;
  int x, y, z;

  static std::optional<AdmissibleTriple> make(int a, int b, int c) {
    if (!admissible(a, b, c)) return std::nullopt;
    return AdmissibleTriple{a, b, c, (a + b - c) / 2, (a + c - b) / 2, (b + c - a) / 2};
  }

  static AdmissibleTriple require(int a, int b, int c) {
    auto t = make(a, b, c);
    if (!t) {
      fail(ErrorKind::NotAdmissible,
           "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ") is not admissible");
    }
    return *t;
  }
};

/// Six tetrahedron labels laid out as [a d e; f c b]. The faces are the
/// vertex triples (a,d,e), (d,b,f), (e,c,f), (a,b,c); the opposite edge pairs
/// are (a,f), (d,c), (e,b).
struct TetLabels {
  int a, d, e, f, c, b;

  std::array<std::array<int, 3>, 4> vertex_triples() const {
    return {{{a, d, e}, {d, b, f}, {e, c, f}, {a, b, c}}};
  }

  bool admissible() const {
    for (const auto& t : vertex_triples()) {
      if (!skein::admissible(t[0], t[1], t[2])) return false;
    }
    return true;
  }

  /// Vertex half-sums.
  std::array<int, 4> vertex_sums() const {
    std::array<int, 4> s{};
    auto v = vertex_triples();
    for (std::size_t i = 0; i < 4; ++i) s[i] = (v[i][0] + v[i][1] + v[i][2]) / 2;
    return s;
  }

  /// Half-sums of the three 4-cycles, each the union of two opposite pairs.
  std::array<int, 3> cycle_sums() const {
    return {(a + f + d + c) / 2, (a + f + e + b) / 2, (d + c + e + b) / 2};
  }

  auto key() const { return std::make_tuple(a, d, e, f, c, b); }
  std::string to_string() const {
    return "[" + std::to_string(a) + " " + std::to_string(d) + " " + std::to_string(e) + "; " + std::to_string(f) + " " +
           std::to_string(c) + " " + std::to_string(b) + "]";
  }
};

// ---------------------------------------------------------------------------
// Memo cache

/// Process-wide memo of theta, Tet and 6j values. Lookups and inserts are
/// serialized; values are computed outside the lock.
class CoeffCache {
 public:
  using Key3 = std::tuple<int, int, int>;
  using Key6 = std::tuple<int, int, int, int, int, int>;

  template <typename Key, typename Fn>
  RationalFn get(std::map<Key, RationalFn> CoeffCache::*table, const Key& key, Fn&& compute) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto& t = this->*table;
      auto it = t.find(key);
      if (it != t.end()) return it->second;
    }
    RationalFn value = compute();
    std::lock_guard<std::mutex> lock(mu_);
    (this->*table).emplace(key, value);
    return value;
  }

  void clear() {
    std::lock_guard<std::mutex> lock(mu_);
    theta.clear();
    tet.clear();
    sixj.clear();
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return theta.size() + tet.size() + sixj.size();
  }

  template <typename Fn>
  void with_lock(Fn&& fn) {
    std::lock_guard<std::mutex> lock(mu_);
    fn(*this);
  }

  std::map<Key3, RationalFn> theta;
  std::map<Key6, RationalFn> tet;
  std::map<Key6, RationalFn> sixj;

 private:
  mutable std::mutex mu_;
};

inline CoeffCache& coeff_cache() {
  static CoeffCache cache;
  return cache;
}

// ---------------------------------------------------------------------------
// Theta

/// theta(a,b,c) = (-1)^{x+y+z} [x+y+z+1]! [x]! [y]! [z]! / ([x+y]! [x+z]! [y+z]!)
inline RationalFn theta(int a, int b, int c) {
  const auto t = AdmissibleTriple::require(a, b, c);
  std::array<int, 3> s{a, b, c};
  std::sort(s.begin(), s.end());
  return coeff_cache().get(&CoeffCache::theta, CoeffCache::Key3{s[0], s[1], s[2]}, [&] {
    const int sum = t.x + t.y + t.z;
    RationalFn r = qfactorial_rf(sum + 1) * qfactorial_rf(t.x) * qfactorial_rf(t.y) * qfactorial_rf(t.z) /
                   (qfactorial_rf(t.x + t.y) * qfactorial_rf(t.x + t.z) * qfactorial_rf(t.y + t.z));
    return sum % 2 == 0 ? r : -r;
  });
}

/// theta through q-Pochhammer symbols with q = A^4:
///   (-1)^{x+y+z} q^{-(x+y+z)/2} (q;q)_x (q;q)_y (q;q)_z (q;q)_{x+y+z+1}
///     / ((1-q) (q;q)_{x+y} (q;q)_{y+z} (q;q)_{x+z}).
inline RationalFn theta_poch(int a, int b, int c) {
  const auto t = AdmissibleTriple::require(a, b, c);
  const int sum = t.x + t.y + t.z;
  RationalFn num = pochhammer_rf(t.x) * pochhammer_rf(t.y) * pochhammer_rf(t.z) * pochhammer_rf(sum + 1);
  RationalFn den = pochhammer_rf(1) * pochhammer_rf(t.x + t.y) * pochhammer_rf(t.y + t.z) * pochhammer_rf(t.x + t.z);
  RationalFn r = RationalFn(LaurentPoly::A(-2 * sum)) * num / den;
  return sum % 2 == 0 ? r : -r;
}

// ---------------------------------------------------------------------------
// Twist eigenvalue

/// lambda^i_{a,b} = (-1)^{(a+b-i)/2} A^{(a(a+2) + b(b+2) - i(i+2))/2}: the
/// scalar picked up by channel i when the a and b strands above a vertex
/// cross once.
inline LaurentPoly lambda_coef(int i, int a, int b) {
  AdmissibleTriple::require(i, a, b);
  const int exponent = (a * (a + 2) + b * (b + 2) - i * (i + 2)) / 2;
  const int sign = ((a + b - i) / 2) % 2 == 0 ? 1 : -1;
  return LaurentPoly::monomial(Rational(sign), exponent);
}

// ---------------------------------------------------------------------------
// Tetrahedron

/// Tetrahedron network evaluation:
///   prod_{i,j} [b_j - a_i]! / ([a]![b]![c]![d]![e]![f]!)
///     * sum_{s = max a_i}^{min b_j} (-1)^s [s+1]! / (prod_i [s - a_i]! prod_j [b_j - s]!)
/// with a_i the vertex half-sums and b_j the 4-cycle half-sums.
inline RationalFn tet(const TetLabels& t) {
  if (!t.admissible()) fail(ErrorKind::NotAdmissible, "tetrahedron " + t.to_string() + " has an inadmissible face");
  return coeff_cache().get(&CoeffCache::tet, CoeffCache::Key6(t.key()), [&] {
    const auto av = t.vertex_sums();
    const auto bv = t.cycle_sums();
    RationalFn pre(1L);
    for (int ai : av) {
      for (int bj : bv) pre *= qfactorial_rf(bj - ai);
    }
    for (int label : {t.a, t.b, t.c, t.d, t.e, t.f}) pre /= qfactorial_rf(label);
    const int lo = *std::max_element(av.begin(), av.end());
    const int hi = *std::min_element(bv.begin(), bv.end());
    RationalFn sum;
    for (int s = lo; s <= hi; ++s) {
      RationalFn term = qfactorial_rf(s + 1);
      RationalFn den(1L);
      for (int ai : av) den *= qfactorial_rf(s - ai);
      for (int bj : bv) den *= qfactorial_rf(bj - s);
      term /= den;
      sum += s % 2 == 0 ? term : -term;
    }
    return pre * sum;
  });
}

// ---------------------------------------------------------------------------
// Recoupling

/// Coefficient of the horizontal element H_i (vertices (a,c,i), (b,d,i)) in
/// the expansion of the vertical element V_j (vertices (a,b,j), (c,d,j)),
/// with a, b on top and c, d below:
///   Delta_i * Tet[a b j; d c i] / (theta(a,c,i) theta(b,d,i)).
/// Zero when any of the four triples is inadmissible.
inline RationalFn sixj(int a, int b, int i, int c, int d, int j) {
  if (!admissible(a, c, i) || !admissible(b, d, i) || !admissible(a, b, j) || !admissible(c, d, j)) return {};
  return coeff_cache().get(&CoeffCache::sixj, CoeffCache::Key6{a, b, i, c, d, j}, [&] {
    return delta_rf(i) * tet(TetLabels{a, b, j, d, c, i}) / (theta(a, c, i) * theta(b, d, i));
  });
}

/// Bubble removal: a 2-gon with boundary edges b, c between legs a and d
/// equals delta_{a,d} theta(a,b,c) / Delta_a times a single a-strand.
inline RationalFn bubble_coef(int a, int b, int c, int d) {
  if (a != d) return {};
  return theta(a, b, c) / delta_rf(a);
}

/// Fusion of parallel a and b strands into channel i: Delta_i / theta(a,b,i).
inline RationalFn fusion_coef(int a, int b, int i) { return delta_rf(i) / theta(a, b, i); }

/// Checks theta(2n,2n,2i)/theta(n,n,2i) against its q-Pochhammer closed form
///   (-1)^n q^{-n/2} (q;q)_n^2 (q;q)_{2n-i} (q;q)_{2n+i+1}
///     / ((q;q)_{2n}^2 (q;q)_{n-i} (q;q)_{n+i+1}).
inline bool theta_ratio_check(int n, int i) {
  if (n < 0 || i < 0 || i > n) fail(ErrorKind::InvalidArgument, "theta_ratio_check needs 0 <= i <= n");
  RationalFn lhs = theta(2 * n, 2 * n, 2 * i) / theta(n, n, 2 * i);
  RationalFn rhs = RationalFn(LaurentPoly::A(-2 * n)) * pochhammer_rf(n).pow(2) * pochhammer_rf(2 * n - i) *
                   pochhammer_rf(2 * n + i + 1) /
                   (pochhammer_rf(2 * n).pow(2) * pochhammer_rf(n - i) * pochhammer_rf(n + i + 1));
  if (n % 2 != 0) rhs = -rhs;
  return lhs == rhs;
}

}  // namespace skein

#endif  // SKEIN_COEFF_HPP
