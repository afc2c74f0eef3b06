#ifndef SKEIN_TAILS_HPP
#define SKEIN_TAILS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skein/qseries.hpp"
#include "skein/rational_fn.hpp"

namespace skein {

// Orders passed to series constructors are in q^{1/4} units (QSeries
// indices); agreement counts and disagreement indices are reported in whole
// powers of q.

/// Strips the lowest monomial and its sign from a nonzero rational function
/// and expands the rest as a power series truncated at `order`.
inline QSeries normalize_series(const RationalFn& f, int order) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "cannot normalize the zero polynomial");
  const LaurentPoly num = f.num(), den = f.den();
  const QSeries n = to_qseries(num.shifted(-num.low_exp()), order);
  const QSeries d = to_qseries(den.shifted(-den.low_exp()), order);
  QSeries s = n * d.inverse();
  return sgn(s[0]) < 0 ? -s : s;
}

inline QSeries normalize_series(const LaurentPoly& p, int order) { return normalize_series(RationalFn(p), order); }

/// Number of whole q-coefficients retained by a series of quarter order N.
inline int q_terms(const QSeries& s) { return s.order() / 4 + 1; }

/// First quarter index where s and t differ, or nullopt when they agree
/// through the smaller order.
inline std::optional<int> first_difference(const QSeries& s, const QSeries& t) {
  const int n = std::min(s.order(), t.order());
  for (int i = 0; i <= n; ++i) {
    if (s[i] != t[i]) return i;
  }
  return std::nullopt;
}

/// Whole-q index of the first exact disagreement (no sign freedom).
inline std::optional<int> first_disagreement(const QSeries& s, const QSeries& t) {
  const auto i = first_difference(s, t);
  if (!i) return std::nullopt;
  return *i / 4;
}

/// Largest m such that q^0..q^{m-1} of s and of t or -t agree; capped at
/// the number of whole q-coefficients both series retain.
inline int agree_order(const QSeries& s, const QSeries& t) {
  const int cap = std::min(q_terms(s), q_terms(t));
  auto count = [cap](const std::optional<int>& i) { return i ? std::min(*i / 4, cap) : cap; };
  return std::max(count(first_difference(s, t)), count(first_difference(s, -t)));
}

/// Euler product to the k-th power.
inline QSeries euler_power(int k, int order) {
  if (k < 0) fail(ErrorKind::InvalidArgument, "negative power of the Euler product");
  return euler_inf(order).pow(static_cast<unsigned>(k));
}

/// In-place division by (1 - q^m): a running sum with stride 4m.
inline void divide_one_minus(QSeries& s, int m) {
  for (int i = 4 * m; i <= s.order(); ++i) s[i] += s[i - 4 * m];
}

/// In-place multiplication by q^e, dropping what falls past the order.
inline void shift_up(QSeries& s, int e) {
  for (int i = s.order(); i >= 0; --i) s[i] = i >= 4 * e ? s[i - 4 * e] : Rational(0);
}

/// (q;q)_inf^k sum_i q^i/(q;q)_i. Summands with 4i > order vanish; each is
/// the previous one times q/(1-q^i).
inline QSeries tail_closed_first(int k, int order) {
  if (k < 1) fail(ErrorKind::InvalidArgument, "tail_closed_first needs k >= 1");
  QSeries term = QSeries::constant(order, Rational(1));
  QSeries sum = term;
  for (int i = 1; 4 * i <= order; ++i) {
    shift_up(term, 1);
    divide_one_minus(term, i);
    sum += term;
  }
  return euler_power(k, order) * sum;
}

/// (q;q)_inf sum_i q^{i^2+i}/(q;q)_i^2. Summands with 4(i^2+i) > order
/// vanish; each is the previous one times q^{2i}/(1-q^i)^2.
inline QSeries tail_closed_second(int order) {
  QSeries term = QSeries::constant(order, Rational(1));
  QSeries sum = term;
  for (int i = 1; 4 * (i * i + i) <= order; ++i) {
    shift_up(term, 2 * i);
    divide_one_minus(term, i);
    divide_one_minus(term, i);
    sum += term;
  }
  return euler_inf(order) * sum;
}

/// Psi(q^a, q^b) = sum_{i>=0} q^{a i(i+1)/2 + b i(i-1)/2}
///               - sum_{i>=1} q^{a i(i-1)/2 + b i(i+1)/2}.
inline QSeries false_theta(int a_pow, int b_pow, int order) {
  if (a_pow < 1 || b_pow < 1) fail(ErrorKind::InvalidArgument, "false_theta needs positive powers");
  QSeries s(order);
  // Both exponents are at least i(i-1)/2 and grow without bound.
  for (int i = 0; 4 * (i * (i - 1) / 2) <= order; ++i) {
    const long plus = static_cast<long>(a_pow) * i * (i + 1) / 2 + static_cast<long>(b_pow) * i * (i - 1) / 2;
    if (4 * plus <= order) s[static_cast<int>(4 * plus)] += 1;
    if (i == 0) continue;
    const long minus = static_cast<long>(a_pow) * i * (i - 1) / 2 + static_cast<long>(b_pow) * i * (i + 1) / 2;
    if (4 * minus <= order) s[static_cast<int>(4 * minus)] -= 1;
  }
  return s;
}

/// q -> q^{-1}, i.e. negation of every exponent.
inline LaurentPoly head_transform(const LaurentPoly& p) { return p.inverted_variable(); }

/// One candidate checked against a stabilized prefix or another series.
struct SeriesComparison {
  std::string left;
  std::string right;
  std::optional<int> first_disagreement;  // whole-q index
  int compared_terms = 0;                  // whole-q coefficients compared
};

inline SeriesComparison compare_series(std::string left, const QSeries& s, std::string right, const QSeries& t) {
  return SeriesComparison{std::move(left), std::move(right), first_disagreement(s, t), std::min(q_terms(s), q_terms(t))};
}

struct TailReport {
  std::vector<int> colors;
  std::vector<QSeries> normalized;
  std::vector<int> agree_orders;  // agree_orders[j] compares entries j and j+1
  int prefix_terms = 0;
  QSeries prefix;
  std::vector<SeriesComparison> comparisons;
};

/// Normalizes each value to `terms` whole q-coefficients, records the
/// consecutive agree orders and keeps the part of the last value that the
/// final pair agrees on.
inline TailReport empirical_tail(const std::vector<RationalFn>& values, int terms, std::vector<int> colors = {}) {
  if (values.size() < 2) fail(ErrorKind::InvalidArgument, "empirical_tail needs at least two values");
  if (terms < 1) fail(ErrorKind::InvalidArgument, "empirical_tail needs at least one term");
  TailReport r;
  if (colors.empty()) {
    for (std::size_t k = 0; k < values.size(); ++k) colors.push_back(static_cast<int>(k) + 1);
  }
  r.colors = std::move(colors);
  const int order = 4 * terms - 1;
  for (const auto& v : values) r.normalized.push_back(normalize_series(v, order));
  for (std::size_t k = 0; k + 1 < r.normalized.size(); ++k) {
    r.agree_orders.push_back(agree_order(r.normalized[k], r.normalized[k + 1]));
  }
  r.prefix_terms = r.agree_orders.back();
  r.prefix = r.normalized.back().truncated(std::max(4 * r.prefix_terms - 1, 0));
  return r;
}

/// Adds a comparison of the stabilized prefix against a candidate tail.
inline void compare_prefix(TailReport& r, const std::string& name, const QSeries& candidate) {
  SeriesComparison c = compare_series("empirical", r.prefix, name, candidate);
  c.compared_terms = std::min(c.compared_terms, r.prefix_terms);
  if (c.first_disagreement && *c.first_disagreement >= r.prefix_terms) c.first_disagreement.reset();
  r.comparisons.push_back(std::move(c));
}

struct CorollaryReport {
  int order = 0;  // whole powers of q
  QSeries lhs;    // second-tail form
  QSeries rhs;    // first-tail form with k = 2
  QSeries psi;    // Psi(q^3, q)
  std::vector<SeriesComparison> comparisons;
};

/// Three-way comparison of the two closed tail forms and Psi(q^3, q) through
/// q^order.
inline CorollaryReport verify_corollary(int order) {
  if (order < 1) fail(ErrorKind::InvalidArgument, "verify_corollary needs order >= 1");
  const int quarter = 4 * order;
  CorollaryReport r;
  r.order = order;
  r.lhs = tail_closed_second(quarter);
  r.rhs = tail_closed_first(2, quarter);
  r.psi = false_theta(3, 1, quarter);
  r.comparisons.push_back(compare_series("lhs", r.lhs, "psi", r.psi));
  r.comparisons.push_back(compare_series("rhs", r.rhs, "psi", r.psi));
  r.comparisons.push_back(compare_series("lhs", r.lhs, "rhs", r.rhs));
  return r;
}

}  // namespace skein

#endif  // SKEIN_TAILS_HPP
