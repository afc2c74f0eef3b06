#ifndef SKEIN_QSERIES_HPP
#define SKEIN_QSERIES_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "skein/laurent.hpp"

namespace skein {

/// Truncated power series in q^{1/4} (equivalently in A with A = q^{1/4}).
///
/// A series of order N carries exact coefficients for indices 0..N; index i
/// is the coefficient of q^{i/4}. Binary operations truncate to the smaller
/// order.
class QSeries {
 public:
  QSeries() : coeffs_(1) {}
  explicit QSeries(int order) : coeffs_(static_cast<std::size_t>(check_order(order)) + 1) {}
  QSeries(int order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(static_cast<std::size_t>(check_order(order)) + 1);
    for (auto& c : coeffs_) c.canonicalize();
  }

  /// The constant c truncated at `order`.
  static QSeries constant(int order, const Rational& c) {
    QSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// Builds a series from whole-q coefficients: coefficient k lands on index 4k.
  static QSeries from_q_coeffs(const std::vector<long>& q_coeffs) {
    const int order = 4 * (static_cast<int>(q_coeffs.size()) - 1);
    QSeries s(std::max(order, 0));
    for (std::size_t k = 0; k < q_coeffs.size(); ++k) s.coeffs_[4 * k] = q_coeffs[k];
    return s;
  }

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  Rational& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }

  /// Coefficient of q^k (index 4k); zero beyond the order.
  Rational q_coeff(int k) const {
    const int i = 4 * k;
    return i <= order() ? coeffs_[static_cast<std::size_t>(i)] : Rational(0);
  }

  /// True when every nonzero coefficient sits on a whole power of q.
  bool is_q_integral() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i % 4 != 0 && sgn(coeffs_[i]) != 0) return false;
    }
    return true;
  }

  QSeries truncated(int order) const {
    QSeries s(std::min(order, this->order()));
    for (int i = 0; i <= s.order(); ++i) s.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)];
    return s;
  }

  QSeries operator-() const {
    QSeries s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries s(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i) s.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return s;
  }
  friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

  /// Truncated Cauchy product.
  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries s(std::min(a.order(), b.order()));
    const int n = s.order();
    mpq_class tmp;
    for (int i = 0; i <= n; ++i) {
      const auto& ai = a.coeffs_[static_cast<std::size_t>(i)];
      if (sgn(ai) == 0) continue;
      for (int j = 0; i + j <= n; ++j) {
        const auto& bj = b.coeffs_[static_cast<std::size_t>(j)];
        if (sgn(bj) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), ai.get_mpq_t(), bj.get_mpq_t());
        auto& slot = s.coeffs_[static_cast<std::size_t>(i + j)];
        mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), tmp.get_mpq_t());
      }
    }
    return s;
  }
  friend QSeries operator*(QSeries a, const Rational& c) {
    for (auto& x : a.coeffs_) x *= c;
    return a;
  }

  QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

  /// Multiplicative inverse; requires a nonzero constant term.
  QSeries inverse() const {
    if (sgn(coeffs_[0]) == 0) fail(ErrorKind::DivisionByZero, "series with zero constant term is not invertible");
    QSeries s(order());
    const Rational inv0 = 1 / coeffs_[0];
    s.coeffs_[0] = inv0;
    mpq_class acc, tmp;
    for (int i = 1; i <= order(); ++i) {
      acc = 0;
      for (int j = 1; j <= i; ++j) {
        const auto& cj = coeffs_[static_cast<std::size_t>(j)];
        if (sgn(cj) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), cj.get_mpq_t(), s.coeffs_[static_cast<std::size_t>(i - j)].get_mpq_t());
        mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
      }
      s.coeffs_[static_cast<std::size_t>(i)] = -acc * inv0;
    }
    return s;
  }

  QSeries pow(unsigned k) const {
    QSeries result = constant(order(), Rational(1));
    for (unsigned i = 0; i < k; ++i) result *= *this;
    return result;
  }

  friend bool operator==(const QSeries& a, const QSeries& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

  /// Renders in q when every nonzero index is divisible by 4, else in q^{1/4}
  /// units written as A-powers.
  std::string to_string() const {
    const bool in_q = is_q_integral();
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (sgn(coeffs_[i]) != 0) terms.emplace_back(static_cast<int>(i), coeffs_[i]);
    }
    LaurentPoly p = LaurentPoly::from_terms(std::move(terms));
    std::string body = in_q ? p.to_string('q', 4) : p.to_string('A');
    return body + " + O(" + (in_q ? "q^" + std::to_string(order() / 4 + 1) : "A^" + std::to_string(order() + 1)) + ")";
  }

 private:
  static int check_order(int order) {
    if (order < 0) fail(ErrorKind::InvalidArgument, "series order must be non-negative");
    return order;
  }

  std::vector<Rational> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const QSeries& s) { return os << s.to_string(); }

/// Reindexes a polynomial with no negative exponents as a q^{1/4}-series.
inline QSeries to_qseries(const LaurentPoly& p, int order) {
  QSeries s(order);
  if (p.is_zero()) return s;
  if (p.low_exp() < 0) fail(ErrorKind::NegativeExponent, "polynomial " + p.to_string() + " has a negative exponent");
  for (const auto& [e, c] : p.terms()) {
    if (e > order) break;
    s[e] = c;
  }
  return s;
}

/// prod_{m >= 1} (1 - q^m) truncated at `order` (q^{1/4} units). Factors with
/// q^m beyond the order are the identity on retained coefficients.
inline QSeries euler_inf(int order) {
  QSeries s = QSeries::constant(order, Rational(1));
  const int max_m = (order + 3) / 4 + 1;
  for (int m = 1; m <= max_m; ++m) {
    const int shift = 4 * m;
    if (shift > order) break;
    // Multiply in place by (1 - q^m), highest index first.
    for (int i = order; i >= shift; --i) s[i] -= s[i - shift];
  }
  return s;
}

/// (q;q)_n = prod_{i=1}^{n} (1 - q^i) as an exact polynomial in A.
inline LaurentPoly pochhammer_poly(int n) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "pochhammer index must be non-negative");
  LaurentPoly p(1L);
  for (int i = 1; i <= n; ++i) p *= LaurentPoly(1L) - LaurentPoly::A(4 * i);
  return p;
}

/// (q;q)_n truncated at `order`.
inline QSeries pochhammer(int n, int order) { return to_qseries(pochhammer_poly(n), order); }

}  // namespace skein

#endif  // SKEIN_QSERIES_HPP
