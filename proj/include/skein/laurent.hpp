#ifndef SKEIN_LAURENT_HPP
#define SKEIN_LAURENT_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skein/errors.hpp"

namespace skein {

using Rational = mpq_class;

/// Sparse Laurent polynomial in the single variable A over the rationals.
///
/// Terms are kept sorted by ascending exponent with no zero coefficients, so
/// two polynomials are equal exactly when their term vectors are equal. The
/// variable q used in tables and q-series is always A^4.
class LaurentPoly {
 public:
  using Term = std::pair<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace_back(0, Rational(c));
  }
  LaurentPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (sgn(c) != 0) terms_.emplace_back(0, canonical(c));
  }

  static LaurentPoly monomial(const Rational& c, int exponent) {
    LaurentPoly p;
    if (sgn(c) != 0) p.terms_.emplace_back(exponent, canonical(c));
    return p;
  }
  static LaurentPoly A(int exponent = 1) { return monomial(Rational(1), exponent); }

  /// Builds from arbitrary (exponent, coefficient) pairs; duplicates are summed.
  static LaurentPoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& t : terms) {
      t.second.canonicalize();
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
        if (sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
      } else if (sgn(t.second) != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }
  static LaurentPoly from_terms(std::initializer_list<std::pair<int, long>> terms) {
    std::vector<Term> v;
    for (const auto& [e, c] : terms) v.emplace_back(e, Rational(c));
    return from_terms(std::move(v));
  }

  /// Dense coefficients starting at exponent `low`; zeros are dropped.
  static LaurentPoly from_dense(int low, std::vector<Rational>&& dense) {
    LaurentPoly p;
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (sgn(dense[i]) != 0) p.terms_.emplace_back(low + static_cast<int>(i), std::move(dense[i]));
    }
    return p;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
  }

  int low_exp() const { return terms_.front().first; }
  int high_exp() const { return terms_.back().first; }
  const Rational& low_coeff() const { return terms_.front().second; }
  const Rational& high_coeff() const { return terms_.back().second; }

  Rational coeff(int exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) return it->second;
    return Rational(0);
  }

  /// Coefficients from low_exp() to high_exp() inclusive.
  std::vector<Rational> dense() const {
    std::vector<Rational> out;
    if (is_zero()) return out;
    out.resize(static_cast<std::size_t>(high_exp() - low_exp() + 1));
    for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e - low_exp())] = c;
    return out;
  }

  /// Multiplies by A^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.first += k;
    return p;
  }

  /// Substitutes A -> A^{-1}.
  LaurentPoly inverted_variable() const {
    LaurentPoly p;
    p.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.emplace_back(-it->first, it->second);
    return p;
  }

  LaurentPoly operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = merge(*this, o, false); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = merge(*this, o, true); }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly& operator*=(const Rational& c) {
    if (sgn(c) == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.second *= c;
    }
    return *this;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, false); }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, true); }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_monomial()) return b.scaled_monomial(a.terms_[0]);
    if (b.is_monomial()) return a.scaled_monomial(b.terms_[0]);
    const int low = a.low_exp() + b.low_exp();
    std::vector<Rational> acc(static_cast<std::size_t>(a.high_exp() + b.high_exp() - low + 1));
    mpq_class tmp;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        mpq_mul(tmp.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
        auto& slot = acc[static_cast<std::size_t>(ea + eb - low)];
        mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), tmp.get_mpq_t());
      }
    }
    return from_dense(low, std::move(acc));
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second) return false;
    }
    return true;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly pow(unsigned k) const {
    LaurentPoly result(1L), base = *this;
    while (k != 0) {
      if (k & 1U) result *= base;
      k >>= 1U;
      if (k != 0) base *= base;
    }
    return result;
  }

  /// Renders as `c*A^e` terms in ascending exponent order; a constant term
  /// prints as the bare coefficient.
  std::string to_string(char var = 'A', int exponent_divisor = 1) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rational mag = abs(c);
      if (first) {
        if (sgn(c) < 0) out += "-";
      } else {
        out += sgn(c) < 0 ? " - " : " + ";
      }
      first = false;
      out += mag.get_str();
      if (e != 0) {
        out += "*";
        out += var;
        out += "^";
        out += std::to_string(e / exponent_divisor);
      }
    }
    return out;
  }

 private:
  static Rational canonical(Rational c) {
    c.canonicalize();
    return c;
  }

  LaurentPoly scaled_monomial(const Term& m) const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) {
      t.first += m.first;
      t.second *= m.second;
    }
    return p;
  }

  static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    LaurentPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
        r.terms_.emplace_back(b.terms_[j].first, subtract ? Rational(-b.terms_[j].second) : b.terms_[j].second);
        ++j;
      } else {
        Rational c = subtract ? Rational(a.terms_[i].second - b.terms_[j].second)
                              : Rational(a.terms_[i].second + b.terms_[j].second);
        if (sgn(c) != 0) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

/// Exact quotient p / d, or nullopt when d does not divide p.
inline std::optional<LaurentPoly> try_div_exact(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) fail(ErrorKind::DivisionByZero, "division by the zero polynomial");
  if (p.is_zero()) return LaurentPoly{};
  if (d.is_monomial()) {
    const auto& [e, c] = d.terms()[0];
    return (p * Rational(1 / c)).shifted(-e);
  }
  const int q_low = p.low_exp() - d.low_exp();
  const int q_high = p.high_exp() - d.high_exp();
  if (q_high < q_low) return std::nullopt;

  std::vector<Rational> rem = p.dense();
  const int r_low = p.low_exp();
  const std::vector<Rational> div = d.dense();
  const int d_span = static_cast<int>(div.size()) - 1;
  const Rational inv_lead = 1 / div.back();
  std::vector<Rational> quot(static_cast<std::size_t>(q_high - q_low + 1));
  mpq_class tmp;
  for (int qe = q_high; qe >= q_low; --qe) {
    // The remainder's top coefficient sits at exponent qe + d.high_exp().
    auto top = static_cast<std::size_t>(qe + d.high_exp() - r_low);
    if (sgn(rem[top]) == 0) continue;
    Rational t = rem[top] * inv_lead;
    for (int k = 0; k <= d_span; ++k) {
      if (sgn(div[static_cast<std::size_t>(k)]) == 0) continue;
      auto& slot = rem[top - static_cast<std::size_t>(d_span - k)];
      mpq_mul(tmp.get_mpq_t(), t.get_mpq_t(), div[static_cast<std::size_t>(k)].get_mpq_t());
      mpq_sub(slot.get_mpq_t(), slot.get_mpq_t(), tmp.get_mpq_t());
    }
    quot[static_cast<std::size_t>(qe - q_low)] = std::move(t);
  }
  for (const auto& c : rem) {
    if (sgn(c) != 0) return std::nullopt;
  }
  return LaurentPoly::from_dense(q_low, std::move(quot));
}

/// Exact quotient; throws NotDivisible when no Laurent quotient exists.
inline LaurentPoly div_exact(const LaurentPoly& p, const LaurentPoly& d) {
  auto q = try_div_exact(p, d);
  if (!q) fail(ErrorKind::NotDivisible, "(" + p.to_string() + ") is not divisible by (" + d.to_string() + ")");
  return std::move(*q);
}

}  // namespace skein

#endif  // SKEIN_LAURENT_HPP
