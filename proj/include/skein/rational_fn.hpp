#ifndef SKEIN_RATIONAL_FN_HPP
#define SKEIN_RATIONAL_FN_HPP

#include <map>
#include <string>
#include <utility>

#include "skein/cyclotomic.hpp"
#include "skein/laurent.hpp"

namespace skein {

/// Quotient of Laurent polynomials whose denominator is a product of
/// cyclotomic polynomials in A.
///
/// Every denominator produced by skein calculus is a product of quantum
/// integers [m] = A^{2-2m} prod_{d | 4m, d not dividing 4} Phi_d(A), so the
/// value is stored as  poly * prod_d Phi_d(A)^{e_d}  with signed exponents.
/// Products and quotients of factored values (theta, Delta, quantum
/// factorials) stay factored; sums fall back to an explicit polynomial over
/// the common cyclotomic denominator. After every operation the residual
/// polynomial is divided by each denominator factor it contains, so num()
/// and den() are coprime.
class RationalFn {
 public:
  RationalFn() = default;
  RationalFn(long c) : poly_(c) {}  // NOLINT(google-explicit-constructor)
  RationalFn(const Rational& c) : poly_(c) {}  // NOLINT(google-explicit-constructor)
  RationalFn(LaurentPoly p) : poly_(std::move(p)) {}  // NOLINT(google-explicit-constructor)

  /// num / den for an arbitrary nonzero den. Throws DivisionByZero, or
  /// NotDivisible when den has a non-cyclotomic factor that does not cancel.
  RationalFn(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) fail(ErrorKind::DivisionByZero, "zero denominator");
    if (auto q = try_div_exact(num, den)) {
      poly_ = std::move(*q);
      return;
    }
    *this = RationalFn(num) / RationalFn(den);
  }

  /// Builds poly * prod Phi_d^{e_d} directly from a factor map.
  static RationalFn factored(LaurentPoly poly, std::map<int, int> factors) {
    RationalFn r;
    r.poly_ = std::move(poly);
    if (r.poly_.is_zero()) return r;
    for (auto& [d, e] : factors) {
      if (e != 0) r.factors_.emplace(d, e);
    }
    r.reduce();
    return r;
  }

  bool is_zero() const noexcept { return poly_.is_zero(); }
  const LaurentPoly& residual() const noexcept { return poly_; }
  const std::map<int, int>& factors() const noexcept { return factors_; }

  /// True when the value is a Laurent polynomial (trivial denominator).
  bool is_laurent() const {
    for (const auto& [d, e] : factors_) {
      if (e < 0) return false;
    }
    return true;
  }

  /// Canonical numerator: coprime to den(), sign chosen so that den() has a
  /// positive lowest coefficient.
  LaurentPoly num() const {
    std::map<int, int> pos;
    for (const auto& [d, e] : factors_) {
      if (e > 0) pos.emplace(d, e);
    }
    LaurentPoly n = poly_ * expand_cyclotomic_product(pos);
    return den_sign_flipped() ? -n : n;
  }

  /// Canonical denominator: lowest exponent 0, positive lowest coefficient.
  LaurentPoly den() const {
    std::map<int, int> neg;
    for (const auto& [d, e] : factors_) {
      if (e < 0) neg.emplace(d, -e);
    }
    LaurentPoly dd = expand_cyclotomic_product(neg);
    return den_sign_flipped() ? -dd : dd;
  }

  /// The value as a Laurent polynomial; throws NotDivisible otherwise.
  LaurentPoly as_laurent() const {
    if (!is_laurent()) fail(ErrorKind::NotDivisible, "rational function " + to_string() + " is not a Laurent polynomial");
    return num();
  }

  RationalFn inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
    RationalFn r;
    LaurentPoly base = poly_;
    std::map<int, int> extra;
    if (!base.is_monomial()) {
      auto [rest, f] = factor_cyclotomic(base);
      if (!rest.is_monomial()) {
        fail(ErrorKind::NotDivisible, "denominator factor (" + rest.to_string() + ") is not a product of cyclotomic polynomials");
      }
      base = std::move(rest);
      extra = std::move(f);
    }
    const auto& [e, c] = base.terms()[0];
    r.poly_ = LaurentPoly::monomial(Rational(1 / c), -e);
    for (const auto& [d, k] : factors_) r.factors_[d] -= k;
    for (const auto& [d, k] : extra) r.factors_[d] -= k;
    r.drop_zero_exponents();
    return r;
  }

  RationalFn operator-() const {
    RationalFn r = *this;
    r.poly_ = -r.poly_;
    return r;
  }

  friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RationalFn r;
    r.poly_ = a.poly_ * b.poly_;
    r.factors_ = a.factors_;
    for (const auto& [d, e] : b.factors_) r.factors_[d] += e;
    r.drop_zero_exponents();
    // Cancellation is only possible between one side's residual and the
    // other side's denominator factors.
    if (!(a.poly_.is_monomial() && b.poly_.is_monomial())) r.reduce();
    return r;
  }

  friend RationalFn operator/(const RationalFn& a, const RationalFn& b) { return a * b.inverse(); }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b) { return sum(a, b, false); }
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return sum(a, b, true); }

  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
  RationalFn& operator/=(const RationalFn& o) { return *this = *this / o; }

  RationalFn pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    RationalFn result(1L);
    RationalFn base = *this;
    while (k != 0) {
      if (k & 1) result *= base;
      k >>= 1;
      if (k != 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    if (a.factors_ == b.factors_) return a.poly_ == b.poly_;
    return (a - b).is_zero();
  }
  friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

  std::string to_string() const {
    if (is_laurent()) return num().to_string();
    return "(" + num().to_string() + ") / (" + den().to_string() + ")";
  }

 private:
  bool den_sign_flipped() const {
    // Phi_1(A) = A - 1 is the only factor with a negative constant term.
    auto it = factors_.find(1);
    return it != factors_.end() && it->second < 0 && ((-it->second) % 2 == 1);
  }

  void drop_zero_exponents() {
    for (auto it = factors_.begin(); it != factors_.end();) {
      it = it->second == 0 ? factors_.erase(it) : std::next(it);
    }
  }

  void reduce() {
    if (poly_.is_zero()) {
      factors_.clear();
      return;
    }
    for (auto& [d, e] : factors_) {
      while (e < 0 && !poly_.is_monomial()) {
        auto q = try_div_exact(poly_, cyclotomic(d));
        if (!q) break;
        poly_ = std::move(*q);
        ++e;
      }
    }
    drop_zero_exponents();
  }

  static RationalFn sum(const RationalFn& a, const RationalFn& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    RationalFn r;
    if (a.factors_ == b.factors_) {
      r.poly_ = subtract ? a.poly_ - b.poly_ : a.poly_ + b.poly_;
      r.factors_ = a.factors_;
    } else {
      std::map<int, int> common;
      for (const auto& [d, e] : a.factors_) common[d] = std::min(e, 0);
      for (const auto& [d, e] : b.factors_) {
        auto it = common.find(d);
        common[d] = std::min(it == common.end() ? 0 : it->second, e);
      }
      for (const auto& [d, e] : a.factors_) {
        auto jt = b.factors_.find(d);
        if (e > 0 && jt != b.factors_.end() && jt->second > 0) common[d] = std::min(e, jt->second);
      }
      auto cofactor = [&common](const RationalFn& x) {
        std::map<int, int> c;
        for (const auto& [d, m] : common) {
          auto it = x.factors_.find(d);
          int e = (it == x.factors_.end() ? 0 : it->second) - m;
          if (e > 0) c.emplace(d, e);
        }
        return x.poly_ * expand_cyclotomic_product(c);
      };
      LaurentPoly pa = cofactor(a);
      LaurentPoly pb = cofactor(b);
      r.poly_ = subtract ? pa - pb : pa + pb;
      r.factors_ = std::move(common);
    }
    r.drop_zero_exponents();
    r.reduce();
    return r;
  }

  LaurentPoly poly_;
  std::map<int, int> factors_;
};

inline std::ostream& operator<<(std::ostream& os, const RationalFn& r) { return os << r.to_string(); }

}  // namespace skein

#endif  // SKEIN_RATIONAL_FN_HPP
