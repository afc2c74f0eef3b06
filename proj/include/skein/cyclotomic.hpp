#ifndef SKEIN_CYCLOTOMIC_HPP
#define SKEIN_CYCLOTOMIC_HPP

#include <map>
#include <mutex>
#include <utility>

#include "skein/laurent.hpp"

namespace skein {

/// The cyclotomic polynomial Phi_d(A), memoized process-wide.
inline const LaurentPoly& cyclotomic(int d) {
  static std::mutex mu;
  static std::map<int, LaurentPoly> table;
  if (d < 1) fail(ErrorKind::InvalidArgument, "cyclotomic index must be >= 1");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = table.find(d);
    if (it != table.end()) return it->second;
  }
  LaurentPoly p = LaurentPoly::A(d) - LaurentPoly(1L);
  for (int k = 1; k < d; ++k) {
    if (d % k == 0) p = div_exact(p, cyclotomic(k));
  }
  std::lock_guard<std::mutex> lock(mu);
  // std::map never invalidates references on insert.
  return table.emplace(d, std::move(p)).first->second;
}

inline int euler_phi(int d) {
  int result = d;
  for (int p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      while (d % p == 0) d /= p;
      result -= result / p;
    }
  }
  if (d > 1) result -= result / d;
  return result;
}

/// Product of Phi_d(A)^{e_d} over a factor map with non-negative exponents.
inline LaurentPoly expand_cyclotomic_product(const std::map<int, int>& factors) {
  LaurentPoly out(1L);
  for (const auto& [d, e] : factors) {
    for (int i = 0; i < e; ++i) out *= cyclotomic(d);
  }
  return out;
}

/// Splits p into residual * prod Phi_d(A)^{e_d} by trial division. The
/// residual keeps p's monomial content and any non-cyclotomic part.
inline std::pair<LaurentPoly, std::map<int, int>> factor_cyclotomic(const LaurentPoly& p) {
  std::map<int, int> factors;
  if (p.is_zero()) return {p, factors};
  const int shift = p.low_exp();
  LaurentPoly rest = p.shifted(-shift);
  // phi(d) >= d/6 for every d below 510510, far beyond any degree used here.
  for (int d = 1; rest.high_exp() > 0 && d <= 6 * rest.high_exp() + 6; ++d) {
    if (euler_phi(d) > rest.high_exp()) continue;
    while (rest.high_exp() > 0) {
      auto q = try_div_exact(rest, cyclotomic(d));
      if (!q) break;
      rest = std::move(*q);
      ++factors[d];
    }
  }
  return {rest.shifted(shift), factors};
}

}  // namespace skein

#endif  // SKEIN_CYCLOTOMIC_HPP
