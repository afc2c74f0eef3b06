#ifndef SKEIN_JSON_IO_HPP
#define SKEIN_JSON_IO_HPP

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "skein/coeff.hpp"
#include "skein/qseries.hpp"
#include "skein/rational_fn.hpp"
#include "skein/tails.hpp"

namespace skein {

using nlohmann::json;

// Integers that fit in a long are written as JSON numbers, larger ones as
// decimal strings.

inline json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

inline mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) fail(ErrorKind::ParseError, "bad integer string");
    return z;
  }
  fail(ErrorKind::ParseError, "expected an integer");
}

/// [[exponent, numerator, denominator], ...] in ascending exponent order.
inline json poly_to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) {
    out.push_back(json::array({e, integer_to_json(c.get_num()), integer_to_json(c.get_den())}));
  }
  return out;
}

inline LaurentPoly poly_from_json(const json& j) {
  if (!j.is_array()) fail(ErrorKind::ParseError, "polynomial must be an array of triples");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer()) fail(ErrorKind::ParseError, "bad polynomial term");
    const mpz_class den = integer_from_json(t[2]);
    if (den == 0) fail(ErrorKind::ParseError, "zero denominator");
    terms.emplace_back(t[0].get<int>(), Rational(integer_from_json(t[1]), den));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

/// Laurent values carry "terms"; genuine quotients carry "num" and "den".
inline json value_to_json(const RationalFn& f) {
  if (f.is_laurent()) return json{{"laurent", true}, {"terms", poly_to_json(f.as_laurent())}};
  return json{{"laurent", false}, {"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

/// Text form: in q when every exponent is a multiple of 4, else in A.
inline std::string value_to_text(const RationalFn& f) {
  auto q_integral = [](const LaurentPoly& p) {
    for (const auto& [e, c] : p.terms()) {
      if (e % 4 != 0) return false;
    }
    return true;
  };
  auto render = [](const LaurentPoly& p, bool in_q) { return in_q ? p.to_string('q', 4) : p.to_string('A'); };
  if (f.is_laurent()) {
    const LaurentPoly p = f.as_laurent();
    return render(p, q_integral(p));
  }
  const LaurentPoly n = f.num(), d = f.den();
  const bool in_q = q_integral(n) && q_integral(d);
  return "(" + render(n, in_q) + ") / (" + render(d, in_q) + ")";
}

inline json series_to_json(const QSeries& s) {
  json coeffs = json::array();
  for (int i = 0; i <= s.order(); ++i) {
    if (sgn(s[i]) == 0) continue;
    coeffs.push_back(json::array({i, integer_to_json(s[i].get_num()), integer_to_json(s[i].get_den())}));
  }
  return json{{"order", s.order()}, {"coeffs", coeffs}};
}

inline json comparison_to_json(const SeriesComparison& c) {
  json j{{"left", c.left}, {"right", c.right}, {"compared_terms", c.compared_terms}};
  j["first_disagreement"] = c.first_disagreement ? json(*c.first_disagreement) : json(nullptr);
  return j;
}

inline std::string comparison_to_text(const SeriesComparison& c) {
  return c.left + " vs " + c.right + ": " +
         (c.first_disagreement ? "first disagreement at q^" + std::to_string(*c.first_disagreement)
                               : "agrees through " + std::to_string(c.compared_terms) + " terms");
}

inline json tail_report_to_json(const TailReport& r) {
  json j;
  j["colors"] = r.colors;
  j["agree_orders"] = r.agree_orders;
  j["prefix_terms"] = r.prefix_terms;
  j["prefix"] = series_to_json(r.prefix);
  j["normalized"] = json::array();
  for (const auto& s : r.normalized) j["normalized"].push_back(series_to_json(s));
  j["comparisons"] = json::array();
  for (const auto& c : r.comparisons) j["comparisons"].push_back(comparison_to_json(c));
  return j;
}

inline json corollary_to_json(const CorollaryReport& r) {
  json j{{"order", r.order}, {"lhs", series_to_json(r.lhs)}, {"rhs", series_to_json(r.rhs)}, {"psi", series_to_json(r.psi)}};
  j["comparisons"] = json::array();
  for (const auto& c : r.comparisons) j["comparisons"].push_back(comparison_to_json(c));
  return j;
}

// ---------------------------------------------------------------------------
// Coefficient cache persistence

inline constexpr int kCacheVersion = 1;
inline constexpr const char* kCacheEnvVar = "SKEIN_COEFF_CACHE";

inline json rf_to_cache_json(const RationalFn& f) {
  json factors = json::array();
  for (const auto& [d, e] : f.factors()) factors.push_back(json::array({d, e}));
  return json{{"residual", poly_to_json(f.residual())}, {"factors", factors}};
}

inline RationalFn rf_from_cache_json(const json& j) {
  if (!j.is_object() || !j.contains("residual") || !j.contains("factors") || !j.at("factors").is_array()) {
    fail(ErrorKind::CacheFormatError, "bad cached value");
  }
  std::map<int, int> factors;
  for (const auto& f : j.at("factors")) {
    if (!f.is_array() || f.size() != 2 || !f[0].is_number_integer() || !f[1].is_number_integer()) {
      fail(ErrorKind::CacheFormatError, "bad cyclotomic factor");
    }
    factors[f[0].get<int>()] = f[1].get<int>();
  }
  return RationalFn::factored(poly_from_json(j.at("residual")), std::move(factors));
}

inline std::string cache_dump_string(CoeffCache& cache = coeff_cache()) {
  json j{{"version", kCacheVersion}, {"theta", json::array()}, {"tet", json::array()}, {"sixj", json::array()}};
  cache.with_lock([&j](CoeffCache& c) {
    for (const auto& [k, v] : c.theta) {
      j["theta"].push_back(json{{"key", {std::get<0>(k), std::get<1>(k), std::get<2>(k)}}, {"value", rf_to_cache_json(v)}});
    }
    auto dump6 = [](json& out, const std::map<CoeffCache::Key6, RationalFn>& table) {
      for (const auto& [k, v] : table) {
        const auto [a, b, c, d, e, f] = k;
        out.push_back(json{{"key", {a, b, c, d, e, f}}, {"value", rf_to_cache_json(v)}});
      }
    };
    dump6(j["tet"], c.tet);
    dump6(j["sixj"], c.sixj);
  });
  return j.dump();
}

inline void cache_dump(const std::string& path, CoeffCache& cache = coeff_cache()) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::IoError, "cannot write cache file " + path);
  out << cache_dump_string(cache);
  if (!out) fail(ErrorKind::IoError, "failed writing cache file " + path);
}

/// Parses everything before touching the cache, so a bad file leaves it as
/// it was. Loaded entries only fill keys not yet present.
inline void cache_load_string(const std::string& text, CoeffCache& cache = coeff_cache()) {
  if (text.empty()) return;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::CacheFormatError, std::string("cache is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("version") || j.at("version") != kCacheVersion) {
    fail(ErrorKind::CacheFormatError, "cache version mismatch");
  }
  auto key_of = [](const json& e, std::size_t n) {
    if (!e.is_object() || !e.contains("key") || !e.at("key").is_array() || e.at("key").size() != n) {
      fail(ErrorKind::CacheFormatError, "bad cache key");
    }
    std::vector<int> k;
    for (const auto& x : e.at("key")) {
      if (!x.is_number_integer()) fail(ErrorKind::CacheFormatError, "bad cache key");
      k.push_back(x.get<int>());
    }
    return k;
  };
  auto section = [&j](const char* name) -> const json& {
    if (!j.contains(name) || !j.at(name).is_array()) fail(ErrorKind::CacheFormatError, std::string("missing section ") + name);
    return j.at(name);
  };
  std::map<CoeffCache::Key3, RationalFn> theta;
  std::map<CoeffCache::Key6, RationalFn> tet, sixj;
  try {
    for (const auto& e : section("theta")) {
      const auto k = key_of(e, 3);
      theta.emplace(CoeffCache::Key3{k[0], k[1], k[2]}, rf_from_cache_json(e.at("value")));
    }
    for (auto [name, table] : {std::pair{"tet", &tet}, std::pair{"sixj", &sixj}}) {
      for (const auto& e : section(name)) {
        const auto k = key_of(e, 6);
        table->emplace(CoeffCache::Key6{k[0], k[1], k[2], k[3], k[4], k[5]}, rf_from_cache_json(e.at("value")));
      }
    }
  } catch (const SkeinError& e) {
    if (e.kind() == ErrorKind::CacheFormatError) throw;
    fail(ErrorKind::CacheFormatError, e.what());
  }
  cache.with_lock([&](CoeffCache& c) {
    c.theta.insert(theta.begin(), theta.end());
    c.tet.insert(tet.begin(), tet.end());
    c.sixj.insert(sixj.begin(), sixj.end());
  });
}

inline void cache_load(const std::string& path, CoeffCache& cache = coeff_cache()) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::IoError, "cannot read cache file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  cache_load_string(buf.str(), cache);
}

/// Cache path from the environment, or empty.
inline std::string cache_path_from_env() {
  const char* p = std::getenv(kCacheEnvVar);
  return p ? std::string(p) : std::string();
}

}  // namespace skein

#endif  // SKEIN_JSON_IO_HPP
