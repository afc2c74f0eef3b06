// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each check returns a short detail string; a thrown SkeinError or
// a false result counts as a failure.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "skein/evaluate.hpp"
#include "skein/families.hpp"
#include "skein/json_io.hpp"
#include "skein/oracle.hpp"
#include "skein/tails.hpp"

using namespace skein;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SingularDiagram fixture(const std::string& name) {
  return parse_diagram(slurp(std::string(SKEIN_FIXTURE_DIR) + "/" + name + ".json"));
}

template <class F>
void for_tets(int max_label, F&& f) {
  for (int a = 0; a <= max_label; ++a)
    for (int d = 0; d <= max_label; ++d)
      for (int e = 0; e <= max_label; ++e)
        for (int fl = 0; fl <= max_label; ++fl)
          for (int c = 0; c <= max_label; ++c)
            for (int b = 0; b <= max_label; ++b) {
              const TetLabels t{a, d, e, fl, c, b};
              if (t.admissible()) f(t);
            }
}

// The 24 relabelings of a tetrahedron, as permutations of its vertices
// (a,d,e), (d,b,f), (e,c,f), (a,b,c).
TetLabels permute(const TetLabels& t, const std::array<int, 4>& p) {
  std::array<std::array<int, 4>, 4> m{};
  auto set = [&m](int i, int j, int v) { m[i][j] = m[j][i] = v; };
  set(0, 1, t.d);
  set(0, 2, t.e);
  set(0, 3, t.a);
  set(1, 2, t.f);
  set(1, 3, t.b);
  set(2, 3, t.c);
  return TetLabels{m[p[0]][p[3]], m[p[0]][p[1]], m[p[0]][p[2]], m[p[1]][p[2]], m[p[2]][p[3]], m[p[1]][p[3]]};
}

Outcome criterion1() {
  Outcome o;
  int checks = 0;
  for (int n = 1; n <= 4; ++n) {
    o.require(compose(jw(n), jw(n)) == jw(n), "f^(" + std::to_string(n) + ") not idempotent");
    for (int i = 1; i < n; ++i) {
      o.require(compose(TLElement::hook(i, n), jw(n)).is_zero() && compose(jw(n), TLElement::hook(i, n)).is_zero(),
                "hook e_" + std::to_string(i) + " does not kill f^(" + std::to_string(n) + ")");
      ++checks;
    }
    o.require(jw(n).trace_closure() == RationalFn(delta(n)), "trace closure of f^(" + std::to_string(n) + ") != Delta");
    for (int m = 1; m < n; ++m) {
      o.require(compose(tensor(jw(m), jw(n - m)), jw(n)) == jw(n), "absorption fails at n=" + std::to_string(n));
      ++checks;
    }
    checks += 2;
  }
  if (o.ok) o.detail = std::to_string(checks) + " identities, n <= 4";
  return o;
}

Outcome criterion2() {
  Outcome o;
  int cases = 0;
  for (int a = 0; a <= 12; ++a)
    for (int b = 0; b <= 12; ++b)
      for (int c = 0; c <= 12; ++c) {
        if (!admissible(a, b, c)) continue;
        o.require(theta(a, b, c) == theta_poch(a, b, c),
                  "theta(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
        ++cases;
      }
  if (o.ok) o.detail = std::to_string(cases) + " admissible triples";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::array<int, 4> perm{0, 1, 2, 3};
  std::vector<std::array<int, 4>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  int sym = 0, edge0 = 0, special = 0, oracle = 0;
  for_tets(6, [&](const TetLabels& t) {
    const RationalFn ref = tet(t);
    for (const auto& p : perms) o.require(tet(permute(t, p)) == ref, "symmetry at " + t.to_string());
    ++sym;
  });
  for_tets(8, [&](const TetLabels& t) {
    if (t.f != 0) return;
    o.require(tet(t) == theta(t.a, t.b, t.c), "edge-0 reduction at " + t.to_string());
    ++edge0;
  });
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i <= n; ++i) {
      const RationalFn lhs = tet(TetLabels{2 * i, n, n, n, 2 * n, 2 * n});
      o.require(lhs == theta(2 * n, 2 * n, 2 * i), "Tet[2i n n; n 2n 2n] at n=" + std::to_string(n));
      o.require(lhs == tet(TetLabels{2 * i, 2 * n, 2 * n, n, n, n}), "Tet swap at n=" + std::to_string(n));
      ++special;
    }
  for_tets(2, [&](const TetLabels& t) {
    o.require(eval_graph_bruteforce(tet_graph(t)) == tet(t), "oracle at " + t.to_string());
    ++oracle;
  });
  if (o.ok) {
    o.detail = std::to_string(sym) + " tetrahedra under 24 relabelings, " + std::to_string(edge0) + " edge-0, " +
               std::to_string(special) + " special, " + std::to_string(oracle) + " oracle";
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (const std::string name : {"unknot", "kinked_unknot", "trefoil", "st1", "st2"}) {
    const SingularDiagram d = fixture(name);
    o.require(colored_jones(d, 2) == eval_diagram_bruteforce(d, 2), name + " differs from oracle");
  }
  const SingularDiagram u = fixture("unknot");
  for (int m = 0; m <= 8; ++m) o.require(colored_jones(u, m) == RationalFn(delta(m)), "unknot at m=" + std::to_string(m));
  if (o.ok) o.detail = "5 fixtures at color 2, unknot m <= 8";
  return o;
}

Outcome criterion5() {
  Outcome o;
  int cases = 0;
  for (int k = 1; k <= 3; ++k)
    for (int l = 0; l <= 2; ++l)
      for (int n = 0; n <= 2; ++n) {
        o.require(st_invariant(k, l, n) * delta_rf(2 * n) == colored_jones(st_diagram(k, l), 2 * n),
                  "k=" + std::to_string(k) + " l=" + std::to_string(l) + " n=" + std::to_string(n));
        ++cases;
      }
  if (o.ok) o.detail = std::to_string(cases) + " (k,l,n) cases";
  return o;
}

Outcome criterion6() {
  Outcome o;
  EvalOptions opts;
  opts.normalized = true;
  opts.writhe_correct = true;
  const RationalFn v = colored_jones(fixture("knot_6_2"), 1, opts);
  o.require(v.is_laurent(), "normalized value is not a polynomial");
  if (!o.ok) return o;
  LaurentPoly p = v.as_laurent();
  p = p.shifted(-p.low_exp());
  if (sgn(p.low_coeff()) < 0) p = -p;
  const LaurentPoly row = LaurentPoly::from_terms({{0, 1}, {4, -2}, {8, 2}, {12, -2}, {16, 2}, {20, -1}, {24, 1}});
  o.require(p == row, "row n=2 mismatch: " + p.to_string('q', 4));

  const auto table = nlohmann::json::parse(slurp(std::string(SKEIN_FIXTURE_DIR) + "/knot_6_2_table.json"));
  std::vector<std::pair<int, QSeries>> rows;
  for (const auto& r : table.at("rows")) {
    QSeries s(4 * r.at("known_through").get<int>());
    for (const auto& t : r.at("terms")) s[4 * t[0].get<int>()] = t[1].get<long>();
    rows.emplace_back(r.at("n").get<int>(), s);
  }
  o.require(rows.front().first == 2 && normalize_series(row, rows.front().second.order()) == rows.front().second,
            "table row n=2 disagrees with the computed value");
  for (std::size_t k = 0; k + 1 < rows.size(); ++k) {
    const int got = agree_order(rows[k].second, rows[k + 1].second);
    o.require(got == rows[k].first, "rows " + std::to_string(rows[k].first) + "," + std::to_string(rows[k + 1].first) +
                                        " agree to order " + std::to_string(got));
  }
  if (o.ok) o.detail = "row n=2 exact, " + std::to_string(rows.size() - 1) + " consecutive pairs";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const QSeries lhs = tail_closed_second(4 * 100), psi = false_theta(3, 1, 4 * 100);
  o.require(lhs == psi, "first disagreement at q^" + std::to_string(first_disagreement(lhs, psi).value_or(-1)));
  if (o.ok) o.detail = "101 coefficients";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::vector<RationalFn> values;
  for (int n = 1; n <= 8; ++n) values.push_back(st_invariant(2, 0, n));
  TailReport r = empirical_tail(values, 12, {1, 2, 3, 4, 5, 6, 7, 8});
  std::string orders;
  for (std::size_t j = 0; j < r.agree_orders.size(); ++j) {
    const int n = static_cast<int>(j) + 1;
    orders += std::to_string(r.agree_orders[j]) + (j + 1 < r.agree_orders.size() ? "," : "");
    o.require(r.agree_orders[j] >= n, "agree order below n at n=" + std::to_string(n));
    if (j > 0) o.require(r.agree_orders[j] >= r.agree_orders[j - 1], "agree orders decrease at n=" + std::to_string(n));
  }
  compare_prefix(r, "second", tail_closed_second(r.prefix.order()));
  const SeriesComparison& c = r.comparisons.back();
  o.require(!c.first_disagreement.has_value(), "prefix disagrees with the second tail");
  o.require(r.prefix_terms >= 8 && c.compared_terms >= 8, "prefix shorter than 8 terms");
  if (o.ok) o.detail = "agree orders " + orders + "; prefix of " + std::to_string(r.prefix_terms) + " terms";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const std::string first = corollary_to_json(verify_corollary(100)).dump();
  const std::string second = corollary_to_json(verify_corollary(100)).dump();
  o.require(first == second, "report not deterministic");
  const CorollaryReport r = verify_corollary(100);
  o.require(r.comparisons.size() == 3, "expected three comparisons");
  if (!o.ok) return o;
  const SeriesComparison& lhs = r.comparisons[0];
  const SeriesComparison& rhs = r.comparisons[1];
  o.require(lhs.left == "lhs" && lhs.right == "psi" && !lhs.first_disagreement && lhs.compared_terms == 101,
            "lhs does not match psi through order 100");
  o.require(rhs.left == "rhs" && rhs.right == "psi" && rhs.first_disagreement.has_value(),
            "no disagreement reported for the printed form");
  if (o.ok) o.detail = "lhs = psi through q^100; printed form first disagrees at q^" + std::to_string(*rhs.first_disagreement);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Jones-Wenzl suite", criterion1},
      {"theta product form equals Pochhammer form", criterion2},
      {"tetrahedron validation", criterion3},
      {"evaluator matches oracle", criterion4},
      {"singular torus closed form matches evaluator", criterion5},
      {"6_2 colored Jones rows", criterion6},
      {"false theta identity", criterion7},
      {"tail stabilization", criterion8},
      {"three-way series report", criterion9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << o.detail
              << ", " << timing << ")" << std::endl;
    failures += o.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
