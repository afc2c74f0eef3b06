#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "skein/evaluate.hpp"
#include "skein/families.hpp"
#include "skein/oracle.hpp"
#include "skein/tails.hpp"

using namespace skein;

namespace {

SingularDiagram fixture(const std::string& name) {
  std::ifstream in(std::string(SKEIN_FIXTURE_DIR) + "/" + name + ".json");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_diagram(buf.str());
}

LaurentPoly P(std::initializer_list<std::pair<int, long>> t) { return LaurentPoly::from_terms(t); }

}  // namespace

TEST(ReduceGraph, Circle) {
  for (int m = 0; m <= 8; ++m) {
    ColoredGraph g;
    g.free_loops = {m};
    EXPECT_EQ(reduce_graph(g), RationalFn(delta(m)));
  }
}

TEST(ReduceGraph, ThetaMatchesClosedForm) {
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int c = 0; c <= 6; ++c) {
        const RationalFn v = reduce_graph(theta_graph(a, b, c));
        if (!admissible(a, b, c)) {
          EXPECT_TRUE(v.is_zero());
          continue;
        }
        EXPECT_EQ(v, theta(a, b, c)) << a << b << c;
      }
}

TEST(ReduceGraph, TetrahedronMatchesClosedForm) {
  int checked = 0;
  for (int a = 0; a <= 4; ++a)
    for (int d = 0; d <= 4; ++d)
      for (int e = 0; e <= 4; ++e)
        for (int f = 0; f <= 4; ++f)
          for (int c = 0; c <= 4; ++c)
            for (int b = 0; b <= 4; ++b) {
              const TetLabels t{a, d, e, f, c, b};
              if (!t.admissible()) continue;
              EXPECT_EQ(reduce_graph(tet_graph(t)), tet(t)) << t.to_string();
              ++checked;
            }
  EXPECT_GT(checked, 500);
}

// Prisms over an n-gon: the triangular one exercises the triangle rule, the
// cube and the pentagonal prism need flips on faces of length 4 and 5.
TEST(ReduceGraph, PrismsMatchOracle) {
  auto prism = [](int sides, int x, int y) {
    ColoredGraph g;
    for (int v = 0; v < 2 * sides; ++v) g.vertices.push_back(GraphVertex{v});
    // Outer ring 0..n-1 counterclockwise with slots (next, spoke, prev);
    // inner ring n..2n-1 with slots (prev, spoke, next).
    int id = 0;
    for (int i = 0; i < sides; ++i) {
      const int j = (i + 1) % sides;
      g.edges.push_back(GraphEdge{id++, {Port{i, 0}, Port{j, 2}}, x});
      g.edges.push_back(GraphEdge{id++, {Port{sides + i, 2}, Port{sides + j, 0}}, x});
      g.edges.push_back(GraphEdge{id++, {Port{i, 1}, Port{sides + i, 1}}, y});
    }
    return g;
  };
  for (const auto& [sides, x, y] : {std::tuple{3, 1, 2}, std::tuple{3, 2, 2}, std::tuple{3, 2, 0}, std::tuple{3, 1, 0},
                                    std::tuple{3, 2, 4}, std::tuple{4, 1, 2}, std::tuple{4, 2, 2}, std::tuple{5, 1, 2},
                                    std::tuple{5, 2, 2}}) {
    const ColoredGraph g = prism(sides, x, y);
    ASSERT_TRUE(validate_graph(g).empty()) << sides << ":" << x << "," << y;
    EXPECT_EQ(reduce_graph(g), eval_graph_bruteforce(g)) << sides << ":" << x << "," << y;
  }
}

TEST(ReduceGraph, InadmissibleAndNonPlanar) {
  EXPECT_TRUE(reduce_graph(theta_graph(1, 1, 3)).is_zero());
  ColoredGraph g = tet_graph(TetLabels{2, 2, 2, 2, 2, 2});
  std::swap(g.edges[0].ends[0].slot, g.edges[1].ends[0].slot);
  try {
    reduce_graph(g);
    FAIL() << "expected NotPlanar";
  } catch (const SkeinError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPlanar);
  }
}

TEST(Expansion, SingleCrossingCoefficients) {
  const GraphSum s = expand_to_graphs(fixture("kinked_unknot"), 1);
  ASSERT_EQ(s.size(), 2U);
  // Channel 0: A^3/(A^2+A^-2); channel 2: A^-1.
  EXPECT_EQ(s[0].coeff, RationalFn(LaurentPoly::A(3)) / RationalFn(P({{2, 1}, {-2, 1}})));
  EXPECT_EQ(s[1].coeff, RationalFn(LaurentPoly::A(-1)));
  // One term per channel choice at every crossing.
  EXPECT_EQ(expand_to_graphs(fixture("trefoil"), 2).size(), 27U);
}

TEST(Expansion, OddColorOnSingular) {
  try {
    expand_to_graphs(fixture("st1"), 1);
    FAIL() << "expected OddColorOnSingular";
  } catch (const SkeinError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OddColorOnSingular);
  }
}

TEST(ColoredJones, MatchesOracleOnFixtures) {
  for (const std::string name : {"unknot", "kinked_unknot", "trefoil", "st1", "st2", "r4_a", "r5_b"}) {
    const SingularDiagram d = fixture(name);
    for (int m = 1; m <= 2; ++m) {
      if (m % 2 == 1 && d.singular_count() > 0) continue;
      EXPECT_EQ(colored_jones(d, m), eval_diagram_bruteforce(d, m)) << name << " m=" << m;
    }
  }
  // Color 3 on the trefoil runs every crossing through a 3x3 grid.
  EXPECT_EQ(colored_jones(fixture("trefoil"), 3), eval_diagram_bruteforce(fixture("trefoil"), 3));
}

TEST(ColoredJones, UnknotIsDelta) {
  const SingularDiagram u = fixture("unknot");
  for (int m = 0; m <= 8; ++m) {
    EXPECT_EQ(colored_jones(u, m), RationalFn(delta(m)));
    EXPECT_EQ(colored_jones(u, m, EvalOptions{true, false, 1}), RationalFn(1L));
  }
}

TEST(ColoredJones, KinkIsSignedMonomial) {
  const SingularDiagram k = fixture("kinked_unknot");
  for (int m = 1; m <= 6; ++m) {
    const RationalFn ratio = colored_jones(k, m) / RationalFn(delta(m));
    ASSERT_TRUE(ratio.is_laurent());
    EXPECT_TRUE(ratio.as_laurent().is_monomial()) << m;
    EXPECT_EQ(ratio.as_laurent(), twist_factor(m)) << m;
    EXPECT_EQ(colored_jones(k, m, EvalOptions{false, true, 1}), RationalFn(delta(m)));
  }
}

TEST(ColoredJones, ReidemeisterPairs) {
  for (const std::string move : {"r2", "r3", "r4", "r4_inverse", "r5"}) {
    const SingularDiagram a = fixture(move + "_a"), b = fixture(move + "_b");
    for (int m : {2, 4}) EXPECT_EQ(colored_jones(a, m), colored_jones(b, m)) << move << " m=" << m;
  }
  // The comparison is not vacuous: mirror images differ.
  EXPECT_NE(colored_jones(braid_closure(2, "s1 s1 s1"), 2), colored_jones(braid_closure(2, "s1' s1' s1'"), 2));
  EXPECT_NE(colored_jones(braid_closure(3, "s1 s2 t1 t2"), 2), colored_jones(braid_closure(3, "s1' s2 t1 t2"), 2));
}

TEST(ColoredJones, KnotSixTwoLowRows) {
  EvalOptions opts;
  opts.normalized = true;
  opts.writhe_correct = true;
  const SingularDiagram d = fixture("knot_6_2");
  const QSeries j2 = normalize_series(colored_jones(d, 1, opts), 4 * 12);
  EXPECT_EQ(j2, normalize_series(P({{0, 1}, {4, -2}, {8, 2}, {12, -2}, {16, 2}, {20, -1}, {24, 1}}), 4 * 12));
  // Color 2 against the second table row through q^9.
  const QSeries j3 = normalize_series(colored_jones(d, 2, opts), 4 * 9);
  EXPECT_EQ(j3, normalize_series(P({{0, 1}, {4, -2}, {12, 4}, {16, -5}, {24, 6}, {28, -6}, {36, 6}}), 4 * 9));
}

TEST(ColoredJones, ThreadedSumIsDeterministic) {
  const SingularDiagram d = fixture("knot_6_2");
  EvalOptions one, many;
  many.threads = 3;
  EXPECT_EQ(colored_jones(d, 2, one), colored_jones(d, 2, many));
}

TEST(ColoredJones, MemoDoesNotChangeValues) {
  const SingularDiagram d = fixture("st2");
  const RationalFn first = colored_jones(d, 4);
  detail::reduction_memo().clear();
  coeff_cache().clear();
  EXPECT_EQ(colored_jones(d, 4), first);
  EXPECT_GT(detail::reduction_memo().size(), 0U);
}
