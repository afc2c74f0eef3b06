#include <gtest/gtest.h>

#include "skein/coeff.hpp"
#include "skein/oracle.hpp"

using namespace skein;

namespace {

LaurentPoly P(std::initializer_list<std::pair<int, long>> t) { return LaurentPoly::from_terms(t); }

SingularDiagram kinked_unknot() {
  SingularDiagram d;
  d.nodes = {{0, NodeKind::Crossing}};
  d.edges = {{0, {Port{0, 0}, Port{0, 1}}}, {1, {Port{0, 2}, Port{0, 3}}}};
  return d;
}

}  // namespace

TEST(TLCompose, Examples) {
  const RationalFn delta_loop(loop_value());
  const TLElement e1 = TLElement::hook(1, 2);
  EXPECT_EQ(compose(e1, e1), e1 * delta_loop);
  const TLElement f1 = TLElement::hook(1, 3), f2 = TLElement::hook(2, 3);
  EXPECT_EQ(compose(f1, compose(f2, f1)), f1);
  const TLElement x = e1 * RationalFn(P({{3, 2}})) + TLElement::identity(2);
  EXPECT_EQ(compose(TLElement::identity(2), x), x);
  EXPECT_EQ(compose(x, TLElement::identity(2)), x);
  EXPECT_THROW(compose(TLElement::identity(3), TLElement::identity(2)), SkeinError);
}

TEST(TLCompose, Associative) {
  const TLElement a = TLElement::hook(1, 4) + TLElement::hook(3, 4) * RationalFn(P({{1, 1}}));
  const TLElement b = TLElement::hook(2, 4) * RationalFn(P({{-2, 3}})) + TLElement::identity(4);
  const TLElement c = TLElement::hook(1, 4) + TLElement::hook(2, 4);
  EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
}

TEST(JonesWenzl, LowOrders) {
  EXPECT_EQ(jw(1), TLElement::identity(1));
  // f^(2) = id + (A^2 + A^-2)^{-1} e_1.
  const TLElement f2 = TLElement::identity(2) + TLElement::hook(1, 2) * RationalFn(P({{2, 1}, {-2, 1}})).inverse();
  EXPECT_EQ(jw(2), f2);
}

TEST(JonesWenzl, TermsArePlanarMatchings) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& [m, c] : jw(n).terms()) EXPECT_TRUE(m.is_planar());
  }
  EXPECT_EQ(jw(4).terms().size(), 14U);
}

TEST(JonesWenzl, Idempotent) {
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(compose(jw(n), jw(n)), jw(n)) << n;
}

TEST(JonesWenzl, AnnihilatedByHooks) {
  for (int n = 2; n <= 4; ++n) {
    for (int i = 1; i < n; ++i) {
      EXPECT_TRUE(compose(TLElement::hook(i, n), jw(n)).is_zero()) << n << "," << i;
      EXPECT_TRUE(compose(jw(n), TLElement::hook(i, n)).is_zero()) << n << "," << i;
    }
  }
}

TEST(JonesWenzl, Absorption) {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; m + n <= 4; ++n) {
      EXPECT_EQ(compose(tensor(jw(m), jw(n)), jw(m + n)), jw(m + n)) << m << "," << n;
    }
  }
}

TEST(JonesWenzl, TraceClosureIsDelta) {
  EXPECT_EQ(jw(3).trace_closure(), RationalFn(P({{-6, -1}, {-2, -1}, {2, -1}, {6, -1}})));
  for (int n = 0; n <= 4; ++n) {
    EXPECT_EQ(jw(n).trace_closure(), RationalFn(chebyshev_delta(n)));
    EXPECT_EQ(jw(n).trace_closure(), RationalFn(delta(n)));
  }
}

TEST(OracleGraph, CircleIsDelta) {
  for (int n = 0; n <= 4; ++n) {
    ColoredGraph g;
    g.free_loops = {n};
    EXPECT_EQ(eval_graph_bruteforce(g), RationalFn(delta(n)));
  }
}

TEST(OracleGraph, ThetaMatchesClosedForm) {
  EXPECT_EQ(eval_graph_bruteforce(theta_graph(1, 1, 2)), RationalFn(P({{-4, 1}, {0, 1}, {4, 1}})));
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) {
        if (!admissible(a, b, c)) {
          EXPECT_TRUE(eval_graph_bruteforce(theta_graph(a, b, c)).is_zero());
          continue;
        }
        EXPECT_EQ(eval_graph_bruteforce(theta_graph(a, b, c)), theta(a, b, c)) << a << b << c;
      }
}

TEST(OracleGraph, TetrahedraUpToTwoMatchClosedForm) {
  int checked = 0;
  for (int a = 0; a <= 2; ++a)
    for (int d = 0; d <= 2; ++d)
      for (int e = 0; e <= 2; ++e)
        for (int f = 0; f <= 2; ++f)
          for (int c = 0; c <= 2; ++c)
            for (int b = 0; b <= 2; ++b) {
              TetLabels t{a, d, e, f, c, b};
              if (!t.admissible()) continue;
              EXPECT_EQ(eval_graph_bruteforce(tet_graph(t)), tet(t)) << t.to_string();
              ++checked;
            }
  EXPECT_GT(checked, 20);
}

TEST(OracleGraph, TetrahedronSpotChecksAtThree) {
  for (const TetLabels& t : {TetLabels{3, 3, 2, 3, 3, 2}, TetLabels{2, 3, 3, 2, 3, 3}, TetLabels{3, 1, 2, 1, 3, 2}}) {
    ASSERT_TRUE(t.admissible()) << t.to_string();
    EXPECT_EQ(eval_graph_bruteforce(tet_graph(t)), tet(t)) << t.to_string();
  }
}

TEST(OracleGraph, Errors) {
  EXPECT_THROW(eval_graph_bruteforce(theta_graph(5, 5, 2)), SkeinError);
  ColoredGraph g = tet_graph(TetLabels{2, 1, 1, 1, 2, 2});
  std::swap(g.edges[0].ends[0].slot, g.edges[1].ends[0].slot);
  try {
    eval_graph_bruteforce(g);
    FAIL() << "expected NotPlanar";
  } catch (const SkeinError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPlanar);
  }
  try {
    eval_graph_bruteforce(tet_graph(TetLabels{2, 2, 2, 2, 2, 2}), 3);
    FAIL() << "expected TooLarge";
  } catch (const SkeinError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}

TEST(OracleDiagram, UnknotIsDelta) {
  SingularDiagram d;
  d.free_circles = 1;
  for (int m = 0; m <= 4; ++m) EXPECT_EQ(eval_diagram_bruteforce(d, m), RationalFn(delta(m)));
}

TEST(OracleDiagram, KinkIsSignedMonomialTimesDelta) {
  // Slots 0-1 and 2-3 joined: the A-smoothing splits off two loops.
  EXPECT_EQ(eval_diagram_bruteforce(kinked_unknot(), 1), RationalFn(LaurentPoly::monomial(-1, 3) * delta(1)));
  // At color 2 the framing factor is (-1)^2 A^{2*4}.
  EXPECT_EQ(eval_diagram_bruteforce(kinked_unknot(), 2), RationalFn(LaurentPoly::A(8) * delta(2)));
}

TEST(OracleDiagram, OddColorOnSingularVertex) {
  SingularDiagram d;
  d.nodes = {{0, NodeKind::Singular}};
  d.edges = {{0, {Port{0, 0}, Port{0, 1}}}, {1, {Port{0, 2}, Port{0, 3}}}};
  try {
    eval_diagram_bruteforce(d, 1);
    FAIL() << "expected OddColorOnSingular";
  } catch (const SkeinError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OddColorOnSingular);
  }
}
