#include "support.hpp"

#include <gtest/gtest.h>

using namespace gs_test;

namespace {

Ideal gb(const std::vector<std::string>& gens, const VarSetPtr& vs, MonomialOrder ord = MonomialOrder::grevlex()) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(P(g, vs));
  Ideal I = buchberger(std::move(ps), ord, vs);
  EXPECT_TRUE(satisfies_buchberger_criterion(I));
  EXPECT_TRUE(is_reduced_basis(I));
  return I;
}

std::vector<std::string> names(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }

TEST(Groebner, TwistedCubic) {
  auto vs = ring({"z", "y", "x"});
  Ideal I = gb({"y-x^2", "z-x^3"}, vs, MonomialOrder::lex());
  ASSERT_EQ(I.basis().size(), 2u);
  EXPECT_EQ(I.basis()[0], P("y-x^2", vs));
  EXPECT_EQ(I.basis()[1], P("z-x^3", vs));
  EXPECT_EQ(normal_form(P("z*y", vs), I), P("x^5", vs));
  EXPECT_EQ(normal_form(P("z^2-y^3", vs), I), P("0", vs));

  // The same ideal in grevlex picks up the quadrics of the cubic.
  Ideal G = gb({"y-x^2", "z-x^3"}, vs);
  EXPECT_TRUE(same_ideal(I, G));
  EXPECT_TRUE(contains(G, P("x*z-y^2", vs)));
  EXPECT_TRUE(contains(G, P("y*z-x^5", vs)));
}

TEST(Groebner, SmallBases) {
  auto vs = ring({"x", "y"});
  Ideal a = gb({"x-1"}, vs);
  ASSERT_EQ(a.basis().size(), 1u);
  EXPECT_EQ(a.basis()[0], P("x-1", vs));
  Ideal b = gb({"x", "x"}, vs);
  ASSERT_EQ(b.basis().size(), 1u);
  EXPECT_EQ(b.basis()[0], P("x", vs));
  Ideal c = gb({"2*x-4", "3*y"}, vs);
  EXPECT_EQ(c.basis()[0], P("y", vs));
  EXPECT_EQ(c.basis()[1], P("x-2", vs));
  EXPECT_TRUE(gb({"x", "x-1"}, vs).is_unit());
  EXPECT_TRUE(gb({"0"}, vs).is_zero());
}

TEST(Groebner, NormalForm) {
  auto vs = ring({"x", "y"});
  Ideal I = gb({"x^2-y"}, vs);
  EXPECT_EQ(normal_form(P("x^2", vs), I), P("y", vs));
  EXPECT_TRUE(normal_form(P("x^2-y", vs), I).is_zero());
  EXPECT_EQ(normal_form(P("1", vs), I), P("1", vs));
  EXPECT_EQ(normal_form(P("x^5", vs), I), P("x*y^2", vs));
}

TEST(Groebner, Eliminate) {
  auto vs = ring({"t", "x", "y"});
  Ideal E = eliminate(gb({"x-t", "y-t^2"}, vs), names({"t"}));
  ASSERT_EQ(E.basis().size(), 1u);
  EXPECT_EQ(E.vars()->size(), 2u);
  EXPECT_EQ(E.basis()[0], P("x^2-y", E.vars()));

  auto xy = ring({"x", "y"});
  Ideal F = eliminate(gb({"x"}, xy), names({"y"}));
  ASSERT_EQ(F.basis().size(), 1u);
  EXPECT_EQ(F.basis()[0], P("x", F.vars()));
  EXPECT_TRUE(eliminate(gb({"x*y-1"}, xy), names({"y"})).is_zero());
  EXPECT_THROW(eliminate(gb({"x"}, xy), names({"w"})), Error);
}

TEST(Groebner, Saturate) {
  auto vs = ring({"x", "y", "z"});
  Ideal S = saturate(gb({"x*y", "x*z"}, vs), P("x", vs));
  EXPECT_TRUE(same_ideal(S, gb({"y", "z"}, vs)));
  EXPECT_TRUE(saturate(gb({"x^2"}, vs), P("x", vs)).is_unit());
  EXPECT_TRUE(same_ideal(saturate(gb({"y"}, vs), P("x", vs)), gb({"y"}, vs)));
  EXPECT_TRUE(satisfies_buchberger_criterion(S));
  EXPECT_TRUE(is_reduced_basis(S));
}

TEST(Groebner, KrullDimension) {
  auto vs = ring({"x", "y", "z"});
  EXPECT_EQ(krull_dimension(gb({"x", "y"}, vs)), 1);
  EXPECT_EQ(krull_dimension(gb({"1"}, vs)), -1);
  EXPECT_EQ(krull_dimension(gb({"0"}, ring({"x", "y"}))), 2);
  EXPECT_EQ(krull_dimension(gb({"x*y", "x*z"}, vs)), 2);
}

TEST(Groebner, QuotientDimension) {
  auto vs = ring({"x", "y"});
  Ideal I = gb({"x^2", "y"}, vs);
  EXPECT_EQ(quotient_dimension(I), 2u);
  auto st = staircase(I);
  ASSERT_EQ(st.size(), 2u);
  EXPECT_TRUE(st[0].is_one());
  EXPECT_EQ(st[1][0], 1u);
  EXPECT_EQ(quotient_dimension(gb({"x-1", "y-2"}, vs)), 1u);
  EXPECT_EQ(quotient_dimension(gb({"x^2+y^2-1", "x*y"}, vs)), 4u);
  EXPECT_EQ(quotient_dimension(gb({"1"}, vs)), 0u);
  EXPECT_THROW(quotient_dimension(gb({"x*y"}, vs)), NotZeroDimensional);
}

TEST(Groebner, BlockOrderEliminates) {
  auto vs = ring({"x", "y", "z"});
  MonomialOrder ord = MonomialOrder::block({0}, 3, MonomialOrder::grevlex());
  EXPECT_TRUE(ord.less(P("y^5*z^5", vs).leading().mono, P("x", vs).leading().mono));
  EXPECT_TRUE(ord.less(P("x*z", vs).leading().mono, P("x*y", vs).leading().mono));
}

// ---------------------------------------------------------------------------
// Properties

TEST(GroebnerProperty, SPolynomialAuditOnRandomBases) {
  std::mt19937_64 g(31);
  auto vs = ring({"x", "y", "z"});
  for (int k = 0; k < 40; ++k) {
    std::vector<Polynomial> gens{random_poly(vs, g, 3, 3), random_poly(vs, g, 3, 3), random_poly(vs, g, 2, 3)};
    for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
      Ideal I = buchberger(gens, ord, vs);
      EXPECT_TRUE(satisfies_buchberger_criterion(I));
      EXPECT_TRUE(is_reduced_basis(I));
      for (const auto& p : gens) EXPECT_TRUE(contains(I, p));
    }
  }
}

TEST(GroebnerProperty, NormalFormIsLinear) {
  std::mt19937_64 g(32);
  auto vs = ring({"x", "y", "z"});
  for (int k = 0; k < 30; ++k) {
    Ideal I = buchberger({random_poly(vs, g, 3, 3), random_poly(vs, g, 2, 3)}, MonomialOrder::grevlex(), vs);
    Polynomial p = random_poly(vs, g, 4, 5), q = random_poly(vs, g, 4, 5);
    Rational a = random_rational(g), b = random_rational(g);
    EXPECT_EQ(normal_form(p * a + q * b, I), normal_form(p, I) * a + normal_form(q, I) * b);
  }
}

TEST(GroebnerProperty, SaturationIsIdempotent) {
  std::mt19937_64 g(33);
  auto vs = ring({"x", "y", "z"});
  for (int k = 0; k < 30; ++k) {
    Ideal I = buchberger({random_poly(vs, g, 3, 3), random_poly(vs, g, 3, 3)}, MonomialOrder::grevlex(), vs);
    Polynomial h = random_poly(vs, g, 2, 2);
    if (h.is_zero()) continue;
    Ideal S = saturate(I, h);
    EXPECT_TRUE(same_ideal(saturate(S, h), S));
    for (const auto& b : I.basis()) EXPECT_TRUE(contains(S, b));
  }
}

TEST(GroebnerProperty, QuotientDimensionIgnoresOrder) {
  std::mt19937_64 g(34);
  auto vs = ring({"x", "y"});
  int checked = 0;
  while (checked < 30) {
    unsigned d1 = std::uniform_int_distribution<unsigned>(1, 3)(g), d2 = std::uniform_int_distribution<unsigned>(1, 3)(g);
    Polynomial a = random_poly(vs, g, d1, 4), b = random_poly(vs, g, d2, 4);
    Ideal G = buchberger({a, b}, MonomialOrder::grevlex(), vs);
    if (!is_zero_dimensional(G)) continue;
    Ideal L = buchberger({a, b}, MonomialOrder::lex(), vs);
    EXPECT_EQ(quotient_dimension(G), quotient_dimension(L));
    // Bezout.
    EXPECT_LE(quotient_dimension(G), std::size_t(*a.total_degree()) * *b.total_degree());
    ++checked;
  }
}

TEST(GroebnerProperty, BezoutBoundOnCompleteIntersections) {
  std::mt19937_64 g(35);
  auto vs = ring({"x", "y", "z"});
  for (int k = 0; k < 20; ++k) {
    std::vector<Polynomial> gens;
    std::size_t bound = 1;
    for (std::size_t i = 0; i < 3; ++i) {
      unsigned d = std::uniform_int_distribution<unsigned>(1, 2)(g);
      Monomial m(3);
      m.set(i, d);
      Polynomial gi = Polynomial::monomial(vs, m, 1);
      if (d > 1) gi += random_poly(vs, g, d - 1, 3);
      gi += random_poly(vs, g, d, 2);
      if (!gi.total_degree() || *gi.total_degree() == 0) continue;
      bound *= *gi.total_degree();
      gens.push_back(gi);
    }
    Ideal I = buchberger(gens, MonomialOrder::grevlex(), vs);
    if (gens.size() != 3 || I.is_unit() || !is_zero_dimensional(I)) continue;
    EXPECT_LE(quotient_dimension(I), bound);
  }
}

}  // namespace
