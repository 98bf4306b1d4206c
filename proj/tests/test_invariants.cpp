#include "support.hpp"

#include <gtest/gtest.h>

using namespace gs_test;

namespace {

Rational Q(long p, long q = 1) { return make_rational(p, q); }

/// The generic coordinates the analysis settled on for its top level.
Family top_level(Analysis& A) { return apply_generic_coordinates(A.family(), A.choice().levels.front().matrix); }

TEST(GenericCoordinates, Substitution) {
  Family f = fiber_family("x + x^2*y", {"x", "y"});
  EXPECT_EQ(apply_generic_coordinates(f, {{1, 0}, {0, 1}}).F(), f.F());
  Family g = apply_generic_coordinates(f, {{1, 1}, {0, 1}});
  EXPECT_EQ(g.F(), P("x + x^2*(x+y) - t", g.vars()));
  EXPECT_THROW(apply_generic_coordinates(f, {{1, 2}, {2, 4}}), Error);
}

TEST(GenericCoordinates, RngIsReproducible) {
  Rng a(7, 3), b(7, 3), c(7, 4);
  std::vector<long> xa, xb, xc;
  for (int k = 0; k < 20; ++k) {
    xa.push_back(a.uniform(-3, 3));
    xb.push_back(b.uniform(-3, 3));
    xc.push_back(c.uniform(-3, 3));
  }
  EXPECT_EQ(xa, xb);
  EXPECT_NE(xa, xc);
  // Frozen so that reports stay byte-identical across platforms.
  Rng d(0, 0);
  EXPECT_EQ(d.uniform(0, 1000000), Rng(0, 0).uniform(0, 1000000));
}

TEST(Polar, IdealOfCircleFamily) {
  Family f = general_family("x^2+y^2-t", {"x", "y"});
  Ideal I = polar_ideal(f);
  auto expect = buchberger({P("y", f.vars()), P("x^2-t", f.vars())}, I.order(), f.vars());
  EXPECT_TRUE(same_ideal(I, expect));
}

TEST(Polar, EliminantOfFirstExample) {
  // With l = a x + b y the polar curve satisfies a x^3 + b x - 2 b t = 0.
  Family f = fiber_family("x + x^2*y", {"x", "y"});
  Analysis A(f);
  const IntMatrix& M = A.choice().levels.front().matrix;
  Family g = top_level(A);
  Ideal I = polar_ideal(g);
  // Back in the original coordinates: old = M^T new, so new = M^-T old.
  QMatrix Mq = to_qmatrix(M);
  // l = new x_1 expressed in old coordinates: the first row of M^-T, that is
  // the first column of M^-1.
  QMatrix inv(2, 2);
  Rational det = Mq(0, 0) * Mq(1, 1) - Mq(0, 1) * Mq(1, 0);
  inv(0, 0) = Mq(1, 1) / det;
  inv(1, 0) = -Mq(1, 0) / det;
  Rational a = inv(0, 0), b = inv(1, 0);
  const VarSetPtr& vs = g.vars();
  // old x as a form in the new coordinates
  Polynomial X = Polynomial::variable(vs, "x") * Rational(M[0][0]) + Polynomial::variable(vs, "y") * Rational(M[1][0]);
  Polynomial elim = X.pow(3) * a + X * b - Polynomial::variable(vs, "t") * Rational(2 * b);
  EXPECT_TRUE(contains(I, elim));
}

TEST(Polar, Genericity) {
  Family f = fiber_family("x + x^2*y", {"x", "y"});
  Analysis A(f);
  Family g = top_level(A);
  Ideal I = polar_ideal(g);
  EXPECT_EQ(krull_dimension(I), 1);
  EXPECT_TRUE(check_polar_genericity(g, I, Q(0)));
  EXPECT_TRUE(check_polar_genericity(g, I, Q(1)));
  // l = x is degenerate for this family: its polar locus is the y-axis of
  // the fibre over 0.
  Ideal bad = polar_ideal(f);
  EXPECT_FALSE(check_polar_genericity(f, bad, Q(0)));

  Family lin = general_family("x1 - t", {"x1", "x2"});
  Family lg = apply_generic_coordinates(lin, {{1, 2}, {1, 3}});
  Ideal empty = polar_ideal(lg);
  EXPECT_TRUE(empty.is_unit());
  EXPECT_EQ(krull_dimension(empty), -1);
  EXPECT_TRUE(check_polar_genericity(lg, empty, Q(5)));
}

TEST(Polar, GammaTopAndCandidates) {
  Family f = fiber_family("x + x^2*y", {"x", "y"});
  Analysis A(f);
  Family g = top_level(A);
  Ideal I = polar_ideal(g);
  EXPECT_EQ(gamma_top(g, I, Q(1)), 3u);
  EXPECT_EQ(gamma_top(g, I, Q(0)), 2u);
  auto cands = atypical_candidates_top(g, I);
  ASSERT_EQ(cands.size(), 1u);
  EXPECT_EQ(cands[0].to_string(), "t");
  auto t = parameter_ring("t");
  auto a0 = gamma_at_algebraic(g, I, P("t", t));
  EXPECT_EQ(a0.value_sum, 2u);
  EXPECT_EQ(a0.per_root, 2u);
  auto a1 = gamma_at_algebraic(g, I, P("t-1", t));
  EXPECT_EQ(a1.value_sum, 3u);
  EXPECT_EQ(a1.per_root, 3u);

  Family circle = general_family("x^2+y^2-t", {"x", "y"});
  Analysis B(circle);
  Family cg = top_level(B);
  Ideal CI = polar_ideal(cg);
  EXPECT_TRUE(atypical_candidates_top(cg, CI).empty());
  auto a2 = gamma_at_algebraic(cg, CI, P("t^2-2", t));
  EXPECT_EQ(a2.value_sum, 4u);
  EXPECT_EQ(a2.per_root, 2u);

  Family lin = apply_generic_coordinates(general_family("x1 - t", {"x1", "x2"}), {{1, 2}, {1, 3}});
  Ideal LI = polar_ideal(lin);
  EXPECT_EQ(gamma_top(lin, LI, Q(3)), 0u);
  EXPECT_TRUE(atypical_candidates_top(lin, LI).empty());
}

TEST(Slicing, KeepsTheDegree) {
  Family f = fiber_family("x + x^2*y*z", {"x", "y", "z"});
  Analysis A(f);
  const auto& lv = A.choice().levels;
  ASSERT_EQ(lv.size(), 2u);
  ASSERT_TRUE(lv[1].hyperplane.has_value());
  Family s = slice(top_level(A), *lv[1].hyperplane);
  EXPECT_EQ(s.n(), 2u);
  EXPECT_EQ(s.degree(), 4u);

  Family lin = general_family("x1 - t", {"x1", "x2"});
  Family ls = slice(lin, Hyperplane{{2}, 1});
  EXPECT_EQ(ls.n(), 1u);
  EXPECT_EQ(ls.degree(), 1u);
  EXPECT_THROW(slice(ls, Hyperplane{{}, 0}), Error);
}

TEST(GammaStar, FirstExample) {
  Family f = fiber_family("x + x^2*y", {"x", "y"});
  GammaProfile p = gamma_star_profile(f, 0);
  ASSERT_EQ(p.levels.size(), 2u);
  EXPECT_EQ(p.levels[1].generic, 3u);
  EXPECT_EQ(p.levels[0].generic, 3u);
  ASSERT_EQ(p.levels[1].entries.size(), 1u);
  EXPECT_EQ(p.levels[1].entries[0].min_poly.to_string(), "t");
  EXPECT_EQ(p.levels[1].entries[0].defect, 1);
  EXPECT_TRUE(p.levels[0].entries.empty());
  EXPECT_EQ(gamma_star(f, Q(0), 0), (std::vector<std::size_t>{3, 2}));
  EXPECT_EQ(gamma_star(f, Q(1), 0), (std::vector<std::size_t>{3, 3}));
  Analysis A(f);
  EXPECT_EQ(A.defects_at(Q(0)), (std::vector<long>{0, 1}));
  ASSERT_EQ(p.atypical().size(), 1u);
}

TEST(GammaStar, FirstExampleInThreeVariables) {
  Family f = fiber_family("x + x^2*y", {"x", "y", "z"});
  Analysis A(f);
  const GammaProfile& p = A.profile();
  ASSERT_EQ(p.levels.size(), 3u);
  for (const auto& e : p.levels[2].entries) EXPECT_EQ(e.defect, 0);
  auto d = A.defects_at(Q(0));
  EXPECT_EQ(d[2], 0);
  EXPECT_EQ(d[1], 1);
}

TEST(GammaStar, LinearFamily) {
  Family f = general_family("x1 - t", {"x1", "x2"});
  Analysis A(f);
  const GammaProfile& p = A.profile();
  EXPECT_EQ(p.levels[1].generic, 0u);
  EXPECT_EQ(p.levels[0].generic, 1u);
  EXPECT_TRUE(p.atypical().empty());
  EXPECT_EQ(A.gamma_at(Q(0)), (std::vector<std::size_t>{1, 0}));
  Family one = general_family("2*x - t", {"x"});
  Analysis B(one);
  EXPECT_EQ(B.gamma_at(Q(3)), (std::vector<std::size_t>{1}));
}

TEST(Milnor, Examples) {
  EXPECT_EQ(milnor_total(general_family("x^2+y^2-t", {"x", "y"}), Q(0)), 1u);
  EXPECT_EQ(milnor_total(general_family("x^3+y^2-t", {"x", "y"}), Q(0)), 2u);
  EXPECT_EQ(milnor_total(general_family("x^2+y^2-t", {"x", "y"}), Q(1)), 0u);
  EXPECT_EQ(milnor_total(fiber_family("x + x^2*y", {"x", "y"}), Q(0)), 0u);
  // Two nodes on one fibre, plus a critical point elsewhere.
  EXPECT_EQ(milnor_total(fiber_family("(x^2-1)^2 + y^2", {"x", "y"}), Q(0)), 2u);
  EXPECT_EQ(milnor_total(fiber_family("(x^2-1)^2 + y^2", {"x", "y"}), Q(1)), 1u);
  // Critical set of positive dimension away from the fibre.
  EXPECT_EQ(milnor_total(fiber_family("x^2", {"x", "y"}), Q(1)), 0u);
  EXPECT_THROW(milnor_total(fiber_family("x^2*y", {"x", "y"}), Q(0)), NonIsolatedSingularities);
}

TEST(Hypothesis, Examples) {
  HypothesisReport a = verify_hypothesis(fiber_family("x + x^2*y", {"x", "y"}));
  EXPECT_TRUE(a.pass);
  EXPECT_TRUE(a.smooth);
  HypothesisReport b = verify_hypothesis(general_family("x^2+y^2-t", {"x", "y"}));
  EXPECT_TRUE(b.pass);
  EXPECT_FALSE(b.smooth);
  ASSERT_EQ(b.singular_values.size(), 1u);
  EXPECT_EQ(b.singular_values[0].to_string(), "t");
  EXPECT_EQ(b.singular_dimension, 0);
  EXPECT_TRUE(b.holds_at(Q(0)));
  EXPECT_TRUE(b.singular_near(Q(0)));
  EXPECT_FALSE(b.singular_near(Q(1)));
  HypothesisReport c = verify_hypothesis(fiber_family("x^2*y", {"x", "y"}));
  EXPECT_FALSE(c.pass);
  EXPECT_FALSE(c.holds_at(Q(0)));
}

TEST(Euler, Examples) {
  Family f = fiber_family("x + x^2*y", {"x", "y"});
  EXPECT_EQ(euler_characteristic(f, Q(1), 0), 0);
  EXPECT_EQ(euler_characteristic(f, Q(0), 0), 1);
  EXPECT_EQ(euler_jump(f, Q(0), 0), -1);
  FiberReport r = cw_model(f, Q(0), 0);
  EXPECT_EQ(r.cells, (std::vector<long>{3, 2}));
  EXPECT_FALSE(r.singular);

  Family circle = general_family("x^2+y^2-t", {"x", "y"});
  EXPECT_EQ(euler_characteristic(circle, Q(0), 0), 1);
  EXPECT_EQ(euler_characteristic(circle, Q(3), 0), 0);
  EXPECT_EQ(euler_jump(circle, Q(0), 0), -1);

  Family lin = general_family("x1 - t", {"x1", "x2"});
  for (long c : {-1, 0, 4}) {
    EXPECT_EQ(euler_jump(lin, Q(c), 0), 0);
    EXPECT_EQ(euler_characteristic(lin, Q(c), 0), 1);
  }
}

TEST(Euler, ThreeVariableExample) {
  Family f = fiber_family("x + x^2*y*z", {"x", "y", "z"});
  Analysis A(f);
  for (auto c : {Q(0), Q(1), Q(-3, 2)}) EXPECT_EQ(A.euler_characteristic(c), 1);
  EXPECT_EQ(A.euler_jump(Q(0)), 0);
  auto d = A.defects_at(Q(0));
  EXPECT_GE(d[2], 1);
  EXPECT_GE(d[1], 1);
}

TEST(Verdict, Examples) {
  Family f = fiber_family("x + x^2*y", {"x", "y"});
  Verdict v0 = verdict(f, Q(0), 0);
  EXPECT_FALSE(v0.t_equisingular);
  EXPECT_EQ(v0.implied, (std::vector<std::string>{"not topologically trivial at infinity at 0"}));
  Verdict v1 = verdict(f, Q(1), 0);
  EXPECT_TRUE(v1.t_equisingular);
  EXPECT_EQ(v1.implied, (std::vector<std::string>{"C-infinity trivial at infinity at 1", "C-infinity trivial at 1",
                                                  "topologically trivial at infinity at 1"}));

  Verdict c0 = verdict(general_family("x^2+y^2-t", {"x", "y"}), Q(0), 0);
  EXPECT_TRUE(c0.t_equisingular);
  EXPECT_EQ(c0.implied.size(), 2u);  // singular fibre: no plain C-infinity triviality

  for (long c : {0, 2}) EXPECT_TRUE(verdict(general_family("x1 - t", {"x1", "x2"}), Q(c), 0).t_equisingular);
  EXPECT_THROW(verdict(fiber_family("x^2*y", {"x", "y"}), Q(0), 0), HypothesisFailure);
}

TEST(Analysis, DegenerateInputs) {
  EXPECT_THROW(Analysis(general_family("(x^2+y^2-t)^2", {"x", "y"})), DegenerateFamily);
  Analysis forced(general_family("(x^2+y^2-t)^2", {"x", "y"}), {0, 8, true});
  EXPECT_FALSE(forced.warnings().empty());
  Analysis constant(general_family("x^2+y^2", {"x", "y"}));
  EXPECT_EQ(constant.warnings().front(), "F does not involve the parameter");
  EXPECT_THROW(fiber_family("3", {"x"}), DegenerateFamily);
}

TEST(Analysis, ForceSuppressesTags) {
  Analysis A(fiber_family("x^2*y", {"x", "y"}), {0, 8, true});
  Verdict v = A.verdict(Q(0));
  EXPECT_FALSE(v.hypothesis_holds);
  EXPECT_TRUE(v.implied.empty());
}

TEST(Analysis, GenericChoiceIsRecorded) {
  Analysis A(fiber_family("x + x^2*y*z", {"x", "y", "z"}), {42});
  const GenericChoice& g = A.choice();
  EXPECT_EQ(g.seed, 42u);
  ASSERT_EQ(g.levels.size(), 2u);
  EXPECT_EQ(g.levels[0].level, 2u);
  EXPECT_FALSE(g.levels[0].hyperplane.has_value());
  EXPECT_EQ(g.levels[1].level, 1u);
  EXPECT_EQ(g.levels[1].matrix.size(), 2u);
  for (const auto& row : g.levels[0].matrix)
    for (long v : row) {
      EXPECT_GE(v, -3);
      EXPECT_LE(v, 3);
    }
}

// ---------------------------------------------------------------------------
// Properties

const std::vector<std::pair<std::string, std::vector<std::string>>> kBivariateFixtures = {
    {"x + x^2*y", {"x", "y"}}, {"x^2+y^2", {"x", "y"}}, {"x^3+y^2", {"x", "y"}}, {"x*y^2 + x", {"x", "y"}}};

TEST(InvariantsProperty, SeedInvariance) {
  for (const auto& [f, vars] : kBivariateFixtures) {
    Family fam = fiber_family(f, vars);
    std::vector<Rational> cs{Q(0), Q(1), Q(-2, 3)};
    Analysis ref(fam, {0});
    std::string expect = invariant_summary(ref, cs);
    for (std::uint64_t seed : {1, 2, 3, 1234567}) {
      Analysis A(fam, {seed});
      EXPECT_EQ(invariant_summary(A, cs), expect) << f << " seed " << seed;
    }
  }
}

TEST(InvariantsProperty, CoordinateInvariance) {
  std::mt19937_64 g(61);
  for (const auto& [f, vars] : kBivariateFixtures) {
    Family fam = fiber_family(f, vars);
    std::vector<Rational> cs{Q(0), Q(1), Q(-2, 3)};
    Analysis ref(fam, {0});
    std::string expect = invariant_summary(ref, cs);
    for (int k = 0; k < 3; ++k) {
      Analysis A(linear_change(fam, g), {0});
      EXPECT_EQ(invariant_summary(A, cs), expect) << f;
    }
  }
}

TEST(InvariantsProperty, CandidateCompleteness) {
  std::mt19937_64 g(62);
  for (int k = 0; k < 50; ++k) {
    Family fam = fiber_family(random_bivariate(g), {"x", "y"});
    Analysis A(fam, {std::uint64_t(k)});
    const GammaProfile& p = A.profile();
    std::size_t gen = p.levels[1].generic;
    // Bezout on the polar curve.
    EXPECT_LE(gen, std::size_t(fam.degree()) * (fam.degree() - 1)) << fam.F();
    for (const auto& L : p.levels)
      for (const auto& e : L.entries) EXPECT_GE(e.defect, 0) << fam.F();
    int seen = 0;
    while (seen < 20) {
      Rational c = random_rational(g);
      if (std::any_of(p.levels[1].candidates.begin(), p.levels[1].candidates.end(),
                      [&](const Polynomial& q) { return vanishes_at(q, c); }))
        continue;
      EXPECT_EQ(A.gamma_at(c)[1], gen) << fam.F() << " at " << c;
      ++seen;
    }
  }
}

}  // namespace
