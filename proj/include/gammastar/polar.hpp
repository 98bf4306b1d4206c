#pragma once

#include <gammastar/family.hpp>
#include <gammastar/groebner.hpp>
#include <gammastar/upoly.hpp>

#include <string>
#include <vector>

namespace gammastar {

/// Signals that a random generic choice missed the open dense set it was
/// meant to hit; callers resample.
class GenericityFailure : public Error {
 public:
  using Error::Error;
};

/// The one-variable ring Q[t] holding parameter polynomials.
inline VarSetPtr parameter_ring(const std::string& name) {
  return make_varset({{name, VarRole::Parameter}});
}

inline Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  return primitive_integer(exact_divide(a * b, polynomial_gcd(a, b)));
}

/// Degree of a univariate parameter polynomial.
inline unsigned parameter_degree(const Polynomial& p) { return p.degree_in(0).value_or(0); }

inline bool vanishes_at(const Polynomial& p, const Rational& c) {
  return evaluate(p, {{p.varset()[0].name, c}}) == 0;
}

/// The rational root of a linear parameter polynomial.
inline std::optional<Rational> rational_root(const Polynomial& p) {
  if (parameter_degree(p) != 1) return std::nullopt;
  auto cs = coefficients_in(p, 0);
  return Rational(-cs[0].constant_value() / cs[1].constant_value());
}

/// (F, dF/dx_2, ..., dF/dx_n) saturated by dF/dx_1, under the order graded
/// by space degree. Assumes generic coordinates with x_1 the generic form.
inline Ideal polar_ideal(const Family& fam) {
  const Polynomial& F = fam.F();
  MonomialOrder ord = MonomialOrder::space_graded(F.varset());
  std::vector<Polynomial> gens{F};
  for (std::size_t k = 1; k < fam.n(); ++k) gens.push_back(partial_derivative(F, fam.space_index(k)));
  Polynomial g = partial_derivative(F, fam.space_index(0));
  if (g.is_zero()) throw GenericityFailure("F does not involve the generic coordinate");
  return saturate(buchberger(std::move(gens), ord, fam.vars()), g);
}

/// The polar locus must be a curve or empty.
inline bool polar_is_curve_or_empty(const Ideal& polar) {
  int d = krull_dimension(polar);
  return d == -1 || d == 1;
}

/// Pass iff the polar locus is a curve or empty and meets the fibre over c
/// in finitely many points.
inline bool check_polar_genericity(const Family& fam, const Ideal& polar, const Rational& c) {
  if (!polar_is_curve_or_empty(polar)) return false;
  if (polar.is_unit()) return true;
  std::vector<Polynomial> gens;
  for (const auto& b : polar.basis()) gens.push_back(specialize(b, fam.parameter_name(), c));
  Ideal J = buchberger(std::move(gens), MonomialOrder::grevlex(),
                       without(fam.F().varset(), std::vector<std::string>{fam.parameter_name()}));
  return J.is_unit() || is_zero_dimensional(J);
}

/// Intersection multiplicity of the polar curve with the fibre over c.
inline std::size_t gamma_top(const Family& fam, const Ideal& polar, const Rational& c) {
  if (polar.is_unit()) return 0;
  std::vector<Polynomial> gens;
  for (const auto& b : polar.basis()) gens.push_back(specialize(b, fam.parameter_name(), c));
  VarSetPtr space = without(fam.F().varset(), std::vector<std::string>{fam.parameter_name()});
  Ideal J = buchberger(std::move(gens), MonomialOrder::grevlex(), space);
  return quotient_dimension(J);
}

/// Parameter values over which the projective closure (in space, by a
/// homogenizing x0) of V(I) meets x0 = 0. I must carry a basis under an
/// order graded by space degree, so the leading space forms of its basis
/// generate the part at infinity. The cone at infinity is covered by the
/// affine charts x_i = 1. Returns the generator in Q[t] (1 when empty, 0
/// when every parameter value is hit).
inline Polynomial infinity_image(const Family& fam, const Ideal& I) {
  VarSetPtr tring = parameter_ring(fam.parameter_name());
  Polynomial acc = Polynomial::constant(tring, 1);
  if (I.is_unit()) return acc;
  const VarSet& vs = fam.F().varset();
  std::vector<Polynomial> forms;
  for (const auto& b : I.basis()) forms.push_back(leading_space_form(b));
  for (std::size_t k = 0; k < fam.n(); ++k) {
    std::string xi = vs[fam.space_index(k)].name;
    std::vector<Polynomial> chart;
    bool empty = false;
    for (const auto& f : forms) {
      Polynomial g = specialize(f, xi, 1);
      if (g.is_zero()) continue;
      if (g.is_constant()) {
        empty = true;
        break;
      }
      chart.push_back(std::move(g));
    }
    if (empty) continue;
    VarSetPtr cvs = without(vs, std::vector<std::string>{xi});
    std::vector<std::string> others;
    for (std::size_t j = 0; j < fam.n(); ++j)
      if (j != k) others.push_back(vs[fam.space_index(j)].name);
    std::vector<std::size_t> block;
    for (const auto& o : others) block.push_back(cvs->index_of(o));
    Ideal J = buchberger(std::move(chart), MonomialOrder::block(block, cvs->size(), MonomialOrder::grevlex()),
                         cvs);
    if (J.is_unit()) continue;
    Ideal E = eliminate(J, others);
    if (E.is_zero()) return Polynomial::constant(tring, 0);
    Polynomial g = rebase(E.basis().front(), tring);
    if (g.is_constant()) continue;
    acc = lcm(acc, g);
  }
  return primitive_integer(acc);
}

/// Irreducible parameter polynomials over whose roots the polar curve
/// reaches infinity.
inline std::vector<Polynomial> atypical_candidates_top(const Family& fam, const Ideal& polar) {
  Polynomial g = infinity_image(fam, polar);
  if (g.is_zero()) throw GenericityFailure("polar curve meets infinity over every parameter value");
  return irreducible_factors(g, 0);
}

struct AlgebraicGamma {
  std::size_t value_sum = 0;
  std::size_t per_root = 0;
};

/// Sum of the polar intersection multiplicities over the roots of an
/// irreducible p, and the common value per root.
inline AlgebraicGamma gamma_at_algebraic(const Family& fam, const Ideal& polar, const Polynomial& p) {
  unsigned deg = parameter_degree(p);
  if (deg == 0) throw Error("gamma_at_algebraic needs a non-constant parameter polynomial");
  if (polar.is_unit()) return {0, 0};
  Ideal J = extend(polar, {rebase(p, fam.vars())});
  std::size_t sum = quotient_dimension(J);
  if (sum % deg) throw InvariantViolation("polar multiplicity sum is not divisible by the degree");
  return {sum, sum / deg};
}

/// Degree of the reduced fibre over a rational value.
inline std::size_t reduced_degree(const Family& fam, const Rational& c) {
  Polynomial f = fam.fiber(c);
  if (f.is_zero()) throw DegenerateFamily("the fibre over " + to_string(c) + " is the whole space");
  return *space_degree(squarefree_part(f));
}

/// Coefficients, as parameter polynomials, of the space monomials of the
/// degree-k part of F.
inline std::vector<Polynomial> degree_part_coefficients(const Family& fam, unsigned k) {
  VarSetPtr tring = parameter_ring(fam.parameter_name());
  const VarSet& vs = fam.F().varset();
  std::size_t t = fam.parameter_index();
  std::map<std::vector<unsigned>, std::vector<Term>> buckets;
  for (const auto& term : fam.F().terms()) {
    if (space_degree_of(term.mono, vs) != k) continue;
    std::vector<unsigned> key;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (i != t) key.push_back(term.mono[i]);
    Monomial m(1);
    m.set(0, term.mono[t]);
    buckets[key].push_back({m, term.coeff});
  }
  std::vector<Polynomial> out;
  for (auto& [key, terms] : buckets) out.push_back(Polynomial::from_terms(tring, std::move(terms)));
  return out;
}

/// Parameter values where the degree of the fibre drops: irreducible factors
/// of the gcd of the top-degree coefficients.
inline std::vector<Polynomial> degree_drop_candidates(const Family& fam) {
  auto cs = degree_part_coefficients(fam, fam.degree());
  Polynomial g = Polynomial::constant(parameter_ring(fam.parameter_name()), 0);
  for (const auto& c : cs) g = polynomial_gcd(g, c);
  if (g.is_zero() || g.is_constant()) return {};
  return irreducible_factors(g, 0);
}

/// Degree of the fibre over a root of the irreducible p: the largest k whose
/// degree-k part does not vanish identically modulo p.
inline std::size_t degree_at_algebraic(const Family& fam, const Polynomial& p) {
  for (unsigned k = fam.degree(); k > 0; --k)
    for (const auto& c : degree_part_coefficients(fam, k))
      if (parameter_degree(polynomial_gcd(c, p)) < parameter_degree(p)) return k;
  return 0;
}

}  // namespace gammastar
