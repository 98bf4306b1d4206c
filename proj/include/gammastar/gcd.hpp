#pragma once

#include <gammastar/polynomial.hpp>

namespace gammastar {

/// Exact multivariate division; throws when `g` does not divide `p`.
inline Polynomial exact_divide(const Polynomial& p, const Polynomial& g) {
  if (g.is_zero()) throw Error("division by the zero polynomial");
  if (!same_varset(p.vars(), g.vars())) throw VarSetMismatch();
  Polynomial q(p.vars());
  Polynomial r = p;
  const Term& lg = g.leading();
  std::vector<Term> quotient;
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    if (!lg.mono.divides(lr.mono)) throw Error("inexact polynomial division");
    Monomial m = lr.mono / lg.mono;
    Rational c = lr.coeff / lg.coeff;
    quotient.push_back({m, c});
    r -= g.mul_term(m, c);
  }
  return Polynomial::from_terms(p.vars(), std::move(quotient));
}

/// Pseudo-remainder of a by b with respect to variable v.
inline Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t v) {
  auto cb = coefficients_in(b, v);
  unsigned db = static_cast<unsigned>(cb.size() - 1);
  const Polynomial& lcb = cb.back();
  Polynomial r = a;
  while (!r.is_zero()) {
    unsigned dr = *r.degree_in(v);
    if (dr < db) break;
    Polynomial lcr = coefficients_in(r, v).back();
    Monomial shift(r.varset().size());
    shift.set(v, dr - db);
    r = lcb * r - (lcr * b).mul_term(shift, 1);
    r = primitive_integer(r);
  }
  return r;
}

inline Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b);

/// gcd of the coefficients of p viewed as a polynomial in v.
inline Polynomial content_in(const Polynomial& p, std::size_t v) {
  Polynomial g(p.vars());
  for (const auto& c : coefficients_in(p, v)) {
    if (c.is_zero()) continue;
    g = polynomial_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

inline Polynomial primitive_part_in(const Polynomial& p, std::size_t v) {
  if (p.is_zero()) return p;
  return primitive_integer(exact_divide(p, content_in(p, v)));
}

/// Multivariate gcd over Q by primitive pseudo-remainder sequences on the
/// highest-index variable present, recursing into contents. The result is
/// the primitive integer representative (positive leading coefficient).
inline Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b) {
  if (!same_varset(a.vars(), b.vars())) throw VarSetMismatch();
  if (a.is_zero()) return primitive_integer(b);
  if (b.is_zero()) return primitive_integer(a);
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(a.vars(), 1);

  std::size_t n = a.varset().size();
  std::size_t v = n;
  for (std::size_t i = n; i-- > 0;)
    if (a.uses_variable(i) || b.uses_variable(i)) {
      v = i;
      break;
    }
  if (!a.uses_variable(v)) return polynomial_gcd(a, content_in(b, v));
  if (!b.uses_variable(v)) return polynomial_gcd(content_in(a, v), b);

  Polynomial ca = content_in(a, v);
  Polynomial cb = content_in(b, v);
  Polynomial c = polynomial_gcd(ca, cb);
  Polynomial pa = primitive_integer(exact_divide(a, ca));
  Polynomial pb = primitive_integer(exact_divide(b, cb));
  if (*pa.degree_in(v) < *pb.degree_in(v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Polynomial r = pseudo_remainder(pa, pb, v);
    pa = std::move(pb);
    pb = r.is_zero() ? r : primitive_part_in(r, v);
  }
  Polynomial g = *pa.degree_in(v) == 0 ? Polynomial::constant(a.vars(), 1)
                                       : primitive_part_in(pa, v);
  return primitive_integer(c * g);
}

/// Product of the distinct irreducible factors of p (up to a constant),
/// computed as p / gcd(p, dp/dx_1, ..., dp/dx_k) over all variables.
inline Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw Error("squarefree part of the zero polynomial");
  if (p.is_constant()) return Polynomial::constant(p.vars(), 1);
  Polynomial g = p;
  for (std::size_t i = 0; i < p.varset().size() && !g.is_constant(); ++i)
    if (p.uses_variable(i)) g = polynomial_gcd(g, partial_derivative(p, i));
  return primitive_integer(exact_divide(p, g));
}

}  // namespace gammastar
