#pragma once

#include <gammastar/gammastar.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gs_test {

using namespace gammastar;

inline Polynomial P(const std::string& text, const VarSetPtr& vs) { return parse_polynomial(text, vs); }

inline VarSetPtr ring(const std::vector<std::string>& names) {
  std::vector<Variable> vars;
  for (const auto& n : names) vars.push_back({n, VarRole::Space});
  return make_varset(std::move(vars));
}

inline Family fiber_family(const std::string& f, const std::vector<std::string>& vars) {
  return parse_family({f, vars, "t", FamilyMode::Fiber});
}

inline Family general_family(const std::string& F, const std::vector<std::string>& vars) {
  return parse_family({F, vars, "t", FamilyMode::General});
}

/// Random polynomial with small integer coefficients and total degree at most
/// maxdeg over every variable of vs.
inline Polynomial random_poly(const VarSetPtr& vs, std::mt19937_64& g, unsigned maxdeg, unsigned terms,
                              int coeff = 5) {
  std::uniform_int_distribution<int> cd(-coeff, coeff);
  Polynomial p(vs);
  for (unsigned k = 0; k < terms; ++k) {
    Monomial m(vs->size());
    unsigned budget = std::uniform_int_distribution<unsigned>(0, maxdeg)(g);
    for (unsigned b = 0; b < budget; ++b) {
      std::size_t v = std::uniform_int_distribution<std::size_t>(0, vs->size() - 1)(g);
      m.set(v, m[v] + 1);
    }
    int c = cd(g);
    if (c == 0) c = 1;
    p += Polynomial::monomial(vs, m, c);
  }
  return p;
}

/// A random f(x, y) of degree 2..4 with a nonzero top part, as text.
inline std::string random_bivariate(std::mt19937_64& g) {
  VarSetPtr vs = ring({"x", "y"});
  for (;;) {
    unsigned d = std::uniform_int_distribution<unsigned>(2, 4)(g);
    unsigned terms = std::uniform_int_distribution<unsigned>(2, 5)(g);
    Polynomial f = random_poly(vs, g, d, terms);
    auto deg = f.total_degree();
    if (!deg || *deg < 2) continue;
    if (!f.uses_variable(0) || !f.uses_variable(1)) continue;
    return f.to_string();
  }
}

/// Random small-height rational.
inline Rational random_rational(std::mt19937_64& g) {
  Rational r(std::uniform_int_distribution<long>(-40, 40)(g), std::uniform_int_distribution<long>(1, 6)(g));
  r.canonicalize();
  return r;
}

/// Everything about a family that must not depend on the generic choices:
/// the gamma profile with its atypical entries, and the fibre invariants and
/// verdicts at the given values.
inline std::string invariant_summary(Analysis& A, const std::vector<Rational>& cs) {
  std::string s;
  const GammaProfile& prof = A.profile();
  for (std::size_t i = prof.levels.size(); i-- > 0;) {
    const auto& L = prof.levels[i];
    s += "level " + std::to_string(i) + " generic " + std::to_string(L.generic) + ":";
    for (const auto& e : L.entries)
      s += " [" + e.min_poly.to_string() + " sum " + std::to_string(e.value_sum) + " root " +
           std::to_string(e.per_root) + " defect " + std::to_string(e.defect) + "]";
    s += "\n";
  }
  for (const auto& c : cs) {
    FiberReport f = A.fiber(c);
    s += "c " + to_string(c) + " mu " + std::to_string(f.mu) + " chi " + std::to_string(f.chi) + " gamma";
    for (auto g : f.gamma) s += " " + std::to_string(g);
    s += " cells";
    for (auto k : f.cells) s += " " + std::to_string(k);
    Verdict v = A.verdict(c);
    s += v.t_equisingular ? " equisingular" : " not-equisingular";
    for (const auto& t : v.implied) s += " {" + t + "}";
    s += "\n";
  }
  return s;
}

/// The family after a linear change of space coordinates.
inline Family linear_change(const Family& fam, std::mt19937_64& g) {
  std::size_t n = fam.n();
  for (;;) {
    IntMatrix M(n, std::vector<long>(n));
    for (auto& row : M)
      for (auto& v : row) v = std::uniform_int_distribution<long>(-2, 2)(g);
    if (rank(to_qmatrix(M)) == n) return apply_generic_coordinates(fam, M);
  }
}

// ---------------------------------------------------------------------------
// Independent resultant oracle for bivariate families.
//
// In coordinates (y1, y2) with y1 the generic form, the polar points on a
// nonsingular fibre X_c are the solutions of F_c = dF_c/dy2 = 0. When F_c has
// constant leading coefficient in y2, their number with multiplicity is the
// y1-degree of the resultant Res_y2(F_c, dF_c/dy2). The degree is read off
// from values at y1 = 0, 1, ..., N by finite differences; each value is a
// Sylvester determinant over Q.

/// Coefficients, low to high in y2, of g(a, y2) where g lives over (y1, y2).
inline std::vector<Rational> row_at(const Polynomial& g, const Rational& a) {
  std::vector<Rational> out;
  for (const auto& t : g.terms()) {
    unsigned i = t.mono[0], j = t.mono[1];
    if (out.size() <= j) out.resize(j + 1, Rational(0));
    Rational v = t.coeff;
    for (unsigned k = 0; k < i; ++k) v *= a;
    out[j] += v;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

inline Rational determinant(std::vector<std::vector<Rational>> m) {
  std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

/// Sylvester resultant of a (degree p) and b (degree q), both low to high.
inline Rational sylvester(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::size_t p = a.size() - 1, q = b.size() - 1, n = p + q;
  if (n == 0) return 1;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t k = 0; k <= p; ++k) m[r][r + k] = a[p - k];
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t k = 0; k <= q; ++k) m[q + r][r + k] = b[q - k];
  return determinant(std::move(m));
}

/// Degree in y1 of Res_y2(g, dg/dy2) for g over (y1, y2); -1 if the
/// resultant vanishes identically, nullopt if the leading coefficient of g
/// in y2 is not a nonzero constant.
inline std::optional<int> resultant_degree(const Polynomial& g) {
  unsigned d = g.degree_in(1).value_or(0);
  for (const auto& t : g.terms())
    if (t.mono[1] == d && t.mono[0] != 0) return std::nullopt;
  if (d == 0) return std::nullopt;
  Polynomial dg = partial_derivative(g, 1);
  unsigned total = *g.total_degree();
  std::size_t N = std::size_t(total) * total + 2;
  std::vector<Rational> vals;
  for (std::size_t a = 0; a <= N; ++a) {
    Rational ra(static_cast<long>(a));
    auto A = row_at(g, ra), B = row_at(dg, ra);
    vals.push_back(B.empty() ? Rational(0) : sylvester(A, B));
  }
  int deg = -1;
  for (std::size_t k = 0; k < vals.size(); ++k) {
    if (std::any_of(vals.begin(), vals.end() - long(k), [](const Rational& v) { return v != 0; })) deg = int(k);
    for (std::size_t i = 0; i + 1 < vals.size() - k; ++i) vals[i] = vals[i + 1] - vals[i];
  }
  return deg;
}

/// F over (x, y, t) rewritten by old x_j = sum_i M[i][j] y_i, then fixed at
/// t = c, as a polynomial over (y1, y2).
inline Polynomial oracle_fibre(const Family& fam, const IntMatrix& M, const Rational& c) {
  VarSetPtr ys = ring({"y1", "y2"});
  const VarSet& vs = fam.F().varset();
  std::vector<Polynomial> images(vs.size(), Polynomial(ys));
  for (std::size_t j = 0; j < 2; ++j) {
    Polynomial form(ys);
    for (std::size_t i = 0; i < 2; ++i) form += Polynomial::variable(ys, i) * Rational(M[i][j]);
    images[fam.space_index(j)] = form;
  }
  images[fam.parameter_index()] = Polynomial::constant(ys, c);
  Polynomial out(ys);
  for (const auto& t : fam.F().terms()) {
    Polynomial term = Polynomial::constant(ys, t.coeff);
    for (std::size_t i = 0; i < vs.size(); ++i) term *= images[i].pow(t.mono[i]);
    out += term;
  }
  return out;
}

}  // namespace gs_test
