#pragma once

#include <gammastar/error.hpp>
#include <gammastar/monomial.hpp>
#include <gammastar/rational.hpp>
#include <gammastar/varset.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gammastar {

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse multivariate polynomial over Q. Terms are stored in descending
/// grevlex order with no zero coefficients, so equal polynomials over equal
/// variable sets have identical term lists.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(VarSetPtr vars) : vars_(std::move(vars)) {}

  static Polynomial constant(VarSetPtr vars, const Rational& c) {
    Polynomial p(std::move(vars));
    if (c != 0) p.terms_.push_back({Monomial(p.vars_->size()), c});
    return p;
  }

  static Polynomial variable(VarSetPtr vars, std::size_t index) {
    Monomial m(vars->size());
    m.set(index, 1);
    Polynomial p(std::move(vars));
    p.terms_.push_back({m, Rational(1)});
    return p;
  }

  static Polynomial variable(VarSetPtr vars, std::string_view name) {
    std::size_t i = vars->index_of(name);
    return variable(std::move(vars), i);
  }

  static Polynomial monomial(VarSetPtr vars, Monomial m, Rational c = 1) {
    Polynomial p(std::move(vars));
    if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  /// Builds the canonical form of an arbitrary term list.
  static Polynomial from_terms(VarSetPtr vars, std::vector<Term> terms) {
    Polynomial p(std::move(vars));
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      return grevlex_cmp(a.mono, b.mono) > 0;
    });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else if (t.coeff != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const VarSetPtr& vars() const noexcept { return vars_; }
  const VarSet& varset() const noexcept { return *vars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  Rational constant_value() const {
    for (const auto& t : terms_)
      if (t.mono.is_one()) return t.coeff;
    return 0;
  }
  /// Leading term under grevlex.
  const Term& leading() const { return terms_.front(); }

  bool uses_variable(std::size_t i) const {
    for (const auto& t : terms_)
      if (t.mono[i]) return true;
    return false;
  }

  std::optional<unsigned> degree_in(std::size_t i) const {
    if (is_zero()) return std::nullopt;
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[i]);
    return d;
  }

  std::optional<unsigned> total_degree() const {
    if (is_zero()) return std::nullopt;
    return terms_.front().mono.degree();
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  Polynomial operator+(const Polynomial& q) const { return combine(q, 1); }
  Polynomial operator-(const Polynomial& q) const { return combine(q, -1); }

  Polynomial operator*(const Polynomial& q) const {
    check_same(q);
    if (is_zero() || q.is_zero()) return Polynomial(vars_);
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(terms_.size() * q.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : q.terms_) acc[a.mono * b.mono] += a.coeff * b.coeff;
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) out.push_back({m, std::move(c)});
    return from_terms(vars_, std::move(out));
  }

  Polynomial operator*(const Rational& c) const {
    if (c == 0) return Polynomial(vars_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
  Polynomial& operator-=(const Polynomial& q) { return *this = *this - q; }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  /// Multiplies by a single term.
  Polynomial mul_term(const Monomial& m, const Rational& c) const {
    Polynomial r(vars_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(vars_, 1);
    Polynomial base = *this;
    while (e) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  bool operator==(const Polynomial& q) const {
    if (!same_varset(vars_, q.vars_)) return false;
    if (terms_.size() != q.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].mono == q.terms_[i].mono) ||
          terms_[i].coeff != q.terms_[i].coeff)
        return false;
    return true;
  }

  /// Divides by the leading coefficient (grevlex).
  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this * Rational(1 / terms_.front().coeff);
  }

  std::string to_string() const;

 private:
  void check_same(const Polynomial& q) const {
    if (!same_varset(vars_, q.vars_)) throw VarSetMismatch();
  }

  Polynomial combine(const Polynomial& q, int sign) const {
    check_same(q);
    Polynomial r(vars_);
    r.terms_.reserve(terms_.size() + q.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < q.terms_.size()) {
      int c = i == terms_.size()     ? -1
              : j == q.terms_.size() ? 1
                                     : grevlex_cmp(terms_[i].mono, q.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        Term t = q.terms_[j++];
        if (sign < 0) t.coeff = -t.coeff;
        r.terms_.push_back(std::move(t));
      } else {
        Rational s = sign > 0 ? Rational(terms_[i].coeff + q.terms_[j].coeff)
                              : Rational(terms_[i].coeff - q.terms_[j].coeff);
        if (s != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  VarSetPtr vars_;
  std::vector<Term> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

inline std::string monomial_to_string(const Monomial& m, const VarSet& vs) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!out.empty()) out += '*';
    out += vs[i].name;
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

inline std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += gammastar::to_string(c);
    } else {
      if (c != 1) out += gammastar::to_string(c) + "*";
      out += monomial_to_string(t.mono, *vars_);
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.to_string();
}

// ---------------------------------------------------------------------------
// Structural operations

inline Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    unsigned e = t.mono[var];
    if (!e) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, t.coeff * e});
  }
  return Polynomial::from_terms(p.vars(), std::move(out));
}

inline Polynomial partial_derivative(const Polynomial& p, std::string_view var) {
  return partial_derivative(p, p.varset().index_of(var));
}

/// Rewrites `p` (over its own variables) into `target`, matching by name.
inline Polynomial rebase(const Polynomial& p, const VarSetPtr& target) {
  if (same_varset(p.vars(), target)) return Polynomial::from_terms(target, p.terms());
  const VarSet& src = p.varset();
  std::vector<std::optional<std::size_t>> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) map[i] = target->find(src[i].name);
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (!t.mono[i]) continue;
      if (!map[i]) throw UnknownVariable(src[i].name);
      m.set(*map[i], t.mono[i]);
    }
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

/// Simultaneous substitution x_i -> images[i] (images over `target`); the
/// variables without an image are carried over by name.
inline Polynomial compose(const Polynomial& p,
                          const std::map<std::size_t, Polynomial>& images,
                          const VarSetPtr& target) {
  const VarSet& src = p.varset();
  std::vector<Polynomial> base(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto it = images.find(i);
    if (it != images.end()) {
      if (!same_varset(it->second.vars(), target)) throw VarSetMismatch();
      base[i] = it->second;
    } else if (p.uses_variable(i)) {
      base[i] = Polynomial::variable(target, target->index_of(src[i].name));
    }
  }
  std::vector<std::vector<Polynomial>> powers(src.size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * base[i]);
    return cache[e];
  };
  Polynomial result(target);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < src.size(); ++i)
      if (t.mono[i]) term *= power(i, t.mono[i]);
    result += term;
  }
  return result;
}

/// Substitutes affine forms for variables. An assignment may refer to its own
/// variable (a shift such as x -> x+1) but not to another assigned variable.
/// The result lives over the variables that remain in use.
inline Polynomial substitute_linear(const Polynomial& p,
                                    const std::map<std::string, Polynomial>& assignments) {
  const VarSet& vs = p.varset();
  std::map<std::size_t, Polynomial> images;
  std::vector<std::string> eliminated;
  for (const auto& [name, form] : assignments) {
    std::size_t i = vs.index_of(name);
    if (!same_varset(form.vars(), p.vars())) throw VarSetMismatch();
    auto deg = form.total_degree();
    if (deg && *deg > 1) throw Error("assignment for '" + name + "' is not affine");
    for (const auto& [other, _] : assignments)
      if (other != name && form.uses_variable(vs.index_of(other)))
        throw Error("cyclic assignment between '" + name + "' and '" + other + "'");
    if (!form.uses_variable(i)) eliminated.push_back(name);
    images.emplace(i, form);
  }
  VarSetPtr target = without(vs, eliminated);
  std::map<std::size_t, Polynomial> rebased;
  for (auto& [i, form] : images) rebased.emplace(i, rebase(form, target));
  return compose(p, rebased, target);
}

/// Sets one variable to a rational value and drops it from the variable set.
inline Polynomial specialize(const Polynomial& p, std::string_view var, const Rational& value) {
  const VarSet& vs = p.varset();
  std::size_t v = vs.index_of(var);
  std::string name(var);
  VarSetPtr target = without(vs, std::span<const std::string>(&name, 1));
  std::vector<Term> out;
  out.reserve(p.size());
  std::vector<Rational> pw{1};
  for (const auto& t : p.terms()) {
    unsigned e = t.mono[v];
    while (pw.size() <= e) pw.push_back(pw.back() * value);
    if (pw[e] == 0) continue;
    Monomial m(target->size());
    for (std::size_t i = 0, k = 0; i < vs.size(); ++i) {
      if (i == v) continue;
      m.set(k++, t.mono[i]);
    }
    out.push_back({m, t.coeff * pw[e]});
  }
  return Polynomial::from_terms(target, std::move(out));
}

inline Rational evaluate(const Polynomial& p, const std::map<std::string, Rational>& point) {
  const VarSet& vs = p.varset();
  std::vector<Rational> values(vs.size());
  std::vector<bool> have(vs.size(), false);
  for (const auto& [name, val] : point) {
    auto i = vs.find(name);
    if (!i) throw UnknownVariable(name);
    values[*i] = val;
    have[*i] = true;
  }
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational prod = t.coeff;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (!t.mono[i]) continue;
      if (!have[i]) throw Error("missing assignment for '" + vs[i].name + "'");
      for (unsigned k = 0; k < t.mono[i]; ++k) prod *= values[i];
    }
    sum += prod;
  }
  return sum;
}

inline unsigned space_degree_of(const Monomial& m, const VarSet& vs) {
  unsigned d = 0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i].role == VarRole::Space) d += m[i];
  return d;
}

/// Total degree in the space variables; nullopt for the zero polynomial.
inline std::optional<unsigned> space_degree(const Polynomial& p) {
  if (p.is_zero()) return std::nullopt;
  unsigned d = 0;
  for (const auto& t : p.terms()) d = std::max(d, space_degree_of(t.mono, p.varset()));
  return d;
}

/// The terms of maximal space degree.
inline Polynomial leading_space_form(const Polynomial& p) {
  auto d = space_degree(p);
  if (!d) return p;
  std::vector<Term> out;
  for (const auto& t : p.terms())
    if (space_degree_of(t.mono, p.varset()) == *d) out.push_back(t);
  return Polynomial::from_terms(p.vars(), std::move(out));
}

/// Homogenizes with respect to the space variables only, by a fresh
/// auxiliary variable appended to the variable set.
inline Polynomial homogenize_space(const Polynomial& p, const std::string& x0) {
  if (p.is_zero()) throw Error("cannot homogenize the zero polynomial");
  if (p.varset().find(x0)) throw Error("homogenizing variable '" + x0 + "' is not fresh");
  VarSetPtr target = with_variable(p.varset(), {x0, VarRole::Auxiliary});
  unsigned d = *space_degree(p);
  std::size_t n = p.varset().size();
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < n; ++i) m.set(i, t.mono[i]);
    m.set(n, d - space_degree_of(t.mono, p.varset()));
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

/// Sets the auxiliary variable x0 to 1 and drops it.
inline Polynomial dehomogenize(const Polynomial& p, const std::string& x0) {
  return specialize(p, x0, 1);
}

/// Coefficients of p as a polynomial in variable `var`, index = power.
inline std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
  auto d = p.degree_in(var);
  if (!d) return {};
  std::vector<std::vector<Term>> buckets(*d + 1);
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    unsigned e = m[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coeff});
  }
  std::vector<Polynomial> out;
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(p.vars(), std::move(b)));
  return out;
}

/// Clears denominators and content: the primitive integer multiple with a
/// positive leading coefficient.
inline Polynomial primitive_integer(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer den = 1, num = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (p.terms().front().coeff < 0) scale = -scale;
  return p * scale;
}

}  // namespace gammastar
