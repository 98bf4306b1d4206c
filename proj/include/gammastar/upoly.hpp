#pragma once

#include <gammastar/gcd.hpp>
#include <gammastar/polynomial.hpp>

#include <algorithm>
#include <cstdint>
#include <vector>

// Univariate factorization over Q for the parameter polynomials that carry
// atypical values: Berlekamp modulo a small prime, Hensel lifting, and
// recombination of lifted factors by subset search.

namespace gammastar {

/// Dense integer polynomial, coefficients from degree 0 upward, no trailing
/// zeros. The zero polynomial is empty.
using ZPoly = std::vector<Integer>;

namespace detail {

using ModPoly = std::vector<std::int64_t>;

inline void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
inline void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2;
  a = mod(a, p);
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline ModPoly reduce_mod(const ZPoly& a, std::int64_t p) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer q = a[i] % p;
    r[i] = mod(q.get_si(), p);
  }
  trim(r);
  return r;
}

inline ModPoly mul(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

inline ModPoly sub(ModPoly a, const ModPoly& b, std::int64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i], p);
  trim(a);
  return a;
}

inline void divmod(ModPoly a, const ModPoly& b, std::int64_t p, ModPoly& q, ModPoly& r) {
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  std::int64_t inv = inv_mod(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    std::int64_t c = a.back() * inv % p;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = mod(a[i + shift] - c * b[i], p);
    trim(a);
  }
  trim(q);
  r = std::move(a);
}

inline ModPoly rem(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  ModPoly q, r;
  divmod(a, b, p, q, r);
  return r;
}

inline ModPoly monic(ModPoly a, std::int64_t p) {
  if (a.empty()) return a;
  std::int64_t inv = inv_mod(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

inline ModPoly gcd(ModPoly a, ModPoly b, std::int64_t p) {
  while (!b.empty()) {
    ModPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), p);
}

/// s, t with s a + t b = 1 (a, b coprime mod p).
inline void bezout(const ModPoly& a, const ModPoly& b, std::int64_t p, ModPoly& s, ModPoly& t) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    ModPoly q, r;
    divmod(r0, r1, p, q, r);
    ModPoly s2 = sub(s0, mul(q, s1, p), p), t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  std::int64_t inv = inv_mod(r0.back(), p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  s = std::move(s0);
  t = std::move(t0);
}

inline ModPoly derivative(const ModPoly& a, std::int64_t p) {
  ModPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(std::int64_t(i % std::size_t(p)) * a[i] % p);
  trim(r);
  return r;
}

/// Berlekamp factorization of a squarefree monic polynomial modulo p.
inline std::vector<ModPoly> berlekamp(const ModPoly& f, std::int64_t p) {
  std::size_t n = f.size() - 1;
  if (n <= 1) return {f};
  // Q rows: x^(i p) mod f.
  std::vector<std::vector<std::int64_t>> Q(n, std::vector<std::int64_t>(n, 0));
  ModPoly xp{0, 1};
  {
    ModPoly base{0, 1}, acc{1};
    std::int64_t e = p;
    while (e) {
      if (e & 1) acc = rem(mul(acc, base, p), f, p);
      base = rem(mul(base, base, p), f, p);
      e >>= 1;
    }
    xp = acc;
  }
  ModPoly cur{1};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cur.size(); ++j) Q[i][j] = cur[j];
    cur = rem(mul(cur, xp, p), f, p);
  }
  // Kernel of (Q - I)^T: vectors v with sum_i v_i (Q[i] - e_i) = 0.
  std::vector<std::vector<std::int64_t>> A(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A[j][i] = mod(Q[i][j] - (i == j ? 1 : 0), p);
  std::vector<long> pivot_of_row;
  std::vector<bool> is_pivot(n, false);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && A[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(A[piv], A[r]);
    std::int64_t inv = inv_mod(A[r][c], p);
    for (auto& x : A[r]) x = x * inv % p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || A[i][c] == 0) continue;
      std::int64_t fct = A[i][c];
      for (std::size_t j = 0; j < n; ++j) A[i][j] = mod(A[i][j] - fct * A[r][j], p);
    }
    pivot_of_row.push_back(long(c));
    is_pivot[c] = true;
    ++r;
  }
  std::vector<ModPoly> kernel;
  for (std::size_t fr = 0; fr < n; ++fr) {
    if (is_pivot[fr]) continue;
    ModPoly v(n, 0);
    v[fr] = 1;
    for (std::size_t k = 0; k < pivot_of_row.size(); ++k)
      v[std::size_t(pivot_of_row[k])] = mod(-A[k][fr], p);
    trim(v);
    kernel.push_back(std::move(v));
  }
  std::size_t count = kernel.size();
  std::vector<ModPoly> factors{f};
  for (const auto& v : kernel) {
    if (factors.size() == count) break;
    if (v.size() <= 1) continue;
    std::vector<ModPoly> next;
    for (const auto& g : factors) {
      ModPoly rest = g;
      for (std::int64_t s = 0; s < p && rest.size() > 2; ++s) {
        ModPoly vs = v;
        vs[0] = mod(vs[0] - s, p);
        trim(vs);
        ModPoly d = gcd(rest, vs, p);
        if (d.size() > 1 && d.size() < rest.size()) {
          next.push_back(d);
          ModPoly q, rr;
          divmod(rest, d, p, q, rr);
          rest = monic(q, p);
        }
      }
      next.push_back(rest);
    }
    factors = std::move(next);
  }
  return factors;
}

inline Integer symmetric(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline ZPoly lift(const ModPoly& a) { return ZPoly(a.begin(), a.end()); }

/// Exact division over Z; returns false if b does not divide a.
inline bool zdivides(ZPoly a, const ZPoly& b, ZPoly& q) {
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return false;
    Integer c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  trim(q);
  return a.empty();
}

inline Integer zcontent(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

inline ZPoly zprimitive(ZPoly a) {
  Integer g = zcontent(a);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

/// Lifts target = g h mod p (g0 monic, g0 h0 coprime) to a factorization
/// modulo M = p^k. The target only needs to be known modulo M.
inline void hensel_pair(const ZPoly& target, const ModPoly& g0, const ModPoly& h0, std::int64_t p,
                        const Integer& M, ZPoly& g, ZPoly& h) {
  ModPoly s, t;
  bezout(g0, h0, p, s, t);
  g = lift(g0);
  h = lift(h0);
  Integer m = p;
  while (m < M) {
    ZPoly gh = zmul(g, h);
    ModPoly ep(std::max(target.size(), gh.size()), 0);
    for (std::size_t i = 0; i < ep.size(); ++i) {
      Integer e = (i < target.size() ? target[i] : Integer(0)) - (i < gh.size() ? gh[i] : Integer(0));
      e = symmetric(e, M) / m;
      e %= p;
      ep[i] = mod(e.get_si(), p);
    }
    trim(ep);
    ModPoly q, dg;
    divmod(mul(ep, t, p), g0, p, q, dg);
    ModPoly dh = mul(ep, s, p);
    ModPoly qh = mul(q, h0, p);
    if (dh.size() < qh.size()) dh.resize(qh.size(), 0);
    for (std::size_t i = 0; i < qh.size(); ++i) dh[i] = (dh[i] + qh[i]) % p;
    trim(dh);
    if (g.size() < dg.size()) g.resize(dg.size(), 0);
    for (std::size_t i = 0; i < dg.size(); ++i) g[i] += m * dg[i];
    if (h.size() < dh.size()) h.resize(dh.size(), 0);
    for (std::size_t i = 0; i < dh.size(); ++i) h[i] += m * dh[i];
    m *= p;
    for (auto& c : g) c = symmetric(c, m);
    for (auto& c : h) c = symmetric(c, m);
    trim(g);
    trim(h);
  }
}

/// Lifts the monic modular factors of target (leading coefficient lc) to
/// monic factors modulo M.
inline std::vector<ZPoly> hensel_multi(ZPoly target, std::vector<ModPoly> factors, std::int64_t p,
                                       const Integer& M) {
  std::vector<ZPoly> out;
  while (factors.size() > 1) {
    ModPoly g0 = factors.front();
    factors.erase(factors.begin());
    ModPoly h0{mod(symmetric(target.back(), M).get_si() % p, p)};
    for (const auto& f : factors) h0 = mul(h0, f, p);
    ZPoly g, h;
    hensel_pair(target, g0, h0, p, M, g, h);
    out.push_back(std::move(g));
    target = std::move(h);
  }
  Integer inv;
  mpz_invert(inv.get_mpz_t(), target.back().get_mpz_t(), M.get_mpz_t());
  for (auto& c : target) c = symmetric(c * inv, M);
  trim(target);
  out.push_back(std::move(target));
  return out;
}

inline bool is_small_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace detail

/// Irreducible factors over Z of a squarefree primitive polynomial of positive
/// degree, each primitive with positive leading coefficient, in no particular
/// order.
inline std::vector<ZPoly> factor_squarefree(const ZPoly& f_in) {
  using namespace detail;
  ZPoly f = zprimitive(f_in);
  if (f.size() <= 2) return {f};
  std::size_t n = f.size() - 1;
  // Pick a prime keeping f squarefree and its degree.
  std::int64_t p = 3;
  ModPoly fp;
  for (;; p += 2) {
    if (!is_small_prime(p)) continue;
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
    fp = reduce_mod(f, p);
    if (gcd(fp, derivative(fp, p), p).size() == 1) break;
  }
  std::vector<ModPoly> modf = berlekamp(monic(fp, p), p);
  if (modf.size() == 1) return {f};
  // Factor coefficient bound (Mignotte), then a modulus beyond 2 lc B.
  Integer maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, Integer(abs(c)));
  Integer B = maxc * Integer(n + 1);
  mpz_mul_2exp(B.get_mpz_t(), B.get_mpz_t(), n);
  Integer bound = 2 * abs(f.back()) * B;
  Integer m = p;
  while (m <= bound) m *= p;
  std::vector<ZPoly> lifted = hensel_multi(f, modf, p, m);
  // Recombination.
  std::vector<ZPoly> result;
  std::vector<ZPoly> pool = lifted;
  ZPoly rest = f;
  for (std::size_t s = 1; 2 * s <= pool.size();) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t k = 0; k < s; ++k) idx[k] = k;
    for (;;) {
      Integer lc = rest.back();
      ZPoly cand{lc};
      for (std::size_t k : idx) {
        cand = zmul(cand, pool[k]);
        for (auto& c : cand) c = symmetric(c, m);
        trim(cand);
      }
      cand = zprimitive(cand);
      ZPoly q;
      if (cand.size() > 1 && zdivides(rest, cand, q)) {
        result.push_back(cand);
        rest = zprimitive(q);
        for (std::size_t k = s; k-- > 0;) pool.erase(pool.begin() + long(idx[k]));
        found = true;
        break;
      }
      // Next combination.
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == pool.size() - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rest.size() > 1) result.push_back(zprimitive(rest));
  return result;
}

/// Dense coefficients of a polynomial that involves at most the variable
/// `var`, scaled to a primitive integer polynomial.
inline ZPoly to_zpoly(const Polynomial& p, std::size_t var) {
  Polynomial q = primitive_integer(p);
  ZPoly out;
  for (const auto& t : q.terms()) {
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (i != var && t.mono[i]) throw Error("to_zpoly: polynomial is not univariate");
    std::size_t e = t.mono[var];
    if (out.size() <= e) out.resize(e + 1, 0);
    out[e] = t.coeff.get_num();
  }
  detail::trim(out);
  return out;
}

inline Polynomial from_zpoly(const ZPoly& a, const VarSetPtr& vars, std::size_t var) {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < a.size(); ++e) {
    if (a[e] == 0) continue;
    Monomial m(vars->size());
    m.set(var, static_cast<unsigned>(e));
    terms.push_back({m, Rational(a[e])});
  }
  return Polynomial::from_terms(vars, std::move(terms));
}

/// Deterministic order on univariate factors: by degree, then coefficients
/// from the top down.
inline bool zpoly_less(const ZPoly& a, const ZPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

/// Distinct irreducible factors over Q of a nonzero univariate polynomial in
/// `var`, primitive with positive leading coefficient, sorted by zpoly_less.
/// Constants have no factors.
inline std::vector<Polynomial> irreducible_factors(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) throw Error("irreducible_factors of the zero polynomial");
  if (p.is_constant()) return {};
  Polynomial sf = squarefree_part(p);
  std::vector<ZPoly> fs = factor_squarefree(to_zpoly(sf, var));
  std::sort(fs.begin(), fs.end(), zpoly_less);
  std::vector<Polynomial> out;
  for (const auto& f : fs) out.push_back(from_zpoly(f, p.vars(), var));
  return out;
}

}  // namespace gammastar
