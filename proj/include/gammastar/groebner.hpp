#pragma once

#include <gammastar/order.hpp>
#include <gammastar/polynomial.hpp>

#include <algorithm>
#include <bit>
#include <tuple>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace gammastar {

namespace detail {

/// Terms sorted descending under a monomial order.
using OrderedTerms = std::vector<Term>;

inline OrderedTerms to_ordered(const Polynomial& p, const MonomialOrder& ord) {
  OrderedTerms t = p.terms();
  if (ord.weights().empty() && ord.tiebreak() == MonomialOrder::Tiebreak::Grevlex) return t;
  std::sort(t.begin(), t.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  return t;
}

inline void make_monic(OrderedTerms& t) {
  if (t.empty() || t.front().coeff == 1) return;
  Rational inv = 1 / t.front().coeff;
  for (auto& x : t) x.coeff *= inv;
}

struct Descending {
  const MonomialOrder* ord;
  bool operator()(const Monomial& a, const Monomial& b) const { return ord->compare(a, b) > 0; }
};

/// Reduces `f` modulo the (monic) polynomials `basis[i]` for i in `active`.
/// With `full` every term is reduced, otherwise only the leading one.
inline OrderedTerms reduce(const OrderedTerms& f, const std::vector<OrderedTerms>& basis,
                           const std::vector<std::size_t>& active, const MonomialOrder& ord,
                           bool full = true) {
  std::map<Monomial, Rational, Descending> work(Descending{&ord});
  for (const auto& t : f) work.emplace(t.mono, t.coeff);
  OrderedTerms out;
  while (!work.empty()) {
    auto it = work.begin();
    const OrderedTerms* reducer = nullptr;
    for (std::size_t i : active)
      if (basis[i].front().mono.divides(it->first)) {
        reducer = &basis[i];
        break;
      }
    if (!reducer) {
      out.push_back({it->first, it->second});
      work.erase(it);
      if (!full) {
        for (auto& [m, c] : work) out.push_back({m, c});
        return out;
      }
      continue;
    }
    Monomial q = it->first / reducer->front().mono;
    Rational c = it->second;
    work.erase(it);
    for (std::size_t k = 1; k < reducer->size(); ++k) {
      const Term& t = (*reducer)[k];
      auto [pos, inserted] = work.try_emplace(t.mono * q, 0);
      pos->second -= c * t.coeff;
      if (pos->second == 0) work.erase(pos);
    }
  }
  return out;
}

inline OrderedTerms spoly(const OrderedTerms& f, const OrderedTerms& g, const MonomialOrder& ord) {
  Monomial l = f.front().mono.lcm(g.front().mono);
  Monomial uf = l / f.front().mono, ug = l / g.front().mono;
  std::map<Monomial, Rational, Descending> work(Descending{&ord});
  for (std::size_t k = 1; k < f.size(); ++k) work[f[k].mono * uf] += f[k].coeff;
  for (std::size_t k = 1; k < g.size(); ++k) work[g[k].mono * ug] -= g[k].coeff;
  OrderedTerms out;
  for (auto& [m, c] : work)
    if (c != 0) out.push_back({m, c});
  return out;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

/// Buchberger's algorithm with the Gebauer-Moeller installation of both
/// criteria and the normal selection strategy; ties broken by index.
class Buchberger {
 public:
  explicit Buchberger(const MonomialOrder& ord) : ord_(ord) {}

  std::vector<OrderedTerms> run(std::vector<OrderedTerms> gens) {
    for (auto& g : gens) {
      if (g.empty()) continue;
      insert(std::move(g));
      if (unit_) return finish();
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        int c = ord_.compare(pairs_[k].lcm, pairs_[best].lcm);
        if (c < 0 || (c == 0 && std::tie(pairs_[k].i, pairs_[k].j) <
                                    std::tie(pairs_[best].i, pairs_[best].j)))
          best = k;
      }
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + long(best));
      OrderedTerms s = spoly(polys_[p.i], polys_[p.j], ord_);
      if (s.empty()) continue;
      insert(std::move(s));
      if (unit_) break;
    }
    return finish();
  }

 private:
  void insert(OrderedTerms f) {
    OrderedTerms h = reduce(f, polys_, active_, ord_);
    if (h.empty()) return;
    make_monic(h);
    if (h.front().mono.is_one()) {
      unit_ = true;
      polys_.push_back(std::move(h));
      active_ = {polys_.size() - 1};
      return;
    }
    polys_.push_back(std::move(h));
    update(polys_.size() - 1);
  }

  void update(std::size_t h) {
    const Monomial& lh = polys_[h].front().mono;
    std::vector<Pair> C;
    for (std::size_t g : active_) C.push_back({g, h, lh.lcm(polys_[g].front().mono)});
    std::vector<Pair> D;
    for (std::size_t k = 0; k < C.size(); ++k) {
      const Pair& p = C[k];
      bool keep = lh.coprime(polys_[p.i].front().mono);
      if (!keep) {
        keep = true;
        for (std::size_t r = k + 1; r < C.size() && keep; ++r)
          if (C[r].lcm.divides(p.lcm)) keep = false;
        for (std::size_t r = 0; r < D.size() && keep; ++r)
          if (D[r].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> B;
    for (const auto& p : pairs_) {
      if (!lh.divides(p.lcm) || lh.lcm(polys_[p.i].front().mono) == p.lcm ||
          lh.lcm(polys_[p.j].front().mono) == p.lcm)
        B.push_back(p);
    }
    for (const auto& p : D)
      if (!lh.coprime(polys_[p.i].front().mono)) B.push_back(p);
    pairs_ = std::move(B);
    std::vector<std::size_t> G;
    for (std::size_t g : active_)
      if (!lh.divides(polys_[g].front().mono)) G.push_back(g);
    G.push_back(h);
    active_ = std::move(G);
  }

  /// Minimal, interreduced, monic basis sorted by ascending leading monomial.
  std::vector<OrderedTerms> finish() {
    std::vector<std::size_t> minimal;
    for (std::size_t a : active_) {
      bool redundant = false;
      for (std::size_t b : active_) {
        if (a == b) continue;
        const Monomial& la = polys_[a].front().mono;
        const Monomial& lb = polys_[b].front().mono;
        if (lb.divides(la) && (!(la == lb) || b < a)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(a);
    }
    std::vector<OrderedTerms> out;
    for (std::size_t a : minimal) {
      std::vector<std::size_t> others;
      for (std::size_t b : minimal)
        if (b != a) others.push_back(b);
      OrderedTerms tail(polys_[a].begin() + 1, polys_[a].end());
      OrderedTerms red = reduce(tail, polys_, others, ord_);
      OrderedTerms g{polys_[a].front()};
      g.insert(g.end(), red.begin(), red.end());
      out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(), [&](const OrderedTerms& x, const OrderedTerms& y) {
      return ord_.less(x.front().mono, y.front().mono);
    });
    return out;
  }

  const MonomialOrder& ord_;
  std::vector<OrderedTerms> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
};

}  // namespace detail

/// An ideal together with its reduced Groebner basis under `order`.
class Ideal {
 public:
  const VarSetPtr& vars() const noexcept { return vars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  /// Reduced Groebner basis, sorted by ascending leading monomial.
  const std::vector<Polynomial>& basis() const noexcept { return basis_; }
  const std::vector<detail::OrderedTerms>& ordered_basis() const noexcept { return ordered_; }
  const Monomial& leading_monomial(std::size_t i) const { return ordered_[i].front().mono; }

  bool is_unit() const noexcept {
    return ordered_.size() == 1 && ordered_[0].front().mono.is_one();
  }
  bool is_zero() const noexcept { return ordered_.empty(); }

  static Ideal from_reduced_basis(VarSetPtr vars, MonomialOrder order,
                                  std::vector<Polynomial> gens,
                                  std::vector<detail::OrderedTerms> basis) {
    Ideal I(std::move(vars), std::move(order));
    I.gens_ = std::move(gens);
    I.ordered_ = std::move(basis);
    for (const auto& t : I.ordered_) I.basis_.push_back(Polynomial::from_terms(I.vars_, t));
    return I;
  }

 private:
  Ideal(VarSetPtr vars, MonomialOrder order) : vars_(std::move(vars)), order_(std::move(order)) {}

  VarSetPtr vars_;
  MonomialOrder order_;
  std::vector<Polynomial> gens_;
  std::vector<Polynomial> basis_;
  std::vector<detail::OrderedTerms> ordered_;
};

#ifdef GAMMASTAR_AUDIT_BASES
/// Test builds audit every basis the engine produces.
struct BasisAudit {
  long checked = 0;
  long failures = 0;
};
inline BasisAudit& basis_audit() {
  static BasisAudit a;
  return a;
}
inline bool satisfies_buchberger_criterion(const Ideal& I);
inline bool is_reduced_basis(const Ideal& I);
#endif

inline Ideal buchberger(std::vector<Polynomial> gens, const MonomialOrder& order,
                        VarSetPtr vars = nullptr) {
  if (!vars) {
    if (gens.empty()) throw Error("buchberger: empty generator list needs a variable set");
    vars = gens.front().vars();
  }
  std::vector<detail::OrderedTerms> input;
  for (auto& g : gens) {
    if (!same_varset(g.vars(), vars)) throw VarSetMismatch();
    input.push_back(detail::to_ordered(g, order));
  }
  auto basis = detail::Buchberger(order).run(std::move(input));
#ifdef GAMMASTAR_AUDIT_BASES
  Ideal I = Ideal::from_reduced_basis(std::move(vars), order, std::move(gens), std::move(basis));
  ++basis_audit().checked;
  if (!satisfies_buchberger_criterion(I) || !is_reduced_basis(I)) ++basis_audit().failures;
  return I;
#else
  return Ideal::from_reduced_basis(std::move(vars), order, std::move(gens), std::move(basis));
#endif
}

/// The ideal generated by I and some extra polynomials, under I's order.
inline Ideal extend(const Ideal& I, const std::vector<Polynomial>& extra) {
  std::vector<Polynomial> gens = I.basis();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return buchberger(std::move(gens), I.order(), I.vars());
}

inline Polynomial normal_form(const Polynomial& p, const Ideal& I) {
  if (!same_varset(p.vars(), I.vars())) throw VarSetMismatch();
  std::vector<std::size_t> all(I.ordered_basis().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto r = detail::reduce(detail::to_ordered(p, I.order()), I.ordered_basis(), all, I.order());
  return Polynomial::from_terms(I.vars(), std::move(r));
}

inline bool contains(const Ideal& I, const Polynomial& p) { return normal_form(p, I).is_zero(); }

/// Equality by mutual normal-form containment of generators.
inline bool same_ideal(const Ideal& I, const Ideal& J) {
  for (const auto& g : I.basis())
    if (!contains(J, rebase(g, J.vars()))) return false;
  for (const auto& g : J.basis())
    if (!contains(I, rebase(g, I.vars()))) return false;
  return true;
}

/// Checks that every S-polynomial of the basis reduces to zero.
inline bool satisfies_buchberger_criterion(const Ideal& I) {
  const auto& B = I.ordered_basis();
  std::vector<std::size_t> all(B.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = i + 1; j < B.size(); ++j)
      if (!detail::reduce(detail::spoly(B[i], B[j], I.order()), B, all, I.order()).empty())
        return false;
  return true;
}

/// Monic basis elements, no term of one divisible by the leading monomial
/// of another.
inline bool is_reduced_basis(const Ideal& I) {
  const auto& B = I.ordered_basis();
  for (std::size_t i = 0; i < B.size(); ++i) {
    if (B[i].front().coeff != 1) return false;
    for (std::size_t j = 0; j < B.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : B[i])
        if (B[j].front().mono.divides(t.mono)) return false;
    }
  }
  return true;
}

/// I intersected with the subring free of `drop`, over the reduced variable
/// set, computed with a block elimination order.
inline Ideal eliminate(const Ideal& I, std::span<const std::string> drop) {
  const VarSet& vs = *I.vars();
  std::vector<std::size_t> block;
  for (const auto& name : drop) block.push_back(vs.index_of(name));
  std::vector<int> row(vs.size(), 0);
  for (auto v : block) row[v] = 1;
  // An ideal already computed under this elimination order is reused as is.
  bool ready = !I.order().weights().empty() && I.order().weights().front() == row;
  MonomialOrder elim = ready ? I.order() : MonomialOrder::block(block, vs.size(), I.order());
  Ideal E = ready ? I : buchberger(I.basis(), elim, I.vars());
  VarSetPtr target = without(vs, drop);
  std::vector<long> map;
  for (std::size_t i = 0; i < target->size(); ++i) map.push_back(long(vs.index_of((*target)[i].name)));
  MonomialOrder restricted = elim.remapped(map);
  std::vector<Polynomial> kept;
  std::vector<detail::OrderedTerms> ordered;
  for (std::size_t k = 0; k < E.basis().size(); ++k) {
    const Polynomial& g = E.basis()[k];
    bool free = std::none_of(block.begin(), block.end(), [&](std::size_t v) { return g.uses_variable(v); });
    if (!free) continue;
    Polynomial r = rebase(g, target);
    kept.push_back(r);
    ordered.push_back(detail::to_ordered(r, restricted));
  }
  std::sort(ordered.begin(), ordered.end(), [&](const auto& x, const auto& y) {
    return restricted.less(x.front().mono, y.front().mono);
  });
  return Ideal::from_reduced_basis(target, restricted, kept, std::move(ordered));
}

/// The saturation I : g^infinity via a fresh variable z, I + (1 - z g), and
/// elimination of z.
inline Ideal saturate(const Ideal& I, const Polynomial& g) {
  if (g.is_zero()) throw Error("saturation by the zero polynomial");
  if (!same_varset(g.vars(), I.vars())) throw VarSetMismatch();
  if (g.is_constant() || I.is_unit()) return I;
  const VarSet& vs = *I.vars();
  std::string z = fresh_name(vs, "sat_z");
  VarSetPtr ext = with_variable(vs, {z, VarRole::Auxiliary});
  std::vector<long> map;
  for (std::size_t i = 0; i < vs.size(); ++i) map.push_back(long(i));
  map.push_back(-1);
  MonomialOrder ext_order =
      MonomialOrder::block({vs.size()}, vs.size() + 1, I.order().remapped(map));
  std::vector<Polynomial> gens;
  for (const auto& b : I.basis()) gens.push_back(rebase(b, ext));
  gens.push_back(Polynomial::constant(ext, 1) - Polynomial::variable(ext, z) * rebase(g, ext));
  Ideal J = buchberger(std::move(gens), ext_order, ext);
  Ideal E = eliminate(J, std::span<const std::string>(&z, 1));
  return Ideal::from_reduced_basis(I.vars(), I.order(), I.generators(),
                                   [&] {
                                     std::vector<detail::OrderedTerms> b;
                                     for (const auto& p : E.basis())
                                       b.push_back(detail::to_ordered(rebase(p, I.vars()), I.order()));
                                     std::sort(b.begin(), b.end(), [&](const auto& x, const auto& y) {
                                       return I.order().less(x.front().mono, y.front().mono);
                                     });
                                     return b;
                                   }());
}

/// Krull dimension from the leading monomials: the size of a largest set of
/// variables S such that no leading monomial involves only variables of S.
/// The unit ideal has dimension -1.
inline int krull_dimension(const Ideal& I) {
  if (I.is_unit()) return -1;
  std::size_t n = I.vars()->size();
  std::vector<unsigned> supports;
  for (std::size_t k = 0; k < I.ordered_basis().size(); ++k) {
    const Monomial& m = I.leading_monomial(k);
    unsigned s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) s |= 1u << i;
    supports.push_back(s);
  }
  int best = 0;
  for (unsigned S = 0; S < (1u << n); ++S) {
    int size = std::popcount(S);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](unsigned s) { return (s & ~S) == 0; });
    if (independent) best = size;
  }
  return best;
}

inline bool is_zero_dimensional(const Ideal& I) {
  if (I.is_unit()) return false;
  std::size_t n = I.vars()->size();
  std::vector<bool> pure(n, false);
  for (std::size_t k = 0; k < I.ordered_basis().size(); ++k) {
    const Monomial& m = I.leading_monomial(k);
    std::size_t nz = 0, which = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) {
        ++nz;
        which = i;
      }
    if (nz == 1) pure[which] = true;
  }
  return std::all_of(pure.begin(), pure.end(), [](bool b) { return b; });
}

/// Monomials outside the leading-term ideal of a zero-dimensional ideal, in
/// ascending order. The unit ideal has an empty staircase.
inline std::vector<Monomial> staircase(const Ideal& I) {
  if (I.is_unit()) return {};
  if (!is_zero_dimensional(I)) throw NotZeroDimensional(krull_dimension(I));
  std::size_t n = I.vars()->size();
  auto in_staircase = [&](const Monomial& m) {
    for (std::size_t k = 0; k < I.ordered_basis().size(); ++k)
      if (I.leading_monomial(k).divides(m)) return false;
    return true;
  };
  std::vector<Monomial> out;
  std::vector<std::pair<Monomial, std::size_t>> stack{{Monomial(n), 0}};
  while (!stack.empty()) {
    auto [m, first] = stack.back();
    stack.pop_back();
    out.push_back(m);
    for (std::size_t i = first; i < n; ++i) {
      Monomial next = m;
      next.set(i, m[i] + 1);
      if (in_staircase(next)) stack.push_back({next, i});
    }
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return I.order().less(a, b);
  });
  return out;
}

inline std::size_t quotient_dimension(const Ideal& I) {
  if (I.is_unit()) return 0;
  return staircase(I).size();
}

}  // namespace gammastar
