#pragma once

#include <gammastar/generic.hpp>
#include <gammastar/linalg.hpp>
#include <gammastar/polar.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gammastar {

// ---------------------------------------------------------------------------
// Hypothesis: singular points of the fibres stay in a compact set.

struct HypothesisReport {
  bool pass = false;
  bool smooth = false;
  int singular_dimension = -1;
  std::vector<Polynomial> singular_values;
  bool singular_everywhere = false;
  std::vector<Polynomial> escape_values;
  bool escapes_everywhere = false;
  std::vector<std::string> diagnostics;

  /// The local form of the hypothesis on a disc around c.
  bool holds_at(const Rational& c) const {
    if (smooth) return true;
    if (escapes_everywhere || singular_dimension > 1) return false;
    return std::none_of(escape_values.begin(), escape_values.end(),
                        [&](const Polynomial& p) { return vanishes_at(p, c); });
  }

  bool singular_near(const Rational& c) const {
    if (smooth) return false;
    if (singular_everywhere) return true;
    return std::any_of(singular_values.begin(), singular_values.end(),
                       [&](const Polynomial& p) { return vanishes_at(p, c); });
  }
};

/// Studies S = (F, dF/dx_1, ..., dF/dx_n). Singular points may not reach
/// infinity over any finite parameter value; this also forces every
/// singular fibre to have isolated singularities.
inline HypothesisReport verify_hypothesis(const Family& fam) {
  HypothesisReport r;
  const Polynomial& F = fam.F();
  std::vector<Polynomial> gens{F};
  for (auto i : fam.space_indices()) gens.push_back(partial_derivative(F, i));
  Ideal S = buchberger(std::move(gens), MonomialOrder::space_graded(F.varset()), fam.vars());
  if (S.is_unit()) {
    r.pass = r.smooth = true;
    r.diagnostics.push_back("every fibre is nonsingular");
    return r;
  }
  r.singular_dimension = krull_dimension(S);
  std::vector<std::string> space;
  for (auto i : fam.space_indices()) space.push_back(F.varset()[i].name);
  Ideal E = eliminate(S, space);
  if (E.is_zero()) {
    r.singular_everywhere = true;
    r.diagnostics.push_back("every fibre is singular");
  } else {
    r.singular_values = irreducible_factors(rebase(E.basis().front(), parameter_ring(fam.parameter_name())), 0);
    std::string list;
    for (const auto& p : r.singular_values) list += (list.empty() ? "" : ", ") + p.to_string();
    r.diagnostics.push_back("singular fibres over the roots of: " + list);
  }
  Polynomial esc = infinity_image(fam, S);
  if (esc.is_zero()) {
    r.escapes_everywhere = true;
    r.diagnostics.push_back("singular points reach infinity over every parameter value");
  } else if (!esc.is_constant()) {
    r.escape_values = irreducible_factors(esc, 0);
    std::string list;
    for (const auto& p : r.escape_values) list += (list.empty() ? "" : ", ") + p.to_string();
    r.diagnostics.push_back("singular points reach infinity over the roots of: " + list);
  }
  if (r.singular_dimension > 1)
    r.diagnostics.push_back("singular locus has dimension " + std::to_string(r.singular_dimension));
  r.pass = !r.escapes_everywhere && r.escape_values.empty() && r.singular_dimension <= 1;
  return r;
}

/// Rejects families whose polynomial has a repeated factor.
inline bool is_reduced(const Family& fam) {
  return squarefree_part(fam.F()).total_degree() == fam.F().total_degree();
}

// ---------------------------------------------------------------------------
// Milnor numbers

/// Sum of the Milnor numbers of the singular points of the fibre over c.
inline std::size_t milnor_total(const Family& fam, const Rational& c) {
  Polynomial f = fam.fiber(c);
  if (f.is_zero()) throw DegenerateFamily("the fibre over " + to_string(c) + " is the whole space");
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < f.varset().size(); ++i) gens.push_back(partial_derivative(f, i));
  Ideal J = buchberger(std::move(gens), MonomialOrder::grevlex(), f.vars());
  if (J.is_unit()) return 0;
  if (is_zero_dimensional(J)) return eigenvalue_zero_multiplicity(multiplication_matrix(f, J));
  // Critical points off the fibre may form positive-dimensional sets; they
  // do not matter as long as the fibre meets the critical set in points.
  Ideal K = extend(J, {f});
  if (K.is_unit()) return 0;
  if (!is_zero_dimensional(K)) throw NonIsolatedSingularities(krull_dimension(K));
  std::size_t N = 1, prev = quotient_dimension(K);
  for (;;) {
    N *= 2;
    std::size_t cur = quotient_dimension(extend(J, {f.pow(static_cast<unsigned>(N))}));
    if (cur == prev) return cur;
    prev = cur;
  }
}

/// True when the fibre over c has a singular point.
inline bool fiber_is_singular(const Family& fam, const Rational& c) {
  Polynomial f = fam.fiber(c);
  std::vector<Polynomial> gens{f};
  for (std::size_t i = 0; i < f.varset().size(); ++i) gens.push_back(partial_derivative(f, i));
  return !buchberger(std::move(gens), MonomialOrder::grevlex(), f.vars()).is_unit();
}

// ---------------------------------------------------------------------------
// Results

struct AtypicalEntry {
  Polynomial min_poly;
  std::size_t value_sum = 0;
  std::size_t per_root = 0;
  long defect = 0;
};

struct GammaLevel {
  std::size_t level = 0;
  std::size_t generic = 0;
  std::vector<Polynomial> candidates;
  std::vector<AtypicalEntry> entries;
  std::vector<Rational> samples;
};

/// Levels indexed by i = 0..n-1.
struct GammaProfile {
  std::size_t n = 0;
  std::vector<GammaLevel> levels;

  /// Parameter polynomials with a nonzero defect at some level.
  std::vector<Polynomial> atypical() const {
    std::vector<ZPoly> keys;
    std::vector<Polynomial> out;
    for (const auto& L : levels)
      for (const auto& e : L.entries) {
        if (e.defect == 0) continue;
        ZPoly k = to_zpoly(e.min_poly, 0);
        if (std::find(keys.begin(), keys.end(), k) != keys.end()) continue;
        keys.push_back(k);
        out.push_back(e.min_poly);
      }
    std::vector<std::size_t> idx(out.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return zpoly_less(keys[a], keys[b]); });
    std::vector<Polynomial> sorted;
    for (auto i : idx) sorted.push_back(out[i]);
    return sorted;
  }
};

struct FiberReport {
  Rational c;
  std::size_t mu = 0;
  std::vector<std::size_t> gamma;  // gamma[i] = gamma^i_c
  std::vector<long> defects;       // lambda^i_c
  long chi = 0;
  std::vector<long> cells;  // cells[k] = number of k-cells
  bool singular = false;
};

struct Verdict {
  Rational c;
  bool hypothesis_holds = false;
  bool t_equisingular = false;
  std::vector<long> defects;
  std::vector<std::string> implied;
};

struct AnalysisOptions {
  std::uint64_t seed = 0;
  unsigned retries = 8;
  bool force = false;
};

// ---------------------------------------------------------------------------
// The analysis of one family under one seed.

class Analysis {
 public:
  explicit Analysis(Family fam, AnalysisOptions opt = {}) : fam_(std::move(fam)), opt_(opt) {
    if (fam_.is_constant_family()) warnings_.push_back("F does not involve the parameter");
    if (!is_reduced(fam_)) {
      if (!opt_.force) throw DegenerateFamily("F is not reduced");
      warnings_.push_back("F is not reduced");
    }
  }

  const Family& family() const noexcept { return fam_; }
  const AnalysisOptions& options() const noexcept { return opt_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  const HypothesisReport& hypothesis() {
    if (!hyp_) hyp_ = verify_hypothesis(fam_);
    return *hyp_;
  }

  const GenericChoice& choice() {
    ensure({});
    return choice_;
  }

  const GammaProfile& profile() {
    ensure({});
    return profile_;
  }

  /// gamma^i_c for i = 0..n-1.
  std::vector<std::size_t> gamma_at(const Rational& c) {
    ensure({c});
    return gamma_cache_.at(c);
  }

  /// gamma^i at the roots of an irreducible parameter polynomial, per root.
  std::vector<std::size_t> gamma_at_roots(const Polynomial& p) {
    ensure({});
    Polynomial q = rebase(p, parameter_ring(fam_.parameter_name()));
    std::vector<std::size_t> g(fam_.n(), 0);
    for (const auto& L : levels_) g[L.index] = gamma_at_algebraic(L.family, L.polar, q).per_root;
    if (fam_.n() >= 2) g[0] = degree_at_algebraic(fam_, q);
    return g;
  }

  std::vector<long> defects_at(const Rational& c) {
    auto g = gamma_at(c);
    std::vector<long> d;
    for (std::size_t i = 0; i < g.size(); ++i) d.push_back(long(profile_.levels[i].generic) - long(g[i]));
    return d;
  }

  std::size_t milnor(const Rational& c) { return milnor_total(fam_, c); }

  FiberReport fiber(const Rational& c) {
    FiberReport r;
    r.c = c;
    r.gamma = gamma_at(c);
    r.defects = defects_at(c);
    r.mu = milnor(c);
    r.singular = fiber_is_singular(fam_, c);
    std::size_t n = fam_.n();
    long chi = (n % 2 ? -1 : 1) * long(r.mu);
    for (std::size_t i = 0; i < n; ++i) chi += (i % 2 ? -1 : 1) * long(r.gamma[i]);
    r.chi = chi;
    for (std::size_t i = 0; i + 1 < n; ++i) r.cells.push_back(long(r.gamma[i]));
    long top = long(r.gamma[n - 1]) - long(r.mu);
    if (top < 0) {
      if (!opt_.force) throw NegativeTopCellCount(top);
      note("negative top cell count over " + to_string(c));
    }
    r.cells.push_back(top);
    long alt = 0;
    for (std::size_t k = 0; k < n; ++k) alt += (k % 2 ? -1 : 1) * r.cells[k];
    if (alt != r.chi) throw InvariantViolation("cell count does not reproduce the Euler characteristic");
    return r;
  }

  long euler_characteristic(const Rational& c) { return fiber(c).chi; }

  /// chi(X_u) - chi(X_c) for nearby generic u, from mu and the defects;
  /// checked against a direct computation at a generic u.
  long euler_jump(const Rational& c) {
    FiberReport fc = fiber(c);
    std::size_t n = fam_.n();
    long jump = ((n - 1) % 2 ? -1 : 1) * long(fc.mu);
    for (std::size_t i = 0; i < n; ++i) jump += (i % 2 ? -1 : 1) * fc.defects[i];
    Rational u = generic_value();
    FiberReport fu = fiber(u);
    if (fu.singular) throw Error("nearby fibres are singular; the Euler jump formula does not apply");
    if (fu.chi - fc.chi != jump)
      throw InvariantViolation("Euler jump disagrees with the fibre Euler characteristics");
    return jump;
  }

  Verdict verdict(const Rational& c) {
    Verdict v;
    v.c = c;
    const HypothesisReport& h = hypothesis();
    v.hypothesis_holds = h.holds_at(c);
    if (!v.hypothesis_holds && !opt_.force)
      throw HypothesisFailure("singular points reach infinity near " + to_string(c));
    v.defects = defects_at(c);
    v.t_equisingular = std::all_of(v.defects.begin(), v.defects.end(), [](long d) { return d == 0; });
    if (opt_.force) return v;
    std::string at = " at " + to_string(c);
    if (v.t_equisingular) {
      v.implied.push_back("C-infinity trivial at infinity" + at);
      if (!h.singular_near(c)) v.implied.push_back("C-infinity trivial" + at);
    }
    if (fam_.n() == 2 && v.defects[0] == 0)
      v.implied.push_back(std::string(v.defects[1] == 0 ? "" : "not ") +
                          "topologically trivial at infinity" + at);
    return v;
  }

  /// A rational parameter value avoiding every candidate and singular value.
  Rational generic_value() {
    ensure({});
    Rng rng(opt_.seed, 0x5eed0000ull + attempt_);
    const HypothesisReport& h = hypothesis();
    for (;;) {
      Rational u = rng.rational();
      bool bad = false;
      for (const auto& L : profile_.levels)
        for (const auto& p : L.candidates) bad |= vanishes_at(p, u);
      for (const auto& p : h.singular_values) bad |= vanishes_at(p, u);
      if (!bad) return u;
    }
  }

 private:
  struct Level {
    std::size_t index;
    Family family;
    Ideal polar;
    std::vector<Polynomial> candidates;
  };

  void note(const std::string& w) {
    if (std::find(warnings_.begin(), warnings_.end(), w) == warnings_.end()) warnings_.push_back(w);
  }

  void ensure(const std::vector<Rational>& cs) {
    for (;;) {
      try {
        if (!built_) {
          gamma_cache_.clear();
          build(attempt_);
          built_ = true;
          for (const auto& c : requested_) gamma_cache_[c] = compute_gamma(c);
        }
        for (const auto& c : cs) {
          if (gamma_cache_.count(c)) continue;
          requested_.push_back(c);
          gamma_cache_[c] = compute_gamma(c);
        }
        return;
      } catch (const GenericityFailure& e) {
        last_failure_ = e.what();
      } catch (const NotZeroDimensional& e) {
        last_failure_ = std::string("polar curve meets a fibre in a positive-dimensional set");
      }
      built_ = false;
      for (const auto& c : cs)
        if (std::find(requested_.begin(), requested_.end(), c) == requested_.end()) requested_.push_back(c);
      if (++attempt_ > opt_.retries)
        throw RetriesExhausted("no generic choice found after " + std::to_string(opt_.retries) +
                               " resamples: " + last_failure_);
    }
  }

  void build(unsigned attempt) {
    std::size_t n = fam_.n();
    choice_ = GenericChoice{opt_.seed, attempt, {}};
    levels_.clear();
    profile_ = GammaProfile{n, std::vector<GammaLevel>(n)};
    std::size_t lowest = n >= 2 ? 1 : 0;
    std::optional<Family> cur;
    for (std::size_t i = n; i-- > lowest;) {
      Rng rng(opt_.seed, std::uint64_t(attempt) * 64 + i);
      LevelChoice lc;
      lc.level = i;
      Family base = cur ? *cur : fam_;
      if (cur) {
        lc.hyperplane = random_hyperplane(cur->n(), rng);
        base = slice(*cur, *lc.hyperplane);
        if (base.degree() != fam_.degree()) throw GenericityFailure("slice lowered the degree");
      }
      lc.matrix = random_invertible_matrix(base.n(), rng);
      Family g = apply_generic_coordinates(base, lc.matrix);
      if (g.n() >= 2 && specialize(leading_space_form(g.F()), g.F().varset()[g.space_index(0)].name, 0).is_zero())
        throw GenericityFailure("the generic hyperplane at infinity contains a direction of the fibres");
      Ideal polar = polar_ideal(g);
      if (!polar_is_curve_or_empty(polar)) throw GenericityFailure("polar locus is not a curve");
      auto cands = atypical_candidates_top(g, polar);
      choice_.levels.push_back(lc);
      levels_.push_back(Level{i, g, polar, cands});
      cur = g;
    }
    for (auto& L : levels_) profile_.levels[L.index] = level_profile(L, attempt);
    if (n >= 2) profile_.levels[0] = degree_profile(attempt);
  }

  template <class Eval>
  std::pair<std::size_t, std::vector<Rational>> generic_by_sampling(const std::vector<Polynomial>& cands,
                                                                     std::uint64_t stream, Eval eval) {
    Rng rng(opt_.seed, stream);
    auto draw = [&] {
      for (;;) {
        Rational c = rng.rational();
        if (std::none_of(cands.begin(), cands.end(), [&](const Polynomial& p) { return vanishes_at(p, c); }))
          return c;
      }
    };
    for (unsigned k = 0; k <= opt_.retries; ++k) {
      Rational c1 = draw(), c2 = draw();
      if (c1 == c2) continue;
      std::size_t g1 = eval(c1), g2 = eval(c2);
      if (g1 == g2) return {g1, {c1, c2}};
    }
    throw GenericityFailure("generic value samples disagree");
  }

  GammaLevel level_profile(const Level& L, unsigned attempt) {
    GammaLevel G;
    G.level = L.index;
    G.candidates = L.candidates;
    auto [gen, samples] = generic_by_sampling(L.candidates, 0x100000ull + attempt * 64 + L.index,
                                              [&](const Rational& c) { return gamma_top(L.family, L.polar, c); });
    G.generic = gen;
    G.samples = samples;
    for (const auto& p : L.candidates) {
      AlgebraicGamma a = gamma_at_algebraic(L.family, L.polar, p);
      long defect = long(gen) - long(a.per_root);
      if (defect < 0 && !opt_.force) throw GenericityFailure("negative defect");
      G.entries.push_back({p, a.value_sum, a.per_root, defect});
    }
    return G;
  }

  GammaLevel degree_profile(unsigned attempt) {
    GammaLevel G;
    G.level = 0;
    G.candidates = degree_drop_candidates(fam_);
    auto [gen, samples] = generic_by_sampling(G.candidates, 0x200000ull + attempt,
                                              [&](const Rational& c) { return reduced_degree(fam_, c); });
    G.generic = gen;
    G.samples = samples;
    for (const auto& p : G.candidates) {
      std::size_t k = degree_at_algebraic(fam_, p);
      G.entries.push_back({p, k * parameter_degree(p), k, long(gen) - long(k)});
    }
    return G;
  }

  std::vector<std::size_t> compute_gamma(const Rational& c) {
    std::vector<std::size_t> g(fam_.n(), 0);
    for (const auto& L : levels_) g[L.index] = gamma_top(L.family, L.polar, c);
    if (fam_.n() >= 2) g[0] = reduced_degree(fam_, c);
    return g;
  }

  Family fam_;
  AnalysisOptions opt_;
  std::vector<std::string> warnings_;
  std::optional<HypothesisReport> hyp_;
  bool built_ = false;
  unsigned attempt_ = 0;
  std::string last_failure_;
  GenericChoice choice_;
  std::vector<Level> levels_;
  GammaProfile profile_;
  std::vector<Rational> requested_;
  std::map<Rational, std::vector<std::size_t>> gamma_cache_;
};

// ---------------------------------------------------------------------------
// Free-function entry points

inline GammaProfile gamma_star_profile(const Family& fam, std::uint64_t seed) {
  return Analysis(fam, {seed}).profile();
}

inline std::vector<std::size_t> gamma_star(const Family& fam, const Rational& c, std::uint64_t seed) {
  return Analysis(fam, {seed}).gamma_at(c);
}

inline long euler_characteristic(const Family& fam, const Rational& c, std::uint64_t seed) {
  return Analysis(fam, {seed}).euler_characteristic(c);
}

inline FiberReport cw_model(const Family& fam, const Rational& c, std::uint64_t seed) {
  return Analysis(fam, {seed}).fiber(c);
}

inline long euler_jump(const Family& fam, const Rational& c, std::uint64_t seed) {
  return Analysis(fam, {seed}).euler_jump(c);
}

inline Verdict verdict(const Family& fam, const Rational& c, std::uint64_t seed) {
  return Analysis(fam, {seed}).verdict(c);
}

}  // namespace gammastar
