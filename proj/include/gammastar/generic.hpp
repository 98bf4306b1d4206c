#pragma once

#include <gammastar/family.hpp>
#include <gammastar/linalg.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gammastar {

/// Deterministic random source. Streams are keyed by (seed, stream) through
/// SplitMix64 and drawn from mt19937_64, whose output sequence is fixed by
/// the standard; values are taken by plain modular reduction so the draws are
/// identical on every platform.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream) : gen_(mix(mix(seed) ^ (stream * 0x9E3779B97F4A7C15ull))) {}

  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(gen_() % span);
  }

  /// A small-height rational p/q with |p| <= 60 and 1 <= q <= 7.
  Rational rational() {
    Rational r(uniform(-60, 60), uniform(1, 7));
    r.canonicalize();
    return r;
  }

 private:
  std::mt19937_64 gen_;
};

using IntMatrix = std::vector<std::vector<long>>;

/// Slicing hyperplane x_m = sum_{i<m} coeffs[i] x_i + constant, in the
/// coordinates of the level above.
struct Hyperplane {
  std::vector<long> coeffs;
  long constant = 0;
};

/// The generic data used for one level: an optional slice of the family from
/// the level above, then a linear change of coordinates.
struct LevelChoice {
  std::size_t level = 0;
  std::optional<Hyperplane> hyperplane;
  IntMatrix matrix;
};

struct GenericChoice {
  std::uint64_t seed = 0;
  unsigned attempt = 0;
  std::vector<LevelChoice> levels;
};

inline QMatrix to_qmatrix(const IntMatrix& m) {
  QMatrix q(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) q(i, j) = m[i][j];
  return q;
}

/// Random invertible integer matrix with entries in [-3, 3].
inline IntMatrix random_invertible_matrix(std::size_t n, Rng& rng) {
  for (;;) {
    IntMatrix m(n, std::vector<long>(n));
    for (auto& row : m)
      for (auto& v : row) v = rng.uniform(-3, 3);
    if (rank(to_qmatrix(m)) == n) return m;
  }
}

inline Hyperplane random_hyperplane(std::size_t m, Rng& rng) {
  Hyperplane h;
  for (std::size_t i = 0; i + 1 < m; ++i) h.coeffs.push_back(rng.uniform(-3, 3));
  h.constant = rng.uniform(-5, 5);
  return h;
}

/// Rewrites F in new coordinates: old x_j = sum_i M[i][j] new x_i. The first
/// new coordinate plays the generic linear form.
inline Family apply_generic_coordinates(const Family& fam, const IntMatrix& M) {
  std::size_t n = fam.n();
  if (M.size() != n) throw Error("coordinate change has the wrong size");
  if (rank(to_qmatrix(M)) != n) throw Error("coordinate change is singular");
  const VarSetPtr& vs = fam.vars();
  std::map<std::size_t, Polynomial> sub;
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial form = Polynomial::constant(vs, 0);
    for (std::size_t i = 0; i < n; ++i)
      if (M[i][j]) form += Polynomial::variable(vs, fam.space_index(i)) * Rational(M[i][j]);
    sub.emplace(fam.space_index(j), std::move(form));
  }
  return fam.with_polynomial(compose(fam.F(), sub, vs));
}

/// Intersects the family with a hyperplane expressing the last space
/// coordinate affinely in the others. The result has one space variable less.
inline Family slice(const Family& fam, const Hyperplane& h) {
  std::size_t m = fam.n();
  if (m < 2) throw Error("cannot slice a family with one space variable");
  if (h.coeffs.size() + 1 != m) throw Error("hyperplane has the wrong size");
  const VarSet& vs = fam.F().varset();
  std::vector<std::string> space;
  for (std::size_t k = 0; k + 1 < m; ++k) space.push_back(vs[fam.space_index(k)].name);
  VarSetPtr target = make_family_varset(space, fam.parameter_name());
  Polynomial form = Polynomial::constant(target, h.constant);
  for (std::size_t k = 0; k + 1 < m; ++k)
    if (h.coeffs[k]) form += Polynomial::variable(target, space[k]) * Rational(h.coeffs[k]);
  std::map<std::size_t, Polynomial> sub;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i == fam.space_index(m - 1)) continue;
    sub.emplace(i, Polynomial::variable(target, vs[i].name));
  }
  sub.emplace(fam.space_index(m - 1), form);
  Polynomial G = compose(fam.F(), sub, target);
  FamilySpec spec = fam.spec();
  spec.space_vars = space;
  return Family(std::move(G), std::move(spec));
}

}  // namespace gammastar
