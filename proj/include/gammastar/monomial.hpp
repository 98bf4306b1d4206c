#pragma once

#include <gammastar/varset.hpp>

#include <array>
#include <cassert>
#include <cstdint>
#include <functional>
#include <initializer_list>

namespace gammastar {

/// Exponent vector over a VarSet; entries beyond size() are always zero.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
    assert(nvars <= kMaxVars);
  }
  Monomial(std::initializer_list<unsigned> exps)
      : n_(static_cast<std::uint8_t>(exps.size())) {
    assert(exps.size() <= kMaxVars);
    std::size_t i = 0;
    for (unsigned e : exps) set(i++, e);
  }

  std::size_t size() const noexcept { return n_; }
  unsigned operator[](std::size_t i) const noexcept { return e_[i]; }
  unsigned degree() const noexcept { return deg_; }

  void set(std::size_t i, unsigned e) {
    deg_ = static_cast<std::uint32_t>(deg_ - e_[i] + e);
    e_[i] = static_cast<std::uint16_t>(e);
  }

  bool is_one() const noexcept { return deg_ == 0; }

  bool divides(const Monomial& m) const noexcept {
    if (deg_ > m.deg_) return false;
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  /// True when no variable occurs in both.
  bool coprime(const Monomial& m) const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] && m.e_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const noexcept {
    Monomial r(n_);
    for (std::size_t i = 0; i < n_; ++i) r.e_[i] = e_[i] + m.e_[i];
    r.deg_ = deg_ + m.deg_;
    return r;
  }

  /// Exact quotient; requires m | *this.
  Monomial operator/(const Monomial& m) const noexcept {
    assert(m.divides(*this));
    Monomial r(n_);
    for (std::size_t i = 0; i < n_; ++i) r.e_[i] = e_[i] - m.e_[i];
    r.deg_ = deg_ - m.deg_;
    return r;
  }

  Monomial lcm(const Monomial& m) const noexcept {
    Monomial r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      r.e_[i] = std::max(e_[i], m.e_[i]);
      r.deg_ += r.e_[i];
    }
    return r;
  }

  bool operator==(const Monomial& m) const noexcept {
    return n_ == m.n_ && deg_ == m.deg_ && e_ == m.e_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = n_;
    for (std::size_t i = 0; i < n_; ++i) h = h * 131 + e_[i];
    return h;
  }

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
  std::uint32_t deg_ = 0;
};

/// Graded reverse lexicographic comparison: -1, 0, +1.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  return 0;
}

inline int lex_cmp(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace gammastar
