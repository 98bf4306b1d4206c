#pragma once

#include <gammastar/monomial.hpp>
#include <gammastar/varset.hpp>

#include <string>
#include <vector>

namespace gammastar {

/// A monomial order: a sequence of non-negative weight vectors compared in
/// turn, then a grevlex or lex tie-break over the variable order. Block
/// (elimination) orders are a leading 0/1 weight row on the block.
class MonomialOrder {
 public:
  enum class Tiebreak { Grevlex, Lex };

  static MonomialOrder grevlex() { return MonomialOrder(Tiebreak::Grevlex); }
  static MonomialOrder lex() { return MonomialOrder(Tiebreak::Lex); }

  /// Elimination order for the variables in `block`: any monomial involving
  /// the block is larger than every monomial free of it.
  static MonomialOrder block(const std::vector<std::size_t>& block, std::size_t nvars,
                             MonomialOrder inner) {
    std::vector<int> w(nvars, 0);
    for (auto i : block) w[i] = 1;
    inner.weights_.insert(inner.weights_.begin(), std::move(w));
    inner.block_sizes_.insert(inner.block_sizes_.begin(), block.size());
    return inner;
  }

  /// Refines the grading that gives weight 1 to the space variables and 0 to
  /// everything else (degree-compatible for homogenization in space).
  static MonomialOrder space_graded(const VarSet& vs) {
    std::vector<int> w(vs.size(), 0);
    for (auto i : vs.space_indices()) w[i] = 1;
    MonomialOrder o(Tiebreak::Grevlex);
    o.weights_.push_back(std::move(w));
    o.block_sizes_.push_back(0);
    return o;
  }

  int compare(const Monomial& a, const Monomial& b) const noexcept {
    for (const auto& w : weights_) {
      long wa = 0, wb = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        wa += long(w[i]) * a[i];
        wb += long(w[i]) * b[i];
      }
      if (wa != wb) return wa < wb ? -1 : 1;
    }
    return tiebreak_ == Tiebreak::Grevlex ? grevlex_cmp(a, b) : lex_cmp(a, b);
  }

  bool less(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) < 0; }

  /// The induced order on a variable set obtained by dropping or appending
  /// variables. `map[i]` is the old index of new variable i (or -1 if new).
  MonomialOrder remapped(const std::vector<long>& map) const {
    MonomialOrder o(tiebreak_);
    for (std::size_t r = 0; r < weights_.size(); ++r) {
      std::vector<int> w(map.size(), 0);
      bool nonzero = false;
      for (std::size_t i = 0; i < map.size(); ++i)
        if (map[i] >= 0 && std::size_t(map[i]) < weights_[r].size()) {
          w[i] = weights_[r][map[i]];
          nonzero |= w[i] != 0;
        }
      if (nonzero) {
        o.weights_.push_back(std::move(w));
        o.block_sizes_.push_back(block_sizes_[r]);
      }
    }
    return o;
  }

  Tiebreak tiebreak() const noexcept { return tiebreak_; }
  const std::vector<std::vector<int>>& weights() const noexcept { return weights_; }

  std::string describe(const VarSet& vs) const {
    std::string inner = tiebreak_ == Tiebreak::Grevlex ? "grevlex" : "lex";
    std::string out = inner;
    for (std::size_t r = weights_.size(); r-- > 0;) {
      std::string names;
      for (std::size_t i = 0; i < weights_[r].size() && i < vs.size(); ++i)
        if (weights_[r][i]) names += (names.empty() ? "" : ",") + vs[i].name;
      out = (block_sizes_[r] ? "block(" : "graded(") + names + "; " + out + ")";
    }
    return out;
  }

  bool operator==(const MonomialOrder&) const = default;

 private:
  explicit MonomialOrder(Tiebreak t) : tiebreak_(t) {}

  std::vector<std::vector<int>> weights_;
  std::vector<std::size_t> block_sizes_;
  Tiebreak tiebreak_;
};

}  // namespace gammastar
