#pragma once

#include <gammastar/error.hpp>

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gammastar {

/// Hard cap on the number of variables a polynomial ring may have.
inline constexpr std::size_t kMaxVars = 16;

enum class VarRole { Parameter, Space, Auxiliary };

struct Variable {
  std::string name;
  VarRole role = VarRole::Space;
  bool operator==(const Variable&) const = default;
};

/// Ordered list of distinct variables. The order fixes the monomial layout
/// and the tie-breaking of every monomial order.
class VarSet {
 public:
  VarSet() = default;
  explicit VarSet(std::vector<Variable> vars) : vars_(std::move(vars)) {
    if (vars_.size() > kMaxVars)
      throw Error("too many variables (max " + std::to_string(kMaxVars) + ")");
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (vars_[i].name == vars_[j].name)
          throw Error("duplicate variable '" + vars_[i].name + "'");
  }

  std::size_t size() const noexcept { return vars_.size(); }
  const Variable& operator[](std::size_t i) const { return vars_[i]; }
  std::span<const Variable> variables() const noexcept { return vars_; }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].name == name) return i;
    return std::nullopt;
  }

  std::size_t index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw UnknownVariable(std::string(name));
  }

  std::optional<std::size_t> parameter() const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].role == VarRole::Parameter) return i;
    return std::nullopt;
  }

  std::vector<std::size_t> indices_with_role(VarRole role) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].role == role) out.push_back(i);
    return out;
  }

  std::vector<std::size_t> space_indices() const {
    return indices_with_role(VarRole::Space);
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& v : vars_) out.push_back(v.name);
    return out;
  }

  bool operator==(const VarSet&) const = default;

 private:
  std::vector<Variable> vars_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline VarSetPtr make_varset(std::vector<Variable> vars) {
  return std::make_shared<const VarSet>(std::move(vars));
}

/// Convenience: space variables followed by an optional parameter.
inline VarSetPtr make_family_varset(const std::vector<std::string>& space,
                                    const std::optional<std::string>& param) {
  std::vector<Variable> vars;
  for (const auto& s : space) vars.push_back({s, VarRole::Space});
  if (param) vars.push_back({*param, VarRole::Parameter});
  return make_varset(std::move(vars));
}

inline bool same_varset(const VarSetPtr& a, const VarSetPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// The variable set with the named variables removed.
inline VarSetPtr without(const VarSet& vs, std::span<const std::string> drop) {
  std::vector<Variable> kept;
  for (const auto& v : vs.variables())
    if (std::find(drop.begin(), drop.end(), v.name) == drop.end())
      kept.push_back(v);
  return make_varset(std::move(kept));
}

/// The variable set extended by one variable at the end.
inline VarSetPtr with_variable(const VarSet& vs, Variable extra) {
  std::vector<Variable> vars(vs.variables().begin(), vs.variables().end());
  vars.push_back(std::move(extra));
  return make_varset(std::move(vars));
}

/// A name not yet used in `vs`, derived from `stem`.
inline std::string fresh_name(const VarSet& vs, std::string stem) {
  std::string name = stem;
  for (int k = 0; vs.find(name); ++k) name = stem + std::to_string(k);
  return name;
}

}  // namespace gammastar
