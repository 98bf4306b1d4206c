#pragma once

#include <gammastar/gcd.hpp>
#include <gammastar/parser.hpp>
#include <gammastar/polynomial.hpp>

#include <string>
#include <vector>

namespace gammastar {

enum class FamilyMode { Fiber, General };

inline std::string to_string(FamilyMode m) { return m == FamilyMode::Fiber ? "fiber" : "general"; }

struct FamilySpec {
  std::string expression;
  std::vector<std::string> space_vars;
  std::string parameter = "t";
  FamilyMode mode = FamilyMode::Fiber;
};

/// A one-parameter polynomial family F(t, x_1..x_n). The variable set lists
/// the space variables in order followed by the parameter.
class Family {
 public:
  Family(Polynomial F, FamilySpec spec) : F_(std::move(F)), spec_(std::move(spec)) {
    const VarSet& vs = F_.varset();
    auto p = vs.parameter();
    if (!p) throw DegenerateFamily("family has no parameter variable");
    param_ = *p;
    space_ = vs.space_indices();
    if (space_.empty()) throw DegenerateFamily("family needs at least one space variable");
    auto d = space_degree(F_);
    if (!d || *d == 0) throw DegenerateFamily("F is constant in the space variables");
    degree_ = *d;
  }

  const Polynomial& F() const noexcept { return F_; }
  const VarSetPtr& vars() const noexcept { return F_.vars(); }
  const FamilySpec& spec() const noexcept { return spec_; }
  std::size_t n() const noexcept { return space_.size(); }
  unsigned degree() const noexcept { return degree_; }
  std::size_t parameter_index() const noexcept { return param_; }
  const std::string& parameter_name() const { return F_.varset()[param_].name; }
  const std::vector<std::size_t>& space_indices() const noexcept { return space_; }
  std::size_t space_index(std::size_t k) const { return space_[k]; }

  /// True when F does not involve the parameter at all.
  bool is_constant_family() const { return !F_.uses_variable(param_); }

  /// F_c over the space variables only.
  Polynomial fiber(const Rational& c) const { return specialize(F_, parameter_name(), c); }

  /// A family with the same provenance but a rewritten polynomial.
  Family with_polynomial(Polynomial G) const { return Family(std::move(G), spec_); }

 private:
  Polynomial F_;
  FamilySpec spec_;
  std::size_t param_ = 0;
  std::vector<std::size_t> space_;
  unsigned degree_ = 0;
};

/// Builds F = f - t (fiber mode) or F as written (general mode).
inline Family parse_family(const FamilySpec& spec) {
  if (spec.space_vars.empty()) throw Error("at least one space variable is required");
  if (!is_identifier(spec.parameter)) throw Error("invalid parameter name '" + spec.parameter + "'");
  for (const auto& v : spec.space_vars) {
    if (!is_identifier(v)) throw Error("invalid variable name '" + v + "'");
    if (v == spec.parameter) throw Error("parameter '" + v + "' is also a space variable");
  }
  VarSetPtr vars = make_family_varset(spec.space_vars, spec.parameter);
  if (spec.mode == FamilyMode::Fiber) {
    VarSetPtr space_only = make_family_varset(spec.space_vars, std::nullopt);
    Polynomial f;
    try {
      f = parse_polynomial(spec.expression, space_only);
    } catch (const ParseError& e) {
      if (std::string(e.what()).find("'" + spec.parameter + "'") != std::string::npos)
        throw Error("parameter '" + spec.parameter + "' may not appear in a fiber-mode polynomial");
      throw;
    }
    Polynomial F = rebase(f, vars) - Polynomial::variable(vars, spec.parameter);
    return Family(std::move(F), spec);
  }
  return Family(parse_polynomial(spec.expression, vars), spec);
}

}  // namespace gammastar
