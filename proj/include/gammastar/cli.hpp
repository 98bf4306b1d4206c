#pragma once

#include <gammastar/report.hpp>

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <vector>

namespace gammastar {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitHypothesis = 2,
  kExitGenericity = 3,
  kExitInvariant = 4,
};

struct RunConfig {
  std::string command;
  FamilySpec spec;
  std::vector<std::string> at;
  std::uint64_t seed = 0;
  unsigned retries = 8;
  std::string format = "text";
  bool force = false;
};

/// Seed used when --seed is absent: GAMMASTAR_SEED if set, else 0.
inline std::uint64_t default_seed() {
  const char* s = std::getenv("GAMMASTAR_SEED");
  if (!s || !*s) return 0;
  return std::stoull(s);
}

inline Rational parse_rational(const std::string& text) {
  Polynomial p = parse_polynomial(text, make_varset({}));
  if (!p.is_constant()) throw Error("'" + text + "' is not a rational number");
  return p.is_zero() ? Rational(0) : p.constant_value();
}

namespace detail {

inline std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

/// Exit code and short kind name for a computation error.
inline std::pair<int, std::string> classify(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return {kExitUsage, "parse_error"};
  if (dynamic_cast<const UnknownVariable*>(&e)) return {kExitUsage, "unknown_variable"};
  if (dynamic_cast<const DegenerateFamily*>(&e)) return {kExitUsage, "degenerate_family"};
  if (dynamic_cast<const HypothesisFailure*>(&e)) return {kExitHypothesis, "hypothesis_failure"};
  if (dynamic_cast<const NonIsolatedSingularities*>(&e)) return {kExitHypothesis, "non_isolated_singularities"};
  if (dynamic_cast<const RetriesExhausted*>(&e)) return {kExitGenericity, "retries_exhausted"};
  if (dynamic_cast<const NegativeTopCellCount*>(&e)) return {kExitInvariant, "negative_top_cell_count"};
  if (dynamic_cast<const InvariantViolation*>(&e)) return {kExitInvariant, "invariant_violation"};
  return {kExitInvariant, "internal_error"};
}

inline void emit(const RunConfig& cfg, const AnalysisReport& r, std::ostream& out,
                 const std::optional<std::pair<std::string, std::string>>& error, int code) {
  if (cfg.format == "json") {
    Json j = to_json(r);
    if (error) j["error"] = Json{{"kind", error->first}, {"message", error->second}, {"exit_code", code}};
    out << j.dump(2) << "\n";
  } else {
    out << to_text(r);
    if (error) out << "error       " << error->first << ": " << error->second << "\n";
  }
}

/// Rational parameter values worth reporting by default: rational atypical
/// values and rational singular values.
inline std::vector<Rational> default_values(const AnalysisReport& r) {
  std::vector<Polynomial> ps;
  if (r.profile) ps = r.profile->atypical();
  if (r.hypothesis)
    ps.insert(ps.end(), r.hypothesis->singular_values.begin(), r.hypothesis->singular_values.end());
  std::vector<Rational> out;
  for (const auto& p : ps)
    if (auto c = rational_root(p)) out.push_back(*c);
  return out;
}

}  // namespace detail

/// Runs one command on an already parsed configuration.
inline int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  AnalysisReport r;
  r.command = cfg.command;
  r.input = cfg.spec.expression;
  r.spec = cfg.spec;
  std::vector<Rational> at;
  std::optional<Family> fam;
  try {
    for (const auto& a : cfg.at) at.push_back(parse_rational(a));
    fam = parse_family(cfg.spec);
  } catch (const std::exception& e) {
    auto [code, kind] = detail::classify(e);
    if (code != kExitUsage) kind = "usage_error";
    detail::emit(cfg, r, out, std::make_pair(kind, std::string(e.what())), kExitUsage);
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  r.F = fam->F().to_string();
  r.n = fam->n();
  r.degree = fam->degree();
  try {
    Analysis A(*fam, {cfg.seed, cfg.retries, cfg.force});
    r.hypothesis = A.hypothesis();
    if (!r.hypothesis->pass) {
      if (!cfg.force) throw HypothesisFailure("singular points of the fibres are not bounded");
      r.warnings.push_back("hypothesis fails; computed under --force, verdict tags suppressed");
    }
    if (cfg.command == "euler" && at.empty()) throw Error("euler needs at least one --at value");
    r.profile = A.profile();
    r.choice = A.choice();
    std::vector<Rational> values = at;
    if (cfg.command == "analyze") {
      auto d = detail::default_values(r);
      values.insert(values.end(), d.begin(), d.end());
    }
    std::set<Rational> uniq(values.begin(), values.end());
    if (cfg.command == "analyze" || cfg.command == "euler" || cfg.command == "gamma") {
      for (const auto& c : uniq) {
        FiberReport f = A.fiber(c);
        r.fibers.push_back(f);
        if (cfg.command == "gamma") {
          r.jumps.push_back(std::nullopt);
          continue;
        }
        try {
          r.jumps.push_back(A.euler_jump(c));
        } catch (const InvariantViolation&) {
          throw;
        } catch (const RetriesExhausted&) {
          throw;
        } catch (const Error& e) {
          r.jumps.push_back(std::nullopt);
          r.warnings.push_back(std::string("no Euler jump at ") + to_string(c) + ": " + e.what());
        }
      }
    }
    if (cfg.command == "analyze")
      for (const auto& c : uniq) r.verdicts.push_back(A.verdict(c));
    // Refresh: later fibres may have forced a resample.
    r.profile = A.profile();
    r.choice = A.choice();
    for (const auto& w : A.warnings()) r.warnings.push_back(w);
    detail::emit(cfg, r, out, std::nullopt, kExitOk);
    return kExitOk;
  } catch (const std::exception& e) {
    auto [code, kind] = detail::classify(e);
    if (cfg.command == "euler" && std::string(e.what()).find("--at") != std::string::npos) {
      code = kExitUsage;
      kind = "usage_error";
    }
    detail::emit(cfg, r, out, std::make_pair(kind, std::string(e.what())), code);
    err << "error: " << e.what() << "\n";
    return code;
  }
}

/// Full command line entry point.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Global polar invariants of one-parameter hypersurface families", "gammastar"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.seed = 0;
  std::string vars, mode = "fiber";
  bool seed_given = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--poly", cfg.spec.expression, "f(x) in fiber mode, F(t,x) in general mode")->required();
    sub->add_option("--vars", vars, "comma-separated space variables, in order")->required();
    sub->add_option("--param", cfg.spec.parameter, "parameter name")->capture_default_str();
    sub->add_option("--mode", mode, "fiber: F = f - t; general: F as written")
        ->check(CLI::IsMember({"fiber", "general"}))
        ->capture_default_str();
    sub->add_option("--at", cfg.at, "parameter values to analyze (rationals)")->delimiter(',');
    sub->add_option_function<std::uint64_t>(
        "--seed", [&](const std::uint64_t& s) { cfg.seed = s, seed_given = true; }, "seed for generic choices");
    sub->add_option("--retries", cfg.retries, "resampling limit")->capture_default_str();
    sub->add_option("--format", cfg.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_flag("--force", cfg.force, "compute even when the hypothesis fails; no verdict tags");
  };
  for (auto [name, help] : {std::pair{"analyze", "hypothesis, atypical values, gamma profile, fibres, verdicts"},
                            std::pair{"gamma", "gamma profile (and gamma at --at values)"},
                            std::pair{"atypical", "atypical values at infinity and singular values"},
                            std::pair{"euler", "Euler characteristic and cell counts at --at values"}})
    add_common(app.add_subcommand(name, help));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (!seed_given) {
    try {
      cfg.seed = default_seed();
    } catch (const std::exception&) {
      err << "error: GAMMASTAR_SEED is not an unsigned integer\n";
      return kExitUsage;
    }
  }
  cfg.spec.space_vars = detail::split_names(vars);
  cfg.spec.mode = mode == "general" ? FamilyMode::General : FamilyMode::Fiber;
  return execute(cfg, out, err);
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"gammastar"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(int(argv.size()), argv.data(), out, err);
}

}  // namespace gammastar
