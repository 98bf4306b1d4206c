#pragma once

#include <gammastar/invariants.hpp>

#include "json.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace gammastar {

using Json = nlohmann::ordered_json;

/// Everything a command found, plus the choices that produced it.
struct AnalysisReport {
  std::string command;
  std::string input;
  FamilySpec spec;
  std::string F;
  std::size_t n = 0;
  unsigned degree = 0;
  std::optional<HypothesisReport> hypothesis;
  std::optional<GenericChoice> choice;
  std::optional<GammaProfile> profile;
  std::vector<FiberReport> fibers;
  std::vector<std::optional<long>> jumps;  // parallel to fibers
  std::vector<Verdict> verdicts;
  std::vector<std::string> warnings;
};

namespace detail {

inline Json matrix_json(const IntMatrix& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(row);
  return a;
}

inline Json poly_json(const Polynomial& p) {
  return Json{{"min_poly", p.to_string()}, {"degree", parameter_degree(p)}};
}

inline Json poly_list(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(poly_json(p));
  return a;
}

inline std::string matrix_text(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) s += (j ? ", " : "") + std::to_string(m[i][j]);
    s += "]";
  }
  return s + "]";
}

inline std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

inline std::string gamma_text(const std::vector<std::size_t>& g) {
  std::vector<std::string> parts;
  for (std::size_t i = g.size(); i-- > 0;) parts.push_back("gamma^" + std::to_string(i) + " = " + std::to_string(g[i]));
  return join(parts, ", ");
}

inline std::string lambda_text(const std::vector<long>& d) {
  std::vector<std::string> parts;
  for (std::size_t i = d.size(); i-- > 0;) parts.push_back("lambda^" + std::to_string(i) + " = " + std::to_string(d[i]));
  return join(parts, ", ");
}

}  // namespace detail

inline const char* kGenericityDisclosure =
    "generic hyperplanes are certified by computable proxies only (polar locus a curve or empty, "
    "finite fibre intersections, agreement of two generic samples); transversality to the "
    "stratification at infinity is not decided";

inline Json to_json(const AnalysisReport& r) {
  using namespace detail;
  Json j;
  j["command"] = r.command;
  j["family"] = Json{{"input", r.input},
                     {"mode", to_string(r.spec.mode)},
                     {"space_vars", r.spec.space_vars},
                     {"parameter", r.spec.parameter},
                     {"F", r.F},
                     {"n", r.n},
                     {"degree", r.degree}};
  if (r.hypothesis) {
    const auto& h = *r.hypothesis;
    j["hypothesis"] = Json{{"pass", h.pass},
                           {"smooth", h.smooth},
                           {"singular_values", poly_list(h.singular_values)},
                           {"escape_values", poly_list(h.escape_values)},
                           {"diagnostics", h.diagnostics}};
  }
  if (r.choice) {
    const auto& c = *r.choice;
    Json hs = Json::array();
    for (std::size_t k = 1; k < c.levels.size(); ++k) {
      const auto& L = c.levels[k];
      hs.push_back(Json{{"level", L.level},
                        {"coefficients", L.hyperplane->coeffs},
                        {"constant", L.hyperplane->constant},
                        {"matrix", matrix_json(L.matrix)}});
    }
    j["generic_choice"] = Json{{"seed", c.seed},
                               {"attempt", c.attempt},
                               {"matrix", c.levels.empty() ? Json::array() : matrix_json(c.levels[0].matrix)},
                               {"hyperplanes", hs},
                               {"disclosure", kGenericityDisclosure}};
  }
  if (r.profile) {
    Json lp = Json::array(), gp = Json::array();
    for (std::size_t i = r.profile->levels.size(); i-- > 0;) {
      const auto& L = r.profile->levels[i];
      Json atyp = Json::array(), defects = Json::array();
      for (const auto& e : L.entries) {
        Json a = poly_json(e.min_poly);
        a["gamma"] = e.per_root;
        a["value_sum"] = e.value_sum;
        atyp.push_back(a);
        Json d = poly_json(e.min_poly);
        d["lambda"] = e.defect;
        defects.push_back(d);
      }
      gp.push_back(Json{{"level", L.level},
                        {"generic", L.generic},
                        {"candidates", poly_list(L.candidates)},
                        {"atypical", atyp}});
      lp.push_back(Json{{"level", L.level}, {"defects", defects}});
    }
    j["lambda_profile"] = lp;
    j["gamma_profile"] = gp;
    j["atypical_values"] = poly_list(r.profile->atypical());
  }
  Json fs = Json::array();
  for (std::size_t k = 0; k < r.fibers.size(); ++k) {
    const auto& f = r.fibers[k];
    Json o{{"c", to_string(f.c)},
           {"mu", f.mu},
           {"gamma", f.gamma},
           {"lambda", f.defects},
           {"chi", f.chi},
           {"cells", f.cells},
           {"singular", f.singular}};
    o["euler_jump"] = r.jumps.size() > k && r.jumps[k] ? Json(*r.jumps[k]) : Json(nullptr);
    fs.push_back(o);
  }
  j["fibers"] = fs;
  Json vs = Json::array();
  for (const auto& v : r.verdicts)
    vs.push_back(Json{{"c", to_string(v.c)},
                      {"hypothesis", v.hypothesis_holds},
                      {"t_equisingular", v.t_equisingular},
                      {"lambda", v.defects},
                      {"implied", v.implied}});
  j["verdicts"] = vs;
  j["warnings"] = r.warnings;
  return j;
}

inline std::string to_text(const AnalysisReport& r) {
  using namespace detail;
  std::ostringstream os;
  os << "family      F = " << r.F << "\n";
  os << "            " << to_string(r.spec.mode) << " mode, space " << join(r.spec.space_vars, ", ")
     << ", parameter " << r.spec.parameter << ", n = " << r.n << ", degree " << r.degree << "\n";
  if (r.hypothesis) {
    os << "hypothesis  " << (r.hypothesis->pass ? "pass" : "FAIL") << "\n";
    for (const auto& d : r.hypothesis->diagnostics) os << "            " << d << "\n";
  }
  if (r.choice) {
    os << "generic     seed " << r.choice->seed << ", attempt " << r.choice->attempt << "\n";
    for (const auto& L : r.choice->levels) {
      os << "            level " << L.level << ": ";
      if (L.hyperplane) {
        os << "slice x_" << (L.hyperplane->coeffs.size() + 1) << " = (";
        std::vector<std::string> cs;
        for (long a : L.hyperplane->coeffs) cs.push_back(std::to_string(a));
        os << join(cs, ", ") << ") . x + " << L.hyperplane->constant << ", ";
      }
      os << "matrix " << matrix_text(L.matrix) << "\n";
    }
    os << "            note: " << kGenericityDisclosure << "\n";
  }
  if (r.profile) {
    for (std::size_t i = r.profile->levels.size(); i-- > 0;) {
      const auto& L = r.profile->levels[i];
      os << (i + 1 == r.profile->levels.size() ? "gamma*      " : "            ") << "gamma^" << i
         << " generic " << L.generic;
      for (const auto& e : L.entries)
        os << "; at " << e.min_poly << " = 0: " << e.per_root << " (lambda " << e.defect << ")";
      os << "\n";
    }
    auto at = r.profile->atypical();
    std::vector<std::string> names;
    for (const auto& p : at) names.push_back(p.to_string());
    os << "atypical    " << (names.empty() ? "none at infinity" : "roots of " + join(names, ", ")) << "\n";
  }
  for (std::size_t k = 0; k < r.fibers.size(); ++k) {
    const auto& f = r.fibers[k];
    std::vector<std::string> cells;
    for (long c : f.cells) cells.push_back(std::to_string(c));
    os << "fibre       c = " << to_string(f.c) << ": mu " << f.mu << ", " << gamma_text(f.gamma) << ", chi "
       << f.chi << ", cells (" << join(cells, ", ") << ")" << (f.singular ? ", singular" : "") << "\n";
    os << "            " << lambda_text(f.defects);
    if (r.jumps.size() > k && r.jumps[k]) os << ", chi(X_u) - chi(X_c) = " << *r.jumps[k];
    os << "\n";
  }
  for (const auto& v : r.verdicts) {
    os << "verdict     c = " << to_string(v.c) << ": " << (v.t_equisingular ? "" : "not ")
       << "t-equisingular at infinity\n";
    for (const auto& t : v.implied) os << "            implies: " << t << "\n";
  }
  for (const auto& w : r.warnings) os << "warning     " << w << "\n";
  return os.str();
}

}  // namespace gammastar
