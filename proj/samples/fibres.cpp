// Walks the fibres of f = x + x^2*y: the fibre over 0 loses a polar
// intersection point to infinity, and its Euler characteristic jumps.
#include <gammastar/gammastar.hpp>

#include <iostream>

using namespace gammastar;

int main() {
  Family fam = parse_family({"x + x^2*y", {"x", "y"}, "t", FamilyMode::Fiber});
  Analysis a(fam, {.seed = 7});

  std::cout << "F = " << fam.F() << "\n";
  for (const auto& level : a.profile().levels) {
    std::cout << "gamma^" << level.level << " generic " << level.generic << "\n";
    for (const auto& e : level.entries)
      std::cout << "  at " << e.min_poly << " = 0: " << e.per_root << ", lambda " << e.defect << "\n";
  }
  for (Rational c : {Rational(0), Rational(1)}) {
    FiberReport f = a.fiber(c);
    Verdict v = a.verdict(c);
    std::cout << "c = " << c << ": chi " << f.chi << ", mu " << f.mu << ", "
              << (v.t_equisingular ? "" : "not ") << "t-equisingular at infinity\n";
  }
}
