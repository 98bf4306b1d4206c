// Reduced bases, elimination and quotient dimensions on small ideals.
#include <gammastar/gammastar.hpp>

#include <iostream>

using namespace gammastar;

int main() {
  auto vars = make_varset({{"x", VarRole::Space}, {"y", VarRole::Space}, {"t", VarRole::Parameter}});
  auto p = [&](const char* s) { return parse_polynomial(s, vars); };

  Ideal curve = buchberger({p("x - t"), p("y - t^2")}, MonomialOrder::grevlex());
  std::string drop = "t";
  Ideal image = eliminate(curve, std::span<const std::string>(&drop, 1));
  std::cout << "image of t -> (t, t^2): " << image.basis().front() << "\n";

  Ideal points = buchberger({p("x^2 + y^2 - 1"), p("x*y"), p("t")}, MonomialOrder::grevlex());
  std::cout << "points on circle and axes: " << quotient_dimension(points) << "\n";

  Ideal sat = saturate(buchberger({p("x*y"), p("x*t")}, MonomialOrder::grevlex()), p("x"));
  std::cout << "(xy, xt) : x^inf =";
  for (const auto& g : sat.basis()) std::cout << " " << g;
  std::cout << "\n";
}
