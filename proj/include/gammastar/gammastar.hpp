#pragma once

// Umbrella header for the library (the CLI front end lives in cli.hpp).

#include <gammastar/error.hpp>
#include <gammastar/rational.hpp>
#include <gammastar/varset.hpp>
#include <gammastar/monomial.hpp>
#include <gammastar/polynomial.hpp>
#include <gammastar/gcd.hpp>
#include <gammastar/parser.hpp>
#include <gammastar/family.hpp>
#include <gammastar/order.hpp>
#include <gammastar/groebner.hpp>
#include <gammastar/linalg.hpp>
#include <gammastar/upoly.hpp>
#include <gammastar/generic.hpp>
#include <gammastar/polar.hpp>
#include <gammastar/invariants.hpp>
