#pragma once
#include "welsch/bipoly.hpp"
#include "welsch/linalg.hpp"
#include "welsch/unipoly.hpp"

namespace welsch {

// Res(p, q) over Q with respect to the actual degrees. Throws ZeroInput on a zero argument.
Rat resultant(const UniPoly& p, const UniPoly& q);

// Determinant of the Sylvester matrix built from formal coefficient vectors
// (low to high, leading entries may vanish).
Rat sylvester_resultant(const Vec& p, const Vec& q);

// Resultant eliminating the outer variable v of p(v), q(v) whose coefficients are
// polynomials in lambda; the result is a polynomial in lambda. Formal degrees are
// the vector lengths minus one after trailing zero coefficients are dropped.
// Computed by evaluation at rational lambda and interpolation.
UniPoly resultant(PolyPoly p, PolyPoly q);

// Res_y(f(x, y), g(x, y)) as a polynomial in x.
UniPoly resultant_y(const BiPoly& f, const BiPoly& g);
// Res_x(f(x, y), g(x, y)) as a polynomial in y.
UniPoly resultant_x(const BiPoly& f, const BiPoly& g);

// Res_v(p, dp/dv) with formal degrees; vanishes where p(lambda, v) has a
// repeated root in v or its leading coefficient drops twice.
UniPoly resultant_with_derivative(const PolyPoly& p);

}  // namespace welsch
