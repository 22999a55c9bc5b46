#pragma once
#include <utility>
#include <vector>

#include "welsch/bipoly.hpp"
#include "welsch/unipoly.hpp"

namespace welsch {

// Polynomials in y whose coefficients live in Q[x]/(m) with m squarefree.
// Q[x]/(m) is a product of fields; whenever a zero divisor shows up the
// modulus is split and both halves are followed (dynamic evaluation).
struct ModBranch {
    UniPoly modulus;
    PolyPoly poly;  // coefficients reduced modulo `modulus`, low to high in y
};

PolyPoly reduce_mod(const PolyPoly& a, const UniPoly& m);

// Monic gcd of a and b over each field factor of Q[x]/(m). The moduli of the
// returned branches multiply to m (up to a constant).
std::vector<ModBranch> gcd_mod(const UniPoly& m, const PolyPoly& a, const PolyPoly& b);

// Gcd of several polynomials (all branches).
std::vector<ModBranch> gcd_mod(const UniPoly& m, const std::vector<PolyPoly>& polys);

// (part of m where c vanishes, part of m where c is a unit); either may be constant.
std::pair<UniPoly, UniPoly> split_mod(const UniPoly& m, const UniPoly& c);

// Product and exact quotient over Q[x]/(m) with a monic divisor.
PolyPoly mul_mod(const PolyPoly& a, const PolyPoly& b, const UniPoly& m);
// Division by a divisor with unit leading coefficient; returns (quotient, remainder).
std::pair<PolyPoly, PolyPoly> divmod_mod(const PolyPoly& a, const PolyPoly& b, const UniPoly& m);

}  // namespace welsch
