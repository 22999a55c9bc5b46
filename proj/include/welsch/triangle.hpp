#pragma once
#include <optional>
#include <vector>

#include "welsch/algebraic.hpp"
#include "welsch/bipoly.hpp"
#include "welsch/unipoly.hpp"

namespace welsch {

// F = c02 y^2 + P(x) y + c00 with P = sum c_i1 x^i, Newton triangle
// Conv{(0,0), (0,2), (k,1)}.
enum class TriangleVariant {
    part1,  // c00, c01, c02, c11 fixed
    part2   // c00, c02, c11 fixed and c_{k-1,1} = 0
};

struct TriangleFamily {
    int k = 1;
    TriangleVariant variant = TriangleVariant::part1;
    Rat c00, c01, c02, c11;  // c01 unused by part2
};

// Indices i of the coefficients c_i1 left free by the family.
std::vector<int> free_indices(const TriangleFamily& fam);

// Throws SchemaError on an invalid family (k < 1, a zero fixed coefficient,
// or part2 with k = 2, where c11 would have to be both fixed and zero).
void validate(const TriangleFamily& fam);

struct TriangleSolution {
    // The solution lives over Q[beta]/(modulus); every c_i1 is a polynomial in beta.
    UniPoly modulus;
    std::vector<UniPoly> coeffs;  // c_01 .. c_k1
    std::optional<AlgebraicReal> beta;  // the real root, for real solutions
    bool real() const { return beta.has_value(); }
    // c_i1 at a real solution.
    AlgebraicReal value(int i) const;
};

// Fast path: P = s T_k(a x + b) with s^2 = 4 c00 c02 (T_k Chebyshev). Every
// solution is certified by the double-root census of D = P^2 - 4 c00 c02.
// Throws NonGenericCoefficients when the census or the parametrisation fails.
std::vector<TriangleSolution> enumerate_rational_members(const TriangleFamily& fam);

// D(x) = P(x)^2 - 4 c00 c02 as a polynomial in (beta, x), reduced modulo the solution modulus.
BiPoly node_polynomial(const TriangleFamily& fam, const TriangleSolution& sol);

struct NodeCensus {
    int solitary = 0;
    int non_solitary = 0;
};

// Per real solution: each real double root of D is solitary when D <= 0 nearby.
// Throws DegenerateDoubleRoot on a root of order >= 3.
std::vector<NodeCensus> classify_real_solutions(const TriangleFamily& fam, const std::vector<TriangleSolution>& sols);

// Same census for a univariate D with rational coefficients.
NodeCensus classify_double_roots(const UniPoly& d);

struct OracleResult {
    int count = 0;
    int real_count = 0;
    std::vector<std::vector<AlgebraicReal>> real_solutions;  // values of the free coefficients
};

// Direct elimination of {D(r) = D'(r) = 0} over the free coefficients, k <= 3.
OracleResult brute_force_oracle(const TriangleFamily& fam);

}  // namespace welsch
