#pragma once
#include <map>
#include <vector>

#include "welsch/bipoly.hpp"
#include "welsch/node.hpp"
#include "welsch/rat.hpp"
#include "welsch/unipoly.hpp"

namespace welsch {

enum class Reality { real, imaginary };

// Truncated power series in t; index = exponent.
using Series = std::vector<CRat>;

// A smooth s-arc t -> (cx + x(t), cy + y(t)) in the affine chart z = 1.
// x and y hold the coefficients of t^1 .. t^s. After normalisation the arc is
// a graph: x(t) = t, or y(t) = t when the arc is vertical.
struct Arc {
    CRat cx, cy;
    int order = 0;
    std::vector<CRat> x, y;
    Reality reality = Reality::real;

    // Full series (constant term included) of each coordinate, length order + 1.
    Series x_series() const;
    Series y_series() const;

    friend bool operator==(const Arc& a, const Arc& b) {
        return a.cx == b.cx && a.cy == b.cy && a.order == b.order && a.x == b.x && a.y == b.y;
    }
};

// Coefficient lists start at t^1 and are truncated or zero-padded to `order`.
// Throws NotSmooth when the linear part vanishes.
Arc make_arc(const CRat& cx, const CRat& cy, std::vector<CRat> x, std::vector<CRat> y, int order);
Arc make_real_arc(const Rat& cx, const Rat& cy, const std::vector<Rat>& x, const std::vector<Rat>& y, int order);

Arc conjugate_arc(const Arc& a);

CBiPoly to_complex(const BiPoly& f);

struct TangencyOrder {
    int order;
    bool at_least;  // F(gamma(t)) vanishes through the truncation; order = s + 1

    friend bool operator==(const TangencyOrder& a, const TangencyOrder& b) {
        return a.order == b.order && a.at_least == b.at_least;
    }
};

// Order of vanishing of t -> F(gamma(t)) at t = 0 on the truncated jet.
TangencyOrder tangency_order(const BiPoly& f, const Arc& a);
TangencyOrder tangency_order(const CBiPoly& f, const Arc& a);

// Taylor coefficients of F(gamma(t)) up to t^(n-1), F given by its coefficients.
std::vector<CRat> jet_values(const CBiPoly& f, const Arc& a, int n);

// A linear functional on the coefficients of degree-d curves, keyed by the
// affine exponent (i, j) of x^i y^j z^(d-i-j).
using Functional = std::map<Exp2, Rat>;

struct JetConditions {
    std::vector<Functional> functionals;
    int count = 0;  // prescribed tangency order k
};

// k conditions for a real arc, 2k real ones (real and imaginary parts, interleaved)
// for an imaginary arc. Requires 1 <= k <= a.order.
JetConditions jet_conditions(const Arc& a, int k, int d);

Rat apply_functional(const Functional& f, const BiPoly& curve);

// Monomials of degree <= d in a fixed order: by total degree, then by decreasing x power.
std::vector<Exp2> affine_monomials(int d);

// F(x, y) = Res_t(x(t) - x, y(t) - y) for a polynomial parametrisation.
BiPoly implicitize(const UniPoly& xt, const UniPoly& yt);

struct EvenOrderGerm {
    Arc arc;              // order 2s, tangent to the x-axis at the origin
    UniPoly xt, yt;       // x = eps t + t^2 + t^3, y = t^(2s)
    BiPoly implicit;      // reduced implicit equation of the parametrised curve
    Rat node_x, node_y;   // the double point (the A_2s point when eps = 0)
    Rat hessian_det;      // F_xx F_yy - F_xy^2 at that point
    NodeType type;
};

EvenOrderGerm even_order_family(int s, const Rat& eps);

}  // namespace welsch
