#pragma once
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "welsch/algebraic.hpp"
#include "welsch/form.hpp"
#include "welsch/node.hpp"

namespace welsch {

// A plane projective curve of degree 1..3. Coefficients are polynomials in a
// parameter lambda; when `lambda` is set they are evaluated at that real
// algebraic number, otherwise they must be constants.
class PlaneCurve {
  public:
    explicit PlaneCurve(const Form& f);
    PlaneCurve(const LForm& f, const AlgebraicReal& lambda);
    // Affine equation of total degree d, homogenised with z.
    static PlaneCurve affine(const BiPoly& f);

    int degree() const { return f_.degree(); }
    const LForm& coeffs() const { return f_; }
    const std::optional<AlgebraicReal>& lambda() const { return lambda_; }
    // True when every coefficient is rational; rational_form() is then exact.
    bool is_rational() const { return !lambda_; }
    Form rational_form() const;
    // Sign of a polynomial in the parameter at lambda (plain sign when rational).
    int sign_at(const UniPoly& p) const;

  private:
    LForm f_;
    std::optional<AlgebraicReal> lambda_;
};

struct NodeInfo {
    NodeType type = NodeType::degenerate;
    // Affine coordinates in the chart named by `chart`: 'z' gives (x/z, y/z),
    // 'y' gives (x/y, z/y), 'x' gives (y/x, z/x). Empty for imaginary pairs.
    std::optional<std::pair<AlgebraicReal, AlgebraicReal>> location;
    char chart = 'z';
};

// A singular point with projective coordinates that are polynomials in a
// parameter u, evaluated at a root of `modulus`. Real points carry that root.
// For curves over an extension, u is the curve's lambda.
struct SingularPoint {
    NodeInfo info;
    UniPoly modulus;
    std::array<UniPoly, 3> coords;
    std::optional<AlgebraicReal> u;
};

std::vector<SingularPoint> singular_points(const PlaneCurve& c);

NodeType classify_node(const PlaneCurve& c, const std::array<Rat, 3>& p);

struct RationalityCertificate {
    bool counted = false;
    std::string diagnostic;  // "smooth", "reducible", "cusp" when not counted
    int real_singular = 0;
    int imaginary_pairs = 0;
    std::vector<SingularPoint> points;
};

RationalityCertificate is_counted_rational(const PlaneCurve& c);

// (-1)^(number of solitary nodes); imaginary pairs do not contribute.
int welschinger_sign(const std::vector<NodeInfo>& nodes);

// The singularity eliminant of a family of cubics f(lambda) and the adjugate of
// the 6x6 matrix behind it (rows: coefficients of F_x, F_y, F_z and of the
// partials of the Hessian determinant, over the six quadratic monomials).
class CubicFamily {
  public:
    explicit CubicFamily(const LForm& f);
    const LForm& form() const { return f_; }
    // Vanishes exactly at the singular members.
    const UniPoly& discriminant() const { return disc_; }
    // The unique singular point of the member at lambda, or nothing when the
    // matrix has corank >= 2 there (several singular points or worse).
    // The affine location is only filled in when `with_location` is set.
    std::optional<SingularPoint> singular_point(const AlgebraicReal& lambda, bool with_location = true) const;

  private:
    LForm f_;
    UniPoly disc_;
    std::array<std::array<UniPoly, 6>, 6> adj_;
};

// Sum of the principal 2x2 minors of the projective Hessian at p, as a
// polynomial in the parameter; its sign is the node type.
UniPoly hessian_e2(const LForm& f, const std::array<UniPoly, 3>& p);

}  // namespace welsch
