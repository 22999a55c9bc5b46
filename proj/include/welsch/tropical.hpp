#pragma once
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "welsch/bipoly.hpp"
#include "welsch/rat.hpp"

namespace welsch {

// A Puiseux series in t known up to (excluding) t^order. Without an order the
// listed terms are the whole series.
class PuiseuxTrunc {
  public:
    PuiseuxTrunc() = default;
    PuiseuxTrunc(const std::map<Rat, CRat>& terms, std::optional<Rat> order = std::nullopt,
                 int max_denominator = 60);
    static PuiseuxTrunc constant(const CRat& c) { return PuiseuxTrunc({{Rat(0), c}}); }
    static PuiseuxTrunc monomial(const CRat& c, const Rat& e) { return PuiseuxTrunc({{e, c}}); }

    const std::map<Rat, CRat>& terms() const { return terms_; }
    const std::optional<Rat>& order() const { return order_; }
    // Exactly zero: no terms and no truncation.
    bool is_zero() const { return terms_.empty() && !order_; }
    // No term is known but the series may be nonzero beyond the truncation.
    bool is_undetermined() const { return terms_.empty() && order_.has_value(); }
    // Least exponent with a nonzero coefficient and that coefficient.
    const Rat& lowest_exponent() const;
    const CRat& leading_coefficient() const;

  private:
    std::map<Rat, CRat> terms_;
    std::optional<Rat> order_;
};

// -(least exponent). Throws ZeroSeries on zero and UndeterminedCoefficient when
// the truncation hides every term.
Rat valuation(const PuiseuxTrunc& s);

using PuiseuxPoly = std::map<Exp2, PuiseuxTrunc>;

struct Face {
    std::vector<Exp2> vertices;  // counterclockwise (a segment or a point in lower dimension)
    std::vector<Exp2> points;    // support points lifted onto this face
    Rat a, b, c;                 // N(i, j) = a i + b j + c on the face
    friend bool operator==(const Face& f, const Face& g) { return f.vertices == g.vertices; }
};

struct TropicalEdge {
    int from, to;  // indices into TropicalCurve::vertices
    int weight;
};

struct TropicalRay {
    int from;
    Exp2 direction;  // primitive integer vector
    int weight;
};

struct TropicalCurve {
    std::vector<std::pair<Rat, Rat>> vertices;  // one per face of the subdivision
    std::vector<TropicalEdge> edges;
    std::vector<TropicalRay> rays;
};

struct TropicalLimit {
    int dimension = 2;                // dimension of the Newton polygon
    std::vector<Exp2> polygon;        // vertices of the Newton polygon, counterclockwise
    std::map<Exp2, Rat> N;            // on every lattice point of the Newton polygon
    std::vector<Face> S;
    TropicalCurve T;
    std::vector<CBiPoly> initials;    // parallel to S
};

// Heights are the least exponents (-val). Throws UndeterminedCoefficient when a
// truncation leaves the lower hull undecided.
TropicalLimit tropical_limit(const PuiseuxPoly& f);

// Face given by its vertex set (any order).
CBiPoly initial_polynomial(const TropicalLimit& tl, const std::vector<Exp2>& face);

// Independent certificates of the invariants; each entry is (name, passed).
std::vector<std::pair<std::string, bool>> verify(const TropicalLimit& tl, const PuiseuxPoly& f);

// Lattice points of the convex polygon (or segment, or point) with these vertices.
std::vector<Exp2> lattice_points(const std::vector<Exp2>& polygon);

std::string to_json(const TropicalLimit& tl);
std::string to_svg(const TropicalLimit& tl);

}  // namespace welsch
