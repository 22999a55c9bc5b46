#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "welsch/bipoly.hpp"
#include "welsch/rat.hpp"
#include "welsch/unipoly.hpp"

namespace welsch {

struct Interval {
    Rat lo, hi;

    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
// b must not contain zero.
Interval operator/(const Interval& a, const Interval& b);
Interval eval(const UniPoly& p, const Interval& x);
Interval eval(const BiPoly& f, const Interval& x, const Interval& y);

std::vector<UniPoly> sturm_sequence(const UniPoly& p);
// Sign variations of the sequence at x, zeros skipped.
int sign_variations(const std::vector<UniPoly>& seq, const Rat& x);
// Number of distinct roots in (lo, hi] for the polynomial heading `seq`.
int sturm_count(const std::vector<UniPoly>& seq, const Rat& lo, const Rat& hi);

// A real root of a squarefree polynomial, pinned by an open isolating interval
// with rational endpoints that are not roots. Immutable: refinement returns a copy.
class AlgebraicReal {
  public:
    AlgebraicReal(const UniPoly& p, const Rat& lo, const Rat& hi);
    static AlgebraicReal rational(const Rat& r);

    const UniPoly& poly() const { return p_; }
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    Rat midpoint() const { return (lo_ + hi_) / 2; }
    Interval interval() const { return {lo_, hi_}; }
    bool is_rational() const { return p_.degree() == 1; }
    // Exact value when the defining polynomial is linear.
    std::optional<Rat> rational_value() const;
    double approx() const;

    AlgebraicReal refined() const;
    AlgebraicReal refined_to(const Rat& width) const;

    // Exact sign of q at this number.
    int sign_of(const UniPoly& q) const;
    bool is_root_of(const UniPoly& q) const { return sign_of(q) == 0; }
    // -1, 0, +1 as this number is below, equal to, or above r.
    int compare(const Rat& r) const;

  private:
    friend std::vector<AlgebraicReal> isolate_real_roots(const UniPoly& p);
    AlgebraicReal(UniPoly p, Rat lo, Rat hi, bool) : p_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)) {}
    UniPoly p_;
    Rat lo_, hi_;
};

// -1, 0, +1 as a is below, equal to, or above b.
int compare(const AlgebraicReal& a, const AlgebraicReal& b);

// Ascending order; one entry per distinct real root.
std::vector<AlgebraicReal> isolate_real_roots(const UniPoly& p);

struct RootWithMultiplicity {
    AlgebraicReal root;
    int multiplicity;
};
std::vector<RootWithMultiplicity> real_roots_with_multiplicity(const UniPoly& p);

int count_distinct_real_roots(const UniPoly& p);

enum class Sign { negative = -1, zero = 0, positive = 1 };
std::string to_string(Sign s);

// Exact sign of expr(x, y) at a pair of real algebraic numbers: interval
// refinement decides nonzero values, zero is certified by a resultant test
// followed by a gcd over Q(x) when the resultant vanishes.
Sign certified_sign(const BiPoly& expr, const AlgebraicReal& x, const AlgebraicReal& y);

// num(a) / den(a) as an AlgebraicReal (den(a) != 0).
AlgebraicReal image(const AlgebraicReal& a, const UniPoly& num, const UniPoly& den = UniPoly::constant(1));

}  // namespace welsch
