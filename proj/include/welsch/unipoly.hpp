#pragma once
#include <string>
#include <utility>
#include <vector>

#include "welsch/rat.hpp"

namespace welsch {

// Dense univariate polynomial over Q, coefficients low degree to high.
// The coefficient vector never ends in a zero (the zero polynomial is empty).
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);
    UniPoly(std::initializer_list<Rat> coeffs) : UniPoly(std::vector<Rat>(coeffs)) {}

    static UniPoly constant(const Rat& c);
    static UniPoly monomial(const Rat& c, int degree);
    static UniPoly x() { return monomial(1, 1); }
    // (x - r)
    static UniPoly linear_root(const Rat& r) { return UniPoly({-r, 1}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coef(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rat(0); }
    const Rat& lc() const { return c_.back(); }

    Rat eval(const Rat& x) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    // Scaled to coprime integer coefficients with positive leading coefficient.
    UniPoly primitive() const;
    // Scaled to coprime integers, sign preserved (positive factor only).
    UniPoly positive_primitive() const;
    // p(x) -> p(a x + b)
    UniPoly compose_linear(const Rat& a, const Rat& b) const;
    UniPoly compose(const UniPoly& q) const;
    // x^deg p(1/x)
    UniPoly reversed() const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const Rat& s);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const Rat& s) { return a *= s; }
    friend UniPoly operator*(const Rat& s, UniPoly a) { return a *= s; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    std::string str(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Rat> c_;
};

UniPoly pow(const UniPoly& p, int e);

inline bool is_zero(const UniPoly& p) { return p.is_zero(); }

// Euclidean division a = q b + r with deg r < deg b. Throws ZeroInput on b = 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
// Exact quotient; throws std::logic_error if b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

// Monic gcd (zero only if both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
// g = s a + t b with g monic.
UniPoly ext_gcd(const UniPoly& a, const UniPoly& b, UniPoly& s, UniPoly& t);
// Inverse of a modulo m; throws ZeroInput when gcd(a, m) != 1.
UniPoly inverse_mod(const UniPoly& a, const UniPoly& m);

UniPoly squarefree_part(const UniPoly& p);
bool is_squarefree(const UniPoly& p);
// Yun: p = lc * prod f_i^i, returned as (f_i, i) with deg f_i > 0.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);
// Largest e with f^e | p (f nonconstant, p nonzero).
int multiplicity(const UniPoly& p, const UniPoly& f);

// Unique polynomial of degree <= bound through the first bound + 1 samples;
// remaining samples must agree, else InconsistentSamples.
UniPoly interpolate(const std::vector<std::pair<Rat, Rat>>& samples, int bound);

}  // namespace welsch
