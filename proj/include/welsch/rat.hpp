#pragma once
#include <gmpxx.h>

#include <string>

namespace welsch {

using Int = mpz_class;
using Rat = mpq_class;

// Accepts "p", "p/q", with optional sign. Throws SchemaError on junk or q = 0.
Rat parse_rat(const std::string& s);
// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);

inline int sgn(const Rat& r) { return ::sgn(r); }

// n/d in canonical form (the raw mpq_class(n, d) constructor does not reduce).
inline Rat frac(long n, long d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

// Complex rational a + b i.
struct CRat {
    Rat re, im;

    CRat() = default;
    CRat(Rat r) : re(std::move(r)) {}
    CRat(int r) : re(r) {}
    CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    CRat conj() const { return {re, -im}; }
    Rat norm() const { return re * re + im * im; }

    CRat operator-() const { return {-re, -im}; }
    CRat& operator+=(const CRat& o) { re += o.re; im += o.im; return *this; }
    CRat& operator-=(const CRat& o) { re -= o.re; im -= o.im; return *this; }
    CRat& operator*=(const CRat& o) {
        Rat r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    CRat& operator/=(const CRat& o);
    friend CRat operator+(CRat a, const CRat& b) { return a += b; }
    friend CRat operator-(CRat a, const CRat& b) { return a -= b; }
    friend CRat operator*(CRat a, const CRat& b) { return a *= b; }
    friend CRat operator/(CRat a, const CRat& b) { return a /= b; }
    friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }
};

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_zero(const CRat& c) { return c.is_zero(); }

CRat pow(const CRat& c, int e);
Rat pow(const Rat& r, int e);

std::string to_string(const CRat& c);

}  // namespace welsch
