#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "welsch/rat.hpp"
#include "welsch/unipoly.hpp"

namespace welsch {

using Exp2 = std::pair<int, int>;

// Sparse bivariate polynomial sum c_ij x^i y^j; zero coefficients are never stored.
template <class C>
class BiPolyT {
  public:
    using Terms = std::map<Exp2, C>;

    BiPolyT() = default;
    explicit BiPolyT(Terms t) {
        for (auto& [e, c] : t) add(e.first, e.second, c);
    }
    static BiPolyT constant(const C& c) {
        BiPolyT p;
        p.add(0, 0, c);
        return p;
    }
    static BiPolyT x() { return term(1, 1, 0); }
    static BiPolyT y() { return term(1, 0, 1); }
    static BiPolyT term(const C& c, int i, int j) {
        BiPolyT p;
        p.add(i, j, c);
        return p;
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    C coef(int i, int j) const {
        auto it = t_.find({i, j});
        return it == t_.end() ? C(0) : it->second;
    }
    void add(int i, int j, const C& c) {
        if (welsch::is_zero(c)) return;
        auto [it, fresh] = t_.emplace(Exp2{i, j}, c);
        if (!fresh) {
            it->second += c;
            if (welsch::is_zero(it->second)) t_.erase(it);
        }
    }
    int total_degree() const {
        int d = -1;
        for (auto& [e, c] : t_) d = std::max(d, e.first + e.second);
        return d;
    }
    int degree_x() const {
        int d = -1;
        for (auto& [e, c] : t_) d = std::max(d, e.first);
        return d;
    }
    int degree_y() const {
        int d = -1;
        for (auto& [e, c] : t_) d = std::max(d, e.second);
        return d;
    }

    C eval(const C& x, const C& y) const {
        C r(0);
        for (auto& [e, c] : t_) r += c * pow(x, e.first) * pow(y, e.second);
        return r;
    }
    BiPolyT dx() const {
        BiPolyT r;
        for (auto& [e, c] : t_)
            if (e.first > 0) r.add(e.first - 1, e.second, c * C(e.first));
        return r;
    }
    BiPolyT dy() const {
        BiPolyT r;
        for (auto& [e, c] : t_)
            if (e.second > 0) r.add(e.first, e.second - 1, c * C(e.second));
        return r;
    }

    BiPolyT operator-() const {
        BiPolyT r = *this;
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    BiPolyT& operator+=(const BiPolyT& o) {
        for (auto& [e, c] : o.t_) add(e.first, e.second, c);
        return *this;
    }
    BiPolyT& operator-=(const BiPolyT& o) {
        for (auto& [e, c] : o.t_) add(e.first, e.second, -c);
        return *this;
    }
    friend BiPolyT operator+(BiPolyT a, const BiPolyT& b) { return a += b; }
    friend BiPolyT operator-(BiPolyT a, const BiPolyT& b) { return a -= b; }
    friend BiPolyT operator*(const BiPolyT& a, const BiPolyT& b) {
        BiPolyT r;
        for (auto& [e, c] : a.t_)
            for (auto& [f, d] : b.t_) r.add(e.first + f.first, e.second + f.second, c * d);
        return r;
    }
    friend BiPolyT operator*(const C& s, const BiPolyT& a) {
        BiPolyT r;
        for (auto& [e, c] : a.t_) r.add(e.first, e.second, s * c);
        return r;
    }
    friend bool operator==(const BiPolyT& a, const BiPolyT& b) { return a.t_ == b.t_; }

  private:
    Terms t_;
};

using BiPoly = BiPolyT<Rat>;
using CBiPoly = BiPolyT<CRat>;

template <class C>
BiPolyT<C> pow(const BiPolyT<C>& p, int e) {
    BiPolyT<C> r = BiPolyT<C>::constant(C(1)), b = p;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * b;
        if (e > 1) b = b * b;
    }
    return r;
}

// A polynomial in one variable whose coefficients are UniPoly in another.
// Index i holds the coefficient of v^i.
using PolyPoly = std::vector<UniPoly>;

// View F(x, y) as a polynomial in y with coefficients in Q[x].
PolyPoly as_poly_in_y(const BiPoly& f);
// View F(x, y) as a polynomial in x with coefficients in Q[y].
PolyPoly as_poly_in_x(const BiPoly& f);
// Substitute x = a: a univariate polynomial in y.
UniPoly eval_x(const BiPoly& f, const Rat& a);
UniPoly eval_y(const BiPoly& f, const Rat& b);

std::string to_string(const BiPoly& f);

}  // namespace welsch
