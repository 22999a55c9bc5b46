#pragma once
#include <array>
#include <map>
#include <string>

#include "welsch/bipoly.hpp"
#include "welsch/rat.hpp"
#include "welsch/unipoly.hpp"

namespace welsch {

using Mono3 = std::array<int, 3>;  // exponents of x, y, z

// Homogeneous ternary form of fixed degree; zero coefficients are not stored.
template <class T>
class FormT {
  public:
    FormT() = default;
    explicit FormT(int degree) : d_(degree) {}

    int degree() const { return d_; }
    const std::map<Mono3, T>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    T coef(const Mono3& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? T() : it->second;
    }
    void add(const Mono3& m, const T& c) {
        if (welsch::is_zero(c)) return;
        auto [it, fresh] = t_.emplace(m, c);
        if (!fresh) {
            it->second = it->second + c;
            if (welsch::is_zero(it->second)) t_.erase(it);
        }
    }

    FormT derivative(int var) const {
        FormT r(d_ > 0 ? d_ - 1 : 0);
        for (auto& [m, c] : t_) {
            if (m[var] == 0) continue;
            Mono3 n = m;
            --n[var];
            r.add(n, c * Rat(m[var]));
        }
        return r;
    }

    // Substitute coordinates; works for any ring S that T multiplies into.
    template <class S>
    S eval(const std::array<S, 3>& p) const {
        S r{};
        for (auto& [m, c] : t_) {
            S term = as<S>(c);
            for (int v = 0; v < 3; ++v)
                for (int e = 0; e < m[v]; ++e) term = term * p[v];
            r = r + term;
        }
        return r;
    }

    friend FormT operator+(FormT a, const FormT& b) {
        for (auto& [m, c] : b.t_) a.add(m, c);
        return a;
    }
    friend FormT operator-(FormT a, const FormT& b) {
        for (auto& [m, c] : b.t_) a.add(m, T() - c);
        return a;
    }
    friend FormT operator*(const FormT& a, const FormT& b) {
        FormT r(a.d_ + b.d_);
        for (auto& [m, c] : a.t_)
            for (auto& [n, e] : b.t_) r.add({m[0] + n[0], m[1] + n[1], m[2] + n[2]}, c * e);
        return r;
    }
    friend FormT operator*(const T& s, const FormT& a) {
        FormT r(a.d_);
        for (auto& [m, c] : a.t_) r.add(m, s * c);
        return r;
    }
    friend bool operator==(const FormT& a, const FormT& b) { return a.d_ == b.d_ && a.t_ == b.t_; }

  private:
    template <class S>
    static S as(const T& c) {
        if constexpr (std::is_same_v<S, T>) return c;
        else return S(c);
    }
    int d_ = 0;
    std::map<Mono3, T> t_;
};

using Form = FormT<Rat>;
// A form whose coefficients are polynomials in a parameter lambda.
using LForm = FormT<UniPoly>;

// All degree-d monomials in a fixed order (x power descending, then y).
std::vector<Mono3> monomials(int d);

// z = 1 dehomogenisation and its inverse.
BiPoly dehomogenize(const Form& f);
Form homogenize(const BiPoly& f, int d);

LForm to_lform(const Form& f);
// f0 + lambda f1
LForm pencil(const Form& f0, const Form& f1);
Form eval_lambda(const LForm& f, const Rat& lambda);
int lambda_degree(const LForm& f);

// Hessian matrix of second partials.
template <class T>
std::array<std::array<FormT<T>, 3>, 3> hessian(const FormT<T>& f) {
    std::array<std::array<FormT<T>, 3>, 3> h;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) h[a][b] = f.derivative(a).derivative(b);
    return h;
}

template <class T>
FormT<T> det3(const std::array<std::array<FormT<T>, 3>, 3>& h) {
    return h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
           h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
}

std::string to_string(const Form& f);

}  // namespace welsch
