#include "welsch/form.hpp"

#include <sstream>

namespace welsch {

std::vector<Mono3> monomials(int d) {
    std::vector<Mono3> out;
    for (int i = d; i >= 0; --i)
        for (int j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
    return out;
}

BiPoly dehomogenize(const Form& f) {
    BiPoly r;
    for (auto& [m, c] : f.terms()) r.add(m[0], m[1], c);
    return r;
}

Form homogenize(const BiPoly& f, int d) {
    Form r(d);
    for (auto& [e, c] : f.terms()) r.add({e.first, e.second, d - e.first - e.second}, c);
    return r;
}

LForm to_lform(const Form& f) {
    LForm r(f.degree());
    for (auto& [m, c] : f.terms()) r.add(m, UniPoly::constant(c));
    return r;
}

LForm pencil(const Form& f0, const Form& f1) {
    LForm r(f0.degree());
    for (auto& [m, c] : f0.terms()) r.add(m, UniPoly::constant(c));
    for (auto& [m, c] : f1.terms()) r.add(m, UniPoly::monomial(c, 1));
    return r;
}

Form eval_lambda(const LForm& f, const Rat& lambda) {
    Form r(f.degree());
    for (auto& [m, c] : f.terms()) r.add(m, c.eval(lambda));
    return r;
}

int lambda_degree(const LForm& f) {
    int d = 0;
    for (auto& [m, c] : f.terms()) d = std::max(d, c.degree());
    return d;
}

std::string to_string(const Form& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        auto& [m, c] = *it;
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        Rat a = abs(c);
        if (a != 1 || m[0] + m[1] + m[2] == 0) os << to_string(a);
        const char* v = "xyz";
        for (int k = 0; k < 3; ++k)
            if (m[k] > 0) os << v[k] << (m[k] > 1 ? "^" + std::to_string(m[k]) : "");
        first = false;
    }
    return os.str();
}

}  // namespace welsch
