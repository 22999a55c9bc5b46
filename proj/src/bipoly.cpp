#include "welsch/bipoly.hpp"

#include <sstream>

namespace welsch {

PolyPoly as_poly_in_y(const BiPoly& f) {
    PolyPoly out(std::max(f.degree_y() + 1, 0));
    for (auto& [e, c] : f.terms()) out[e.second] += UniPoly::monomial(c, e.first);
    return out;
}

PolyPoly as_poly_in_x(const BiPoly& f) {
    PolyPoly out(std::max(f.degree_x() + 1, 0));
    for (auto& [e, c] : f.terms()) out[e.first] += UniPoly::monomial(c, e.second);
    return out;
}

UniPoly eval_x(const BiPoly& f, const Rat& a) {
    UniPoly r;
    for (auto& [e, c] : f.terms()) r += UniPoly::monomial(c * pow(a, e.first), e.second);
    return r;
}

UniPoly eval_y(const BiPoly& f, const Rat& b) {
    UniPoly r;
    for (auto& [e, c] : f.terms()) r += UniPoly::monomial(c * pow(b, e.second), e.first);
    return r;
}

std::string to_string(const BiPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        auto [e, c] = *it;
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        Rat a = abs(c);
        bool mono = e.first + e.second > 0;
        if (!mono || a != 1) os << to_string(a);
        if (e.first > 0) os << "x" << (e.first > 1 ? "^" + std::to_string(e.first) : "");
        if (e.second > 0) os << "y" << (e.second > 1 ? "^" + std::to_string(e.second) : "");
        first = false;
    }
    return os.str();
}

}  // namespace welsch
