#include "welsch/rat.hpp"

#include <cctype>

#include "welsch/errors.hpp"

namespace welsch {

namespace {

bool is_integer_text(const std::string& s) {
    size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+')
        throw SchemaError("not a rational number: \"" + text + "\"");
    if (num[0] == '+') num.erase(0, 1);
    Int n(num), d(den);
    if (d == 0) throw SchemaError("zero denominator: \"" + text + "\"");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

CRat& CRat::operator/=(const CRat& o) {
    Rat n = o.norm();
    Rat r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = r;
    return *this;
}

CRat pow(const CRat& c, int e) {
    CRat r(1), b = c;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

Rat pow(const Rat& q, int e) {
    Rat r(1), b = q;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

std::string to_string(const CRat& c) {
    if (c.is_real()) return to_string(c.re);
    return to_string(c.re) + (sgn(c.im) < 0 ? "-" : "+") + to_string(abs(c.im)) + "i";
}

}  // namespace welsch
