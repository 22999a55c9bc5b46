#include "welsch/resultant.hpp"

#include <algorithm>

#include "welsch/errors.hpp"

namespace welsch {

Rat resultant(const UniPoly& p0, const UniPoly& q0) {
    if (p0.is_zero() || q0.is_zero()) throw ZeroInput("resultant of zero polynomial");
    UniPoly a = p0, b = q0;
    Rat res = 1;
    for (;;) {
        int m = a.degree(), n = b.degree();
        if (n == 0) return res * pow(b.lc(), m);
        UniPoly r = a % b;
        if (r.is_zero()) return 0;
        if ((m % 2 == 1) && (n % 2 == 1)) res = -res;
        res *= pow(b.lc(), m - r.degree());
        a = std::move(b);
        b = std::move(r);
    }
}

Rat sylvester_resultant(const Vec& p, const Vec& q) {
    int m = static_cast<int>(p.size()) - 1, n = static_cast<int>(q.size()) - 1;
    int N = m + n;
    if (N == 0) return 1;
    Mat s(N, Vec(N));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) s[i][i + k] = p[m - k];
    for (int j = 0; j < m; ++j)
        for (int k = 0; k <= n; ++k) s[n + j][j + k] = q[n - k];
    return det(std::move(s));
}

namespace {

void trim(PolyPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int max_degree(const PolyPoly& p) {
    int d = 0;
    for (auto& c : p) d = std::max(d, c.degree());
    return d;
}

Vec eval_at(const PolyPoly& p, const Rat& x) {
    Vec v;
    v.reserve(p.size());
    for (auto& c : p) v.push_back(c.eval(x));
    return v;
}

}  // namespace

UniPoly resultant(PolyPoly p, PolyPoly q) {
    trim(p);
    trim(q);
    if (p.empty() || q.empty()) throw ZeroInput("resultant of zero polynomial");
    int m = static_cast<int>(p.size()) - 1, n = static_cast<int>(q.size()) - 1;
    int bound = n * max_degree(p) + m * max_degree(q);
    std::vector<std::pair<Rat, Rat>> samples;
    for (int i = 0; static_cast<int>(samples.size()) < bound + 2; ++i) {
        Rat x = (i % 2 == 0) ? Rat(i / 2) : Rat(-(i + 1) / 2);
        samples.emplace_back(x, sylvester_resultant(eval_at(p, x), eval_at(q, x)));
    }
    return interpolate(samples, bound);
}

UniPoly resultant_y(const BiPoly& f, const BiPoly& g) { return resultant(as_poly_in_y(f), as_poly_in_y(g)); }
UniPoly resultant_x(const BiPoly& f, const BiPoly& g) { return resultant(as_poly_in_x(f), as_poly_in_x(g)); }

UniPoly resultant_with_derivative(const PolyPoly& p) {
    PolyPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    return resultant(p, d);
}

}  // namespace welsch
