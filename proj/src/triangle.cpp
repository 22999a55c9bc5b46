#include "welsch/triangle.hpp"

#include <stdexcept>

#include "welsch/errors.hpp"
#include "welsch/modgcd.hpp"
#include "welsch/resultant.hpp"

namespace welsch {

namespace {

Rat sigma(const TriangleFamily& fam) { return 4 * fam.c00 * fam.c02; }

UniPoly chebyshev(int k) {
    UniPoly a = UniPoly::constant(1), b = UniPoly::x();
    if (k == 0) return a;
    for (int n = 1; n < k; ++n) {
        UniPoly c = Rat(2) * UniPoly::x() * b - a;
        a = b;
        b = c;
    }
    return b;
}

UniPoly nth_derivative(UniPoly p, int n) {
    for (int i = 0; i < n; ++i) p = p.derivative();
    return p;
}

// An even polynomial in b as a polynomial in beta = b^2.
UniPoly even_to_beta(const UniPoly& p) {
    std::vector<Rat> c;
    for (int i = 0; i <= p.degree(); i += 2) c.push_back(p.coef(i));
    return UniPoly(c);
}

Rat factorial(int n) {
    Rat r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

PolyPoly as_x_poly(const std::vector<UniPoly>& coeffs) { return PolyPoly(coeffs.begin(), coeffs.end()); }

// D = P^2 - sigma has k-1 simple double roots and a squarefree quadratic cofactor
// over every field factor of Q[beta]/(m).
void certify(const TriangleFamily& fam, const UniPoly& m, const std::vector<UniPoly>& p) {
    const int k = fam.k;
    PolyPoly pp = as_x_poly(p);
    PolyPoly d = mul_mod(pp, pp, m);
    if (d.empty()) throw NonGenericCoefficients("P vanishes");
    d[0] = (d[0] - UniPoly::constant(sigma(fam))) % m;
    PolyPoly dd;
    for (size_t i = 1; i < d.size(); ++i) dd.push_back(d[i] * Rat(static_cast<long>(i)));
    for (auto& br : gcd_mod(m, d, dd)) {
        int deg = static_cast<int>(br.poly.size()) - 1;
        if (deg != k - 1) throw NonGenericCoefficients("D does not have k-1 double roots");
        if (deg == 0) continue;
        PolyPoly dg;
        for (size_t i = 1; i < br.poly.size(); ++i) dg.push_back(br.poly[i] * Rat(static_cast<long>(i)));
        for (auto& sq : gcd_mod(br.modulus, br.poly, dg))
            if (sq.poly.size() != 1) throw NonGenericCoefficients("coincident double roots");
        PolyPoly g2 = mul_mod(br.poly, br.poly, br.modulus);
        auto [q, r] = divmod_mod(d, g2, br.modulus);
        if (!r.empty() || q.size() != 3) throw NonGenericCoefficients("cofactor of the double roots is not quadratic");
        UniPoly disc = (q[1] * q[1] - Rat(4) * q[0] * q[2]) % br.modulus;
        if (gcd(disc, br.modulus).degree() > 0) throw NonGenericCoefficients("quadratic cofactor has a double root");
    }
}

std::vector<TriangleSolution> split_by_reality(const UniPoly& m, const std::vector<UniPoly>& coeffs) {
    std::vector<TriangleSolution> out;
    auto roots = isolate_real_roots(m);
    for (auto& r : roots) out.push_back({m, coeffs, r});
    for (int i = static_cast<int>(roots.size()); i < m.degree(); ++i) out.push_back({m, coeffs, std::nullopt});
    return out;
}

using XPoly = std::vector<BiPoly>;  // polynomial in x with coefficients in Q[u, v]

void trim(XPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

XPoly mul(const XPoly& a, const XPoly& b) {
    if (a.empty() || b.empty()) return {};
    XPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

XPoly prem(XPoly a, const XPoly& b) {
    trim(a);
    const BiPoly& lc = b.back();
    while (a.size() >= b.size()) {
        BiPoly la = a.back();
        size_t s = a.size() - b.size();
        for (auto& c : a) c = lc * c;
        for (size_t j = 0; j < b.size(); ++j) a[j + s] -= la * b[j];
        a.pop_back();
        trim(a);
    }
    return a;
}

UniPoly u_only(const BiPoly& f) {
    if (f.degree_y() > 0) throw std::logic_error("u_only: polynomial involves v");
    auto c = as_poly_in_y(f);
    return c.empty() ? UniPoly() : c[0];
}

// Divides out the largest power of v; v = c_k1 = 0 lies outside the family.
BiPoly strip_v(const BiPoly& f) {
    int m = f.degree_y();
    for (auto& [e, c] : f.terms()) m = std::min(m, e.second);
    if (m <= 0) return f;
    BiPoly r;
    for (auto& [e, c] : f.terms()) r.add(e.first, e.second - m, c);
    return r;
}

// g(u, v(u)) modulo m
UniPoly subst_v(const BiPoly& g, const UniPoly& v, const UniPoly& m) {
    UniPoly r;
    for (auto& [e, c] : g.terms()) r += (c * pow(UniPoly::x(), e.first) * pow(v, e.second)) % m;
    return r % m;
}

}  // namespace

std::vector<int> free_indices(const TriangleFamily& fam) {
    std::vector<int> out;
    if (fam.variant == TriangleVariant::part1) {
        for (int i = 2; i <= fam.k; ++i) out.push_back(i);
    } else {
        for (int i = 0; i <= fam.k; ++i)
            if (i != 1 && i != fam.k - 1) out.push_back(i);
    }
    return out;
}

void validate(const TriangleFamily& fam) {
    if (fam.k < 1) throw SchemaError("triangle: k must be positive");
    if (fam.c00 == 0 || fam.c02 == 0 || fam.c11 == 0) throw SchemaError("triangle: fixed coefficients must be nonzero");
    if (fam.variant == TriangleVariant::part1 && fam.c01 == 0) throw SchemaError("triangle: c01 must be nonzero");
    if (fam.variant == TriangleVariant::part2 && fam.k == 2)
        throw SchemaError("triangle: part2 with k = 2 asks c11 to be fixed and zero");
}

AlgebraicReal TriangleSolution::value(int i) const {
    if (!beta) throw std::logic_error("TriangleSolution::value: solution is not real");
    return image(*beta, coeffs.at(i));
}

std::vector<TriangleSolution> enumerate_rational_members(const TriangleFamily& fam) {
    validate(fam);
    const int k = fam.k;
    const Rat s2 = sigma(fam);
    UniPoly t = chebyshev(k);
    if (fam.variant == TriangleVariant::part2) {
        // the x^(k-1) coefficient of s T_k(a x + b) is s 2^(k-1) k a^(k-1) b, so b = 0;
        // then c11 = s a T_k'(0) needs T_k'(0) != 0, i.e. k odd
        if (k % 2 == 0) return {};
        Rat tp0 = t.derivative().coef(0);
        std::vector<UniPoly> c(k + 1);
        for (int i = 1; i <= k; ++i) {
            if (t.coef(i) == 0) continue;
            // s a^i = c11^i s^(1-i) / T_k'(0)^i with s^(1-i) = sigma^((1-i)/2), i odd
            Rat v = pow(fam.c11, i) * pow(Rat(1) / s2, (i - 1) / 2) / pow(tp0, i) * t.coef(i);
            c[i] = UniPoly::constant(v);
        }
        UniPoly m = UniPoly::x();
        certify(fam, m, c);
        return split_by_reality(m, c);
    }
    // part 1: P(0) = s T_k(b) = c01, P'(0) = s a T_k'(b) = c11, solutions indexed by beta = b^2
    UniPoly psi = even_to_beta(s2 * t * t - UniPoly::constant(fam.c01 * fam.c01));
    if (psi.coef(0) == 0 || !is_squarefree(psi))
        throw NonGenericCoefficients("triangle: elimination polynomial is not squarefree");
    psi = psi.monic();
    std::vector<UniPoly> c(k + 1);
    c[0] = UniPoly::constant(fam.c01);
    if (k >= 1) c[1] = UniPoly::constant(fam.c11);
    UniPoly tp = t.derivative();
    for (int i = 2; i <= k; ++i) {
        // c_i1 = c11^i c01^(1-i) T(b)^(i-1) T^(i)(b) / (i! T'(b)^i), even in b
        UniPoly num = pow(t, i - 1) * nth_derivative(t, i), den = factorial(i) * pow(tp, i);
        if ((i * (k - 1)) % 2) {
            num = num * UniPoly::x();
            den = den * UniPoly::x();
        }
        UniPoly inv;
        try {
            inv = inverse_mod(even_to_beta(den) % psi, psi);
        } catch (const ZeroInput&) {
            throw NonGenericCoefficients("triangle: T_k'(b) vanishes at a solution");
        }
        Rat scale = pow(fam.c11, i) / pow(fam.c01, i - 1);
        c[i] = (scale * even_to_beta(num) * inv) % psi;
    }
    certify(fam, psi, c);
    return split_by_reality(psi, c);
}

BiPoly node_polynomial(const TriangleFamily& fam, const TriangleSolution& sol) {
    PolyPoly p = as_x_poly(sol.coeffs);
    PolyPoly d = mul_mod(p, p, sol.modulus);
    BiPoly r = BiPoly::constant(-sigma(fam));
    for (size_t i = 0; i < d.size(); ++i)
        for (int e = 0; e <= d[i].degree(); ++e) r.add(e, static_cast<int>(i), d[i].coef(e));
    return r;
}

NodeCensus classify_double_roots(const UniPoly& d) {
    NodeCensus nc;
    UniPoly d2 = d.derivative().derivative();
    for (auto& rm : real_roots_with_multiplicity(d)) {
        if (rm.multiplicity == 1) continue;
        if (rm.multiplicity > 2) throw DegenerateDoubleRoot("root of D of order >= 3");
        (rm.root.sign_of(d2) < 0 ? nc.solitary : nc.non_solitary)++;
    }
    return nc;
}

std::vector<NodeCensus> classify_real_solutions(const TriangleFamily& fam, const std::vector<TriangleSolution>& sols) {
    std::vector<NodeCensus> out;
    for (auto& sol : sols) {
        if (!sol.real()) continue;
        BiPoly d = node_polynomial(fam, sol);
        if (auto b = sol.beta->rational_value()) {
            out.push_back(classify_double_roots(eval_x(d, *b)));
            continue;
        }
        BiPoly psi;
        for (int e = 0; e <= sol.modulus.degree(); ++e) psi.add(e, 0, sol.modulus.coef(e));
        UniPoly n = resultant_x(psi, d);
        NodeCensus nc;
        BiPoly dx = d.dy(), dxx = dx.dy();
        for (auto& x0 : isolate_real_roots(squarefree_part(n))) {
            if (certified_sign(d, *sol.beta, x0) != Sign::zero) continue;
            if (certified_sign(dx, *sol.beta, x0) != Sign::zero) continue;
            Sign s = certified_sign(dxx, *sol.beta, x0);
            if (s == Sign::zero) throw DegenerateDoubleRoot("root of D of order >= 3");
            (s == Sign::negative ? nc.solitary : nc.non_solitary)++;
        }
        out.push_back(nc);
    }
    return out;
}

OracleResult brute_force_oracle(const TriangleFamily& fam) {
    validate(fam);
    const int k = fam.k;
    if (k > 3) throw std::invalid_argument("brute_force_oracle: k must be at most 3");
    auto fr = free_indices(fam);
    OracleResult res;
    if (fr.empty()) {
        res.count = res.real_count = 1;
        res.real_solutions.push_back({});
        return res;
    }
    XPoly p(k + 1);
    p[1] = BiPoly::constant(fam.c11);
    if (fam.variant == TriangleVariant::part1) p[0] = BiPoly::constant(fam.c01);
    p[fr[0]] = BiPoly::x();
    if (fr.size() > 1) p[fr[1]] = BiPoly::y();
    XPoly d = mul(p, p);
    d[0] -= BiPoly::constant(sigma(fam));
    XPoly dp;
    for (int i = 1; i <= k; ++i) dp.push_back(Rat(i) * p[i]);
    // D has a double root at every root of P' (as P(r)^2 = sigma there)
    XPoly rem = prem(d, dp);

    if (fr.size() == 1) {
        UniPoly a = rem.empty() ? UniPoly() : u_only(rem[0]);
        if (a.is_zero()) throw NonGenericCoefficients("oracle: elimination polynomial vanishes");
        while (a.coef(0) == 0) a = exact_div(a, UniPoly::x());  // c_k1 = 0 is not in the family
        if (!is_squarefree(a)) throw NonGenericCoefficients("oracle: elimination polynomial is not squarefree");
        res.count = a.degree();
        for (auto& u : isolate_real_roots(a)) res.real_solutions.push_back({u});
        res.real_count = static_cast<int>(res.real_solutions.size());
        return res;
    }

    BiPoly A = strip_v(rem.size() > 0 ? rem[0] : BiPoly()), B = strip_v(rem.size() > 1 ? rem[1] : BiPoly());
    UniPoly r = resultant_y(A, B);
    if (r.is_zero()) throw NonGenericCoefficients("oracle: resultant vanishes");
    BiPoly disc = Rat(4) * p[2] * p[2] - Rat(12) * p[3] * p[1];
    for (auto& br : gcd_mod(squarefree_part(r).monic(), {as_poly_in_y(A), as_poly_in_y(B)})) {
        if (br.poly.empty()) throw NonGenericCoefficients("oracle: positive-dimensional solution set");
        // common roots v = 0 are outside the family
        while (br.poly.size() > 1 && is_zero(br.poly[0] % br.modulus)) br.poly.erase(br.poly.begin());
        int deg = static_cast<int>(br.poly.size()) - 1;
        if (deg == 0) continue;
        if (deg > 1) throw NonGenericCoefficients("oracle: projection does not separate solutions");
        UniPoly v = (-br.poly[0]) % br.modulus;
        // discard c_k1 = 0 and a repeated root of P'
        UniPoly keep = split_mod(br.modulus, v).second;
        if (keep.degree() <= 0) continue;
        keep = split_mod(keep, subst_v(disc, v % keep, keep)).second;
        if (keep.degree() <= 0) continue;
        if (gcd(keep, exact_div(r, keep)).degree() > 0)
            throw NonGenericCoefficients("oracle: elimination polynomial is not squarefree");
        res.count += keep.degree();
        for (auto& u : isolate_real_roots(keep)) res.real_solutions.push_back({u, image(u, v % keep)});
    }
    res.real_count = static_cast<int>(res.real_solutions.size());
    return res;
}

}  // namespace welsch
