#include "welsch/arc.hpp"

#include <stdexcept>

#include "welsch/errors.hpp"
#include "welsch/resultant.hpp"

namespace welsch {

std::string to_string(NodeType t) {
    switch (t) {
        case NodeType::solitary: return "solitary";
        case NodeType::non_solitary: return "non_solitary";
        case NodeType::imaginary_pair: return "imaginary_pair";
        default: return "degenerate";
    }
}

namespace {

Series mul(const Series& a, const Series& b, size_t n) {
    Series r(n);
    for (size_t i = 0; i < a.size() && i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size() && i + j < n; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// s(phi(u)) with phi(0) = 0, truncated to n terms
Series compose(const Series& s, const Series& phi, size_t n) {
    Series r(n);
    for (size_t i = s.size(); i-- > 0;) {
        r = mul(r, phi, n);
        r[0] += s[i];
    }
    return r;
}

// Reparametrise so that `lead` becomes t; returns the other coordinate.
std::vector<CRat> to_graph(const std::vector<CRat>& lead, const std::vector<CRat>& other, int s) {
    size_t n = s + 1;
    Series L(n), O(n);
    for (int i = 0; i < s; ++i) {
        L[i + 1] = lead[i];
        O[i + 1] = other[i];
    }
    CRat inv = CRat(1) / lead[0];
    Series phi(n);
    if (n > 1) phi[1] = inv;
    for (int it = 0; it < s; ++it) {
        Series e = compose(L, phi, n);
        if (n > 1) e[1] -= CRat(1);
        for (size_t i = 0; i < n; ++i) phi[i] -= e[i] * inv;
    }
    Series r = compose(O, phi, n);
    return std::vector<CRat>(r.begin() + 1, r.end());
}

Series coord_series(const CRat& c, const std::vector<CRat>& v) {
    Series s(v.size() + 1);
    s[0] = c;
    for (size_t i = 0; i < v.size(); ++i) s[i + 1] = v[i];
    return s;
}

}  // namespace

CBiPoly to_complex(const BiPoly& f) {
    CBiPoly g;
    for (auto& [e, c] : f.terms()) g.add(e.first, e.second, CRat(c));
    return g;
}

Series Arc::x_series() const { return coord_series(cx, x); }
Series Arc::y_series() const { return coord_series(cy, y); }

Arc make_arc(const CRat& cx, const CRat& cy, std::vector<CRat> x, std::vector<CRat> y, int order) {
    if (order < 1) throw std::invalid_argument("make_arc: order must be >= 1");
    x.resize(order);
    y.resize(order);
    Arc a;
    a.cx = cx;
    a.cy = cy;
    a.order = order;
    if (!x[0].is_zero()) {
        a.y = to_graph(x, y, order);
        a.x.assign(order, CRat());
        a.x[0] = 1;
    } else if (!y[0].is_zero()) {
        a.x = to_graph(y, x, order);
        a.y.assign(order, CRat());
        a.y[0] = 1;
    } else {
        throw NotSmooth("arc has vanishing linear part");
    }
    bool real = cx.is_real() && cy.is_real();
    for (auto& c : a.x) real = real && c.is_real();
    for (auto& c : a.y) real = real && c.is_real();
    a.reality = real ? Reality::real : Reality::imaginary;
    return a;
}

Arc make_real_arc(const Rat& cx, const Rat& cy, const std::vector<Rat>& x, const std::vector<Rat>& y, int order) {
    std::vector<CRat> cxs(x.begin(), x.end()), cys(y.begin(), y.end());
    return make_arc(cx, cy, cxs, cys, order);
}

Arc conjugate_arc(const Arc& a) {
    Arc b = a;
    b.cx = a.cx.conj();
    b.cy = a.cy.conj();
    for (auto& c : b.x) c = c.conj();
    for (auto& c : b.y) c = c.conj();
    return b;
}

std::vector<CRat> jet_values(const CBiPoly& f, const Arc& a, int n) {
    Series xs = a.x_series(), ys = a.y_series();
    xs.resize(std::max<size_t>(xs.size(), n));
    ys.resize(std::max<size_t>(ys.size(), n));
    int dx = std::max(f.degree_x(), 0), dy = std::max(f.degree_y(), 0);
    std::vector<Series> px{Series{CRat(1)}}, py{Series{CRat(1)}};
    for (int i = 1; i <= dx; ++i) px.push_back(mul(px.back(), xs, n));
    for (int j = 1; j <= dy; ++j) py.push_back(mul(py.back(), ys, n));
    std::vector<CRat> g(n);
    for (auto& [e, c] : f.terms()) {
        Series m = mul(px[e.first], py[e.second], n);
        for (int i = 0; i < n && i < static_cast<int>(m.size()); ++i) g[i] += c * m[i];
    }
    return g;
}

TangencyOrder tangency_order(const CBiPoly& f, const Arc& a) {
    if (f.is_zero()) throw std::invalid_argument("tangency_order: zero polynomial");
    auto g = jet_values(f, a, a.order + 1);
    for (int i = 0; i <= a.order; ++i)
        if (!g[i].is_zero()) return {i, false};
    return {a.order + 1, true};
}

TangencyOrder tangency_order(const BiPoly& f, const Arc& a) { return tangency_order(to_complex(f), a); }

std::vector<Exp2> affine_monomials(int d) {
    std::vector<Exp2> out;
    for (int t = 0; t <= d; ++t)
        for (int i = t; i >= 0; --i) out.push_back({i, t - i});
    return out;
}

JetConditions jet_conditions(const Arc& a, int k, int d) {
    if (k < 1 || k > a.order) throw std::invalid_argument("jet_conditions: need 1 <= k <= arc order");
    JetConditions jc;
    jc.count = k;
    bool imag = a.reality == Reality::imaginary;
    std::vector<Functional> re(k), im(k);
    for (auto& m : affine_monomials(d)) {
        auto v = jet_values(CBiPoly::term(CRat(1), m.first, m.second), a, k);
        for (int n = 0; n < k; ++n) {
            if (sgn(v[n].re) != 0) re[n][m] = v[n].re;
            if (sgn(v[n].im) != 0) im[n][m] = v[n].im;
        }
    }
    for (int n = 0; n < k; ++n) {
        jc.functionals.push_back(re[n]);
        if (imag) jc.functionals.push_back(im[n]);
    }
    return jc;
}

Rat apply_functional(const Functional& f, const BiPoly& curve) {
    Rat r = 0;
    for (auto& [m, c] : f) r += c * curve.coef(m.first, m.second);
    return r;
}

BiPoly implicitize(const UniPoly& xt, const UniPoly& yt) {
    int bound = xt.degree();  // degree of F in y
    PolyPoly px;
    for (int i = 0; i <= xt.degree(); ++i) px.push_back(UniPoly::constant(xt.coef(i)));
    px[0] = px[0] - UniPoly::x();
    std::vector<UniPoly> slices;
    std::vector<Rat> ys;
    for (int k = 0; k <= bound + 1; ++k) {
        Rat y0 = k;
        PolyPoly py;
        for (int i = 0; i <= yt.degree(); ++i) py.push_back(UniPoly::constant(yt.coef(i)));
        py[0] = py[0] - UniPoly::constant(y0);
        slices.push_back(resultant(px, py));
        ys.push_back(y0);
    }
    int dx = 0;
    for (auto& s : slices) dx = std::max(dx, s.degree());
    BiPoly f;
    for (int i = 0; i <= dx; ++i) {
        std::vector<std::pair<Rat, Rat>> samples;
        for (size_t k = 0; k < slices.size(); ++k) samples.emplace_back(ys[k], slices[k].coef(i));
        UniPoly c = interpolate(samples, bound);
        for (int j = 0; j <= c.degree(); ++j) f.add(i, j, c.coef(j));
    }
    return f;
}

EvenOrderGerm even_order_family(int s, const Rat& eps) {
    if (s < 1) throw std::invalid_argument("even_order_family: s must be >= 1");
    EvenOrderGerm g;
    g.arc = make_real_arc(0, 0, {1}, {0}, 2 * s);
    g.xt = UniPoly({0, eps, 1, 1});
    g.yt = UniPoly::monomial(1, 2 * s);
    g.implicit = implicitize(g.xt, g.yt);
    // t = +-sqrt(-eps) both land on (-eps, (-eps)^s); at eps = 0 this is the origin
    g.node_x = -eps;
    g.node_y = pow(Rat(-eps), s);
    const BiPoly& F = g.implicit;
    if (sgn(F.eval(g.node_x, g.node_y)) != 0 || sgn(F.dx().eval(g.node_x, g.node_y)) != 0 ||
        sgn(F.dy().eval(g.node_x, g.node_y)) != 0)
        throw std::logic_error("even_order_family: expected double point is not singular");
    Rat fxx = F.dx().dx().eval(g.node_x, g.node_y);
    Rat fyy = F.dy().dy().eval(g.node_x, g.node_y);
    Rat fxy = F.dx().dy().eval(g.node_x, g.node_y);
    g.hessian_det = fxx * fyy - fxy * fxy;
    g.type = node_type_from_hessian_sign(sgn(g.hessian_det));
    return g;
}

}  // namespace welsch
