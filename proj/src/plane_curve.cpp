#include "welsch/plane_curve.hpp"

#include <stdexcept>

#include "welsch/errors.hpp"
#include "welsch/linalg.hpp"
#include "welsch/modgcd.hpp"
#include "welsch/resultant.hpp"

namespace welsch {

namespace {

using P3 = std::array<UniPoly, 3>;

const std::array<Mono3, 6> kQuadratic = {{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}};

UniPoly at(const LForm& f, const P3& p) { return f.eval<UniPoly>(p); }

P3 constant_point(const std::array<Rat, 3>& p) {
    return {UniPoly::constant(p[0]), UniPoly::constant(p[1]), UniPoly::constant(p[2])};
}

// A common positive rational multiple with integer, jointly coprime coefficients.
template <size_t N>
std::array<UniPoly, N> integral_scale(const std::array<UniPoly, N>& v) {
    Int den = 1, num = 0;
    for (auto& p : v)
        for (auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    for (auto& p : v)
        for (auto& c : p.coeffs()) {
            Int t = c.get_num() * (den / c.get_den());
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.get_mpz_t());
        }
    if (num == 0) return v;
    Rat s(den, num);
    s.canonicalize();
    std::array<UniPoly, N> out;
    for (size_t i = 0; i < N; ++i) out[i] = s * v[i];
    return out;
}

Rat sample_point(int k) { return k % 2 ? Rat((k + 1) / 2) : Rat(-(k / 2)); }

P3 reduce(const P3& p, const UniPoly& m) { return {p[0] % m, p[1] % m, p[2] % m}; }

char chart_of(const AlgebraicReal& u, const P3& p) {
    if (u.sign_of(p[2]) != 0) return 'z';
    return u.sign_of(p[1]) != 0 ? 'y' : 'x';
}

std::pair<AlgebraicReal, AlgebraicReal> locate(const AlgebraicReal& u, const P3& p, char chart) {
    const AlgebraicReal zero = AlgebraicReal::rational(0);
    if (chart == 'z') return {image(u, p[0], p[2]), image(u, p[1], p[2])};
    if (chart == 'y') return {image(u, p[0], p[1]), zero};
    return {zero, zero};
}

SingularPoint real_point(const LForm& f, const UniPoly& m, const P3& p, const AlgebraicReal& u, bool with_location = true) {
    SingularPoint sp;
    sp.modulus = m;
    sp.coords = p;
    sp.u = u;
    sp.info.type = node_type_from_hessian_sign(u.sign_of(hessian_e2(f, p) % m));
    sp.info.chart = chart_of(u, p);
    if (with_location) sp.info.location = locate(u, p, sp.info.chart);
    return sp;
}

// f(u - c y, y)
BiPoly shear(const BiPoly& f, const Rat& c) {
    BiPoly s = BiPoly::x() - c * BiPoly::y();
    BiPoly r;
    for (auto& [e, a] : f.terms()) r += a * pow(s, e.first) * pow(BiPoly::y(), e.second);
    return r;
}

// Squarefree part in y of a monic fibre polynomial, split over the branch.
std::vector<ModBranch> squarefree_fibres(const ModBranch& br) {
    if (br.poly.size() <= 2) return {br};
    PolyPoly d;
    for (size_t i = 1; i < br.poly.size(); ++i) d.push_back(br.poly[i] * Rat(static_cast<long>(i)));
    std::vector<ModBranch> out;
    for (auto& g : gcd_mod(br.modulus, br.poly, d)) {
        PolyPoly q = divmod_mod(br.poly, g.poly, g.modulus).first;
        out.push_back({g.modulus, reduce_mod(q, g.modulus)});
    }
    return out;
}

struct RawPoint {
    UniPoly modulus;
    P3 coords;
};

// Singular points with z = 1: project along a sheared direction until every
// fibre over a root of the eliminant holds at most one point.
std::vector<RawPoint> affine_chart(const LForm& f) {
    std::vector<BiPoly> g;
    for (int a = 0; a < 3; ++a) {
        BiPoly d = dehomogenize(eval_lambda(f.derivative(a), 0));
        if (d.is_zero()) continue;
        if (d.total_degree() == 0) return {};
        g.push_back(d);
    }
    if (g.size() < 2) throw PositiveDimensionalSingularLocus("singular locus contains a curve");
    for (int attempt = 0; attempt < 16; ++attempt) {
        Rat c = sample_point(attempt);
        std::vector<BiPoly> h;
        for (auto& gi : g) h.push_back(shear(gi, c));
        UniPoly r;
        int nonzero = 0;
        for (size_t i = 0; i < h.size(); ++i)
            for (size_t j = i + 1; j < h.size(); ++j) {
                UniPoly res = (h[i].degree_y() <= 0 && h[j].degree_y() <= 0)
                                  ? gcd(as_poly_in_y(h[i])[0], as_poly_in_y(h[j])[0])
                                  : resultant_y(h[i], h[j]);
                if (res.is_zero()) continue;
                ++nonzero;
                r = gcd(r, res);
            }
        if (nonzero == 0) throw PositiveDimensionalSingularLocus("partials share a common factor");
        if (r.degree() <= 0) return {};
        UniPoly m = squarefree_part(r).monic();
        std::vector<PolyPoly> ps;
        for (auto& hi : h) ps.push_back(as_poly_in_y(hi));
        std::vector<RawPoint> out;
        bool separated = true;
        for (auto& br : gcd_mod(m, ps)) {
            if (br.poly.empty()) throw PositiveDimensionalSingularLocus("singular locus contains a line");
            for (auto& fibre : squarefree_fibres(br)) {
                int deg = static_cast<int>(fibre.poly.size()) - 1;
                if (deg == 0) continue;
                if (deg >= 2) {
                    separated = false;
                    break;
                }
                UniPoly y = (-fibre.poly[0]) % fibre.modulus;
                UniPoly x = (UniPoly::x() - c * y) % fibre.modulus;
                out.push_back({fibre.modulus, {x, y, UniPoly::constant(1)}});
            }
            if (!separated) break;
        }
        if (separated) return out;
    }
    throw std::logic_error("affine_chart: no separating projection");
}

std::vector<RawPoint> line_at_infinity(const LForm& f) {
    std::vector<RawPoint> out;
    P3 q = {UniPoly::x(), UniPoly::constant(1), UniPoly()};
    UniPoly g;
    for (int a = 0; a < 3; ++a) g = gcd(g, at(f.derivative(a), q));
    if (g.is_zero()) throw PositiveDimensionalSingularLocus("the line at infinity is singular");
    if (g.degree() >= 1) {
        UniPoly m = squarefree_part(g).monic();
        out.push_back({m, reduce(q, m)});
    }
    P3 e = constant_point({1, 0, 0});
    bool singular = true;
    for (int a = 0; a < 3; ++a) singular = singular && at(f.derivative(a), e).is_zero();
    if (singular) out.push_back({UniPoly::x(), e});
    return out;
}

std::vector<SingularPoint> realize(const LForm& f, const std::vector<RawPoint>& raw) {
    std::vector<SingularPoint> out;
    for (auto& r : raw) {
        auto roots = isolate_real_roots(r.modulus);
        for (auto& u : roots) out.push_back(real_point(f, r.modulus, r.coords, u));
        int pairs = (r.modulus.degree() - static_cast<int>(roots.size())) / 2;
        for (int i = 0; i < pairs; ++i) {
            SingularPoint sp;
            sp.modulus = r.modulus;
            sp.coords = r.coords;
            sp.info.type = NodeType::imaginary_pair;
            sp.info.chart = !r.coords[2].is_zero() ? 'z' : (!r.coords[1].is_zero() ? 'y' : 'x');
            out.push_back(sp);
        }
    }
    return out;
}

std::vector<SingularPoint> conic_over_extension(const LForm& f, const AlgebraicReal& l) {
    auto h = hessian(f);
    std::array<std::array<UniPoly, 3>, 3> m;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) m[a][b] = h[a][b].coef({0, 0, 0});
    auto cof = [&](int r, int c) {
        int r0 = (r + 1) % 3, r1 = (r + 2) % 3, c0 = (c + 1) % 3, c1 = (c + 2) % 3;
        return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    };
    UniPoly d = m[0][0] * cof(0, 0) + m[0][1] * cof(0, 1) + m[0][2] * cof(0, 2);
    if (l.sign_of(d) != 0) return {};
    for (int c = 0; c < 3; ++c) {
        P3 p = {cof(c, 0), cof(c, 1), cof(c, 2)};
        bool nonzero = false;
        for (auto& x : p) nonzero = nonzero || l.sign_of(x) != 0;
        if (nonzero) return {real_point(f, l.poly(), reduce(p, l.poly()), l)};
    }
    throw PositiveDimensionalSingularLocus("double line");
}

std::string degenerate_kind(const LForm& f, const SingularPoint& sp) {
    const AlgebraicReal& u = *sp.u;
    const UniPoly& m = sp.modulus;
    const P3& p = sp.coords;
    auto h = hessian(f);
    std::optional<P3> line;
    for (int a = 0; a < 3 && !line; ++a) {
        P3 row = {at(h[a][0], p) % m, at(h[a][1], p) % m, at(h[a][2], p) % m};
        for (auto& e : row)
            if (u.sign_of(e) != 0) line = row;
    }
    if (!line) return "reducible";  // triple point: three concurrent lines
    const P3& l = *line;
    std::array<P3, 3> cands = {{{l[1], -l[0], UniPoly()}, {l[2], UniPoly(), -l[0]}, {UniPoly(), l[2], -l[1]}}};
    for (auto& r : cands) {
        P3 cross = {p[1] * r[2] - p[2] * r[1], p[2] * r[0] - p[0] * r[2], p[0] * r[1] - p[1] * r[0]};
        bool independent = false;
        for (auto& e : cross) independent = independent || u.sign_of(e % m) != 0;
        if (!independent) continue;
        for (int t = 1; t <= 4; ++t) {
            P3 q = {p[0] + Rat(t) * r[0], p[1] + Rat(t) * r[1], p[2] + Rat(t) * r[2]};
            if (u.sign_of(at(f, q) % m) != 0) return "cusp";
        }
        return "reducible";  // the tangent line is a component
    }
    throw std::logic_error("degenerate_kind: tangent line not found");
}

}  // namespace

PlaneCurve::PlaneCurve(const Form& f) : f_(to_lform(f)) {
    if (f.is_zero()) throw ZeroInput("PlaneCurve: zero coefficient vector");
    if (f.degree() < 1 || f.degree() > 3) throw SchemaError("PlaneCurve: degree must be 1, 2 or 3");
    for (auto& [m, c] : f.terms())
        if (m[0] + m[1] + m[2] != f.degree()) throw SchemaError("PlaneCurve: monomial degree mismatch");
}

PlaneCurve::PlaneCurve(const LForm& f, const AlgebraicReal& lambda) {
    if (f.degree() < 1 || f.degree() > 3) throw SchemaError("PlaneCurve: degree must be 1, 2 or 3");
    for (auto& [m, c] : f.terms())
        if (m[0] + m[1] + m[2] != f.degree()) throw SchemaError("PlaneCurve: monomial degree mismatch");
    if (auto r = lambda.rational_value()) {
        f_ = to_lform(eval_lambda(f, *r));
    } else {
        f_ = LForm(f.degree());
        for (auto& [m, c] : f.terms()) f_.add(m, c % lambda.poly());
        lambda_ = lambda;
    }
    bool nonzero = false;
    for (auto& [m, c] : f_.terms()) nonzero = nonzero || sign_at(c) != 0;
    if (!nonzero) throw ZeroInput("PlaneCurve: zero coefficient vector");
}

PlaneCurve PlaneCurve::affine(const BiPoly& f) { return PlaneCurve(homogenize(f, f.total_degree())); }

Form PlaneCurve::rational_form() const {
    if (lambda_) throw std::logic_error("rational_form: coefficients are irrational");
    return eval_lambda(f_, 0);
}

int PlaneCurve::sign_at(const UniPoly& p) const {
    if (lambda_) return lambda_->sign_of(p);
    return sgn(p.coef(0));
}

UniPoly hessian_e2(const LForm& f, const P3& p) {
    auto h = hessian(f);
    UniPoly v[3][3];
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) v[a][b] = at(h[a][b], p);
    return v[0][0] * v[1][1] - v[0][1] * v[0][1] + v[0][0] * v[2][2] - v[0][2] * v[0][2] + v[1][1] * v[2][2] -
           v[1][2] * v[1][2];
}

CubicFamily::CubicFamily(const LForm& f) : f_(f) {
    if (f.degree() != 3) throw std::invalid_argument("CubicFamily: degree must be 3");
    LForm j = det3(hessian(f));
    std::array<LForm, 6> rows = {f.derivative(0), f.derivative(1), f.derivative(2),
                                 j.derivative(0), j.derivative(1), j.derivative(2)};
    std::array<std::array<UniPoly, 6>, 6> m;
    int total = 0, lowest = 1 << 20;
    for (int r = 0; r < 6; ++r) {
        for (int c = 0; c < 6; ++c) m[r][c] = rows[r].coef(kQuadratic[c]);
        int d = std::max(lambda_degree(rows[r]), 0);
        total += d;
        lowest = std::min(lowest, d);
    }
    std::vector<std::pair<Rat, Rat>> det_samples;
    std::array<std::array<std::vector<std::pair<Rat, Rat>>, 6>, 6> adj_samples;
    for (int k = 0; k < total + 2; ++k) {
        Rat l = sample_point(k);
        Mat a(6, Vec(6));
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 6; ++c) a[r][c] = m[r][c].eval(l);
        Rat d = det(a);
        det_samples.push_back({l, d});
        Mat inv = inverse(a);
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 6; ++c) {
                Rat v;
                if (!inv.empty()) {
                    v = d * inv[r][c];
                } else {
                    Mat minor;
                    for (int i = 0; i < 6; ++i) {
                        if (i == c) continue;
                        Vec row;
                        for (int jj = 0; jj < 6; ++jj)
                            if (jj != r) row.push_back(a[i][jj]);
                        minor.push_back(row);
                    }
                    v = det(minor);
                    if ((r + c) % 2) v = -v;
                }
                adj_samples[r][c].push_back({l, v});
            }
    }
    disc_ = interpolate(det_samples, total);
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) adj_[r][c] = interpolate(adj_samples[r][c], total - lowest);
}

std::optional<SingularPoint> CubicFamily::singular_point(const AlgebraicReal& l, bool with_location) const {
    const UniPoly& m = l.poly();
    std::optional<std::array<UniPoly, 6>> v;
    for (int c = 0; c < 6 && !v; ++c)
        for (int r = 0; r < 6; ++r)
            if (l.sign_of(adj_[r][c]) != 0) {
                std::array<UniPoly, 6> col;
                for (int i = 0; i < 6; ++i) col[i] = adj_[i][c];
                v = col;
                break;
            }
    if (!v) return std::nullopt;
    auto w = integral_scale(*v);
    // the kernel vector is (X^2, Y^2, Z^2, XY, XZ, YZ) up to scale
    std::array<UniPoly, 6> minors = {w[0] * w[1] - w[3] * w[3], w[0] * w[2] - w[4] * w[4],
                                     w[1] * w[2] - w[5] * w[5], w[0] * w[5] - w[3] * w[4],
                                     w[1] * w[4] - w[3] * w[5], w[2] * w[3] - w[4] * w[5]};
    for (auto& e : minors)
        if (l.sign_of(e % m) != 0) throw std::logic_error("CubicFamily: kernel is not a Veronese point");
    P3 p = l.sign_of(w[2]) != 0 ? P3{w[4], w[5], w[2]}
                                : (l.sign_of(w[1]) != 0 ? P3{w[3], w[1], w[5]} : P3{w[0], w[3], w[4]});
    // rows F_x, F_y, F_z against the Veronese vector of p are the gradient at p,
    // and M adj(M) = det(M) I, so p is singular without further checks
    return real_point(f_, m, p, l, with_location);
}

std::vector<SingularPoint> singular_points(const PlaneCurve& c) {
    const LForm& f = c.coeffs();
    if (c.is_rational()) {
        std::vector<RawPoint> raw = affine_chart(f);
        for (auto& r : line_at_infinity(f)) raw.push_back(r);
        return realize(f, raw);
    }
    const AlgebraicReal& l = *c.lambda();
    if (c.degree() == 1) return {};
    if (c.degree() == 2) return conic_over_extension(f, l);
    CubicFamily fam(f);
    if (l.sign_of(fam.discriminant()) != 0) return {};
    auto sp = fam.singular_point(l);
    if (!sp) throw NonGenericConfiguration("several singular points over an algebraic extension");
    return {*sp};
}

NodeType classify_node(const PlaneCurve& c, const std::array<Rat, 3>& p) {
    if (p[0] == 0 && p[1] == 0 && p[2] == 0) throw NotSingular("classify_node: zero point");
    P3 q = constant_point(p);
    const LForm& f = c.coeffs();
    for (int a = 0; a < 3; ++a)
        if (c.sign_at(at(f.derivative(a), q)) != 0) throw NotSingular("classify_node: point is not singular");
    return node_type_from_hessian_sign(c.sign_at(hessian_e2(f, q)));
}

RationalityCertificate is_counted_rational(const PlaneCurve& c) {
    RationalityCertificate cert;
    if (c.degree() == 1) {
        cert.counted = true;
        return cert;
    }
    try {
        cert.points = singular_points(c);
    } catch (const PositiveDimensionalSingularLocus&) {
        cert.diagnostic = "reducible";
        return cert;
    } catch (const NonGenericConfiguration&) {
        cert.diagnostic = "degenerate";
        return cert;
    }
    for (auto& p : cert.points) (p.u ? cert.real_singular : cert.imaginary_pairs)++;
    int total = cert.real_singular + 2 * cert.imaginary_pairs;
    if (c.degree() == 2) {
        cert.counted = total == 0;
        if (!cert.counted) cert.diagnostic = "reducible";
        return cert;
    }
    if (total == 0) {
        cert.diagnostic = "smooth";
    } else if (total >= 2) {
        cert.diagnostic = "reducible";
    } else if (cert.points[0].info.type == NodeType::degenerate) {
        cert.diagnostic = degenerate_kind(c.coeffs(), cert.points[0]);
    } else {
        cert.counted = true;
    }
    return cert;
}

int welschinger_sign(const std::vector<NodeInfo>& nodes) {
    int solitary = 0;
    for (auto& n : nodes) {
        if (n.type == NodeType::degenerate) throw DegenerateNode("welschinger_sign: degenerate node");
        if (n.type == NodeType::solitary) ++solitary;
    }
    return solitary % 2 ? -1 : 1;
}

}  // namespace welsch
