#include "welsch/tropical.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "welsch/errors.hpp"

namespace welsch {

namespace {

long cross(const Exp2& o, const Exp2& a, const Exp2& b) {
    return long(a.first - o.first) * (b.second - o.second) - long(a.second - o.second) * (b.first - o.first);
}

// Counterclockwise corners, collinear points dropped; 1 or 2 entries in lower dimension.
std::vector<Exp2> convex_hull(std::vector<Exp2> p) {
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    if (p.size() <= 2) return p;
    std::vector<Exp2> h(2 * p.size());
    size_t k = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    for (size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    h.resize(k - 1);
    if (h.size() == 2 || (h.size() > 2 && cross(h[0], h[1], h[2]) == 0)) return {p.front(), p.back()};
    return h;
}

bool inside(const std::vector<Exp2>& poly, const Exp2& q) {
    if (poly.size() == 1) return poly[0] == q;
    if (poly.size() == 2) {
        if (cross(poly[0], poly[1], q) != 0) return false;
        return std::min(poly[0], poly[1]) <= q && q <= std::max(poly[0], poly[1]);
    }
    for (size_t k = 0; k < poly.size(); ++k)
        if (cross(poly[k], poly[(k + 1) % poly.size()], q) < 0) return false;
    return true;
}

long twice_area(const std::vector<Exp2>& poly) {
    long s = 0;
    for (size_t k = 0; k < poly.size(); ++k) {
        auto& p = poly[k];
        auto& q = poly[(k + 1) % poly.size()];
        s += long(p.first) * q.second - long(q.first) * p.second;
    }
    return std::abs(s);
}

int lattice_length(const Exp2& p, const Exp2& q) { return std::gcd(std::abs(q.first - p.first), std::abs(q.second - p.second)); }

Exp2 primitive(const Exp2& d) {
    int g = std::gcd(std::abs(d.first), std::abs(d.second));
    return {d.first / g, d.second / g};
}

// Outer normal of the ccw edge p -> q.
Exp2 outer_normal(const Exp2& p, const Exp2& q) { return primitive({q.second - p.second, p.first - q.first}); }

Rat affine(const Face& f, const Exp2& p) { return f.a * p.first + f.b * p.second + f.c; }

struct Lifted {
    Exp2 p;
    Rat h;
};

std::vector<Face> lower_faces_2d(const std::vector<Lifted>& pts) {
    std::vector<Face> faces;
    std::set<std::tuple<Rat, Rat, Rat>> seen;
    const size_t n = pts.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                auto &p1 = pts[i], &p2 = pts[j], &p3 = pts[k];
                long d = cross(p1.p, p2.p, p3.p);
                if (d == 0) continue;
                Rat x2 = p2.p.first - p1.p.first, y2 = p2.p.second - p1.p.second;
                Rat x3 = p3.p.first - p1.p.first, y3 = p3.p.second - p1.p.second;
                Rat h2 = p2.h - p1.h, h3 = p3.h - p1.h;
                Rat a = (h2 * y3 - h3 * y2) / d, b = (x2 * h3 - x3 * h2) / d;
                Rat c = p1.h - a * p1.p.first - b * p1.p.second;
                if (seen.count({a, b, c})) continue;
                bool lower = true;
                for (auto& q : pts)
                    if (q.h < a * q.p.first + b * q.p.second + c) {
                        lower = false;
                        break;
                    }
                seen.insert({a, b, c});
                if (!lower) continue;
                Face f;
                f.a = a, f.b = b, f.c = c;
                for (auto& q : pts)
                    if (q.h == a * q.p.first + b * q.p.second + c) f.points.push_back(q.p);
                f.vertices = convex_hull(f.points);
                faces.push_back(f);
            }
    return faces;
}

std::vector<Face> lower_faces_1d(const std::vector<Lifted>& pts, const Exp2& e0, const Exp2& e1) {
    Exp2 v = primitive({e1.first - e0.first, e1.second - e0.second});
    long vv = long(v.first) * v.first + long(v.second) * v.second;
    auto param = [&](const Exp2& p) {
        return (long(p.first - e0.first) * v.first + long(p.second - e0.second) * v.second) / vv;
    };
    std::vector<std::pair<long, Lifted>> s;
    for (auto& q : pts) s.push_back({param(q.p), q});
    std::sort(s.begin(), s.end(), [](auto& x, auto& y) { return x.first < y.first; });
    // lower chain in the (s, h) plane
    std::vector<size_t> chain;
    for (size_t i = 0; i < s.size(); ++i) {
        while (chain.size() >= 2) {
            auto& A = s[chain[chain.size() - 2]];
            auto& B = s[chain.back()];
            Rat turn = (B.second.h - A.second.h) * (s[i].first - A.first) - (s[i].second.h - A.second.h) * (B.first - A.first);
            if (sgn(turn) >= 0) chain.pop_back();
            else break;
        }
        chain.push_back(i);
    }
    std::vector<Face> faces;
    for (size_t k = 0; k + 1 < chain.size(); ++k) {
        auto& A = s[chain[k]];
        auto& B = s[chain[k + 1]];
        Rat slope = (B.second.h - A.second.h) / Rat(B.first - A.first);
        Face f;
        f.a = slope * v.first / vv;
        f.b = slope * v.second / vv;
        f.c = A.second.h - f.a * A.second.p.first - f.b * A.second.p.second;
        for (auto& [t, q] : s)
            if (t >= A.first && t <= B.first && q.h == affine(f, q.p)) f.points.push_back(q.p);
        f.vertices = {A.second.p, B.second.p};
        faces.push_back(f);
    }
    return faces;
}

struct EdgeUse {
    int face;
    Exp2 normal;
    int length;
};

std::map<std::pair<Exp2, Exp2>, std::vector<EdgeUse>> edge_uses(const std::vector<Face>& S) {
    std::map<std::pair<Exp2, Exp2>, std::vector<EdgeUse>> m;
    for (size_t f = 0; f < S.size(); ++f) {
        auto& v = S[f].vertices;
        for (size_t k = 0; k < v.size(); ++k) {
            auto &p = v[k], &q = v[(k + 1) % v.size()];
            m[{std::min(p, q), std::max(p, q)}].push_back({int(f), outer_normal(p, q), lattice_length(p, q)});
        }
    }
    return m;
}

}  // namespace

PuiseuxTrunc::PuiseuxTrunc(const std::map<Rat, CRat>& terms, std::optional<Rat> order, int max_denominator)
    : order_(std::move(order)) {
    for (auto& [e, c] : terms) {
        if (c.is_zero()) continue;
        if (e.get_den() > max_denominator) throw SchemaError("Puiseux exponent denominator exceeds the bound");
        if (order_ && e >= *order_) throw SchemaError("Puiseux exponent beyond the truncation order");
        terms_.emplace(e, c);
    }
}

const Rat& PuiseuxTrunc::lowest_exponent() const {
    if (is_zero()) throw ZeroSeries("zero series");
    if (terms_.empty()) throw UndeterminedCoefficient("series is hidden by its truncation");
    return terms_.begin()->first;
}

const CRat& PuiseuxTrunc::leading_coefficient() const {
    lowest_exponent();
    return terms_.begin()->second;
}

Rat valuation(const PuiseuxTrunc& s) { return -s.lowest_exponent(); }

std::vector<Exp2> lattice_points(const std::vector<Exp2>& polygon) {
    std::vector<Exp2> out;
    if (polygon.empty()) return out;
    int x0 = polygon[0].first, x1 = x0, y0 = polygon[0].second, y1 = y0;
    for (auto& p : polygon) {
        x0 = std::min(x0, p.first), x1 = std::max(x1, p.first);
        y0 = std::min(y0, p.second), y1 = std::max(y1, p.second);
    }
    for (int i = x0; i <= x1; ++i)
        for (int j = y0; j <= y1; ++j)
            if (inside(polygon, {i, j})) out.push_back({i, j});
    return out;
}

TropicalLimit tropical_limit(const PuiseuxPoly& f) {
    std::vector<Lifted> known;
    std::vector<std::pair<Exp2, Rat>> hidden;
    std::vector<Exp2> support;
    for (auto& [e, s] : f) {
        if (s.is_zero()) continue;
        support.push_back(e);
        if (s.is_undetermined()) hidden.push_back({e, *s.order()});
        else known.push_back({e, s.lowest_exponent()});
    }
    if (known.empty()) {
        if (!hidden.empty()) throw UndeterminedCoefficient("every coefficient is hidden by its truncation");
        throw ZeroInput("tropical_limit: zero polynomial");
    }
    std::vector<Exp2> kp;
    for (auto& q : known) kp.push_back(q.p);
    TropicalLimit tl;
    tl.polygon = convex_hull(kp);
    for (auto& [p, o] : hidden)
        if (!inside(tl.polygon, p)) throw UndeterminedCoefficient("truncation hides a vertex of the Newton polygon");
    tl.dimension = int(tl.polygon.size() >= 3 ? 2 : tl.polygon.size() - 1);

    if (tl.dimension == 2) {
        tl.S = lower_faces_2d(known);
    } else if (tl.dimension == 1) {
        tl.S = lower_faces_1d(known, tl.polygon[0], tl.polygon[1]);
    } else {
        Face face;
        face.vertices = face.points = {known[0].p};
        face.a = face.b = 0;
        face.c = known[0].h;
        tl.S = {face};
    }
    std::sort(tl.S.begin(), tl.S.end(), [](const Face& x, const Face& y) { return x.vertices < y.vertices; });

    auto hull_value = [&](const Exp2& p) {
        Rat best = affine(tl.S[0], p);
        for (auto& face : tl.S) best = std::max(best, affine(face, p));
        return best;
    };
    for (auto& p : lattice_points(tl.polygon)) tl.N[p] = hull_value(p);
    for (auto& [p, o] : hidden)
        if (o <= tl.N[p]) throw UndeterminedCoefficient("truncation hides a coefficient that may reach the lower hull");

    for (auto& face : tl.S) {
        tl.T.vertices.push_back({face.a, face.b});
        CBiPoly ini;
        for (auto& p : face.points) ini.add(p.first, p.second, f.at(p).leading_coefficient());
        tl.initials.push_back(ini);
    }
    if (tl.dimension == 2) {
        for (auto& [key, uses] : edge_uses(tl.S)) {
            if (uses.size() == 2) tl.T.edges.push_back({uses[0].face, uses[1].face, uses[0].length});
            else tl.T.rays.push_back({uses[0].face, uses[0].normal, uses[0].length});
        }
    } else if (tl.dimension == 1) {
        for (size_t k = 0; k < tl.S.size(); ++k) {
            auto& v = tl.S[k].vertices;
            Exp2 d = primitive({v[1].first - v[0].first, v[1].second - v[0].second});
            int len = lattice_length(v[0], v[1]);
            tl.T.rays.push_back({int(k), {-d.second, d.first}, len});
            tl.T.rays.push_back({int(k), {d.second, -d.first}, len});
        }
    }
    return tl;
}

CBiPoly initial_polynomial(const TropicalLimit& tl, const std::vector<Exp2>& face) {
    std::vector<Exp2> key = face;
    std::sort(key.begin(), key.end());
    for (size_t k = 0; k < tl.S.size(); ++k) {
        std::vector<Exp2> v = tl.S[k].vertices;
        std::sort(v.begin(), v.end());
        if (v == key) return tl.initials[k];
    }
    throw FaceNotInSubdivision("face is not in the subdivision");
}

std::vector<std::pair<std::string, bool>> verify(const TropicalLimit& tl, const PuiseuxPoly& f) {
    std::map<Exp2, Rat> h;
    for (auto& [e, s] : f)
        if (!s.is_zero() && !s.is_undetermined()) h[e] = s.lowest_exponent();

    // every lifted point on or above every face plane, equality exactly on the face
    bool convex = !tl.S.empty();
    for (auto& face : tl.S) {
        std::set<Exp2> on(face.points.begin(), face.points.end());
        for (auto& v : face.vertices) convex = convex && on.count(v);
        for (auto& [p, hp] : h) {
            Rat l = affine(face, p);
            convex = convex && l <= hp && ((l == hp) == (on.count(p) > 0));
        }
    }
    for (auto& [p, hp] : h) convex = convex && tl.N.count(p) && tl.N.at(p) <= hp;

    // faces tile the polygon and are the linearity domains of N
    bool regular = true;
    if (tl.dimension == 2) {
        long area = 0;
        for (auto& face : tl.S) {
            area += twice_area(face.vertices);
            for (auto& v : face.vertices) regular = regular && inside(tl.polygon, v);
        }
        regular = regular && area == twice_area(tl.polygon);
        for (size_t x = 0; x < tl.S.size(); ++x)
            for (size_t y = x + 1; y < tl.S.size(); ++y) {
                // separating edge between two convex polygons
                bool separated = false;
                for (auto* pair : {&tl.S[x], &tl.S[y]}) {
                    auto& other = pair == &tl.S[x] ? tl.S[y] : tl.S[x];
                    auto& v = pair->vertices;
                    for (size_t k = 0; k < v.size() && !separated; ++k) {
                        bool all_out = true;
                        for (auto& q : other.vertices) all_out = all_out && cross(v[k], v[(k + 1) % v.size()], q) <= 0;
                        separated = all_out;
                    }
                }
                regular = regular && separated;
            }
        for (auto& [key, uses] : edge_uses(tl.S)) {
            if (uses.size() > 2) regular = false;
            if (uses.size() == 2) {
                auto &F = tl.S[uses[0].face], &G = tl.S[uses[1].face];
                regular = regular && (F.a != G.a || F.b != G.b);
            }
        }
    } else if (tl.dimension == 1) {
        long total = 0;
        for (auto& face : tl.S) total += lattice_length(face.vertices[0], face.vertices[1]);
        regular = total == lattice_length(tl.polygon[0], tl.polygon[1]);
        for (size_t k = 0; k + 1 < tl.S.size(); ++k) regular = regular && (tl.S[k].a != tl.S[k + 1].a || tl.S[k].b != tl.S[k + 1].b);
    }
    for (auto& face : tl.S)
        for (auto& p : lattice_points(face.vertices)) regular = regular && tl.N.count(p) && tl.N.at(p) == affine(face, p);

    // rays per outer normal of the polygon sum to the lattice length of that edge;
    // bounded edges follow the outer normal of the shared edge
    bool dual = true;
    std::map<Exp2, int> expected, got;
    if (tl.dimension == 2) {
        for (size_t k = 0; k < tl.polygon.size(); ++k) {
            auto &p = tl.polygon[k], &q = tl.polygon[(k + 1) % tl.polygon.size()];
            expected[outer_normal(p, q)] += lattice_length(p, q);
        }
        auto uses = edge_uses(tl.S);
        for (auto& e : tl.T.edges) {
            auto& F = tl.S[e.from];
            auto& G = tl.S[e.to];
            Rat dx = G.a - F.a, dy = G.b - F.b;
            bool found = false;
            for (auto& [key, u] : uses)
                if (u.size() == 2 && u[0].face == e.from && u[1].face == e.to) {
                    Exp2 n = u[0].normal;
                    found = dx * n.second == dy * n.first && sgn(dx * n.first + dy * n.second) > 0 && u[0].length == e.weight;
                }
            dual = dual && found;
        }
    } else if (tl.dimension == 1) {
        auto& p = tl.polygon[0];
        auto& q = tl.polygon[1];
        expected[outer_normal(p, q)] += lattice_length(p, q);
        expected[outer_normal(q, p)] += lattice_length(p, q);
    }
    for (auto& r : tl.T.rays) got[r.direction] += r.weight;
    dual = dual && expected == got;

    // initial polynomials: supported on the lifted points of their face, and
    // agreeing on shared edges
    bool initials = tl.initials.size() == tl.S.size();
    for (size_t k = 0; k < tl.S.size() && initials; ++k) {
        auto& face = tl.S[k];
        std::set<Exp2> support;
        for (auto& [e, c] : tl.initials[k].terms()) {
            support.insert(e);
            initials = initials && inside(face.vertices, e) && c == f.at(e).leading_coefficient() &&
                       h.count(e) && h.at(e) == affine(face, e);
        }
        initials = initials && support == std::set<Exp2>(face.points.begin(), face.points.end());
    }
    if (tl.dimension == 2 && initials) {
        for (auto& [key, u] : edge_uses(tl.S)) {
            if (u.size() != 2) continue;
            std::vector<Exp2> seg = {key.first, key.second};
            for (auto& p : lattice_points(seg))
                initials = initials && tl.initials[u[0].face].coef(p.first, p.second) ==
                                           tl.initials[u[1].face].coef(p.first, p.second);
        }
    }
    return {{"convexity", convex}, {"regular_subdivision", regular}, {"duality", dual}, {"initial_support", initials}};
}

}  // namespace welsch
