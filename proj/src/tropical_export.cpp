#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "welsch/tropical.hpp"

namespace welsch {

namespace {

using nlohmann::json;

json point(const Exp2& p) { return json::array({p.first, p.second}); }

json points(const std::vector<Exp2>& v) {
    json a = json::array();
    for (auto& p : v) a.push_back(point(p));
    return a;
}

json coefficient(const CRat& c) { return json::array({to_string(c.re), to_string(c.im)}); }

}  // namespace

std::string to_json(const TropicalLimit& tl) {
    json j;
    j["dimension"] = tl.dimension;
    j["polygon"] = points(tl.polygon);
    json n = json::array();
    for (auto& [p, v] : tl.N) n.push_back({{"point", point(p)}, {"value", to_string(v)}});
    j["N"] = n;
    json faces = json::array();
    for (size_t k = 0; k < tl.S.size(); ++k) {
        auto& f = tl.S[k];
        json ini = json::array();
        for (auto& [e, c] : tl.initials[k].terms()) ini.push_back({{"monomial", point(e)}, {"coefficient", coefficient(c)}});
        faces.push_back({{"vertices", points(f.vertices)},
                         {"points", points(f.points)},
                         {"affine", {to_string(f.a), to_string(f.b), to_string(f.c)}},
                         {"initial", ini}});
    }
    j["faces"] = faces;
    json verts = json::array(), edges = json::array(), rays = json::array();
    for (auto& [x, y] : tl.T.vertices) verts.push_back({to_string(x), to_string(y)});
    for (auto& e : tl.T.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"weight", e.weight}});
    for (auto& r : tl.T.rays) rays.push_back({{"from", r.from}, {"direction", point(r.direction)}, {"weight", r.weight}});
    j["tropical_curve"] = {{"vertices", verts}, {"edges", edges}, {"rays", rays}};
    return j.dump(2);
}

// Two panels: the subdivision of the Newton polygon and the dual tropical curve.
std::string to_svg(const TropicalLimit& tl) {
    const double panel = 300, margin = 20;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * panel + 3 * margin << "\" height=\""
       << panel + 2 * margin << "\">\n";

    int w = 1, h = 1;
    for (auto& p : tl.polygon) w = std::max(w, p.first), h = std::max(h, p.second);
    double s = (panel - 20) / std::max(w, h);
    auto X = [&](double i) { return margin + 10 + i * s; };
    auto Y = [&](double j) { return margin + panel - 10 - j * s; };
    for (auto& f : tl.S) {
        os << "  <polygon fill=\"#eef\" stroke=\"#224\" points=\"";
        for (auto& v : f.vertices) os << X(v.first) << "," << Y(v.second) << " ";
        os << "\"/>\n";
    }
    for (auto& [p, v] : tl.N)
        os << "  <circle cx=\"" << X(p.first) << "\" cy=\"" << Y(p.second) << "\" r=\"2\"/>\n";

    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    bool first = true;
    for (auto& [a, b] : tl.T.vertices) {
        double x = a.get_d(), y = b.get_d();
        if (first) lo_x = hi_x = x, lo_y = hi_y = y, first = false;
        lo_x = std::min(lo_x, x), hi_x = std::max(hi_x, x), lo_y = std::min(lo_y, y), hi_y = std::max(hi_y, y);
    }
    double span = std::max({hi_x - lo_x, hi_y - lo_y, 1.0}) * 1.6;
    double cx = (lo_x + hi_x) / 2, cy = (lo_y + hi_y) / 2, t = (panel - 20) / span;
    double ox = 2 * margin + panel;
    auto U = [&](double x) { return ox + panel / 2 + (x - cx) * t; };
    auto V = [&](double y) { return margin + panel / 2 - (y - cy) * t; };
    auto line = [&](double x0, double y0, double x1, double y1, int weight) {
        os << "  <line x1=\"" << U(x0) << "\" y1=\"" << V(y0) << "\" x2=\"" << U(x1) << "\" y2=\"" << V(y1)
           << "\" stroke=\"#822\" stroke-width=\"" << weight << "\"/>\n";
    };
    for (auto& e : tl.T.edges) {
        auto& p = tl.T.vertices[e.from];
        auto& q = tl.T.vertices[e.to];
        line(p.first.get_d(), p.second.get_d(), q.first.get_d(), q.second.get_d(), e.weight);
    }
    for (auto& r : tl.T.rays) {
        auto& p = tl.T.vertices[r.from];
        double len = span / std::hypot(r.direction.first, r.direction.second);
        line(p.first.get_d(), p.second.get_d(), p.first.get_d() + len * r.direction.first,
             p.second.get_d() + len * r.direction.second, r.weight);
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace welsch
