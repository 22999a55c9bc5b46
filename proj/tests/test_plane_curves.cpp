#include <algorithm>
#include <random>

#include "doctest.h"
#include "welsch/errors.hpp"
#include "welsch/plane_curve.hpp"
#include "welsch/resultant.hpp"

using namespace welsch;

namespace {

struct T {
    Rat c;
    int i, j, k;
};

Form form(int d, std::initializer_list<T> terms) {
    Form f(d);
    for (auto& t : terms) f.add({t.i, t.j, t.k}, t.c);
    return f;
}

// y^2 z - x^2 (x + z)
Form nodal_cubic() { return form(3, {{1, 0, 2, 1}, {-1, 3, 0, 0}, {-1, 2, 0, 1}}); }

int rnd(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

struct NodalCubic {
    Form f;
    Rat a, b;
    NodeType type;
};

// q(X, Y) + c(X, Y) with X = x - a, Y = y - b and q, c coprime binary forms.
NodalCubic random_nodal_cubic(std::mt19937_64& rng) {
    for (;;) {
        Vec q = {Rat(rnd(rng, -3, 3)), Rat(rnd(rng, -3, 3)), Rat(rnd(rng, -3, 3))};
        Vec c = {Rat(rnd(rng, -5, 5)), Rat(rnd(rng, -5, 5)), Rat(rnd(rng, -5, 5)), Rat(rnd(rng, -5, 5))};
        Rat disc = 4 * q[0] * q[2] - q[1] * q[1];
        if (disc == 0 || sylvester_resultant(q, c) == 0) continue;
        Rat a = frac(rnd(rng, -6, 6), rnd(rng, 1, 3)), b = frac(rnd(rng, -6, 6), rnd(rng, 1, 3));
        BiPoly X = BiPoly::x() - BiPoly::constant(a), Y = BiPoly::y() - BiPoly::constant(b);
        BiPoly f;
        for (int i = 0; i <= 2; ++i) f += q[i] * pow(X, 2 - i) * pow(Y, i);
        for (int i = 0; i <= 3; ++i) f += c[i] * pow(X, 3 - i) * pow(Y, i);
        return {homogenize(f, 3), a, b, node_type_from_hessian_sign(sgn(disc))};
    }
}

Form random_cubic(std::mt19937_64& rng) {
    Form f(3);
    for (auto& m : monomials(3)) f.add(m, Rat(rnd(rng, -4, 4)));
    return f;
}

bool at_rational(const NodeInfo& n, const Rat& x, const Rat& y) {
    return n.location && n.location->first.compare(x) == 0 && n.location->second.compare(y) == 0;
}

}  // namespace

TEST_CASE("singular_points examples") {
    CHECK(singular_points(PlaneCurve(form(2, {{1, 2, 0, 0}, {1, 0, 2, 0}, {-1, 0, 0, 2}}))).empty());

    auto node = singular_points(PlaneCurve(nodal_cubic()));
    REQUIRE(node.size() == 1);
    CHECK(node[0].info.chart == 'z');
    CHECK(at_rational(node[0].info, 0, 0));
    CHECK(node[0].info.type == NodeType::non_solitary);

    // x (x^2 + y^2 - z^2): the line meets the conic at (0 : 1 : 1) and (0 : -1 : 1)
    auto two = singular_points(PlaneCurve(form(3, {{1, 3, 0, 0}, {1, 1, 2, 0}, {-1, 1, 0, 2}})));
    REQUIRE(two.size() == 2);
    int found = 0;
    for (auto& p : two) found += at_rational(p.info, 0, 1) + at_rational(p.info, 0, -1);
    CHECK(found == 2);
}

TEST_CASE("singular points in every chart") {
    auto pts = singular_points(PlaneCurve(form(3, {{1, 1, 1, 1}})));
    REQUIRE(pts.size() == 3);
    std::string charts;
    for (auto& p : pts) {
        charts += p.info.chart;
        CHECK(p.info.type == NodeType::non_solitary);
    }
    std::sort(charts.begin(), charts.end());
    CHECK(charts == "xyz");

    // z (x^2 + y^2 - z^2): the conic meets the line at infinity in (1 : +-i : 0)
    auto pair = singular_points(PlaneCurve(form(3, {{1, 2, 0, 1}, {1, 0, 2, 1}, {-1, 0, 0, 3}})));
    REQUIRE(pair.size() == 1);
    CHECK(pair[0].info.type == NodeType::imaginary_pair);
    CHECK(!pair[0].u);

    // x^2 (x + z): a double line
    CHECK_THROWS_AS(singular_points(PlaneCurve(form(3, {{1, 3, 0, 0}, {1, 2, 0, 1}}))),
                    PositiveDimensionalSingularLocus);
}

TEST_CASE("classify_node examples") {
    BiPoly x = BiPoly::x(), y = BiPoly::y();
    CHECK(classify_node(PlaneCurve::affine(x * x + y * y), {0, 0, 1}) == NodeType::solitary);
    CHECK(classify_node(PlaneCurve::affine(x * x - y * y), {0, 0, 1}) == NodeType::non_solitary);
    CHECK(classify_node(PlaneCurve::affine(y * y - x * x * x), {0, 0, 1}) == NodeType::degenerate);
    CHECK_THROWS_AS(classify_node(PlaneCurve(nodal_cubic()), {1, 0, 1}), NotSingular);
    CHECK_THROWS_AS(classify_node(PlaneCurve(nodal_cubic()), {0, 1, 1}), NotSingular);
}

TEST_CASE("is_counted_rational examples") {
    auto node = is_counted_rational(PlaneCurve(nodal_cubic()));
    CHECK(node.counted);
    CHECK(node.real_singular == 1);

    auto cusp = is_counted_rational(PlaneCurve(form(3, {{1, 0, 2, 1}, {-1, 3, 0, 0}})));
    CHECK(!cusp.counted);
    CHECK(cusp.diagnostic == "cusp");

    auto lc = is_counted_rational(PlaneCurve(form(3, {{1, 3, 0, 0}, {1, 1, 2, 0}, {-1, 1, 0, 2}})));
    CHECK(!lc.counted);
    CHECK(lc.diagnostic == "reducible");

    // conic plus tangent line: y (y z - x^2), one tacnode
    auto tac = is_counted_rational(PlaneCurve(form(3, {{1, 0, 2, 1}, {-1, 2, 1, 0}})));
    CHECK(!tac.counted);
    CHECK(tac.diagnostic == "reducible");

    // three concurrent lines x y (x - y)
    auto triple = is_counted_rational(PlaneCurve(form(3, {{1, 2, 1, 0}, {-1, 1, 2, 0}})));
    CHECK(!triple.counted);
    CHECK(triple.diagnostic == "reducible");

    // y^2 z - x^3 + x z^2
    auto smooth = is_counted_rational(PlaneCurve(form(3, {{1, 0, 2, 1}, {-1, 3, 0, 0}, {1, 1, 0, 2}})));
    CHECK(!smooth.counted);
    CHECK(smooth.diagnostic == "smooth");

    CHECK(is_counted_rational(PlaneCurve(form(1, {{1, 1, 0, 0}, {2, 0, 0, 1}}))).counted);
    CHECK(is_counted_rational(PlaneCurve(form(2, {{1, 2, 0, 0}, {1, 0, 2, 0}, {-1, 0, 0, 2}}))).counted);
    CHECK(!is_counted_rational(PlaneCurve(form(2, {{1, 2, 0, 0}, {-1, 0, 2, 0}}))).counted);
    CHECK(!is_counted_rational(PlaneCurve(form(3, {{1, 3, 0, 0}, {1, 2, 0, 1}}))).counted);
}

TEST_CASE("welschinger_sign examples") {
    NodeInfo s{NodeType::solitary, std::nullopt, 'z'}, n{NodeType::non_solitary, std::nullopt, 'z'};
    NodeInfo i{NodeType::imaginary_pair, std::nullopt, 'z'}, d{NodeType::degenerate, std::nullopt, 'z'};
    CHECK(welschinger_sign({n}) == 1);
    CHECK(welschinger_sign({s}) == -1);
    CHECK(welschinger_sign({s, s, n}) == 1);
    CHECK(welschinger_sign({s, i}) == -1);
    CHECK(welschinger_sign({}) == 1);
    CHECK_THROWS_AS(welschinger_sign({n, d}), DegenerateNode);
}

TEST_CASE("welschinger_sign is permutation invariant") {
    std::mt19937_64 rng(11);
    const NodeType kinds[] = {NodeType::solitary, NodeType::non_solitary, NodeType::imaginary_pair};
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<NodeInfo> nodes;
        for (int k = rnd(rng, 0, 6); k > 0; --k) nodes.push_back({kinds[rnd(rng, 0, 2)], std::nullopt, 'z'});
        int s = welschinger_sign(nodes);
        std::shuffle(nodes.begin(), nodes.end(), rng);
        CHECK(welschinger_sign(nodes) == s);
    }
}

TEST_CASE("solitary nodes have no real branch on a small circle") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 12; ++trial) {
        NodalCubic nc = random_nodal_cubic(rng);
        CHECK(classify_node(PlaneCurve(nc.f), {nc.a, nc.b, 1}) == nc.type);
        BiPoly f = dehomogenize(nc.f);
        const Rat r = frac(1, 100000);
        bool pos = false, neg = false;
        for (int k = -512; k <= 512; ++k) {
            for (Rat s : {frac(k, 512), k ? 1 / frac(k, 512) : Rat(0)}) {
                Rat w = 1 + s * s;
                int v = sgn(f.eval(nc.a + r * (1 - s * s) / w, nc.b + r * 2 * s / w));
                pos = pos || v > 0;
                neg = neg || v < 0;
            }
        }
        if (nc.type == NodeType::solitary) CHECK(pos != neg);
        else CHECK((pos && neg));
    }
}

TEST_CASE("a real cubic with one node has exactly one real singular point") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        NodalCubic nc = random_nodal_cubic(rng);
        auto cert = is_counted_rational(PlaneCurve(nc.f));
        CHECK(cert.counted);
        REQUIRE(cert.points.size() == 1);
        CHECK(cert.real_singular == 1);
        CHECK(at_rational(cert.points[0].info, nc.a, nc.b));
        CHECK(cert.points[0].info.type == nc.type);
    }
}

TEST_CASE("kernel location agrees with the resultant sweep") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 6; ++trial) {
        NodalCubic nc = random_nodal_cubic(rng);
        CubicFamily fam(pencil(nc.f, random_cubic(rng)));
        CHECK(fam.discriminant().eval(0) == 0);
        auto sp = fam.singular_point(AlgebraicReal::rational(0));
        REQUIRE(sp);
        auto sweep = singular_points(PlaneCurve(nc.f));
        REQUIRE(sweep.size() == 1);
        CHECK(sp->info.type == sweep[0].info.type);
        CHECK(at_rational(sp->info, nc.a, nc.b));
        // every simple real root of the eliminant carries a single node
        for (auto& rm : real_roots_with_multiplicity(fam.discriminant())) {
            if (rm.multiplicity != 1) continue;
            auto p = fam.singular_point(rm.root, false);
            REQUIRE(p);
            CHECK(p->info.type != NodeType::degenerate);
        }
    }
}

TEST_CASE("members over a real quadratic field") {
    // y^2 z = x^3 - x z^2 - lambda z^3 is singular at 27 lambda^2 = 4, node at x^2 = 1/3 with x lambda < 0
    LForm f = pencil(form(3, {{1, 0, 2, 1}, {-1, 3, 0, 0}, {1, 1, 0, 2}}), form(3, {{1, 0, 0, 3}}));
    CubicFamily fam(f);
    CHECK(fam.discriminant().monic() == UniPoly({frac(-4, 27), 0, 1}));
    UniPoly m = {-4, 0, 27};
    AlgebraicReal plus(m, 0, 1), minus(m, -1, 0);

    auto p = singular_points(PlaneCurve(f, plus));
    REQUIRE(p.size() == 1);
    CHECK(p[0].info.type == NodeType::solitary);
    CHECK(p[0].info.location->second.compare(0) == 0);
    CHECK(std::abs(p[0].info.location->first.approx() + 0.57735) < 1e-4);

    auto q = singular_points(PlaneCurve(f, minus));
    REQUIRE(q.size() == 1);
    CHECK(q[0].info.type == NodeType::non_solitary);
    CHECK(std::abs(q[0].info.location->first.approx() - 0.57735) < 1e-4);

    CHECK(is_counted_rational(PlaneCurve(f, plus)).counted);
    CHECK(singular_points(PlaneCurve(f, AlgebraicReal(UniPoly({-1, 0, 2}), 0, 1))).empty());
}
