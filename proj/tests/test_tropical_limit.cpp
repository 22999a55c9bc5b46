#include <random>

#include "doctest.h"
#include "json.hpp"
#include "welsch/errors.hpp"
#include "welsch/tropical.hpp"

using namespace welsch;

namespace {

PuiseuxTrunc mono(const Rat& e, long c = 1) { return PuiseuxTrunc::monomial(CRat(c), e); }

bool all_pass(const std::vector<std::pair<std::string, bool>>& checks) {
    bool ok = true;
    for (auto& [name, pass] : checks) {
        INFO(name);
        CHECK(pass);
        ok = ok && pass;
    }
    return ok;
}

}  // namespace

TEST_CASE("valuation examples") {
    CHECK(valuation(PuiseuxTrunc({{0, CRat(1)}, {1, CRat(1)}})) == 0);
    CHECK(valuation(PuiseuxTrunc({{2, CRat(1)}, {3, CRat(1)}})) == -2);
    CHECK(valuation(PuiseuxTrunc({{frac(-1, 2), CRat(1)}, {0, CRat(1)}})) == frac(1, 2));
    CHECK_THROWS_AS(valuation(PuiseuxTrunc()), ZeroSeries);
    CHECK_THROWS_AS(valuation(PuiseuxTrunc({}, Rat(3))), UndeterminedCoefficient);
    CHECK_THROWS_AS(PuiseuxTrunc({{frac(1, 61), CRat(1)}}), SchemaError);
    CHECK_THROWS_AS(PuiseuxTrunc({{Rat(4), CRat(1)}}, Rat(3)), SchemaError);
}

TEST_CASE("x + y + 1") {
    PuiseuxPoly f = {{{1, 0}, mono(0)}, {{0, 1}, mono(0)}, {{0, 0}, mono(0)}};
    auto tl = tropical_limit(f);
    REQUIRE(tl.S.size() == 1);
    for (auto& [p, v] : tl.N) CHECK(v == 0);
    CHECK(tl.T.vertices.size() == 1);
    CHECK(tl.T.edges.empty());
    CHECK(tl.T.rays.size() == 3);
    CBiPoly expect = CBiPoly::x() + CBiPoly::y() + CBiPoly::constant(CRat(1));
    CHECK(initial_polynomial(tl, tl.polygon) == expect);
    all_pass(verify(tl, f));
}

TEST_CASE("x^2 + x + t") {
    PuiseuxPoly f = {{{2, 0}, mono(0)}, {{1, 0}, mono(0)}, {{0, 0}, mono(1)}};
    auto tl = tropical_limit(f);
    CHECK(tl.dimension == 1);
    REQUIRE(tl.S.size() == 2);
    CHECK(tl.N.at({0, 0}) == 1);
    CHECK(tl.N.at({1, 0}) == 0);
    CHECK(tl.N.at({2, 0}) == 0);
    CHECK(initial_polynomial(tl, {{1, 0}, {2, 0}}) == CBiPoly::x() * CBiPoly::x() + CBiPoly::x());
    CHECK(initial_polynomial(tl, {{0, 0}, {1, 0}}) == CBiPoly::x() + CBiPoly::constant(CRat(1)));
    CHECK_THROWS_AS(initial_polynomial(tl, {{0, 0}, {2, 0}}), FaceNotInSubdivision);
    all_pass(verify(tl, f));
}

TEST_CASE("a polynomial whose subdivision has the triangle with apex (3, 1)") {
    // t^2 + t y + y^2 + t^(2/3) x y + t^(1/3) x^2 y + x^3 y + t^5 x^3
    PuiseuxPoly f = {{{0, 0}, mono(2)},           {{0, 1}, mono(1)},           {{0, 2}, mono(0)},
                     {{1, 1}, mono(frac(2, 3))}, {{2, 1}, mono(frac(1, 3))}, {{3, 1}, mono(0)},
                     {{3, 0}, mono(5)}};
    auto tl = tropical_limit(f);
    CHECK(tl.S.size() == 2);
    bool found = false;
    for (auto& face : tl.S) {
        std::vector<Exp2> v = face.vertices;
        std::sort(v.begin(), v.end());
        if (v != std::vector<Exp2>{{0, 0}, {0, 2}, {3, 1}}) continue;
        found = true;
        CHECK(face.a == frac(-1, 3));
        CHECK(face.b == -1);
        CHECK(face.c == 2);
        CHECK(face.points.size() == 6);
    }
    CHECK(found);
    CHECK(tl.N.at({0, 2}) == 0);
    CHECK(tl.N.at({3, 1}) == 0);
    CHECK(tl.N.at({0, 0}) == 5 - 3);
    all_pass(verify(tl, f));
}

TEST_CASE("truncation that hides a needed coefficient is refused") {
    PuiseuxPoly f = {{{1, 0}, mono(0)}, {{0, 1}, mono(0)}, {{0, 0}, PuiseuxTrunc({}, Rat(1))}};
    CHECK_THROWS_AS(tropical_limit(f), UndeterminedCoefficient);
    // hidden above the hull: harmless
    PuiseuxPoly g = {{{2, 0}, mono(0)}, {{0, 2}, mono(0)}, {{0, 0}, mono(0)}, {{1, 1}, PuiseuxTrunc({}, Rat(1))}};
    CHECK(tropical_limit(g).S.size() == 1);
    PuiseuxPoly h = {{{2, 0}, mono(0)}, {{0, 2}, mono(0)}, {{0, 0}, mono(0)}, {{1, 1}, PuiseuxTrunc({}, Rat(0))}};
    CHECK_THROWS_AS(tropical_limit(h), UndeterminedCoefficient);
}

TEST_CASE("single monomial") {
    PuiseuxPoly f = {{{2, 1}, mono(frac(3, 2), 5)}};
    auto tl = tropical_limit(f);
    CHECK(tl.dimension == 0);
    CHECK(tl.N.at({2, 1}) == frac(3, 2));
    CHECK(tl.T.rays.empty());
    all_pass(verify(tl, f));
}

TEST_CASE("random Puiseux polynomials satisfy the tropical invariants") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> coord(0, 6), num(-12, 12), den(1, 6), count(1, 14), c(1, 9);
    for (int trial = 0; trial < 60; ++trial) {
        PuiseuxPoly f;
        for (int n = count(rng); n > 0; --n) {
            std::map<Rat, CRat> terms = {{frac(num(rng), den(rng)), CRat(c(rng), num(rng))},
                                         {frac(num(rng), den(rng)), CRat(c(rng))}};
            f[{coord(rng), coord(rng)}] = PuiseuxTrunc(terms);
        }
        auto tl = tropical_limit(f);
        CHECK(all_pass(verify(tl, f)));
    }
}

TEST_CASE("json export") {
    PuiseuxPoly f = {{{2, 0}, mono(0)}, {{0, 2}, mono(0)}, {{0, 0}, mono(1)}, {{1, 1}, mono(0)}};
    auto tl = tropical_limit(f);
    auto j = nlohmann::json::parse(to_json(tl));
    CHECK(j["faces"].size() == tl.S.size());
    CHECK(j["tropical_curve"]["rays"].size() == tl.T.rays.size());
    CHECK(to_svg(tl).find("<svg") == 0);
}
