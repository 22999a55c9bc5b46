#include <random>

#include "doctest.h"
#include "welsch/arc.hpp"
#include "welsch/errors.hpp"
#include "welsch/linalg.hpp"

using namespace welsch;

namespace {

Rat rnd(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n(-9, 9), d(1, 5);
    return frac(n(rng), d(rng));
}

Arc random_real_arc(std::mt19937_64& rng, int order) {
    std::vector<Rat> x{1}, y;
    for (int i = 0; i < order; ++i) y.push_back(rnd(rng));
    for (int i = 1; i < order; ++i) x.push_back(rnd(rng));
    return make_real_arc(rnd(rng), rnd(rng), x, y, order);
}

Arc random_imaginary_arc(std::mt19937_64& rng, int order) {
    std::vector<CRat> x{CRat(1)}, y;
    for (int i = 0; i < order; ++i) y.push_back(CRat(rnd(rng), rnd(rng)));
    return make_arc(CRat(rnd(rng), 1 + abs(rnd(rng))), CRat(rnd(rng), rnd(rng)), x, y, order);
}

Mat as_matrix(const JetConditions& jc, int d) {
    Mat m;
    auto monos = affine_monomials(d);
    for (auto& f : jc.functionals) {
        Vec row;
        for (auto& e : monos) {
            auto it = f.find(e);
            row.push_back(it == f.end() ? Rat(0) : it->second);
        }
        m.push_back(row);
    }
    return m;
}

BiPoly from_vector(const Vec& v, int d) {
    BiPoly f;
    auto monos = affine_monomials(d);
    for (size_t i = 0; i < monos.size(); ++i) f.add(monos[i].first, monos[i].second, v[i]);
    return f;
}

}  // namespace

TEST_CASE("make_arc examples") {
    auto a = make_real_arc(0, 0, {1}, {0}, 3);
    CHECK(a.reality == Reality::real);
    CHECK(a.order == 3);
    CHECK_THROWS_AS(make_real_arc(0, 0, {0, 1}, {0, 0, 1}, 3), NotSmooth);
    auto b = make_arc(CRat(0, 1), CRat(0), {CRat(1)}, {CRat(0, 1)}, 2);
    CHECK(b.reality == Reality::imaginary);
}

TEST_CASE("normalisation puts arcs in graph form and is reparametrisation invariant") {
    // gamma(t) = (2t + t^2, 3t) and its reparametrisation t -> t/2 - t^2/8 describe the same arc
    auto a = make_real_arc(1, 1, {2, 1}, {3}, 4);
    CHECK(a.x[0] == CRat(1));
    for (size_t i = 1; i < a.x.size(); ++i) CHECK(a.x[i].is_zero());
    // x = 2t + t^2 = u  =>  t = -1 + sqrt(1 + u); y = 3t = 3u/2 - 3u^2/8 + ...
    CHECK(a.y[0] == CRat(frac(3, 2)));
    CHECK(a.y[1] == CRat(frac(-3, 8)));
    auto b = make_real_arc(1, 1, {1}, {frac(3, 2), frac(-3, 8), frac(3, 16), frac(-15, 128)}, 4);
    CHECK(a == b);
    auto v = make_real_arc(0, 0, {0, 5}, {2}, 3);
    CHECK(v.y[0] == CRat(1));
    CHECK(v.x[1] == CRat(frac(5, 4)));
}

TEST_CASE("conjugate_arc") {
    auto r = make_real_arc(1, 2, {1}, {3, 4}, 2);
    CHECK(conjugate_arc(r) == r);
    auto a = make_arc(CRat(0, 1), CRat(0), {CRat(1)}, {CRat(0, 1)}, 2);
    auto c = conjugate_arc(a);
    CHECK(c.cx == CRat(0, -1));
    CHECK(c.y[0] == CRat(0, -1));
    CHECK(conjugate_arc(c) == a);
    std::mt19937_64 rng(2);
    for (int i = 0; i < 10; ++i) {
        auto b = random_imaginary_arc(rng, 3);
        CHECK(conjugate_arc(conjugate_arc(b)) == b);
    }
}

TEST_CASE("tangency_order examples") {
    BiPoly x = BiPoly::x(), y = BiPoly::y();
    for (int k = 1; k <= 5; ++k) {
        std::vector<Rat> ys(k);
        ys[k - 1] = 1;
        auto a = make_real_arc(0, 0, {1}, ys, 6);
        CHECK(tangency_order(y, a) == TangencyOrder{k, false});
    }
    auto line = make_real_arc(0, 0, {1}, {0}, 4);
    CHECK(tangency_order(y - x * x, line) == TangencyOrder{2, false});
    auto quartic = make_real_arc(0, 0, {1}, {0, 0, 0, 1}, 4);
    CHECK(tangency_order(x * y + x * x * x, quartic) == TangencyOrder{3, false});
    CHECK(tangency_order(y, line) == TangencyOrder{5, true});
}

TEST_CASE("jet_conditions examples") {
    auto p = make_real_arc(0, 0, {1}, {0}, 1);
    auto jc = jet_conditions(p, 1, 3);
    REQUIRE(jc.functionals.size() == 1);
    CHECK(jc.functionals[0] == Functional{{{0, 0}, 1}});

    auto a = make_real_arc(0, 0, {1}, {0, 0, 7}, 3);
    jc = jet_conditions(a, 3, 3);
    REQUIRE(jc.functionals.size() == 3);
    CHECK(jc.functionals[0] == Functional{{{0, 0}, 1}});
    CHECK(jc.functionals[1] == Functional{{{1, 0}, 1}});
    CHECK(jc.functionals[2] == Functional{{{2, 0}, 1}});

    auto im = make_arc(CRat(0, 1), CRat(0), {CRat(1)}, {CRat(1, 1)}, 2);
    CHECK(jet_conditions(im, 2, 3).functionals.size() == 4);
}

TEST_CASE("tangency order >= k iff the jet functionals annihilate F") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int d = 1 + trial % 3, k = 1 + trial % (2 * d);
        auto a = random_real_arc(rng, 2 * d + 1);
        auto jc = jet_conditions(a, k, d);
        Mat m = as_matrix(jc, d);
        int n = static_cast<int>(affine_monomials(d).size());
        // a random curve and a random curve from the kernel
        Vec v(n);
        for (auto& c : v) c = rnd(rng);
        auto ker = nullspace(m, n);
        Vec w(n);
        for (auto& b : ker) {
            Rat s = rnd(rng);
            for (int i = 0; i < n; ++i) w[i] += s * b[i];
        }
        for (auto* vec : {&v, &w}) {
            BiPoly f = from_vector(*vec, d);
            if (f.is_zero()) continue;
            bool kills = true;
            for (auto& fn : jc.functionals) kills = kills && sgn(apply_functional(fn, f)) == 0;
            CHECK((tangency_order(f, a).order >= k) == kills);
        }
    }
}

TEST_CASE("jet functionals are independent for generic arcs") {
    std::mt19937_64 rng(13);
    for (int d = 1; d <= 3; ++d)
        for (int k = 1; k <= 2 * d; ++k) {
            auto a = random_real_arc(rng, 2 * d);
            CHECK(rank(as_matrix(jet_conditions(a, k, d), d)) == k);
        }
    int dim = 10;
    for (int k = 1; 2 * k <= dim; ++k) {
        auto a = random_imaginary_arc(rng, k);
        CHECK(rank(as_matrix(jet_conditions(a, k, 3), 3)) == 2 * k);
    }
}

TEST_CASE("conjugation commutes with jet conditions") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 8; ++trial) {
        auto a = random_imaginary_arc(rng, 3);
        auto j = jet_conditions(a, 3, 3), jc = jet_conditions(conjugate_arc(a), 3, 3);
        REQUIRE(j.functionals.size() == jc.functionals.size());
        for (size_t n = 0; n < j.functionals.size(); n += 2) {
            CHECK(j.functionals[n] == jc.functionals[n]);
            Functional neg;
            for (auto& [m, c] : j.functionals[n + 1]) neg[m] = -c;
            CHECK(jc.functionals[n + 1] == neg);
        }
    }
}

TEST_CASE("even order family from the remark") {
    CHECK(even_order_family(1, 1).type == NodeType::solitary);
    CHECK(even_order_family(1, -1).type == NodeType::non_solitary);
    CHECK(even_order_family(1, 0).type == NodeType::degenerate);
    for (int s = 1; s <= 3; ++s) {
        // eps = 1 is special for s = 2 (t = -1 also hits the double point)
        for (int k = 2; k <= 5; ++k) {
            CHECK(even_order_family(s, frac(1, k)).type == NodeType::solitary);
            CHECK(even_order_family(s, frac(-1, k)).type == NodeType::non_solitary);
        }
        auto g = even_order_family(s, 0);
        CHECK(g.type == NodeType::degenerate);
        // the germ is tangent to the arc with order 2s at the origin
        auto e = even_order_family(s, frac(1, 3));
        CHECK(tangency_order(e.implicit, e.arc).order == 2 * s);
    }
}
