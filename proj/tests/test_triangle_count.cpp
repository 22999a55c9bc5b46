#include <random>

#include "doctest.h"
#include "welsch/errors.hpp"
#include "welsch/triangle.hpp"

using namespace welsch;

namespace {

TriangleFamily family(int k, TriangleVariant v, long c00, long c01, long c02, long c11) {
    return {k, v, Rat(c00), Rat(c01), Rat(c02), Rat(c11)};
}

int real_count(const std::vector<TriangleSolution>& sols) {
    int n = 0;
    for (auto& s : sols) n += s.real();
    return n;
}

// D at a real solution, evaluated at a rational x through the exact coefficient values.
int sign_of_d(const TriangleFamily& fam, const TriangleSolution& sol, const Rat& x) {
    return static_cast<int>(certified_sign(node_polynomial(fam, sol), *sol.beta, AlgebraicReal::rational(x)));
}

}  // namespace

TEST_CASE("double root census examples") {
    UniPoly q = UniPoly({Rat(1), Rat(0), Rat(1)});
    UniPoly l = UniPoly({Rat(-1), Rat(1)});
    auto solitary = classify_double_roots(-(l * l * q));
    CHECK(solitary.solitary == 1);
    CHECK(solitary.non_solitary == 0);
    auto plain = classify_double_roots(l * l * q);
    CHECK(plain.solitary == 0);
    CHECK(plain.non_solitary == 1);
    CHECK_THROWS_AS(classify_double_roots(l * l * l * q), DegenerateDoubleRoot);
}

TEST_CASE("invalid families") {
    CHECK_THROWS_AS(validate(family(0, TriangleVariant::part1, 1, 1, 1, 1)), SchemaError);
    CHECK_THROWS_AS(validate(family(2, TriangleVariant::part1, 0, 1, 1, 1)), SchemaError);
    CHECK_THROWS_AS(validate(family(2, TriangleVariant::part2, 1, 0, 1, 1)), SchemaError);
    CHECK_NOTHROW(validate(family(3, TriangleVariant::part2, 1, 0, 1, 1)));
}

TEST_CASE("k = 1 has one automatically rational member") {
    auto fam = family(1, TriangleVariant::part1, 2, 3, 5, 7);
    auto sols = enumerate_rational_members(fam);
    CHECK(sols.size() == 1);
    CHECK(brute_force_oracle(fam).count == 1);
}

TEST_CASE("k = 2 sample (1, 1, 1, 1)") {
    auto fam = family(2, TriangleVariant::part1, 1, 1, 1, 1);
    auto sols = enumerate_rational_members(fam);
    CHECK(sols.size() == 2);
    auto orc = brute_force_oracle(fam);
    CHECK(orc.count == 2);
    CHECK(orc.real_count == real_count(sols));
    // D = (1 + x + c x^2)^2 - 4 has a double root iff 1 - 1/(4c) = +-2: c = -1/4 or 1/12
    CHECK(real_count(sols) == 2);
    int hits = 0;
    for (auto& s : sols)
        for (Rat c : {frac(-1, 4), frac(1, 12)}) hits += compare(s.value(2), AlgebraicReal::rational(c)) == 0;
    CHECK(hits == 2);
    // P = 1 + x + c x^2 has a maximum 2 at x = 2 and a minimum -2 at x = -6: |P| <= 2 nearby, both solitary
    auto census = classify_real_solutions(fam, sols);
    int odd = 0;
    for (auto& c : census) odd += (c.solitary % 2);
    CHECK(odd == 2);
}

TEST_CASE("k = 3 sample") {
    auto fam = family(3, TriangleVariant::part1, 1, 3, 2, -1);
    auto sols = enumerate_rational_members(fam);
    CHECK(sols.size() == 3);
    CHECK(real_count(sols) % 2 == 1);
    for (auto& c : classify_real_solutions(fam, sols)) CHECK(c.solitary % 2 == 0);
    auto orc = brute_force_oracle(fam);
    CHECK(orc.count == 3);
    CHECK(orc.real_count == real_count(sols));
}

TEST_CASE("solitary census agrees with sampled signs of D") {
    auto fam = family(2, TriangleVariant::part1, 1, 1, 1, 1);
    auto sols = enumerate_rational_members(fam);
    // c = -1/4 and c = 1/12; the double root sits at the critical point -1/(2c)
    for (size_t i = 0; i < sols.size(); ++i) {
        Rat c = compare(sols[i].value(2), AlgebraicReal::rational(frac(-1, 4))) == 0 ? frac(-1, 4) : frac(1, 12);
        Rat r = -Rat(1) / (2 * c);
        Rat h = frac(1, 1000);
        int left = sign_of_d(fam, sols[i], r - h), right = sign_of_d(fam, sols[i], r + h);
        CHECK(left == right);
        auto census = classify_real_solutions(fam, {sols[i]});
        CHECK(census[0].solitary == (left < 0 ? 1 : 0));
    }
}

TEST_CASE("part 2, odd k") {
    for (int k : {1, 3, 5, 7}) {
        auto fam = family(k, TriangleVariant::part2, 2, 0, 3, -5);
        auto sols = enumerate_rational_members(fam);
        REQUIRE(sols.size() == 1);
        REQUIRE(sols[0].real());
        CHECK(sols[0].coeffs[k - 1].is_zero());
        auto census = classify_real_solutions(fam, sols);
        int s = census[0].solitary;
        CHECK((s == k - 1 || s == 0));
        CHECK(census[0].solitary + census[0].non_solitary == k - 1);
        if (k <= 3) {
            auto orc = brute_force_oracle(fam);
            CHECK(orc.count == 1);
            CHECK(orc.real_count == 1);
        }
    }
    // both possibilities occur as the sign of 4 c00 c02 flips
    auto pos = classify_real_solutions(family(3, TriangleVariant::part2, 1, 0, 1, 1),
                                       enumerate_rational_members(family(3, TriangleVariant::part2, 1, 0, 1, 1)));
    auto neg = classify_real_solutions(family(3, TriangleVariant::part2, -1, 0, 1, 1),
                                       enumerate_rational_members(family(3, TriangleVariant::part2, -1, 0, 1, 1)));
    CHECK(pos[0].solitary + neg[0].solitary == 2);
}

TEST_CASE("part 2, even k has no members") {
    auto sols = enumerate_rational_members(family(4, TriangleVariant::part2, 1, 0, 1, 1));
    CHECK(sols.empty());
}

TEST_CASE("random tuples: oracle agreement, parity and the even-k half") {
    std::mt19937 rng(20261016);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    auto draw = [&] {
        int n;
        do n = num(rng);
        while (n == 0);
        return frac(n, den(rng));
    };
    for (int k : {2, 3}) {
        int done = 0, halves = 0;
        while (done < 20) {
            TriangleFamily fam{k, TriangleVariant::part1, draw(), draw(), draw(), draw()};
            std::vector<TriangleSolution> sols;
            try {
                sols = enumerate_rational_members(fam);
            } catch (const NonGenericCoefficients&) {
                continue;
            }
            ++done;
            CHECK(static_cast<int>(sols.size()) == k);
            auto orc = brute_force_oracle(fam);
            CHECK(orc.count == k);
            CHECK(orc.real_count == real_count(sols));
            CHECK(real_count(sols) % 2 == k % 2);
            // oracle solutions match the fast path value by value
            for (auto& os : orc.real_solutions) {
                bool found = false;
                for (auto& s : sols)
                    if (s.real() && compare(s.value(k), os.back()) == 0) found = true;
                CHECK(found);
            }
            auto census = classify_real_solutions(fam, sols);
            if (k == 2 && census.size() == 2) {
                // the critical value of P is +s or -s; the node is solitary iff |P| <= s nearby,
                // which happens for both members when c01^2 < s^2 and for exactly one otherwise
                int odd = (census[0].solitary % 2) + (census[1].solitary % 2);
                bool inside = fam.c01 * fam.c01 < 4 * fam.c00 * fam.c02;
                CHECK(odd == (inside ? 2 : 1));
                halves += !inside;
            }
            if (k == 3)
                for (auto& c : census) CHECK(c.solitary % 2 == 0);
        }
        if (k == 2) CHECK(halves > 0);
    }
}
