#include "welsch/modgcd.hpp"

#include "welsch/errors.hpp"

namespace welsch {

namespace {

void trim(PolyPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

struct Piece {
    UniPoly m;
    PolyPoly p;
};

// Split until the leading coefficient is a unit or the polynomial is zero.
void normalize(const UniPoly& m, PolyPoly p, std::vector<Piece>& out) {
    if (m.degree() <= 0) return;
    p = reduce_mod(p, m);
    if (p.empty()) {
        out.push_back({m, {}});
        return;
    }
    UniPoly g = gcd(p.back(), m);
    if (g.degree() <= 0) {
        out.push_back({m, std::move(p)});
        return;
    }
    UniPoly rest = exact_div(m, g).monic();
    // modulo g the leading coefficient vanishes
    PolyPoly low(p.begin(), p.end() - 1);
    normalize(g, low, out);
    if (rest.degree() > 0) normalize(rest, std::move(p), out);
}

PolyPoly make_monic(const PolyPoly& p, const UniPoly& m) {
    if (p.empty()) return p;
    UniPoly inv = inverse_mod(p.back(), m);
    PolyPoly r;
    for (auto& c : p) r.push_back((c * inv) % m);
    return r;
}

}  // namespace

PolyPoly reduce_mod(const PolyPoly& a, const UniPoly& m) {
    PolyPoly r;
    r.reserve(a.size());
    for (auto& c : a) r.push_back(m.degree() > 0 ? c % m : UniPoly());
    trim(r);
    return r;
}

std::pair<PolyPoly, PolyPoly> divmod_mod(const PolyPoly& a0, const PolyPoly& b0, const UniPoly& m) {
    PolyPoly a = reduce_mod(a0, m), b = reduce_mod(b0, m);
    if (b.empty()) throw ZeroInput("divmod_mod: zero divisor");
    UniPoly inv = inverse_mod(b.back(), m);
    int db = static_cast<int>(b.size()) - 1;
    PolyPoly q(a.size() > b.size() ? a.size() - b.size() + 1 : 1);
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        if (a[i].is_zero()) continue;
        UniPoly f = (a[i] * inv) % m;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) a[i - db + j] = (a[i - db + j] - f * b[j]) % m;
    }
    trim(a);
    trim(q);
    return {q, a};
}

PolyPoly mul_mod(const PolyPoly& a, const PolyPoly& b, const UniPoly& m) {
    if (a.empty() || b.empty()) return {};
    PolyPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return reduce_mod(r, m);
}

std::vector<ModBranch> gcd_mod(const UniPoly& m0, const PolyPoly& a0, const PolyPoly& b0) {
    struct Task {
        UniPoly m;
        PolyPoly a, b;
    };
    std::vector<ModBranch> out;
    std::vector<Task> work{{m0.monic(), a0, b0}};
    while (!work.empty()) {
        Task t = std::move(work.back());
        work.pop_back();
        std::vector<Piece> bs;
        normalize(t.m, t.b, bs);
        for (auto& bp : bs) {
            if (bp.p.empty()) {
                std::vector<Piece> as;
                normalize(bp.m, t.a, as);
                for (auto& ap : as) out.push_back({ap.m, make_monic(ap.p, ap.m)});
                continue;
            }
            PolyPoly r = divmod_mod(t.a, bp.p, bp.m).second;
            work.push_back({bp.m, bp.p, std::move(r)});
        }
    }
    return out;
}

std::vector<ModBranch> gcd_mod(const UniPoly& m, const std::vector<PolyPoly>& polys) {
    std::vector<ModBranch> cur{{m.monic(), {}}};
    for (auto& p : polys) {
        std::vector<ModBranch> next;
        for (auto& br : cur) {
            auto parts = gcd_mod(br.modulus, br.poly, p);
            next.insert(next.end(), parts.begin(), parts.end());
        }
        cur = std::move(next);
    }
    return cur;
}

std::pair<UniPoly, UniPoly> split_mod(const UniPoly& m, const UniPoly& c) {
    UniPoly g = gcd(c % m, m);  // equals monic m when c vanishes modulo m
    return {g, exact_div(m, g).monic()};
}

}  // namespace welsch
