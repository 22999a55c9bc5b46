#include "welsch/unipoly.hpp"

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "welsch/errors.hpp"

namespace welsch {

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::monomial(const Rat& c, int degree) {
    std::vector<Rat> v(degree + 1);
    v[degree] = c;
    return UniPoly(std::move(v));
}

Rat UniPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
    return r;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    UniPoly r = *this;
    Rat inv = 1 / lc();
    for (auto& c : r.c_) c *= inv;
    return r;
}

UniPoly UniPoly::positive_primitive() const {
    if (is_zero()) return {};
    Int den = 1, num = 0;
    for (auto& c : c_) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    for (auto& c : c_) {
        Int v = c.get_num() * (den / c.get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
    }
    UniPoly r = *this;
    Rat s(den, num);
    s.canonicalize();
    for (auto& c : r.c_) c *= s;
    return r;
}

UniPoly UniPoly::primitive() const {
    UniPoly r = positive_primitive();
    if (!r.is_zero() && sgn(r.lc()) < 0) r *= Rat(-1);
    return r;
}

UniPoly UniPoly::compose_linear(const Rat& a, const Rat& b) const {
    UniPoly lin({b, a});
    UniPoly r;
    for (int i = degree(); i >= 0; --i) r = r * lin + constant(c_[i]);
    return r;
}

UniPoly UniPoly::compose(const UniPoly& q) const {
    UniPoly r;
    for (int i = degree(); i >= 0; --i) r = r * q + constant(c_[i]);
    return r;
}

UniPoly UniPoly::reversed() const {
    std::vector<Rat> v(c_.rbegin(), c_.rend());
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rat& s) {
    if (sgn(s) == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (sgn(c_[i]) == 0) continue;
        Rat c = c_[i];
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        c = abs(c);
        if (i == 0 || c != 1) os << to_string(c);
        if (i > 0) os << var;
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

UniPoly pow(const UniPoly& p, int e) {
    UniPoly r = UniPoly::constant(1), b = p;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * b;
        if (e > 1) b = b * b;
    }
    return r;
}

namespace {

// Integer numerators over a common denominator.
std::vector<Int> clear_denominators(const UniPoly& p, Int& den) {
    den = 1;
    for (auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Int> out;
    for (auto& c : p.coeffs()) out.push_back(c.get_num() * (den / c.get_den()));
    return out;
}

}  // namespace

// Fraction-free pseudo-division over Z with one rational normalisation at the
// end: L^e A = Q B + R with L = lc(B), e = deg A - deg B + 1.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw ZeroInput("polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    Int da, db;
    std::vector<Int> r = clear_denominators(a, da), bc = clear_denominators(b, db);
    int n = b.degree();
    const Int& lead = bc[n];
    std::vector<Int> q(a.degree() - n + 1);
    Int scale = 1;
    for (int i = a.degree(); i >= n; --i) {
        Int f = r[i];
        for (auto& c : q) c *= lead;
        for (int j = 0; j < i; ++j) r[j] *= lead;
        scale *= lead;
        q[i - n] = f;
        if (sgn(f) != 0)
            for (int j = 0; j < n; ++j) r[i - n + j] -= f * bc[j];
    }
    // a = (Q db / (da scale)) b + R / (da scale)
    Int qden = da * scale;
    std::vector<Rat> qr(q.size()), rr(n);
    for (size_t i = 0; i < q.size(); ++i) {
        qr[i] = Rat(q[i] * db, qden);
        qr[i].canonicalize();
    }
    for (int i = 0; i < n; ++i) {
        rr[i] = Rat(r[i], qden);
        rr[i].canonicalize();
    }
    return {UniPoly(std::move(qr)), UniPoly(std::move(rr))};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

namespace {

// Arithmetic modulo the prime 2^61 - 1.
constexpr std::uint64_t kPrime = (std::uint64_t(1) << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mul_mod(a, a))
        if (e & 1) r = mul_mod(r, a);
    return r;
}

std::uint64_t reduce(const Int& z) {
    Int r = z % Int(static_cast<unsigned long>(kPrime));
    if (r < 0) r += static_cast<unsigned long>(kPrime);
    return r.get_ui();
}

// Image modulo the prime; nullopt when a denominator or the leading
// coefficient vanishes there.
std::optional<std::vector<std::uint64_t>> image(const UniPoly& p) {
    std::vector<std::uint64_t> out;
    for (auto& c : p.coeffs()) {
        std::uint64_t d = reduce(c.get_den());
        if (d == 0) return std::nullopt;
        out.push_back(mul_mod(reduce(c.get_num()), pow_mod(d, kPrime - 2)));
    }
    if (out.empty() || out.back() == 0) return std::nullopt;
    return out;
}

// True when the images are coprime; then a and b are coprime over Q, since the
// degrees are preserved and the gcd can only grow under reduction.
bool coprime_modulo_prime(const UniPoly& a, const UniPoly& b) {
    auto ia = image(a), ib = image(b);
    if (!ia || !ib) return false;
    std::vector<std::uint64_t> u = *ia, v = *ib;
    auto trim = [](std::vector<std::uint64_t>& w) {
        while (!w.empty() && w.back() == 0) w.pop_back();
    };
    while (!v.empty()) {
        std::uint64_t inv = pow_mod(v.back(), kPrime - 2);
        while (u.size() >= v.size()) {
            std::uint64_t q = mul_mod(u.back(), inv);
            size_t shift = u.size() - v.size();
            for (size_t i = 0; i < v.size(); ++i) u[shift + i] = (u[shift + i] + kPrime - mul_mod(q, v[i])) % kPrime;
            trim(u);
            if (u.empty()) break;
        }
        std::swap(u, v);
    }
    return u.size() == 1;
}

}  // namespace

UniPoly gcd(const UniPoly& a0, const UniPoly& b0) {
    if (a0.degree() > 0 && b0.degree() > 0 && coprime_modulo_prime(a0, b0)) return UniPoly::constant(1);
    UniPoly a = a0.monic(), b = b0.monic();
    while (!b.is_zero()) {
        UniPoly r = (a % b).monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

UniPoly ext_gcd(const UniPoly& a0, const UniPoly& b0, UniPoly& s, UniPoly& t) {
    UniPoly a = a0, b = b0;
    UniPoly s0 = UniPoly::constant(1), s1, t0, t1 = UniPoly::constant(1);
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        UniPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (a.is_zero()) {
        s = UniPoly();
        t = UniPoly();
        return a;
    }
    Rat inv = 1 / a.lc();
    s = s0 * inv;
    t = t0 * inv;
    return a * inv;
}

UniPoly inverse_mod(const UniPoly& a, const UniPoly& m) {
    UniPoly s, t;
    UniPoly g = ext_gcd(a % m, m, s, t);
    if (g.degree() != 0) throw ZeroInput("inverse_mod: not invertible");
    return s % m;
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.degree() <= 0) return p.is_zero() ? p : UniPoly::constant(1);
    return exact_div(p, gcd(p, p.derivative())).monic();
}

bool is_squarefree(const UniPoly& p) { return gcd(p, p.derivative()).degree() <= 0; }

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    std::vector<std::pair<UniPoly, int>> out;
    if (p.degree() <= 0) return out;
    UniPoly a = p.monic();
    UniPoly b = a.derivative();
    UniPoly c = gcd(a, b);
    UniPoly w = exact_div(a, c);
    UniPoly y = exact_div(b, c);
    int i = 1;
    for (;;) {
        UniPoly z = y - w.derivative();
        if (w.degree() <= 0) break;
        UniPoly g = gcd(w, z);
        if (g.degree() > 0) out.emplace_back(g, i);
        w = exact_div(w, g);
        y = exact_div(z, g);
        ++i;
    }
    return out;
}

int multiplicity(const UniPoly& p, const UniPoly& f) {
    if (f.degree() <= 0) throw std::invalid_argument("multiplicity: constant factor");
    if (p.is_zero()) throw std::invalid_argument("multiplicity: zero polynomial");
    int e = 0;
    UniPoly q = p;
    for (;;) {
        auto [d, r] = divmod(q, f);
        if (!r.is_zero()) return e;
        q = std::move(d);
        ++e;
    }
}

UniPoly interpolate(const std::vector<std::pair<Rat, Rat>>& samples, int bound) {
    if (bound < 0) throw std::invalid_argument("interpolate: negative bound");
    if (static_cast<int>(samples.size()) < bound + 1)
        throw std::invalid_argument("interpolate: fewer than bound + 1 samples");
    int n = bound + 1;
    for (int i = 0; i < static_cast<int>(samples.size()); ++i)
        for (int j = 0; j < i; ++j)
            if (samples[i].first == samples[j].first)
                throw std::invalid_argument("interpolate: repeated abscissa");
    // Newton divided differences on the first n samples.
    std::vector<Rat> dd(n);
    for (int i = 0; i < n; ++i) dd[i] = samples[i].second;
    for (int k = 1; k < n; ++k)
        for (int i = n - 1; i >= k; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (samples[i].first - samples[i - k].first);
    UniPoly p = UniPoly::constant(dd[n - 1]);
    for (int i = n - 2; i >= 0; --i)
        p = p * UniPoly::linear_root(samples[i].first) + UniPoly::constant(dd[i]);
    for (size_t i = n; i < samples.size(); ++i)
        if (p.eval(samples[i].first) != samples[i].second)
            throw InconsistentSamples("interpolant of degree <= " + std::to_string(bound) +
                                      " misses sample " + std::to_string(i));
    return p;
}

}  // namespace welsch
