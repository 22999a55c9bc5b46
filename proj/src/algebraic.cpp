#include "welsch/algebraic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>

#include "welsch/errors.hpp"
#include "welsch/linalg.hpp"
#include "welsch/modgcd.hpp"
#include "welsch/resultant.hpp"

namespace welsch {

namespace {

class Mpfr {
  public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return v_; }

  private:
    mpfr_t v_;
};

// Sign of q on [lo, hi] by outward-rounded interval Horner at precision prec;
// 0 when the enclosure contains zero.
int enclosure_sign(const UniPoly& q, const Rat& lo, const Rat& hi, mpfr_prec_t prec) {
    Mpfr xl(prec), xh(prec), rl(prec), rh(prec), t(prec), nl(prec), nh(prec);
    mpfr_set_q(xl.get(), lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(xh.get(), hi.get_mpq_t(), MPFR_RNDU);
    mpfr_set_zero(rl.get(), 1);
    mpfr_set_zero(rh.get(), 1);
    for (int i = q.degree(); i >= 0; --i) {
        mpfr_ptr a[2] = {rl.get(), rh.get()}, b[2] = {xl.get(), xh.get()};
        mpfr_set_inf(nl.get(), 1);
        mpfr_set_inf(nh.get(), -1);
        for (auto u : a)
            for (auto v : b) {
                mpfr_mul(t.get(), u, v, MPFR_RNDD);
                mpfr_min(nl.get(), nl.get(), t.get(), MPFR_RNDD);
                mpfr_mul(t.get(), u, v, MPFR_RNDU);
                mpfr_max(nh.get(), nh.get(), t.get(), MPFR_RNDU);
            }
        mpq_srcptr c = q.coeffs()[i].get_mpq_t();
        mpfr_set_q(t.get(), c, MPFR_RNDD);
        mpfr_add(rl.get(), nl.get(), t.get(), MPFR_RNDD);
        mpfr_set_q(t.get(), c, MPFR_RNDU);
        mpfr_add(rh.get(), nh.get(), t.get(), MPFR_RNDU);
    }
    if (mpfr_sgn(rl.get()) > 0) return 1;
    if (mpfr_sgn(rh.get()) < 0) return -1;
    return 0;
}

}  // namespace

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
    Rat p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
    return a * Interval{1 / b.hi, 1 / b.lo};
}

Interval eval(const UniPoly& p, const Interval& x) {
    Interval r{0, 0};
    for (int i = p.degree(); i >= 0; --i) {
        r = r * x;
        r.lo += p.coeffs()[i];
        r.hi += p.coeffs()[i];
    }
    return r;
}

namespace {

Interval ipow(const Interval& x, int e) {
    Interval r{1, 1};
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
}

}  // namespace

Interval eval(const BiPoly& f, const Interval& x, const Interval& y) {
    Interval r{0, 0};
    for (auto& [e, c] : f.terms()) r = r + Interval{c, c} * ipow(x, e.first) * ipow(y, e.second);
    return r;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
    std::vector<UniPoly> seq;
    if (p.is_zero()) return seq;
    seq.push_back(p.positive_primitive());
    UniPoly d = p.derivative().positive_primitive();
    while (!d.is_zero()) {
        seq.push_back(d);
        UniPoly r = (-(seq[seq.size() - 2] % d)).positive_primitive();
        d = std::move(r);
    }
    return seq;
}

int sign_variations(const std::vector<UniPoly>& seq, const Rat& x) {
    int v = 0, last = 0;
    for (auto& q : seq) {
        int s = sgn(q.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int sturm_count(const std::vector<UniPoly>& seq, const Rat& lo, const Rat& hi) {
    return sign_variations(seq, lo) - sign_variations(seq, hi);
}

AlgebraicReal::AlgebraicReal(const UniPoly& p, const Rat& lo, const Rat& hi) {
    if (p.degree() < 1) throw std::invalid_argument("AlgebraicReal: constant defining polynomial");
    if (!(lo < hi)) throw std::invalid_argument("AlgebraicReal: empty interval");
    p_ = squarefree_part(p).primitive();
    if (sgn(p_.eval(lo)) == 0 || sgn(p_.eval(hi)) == 0)
        throw std::invalid_argument("AlgebraicReal: interval endpoint is a root");
    if (sturm_count(sturm_sequence(p_), lo, hi) != 1)
        throw std::invalid_argument("AlgebraicReal: interval does not isolate exactly one root");
    lo_ = lo;
    hi_ = hi;
}

AlgebraicReal AlgebraicReal::rational(const Rat& r) {
    return AlgebraicReal(UniPoly::linear_root(r).primitive(), r - 1, r + 1, true);
}

std::optional<Rat> AlgebraicReal::rational_value() const {
    if (p_.degree() != 1) return std::nullopt;
    return -p_.coef(0) / p_.coef(1);
}

double AlgebraicReal::approx() const {
    auto r = refined_to(Rat(1, 1 << 30));
    return r.midpoint().get_d();
}

AlgebraicReal AlgebraicReal::refined() const {
    if (auto v = rational_value()) {
        Rat w = (hi_ - lo_) / 4;
        return AlgebraicReal(p_, *v - w, *v + w, true);
    }
    Rat m = midpoint();
    int sm = sgn(p_.eval(m));
    if (sm == 0) {
        // m is a rational root of a factor; shrink around it keeping it inside
        Rat w = (hi_ - lo_) / 4;
        Rat a = m - w, b = m + w;
        // p squarefree: no other root can sit at m, and a smaller window still isolates
        return AlgebraicReal(p_, a, b, true);
    }
    if (sgn(p_.eval(lo_)) != sm) return AlgebraicReal(p_, lo_, m, true);
    return AlgebraicReal(p_, m, hi_, true);
}

AlgebraicReal AlgebraicReal::refined_to(const Rat& width) const {
    AlgebraicReal a = *this;
    while (a.hi_ - a.lo_ > width) a = a.refined();
    return a;
}

int AlgebraicReal::sign_of(const UniPoly& q) const {
    if (q.is_zero()) return 0;
    if (auto v = rational_value()) return sgn(q.eval(*v));
    UniPoly r = q % p_;
    if (r.is_zero()) return 0;
    // refinement with rigorous floating enclosures settles most nonzero signs
    // before the exact gcd test
    AlgebraicReal a = *this;
    mpfr_prec_t prec = 128;
    for (int i = 0; i < 96; ++i) {
        if (int s = enclosure_sign(q, a.lo(), a.hi(), prec)) return s;
        for (int j = 0; j < 4; ++j) a = a.refined();
        prec += 16;
    }
    UniPoly g = gcd(p_, r);
    if (g.degree() >= 1 && sgn(g.eval(lo_)) != sgn(g.eval(hi_))) return 0;
    for (;;) {
        if (int s = enclosure_sign(q, a.lo(), a.hi(), prec)) return s;
        Interval v = eval(r, a.interval());
        if (sgn(v.lo) > 0) return 1;
        if (sgn(v.hi) < 0) return -1;
        a = a.refined();
        prec += 16;
    }
}

int AlgebraicReal::compare(const Rat& r) const { return sign_of(UniPoly::linear_root(r)); }

std::vector<AlgebraicReal> isolate_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw ZeroInput("isolate_real_roots: zero polynomial");
    std::vector<AlgebraicReal> out;
    UniPoly s = squarefree_part(p).primitive();
    if (s.degree() < 1) return out;
    auto seq = sturm_sequence(s);
    // Cauchy bound rounded up to a power of two
    Rat m = 0;
    for (auto& c : s.coeffs()) m = std::max(m, Rat(abs(c / s.lc())));
    Rat bound = 1;
    while (bound <= m + 1) bound *= 2;
    struct Box {
        Rat lo, hi;
        int n;
    };
    std::vector<Box> work{{-bound, bound, sturm_count(seq, -bound, bound)}};
    while (!work.empty()) {
        Box b = work.back();
        work.pop_back();
        if (b.n == 0) continue;
        if (b.n == 1) {
            // the Sturm count above certifies the interval
            out.push_back(AlgebraicReal(s, b.lo, b.hi, true));
            continue;
        }
        Rat w = b.hi - b.lo;
        Rat cut = (b.lo + b.hi) / 2;
        for (int k = 3; sgn(s.eval(cut)) == 0; ++k) cut = b.lo + w / k;
        int left = sturm_count(seq, b.lo, cut);
        work.push_back({cut, b.hi, b.n - left});
        work.push_back({b.lo, cut, left});
    }
    std::sort(out.begin(), out.end(), [](const AlgebraicReal& a, const AlgebraicReal& b) { return a.hi() <= b.lo(); });
    return out;
}

std::vector<RootWithMultiplicity> real_roots_with_multiplicity(const UniPoly& p) {
    std::vector<RootWithMultiplicity> out;
    for (auto& [f, e] : squarefree_decomposition(p))
        for (auto& r : isolate_real_roots(f)) out.push_back({r, e});
    std::sort(out.begin(), out.end(),
              [](const RootWithMultiplicity& a, const RootWithMultiplicity& b) { return a.root.hi() <= b.root.lo(); });
    return out;
}

int count_distinct_real_roots(const UniPoly& p) {
    UniPoly s = squarefree_part(p);
    if (s.degree() < 1) return 0;
    auto seq = sturm_sequence(s);
    // signs at -inf / +inf from leading coefficients
    auto at_inf = [&](bool neg) {
        int v = 0, last = 0;
        for (auto& q : seq) {
            int sg = sgn(q.lc());
            if (neg && q.degree() % 2 == 1) sg = -sg;
            if (last != 0 && sg != last) ++v;
            last = sg;
        }
        return v;
    };
    return at_inf(true) - at_inf(false);
}

std::string to_string(Sign s) {
    switch (s) {
        case Sign::negative: return "negative";
        case Sign::zero: return "zero";
        default: return "positive";
    }
}

namespace {

Sign to_sign(int s) { return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero); }

PolyPoly constant_coeffs(const UniPoly& q) {
    PolyPoly r;
    for (auto& c : q.coeffs()) r.push_back(UniPoly::constant(c));
    return r;
}

}  // namespace

Sign certified_sign(const BiPoly& expr, const AlgebraicReal& x, const AlgebraicReal& y) {
    if (expr.is_zero()) return Sign::zero;
    auto xv = x.rational_value();
    auto yv = y.rational_value();
    if (yv) return to_sign(x.sign_of(eval_y(expr, *yv)));
    if (xv) return to_sign(y.sign_of(eval_x(expr, *xv)));

    PolyPoly e = as_poly_in_y(expr);
    PolyPoly q = constant_coeffs(y.poly());
    UniPoly r = resultant(e, q);
    if (x.sign_of(r) == 0) {
        // Some root of q is shared with expr(x, .); decide whether it is y.
        for (auto& br : gcd_mod(x.poly(), e, q)) {
            if (br.modulus.degree() < 1) continue;
            // only the field factor that has x as a root matters
            if (sgn(br.modulus.eval(x.lo())) == sgn(br.modulus.eval(x.hi()))) continue;
            if (br.poly.size() < 2) break;
            // The gcd divides q, so inside y's isolating interval its only
            // possible root is y itself, and that root is simple.
            UniPoly at_lo, at_hi;
            for (size_t i = 0; i < br.poly.size(); ++i) {
                at_lo += br.poly[i] * pow(y.lo(), static_cast<int>(i));
                at_hi += br.poly[i] * pow(y.hi(), static_cast<int>(i));
            }
            if (x.sign_of(at_lo) != x.sign_of(at_hi)) return Sign::zero;
            break;
        }
    }
    AlgebraicReal a = x, b = y;
    for (;;) {
        Interval v = eval(expr, a.interval(), b.interval());
        if (sgn(v.lo) > 0) return Sign::positive;
        if (sgn(v.hi) < 0) return Sign::negative;
        a = a.refined();
        b = b.refined();
    }
}

int compare(const AlgebraicReal& a0, const AlgebraicReal& b0) {
    // both intervals isolate a single root of g, so a common root inside the
    // overlap is the value of both
    UniPoly g = gcd(a0.poly(), b0.poly());
    if (g.degree() >= 1 && a0.sign_of(g) == 0 && b0.sign_of(g) == 0) {
        Rat lo = std::max(a0.lo(), b0.lo()), hi = std::min(a0.hi(), b0.hi());
        if (lo < hi && sturm_count(sturm_sequence(g), lo, hi) >= 1) return 0;
    }
    AlgebraicReal a = a0, b = b0;
    for (;;) {
        if (a.hi() <= b.lo()) return -1;
        if (b.hi() <= a.lo()) return 1;
        a = a.refined();
        b = b.refined();
    }
}

AlgebraicReal image(const AlgebraicReal& a, const UniPoly& num0, const UniPoly& den0) {
    if (a.sign_of(den0) == 0) throw std::domain_error("image: denominator vanishes");
    if (auto v = a.rational_value()) return AlgebraicReal::rational(num0.eval(*v) / den0.eval(*v));
    // drop the roots of p where den vanishes; a stays isolated
    UniPoly p = a.poly();
    UniPoly g = gcd(den0 % p, p);
    if (g.degree() > 0) p = exact_div(p, g);
    AlgebraicReal b(p, a.lo(), a.hi());
    if (auto v = b.rational_value()) return AlgebraicReal::rational(num0.eval(*v) / den0.eval(*v));
    UniPoly num = num0 % p, den = den0 % p;
    if (num.is_constant() && den.is_constant()) return AlgebraicReal::rational(num.coef(0) / den.coef(0));
    // minimal polynomial of w = num / den in Q[x]/(p): first dependency among its powers
    UniPoly w = (num * inverse_mod(den, p)) % p;
    const int n = p.degree();
    std::vector<UniPoly> pw{UniPoly::constant(1)};
    UniPoly r;
    for (int k = 1; k <= n && r.is_zero(); ++k) {
        pw.push_back((pw.back() * w) % p);
        Mat m(n, Vec(k + 1));
        for (int j = 0; j <= k; ++j)
            for (int i = 0; i < n; ++i) m[i][j] = pw[j].coef(i);
        auto ker = nullspace(m, k + 1);
        if (!ker.empty()) r = UniPoly(ker[0]);
    }
    r = squarefree_part(r).primitive();
    auto seq = sturm_sequence(r);
    for (;;) {
        Interval d = eval(den, b.interval());
        if (!d.contains_zero()) {
            Interval v = eval(num, b.interval()) / d;
            if (v.lo < v.hi && sgn(r.eval(v.lo)) != 0 && sgn(r.eval(v.hi)) != 0 &&
                sturm_count(seq, v.lo, v.hi) == 1)
                return AlgebraicReal(r, v.lo, v.hi);
        }
        b = b.refined();
    }
}

}  // namespace welsch
