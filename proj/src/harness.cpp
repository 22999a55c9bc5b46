#include "welsch/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

#include "welsch/errors.hpp"

namespace welsch {

namespace {

void expect(bool ok, const std::string& what) {
    if (!ok) throw SchemaError("configuration: " + what);
}

void allow_keys(const json& j, std::initializer_list<const char*> keys, const std::string& where) {
    expect(j.is_object(), where + " must be an object");
    for (auto& [k, v] : j.items()) {
        bool known = std::any_of(keys.begin(), keys.end(), [&](const char* s) { return k == s; });
        expect(known, "unknown key \"" + k + "\" in " + where);
    }
}

Rat number(const json& j, const std::string& where) {
    expect(j.is_string(), where + " must be an exact string \"p/q\"");
    return parse_rat(j.get<std::string>());
}

int integer(const json& j, const std::string& where) {
    expect(j.is_number_integer(), where + " must be an integer");
    return j.get<int>();
}

std::vector<Rat> numbers(const json& j, const std::string& where) {
    expect(j.is_array(), where + " must be an array");
    std::vector<Rat> out;
    for (size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

std::pair<Rat, Rat> pair_of(const json& j, const std::string& where) {
    auto v = numbers(j, where);
    expect(v.size() == 2, where + " must have two entries");
    return {v[0], v[1]};
}

std::pair<std::vector<Rat>, std::vector<Rat>> arc_of(const json& j, const std::string& where) {
    allow_keys(j, {"x", "y"}, where);
    expect(j.contains("x") && j.contains("y"), where + " needs \"x\" and \"y\"");
    return {numbers(j["x"], where + ".x"), numbers(j["y"], where + ".y")};
}

std::vector<CRat> combine(const std::vector<Rat>& re, const std::vector<Rat>& im) {
    std::vector<CRat> out(std::max(re.size(), im.size()));
    for (size_t i = 0; i < re.size(); ++i) out[i].re = re[i];
    for (size_t i = 0; i < im.size(); ++i) out[i].im = im[i];
    return out;
}

json strings(const std::vector<Rat>& v) {
    json a = json::array();
    for (auto& r : v) a.push_back(to_string(r));
    return a;
}

std::vector<Rat> part(const std::vector<CRat>& v, bool imaginary) {
    std::vector<Rat> out;
    for (auto& c : v) out.push_back(imaginary ? c.im : c.re);
    return out;
}

json interval(const AlgebraicReal& a) {
    if (auto v = a.rational_value()) return json::array({to_string(*v), to_string(*v)});
    // outward rounding onto the grid 2^-24 keeps the enclosure and short numbers
    const Rat grid(1 << 24);
    auto r = a.refined_to(1 / grid);
    Int lo, hi;
    mpz_fdiv_q(lo.get_mpz_t(), Rat(r.lo() * grid).get_num_mpz_t(), Rat(r.lo() * grid).get_den_mpz_t());
    mpz_cdiv_q(hi.get_mpz_t(), Rat(r.hi() * grid).get_num_mpz_t(), Rat(r.hi() * grid).get_den_mpz_t());
    return json::array({to_string(Rat(lo) / grid), to_string(Rat(hi) / grid)});
}

std::string constraint_name(bool imaginary, int index) {
    return std::string(imaginary ? "imaginary[" : "real[") + std::to_string(index) + "]";
}

std::vector<CRat> lerp(std::vector<CRat> a, std::vector<CRat> b, const Rat& t) {
    size_t n = std::max(a.size(), b.size());
    a.resize(n);
    b.resize(n);
    std::vector<CRat> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = a[i] + CRat(t) * (b[i] - a[i]);
    return out;
}

Rat draw(std::mt19937_64& rng, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> n(lo, hi), d(1, 5);
    int num = n(rng);
    return frac(num, d(rng));
}

}  // namespace

ConfigSpec parse_config(const json& j) {
    allow_keys(j, {"degree", "real_constraints", "imaginary_constraints", "phi", "allow_noninvariant", "comment"},
               "configuration");
    ConfigSpec spec;
    expect(j.contains("degree"), "missing \"degree\"");
    spec.degree = integer(j["degree"], "degree");
    if (j.contains("phi")) spec.phi = integer(j["phi"], "phi");
    if (j.contains("allow_noninvariant")) {
        expect(j["allow_noninvariant"].is_boolean(), "allow_noninvariant must be a boolean");
        spec.allow_noninvariant = j["allow_noninvariant"].get<bool>();
    }
    if (j.contains("real_constraints")) {
        const json& rs = j["real_constraints"];
        expect(rs.is_array(), "real_constraints must be an array");
        for (size_t i = 0; i < rs.size(); ++i) {
            std::string where = "real_constraints[" + std::to_string(i) + "]";
            allow_keys(rs[i], {"center", "order", "arc"}, where);
            expect(rs[i].contains("center") && rs[i].contains("order"), where + " needs \"center\" and \"order\"");
            ConstraintSpec c;
            c.order = integer(rs[i]["order"], where + ".order");
            auto [x, y] = pair_of(rs[i]["center"], where + ".center");
            c.cx = x;
            c.cy = y;
            if (rs[i].contains("arc")) {
                auto [ax, ay] = arc_of(rs[i]["arc"], where + ".arc");
                c.x = combine(ax, {});
                c.y = combine(ay, {});
            } else {
                expect(c.order == 1, where + " needs an \"arc\" for order > 1");
                c.x = {CRat(1)};
            }
            spec.real_constraints.push_back(c);
        }
    }
    if (j.contains("imaginary_constraints")) {
        const json& is = j["imaginary_constraints"];
        expect(is.is_array(), "imaginary_constraints must be an array");
        for (size_t i = 0; i < is.size(); ++i) {
            std::string where = "imaginary_constraints[" + std::to_string(i) + "]";
            allow_keys(is[i], {"center_re", "center_im", "order", "arc_re", "arc_im"}, where);
            for (const char* key : {"center_re", "center_im", "order", "arc_re"})
                expect(is[i].contains(key), where + " needs \"" + key + "\"");
            ConstraintSpec c;
            c.order = integer(is[i]["order"], where + ".order");
            auto [xr, yr] = pair_of(is[i]["center_re"], where + ".center_re");
            auto [xi, yi] = pair_of(is[i]["center_im"], where + ".center_im");
            c.cx = CRat(xr, xi);
            c.cy = CRat(yr, yi);
            auto [axr, ayr] = arc_of(is[i]["arc_re"], where + ".arc_re");
            std::vector<Rat> axi, ayi;
            if (is[i].contains("arc_im")) std::tie(axi, ayi) = arc_of(is[i]["arc_im"], where + ".arc_im");
            c.x = combine(axr, axi);
            c.y = combine(ayr, ayi);
            spec.imaginary_constraints.push_back(c);
        }
    }
    return spec;
}

json to_json(const ConfigSpec& spec) {
    json j;
    j["degree"] = spec.degree;
    j["phi"] = spec.phi;
    if (spec.allow_noninvariant) j["allow_noninvariant"] = true;
    json rs = json::array(), is = json::array();
    for (auto& c : spec.real_constraints)
        rs.push_back({{"center", {to_string(c.cx.re), to_string(c.cy.re)}},
                      {"order", c.order},
                      {"arc", {{"x", strings(part(c.x, false))}, {"y", strings(part(c.y, false))}}}});
    for (auto& c : spec.imaginary_constraints)
        is.push_back({{"center_re", {to_string(c.cx.re), to_string(c.cy.re)}},
                      {"center_im", {to_string(c.cx.im), to_string(c.cy.im)}},
                      {"order", c.order},
                      {"arc_re", {{"x", strings(part(c.x, false))}, {"y", strings(part(c.y, false))}}},
                      {"arc_im", {{"x", strings(part(c.x, true))}, {"y", strings(part(c.y, true))}}}});
    j["real_constraints"] = rs;
    j["imaginary_constraints"] = is;
    return j;
}

Configuration build(const ConfigSpec& spec) {
    Configuration cfg;
    cfg.degree = spec.degree;
    cfg.phi = spec.phi;
    cfg.allow_noninvariant = spec.allow_noninvariant;
    auto make = [](const ConstraintSpec& c) {
        expect(c.order >= 1, "constraint order must be positive");
        int len = static_cast<int>(std::max(c.x.size(), c.y.size()));
        return Constraint{make_arc(c.cx, c.cy, c.x, c.y, std::max(c.order, len) + 4), c.order};
    };
    for (auto& c : spec.real_constraints) {
        expect(c.cx.is_real() && c.cy.is_real(), "real constraint with a non-real centre");
        cfg.real_constraints.push_back(make(c));
    }
    for (auto& c : spec.imaginary_constraints) cfg.imaginary_constraints.push_back(make(c));
    return cfg;
}

Signature signature(const ConfigSpec& spec) {
    Signature s;
    auto tally = [&](std::array<int, 4>& slots, int order) {
        if (order >= 1 && order <= 4)
            ++slots[order - 1];
        else
            ++s.other;
    };
    for (auto& c : spec.real_constraints) tally(s.real, c.order);
    for (auto& c : spec.imaginary_constraints) tally(s.imaginary, c.order);
    return s;
}

ConfigSpec random_config(int r1, int r3, const std::array<int, 4>& m, std::mt19937_64& rng) {
    ConfigSpec spec;
    auto real = [&](int k) {
        ConstraintSpec c;
        c.order = k;
        c.cx = draw(rng);
        c.cy = draw(rng);
        c.x.push_back(CRat(1));
        for (int i = 1; i < k; ++i) c.x.push_back(CRat(draw(rng)));
        for (int i = 0; i < k; ++i) c.y.push_back(CRat(draw(rng)));
        spec.real_constraints.push_back(c);
    };
    for (int i = 0; i < r1; ++i) real(1);
    for (int i = 0; i < r3; ++i) real(3);
    for (int l = 1; l <= 4; ++l)
        for (int i = 0; i < m[l - 1]; ++i) {
            ConstraintSpec c;
            c.order = l;
            c.cx = CRat(draw(rng), draw(rng, 1, 9));
            c.cy = CRat(draw(rng), draw(rng));
            c.x.push_back(CRat(1));
            for (int j = 1; j < l; ++j) c.x.push_back(CRat(draw(rng), draw(rng)));
            for (int j = 0; j < l; ++j) c.y.push_back(CRat(draw(rng), draw(rng)));
            spec.imaginary_constraints.push_back(c);
        }
    return spec;
}

ConfigSpec random_generic_config(int r1, int r3, const std::array<int, 4>& m, std::mt19937_64& rng,
                                 InvariantReport* report) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        ConfigSpec spec = random_config(r1, r3, m, rng);
        try {
            auto rep = compute_invariant(build(spec), false);
            if (report) *report = std::move(rep);
            return spec;
        } catch (const NonGenericConfiguration&) {
        } catch (const NotSmooth&) {
        } catch (const BalanceViolation&) {
            throw;
        } catch (const SchemaError&) {  // colliding centres
        }
    }
    throw NonGenericConfiguration("no generic sample in 1000 draws");
}

json report_to_json(const InvariantReport& rep) {
    json j;
    j["W"] = rep.W;
    j["W_single_branch"] = rep.W_single_branch;
    j["complex_root_count"] = rep.complex_root_count;
    j["real_root_count"] = rep.real_root_count;
    j["discriminant_degree"] = rep.discriminant_degree;
    j["residual_squarefree"] = rep.residual_squarefree;
    j["diagnostics"] = rep.diagnostics;
    json curves = json::array();
    for (auto& c : rep.curves) {
        json cj;
        if (c.lambda) {
            cj["lambda_interval"] = interval(*c.lambda);
        } else {
            cj["lambda_interval"] = nullptr;
            cj["at_infinity"] = true;
        }
        cj["sign"] = c.sign;
        cj["rational_member"] = c.rational_member;
        if (c.rational_member) cj["member"] = to_string(c.member);
        cj["structural_multiplicity"] = c.structural_multiplicity;
        if (c.node) {
            json nj;
            nj["type"] = to_string(c.node->type);
            if (c.node->location) {
                nj["chart"] = std::string(1, c.node->chart);
                nj["location"] = json::array({interval(c.node->location->first), interval(c.node->location->second)});
            } else {
                nj["location"] = nullptr;
            }
            cj["node"] = nj;
        } else {
            cj["node"] = nullptr;
        }
        json profile = json::object();
        for (auto& p : c.contacts)
            profile[constraint_name(p.imaginary, p.index)] = {{"orders", p.orders}, {"at_least", p.at_least}};
        cj["contact_profile"] = profile;
        curves.push_back(cj);
    }
    j["curves"] = curves;
    return j;
}

ConfigSpec interpolate(const ConfigSpec& a, const ConfigSpec& b, const Rat& t) {
    auto same = [](const std::vector<ConstraintSpec>& u, const std::vector<ConstraintSpec>& v) {
        if (u.size() != v.size()) return false;
        for (size_t i = 0; i < u.size(); ++i)
            if (u[i].order != v[i].order) return false;
        return true;
    };
    if (a.degree != b.degree || a.phi != b.phi || !same(a.real_constraints, b.real_constraints) ||
        !same(a.imaginary_constraints, b.imaginary_constraints))
        throw IncompatibleSignatures("sweep endpoints differ in degree or constraint orders");
    ConfigSpec out = a;
    out.allow_noninvariant = a.allow_noninvariant || b.allow_noninvariant;
    auto mix = [&](std::vector<ConstraintSpec>& dst, const std::vector<ConstraintSpec>& u,
                   const std::vector<ConstraintSpec>& v) {
        for (size_t i = 0; i < u.size(); ++i) {
            dst[i].cx = u[i].cx + CRat(t) * (v[i].cx - u[i].cx);
            dst[i].cy = u[i].cy + CRat(t) * (v[i].cy - u[i].cy);
            dst[i].x = lerp(u[i].x, v[i].x, t);
            dst[i].y = lerp(u[i].y, v[i].y, t);
        }
    };
    mix(out.real_constraints, a.real_constraints, b.real_constraints);
    mix(out.imaginary_constraints, a.imaginary_constraints, b.imaginary_constraints);
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::constant: return "constant";
        case Verdict::nonconstant: return "nonconstant";
        default: return "inconclusive";
    }
}

Verdict sweep_verdict(const std::vector<SweepSample>& samples) {
    std::vector<std::optional<int>> w;
    for (auto& s : samples) w.push_back(s.W);
    return sweep_verdict(w);
}

Verdict sweep_verdict(const std::vector<std::optional<int>>& w) {
    std::set<int> values;
    size_t walls = 0;
    bool adjacent = false;
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i]) {
            values.insert(*w[i]);
            continue;
        }
        ++walls;
        if (i > 0 && !w[i - 1]) adjacent = true;
    }
    if (values.empty() || 5 * walls > w.size()) return Verdict::inconclusive;
    if (values.size() > 1) return Verdict::nonconstant;
    return adjacent ? Verdict::inconclusive : Verdict::constant;
}

SweepReport run_sweep(const ConfigSpec& a, const ConfigSpec& b, int steps) {
    if (steps < 1) throw SchemaError("sweep: steps must be positive");
    // endpoints must be valid configurations; interior failures are walls
    validate(build(a));
    validate(build(b));
    interpolate(a, b, Rat(0));
    SweepReport rep;
    for (int i = 0; i <= steps; ++i) {
        SweepSample s;
        s.t = frac(i, steps);
        try {
            auto r = compute_invariant(build(interpolate(a, b, s.t)), false);
            s.W = r.W;
            s.W_single_branch = r.W_single_branch;
            s.diagnostics = r.diagnostics;
        } catch (const NonGenericConfiguration& e) {
            s.diagnostics = {std::string("wall: ") + e.what()};
        } catch (const NotSmooth& e) {
            s.diagnostics = {std::string("wall: ") + e.what()};
        } catch (const SchemaError& e) {  // colliding centres along the path
            s.diagnostics = {std::string("wall: ") + e.what()};
        }
        rep.samples.push_back(std::move(s));
    }
    rep.verdict = sweep_verdict(rep.samples);
    std::vector<std::optional<int>> single;
    for (auto& s : rep.samples) single.push_back(s.W_single_branch);
    rep.verdict_single_branch = sweep_verdict(single);
    return rep;
}

json to_json(const SweepReport& rep) {
    json j;
    json samples = json::array();
    for (auto& s : rep.samples) {
        json sj;
        sj["t"] = to_string(s.t);
        sj["wall"] = !s.W;
        sj["W"] = s.W ? json(*s.W) : json(nullptr);
        sj["W_single_branch"] = s.W_single_branch ? json(*s.W_single_branch) : json(nullptr);
        sj["diagnostics"] = s.diagnostics;
        samples.push_back(sj);
    }
    j["samples"] = samples;
    j["verdict"] = to_string(rep.verdict);
    j["verdict_single_branch"] = to_string(rep.verdict_single_branch);
    return j;
}

json run_triangle(const TriangleFamily& fam) {
    validate(fam);
    auto sols = enumerate_rational_members(fam);
    auto census = classify_real_solutions(fam, sols);
    json j;
    j["k"] = fam.k;
    j["variant"] = fam.variant == TriangleVariant::part1 ? "part1" : "part2";
    j["fixed"] = {{"c00", to_string(fam.c00)}, {"c02", to_string(fam.c02)}, {"c11", to_string(fam.c11)}};
    if (fam.variant == TriangleVariant::part1) j["fixed"]["c01"] = to_string(fam.c01);
    j["count"] = sols.size();
    auto free = free_indices(fam);
    json solutions = json::array();
    int real = 0, odd = 0;
    size_t ci = 0;
    for (auto& s : sols) {
        json sj;
        sj["real"] = s.real();
        sj["modulus_degree"] = s.modulus.degree();
        if (s.real()) {
            ++real;
            json values;
            for (int i : free) values["c" + std::to_string(i) + "1"] = interval(s.value(i));
            sj["coefficients"] = values;
            sj["solitary"] = census[ci].solitary;
            sj["non_solitary"] = census[ci].non_solitary;
            odd += census[ci].solitary % 2;
            ++ci;
        }
        solutions.push_back(sj);
    }
    j["solutions"] = solutions;
    j["real_count"] = real;
    j["odd_solitary_count"] = odd;
    json oracle;
    if (fam.k <= 3) {
        auto orc = brute_force_oracle(fam);
        bool agree = orc.count == static_cast<int>(sols.size()) && orc.real_count == real;
        for (auto& os : orc.real_solutions) {
            bool found = false;
            for (auto& s : sols) {
                if (!s.real()) continue;
                bool all = true;
                for (size_t i = 0; i < free.size(); ++i) all = all && compare(s.value(free[i]), os[i]) == 0;
                found = found || all;
            }
            agree = agree && found;
        }
        oracle = {{"status", agree ? "agree" : "disagree"}, {"count", orc.count}, {"real_count", orc.real_count}};
    } else {
        oracle = {{"status", "skipped"}};
    }
    j["oracle"] = oracle;
    return j;
}

PuiseuxPoly parse_puiseux(const json& j) {
    auto bad = [](const std::string& what) { return SchemaError("polynomial: " + what); };
    if (!j.is_object() || !j.contains("monomials") || !j["monomials"].is_array())
        throw bad("expected {\"monomials\": [...]}");
    for (auto& [k, v] : j.items())
        if (k != "monomials" && k != "comment") throw bad("unknown key \"" + k + "\"");
    auto rat = [&](const json& v) {
        if (!v.is_string()) throw bad("numbers must be exact strings \"p/q\"");
        return parse_rat(v.get<std::string>());
    };
    PuiseuxPoly f;
    for (auto& m : j["monomials"]) {
        if (!m.is_object() || !m.contains("exponent") || !m.contains("terms")) throw bad("monomial needs exponent and terms");
        for (auto& [k, v] : m.items())
            if (k != "exponent" && k != "terms" && k != "order") throw bad("unknown key \"" + k + "\" in a monomial");
        const json& e = m["exponent"];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
            e[0].get<int>() < 0 || e[1].get<int>() < 0)
            throw bad("exponent must be two nonnegative integers");
        Exp2 ex{e[0].get<int>(), e[1].get<int>()};
        if (f.count(ex)) throw bad("repeated exponent");
        std::map<Rat, CRat> terms;
        if (!m["terms"].is_array()) throw bad("terms must be an array");
        for (auto& t : m["terms"]) {
            if (!t.is_array() || t.size() < 2 || t.size() > 3) throw bad("a term is [exponent, re] or [exponent, re, im]");
            Rat te = rat(t[0]);
            CRat c(rat(t[1]), t.size() == 3 ? rat(t[2]) : Rat(0));
            if (terms.count(te)) throw bad("repeated term exponent");
            if (!c.is_zero()) terms[te] = c;
        }
        std::optional<Rat> order;
        if (m.contains("order")) order = rat(m["order"]);
        f[ex] = PuiseuxTrunc(terms, order);
    }
    return f;
}

void write_atomically(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << content;
        out.flush();
        if (!out) {
            std::remove(tmp.c_str());
            throw std::runtime_error("cannot write " + tmp);
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
    }
}

}  // namespace welsch
