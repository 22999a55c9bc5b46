#include "welsch/invariant.hpp"

#include <algorithm>
#include <stdexcept>

#include "welsch/errors.hpp"

namespace welsch {

namespace {

std::string where(bool imaginary, int index) {
    return std::string(imaginary ? "imaginary" : "real") + " constraint " + std::to_string(index);
}

bool same_point(const Arc& a, const Arc& b) { return a.cx == b.cx && a.cy == b.cy; }

// A factor of the discriminant forced by a constraint of order >= 2: the
// member singular at the centre, with multiplicity equal to the order.
struct Structural {
    bool imaginary = false;
    int index = 0;
    int multiplicity = 0;
    bool at_infinity = false;
    UniPoly factor;      // monic linear (real centre) or quadratic (conjugate pair)
    Rat lambda;          // finite real centres only
};

// Solves g0 + lambda g1 = 0 for parallel gradients; nullopt means lambda = infinity.
std::optional<CRat> singular_parameter(const CBiPoly& f0, const CBiPoly& f1, const Arc& a, const std::string& who) {
    CRat g0[2] = {f0.dx().eval(a.cx, a.cy), f0.dy().eval(a.cx, a.cy)};
    CRat g1[2] = {f1.dx().eval(a.cx, a.cy), f1.dy().eval(a.cx, a.cy)};
    if (g1[0].is_zero() && g1[1].is_zero()) {
        if (g0[0].is_zero() && g0[1].is_zero())
            throw IdenticallySingularPencil("every member is singular at the centre of " + who);
        return std::nullopt;
    }
    int i = g1[0].is_zero() ? 1 : 0;
    CRat l = -g0[i] / g1[i];
    for (int j = 0; j < 2; ++j)
        if (!(g0[j] + l * g1[j]).is_zero())
            throw NonGenericConfiguration("gradients at the centre of " + who + " are not parallel");
    return l;
}

std::vector<Structural> structural_factors(const Form& f0, const Form& f1, const Configuration& cfg) {
    CBiPoly g0 = to_complex(dehomogenize(f0)), g1 = to_complex(dehomogenize(f1));
    std::vector<Structural> out;
    for (int pass = 0; pass < 2; ++pass) {
        bool imag = pass == 1;
        const auto& list = imag ? cfg.imaginary_constraints : cfg.real_constraints;
        for (size_t i = 0; i < list.size(); ++i) {
            if (list[i].order < 2) continue;
            Structural s;
            s.imaginary = imag;
            s.index = static_cast<int>(i);
            s.multiplicity = list[i].order;
            auto l = singular_parameter(g0, g1, list[i].arc, where(imag, s.index));
            if (!l) {
                s.at_infinity = true;
                if (imag) s.multiplicity *= 2;
            } else if (!imag) {
                s.lambda = l->re;
                s.factor = UniPoly({-l->re, Rat(1)});
            } else {
                if (l->is_real()) throw NonGenericConfiguration("member singular at " + where(true, s.index) + " is real");
                s.factor = UniPoly({l->norm(), -2 * l->re, Rat(1)});
            }
            out.push_back(s);
        }
    }
    return out;
}

// Arc jets of F0 and F1 at a constraint; the member at lambda has jet J0 + lambda J1.
struct PencilJets {
    std::vector<CRat> j0, j1;
};

PencilJets pencil_jets(const CBiPoly& g0, const CBiPoly& g1, const Arc& a) {
    return {jet_values(g0, a, a.order + 1), jet_values(g1, a, a.order + 1)};
}

// Contact at a smooth point of an irrational member: J0_i + lambda J1_i with
// lambda irrational vanishes only when both jets do.
ContactProfile irrational_contact(const PencilJets& j, bool imag, int index) {
    ContactProfile cp;
    cp.imaginary = imag;
    cp.index = index;
    for (size_t i = 0; i < j.j0.size(); ++i)
        if (!j.j0[i].is_zero() || !j.j1[i].is_zero()) {
            cp.orders = {static_cast<int>(i)};
            return cp;
        }
    cp.orders = {static_cast<int>(j.j0.size())};
    cp.at_least = true;
    return cp;
}

int total(const ContactProfile& cp) {
    int t = 0;
    for (int o : cp.orders) t += o;
    return t;
}

void check_contacts(const CountedCurve& c, const Configuration& cfg) {
    for (auto& cp : c.contacts) {
        const auto& list = cp.imaginary ? cfg.imaginary_constraints : cfg.real_constraints;
        if (total(cp) < list[cp.index].order && !cp.at_least)
            throw std::logic_error("counted member misses the tangency at " + where(cp.imaginary, cp.index));
    }
}

bool is_nodal_at(const Form& f, const Arc& a) {
    CBiPoly g = to_complex(dehomogenize(f));
    return g.eval(a.cx, a.cy).is_zero() && g.dx().eval(a.cx, a.cy).is_zero() && g.dy().eval(a.cx, a.cy).is_zero();
}

// A member with rational coefficients (rational lambda or lambda = infinity).
// `center` names the real constraint whose centre must carry the node, or -1
// when the node must avoid every centre.
CountedCurve rational_member(const Form& f, const Configuration& cfg, int center, bool locate) {
    PlaneCurve pc(f);
    auto cert = is_counted_rational(pc);
    if (!cert.counted) throw NonGenericConfiguration("member with rational coefficients is " + cert.diagnostic);
    CountedCurve cc;
    cc.member = f;
    cc.rational_member = true;
    std::vector<NodeInfo> nodes;
    for (auto& p : cert.points)
        if (p.u) {
            nodes.push_back(p.info);
            if (!locate) nodes.back().location.reset();
        }
    if (!nodes.empty()) cc.node = nodes[0];
    cc.sign = welschinger_sign(nodes);
    for (int pass = 0; pass < 2; ++pass) {
        bool imag = pass == 1;
        const auto& list = imag ? cfg.imaginary_constraints : cfg.real_constraints;
        for (size_t i = 0; i < list.size(); ++i) {
            bool nodal = is_nodal_at(f, list[i].arc);
            bool expected = !imag && static_cast<int>(i) == center;
            if (nodal != expected)
                throw NonGenericConfiguration(nodal ? "node collides with the centre of " + where(imag, static_cast<int>(i))
                                                    : "member is not singular at the centre of " +
                                                          where(imag, static_cast<int>(i)));
            auto cp = contact_profile(f, list[i].arc);
            cp.imaginary = imag;
            cp.index = static_cast<int>(i);
            cc.contacts.push_back(cp);
        }
    }
    return cc;
}

void sort_curves(std::vector<CountedCurve>& cs) {
    std::stable_sort(cs.begin(), cs.end(), [](const CountedCurve& a, const CountedCurve& b) {
        if (!a.lambda || !b.lambda) return a.lambda.has_value() && !b.lambda.has_value();
        return compare(*a.lambda, *b.lambda) < 0;
    });
}

void add_diagnostics(const CountedCurve& c, const Configuration& cfg, std::vector<std::string>& diags) {
    for (auto& cp : c.contacts) {
        if (cp.imaginary || cp.orders.size() != 2) continue;
        int k = cfg.real_constraints[cp.index].order;
        std::string prof = "[" + std::to_string(cp.orders[0]) + "," + std::to_string(cp.orders[1]) + "]";
        if (k == 3 && cp.orders[0] == 1 && cp.orders[1] == 2)
            diags.push_back("nodal_at_center: " + where(false, cp.index) + " carries a node with contact profile " + prof +
                            ", no single branch reaches order 3");
        else
            diags.push_back("nodal_at_center: " + where(false, cp.index) + " carries a node with contact profile " + prof);
    }
}

}  // namespace

void validate(const Configuration& cfg) {
    if (cfg.degree < 1 || cfg.degree > 3) throw SchemaError("degree must be 1, 2 or 3");
    if (cfg.phi != 0) throw SchemaError("phi must be 0");
    int sum = 0;
    for (size_t i = 0; i < cfg.real_constraints.size(); ++i) {
        const auto& c = cfg.real_constraints[i];
        std::string who = where(false, static_cast<int>(i));
        if (c.order < 1) throw SchemaError(who + ": order must be positive");
        if (c.arc.reality != Reality::real) throw SchemaError(who + ": arc is not real");
        if (c.arc.order < c.order) throw SchemaError(who + ": arc shorter than the order");
        if (!cfg.allow_noninvariant && (c.order % 2 == 0 || c.order > 3))
            throw SchemaError(who + ": real orders must be odd and at most 3 (use allow_noninvariant)");
        for (size_t j = 0; j < i; ++j)
            if (same_point(c.arc, cfg.real_constraints[j].arc)) throw SchemaError(who + ": repeated centre");
        sum += c.order;
    }
    for (size_t i = 0; i < cfg.imaginary_constraints.size(); ++i) {
        const auto& c = cfg.imaginary_constraints[i];
        std::string who = where(true, static_cast<int>(i));
        if (c.order < 1) throw SchemaError(who + ": order must be positive");
        if (c.arc.cx.is_real() && c.arc.cy.is_real()) throw SchemaError(who + ": centre is real");
        if (c.arc.order < c.order) throw SchemaError(who + ": arc shorter than the order");
        for (size_t j = 0; j < i; ++j) {
            const Arc& o = cfg.imaginary_constraints[j].arc;
            if (same_point(c.arc, o) || same_point(c.arc, conjugate_arc(o)))
                throw SchemaError(who + ": centre repeats another centre or its conjugate");
        }
        sum += 2 * c.order;
    }
    if (sum != 3 * cfg.degree - 1)
        throw BalanceViolation("sum of real orders plus twice the imaginary orders is " + std::to_string(sum) +
                               ", expected " + std::to_string(3 * cfg.degree - 1));
}

Mat assemble_constraints(const Configuration& cfg) {
    validate(cfg);
    auto monos = affine_monomials(cfg.degree);
    Mat m;
    auto append = [&](const Constraint& c) {
        for (auto& f : jet_conditions(c.arc, c.order, cfg.degree).functionals) {
            Vec row;
            for (auto& e : monos) {
                auto it = f.find(e);
                row.push_back(it == f.end() ? Rat(0) : it->second);
            }
            m.push_back(row);
        }
    };
    for (auto& c : cfg.real_constraints) append(c);
    for (auto& c : cfg.imaginary_constraints) append(c);
    int r = rank(m);
    if (r != 3 * cfg.degree - 1)
        throw RankDeficient("constraint system has rank " + std::to_string(r) + ", expected " +
                            std::to_string(3 * cfg.degree - 1));
    return m;
}

std::vector<Form> pencil_basis(const Mat& system, int degree) {
    auto monos = affine_monomials(degree);
    auto ns = nullspace(system, static_cast<int>(monos.size()));
    if (ns.size() != (degree == 3 ? 2u : 1u)) throw RankDeficient("kernel has dimension " + std::to_string(ns.size()));
    std::vector<Form> out;
    for (auto& v : ns) {
        BiPoly f;
        for (size_t i = 0; i < monos.size(); ++i) f.add(monos[i].first, monos[i].second, v[i]);
        out.push_back(homogenize(f, degree));
    }
    return out;
}

UniPoly pencil_discriminant(const Form& f0, const Form& f1) {
    CubicFamily fam(pencil(f0, f1));
    if (fam.discriminant().is_zero()) throw IdenticallySingularPencil("every member of the pencil is singular");
    return fam.discriminant().monic();
}

ContactProfile contact_profile(const Form& f, const Arc& arc) {
    CBiPoly g = to_complex(dehomogenize(f));
    if (!g.eval(arc.cx, arc.cy).is_zero()) throw std::invalid_argument("contact_profile: centre is not on the curve");
    auto t = tangency_order(g, arc);
    ContactProfile cp;
    cp.imaginary = arc.reality == Reality::imaginary;
    cp.at_least = t.at_least;
    CBiPoly gx = g.dx(), gy = g.dy();
    if (!gx.eval(arc.cx, arc.cy).is_zero() || !gy.eval(arc.cx, arc.cy).is_zero()) {
        cp.orders = {t.order};
        return cp;
    }
    // tangent cone at the node against the arc direction
    CRat u = arc.x[0], v = arc.y[0];
    CRat q = gx.dx().eval(arc.cx, arc.cy) * u * u + CRat(2) * gx.dy().eval(arc.cx, arc.cy) * u * v +
             gy.dy().eval(arc.cx, arc.cy) * v * v;
    if (!q.is_zero())
        cp.orders = {1, 1};
    else
        cp.orders = {1, t.order - 1};
    return cp;
}

std::vector<CountedCurve> enumerate_counted_curves(const Form& f0, const Form& f1, const Configuration& cfg,
                                                   InvariantReport& report, bool locate_nodes) {
    CubicFamily fam(pencil(f0, f1));
    UniPoly disc = fam.discriminant();
    if (disc.is_zero()) throw IdenticallySingularPencil("every member of the pencil is singular");
    disc = disc.monic();
    report.discriminant_degree = disc.degree();
    int at_infinity = 12 - disc.degree();
    if (at_infinity > 0) {
        // independent count at infinity: the reversed pencil F1 + mu F0 at mu = 0
        UniPoly rev = CubicFamily(pencil(f1, f0)).discriminant();
        if (rev.is_zero()) throw IdenticallySingularPencil("every member of the reversed pencil is singular");
        at_infinity = multiplicity(rev, UniPoly::x());
    }
    report.complex_root_count = disc.degree() + at_infinity;
    report.real_root_count = at_infinity;
    for (auto& rm : real_roots_with_multiplicity(disc)) report.real_root_count += rm.multiplicity;

    // structural factors must appear with exactly the predicted multiplicity
    auto structural = structural_factors(f0, f1, cfg);
    UniPoly residual = disc;
    int structural_infinity = 0;
    for (size_t i = 0; i < structural.size(); ++i) {
        const auto& s = structural[i];
        std::string who = where(s.imaginary, s.index);
        if (s.at_infinity) {
            structural_infinity += s.multiplicity;
            continue;
        }
        for (size_t j = 0; j < i; ++j)
            if (!structural[j].at_infinity && gcd(structural[j].factor, s.factor).degree() > 0)
                throw NonGenericConfiguration("one member is singular at two centres (" + who + ")");
        int m = multiplicity(disc, s.factor);
        if (m != s.multiplicity)
            throw NonGenericConfiguration("discriminant factor of " + who + " has multiplicity " + std::to_string(m) +
                                          ", expected " + std::to_string(s.multiplicity));
        residual = exact_div(residual, pow(s.factor, m));
    }
    int residual_infinity = at_infinity - structural_infinity;
    if (residual_infinity < 0 || (structural_infinity > 0 && residual_infinity > 0) || residual_infinity > 1)
        throw NonGenericConfiguration("multiple discriminant root at lambda = infinity");
    report.residual_squarefree = is_squarefree(residual);
    if (!report.residual_squarefree) throw NonGenericConfiguration("discriminant has a multiple root");

    CBiPoly g0 = to_complex(dehomogenize(f0)), g1 = to_complex(dehomogenize(f1));
    std::vector<CountedCurve> out;
    for (auto& r : isolate_real_roots(residual)) {
        CountedCurve cc;
        if (auto q = r.rational_value()) {
            cc = rational_member(eval_lambda(pencil(f0, f1), *q), cfg, -1, locate_nodes);
        } else {
            auto sp = fam.singular_point(r, locate_nodes);
            if (!sp) throw NonGenericConfiguration("member has more than one singular point");
            if (sp->info.type == NodeType::degenerate) throw NonGenericConfiguration("member has a cusp");
            cc.node = sp->info;
            cc.sign = welschinger_sign({sp->info});
            for (int pass = 0; pass < 2; ++pass) {
                bool imag = pass == 1;
                const auto& list = imag ? cfg.imaginary_constraints : cfg.real_constraints;
                for (size_t i = 0; i < list.size(); ++i)
                    cc.contacts.push_back(irrational_contact(pencil_jets(g0, g1, list[i].arc), imag, static_cast<int>(i)));
            }
        }
        cc.lambda = r;
        out.push_back(cc);
    }
    if (residual_infinity == 1) out.push_back(rational_member(f1, cfg, -1, locate_nodes));
    for (auto& s : structural) {
        if (s.imaginary) continue;
        CountedCurve cc = rational_member(s.at_infinity ? f1 : eval_lambda(pencil(f0, f1), s.lambda), cfg, s.index,
                                          locate_nodes);
        if (!s.at_infinity) cc.lambda = AlgebraicReal::rational(s.lambda);
        cc.structural_multiplicity = s.multiplicity;
        out.push_back(cc);
    }
    for (auto& c : out) check_contacts(c, cfg);
    sort_curves(out);
    return out;
}

InvariantReport compute_invariant(const Configuration& cfg, bool locate_nodes) {
    Mat system = assemble_constraints(cfg);
    InvariantReport report;
    report.basis = pencil_basis(system, cfg.degree);
    if (cfg.degree < 3) {
        CountedCurve cc = rational_member(report.basis[0], cfg, -1, locate_nodes);
        report.curves.push_back(cc);
    } else {
        report.curves = enumerate_counted_curves(report.basis[0], report.basis[1], cfg, report, locate_nodes);
    }
    for (auto& c : report.curves) {
        report.W += c.sign;
        bool single = true;
        for (auto& p : c.contacts) {
            const auto& list = p.imaginary ? cfg.imaginary_constraints : cfg.real_constraints;
            single = single && *std::max_element(p.orders.begin(), p.orders.end()) >= list[p.index].order;
        }
        if (single) report.W_single_branch += c.sign;
        add_diagnostics(c, cfg, report.diagnostics);
    }
    return report;
}

}  // namespace welsch
