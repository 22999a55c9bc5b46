#pragma once
#include <optional>
#include <string>
#include <vector>

#include "welsch/algebraic.hpp"
#include "welsch/arc.hpp"
#include "welsch/form.hpp"
#include "welsch/linalg.hpp"
#include "welsch/plane_curve.hpp"

namespace welsch {

// Tangency of order `order` to `arc` at its centre. The arc keeps every given
// coefficient, so arc.order may exceed the prescribed order.
struct Constraint {
    Arc arc;
    int order = 1;
};

struct Configuration {
    int degree = 3;
    std::vector<Constraint> real_constraints;
    std::vector<Constraint> imaginary_constraints;  // conjugates implicit
    int phi = 0;
    bool allow_noninvariant = false;  // permits even or large real orders
};

// Throws SchemaError (BalanceViolation for sum k + 2 sum l != 3d - 1) on an
// invalid configuration.
void validate(const Configuration& cfg);

// 3d - 1 rows over affine_monomials(d). Throws RankDeficient.
Mat assemble_constraints(const Configuration& cfg);

// Kernel of the system as forms: two for d = 3, one for d <= 2.
std::vector<Form> pencil_basis(const Mat& system, int degree);

// Singularity eliminant of F0 + lambda F1, degree <= 12; missing degree means
// roots at lambda = infinity. Throws IdenticallySingularPencil.
UniPoly pencil_discriminant(const Form& f0, const Form& f1);

// Per-branch contact orders of a curve with an arc at the arc centre.
struct ContactProfile {
    bool imaginary = false;
    int index = 0;             // position in the configuration's constraint list
    std::vector<int> orders;   // one entry at a smooth point, two at a node
    bool at_least = false;     // the last order is a lower bound (truncation reached)
};

// Contact profile of a rational curve; the arc centre must lie on the curve.
ContactProfile contact_profile(const Form& f, const Arc& arc);

struct CountedCurve {
    std::optional<AlgebraicReal> lambda;  // empty for the member F1 at lambda = infinity
    Form member;                          // set when the member has rational coefficients
    bool rational_member = false;
    std::optional<NodeInfo> node;        // empty for smooth members (degrees 1 and 2)
    int sign = 1;
    std::vector<ContactProfile> contacts;
    int structural_multiplicity = 1;      // multiplicity of lambda in the discriminant
};

struct InvariantReport {
    int W = 0;
    // Same sum restricted to members where, for every constraint, a single
    // local branch reaches the prescribed order (nodal-at-centre members drop out).
    int W_single_branch = 0;
    std::vector<CountedCurve> curves;
    int complex_root_count = 0;    // with multiplicity, lambda = infinity included
    int real_root_count = 0;       // with multiplicity, lambda = infinity included
    int discriminant_degree = -1;
    bool residual_squarefree = false;
    std::vector<Form> basis;
    std::vector<std::string> diagnostics;
};

// Counted members of the pencil F0 + lambda F1 (d = 3), with the discriminant
// bookkeeping stored in `report`. Throws NonGenericConfiguration on any wall.
// Node locations are skipped unless `locate_nodes` is set.
std::vector<CountedCurve> enumerate_counted_curves(const Form& f0, const Form& f1, const Configuration& cfg,
                                                   InvariantReport& report, bool locate_nodes = true);

InvariantReport compute_invariant(const Configuration& cfg, bool locate_nodes = true);

}  // namespace welsch
