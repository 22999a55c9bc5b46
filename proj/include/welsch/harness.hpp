#pragma once
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "welsch/invariant.hpp"
#include "welsch/triangle.hpp"
#include "welsch/tropical.hpp"

namespace welsch {

using nlohmann::json;

// A constraint exactly as written in a configuration file: the centre and the
// arc coefficients of t^1, t^2, ... before normalisation. Sweeps interpolate
// this raw data.
struct ConstraintSpec {
    int order = 1;
    CRat cx, cy;
    std::vector<CRat> x, y;
};

struct ConfigSpec {
    int degree = 3;
    int phi = 0;
    bool allow_noninvariant = false;
    std::vector<ConstraintSpec> real_constraints;
    std::vector<ConstraintSpec> imaginary_constraints;
};

// Throws SchemaError (exit code 1) on anything that does not match the schema.
ConfigSpec parse_config(const json& j);
json to_json(const ConfigSpec& spec);

// Arcs are polynomial: the given coefficients, zero beyond, truncated at
// max(order, length) + 4. Throws SchemaError or NotSmooth.
Configuration build(const ConfigSpec& spec);

// Counts (r1, r3, m1..m4) of constraints by order; orders outside these slots
// land in `other`.
struct Signature {
    std::array<int, 4> real{};       // real orders 1..4
    std::array<int, 4> imaginary{};  // imaginary orders 1..4
    int other = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};
Signature signature(const ConfigSpec& spec);

// Random configuration with r1 points, r3 order-3 arcs and m[l-1] imaginary
// arcs of order l. Centres and coefficients are small random rationals.
ConfigSpec random_config(int r1, int r3, const std::array<int, 4>& m, std::mt19937_64& rng);

// Resamples until the configuration avoids every wall (the engine never
// perturbs on its own). Fills `report` when given. Gives up after 1000 draws.
ConfigSpec random_generic_config(int r1, int r3, const std::array<int, 4>& m, std::mt19937_64& rng,
                                 InvariantReport* report = nullptr);

json report_to_json(const InvariantReport& rep);

// Straight-line interpolation of centres and arc coefficients, (1 - t) A + t B.
// Throws IncompatibleSignatures unless A and B carry the same constraint orders.
ConfigSpec interpolate(const ConfigSpec& a, const ConfigSpec& b, const Rat& t);

enum class Verdict { constant, nonconstant, inconclusive };
std::string to_string(Verdict v);

struct SweepSample {
    Rat t;
    std::optional<int> W;  // empty at a wall
    std::optional<int> W_single_branch;
    std::vector<std::string> diagnostics;
};

struct SweepReport {
    std::vector<SweepSample> samples;
    Verdict verdict = Verdict::inconclusive;
    Verdict verdict_single_branch = Verdict::inconclusive;  // same rule applied to W_single_branch
};

// constant: every non-wall sample has one W and no two walls are adjacent;
// inconclusive: more than 20% walls, adjacent walls, or no usable sample.
Verdict sweep_verdict(const std::vector<SweepSample>& samples);
Verdict sweep_verdict(const std::vector<std::optional<int>>& values);

// Evaluates W at t = i / steps for i = 0..steps.
SweepReport run_sweep(const ConfigSpec& a, const ConfigSpec& b, int steps);
json to_json(const SweepReport& rep);

// Counts, reality, node census and (k <= 3) the elimination cross-check.
json run_triangle(const TriangleFamily& fam);

// Polynomial file: {"monomials": [{"exponent": [i, j], "terms": [[e, re] or
// [e, re, im], ...], "order": e (optional truncation)}]}, numbers as "p/q".
PuiseuxPoly parse_puiseux(const json& j);

// Writes through a temporary file and a rename, so a failed run leaves no file.
void write_atomically(const std::string& path, const std::string& content);

}  // namespace welsch
