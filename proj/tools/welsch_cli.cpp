// welsch: counts, invariance sweeps, Newton-triangle runs and tropical limits.
// Exit codes: 0 success, 2 non-generic input, 1 schema or usage errors.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "welsch/errors.hpp"
#include "welsch/harness.hpp"

using namespace welsch;

namespace {

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

void emit(const json& j, const std::string& out) {
    std::string text = j.dump(2) + "\n";
    if (out.empty())
        std::cout << text;
    else
        write_atomically(out, text);
}

std::vector<Rat> parse_list(const std::string& s) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
    return out;
}

// "r1,r3,m1,m2,m3,m4"
std::pair<std::array<int, 2>, std::array<int, 4>> parse_signature(const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            v.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw SchemaError("--random expects r1,r3,m1,m2,m3,m4");
        }
    }
    if (v.size() != 6) throw SchemaError("--random expects r1,r3,m1,m2,m3,m4");
    for (int x : v)
        if (x < 0) throw SchemaError("--random: negative count");
    return {{v[0], v[1]}, {v[2], v[3], v[4], v[5]}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Welschinger invariants of the plane in degrees 1 to 3"};
    app.require_subcommand(1);

    std::vector<std::string> configs;
    std::string out, svg, random, coeffs, variant = "part1";
    int steps = 50, k = 1;
    std::uint64_t seed = 1;
    bool allow = false;

    auto* count = app.add_subcommand("count", "W of one configuration");
    count->add_option("--config", configs, "configuration JSON");
    count->add_option("--random", random, "random configuration with signature r1,r3,m1,m2,m3,m4");
    count->add_option("--seed", seed, "seed for --random");
    count->add_option("--out", out, "report path (stdout when omitted)");
    count->add_flag("--allow-noninvariant", allow, "accept even or large real orders");

    auto* sweep = app.add_subcommand("sweep", "W along the straight path from config A to config B");
    sweep->add_option("--config", configs, "configuration JSON, given twice (A then B)");
    sweep->add_option("--random", random, "random endpoints with signature r1,r3,m1,m2,m3,m4");
    sweep->add_option("--seed", seed, "seed for --random");
    sweep->add_option("--steps", steps, "number of steps N (N + 1 samples)");
    sweep->add_option("--out", out, "report path");
    sweep->add_flag("--allow-noninvariant", allow, "accept even or large real orders");

    auto* tri = app.add_subcommand("triangle", "rational members with Newton triangle Conv{(0,0),(0,2),(k,1)}");
    tri->add_option("--k", k, "k >= 1")->required();
    tri->add_option("--coeffs", coeffs, "part1: c00,c01,c02,c11; part2: c00,c02,c11");
    tri->add_option("--seed", seed, "random nonzero coefficients when --coeffs is omitted");
    tri->add_option("--variant", variant, "part1 or part2")->check(CLI::IsMember({"part1", "part2"}));
    tri->add_option("--out", out, "report path");

    auto* trop = app.add_subcommand("troplimit", "tropical limit of a polynomial over Puiseux series");
    trop->add_option("--config", configs, "polynomial JSON")->required();
    trop->add_option("--out", out, "subdivision JSON path");
    trop->add_option("--svg", svg, "SVG drawing path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (count->parsed()) {
            if (configs.size() + !random.empty() != 1) throw SchemaError("count: give exactly one of --config, --random");
            json report;
            ConfigSpec spec;
            if (!random.empty()) {
                auto [r, m] = parse_signature(random);
                std::mt19937_64 rng(seed);
                InvariantReport rep;
                spec = random_generic_config(r[0], r[1], m, rng, &rep);
                report = report_to_json(rep);
                report["seed"] = seed;
                report["configuration"] = to_json(spec);
            } else {
                spec = parse_config(read_json(configs[0]));
                spec.allow_noninvariant = spec.allow_noninvariant || allow;
                report = report_to_json(compute_invariant(build(spec)));
            }
            emit(report, out);
        } else if (sweep->parsed()) {
            ConfigSpec a, b;
            json extra;
            if (!random.empty()) {
                if (!configs.empty()) throw SchemaError("sweep: give either two --config or --random");
                auto [r, m] = parse_signature(random);
                std::mt19937_64 rng(seed);
                a = random_generic_config(r[0], r[1], m, rng);
                b = random_generic_config(r[0], r[1], m, rng);
                extra["seed"] = seed;
                extra["endpoints"] = {to_json(a), to_json(b)};
            } else {
                if (configs.size() != 2) throw SchemaError("sweep: needs --config A --config B");
                a = parse_config(read_json(configs[0]));
                b = parse_config(read_json(configs[1]));
            }
            a.allow_noninvariant = a.allow_noninvariant || allow;
            b.allow_noninvariant = b.allow_noninvariant || allow;
            json report = to_json(run_sweep(a, b, steps));
            report["steps"] = steps;
            for (auto& [key, v] : extra.items()) report[key] = v;
            emit(report, out);
        } else if (tri->parsed()) {
            TriangleFamily fam;
            fam.k = k;
            fam.variant = variant == "part2" ? TriangleVariant::part2 : TriangleVariant::part1;
            bool part1 = fam.variant == TriangleVariant::part1;
            std::vector<Rat> c;
            if (!coeffs.empty()) {
                c = parse_list(coeffs);
            } else {
                std::mt19937_64 rng(seed);
                std::uniform_int_distribution<int> n(1, 9), d(1, 5), s(0, 1);
                for (int i = 0; i < 4; ++i) c.push_back(frac((s(rng) ? 1 : -1) * n(rng), d(rng)));
                if (!part1) c.erase(c.begin() + 1);
            }
            if (c.size() != (part1 ? 4u : 3u))
                throw SchemaError(part1 ? "--coeffs expects c00,c01,c02,c11" : "--coeffs expects c00,c02,c11");
            if (part1) {
                fam.c00 = c[0], fam.c01 = c[1], fam.c02 = c[2], fam.c11 = c[3];
            } else {
                fam.c00 = c[0], fam.c02 = c[1], fam.c11 = c[2];
            }
            emit(run_triangle(fam), out);
        } else if (trop->parsed()) {
            if (configs.size() != 1) throw SchemaError("troplimit: needs one --config");
            auto tl = tropical_limit(parse_puiseux(read_json(configs[0])));
            json report = json::parse(to_json(tl));
            std::string drawing = to_svg(tl);
            emit(report, out);
            if (!svg.empty()) write_atomically(svg, drawing);
        }
    } catch (const NonGenericConfiguration& e) {
        std::cerr << "non-generic configuration: " << e.what() << "\n";
        return 2;
    } catch (const NonGenericCoefficients& e) {
        std::cerr << "non-generic coefficients: " << e.what() << "\n";
        return 2;
    } catch (const BalanceViolation& e) {
        std::cerr << "balance violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
