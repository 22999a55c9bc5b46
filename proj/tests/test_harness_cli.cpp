#include <sys/wait.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "welsch/errors.hpp"
#include "welsch/harness.hpp"

using namespace welsch;
namespace fs = std::filesystem;

namespace {

const std::string cli = WELSCH_CLI;
const std::string data = WELSCH_TEST_DATA;

fs::path scratch() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("welsch_cli_test_" + std::to_string(getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

// Runs the CLI with stderr captured; returns the exit code.
int run(const std::string& args, std::string* err = nullptr) {
    fs::path log = scratch() / "stderr.txt";
    int status = std::system((cli + " " + args + " 2> " + log.string()).c_str());
    if (err) {
        std::ifstream in(log);
        std::stringstream ss;
        ss << in.rdbuf();
        *err = ss.str();
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json load(const fs::path& p) { return json::parse(slurp(p)); }

std::string in(const std::string& name) { return data + "/" + name; }

std::string out(const std::string& name) {
    fs::path p = scratch() / name;
    fs::remove(p);
    return p.string();
}

}  // namespace

TEST_CASE("count: eight real points") {
    std::string o = out("eight.json");
    REQUIRE(run("count --config " + in("eight_points.json") + " --out " + o) == 0);
    json r = load(o);
    CHECK(r["W"] == 8);
    CHECK(r["complex_root_count"] == 12);
    CHECK(r["curves"].size() == 8);
    for (auto& c : r["curves"]) {
        CHECK(c["sign"] == 1);
        CHECK(c["node"]["type"] == "non_solitary");
        auto iv = c["lambda_interval"];
        REQUIRE(iv.size() == 2);
        CHECK(parse_rat(iv[0].get<std::string>()) <= parse_rat(iv[1].get<std::string>()));
        CHECK(c["contact_profile"].size() == 8);
    }
    // curves are listed by increasing lambda
    for (size_t i = 1; i < r["curves"].size(); ++i)
        CHECK(parse_rat(r["curves"][i - 1]["lambda_interval"][1].get<std::string>()) <=
              parse_rat(r["curves"][i]["lambda_interval"][0].get<std::string>()));
}

TEST_CASE("count: reports are byte-deterministic") {
    std::string a = out("det_a.json"), b = out("det_b.json");
    REQUIRE(run("count --config " + in("five_points_one_arc.json") + " --out " + a) == 0);
    REQUIRE(run("count --config " + in("five_points_one_arc.json") + " --out " + b) == 0);
    CHECK(slurp(a) == slurp(b));
    json r = load(a);
    REQUIRE(r["diagnostics"].size() == 1);
    CHECK(r["diagnostics"][0].get<std::string>().rfind("nodal_at_center", 0) == 0);
}

TEST_CASE("count: exit codes and no partial reports") {
    std::string err;
    std::string o = out("fail.json");
    CHECK(run("count --config " + in("balance_violation.json") + " --out " + o, &err) == 1);
    CHECK(err.find("balance") != std::string::npos);
    CHECK(!fs::exists(o));
    CHECK(run("count --config " + in("rank_deficient.json") + " --out " + o) == 2);
    CHECK(!fs::exists(o));
    CHECK(run("count --config " + in("eight_points_wall.json") + " --out " + o) == 2);
    CHECK(!fs::exists(o));
    CHECK(run("count --config " + in("bad_number.json") + " --out " + o) == 1);
    CHECK(run("count --config " + in("missing.json") + " --out " + o) == 1);
    CHECK(!fs::exists(o));
    CHECK(!fs::exists(o + ".tmp"));
    CHECK(run("count") == 1);
    CHECK(run("nonsense") == 1);
}

TEST_CASE("count: degree 1 and an imaginary pair") {
    std::string o = out("line.json");
    REQUIRE(run("count --config " + in("line.json") + " --out " + o) == 0);
    CHECK(load(o)["W"] == 1);
    REQUIRE(run("count --config " + in("six_points_one_pair.json") + " --out " + o) == 0);
    CHECK(load(o)["complex_root_count"] == 12);
}

TEST_CASE("count: a random configuration is reproducible from its report") {
    std::string o = out("random.json"), cfg = out("random_cfg.json"), again = out("random_again.json");
    REQUIRE(run("count --random 5,1,0,0,0,0 --seed 7 --out " + o) == 0);
    json r = load(o);
    CHECK(r["seed"] == 7);
    std::ofstream(cfg) << r["configuration"].dump(2);
    REQUIRE(run("count --config " + cfg + " --out " + again) == 0);
    CHECK(load(again)["W"] == r["W"]);
}

TEST_CASE("sweep: A = B is constant") {
    std::string o = out("sweep_same.json");
    REQUIRE(run("sweep --config " + in("eight_points.json") + " --config " + in("eight_points.json") + " --steps 4 --out " +
                o) == 0);
    json r = load(o);
    CHECK(r["verdict"] == "constant");
    REQUIRE(r["samples"].size() == 5);
    for (auto& s : r["samples"]) CHECK(s["W"] == 8);
}

TEST_CASE("sweep: two eight-point configurations") {
    std::string o = out("sweep.json");
    REQUIRE(run("sweep --config " + in("eight_points.json") + " --config " + in("eight_points_b.json") +
                " --steps 10 --out " + o) == 0);
    json r = load(o);
    CHECK(r["verdict"] == "constant");
    CHECK(r["samples"].size() == 11);
    CHECK(run("sweep --config " + in("eight_points.json") + " --config " + in("five_points_one_arc.json") +
              " --steps 4 --out " + o) == 1);
}

TEST_CASE("triangle subcommand") {
    std::string o = out("tri.json");
    REQUIRE(run("triangle --k 3 --coeffs 1,3,2,-1 --out " + o) == 0);
    json r = load(o);
    CHECK(r["count"] == 3);
    CHECK(r["real_count"].get<int>() % 2 == 1);
    CHECK(r["oracle"]["status"] == "agree");
    REQUIRE(run("triangle --k 1 --coeffs 1,1,1,1 --out " + o) == 0);
    CHECK(load(o)["count"] == 1);
    REQUIRE(run("triangle --k 3 --variant part2 --coeffs 1,2,-1 --out " + o) == 0);
    r = load(o);
    CHECK(r["real_count"] == 1);
    for (auto& s : r["solutions"])
        if (s["real"] == true) CHECK((s["solitary"] == 2 || s["solitary"] == 0));
    CHECK(run("triangle --k 2 --variant part2 --coeffs 1,2,-1 --out " + o) == 1);
    CHECK(run("triangle --k 3 --coeffs 1,0,2,-1 --out " + o) == 1);
}

TEST_CASE("troplimit subcommand") {
    std::string o = out("trop.json"), svg = out("trop.svg");
    REQUIRE(run("troplimit --config " + in("xy1.json") + " --out " + o + " --svg " + svg) == 0);
    CHECK(load(o)["faces"].size() == 1);
    CHECK(slurp(svg).rfind("<svg", 0) == 0);
    REQUIRE(run("troplimit --config " + in("x2_x_t.json") + " --out " + o) == 0);
    json r = load(o);
    CHECK(r["dimension"] == 1);
    CHECK(r["faces"].size() == 2);
    REQUIRE(run("troplimit --config " + in("apex_3_1.json") + " --out " + o) == 0);
    bool found = false;
    json apex = load(o);
    for (auto& f : apex["faces"]) {
        std::vector<std::vector<int>> v = f["vertices"];
        std::sort(v.begin(), v.end());
        found = found || v == std::vector<std::vector<int>>{{0, 0}, {0, 2}, {3, 1}};
    }
    CHECK(found);
    CHECK(run("troplimit --config " + in("eight_points.json") + " --out " + o) == 1);
}

TEST_CASE("configuration schema") {
    json j = json::parse(slurp(in("six_points_one_pair.json")));
    ConfigSpec spec = parse_config(j);
    CHECK(spec.real_constraints.size() == 6);
    CHECK(spec.imaginary_constraints.size() == 1);
    CHECK(spec.imaginary_constraints[0].cx == CRat(1, 2));
    // round trip through the writer
    ConfigSpec back = parse_config(to_json(spec));
    CHECK(to_json(back) == to_json(spec));

    json bad = j;
    bad["colour"] = "red";
    CHECK_THROWS_AS(parse_config(bad), SchemaError);
    bad = j;
    bad["real_constraints"][0]["center"] = {"1", "2", "3"};
    CHECK_THROWS_AS(parse_config(bad), SchemaError);
    bad = j;
    bad["real_constraints"][0]["center"][0] = "1/0";
    CHECK_THROWS_AS(parse_config(bad), SchemaError);
    bad = j;
    bad["real_constraints"][0]["order"] = 3;
    CHECK_THROWS_AS(parse_config(bad), SchemaError);  // order 3 without an arc
    bad = j;
    bad.erase("degree");
    CHECK_THROWS_AS(parse_config(bad), SchemaError);
}

TEST_CASE("interpolation and verdicts") {
    std::mt19937_64 rng(5);
    ConfigSpec a = random_config(5, 1, {0, 0, 0, 0}, rng), b = random_config(5, 1, {0, 0, 0, 0}, rng);
    CHECK(to_json(interpolate(a, b, Rat(0))) == to_json(a));
    CHECK(to_json(interpolate(a, b, Rat(1))) == to_json(b));
    ConfigSpec mid = interpolate(a, b, frac(1, 2));
    CHECK(mid.real_constraints[0].cx == (a.real_constraints[0].cx + b.real_constraints[0].cx) * CRat(frac(1, 2)));
    CHECK(signature(a) == signature(b));
    CHECK(signature(a).real[0] == 5);
    CHECK(signature(a).real[2] == 1);
    ConfigSpec c = random_config(8, 0, {0, 0, 0, 0}, rng);
    CHECK_THROWS_AS(interpolate(a, c, frac(1, 2)), IncompatibleSignatures);

    auto samples = [](std::vector<std::optional<int>> w) {
        std::vector<SweepSample> s;
        for (size_t i = 0; i < w.size(); ++i) s.push_back({frac(i, w.size() - 1), w[i], w[i], {}});
        return s;
    };
    using O = std::optional<int>;
    CHECK(sweep_verdict(samples({O(4), O(4), O(), O(4), O(4), O(4)})) == Verdict::constant);
    CHECK(sweep_verdict(samples({O(4), O(4), O(2), O(2), O(4), O(4)})) == Verdict::nonconstant);
    CHECK(sweep_verdict(samples({O(4), O(), O(), O(4), O(4), O(4), O(4), O(4), O(4), O(4), O(4)})) ==
          Verdict::inconclusive);  // adjacent walls
    CHECK(sweep_verdict(samples({O(4), O(), O(4), O(), O(4)})) == Verdict::inconclusive);  // 40% walls
    CHECK(sweep_verdict(samples({O(), O()})) == Verdict::inconclusive);
}

TEST_CASE("atomic writes") {
    std::string p = out("atomic.txt");
    write_atomically(p, "abc");
    CHECK(slurp(p) == "abc");
    CHECK(!fs::exists(p + ".tmp"));
    CHECK_THROWS(write_atomically((scratch() / "no_such_dir" / "x.txt").string(), "abc"));
}
