#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "motionfact/json_io.hpp"
#include "motionfact/synthesis.hpp"
#include "support/generators.hpp"

#include <cstdio>
#include <fstream>
#include <sys/wait.h>

using namespace motionfact;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(MOTIONFACT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(MOTIONFACT_TEST_DATA) + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("demo reproduces the seven factors and passes its checks") {
    const RunResult r = run_cli("demo darboux7r");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "Q3 = t - 7/9 i + 4/9 j - 4/9 k - 5/4 eps i - 43/64 eps j + 97/64 eps k"));
    CHECK(contains(r.out, "Q6 = t + j"));
    CHECK(contains(r.out, "all checks passed"));

    // byte-for-byte determinism
    const RunResult again = run_cli("demo darboux7r");
    CHECK(again.out == r.out);
}

TEST_CASE("factor dispatches the darboux pipeline") {
    // the static file is the hand-expanded constraint motion; cross-check it
    std::ifstream in(data("darboux_motion.json"));
    json j;
    in >> j;
    const MotionPoly c = motionpoly_from_json(j);
    const auto parsed = try_parse_constraint_motion(c);
    REQUIRE(parsed.has_value());
    CHECK(classify_case(*parsed) == CaseKind::Darboux);

    const RunResult r = run_cli("factor " + data("darboux_motion.json"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "Darboux pipeline applied"));
}

TEST_CASE("factor reports the multiplication trick on the appendix example") {
    const RunResult r = run_cli("factor " + data("sarrus_seed_motion.json"));
    CHECK(r.exit_code == 3);
    CHECK(contains(r.out, "no 2-factor factorization; multiplication trick available"));
}

TEST_CASE("factor enumerates all factorizations of a generic cubic") {
    testing::Rng rng(71);
    const auto hs = rng.distinct_norm_rotations(3);
    DQPoly prod = DQPoly::constant(DualQuaternion::one());
    for (const auto& h : hs) prod = prod * DQPoly::linear_factor(h);
    const MotionPoly c = MotionPoly::certify(prod);
    const std::string path = "/tmp/motionfact_cli_cubic.json";
    std::ofstream(path) << to_json(c).dump();

    const RunResult r = run_cli("factor " + path + " --all");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "factorization 1"));

    const RunResult rj = run_cli("--output json factor " + path + " --all");
    CHECK(rj.exit_code == 0);
    const json out = json::parse(rj.out);
    CHECK(out.contains("factorizations"));
    for (const auto& f : out["factorizations"]) {
        const Factorization back = factorization_from_json(f);
        CHECK(back.product() == c.raw());
    }
}

TEST_CASE("classify covers the taxonomy") {
    CHECK(contains(run_cli("classify " + data("darboux_constraint.json")).out, "Darboux"));
    CHECK(contains(run_cli("classify " + data("degp2_constraint.json")).out, "DegP2"));
    const RunResult vertical = run_cli("classify " + data("vertical_constraint.json"));
    CHECK(contains(vertical.out, "VerticalDarboux"));
    CHECK(contains(vertical.out, "allows no factorizations"));
    CHECK(contains(run_cli("classify " + data("nonfactorable_constraint.json")).out,
                   "NonFactorableCubic"));
    CHECK(contains(run_cli("classify " + data("xilinear_constraint.json")).out, "DegP1XiLinear"));
    CHECK(contains(run_cli("classify " + data("xireducible_constraint.json")).out,
                   "DegP1XiReducible"));
}

TEST_CASE("synth on the degp2 input lists four linkages") {
    const RunResult r = run_cli("synth " + data("degp2_constraint.json"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "PRRPRR"));
    CHECK(contains(r.out, "RRPRPR"));
    CHECK(contains(r.out, "RPRRPR"));
    CHECK(contains(r.out, "pspr-collapse"));
}

TEST_CASE("synth non-existence results exit with code 3") {
    CHECK(run_cli("synth " + data("vertical_constraint.json")).exit_code == 3);
    CHECK(run_cli("synth " + data("nonfactorable_constraint.json")).exit_code == 3);
}

TEST_CASE("synth on the darboux input prints the 7R data") {
    const RunResult r = run_cli("synth " + data("darboux_constraint.json"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "case: Darboux"));
    CHECK(contains(r.out, "7R linkage: signature RRRRRRR"));
    CHECK(contains(r.out, "{1,2} {3,4} {5,6,7}"));
}

TEST_CASE("traj emits a straight-line csv for the origin") {
    const RunResult r = run_cli("traj " + data("darboux_motion.json") +
                                " --point 0,0,0 --range -2:2 --steps 9");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "t,x,y,z");
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        // y and z columns are exactly 0
        const auto c1 = line.find(','), c2 = line.find(',', c1 + 1), c3 = line.find(',', c2 + 1);
        CHECK(line.substr(c2 + 1, c3 - c2 - 1) == "0");
        CHECK(line.substr(c3 + 1) == "0");
        ++rows;
    }
    CHECK(rows == 9);
}

TEST_CASE("verify checks closure of an exported linkage") {
    const ConstraintInput in = constraint_from_json(
        json::parse(std::ifstream(data("darboux_constraint.json"))));
    const Linkage l = darboux_7r(in);
    const std::string path = "/tmp/motionfact_cli_linkage.json";
    std::ofstream(path) << to_json(l).dump();

    const RunResult r = run_cli("verify " + path + " --samples 12");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "closure verified"));
    CHECK(contains(r.out, "symbolic closure polynomial real: yes"));
}

TEST_CASE("traj decimal rendering flag") {
    const RunResult r = run_cli("traj " + data("darboux_motion.json") +
                                " --point 0,0,0 --range 0:1 --steps 2 --decimal 4");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "0.0000"));
    CHECK(contains(r.out, "."));
}

TEST_CASE("exit codes: parse, irrationality, usage") {
    std::ofstream("/tmp/motionfact_cli_garbage.json") << "{not json";
    CHECK(run_cli("factor /tmp/motionfact_cli_garbage.json").exit_code == 2);
    CHECK(run_cli("factor /nonexistent/file.json").exit_code == 2);
    CHECK(run_cli("factor " + data("irrational_translational_motion.json")).exit_code == 4);
    CHECK(run_cli("--mode float factor " + data("sarrus_seed_motion.json")).exit_code == 2);
    CHECK(run_cli("demo nosuchdemo").exit_code == 2);
}
