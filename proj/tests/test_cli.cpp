#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

// Runs the tool with stderr folded into stdout.
RunResult run(const std::string& args) {
    const std::string cmd = std::string(REPSCHEME_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string fx(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("tangent at the commuting-scheme origin is 8") {
    const auto r = run("tangent " + fx("comm2.alg") + " " + fx("comm2_origin.pt"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "tangent_dim: 8"));
}

TEST_CASE("hilb-dim on the free algebra on two generators is 6") {
    const auto r = run("hilb-dim " + fx("free2.alg") + " " + fx("free2_p1.pt") + " " + fx("v11.vec"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "dimension: 6"));
}

TEST_CASE("abelianize weyl exposes the constant relation") {
    const auto r = run("abelianize " + fx("weyl.alg"));
    CHECK(r.exit_code == 0);
    // x*y - y*x - 1 plus the appended commutator; the constant term survives
    CHECK(contains(r.output, "1"));
    CHECK(contains(r.output, "x*y - y*x"));
}

TEST_CASE("check accepts valid points and rejects invalid ones with exit 1") {
    CHECK(run("check " + fx("comm2.alg") + " " + fx("comm2_diag01.pt")).exit_code == 0);
    const auto bad = run("check " + fx("comm2.alg") + " " + fx("comm2_bad.pt"));
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.output, "valid: false"));
}

TEST_CASE("usage and parse failures exit 2") {
    CHECK(run("tangent " + fx("comm2.alg")).exit_code == 2);            // missing argument
    CHECK(run("tangent no_such_file.alg " + fx("comm2_origin.pt")).exit_code == 2);
    CHECK(run("nonsense").exit_code != 0);
}

TEST_CASE("cyclic verdicts") {
    const auto ok = run("cyclic " + fx("free1.alg") + " " + fx("free1_diag12.pt") + " " +
                        fx("v11.vec"));
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.output, "cyclic: true"));

    const auto no = run("cyclic " + fx("free1.alg") + " " + fx("free1_diag12.pt") + " " +
                        fx("e1.vec"));
    CHECK(no.exit_code == 0);
    CHECK(contains(no.output, "cyclic: false"));
}

TEST_CASE("hilb-dim on a non-cyclic pair is a domain failure") {
    const auto r = run("hilb-dim " + fx("free1.alg") + " " + fx("free1_diag12.pt") + " " +
                       fx("e1.vec"));
    CHECK(r.exit_code == 1);
}

TEST_CASE("deform without order reports tangency") {
    const auto yes = run("deform " + fx("comm2.alg") + " " + fx("comm2_origin.pt") + " " +
                         fx("comm2_dir_tangent.pt"));
    CHECK(yes.exit_code == 0);
    CHECK(contains(yes.output, "tangent: true"));
}

TEST_CASE("obstructed lift exits 1") {
    const auto r = run("deform " + fx("dual.alg") + " " + fx("dual_zero.pt") + " " +
                       fx("dual_dir1.pt") + " --order 3");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "obstructed: true"));
    CHECK(contains(r.output, "obstructed_order: 2"));
}

TEST_CASE("scan emits one row per family member") {
    const auto r = run("scan " + fx("comm2.alg") + " " + fx("comm2_family.fam"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "t=1"));
    CHECK(contains(r.output, "t=0"));
    CHECK(contains(r.output, "tangent_dim: 6"));
    CHECK(contains(r.output, "tangent_dim: 8"));
}

TEST_CASE("ext with the quiver resolution is exact") {
    const auto r = run("ext " + fx("a2.alg") + " " + fx("a2_p1.pt") + " --resolution " +
                       fx("a2_resolution.res"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "ext2.value: 0"));
    CHECK(contains(r.output, "ext2.kind: exact"));
}

TEST_CASE("smooth-cert requires the coherence assertion") {
    const auto bare = run("smooth-cert " + fx("free2.alg") + " " + fx("free2_p1.pt"));
    CHECK(contains(bare.output, "certified: false"));
    CHECK(contains(bare.output, "coherence-not-asserted"));

    const auto asserted =
        run("smooth-cert " + fx("free2.alg") + " " + fx("free2_p1.pt") + " --assume-coherent");
    CHECK(asserted.exit_code == 0);
    CHECK(contains(asserted.output, "certified: true"));
}

TEST_CASE("json reports are deterministic and carry the seed") {
    const std::string cmd = "iso " + fx("free2.alg") + " " + fx("free2_p1.pt") + " " +
                            fx("free2_p1.pt") + " --seed 7 --json";
    const auto a = run(cmd);
    const auto b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(contains(a.output, "\"seed\": 7"));
    CHECK(contains(a.output, "\"verdict\": \"isomorphic\""));
    CHECK(contains(a.output, "\"version\": \"0.1.0\""));
}

TEST_CASE("REPSCHEME_SEED environment override is echoed") {
    const std::string cmd = "env REPSCHEME_SEED=11 " + std::string(REPSCHEME_BIN) + " iso " +
                            fx("free2.alg") + " " + fx("free2_p1.pt") + " " + fx("free2_p1.pt") +
                            " --json 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
    pclose(pipe);
    CHECK(contains(output, "\"seed\": 11"));
}

TEST_CASE("ideal listing carries provenance comments") {
    const auto r = run("ideal " + fx("comm2.alg") + " -n 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "count: 4"));
    CHECK(contains(r.output, "# relation 0, entry (1,1)"));
    CHECK(contains(r.output, "xi[x,1,2]"));
}
