#include <doctest.h>

#include <json.hpp>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& stdin_json = "") {
    const std::string in_file = "cli_test_in.json";
    std::string cmd = std::string(SLICEREG_CLI_PATH) + " " + args;
    if (!stdin_json.empty()) {
        std::ofstream f(in_file);
        f << stdin_json;
        f.close();
        cmd += " --in " + in_file;
    }
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("cli eval") {
    const auto r = run_cli(
        "eval", R"({"series":{"radius":1,"coeffs":[[0,0,0,0],[1,0,0,0]]},"point":[0,0,0.5,0]})");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "[0.0,0.0,0.5,0.0]\n");
}

TEST_CASE("cli exit codes") {
    // malformed JSON -> 2
    CHECK(run_cli("eval", "{not json").exit_code == 2);
    // missing field -> 2
    CHECK(run_cli("eval", R"({"series":{"radius":1,"coeffs":[[0,0,0,0]]}})").exit_code == 2);
    // point outside the radius -> 3
    const auto r = run_cli(
        "eval", R"({"series":{"radius":1,"coeffs":[[0,0,0,0],[1,0,0,0]]},"point":[2,0,0,0]})");
    CHECK(r.exit_code == 3);
    // unknown subcommand -> 2
    CHECK(run_cli("frobnicate", "").exit_code == 2);
}

TEST_CASE("cli quat and series wrappers") {
    const auto r = run_cli("quat --op mul", R"({"a":[0,1,0,0],"b":[0,0,1,0]})");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "[0.0,0.0,0.0,1.0]\n");

    const auto s = run_cli("series --op roundtrip",
                           R"({"series":{"radius":1,"coeffs":[[0,0,0,0],[0,0,0,0],[1,0,0,0]]},)"
                           R"("frame":{"i":[1,0,0],"j":[0,1,0]}})");
    CHECK(s.exit_code == 0);
    CHECK(s.out.find("residual") != std::string::npos);
}

TEST_CASE("cli skull csv") {
    const std::string poly = R"({"poly":[[-1,0,0,0],[0,0,0,0],[1,0,0,0]],"slices":4})";
    const auto r = run_cli("skull --format csv", poly);
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("slice_x,slice_y,slice_z,x,y\n", 0) == 0);
    // 4 slices, two segment endpoints each
    int lines = 0;
    for (char c : r.out) lines += (c == '\n') ? 1 : 0;
    CHECK(lines == 9);

    // CSV is refused outside point-cloud outputs
    const auto bad = run_cli(
        "eval --format csv",
        R"({"series":{"radius":1,"coeffs":[[0,0,0,0],[1,0,0,0]]},"point":[0,0,0.5,0]})");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("cli hull csv") {
    const auto r = run_cli("hull --format csv",
                           R"({"points":[[0,0],[1,0],[0,1],[0.2,0.2]]})");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("x,y\n", 0) == 0);
}

TEST_CASE("cli bundle project round trip") {
    // (Re z, 0, (e1, e2)) -> the class of f(q) = q
    const auto r = run_cli("bundle --op project",
                           R"({"a":[[0,0],[1,0]],"c":[],"frame":{"i":[1,0,0],"j":[0,1,0]}})");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[[0.0,0.0,0.0,0.0],[1.0,0.0,0.0,0.0]]") != std::string::npos);
}

TEST_CASE("cli zeros on the counterexample pair") {
    const std::string f = R"({"poly":[[-1,0,-1,0],[0,0,1,0],[1,0,0,0]],)"
                          R"("frame":{"i":[1,0,0],"j":[0,1,0]}})";
    const auto r = run_cli("zeros --op components", f);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"s4\":null") != std::string::npos);

    const auto p = run_cli("zeros --op psrb", f);
    CHECK(p.exit_code == 0);
    CHECK(p.out == "{\"psrb\":false}\n");
}

TEST_CASE("cli schwarz, conjugate, gauss-lucas and morphism wrappers") {
    // constant boundary trace reconstructs the constant
    std::string samples = "[";
    for (int k = 0; k < 256; ++k) samples += (k ? ",1.0" : "1.0");
    samples += "]";
    const auto sc = run_cli("schwarz --op complex", std::string(R"({"trace":{"rho":1,"samples":)") +
                                                        samples + R"(},"z":[0.2,0.1]})");
    CHECK(sc.exit_code == 0);
    const auto scj = nlohmann::json::parse(sc.out);
    CHECK(std::abs(scj[0].get<double>() - 1.0) <= 1e-12);
    CHECK(std::abs(scj[1].get<double>()) <= 1e-12);

    const auto co = run_cli("conjugate --op value",
                            R"({"u":[[0,0],[0,0],[1,0]],"path":[[0,0],[1,2]]})");
    CHECK(co.exit_code == 0);
    CHECK(std::abs(nlohmann::json::parse(co.out)["value"].get<double>() - 4.0) <= 1e-12);

    const std::string cubic = R"("poly":[[0,0,0,0],[-1,0,0,0],[0,0,0,0],[1,0,0,0]],)"
                              R"("frame":{"i":[1,0,0],"j":[0,1,0]})";
    const auto gl = run_cli("gauss-lucas", "{" + cubic + "}");
    CHECK(gl.exit_code == 0);
    CHECK(gl.out == "{\"holds\":true}\n");

    // real-coefficient polynomials have non-PSRB derivatives -> domain error
    const auto mo = run_cli("morphism", "{" + cubic + "}");
    CHECK(mo.exit_code == 3);
}

TEST_CASE("every command-table entry runs end to end") {
    const std::string series = R"("series":{"radius":1,"coeffs":[[0.1,0,0,0],[0,0,1,0],[1,0,0,0]]})";
    const std::string frame = R"("frame":{"i":[1,0,0],"j":[0,1,0]})";
    const std::string f = R"("f":{"radius":1,"coeffs":[[0,1,0,0],[1,0,0,0]]})";
    const std::string g = R"("g":{"radius":1,"coeffs":[[0,0,1,0]]})";
    const std::string trace16 = R"({"rho":1,"samples":[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0]})";
    const std::string poly = R"("poly":[[-1,0,-1,0],[0,0,1,0],[1,0,0,0]])";
    const std::string total =
        R"("a":[[0,0],[1,0]],"c":[[0,0],[0,1]],"frame":{"i":[1,0,0],"j":[0,1,0]})";

    const std::vector<std::pair<std::string, std::string>> calls = {
        {"quat --op unit-of", R"({"q":[2,0,3,0]})"},
        {"quat --op rotate", R"({"u":[1,0,0,0],"w":[0.5,1,2,3]})"},
        {"quat --op rotate-frame", std::string("{\"u\":[1,0,0,0],") + frame + "}"},
        {"series --op extend", "{" + series + "," + frame + R"(,"point":[0,0,0.5,0]})"},
        {"series --op representation",
         R"({"f_plus":[0,1,0,0],"f_minus":[0,-1,0,0],"i":[1,0,0],"target":[0,1,0],"x":0,"y":1})"},
        {"series --op dcomponents", "{" + series + "," + frame + "}"},
        {"series --op identities", "{" + series + "," + frame + R"(,"z":[0.2,0.3]})"},
        {"series --op star", "{" + f + "," + g + "}"},
        {"series --op bullet", "{" + f + "," + g + "," + frame + "}"},
        {"series --op derivative", "{" + series + "}"},
        {"conjugate --op independence",
         R"({"u":[[0,0],[0,0],[0,0],[1,0]],"path_a":[[0,0],[0.5,0.5]],)"
         R"("path_b":[[0,0],[0.5,0],[0.5,0.5]]})"},
        {"schwarz --op coeffs",
         std::string(R"({"a":)") + trace16 + R"(,"c":)" + trace16 + "," + frame + R"(,"nmax":4})"},
        {"schwarz --op eval",
         std::string(R"({"a":)") + trace16 + R"(,"c":)" + trace16 + "," + frame +
             R"(,"q":[0,0,0.3,0],"lambda1":1,"lambda2":2})"},
        {"bundle --op section", std::string("{\"class\":{") +
                                    R"("radius":1,"coeffs":[[0,0,0,0],[1,0,0,0]]},)" + frame + "}"},
        {"bundle --op trivialize", std::string(R"({"u":[1,0,0,0],"class":{)") +
                                       R"("radius":1,"coeffs":[[0,0,0,0],[1,0,0,0]]},)" + frame +
                                       "}"},
        {"bundle --op compatibility", std::string(R"({"u":[1,0,0,0],"v":[0,0,0,1],"class":{)") +
                                          R"("radius":1,"coeffs":[[0,0,0,0],[1,0,0,0]]},)" +
                                          frame + "}"},
        {"bundle --op add", "{\"a_el\":{" + total + "},\"b_el\":{" + total + "}}"},
        {"bundle --op derive", "{\"el\":{" + total + "}}"},
        {"bundle --op rotate", R"({"u":[0,1,0,0],"el":{)" + total + "}}"},
        {"bundle --op fiber", std::string("{\"class\":{") +
                                  R"("radius":1,"coeffs":[[0,0,0,0],[1,0,0,0]]},"frames":5})"},
        {"zeros --op reconstruct",
         std::string(R"({"degree":2,"data":{)") + frame +
             R"(,"s1":[[1,0,1],[-1,0,1]],"s2":[[1,0,1]],"s3":[[1,0,1],[-1,-1,1]],"s4":null}})"},
        {"zeros --op slice", "{" + poly + R"(,"slice":[1,0,0]})"},
        {"zeros --op uniqueness",
         std::string(R"({"f":[[0,1,0,0],[1,0,0,0]],"g":[[0,1,0,0],[1,0,0,0]],)") +
             R"("frame1":{"i":[1,0,0],"j":[0,1,0]},"frame2":{"i":[0,1,0],"j":[1,0,0]},)" +
             R"("c1":[1,0],"c2":[1,0]})"},
        {"zeros --op roots", R"({"poly_complex":[[-1,0],[0,0],[1,0]]})"},
    };
    for (const auto& [args, input] : calls) {
        INFO("slicereg " << args);
        CHECK(run_cli(args, input).exit_code == 0);
    }

    // degenerate vector through the CLI surfaces as a domain error
    CHECK(run_cli("quat --op unit-of", R"({"q":[5,0,0,0]})").exit_code == 3);
}

TEST_CASE("cli verify") {
    // a fast suite passes and its report is byte-identical across runs
    const auto r1 = run_cli("verify --suite quat-core --seed 42");
    const auto r2 = run_cli("verify --suite quat-core --seed 42");
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    CHECK(r1.out.find("overall: PASS") != std::string::npos);

    // pass status is stable across seeds
    for (const char* seed : {"1", "2", "3", "4", "5"})
        CHECK(run_cli(std::string("verify --suite quat-core --seed ") + seed).exit_code == 0);

    // an unreachable tolerance forces a controlled failure
    const auto fail = run_cli("verify --suite quat-core --tol.quat-core 1e-30");
    CHECK(fail.exit_code == 1);
    CHECK(fail.out.find("FAIL") != std::string::npos);

    // unknown suite name -> 2
    CHECK(run_cli("verify --suite no-such-suite").exit_code == 2);

    // coarser grids shrink the alias-free band; the suites scale with it
    CHECK(run_cli("verify --suite harmonic-schwarz-coeffs --quadrature-n 64").exit_code == 0);
    // quadrature_n must be a power of two >= 16
    CHECK(run_cli("verify --quadrature-n 100").exit_code == 2);
    CHECK(run_cli("verify --quadrature-n 8").exit_code == 2);

    // json report format
    const auto j = run_cli("verify --suite oracle-hull --format json");
    CHECK(j.exit_code == 0);
    CHECK(j.out.rfind("[{\"suite\":\"oracle-hull\"", 0) == 0);
}
