// End-to-end checks of the command-line driver via subprocesses.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "zl_cli_test";
        fs::create_directories(d);
        return d;
    }();
    const fs::path out = dir / "out.txt";
    const fs::path err = dir / "err.txt";
    const std::string cmd = std::string(ZETALAB_CLI_PATH) + " " + args + " > " + out.string() +
                            " 2> " + err.string();
    const int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

fs::path fresh_dir(const std::string& name) {
    const auto d = fs::temp_directory_path() / ("zl_cli_" + name);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("bounds: headline value and table") {
    auto r = run("bounds -k 1 -m 2");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("41/32") != std::string::npos);
    CHECK(r.out.find("1.28125") != std::string::npos);

    auto t = run("bounds --table");
    REQUIRE(t.exit_code == 0);
    for (const char* e : {"41/32", "25/16", "59/32", "17/8", "49/32", "29/16"})
        CHECK(t.out.find(e) != std::string::npos);
}

TEST_CASE("bounds: out-of-range is a usage error") {
    CHECK(run("bounds -k 9 -m 2").exit_code != 0);
    CHECK(run("bounds -k 1 -m 4").exit_code != 0);
    CHECK(run("bounds").exit_code != 0);
}

TEST_CASE("grid cache: idempotent builds, explicit corruption errors") {
    const auto dir = fresh_dir("grid");
    const std::string base = "--cache-dir " + dir.string() + " compute grid --t1 30 --step 0.02";

    auto first = run(base);
    REQUIRE(first.exit_code == 0);
    CHECK(first.out.find("built:") != std::string::npos);
    const auto manifest1 = slurp(dir / "manifest.json");

    auto second = run(base);
    REQUIRE(second.exit_code == 0);
    CHECK(second.out.find("cache hit") != std::string::npos);
    CHECK(slurp(dir / "manifest.json") == manifest1);  // untouched on a hit

    // a rebuild from scratch produces the identical artifact hash
    fs::remove_all(dir);
    fs::create_directories(dir);
    REQUIRE(run(base).exit_code == 0);
    CHECK(slurp(dir / "manifest.json") == manifest1);

    // corrupt the file: explicit error, no silent rebuild
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() == ".bin") {
            std::fstream f(entry.path(), std::ios::in | std::ios::out | std::ios::binary);
            f.seekp(0);
            f.put('X');
        }
    }
    auto bad = run(base);
    CHECK(bad.exit_code != 0);
    CHECK(bad.err.find("cache") != std::string::npos);
}

TEST_CASE("moment: byte-identical CSV across runs and thread counts") {
    const auto d1 = fresh_dir("m1");
    const auto d2 = fresh_dir("m2");
    const std::string tail = " moment -k 2 -m 1 --T 20 50 100 --csv ";
    const auto c1 = (d1 / "a.csv").string();
    const auto c2 = (d2 / "b.csv").string();
    REQUIRE(run("--cache-dir " + d1.string() + " --threads 1" + tail + c1).exit_code == 0);
    REQUIRE(run("--cache-dir " + d2.string() + " --threads 3" + tail + c2).exit_code == 0);
    const auto a = slurp(c1);
    REQUIRE_FALSE(a.empty());
    CHECK(a == slurp(c2));

    // second run against the warm cache reproduces the same bytes
    REQUIRE(run("--cache-dir " + d1.string() + " --threads 3" + tail + c1).exit_code == 0);
    CHECK(slurp(c1) == a);
}

TEST_CASE("moment: missing cache for a large range names the fix") {
    const auto dir = fresh_dir("big");
    auto r = run("--cache-dir " + dir.string() + " moment -k 1 -m 2 --T 1e9");
    CHECK(r.exit_code != 0);
    CHECK(r.err.find("compute grid") != std::string::npos);
}

TEST_CASE("config file matches the equivalent flags") {
    const auto dir = fresh_dir("cfg");
    const auto cfg = dir / "run.cfg";
    {
        std::ofstream f(cfg);
        f << "theta=1/4\n";
        f << "zeta-exponent=53/342\n";
    }
    auto via_cfg = run("--config " + cfg.string() + " bounds -k 1 -m 1");
    auto via_flags = run("--theta 1/4 --zeta-exponent 53/342 bounds -k 1 -m 1");
    auto defaults = run("bounds -k 1 -m 1");
    REQUIRE(via_cfg.exit_code == 0);
    CHECK(via_cfg.out == via_flags.out);
    CHECK(via_cfg.out != defaults.out);

    // flags override the file
    auto overridden = run("--config " + cfg.string() + " --theta 131/416 --zeta-exponent 32/205 "
                          "bounds -k 1 -m 1");
    CHECK(overridden.out == defaults.out);
}

TEST_CASE("compute zeta prints both methods") {
    auto r = run("compute zeta --t 100");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("t,abs_rs,abs_em") != std::string::npos);
    CHECK(r.out.find("2.69269705666") != std::string::npos);
}
