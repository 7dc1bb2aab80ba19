#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef QEULER_CLI_PATH
#error "QEULER_CLI_PATH must name the built command-line tool"
#endif
#ifndef QEULER_GOLDEN_DIR
#error "QEULER_GOLDEN_DIR must name the golden-file directory"
#endif

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// Runs the CLI with the given arguments; stderr is discarded.
Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" + QEULER_CLI_PATH + "' " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(QEULER_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("golden tables") {
    CHECK(run("table qeuler --m 0..6 --q 1/2 --exact").out == golden("table_qeuler.csv"));
    CHECK(run("table classical --m 0..5 --exact").out == golden("table_classical.csv"));
    CHECK(run("table zeta --s-grid -3..0 --q 1/2 --exact").out == golden("table_zeta.csv"));
}

TEST_CASE("eval emits one JSON record") {
    const Run r = run("eval qeuler --m 2 --k 1 --q 1/2 --exact");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["function"] == "qeuler");
    CHECK(j["value"]["num"] == "1");
    CHECK(j["value"]["den"] == "5");
    CHECK(j["method"] == "closed-form");

    const Run z = run("eval zeta --s 2 --q 0.5");
    REQUIRE(z.code == 0);
    const auto jz = nlohmann::json::parse(z.out);
    CHECK(jz["method"] == "continuation");
    CHECK(jz["value"]["re"].get<double>() == doctest::Approx(-0.33963409660161975).epsilon(1e-12));
    CHECK(jz["terms"].get<int>() > 0);
}

TEST_CASE("exact values survive a round trip") {
    const Run r = run("eval qeuler --m 6 --q 1/2 --exact");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const std::string q = j["value"]["num"].get<std::string>() + "/" + j["value"]["den"].get<std::string>();
    CHECK(q == "-22064/36465");
}

TEST_CASE("exit codes") {
    CHECK(run("verify identities").code == 0);
    CHECK(run("verify identities --inject-failure").code == 1);
    CHECK(run("eval zeta --s abc --q 0.5").code == 2);
    CHECK(run("eval zeta --s 2 --q 1.5").code == 2);
    CHECK(run("eval nosuchfunction").code == 2);
    CHECK(run("eval zeta --s 2 --q 0.5 --max-terms 1").code == 3);
    CHECK(run("eval zeta --s 2 --q 0.5", "QEULER_MAX_TERMS=1").code == 3);
}

TEST_CASE("output is deterministic") {
    const std::string cmd = "verify identities,characters --seed 7 --format json";
    const Run a = run(cmd);
    const Run b = run(cmd);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK((j.is_object() || j.is_array()));
}
