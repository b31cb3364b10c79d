#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cstdio>
#include <string>
#include <vector>

namespace {

std::string g_binary;

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout only
};

RunResult run(const std::string& args) {
    RunResult result;
    const std::string cmd = g_binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("fold subcommand reproduces the flat 5-cycle") {
    const RunResult r = run("fold --r 3 --shift 2 --p 5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"5\","));
    CHECK(contains(r.output, "\"p\": 5"));
}

TEST_CASE("project csv output") {
    const RunResult r = run("project --r 3 --shift 2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "i,h\n"));
    CHECK(contains(r.output, "\n0,3\n"));
    CHECK(contains(r.output, "\n6,1\n"));
    CHECK(contains(r.output, "\n-6,1\n"));
}

TEST_CASE("table csv with scope filter") {
    const RunResult r = run("table --r 4 --only-in-scope --format csv");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "coloring2,4,,18,23,1"));
    CHECK_FALSE(contains(r.output, "coloring4"));
}

TEST_CASE("verify accepts a code and rejects a non-code") {
    const RunResult good = run("verify --r 2 --pattern 100 --orientation parallel");
    CHECK(good.exit_code == 0);
    CHECK(contains(good.output, "\"a\": 3"));
    CHECK(contains(good.output, "\"b\": 5"));

    const RunResult bad = run("verify --r 2 --pattern 1000 --orientation parallel");
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.output, "violated"));
}

TEST_CASE("enumerate and cross-check exit cleanly on matches") {
    const RunResult empty = run("enumerate --type 3 --p 7");
    CHECK(empty.exit_code == 0);
    CHECK(contains(empty.output, "\"match\": true"));

    const RunResult special = run("enumerate --type 8 --p 8 --special-t --format csv");
    CHECK(special.exit_code == 0);

    const RunResult sweep = run("cross-check --p-max 6 --format csv");
    CHECK(sweep.exit_code == 0);
}

TEST_CASE("gen-code round trip through verify") {
    const RunResult gen = run("gen-code --family coloring2 --r 4");
    CHECK(gen.exit_code == 0);
    CHECK(contains(gen.output, "\"pattern\": \"11110000\""));
    CHECK(contains(gen.output, "\"a\": 18"));
    CHECK(contains(gen.output, "\"b\": 23"));

    const RunResult verified = run("verify --r 4 --pattern 11110000 --orientation parallel");
    CHECK(verified.exit_code == 0);
    CHECK(contains(verified.output, "\"a\": 18"));
    CHECK(contains(verified.output, "\"b\": 23"));
}

TEST_CASE("pbm rendering is exact") {
    const RunResult r = run("render --family coloring1 --r 2 --alpha 0 --window 4x4");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "P1\n4 4\n1 0 0 1\n0 0 1 0\n0 1 0 0\n1 0 0 1\n");
    // Determinism: a second run is byte-identical.
    CHECK(run("render --family coloring1 --r 2 --alpha 0 --window 4x4").output == r.output);
}

TEST_CASE("svg rendering") {
    const RunResult r =
        run("render --family coloring1 --r 2 --alpha 0 --window 6x6 --format svg --cell-size 10");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "<svg xmlns"));
    CHECK(contains(r.output, "width=\"60\""));
}

TEST_CASE("invalid arguments exit with status 2") {
    CHECK(run("fold --r 3").exit_code == 2);             // missing flags
    CHECK(run("enumerate --type 9 --p 4").exit_code == 2);
    CHECK(run("enumerate --type 5 --p 8").exit_code == 2);  // congruence violation
    CHECK(run("gen-code --family coloring4 --r 3").exit_code == 2);
    CHECK(run("render --family coloring1 --r 2 --window 0x4").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
}

int main(int argc, char** argv) {
    // First non-flag argument is the CLI binary under test; the rest goes to
    // the test runner.
    std::vector<char*> args{argv[0]};
    for (int i = 1; i < argc; ++i) {
        if (argv[i][0] != '-' && g_binary.empty()) g_binary = argv[i];
        else args.push_back(argv[i]);
    }
    if (g_binary.empty()) {
        std::fprintf(stderr, "usage: test_cli <gridcover-binary> [doctest flags]\n");
        return 2;
    }
    doctest::Context context(static_cast<int>(args.size()), args.data());
    return context.run();
}
