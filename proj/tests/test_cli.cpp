#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Result {
    int code{-1};
    std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " \"" QRAYLEIGH_CLI "\" " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path scratch(const std::string& name, const std::string& text) {
    const fs::path dir = fs::temp_directory_path() / "qrayleigh-cli-test";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p;
}

std::string config(const std::string& name) { return std::string("\"") + QRAYLEIGH_CONFIG_DIR + "/" + name + "\""; }

} // namespace

TEST_CASE("figure output goes to stdout") {
    const auto cfg = scratch("fig4.toml", "experiment = \"fig4\"\n[grid]\nn_t = 3\nn_chi = 3\nn_jt = 3\n");
    const auto r = run("figure --config " + cfg.string() + " --out -");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("panel,scenario,jt,chi,t,T_S\r\n", 0) == 0);
}

TEST_CASE("output is identical across worker counts") {
    const auto cfg = scratch("fig3.toml", "experiment = \"fig3\"\n[grid]\nn_chi = 9\n");
    const auto one = run("figure --config " + cfg.string() + " --out -", "QRAYLEIGH_THREADS=1");
    const auto four = run("figure --config " + cfg.string() + " --out -", "QRAYLEIGH_THREADS=4");
    CHECK(one.code == 0);
    CHECK(one.out == four.out);
    CHECK(!one.out.empty());
}

TEST_CASE("configuration errors exit with 2") {
    CHECK(run("figure --config /nonexistent.toml").code == 2);
    CHECK(run("figure").code == 2);
    CHECK(run("figure --config " + scratch("bad.toml", "experiment = \"fig3\"\nbogus = 1\n").string()).code == 2);
    CHECK(run("figure --config " +
              scratch("bound.toml", "experiment = \"fig5\"\n[bath]\nkind = \"discordant\"\ncoherence = 0.5\n").string())
              .code == 2);
    CHECK(run("sweep --config " + config("fig3.toml")).code == 2);
    CHECK(run("figure --config " + config("fig3.toml") + " --units bans").code == 2);
}

TEST_CASE("units flag switches the log base") {
    const auto cfg = scratch("fig3u.toml", "experiment = \"fig3\"\n[grid]\nn_chi = 3\n");
    const auto nats = run("figure --config " + cfg.string() + " --out -");
    const auto bits = run("figure --config " + cfg.string() + " --out - --units bits");
    CHECK(nats.code == 0);
    CHECK(bits.code == 0);
    CHECK(nats.out != bits.out);
}

TEST_CASE("checks subcommand reports JSON") {
    const auto r = run("checks --config " + config("checks_small.toml"));
    CHECK(r.code == 0);
    CHECK(r.out.find("\"checks\"") != std::string::npos);
    CHECK(r.out.find("\"passed\": false") == std::string::npos);
}
