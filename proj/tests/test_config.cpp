#include "doctest.h"

#include <sstream>

#include "qrayleigh/config.hpp"
#include "qrayleigh/csv.hpp"

using namespace qrayleigh;
using namespace qrayleigh::config;

TEST_CASE("parsing") {
    const auto doc = Document::parse(R"(
# comment
experiment = "fig4"   # trailing
seed = 18446744073709551615
[bath]
kind = "discordant"
beta_b = 2.5
chi = -0.5
flag = true
[grid]
chi = [0.1, 0.2, 1e-1]
label = "a # not a comment"
)");
    CHECK(doc.string("", "experiment", "") == "fig4");
    CHECK(doc.unsigned64("", "seed", 0) == 18446744073709551615ull);
    CHECK(doc.number("bath", "beta_b", 0.0) == 2.5);
    CHECK(doc.boolean("bath", "flag", false));
    CHECK(doc.numbers("grid", "chi", {}).size() == 3);
    CHECK(doc.string("grid", "label", "") == "a # not a comment");
    CHECK(doc.number("bath", "missing", 7.0) == 7.0);
    CHECK_THROWS_AS(doc.number("bath", "kind", 0.0), ConfigError);
    CHECK_THROWS_AS(doc.integer("bath", "beta_b", 0), ConfigError);

    const auto unused = doc.unused_keys();
    CHECK(unused == std::vector<std::string>{"bath.chi"});
}

TEST_CASE("syntax errors carry line numbers") {
    CHECK_THROWS_WITH_AS(Document::parse("a = 1\nb 2\n"), doctest::Contains("line 2"), ConfigError);
    CHECK_THROWS_AS(Document::parse("a = 1\na = 2\n"), ConfigError);
    CHECK_THROWS_AS(Document::parse("[x\n"), ConfigError);
    CHECK_THROWS_AS(Document::parse("a = \"open\n"), ConfigError);
    CHECK_THROWS_AS(Document::parse("a = [1, x]\n"), ConfigError);
    CHECK_THROWS_AS(Document::parse("a = 1.2.3\n"), ConfigError);
}

TEST_CASE("run config") {
    CHECK_THROWS_AS(run_config_from(Document::parse("experiment = \"fig9\"")), ConfigError);
    CHECK_THROWS_AS(run_config_from(Document::parse("experiment = \"fig3\"\nunits = \"bans\"")), ConfigError);
    const auto rc = run_config_from(Document::parse("experiment = \"fig3\"\nunits = \"bits\"\nseed = 4"));
    CHECK(rc.units == measures::LogUnit::Bits);
    CHECK(rc.seed == 4);
}

TEST_CASE("bath blocks") {
    BathParams base;
    auto doc = Document::parse("[bath]\nkind = \"discordant\"\nchi = 1.0\nscenario = \"sequential\"\n");
    const auto b = bath_from(doc, "bath", base);
    CHECK(b.coherence == doctest::Approx(0.10499358540350649));
    CHECK(b.scenario == Scenario::Sequential);

    CHECK_THROWS_AS(bath_from(Document::parse("[bath]\nkind = \"discordant\"\ncoherence = 0.2\n"), "bath", base),
                    ConfigError);
    CHECK_THROWS_AS(bath_from(Document::parse("[bath]\nbeta_b = -1\n"), "bath", base), ConfigError);
    CHECK_THROWS_AS(bath_from(Document::parse("[bath]\nkind = \"weird\"\n"), "bath", base), ConfigError);
    CHECK_THROWS_AS(bath_from(Document::parse("[bath]\ne_g = 3\n"), "bath", base), ConfigError);
    CHECK_THROWS_AS(bath_from(Document::parse("[bath]\nchi = 0.1\ncoherence = 0.01\n"), "bath", base),
                    ConfigError);
}

TEST_CASE("linspace") {
    const auto g = linspace(-1.0, 1.0, 5);
    CHECK(g.front() == -1.0);
    CHECK(g.back() == 1.0);
    CHECK(g[2] == 0.0);
    CHECK(linspace(3.0, 4.0, 1) == std::vector<double>{3.0});
    CHECK_THROWS_AS(linspace(0.0, 1.0, 0), ConfigError);
}

TEST_CASE("csv output") {
    CHECK(csv::format_double(0.1) == "0.10000000000000001");
    CHECK(csv::format_double(-0.0) == "0");
    CHECK(csv::format_double(1.0 / 0.0) == "inf");
    CHECK(csv::quote("a,b") == "\"a,b\"");
    CHECK(csv::quote("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv::quote("plain") == "plain");

    csv::Table t;
    t.header = {"name", "x", "n"};
    t.add_row({std::string("p,q"), 2.5, 3LL});
    CHECK_THROWS(t.add_row({1.0}));
    std::ostringstream out;
    csv::write(out, t);
    CHECK(out.str() == "name,x,n\r\n\"p,q\",2.5,3\r\n");
}
