#include "zgon/io.hpp"
#include "zgon/plot.hpp"
#include "zgon/verify.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <string>

using namespace zgon;

TEST_CASE("text formats round trip") {
    for (const char* raw : {"1:0", "2:-3", "17:123456"}) {
        const std::string s = raw;
        CHECK(format_point(parse_point(s)) == s);
    }
    const Interval u = parse_interval("( 2:-3 ,1:4 ;1)");
    CHECK(u == Interval{Point{2, -3}, Point{1, 4}, 1});
    CHECK(parse_interval(format_interval(u)) == u);
    const Arc a = parse_arc("(1:1|1:0)");
    CHECK(a == Arc{Point{1, 1}, Point{1, 0}});
    CHECK(parse_arc(format_arc(a)) == a);
}

TEST_CASE("malformed text is rejected with position information") {
    CHECK_THROWS_AS(parse_point("1:"), std::invalid_argument);
    CHECK_THROWS_AS(parse_point("0:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_interval("(1:0, 1:2; 3)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_interval("(1:0, 1:2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_arc("(1:0, 1:2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_arc("(1:1|1:0) trailing"), std::invalid_argument);
}

TEST_CASE("hom reports serialise faithfully") {
    const Interval u{Point{1, 0}, Point{1, 2}, 0};
    const Interval v{Point{1, -1}, Point{1, 1}, 0};
    const HomReport r = make_hom_report(u, v);
    const std::string payload = hom_report_to_json(r, format_interval(u), format_interval(v));
    const nlohmann::json j = nlohmann::json::parse(payload);
    CHECK(j["dim_rep"] == 1);
    CHECK(j["dim_proj"] == 0);
    CHECK(j["dim_stable"] == 1);
    CHECK(j["hammock"] == "Hplus");
    // embedded object texts parse back to the original objects
    CHECK(parse_interval(j["source"].get<std::string>()) == u);
    CHECK(parse_interval(j["target"].get<std::string>()) == v);
}

TEST_CASE("verification report serialises into machine readable form") {
    VerifyConfig cfg;
    cfg.gon = GonConfig{1};
    cfg.window = 2;
    cfg.oracle_pair_samples = 40;
    cfg.proj_pair_samples = 20;
    cfg.triple_samples = 20;
    cfg.uniserial_samples = 20;
    const auto suites = std::vector<SuiteResult>{suite_hom_dimensions(cfg)};
    const nlohmann::json j = nlohmann::json::parse(suites_to_json(cfg, suites));
    CHECK(j["m"] == 1);
    CHECK(j["suites"].size() == 1);
    CHECK(j["suites"][0]["name"] == "hom_dimensions");
    CHECK(j["suites"][0]["pass"] == true);
}

TEST_CASE("svg rendering") {
    PlotRequest req;
    req.gon = GonConfig{1};
    req.window = 3;
    SUBCASE("bare figure") {
        const std::string svg = render_svg(req);
        CHECK(svg.find("<svg") != std::string::npos);
        CHECK(svg.find("<circle") != std::string::npos);
        CHECK(svg.find("hammock") == std::string::npos);
    }
    SUBCASE("hammock shading yields the two regions") {
        req.hammocks_of = Arc{Point{1, 1}, Point{1, 0}};
        const std::string svg = render_svg(req);
        CHECK(svg.find("hammock-plus") != std::string::npos);
        CHECK(svg.find("hammock-minus") != std::string::npos);
        CHECK(svg.find("url(#hatch)") != std::string::npos);
    }
    SUBCASE("triangles draw dotted middle terms") {
        req.triangle_of = Arc{Point{1, 3}, Point{1, 0}};
        req.window = 5;
        const std::string svg = render_svg(req);
        CHECK(svg.find("stroke-dasharray") != std::string::npos);
    }
}

#ifdef ZGON_CLI_PATH
namespace {
int run_cli(const std::string& args) {
    const std::string cmd = std::string(ZGON_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}
}  // namespace

TEST_CASE("cli exit codes") {
    CHECK(run_cli("hom --m 1 \"(1:0,1:1;1)\" \"(1:0,1:1;1)\" --output json") == 0);
    CHECK(run_cli("hom --m 1 --arcs \"(1:1|1:0)\" \"(1:1|1:0)\"") == 0);
    CHECK(run_cli("verify --m 1 --window 0") == 2);      // configuration error
    CHECK(run_cli("hom --m 1 \"(1:0,1:2;9)\" \"(1:0,1:1;0)\"") == 2);
    CHECK(run_cli("hom --m 1 \"(2:0,2:2;0)\" \"(2:0,2:1;0)\"") == 2);  // copy out of range
    CHECK(run_cli("arquiver --m 2 --window 2 --format dot --out -") == 0);
    CHECK(run_cli("nonsense") == 2);
}
#endif

TEST_CASE("all verification suites pass on a small window") {
    VerifyConfig cfg;
    cfg.gon = GonConfig{2};
    cfg.window = 2;
    cfg.oracle_pair_samples = 150;
    cfg.proj_pair_samples = 80;
    cfg.triple_samples = 60;
    cfg.uniserial_samples = 40;
    cfg.exactness_pair_cap = 300;
    const auto suites = run_all_suites(cfg);
    CHECK(suites.size() == 16);
    for (const SuiteResult& s : suites) {
        INFO(s.name);
        CHECK(s.pass);
    }
    CHECK(all_passed(suites));
}
