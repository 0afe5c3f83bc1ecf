#include "zgon/arc.hpp"
#include "zgon/enumerate.hpp"
#include "zgon/hom.hpp"
#include "zgon/io.hpp"
#include "zgon/plot.hpp"
#include "zgon/quiver.hpp"
#include "zgon/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

// Exit codes: 0 ok, 1 verification mismatch, 2 usage or input error.
constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty() || path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << payload;
}

int run_hom(int m, bool arcs, const std::string& output, const std::string& lhs,
            const std::string& rhs) {
    const zgon::GonConfig gon{m};
    zgon::Interval u, v;
    std::string lhs_text, rhs_text;
    if (arcs) {
        const zgon::Arc a = zgon::parse_arc(lhs);
        const zgon::Arc b = zgon::parse_arc(rhs);
        gon.require_point(a.hi);
        gon.require_point(a.lo);
        gon.require_point(b.hi);
        gon.require_point(b.lo);
        u = zgon::arc_to_interval(a);
        v = zgon::arc_to_interval(b);
        lhs_text = zgon::format_arc(a);
        rhs_text = zgon::format_arc(b);
    } else {
        u = zgon::parse_interval(lhs);
        v = zgon::parse_interval(rhs);
        gon.require_point(u.start);
        gon.require_point(u.end);
        gon.require_point(v.start);
        gon.require_point(v.end);
        zgon::require_in_family(u);
        zgon::require_in_family(v);
        lhs_text = zgon::format_interval(u);
        rhs_text = zgon::format_interval(v);
    }
    const zgon::HomReport report = zgon::make_hom_report(u, v);
    if (output == "json")
        std::cout << zgon::hom_report_to_json(report, lhs_text, rhs_text) << "\n";
    else
        std::cout << zgon::hom_report_to_text(report, lhs_text, rhs_text);
    return kOk;
}

int run_verify(const zgon::VerifyConfig& cfg, const std::string& output) {
    const std::vector<zgon::SuiteResult> suites = zgon::run_all_suites(cfg);
    if (output == "json")
        std::cout << zgon::suites_to_json(cfg, suites) << "\n";
    else
        std::cout << zgon::suites_to_text(suites);
    return zgon::all_passed(suites) ? kOk : kMismatch;
}

int run_arquiver(int m, long long window, const std::string& format, const std::string& out) {
    const zgon::ArQuiver q = zgon::build_ar_quiver(zgon::GonConfig{m}, window);
    if (format == "dot") {
        write_output(out, zgon::ar_quiver_to_dot(q));
    } else {  // structured adjacency listing
        nlohmann::json j;
        j["m"] = m;
        j["window"] = window;
        j["components"] = q.component_count;
        j["vertices"] = nlohmann::json::array();
        for (size_t i = 0; i < q.vertices.size(); ++i)
            j["vertices"].push_back(
                {{"arc", zgon::format_arc(q.vertices[i])}, {"component", q.component[i]}});
        j["edges"] = nlohmann::json::array();
        for (const auto& [s, t] : q.edges)
            j["edges"].push_back({{"from", zgon::format_arc(q.vertices[s])},
                                  {"to", zgon::format_arc(q.vertices[t])}});
        write_output(out, j.dump(2) + "\n");
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for discrete symmetric Nakayama representations and their "
                 "stable category"};
    app.require_subcommand(1);

    int m = 1;
    long long window = 4;
    std::string field = "rational";
    std::uint64_t seed = 1;
    std::string output = "text";
    std::string format;
    std::string out_path = "-";

    auto* hom = app.add_subcommand("hom", "Hom dimensions and hammock class for a pair");
    bool arcs = false;
    std::string lhs, rhs;
    hom->add_option("--m", m, "number of accumulation points")->check(CLI::PositiveNumber);
    hom->add_flag("--arcs", arcs, "treat the operands as arcs of the stable category");
    hom->add_option("--output", output, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    hom->add_option("source", lhs, "source object")->required();
    hom->add_option("target", rhs, "target object")->required();

    auto* verify = app.add_subcommand("verify", "run every invariant suite on a window");
    verify->add_option("--m", m, "number of accumulation points")->check(CLI::PositiveNumber);
    verify->add_option("--window", window, "index bound per copy")->check(CLI::PositiveNumber);
    verify->add_option("--field", field, "rational|prime")
        ->check(CLI::IsMember({"rational", "prime"}));
    verify->add_option("--seed", seed, "seed for sampled suites");
    verify->add_option("--output", output, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* arquiver = app.add_subcommand("arquiver", "export the windowed AR quiver");
    arquiver->add_option("--m", m, "number of accumulation points")->check(CLI::PositiveNumber);
    arquiver->add_option("--window", window, "index bound per copy")
        ->check(CLI::NonNegativeNumber);
    arquiver->add_option("--format", format, "dot|json")
        ->default_val("dot")
        ->check(CLI::IsMember({"dot", "json"}));
    arquiver->add_option("--out", out_path, "output file, - for stdout");

    auto* plot = app.add_subcommand("plot", "render the circle model as SVG");
    std::vector<std::string> objects;
    std::string hammocks_arg, triangle_arg;
    plot->add_option("--m", m, "number of accumulation points")->check(CLI::PositiveNumber);
    plot->add_option("--window", window, "index bound for drawn vertices");
    plot->add_option("--format", format, "svg")->default_val("svg")->check(CLI::IsMember({"svg"}));
    plot->add_option("--out", out_path, "output file, - for stdout");
    plot->add_option("--hammocks", hammocks_arg, "shade the Hom regions of this arc");
    plot->add_option("--triangle", triangle_arg, "draw the almost split triangle of this arc");
    plot->add_option("arcs", objects, "arcs to draw");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (hom->parsed()) return run_hom(m, arcs, output, lhs, rhs);
        if (verify->parsed()) {
            zgon::VerifyConfig cfg;
            cfg.gon = zgon::GonConfig{m};
            cfg.window = window;
            cfg.field = field == "prime" ? zgon::oracle::FieldKind::kPrime
                                         : zgon::oracle::FieldKind::kRational;
            cfg.seed = seed;
            return run_verify(cfg, output);
        }
        if (arquiver->parsed()) return run_arquiver(m, window, format, out_path);
        if (plot->parsed()) {
            zgon::PlotRequest req;
            req.gon = zgon::GonConfig{m};
            req.window = window;
            for (const std::string& s : objects) req.arcs.push_back(zgon::parse_arc(s));
            if (!hammocks_arg.empty()) req.hammocks_of = zgon::parse_arc(hammocks_arg);
            if (!triangle_arg.empty()) req.triangle_of = zgon::parse_arc(triangle_arg);
            write_output(out_path, zgon::render_svg(req));
            return kOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
