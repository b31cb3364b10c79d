#include "gridcover/codes.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using json = nlohmann::ordered_json;
using namespace gridcover;

namespace {

int g_status = 0; // 0 ok, 1 verification/cross-check mismatch

int enumeration_bound() {
    if (const char* env = std::getenv("GRIDCOVER_MAX_P")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return kDefaultEnumerationBound;
}

json report_to_json(const CrossCheckReport& report) {
    json entries = json::array();
    for (const auto& e : report.entries)
        entries.push_back({{"a", e.a.str()},
                           {"b", e.b.str()},
                           {"found", e.found_count},
                           {"predicted", e.predicted_count},
                           {"structure_ok", e.structure_ok}});
    return {{"family", family_name(report.spec.family)},
            {"p", report.spec.p},
            {"special_t", report.spec.special_t},
            {"match", report.match},
            {"entries", entries},
            {"notes", report.notes},
            {"witnesses", report.witnesses}};
}

void print_report_csv(std::ostream& out, const CrossCheckReport& report, bool header) {
    if (header) out << "family,p,special_t,a,b,found,predicted,structure_ok,match\n";
    for (const auto& e : report.entries)
        out << family_name(report.spec.family) << ',' << report.spec.p << ','
            << (report.spec.special_t ? 1 : 0) << ",\"" << e.a.str() << "\",\"" << e.b.str()
            << "\"," << e.found_count << ',' << e.predicted_count << ','
            << (e.structure_ok ? 1 : 0) << ',' << (report.match ? 1 : 0) << '\n';
}

json cycle_to_json(const WeightedCycle& cycle) {
    json weights = json::array();
    for (const auto& w : cycle.weights.weights) weights.push_back(w.str());
    return {{"p", cycle.p}, {"weights", weights}};
}

CodeFamily parse_family(const std::string& s) {
    for (int i = 1; i <= 5; ++i) {
        const CodeFamily f = static_cast<CodeFamily>(i);
        if (s == code_family_name(f) || s == std::to_string(i)) return f;
    }
    throw CLI::ValidationError("--family", "expected coloring1..coloring5");
}

Orientation parse_orientation(const std::string& s) {
    if (s == "parallel") return Orientation::Parallel;
    if (s == "crossed") return Orientation::Crossed;
    throw CLI::ValidationError("--orientation", "expected parallel or crossed");
}

struct GenArgs {
    std::string family = "coloring1";
    int r = 2;
    int alpha = 0;
    std::string variant = "two";
    std::string preset = "default";
    std::string pattern;
    std::string orientation = "parallel";
};

GeneratedCode generate_from_args(const GenArgs& args, FamilySpec& spec_out) {
    FamilySpec spec;
    spec.family = parse_family(args.family);
    spec.r = args.r;
    if (args.variant == "three") spec.variant = Coloring5Variant::ThreePeriodic;
    else if (args.variant != "two")
        throw CLI::ValidationError("--variant", "expected two or three");

    CodePreset preset;
    if (args.preset == "default") {
        CodeTableRow row;
        row.family = spec.family;
        row.r = spec.r;
        if (spec.family == CodeFamily::Coloring5) row.variant = spec.variant;
        if (spec.family != CodeFamily::Coloring3 || args.alpha >= 0) row.alpha = args.alpha;
        preset = row_preset(row);
    } else if (args.preset == "initial-block") {
        preset = CodePreset::initial_block(args.alpha);
    } else if (args.preset == "alternate") {
        preset = CodePreset::alternate();
    } else if (args.preset == "half-black") {
        preset = CodePreset::half_black();
    } else if (args.preset == "three-pattern") {
        preset = CodePreset::three_pattern(args.alpha);
    } else if (args.preset == "explicit") {
        if (args.pattern.empty())
            throw CLI::ValidationError("--pattern", "required with --preset explicit");
        preset = CodePreset::explicit_pattern(Coloring::from_string(args.pattern));
    } else {
        throw CLI::ValidationError("--preset",
                                   "expected initial-block, alternate, half-black, "
                                   "three-pattern or explicit");
    }
    spec_out = spec;
    return generate_code(spec, preset, parse_orientation(args.orientation));
}

void write_pbm(std::ostream& out, const PeriodicColoring& coloring, int w, int h) {
    out << "P1\n" << w << ' ' << h << '\n';
    for (int row = 0; row < h; ++row) {
        const int x2 = h - 1 - row; // top row first
        for (int x1 = 0; x1 < w; ++x1) {
            if (x1) out << ' ';
            out << (coloring.black(x1, x2) ? 1 : 0);
        }
        out << '\n';
    }
}

void write_svg(std::ostream& out, const PeriodicColoring& coloring, int w, int h, int cell) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w * cell
        << "\" height=\"" << h * cell << "\">\n";
    out << "  <rect width=\"" << w * cell << "\" height=\"" << h * cell
        << "\" fill=\"white\" stroke=\"none\"/>\n";
    for (int row = 0; row < h; ++row) {
        const int x2 = h - 1 - row;
        for (int x1 = 0; x1 < w; ++x1)
            if (coloring.black(x1, x2))
                out << "  <rect x=\"" << x1 * cell << "\" y=\"" << row * cell << "\" width=\""
                    << cell << "\" height=\"" << cell << "\" fill=\"black\"/>\n";
    }
    out << "</svg>\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for constant 2-labellings of weighted cycles and "
                 "periodic lattice covering codes"};
    app.require_subcommand(1);

    // enumerate: one family/p, table vs exhaustive enumeration
    auto* enumerate_cmd = app.add_subcommand("enumerate", "cross-check one cycle family at one p");
    int en_type = 1, en_p = 2;
    bool en_special = false;
    std::string en_format = "json";
    enumerate_cmd->add_option("--type", en_type, "cycle family 1..8")->required()
        ->check(CLI::Range(1, 8));
    enumerate_cmd->add_option("--p", en_p, "cycle length")->required();
    enumerate_cmd->add_flag("--special-t", en_special, "impose t = (p/4)x + (1-p/4)y (type 8)");
    enumerate_cmd->add_option("--format", en_format)->check(CLI::IsMember({"json", "csv"}));
    enumerate_cmd->callback([&] {
        CycleSpec spec{static_cast<Family>(en_type), en_p, std::nullopt, en_special};
        const CrossCheckReport report = cross_check(spec, enumeration_bound());
        if (en_format == "csv") print_report_csv(std::cout, report, true);
        else std::cout << report_to_json(report).dump(2) << '\n';
        if (!report.match) {
            std::cerr << report_to_json(report).dump() << '\n';
            g_status = 1;
        }
    });

    // cross-check: all families, all valid p up to a bound
    auto* cross_cmd = app.add_subcommand("cross-check", "cross-check all families up to p-max");
    int cc_pmax = 10;
    std::string cc_format = "json";
    cross_cmd->add_option("--p-max", cc_pmax, "largest cycle length")->required();
    cross_cmd->add_option("--format", cc_format)->check(CLI::IsMember({"json", "csv"}));
    cross_cmd->callback([&] {
        json out = json::array();
        bool first = true;
        for (const CycleSpec& spec : all_specs_up_to(cc_pmax)) {
            const CrossCheckReport report = cross_check(spec, enumeration_bound());
            if (cc_format == "csv") {
                print_report_csv(std::cout, report, first);
                first = false;
            } else {
                out.push_back(report_to_json(report));
            }
            if (!report.match) {
                std::cerr << report_to_json(report).dump() << '\n';
                g_status = 1;
            }
        }
        if (cc_format == "json") std::cout << out.dump(2) << '\n';
    });

    // project
    auto* project_cmd = app.add_subcommand("project", "project a Manhattan ball onto a line");
    int pr_r = 2, pr_shift = 1;
    std::string pr_format = "json";
    project_cmd->add_option("--r", pr_r, "ball radius")->required();
    project_cmd->add_option("--shift", pr_shift, "diagonal translation step (shift, 1)")
        ->required();
    project_cmd->add_option("--format", pr_format)->check(CLI::IsMember({"json", "csv"}));
    project_cmd->callback([&] {
        const ProjectionProfile profile = project_ball(pr_r, pr_shift);
        if (pr_format == "csv") {
            std::cout << "i,h\n";
            for (const auto& [i, h] : profile.values) std::cout << i << ',' << h << '\n';
        } else {
            json values = json::object();
            for (const auto& [i, h] : profile.values) values[std::to_string(i)] = h;
            std::cout << json{{"r", profile.r},
                              {"shift", profile.shift},
                              {"total", profile.total()},
                              {"values", values}}
                             .dump(2)
                      << '\n';
        }
    });

    // fold
    auto* fold_cmd = app.add_subcommand("fold", "fold a projected ball onto a cycle");
    int fo_r = 2, fo_shift = 1, fo_p = 2;
    fold_cmd->add_option("--r", fo_r, "ball radius")->required();
    fold_cmd->add_option("--shift", fo_shift, "diagonal translation step")->required();
    fold_cmd->add_option("--p", fo_p, "cycle length")->required();
    fold_cmd->callback([&] {
        const WeightedCycle cycle = fold_profile(project_ball(fo_r, fo_shift), fo_p);
        std::cout << cycle_to_json(cycle).dump(2) << '\n';
    });

    // table
    auto* table_cmd = app.add_subcommand("table", "the (r, a, b) table of all five families");
    int ta_r = 2;
    bool ta_scope = false;
    std::string ta_format = "json";
    table_cmd->add_option("--r", ta_r, "ball radius")->required();
    table_cmd->add_flag("--only-in-scope", ta_scope, "keep only rows with |a-b| > 4");
    table_cmd->add_option("--format", ta_format)->check(CLI::IsMember({"json", "csv"}));
    table_cmd->callback([&] {
        const std::vector<CodeTableRow> rows = theorem_table(ta_r);
        if (ta_format == "csv") {
            std::cout << "family,r,alpha,a,b,in_scope\n";
            for (const auto& row : rows) {
                if (ta_scope && !row.in_scope) continue;
                std::cout << code_family_name(row.family) << ',' << row.r << ','
                          << (row.alpha ? std::to_string(*row.alpha) : "") << ',' << row.a << ','
                          << row.b << ',' << (row.in_scope ? 1 : 0) << '\n';
            }
        } else {
            json out = json::array();
            for (const auto& row : rows) {
                if (ta_scope && !row.in_scope) continue;
                json j = {{"family", code_family_name(row.family)},
                          {"r", row.r},
                          {"alpha", nullptr},
                          {"a", row.a},
                          {"b", row.b},
                          {"in_scope", row.in_scope}};
                if (row.alpha) j["alpha"] = *row.alpha;
                if (row.variant)
                    j["variant"] =
                        *row.variant == Coloring5Variant::TwoPeriodic ? "two" : "three";
                out.push_back(std::move(j));
            }
            std::cout << out.dump(2) << '\n';
        }
    });

    // gen-code
    auto* gen_cmd = app.add_subcommand("gen-code", "generate a verified periodic code coloring");
    GenArgs gen_args;
    gen_cmd->add_option("--family", gen_args.family, "coloring1..coloring5")->required();
    gen_cmd->add_option("--r", gen_args.r, "ball radius")->required();
    gen_cmd->add_option("--alpha", gen_args.alpha, "row parameter");
    gen_cmd->add_option("--variant", gen_args.variant, "coloring5 variant: two|three");
    gen_cmd->add_option("--preset", gen_args.preset,
                        "initial-block|alternate|half-black|three-pattern|explicit");
    gen_cmd->add_option("--pattern", gen_args.pattern, "explicit line pattern over {1,0}");
    gen_cmd->add_option("--orientation", gen_args.orientation, "parallel|crossed");
    gen_cmd->callback([&] {
        FamilySpec spec;
        const GeneratedCode code = generate_from_args(gen_args, spec);
        json out = {{"family", code_family_name(spec.family)},
                    {"r", spec.r},
                    {"orientation", orientation_name(code.coloring.orientation())},
                    {"pattern", code.coloring.pattern().colors.str()},
                    {"cycle", cycle_to_json(code.cycle)},
                    {"a", nullptr},
                    {"b", nullptr}};
        if (code.a) out["a"] = *code.a;
        if (code.b) out["b"] = *code.b;
        std::cout << out.dump(2) << '\n';
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verify a line pattern as an (r, a, b)-code");
    int ve_r = 2;
    std::string ve_pattern, ve_orientation = "parallel";
    verify_cmd->add_option("--r", ve_r, "ball radius")->required();
    verify_cmd->add_option("--pattern", ve_pattern, "line pattern over {1,0}")->required();
    verify_cmd->add_option("--orientation", ve_orientation, "parallel|crossed");
    verify_cmd->callback([&] {
        const PeriodicColoring coloring = build_diagonal_coloring(
            LinePattern{Coloring::from_string(ve_pattern)}, parse_orientation(ve_orientation));
        const CodeReport report = verify_code(coloring, ve_r);
        json out = {{"status", report.verified() ? "verified" : "violated"},
                    {"a", nullptr},
                    {"b", nullptr}};
        if (report.a) out["a"] = *report.a;
        if (report.b) out["b"] = *report.b;
        if (report.violation) {
            out["violation"] = {{"cell", {report.violation->cell[0], report.violation->cell[1]}},
                                {"center", report.violation->center_black ? "black" : "white"},
                                {"expected", report.violation->expected},
                                {"observed", report.violation->observed}};
        }
        std::cout << out.dump(2) << '\n';
        if (!report.verified()) {
            std::cerr << out.dump() << '\n';
            g_status = 1;
        }
    });

    // render
    auto* render_cmd = app.add_subcommand("render", "render a generated code as PBM or SVG");
    GenArgs render_args;
    std::string rd_window = "16x16", rd_out, rd_format = "pbm";
    int rd_cell = 16;
    render_cmd->add_option("--family", render_args.family, "coloring1..coloring5")->required();
    render_cmd->add_option("--r", render_args.r, "ball radius")->required();
    render_cmd->add_option("--alpha", render_args.alpha, "row parameter");
    render_cmd->add_option("--variant", render_args.variant, "coloring5 variant: two|three");
    render_cmd->add_option("--preset", render_args.preset, "pattern preset");
    render_cmd->add_option("--pattern", render_args.pattern, "explicit line pattern");
    render_cmd->add_option("--orientation", render_args.orientation, "parallel|crossed");
    render_cmd->add_option("--window", rd_window, "window size, e.g. 12x8")->required();
    render_cmd->add_option("-o,--output", rd_out, "output file (stdout if omitted)");
    render_cmd->add_option("--format", rd_format)->check(CLI::IsMember({"pbm", "svg"}));
    render_cmd->add_option("--cell-size", rd_cell, "SVG cell size in units");
    render_cmd->callback([&] {
        int w = 0, h = 0;
        char sep = 0;
        std::istringstream win(rd_window);
        if (!(win >> w >> sep >> h) || sep != 'x' || w < 1 || h < 1)
            throw CLI::ValidationError("--window", "expected WIDTHxHEIGHT with positive sizes");
        FamilySpec spec;
        const GeneratedCode code = generate_from_args(render_args, spec);
        std::ostringstream buf;
        if (rd_format == "svg") write_svg(buf, code.coloring, w, h, rd_cell);
        else write_pbm(buf, code.coloring, w, h);
        if (rd_out.empty()) {
            std::cout << buf.str();
        } else {
            std::ofstream file(rd_out, std::ios::binary);
            if (!file) throw std::invalid_argument("cannot open output file: " + rd_out);
            file << buf.str();
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return g_status;
}
