#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "spalg/report.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) spalg::fail("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analyzer for graded algebras presented by homogeneous potentials"};
    app.require_subcommand(1);

    std::string path;
    spalg::AnalyzeOptions opts;
    std::size_t ell_flag = 0;
    std::uint64_t field_flag = 0;
    std::string twist_path;
    bool text = false, json_out = false, serial = false, potential_mode = false;

    auto* cmd_analyze = app.add_subcommand("analyze", "run the full analysis pipeline");
    cmd_analyze->add_option("file", path, "input file")->required();
    cmd_analyze->add_option("--m", opts.m, "relation degree in potential mode (default 2)");
    auto* ell_opt =
        cmd_analyze->add_option("--ell", ell_flag, "superpotential degree in relations mode");
    cmd_analyze->add_flag("--relations", opts.relations_mode,
                          "read rel statements and extract the potential");
    cmd_analyze->add_flag("--potential", potential_mode,
                          "read a w statement and derive the relations (default)");
    cmd_analyze->add_option("--koszul-depth", opts.koszul_depth,
                            "exactness certificate depth (default 8)");
    cmd_analyze->add_option("--field", field_flag, "prime characteristic to compute in");
    cmd_analyze->add_option("--twist", twist_path, "file of automorphisms to twist by");
    cmd_analyze->add_flag("--json", json_out, "JSON output (default)");
    cmd_analyze->add_flag("--text", text, "indented text output");
    cmd_analyze->add_flag("--serial", serial, "disable parallel kernels");

    std::string parse_path;
    std::uint64_t parse_field_flag = 0;
    auto* cmd_parse = app.add_subcommand("parse", "parse the input and echo it back");
    cmd_parse->add_option("file", parse_path, "input file")->required();
    cmd_parse->add_option("--field", parse_field_flag, "prime characteristic to compute in");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_parse) {
            std::optional<spalg::Field> force;
            if (parse_field_flag) force = spalg::Field::prime(parse_field_flag);
            spalg::ParsedInput in = spalg::parse_input(slurp(parse_path), force);
            nlohmann::ordered_json echo;
            echo["field"] = in.field.name();
            echo["vars"] = in.vars;
            if (in.w) echo["potential"] = spalg::render_tensor(*in.w, in.vars);
            nlohmann::ordered_json rels = nlohmann::ordered_json::array();
            for (const auto& r : in.relations)
                rels.push_back(spalg::render_tensor(r, in.vars));
            if (!rels.empty()) echo["relations"] = rels;
            nlohmann::ordered_json auts = nlohmann::ordered_json::array();
            for (const auto& [name, m] : in.automorphisms)
                auts.push_back({{"name", name}, {"matrix", spalg::render_matrix(m)}});
            if (!auts.empty()) echo["automorphisms"] = auts;
            std::cout << echo.dump(2) << "\n";
            return 0;
        }

        if (serial) spalg::set_default_kernel(spalg::Kernel::serial);
        if (opts.relations_mode && potential_mode) {
            std::cerr << "error: --relations and --potential are mutually exclusive\n";
            return 2;
        }
        std::optional<spalg::Field> force;
        if (field_flag) force = spalg::Field::prime(field_flag);
        spalg::ParsedInput in = spalg::parse_input(slurp(path), force);
        if (opts.relations_mode) {
            if (ell_opt->count() == 0) {
                std::cerr << "error: relations mode requires --ell\n";
                return 2;
            }
            opts.ell = ell_flag;
            if (in.relations.empty()) {
                std::cerr << "error: no rel statements in '" << path << "'\n";
                return 2;
            }
        } else if (!in.w) {
            std::cerr << "error: no potential statement in '" << path << "'\n";
            return 2;
        }

        std::optional<spalg::ParsedInput> twist_in;
        if (!twist_path.empty()) {
            twist_in = spalg::parse_input(slurp(twist_path), in.field);
            if (twist_in->vars != in.vars) {
                std::cerr << "error: twist file declares different variables\n";
                return 2;
            }
        }

        nlohmann::ordered_json report =
            spalg::analyze(in, twist_in ? &*twist_in : nullptr, opts);
        if (text && !json_out)
            std::cout << spalg::render_text(report);
        else
            std::cout << report.dump(2) << "\n";
        return report["all_checks_passed"].get<bool>() ? 0 : 1;
    } catch (const spalg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
