#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "aprac/factorization.hpp"
#include "aprac/generators.hpp"
#include "aprac/graph.hpp"
#include "aprac/layout.hpp"
#include "aprac/oracle.hpp"
#include "aprac/render.hpp"
#include "aprac/validator.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        write_file(path, text);
}

aprac::Mode parse_mode(const std::string& m) {
    if (m == "rac") return aprac::Mode::Rac;
    if (m == "aprac") return aprac::Mode::Aprac;
    if (m == "slope-rac") return aprac::Mode::SlopeRac;
    throw std::runtime_error("unknown mode '" + m + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"apRAC drawing toolkit: layout, validation, generators, search"};
    app.require_subcommand(1);

    // decompose
    std::string dc_input, dc_output;
    int dc_factors = -1;
    auto* dc = app.add_subcommand("decompose", "regularize and split into directed 2-factors");
    dc->add_option("--input", dc_input, "graph file")->required();
    dc->add_option("--factors", dc_factors, "number of factors d (default ceil(maxdeg/2))");
    dc->add_option("--output", dc_output, "output path (default stdout)");

    // draw
    std::string dr_input, dr_output;
    bool dr_keep = false, dr_factors_out = false;
    auto* dr = app.add_subcommand("draw", "2-bend apRAC drawing for a graph of max degree 8");
    dr->add_option("--input", dr_input, "graph file")->required();
    dr->add_option("--output", dr_output, "drawing file (default stdout)");
    dr->add_flag("--keep-augmented", dr_keep, "retain augmented arcs for debugging");
    dr->add_flag("--emit-factors", dr_factors_out, "append factor annotations as comments");

    // validate
    std::string va_input, va_mode = "aprac", va_slopes, va_report;
    int va_bends = 2;
    bool va_strict = false, va_full = false, va_certify = false;
    auto* va = app.add_subcommand("validate", "certify a drawing with exact arithmetic");
    va->add_option("--input", va_input, "drawing file")->required();
    va->add_option("--bends", va_bends, "bend budget k")->required();
    va->add_option("--mode", va_mode, "rac | aprac | slope-rac");
    va->add_option("--slopes", va_slopes, "slope set, e.g. \"0;1;-2/3\" (slope-rac)");
    va->add_flag("--strict-simple", va_strict, "edges may share at most one point");
    va->add_flag("--full", va_full, "force exhaustive crossing enumeration");
    va->add_flag("--certify", va_certify, "force the scalable engine (no crossing list)");
    va->add_option("--report", va_report, "write the report to a file");

    // generate
    std::string ge_family, ge_graph, ge_drawing;
    int ge_k = 0;
    auto* ge = app.add_subcommand("generate", "emit a lower-bound family with its drawing");
    ge->add_option("--family", ge_family, "aprac0 | aprac1 | aprac2")->required();
    ge->add_option("--k", ge_k, "family parameter")->required();
    ge->add_option("--out-graph", ge_graph, "graph output path");
    ge->add_option("--out-drawing", ge_drawing, "drawing output path");

    // oracle
    std::string or_input, or_grid = "6x6", or_mode = "aprac", or_output;
    bool or_det = false;
    auto* orc = app.add_subcommand("oracle", "exhaustive straight-line search on a small grid");
    orc->add_option("--input", or_input, "graph file")->required();
    orc->add_option("--grid", or_grid, "grid size WxH (default 6x6)");
    orc->add_option("--mode", or_mode, "rac | aprac");
    orc->add_option("--output", or_output, "drawing output path (default stdout)");
    orc->add_flag("--deterministic", or_det,
                  "force sequential search order (the search is sequential already)");

    // render
    std::string re_input, re_output;
    int re_scale = 4;
    bool re_marks = false, re_colors = false;
    auto* re = app.add_subcommand("render", "emit a deterministic SVG of a drawing");
    re->add_option("--input", re_input, "drawing file")->required();
    re->add_option("--output", re_output, "svg output path")->required();
    re->add_option("--scale", re_scale, "pixels per grid unit (default 4)");
    re->add_flag("--mark-crossings", re_marks, "draw a cross glyph at every crossing");
    re->add_flag("--color-by-factor", re_colors, "color edges by factor when annotated");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*dc) {
            aprac::Graph g = aprac::parse_graph(read_file(dc_input));
            int d = dc_factors >= 0 ? dc_factors : (aprac::max_degree(g) + 1) / 2;
            auto dmg = aprac::regularize(g, d);
            auto tf = aprac::split_two_factors(dmg, d);
            write_output(dc_output, aprac::format_factors(dmg, tf));
        } else if (*dr) {
            aprac::Graph g = aprac::parse_graph(read_file(dr_input));
            aprac::DrawOptions opts;
            opts.keep_augmented = dr_keep;
            aprac::Drawing d = aprac::draw(g, opts);
            write_output(dr_output, aprac::serialize_drawing(d, dr_factors_out));
        } else if (*va) {
            aprac::Drawing d = aprac::parse_drawing(read_file(va_input));
            aprac::ValidateOptions opts;
            opts.max_bends = va_bends;
            opts.mode = parse_mode(va_mode);
            if (!va_slopes.empty()) opts.slopes = aprac::parse_slope_set(va_slopes);
            opts.strict_simple = va_strict;
            if (va_full) opts.engine = aprac::ValidateOptions::Engine::Full;
            if (va_certify) opts.engine = aprac::ValidateOptions::Engine::Certify;
            auto rep = aprac::validate(d, opts);
            std::string text = rep.to_text();
            std::cout << text;
            if (!va_report.empty()) write_file(va_report, text);
            return rep.pass ? 0 : 1;
        } else if (*ge) {
            aprac::GeneratedFamily fam;
            if (ge_family == "aprac0")
                fam = aprac::gen_aprac0(ge_k);
            else if (ge_family == "aprac1")
                fam = aprac::gen_aprac1(ge_k);
            else if (ge_family == "aprac2")
                fam = aprac::gen_aprac2(ge_k);
            else
                throw std::runtime_error("unknown family '" + ge_family + "'");
            if (!ge_graph.empty()) write_file(ge_graph, aprac::serialize_graph(fam.graph));
            if (!ge_drawing.empty())
                write_file(ge_drawing, aprac::serialize_drawing(fam.drawing));
            std::cout << "generated " << ge_family << " k=" << ge_k
                      << ": n=" << fam.graph.n() << " m=" << fam.graph.m() << "\n";
        } else if (*orc) {
            aprac::Graph g = aprac::parse_graph(read_file(or_input));
            size_t xpos = or_grid.find('x');
            if (xpos == std::string::npos) throw std::runtime_error("grid must be WxH");
            int W = std::stoi(or_grid.substr(0, xpos));
            int H = std::stoi(or_grid.substr(xpos + 1));
            (void)or_det;  // the search is sequential and deterministic
            auto res = aprac::search_drawing(g, W, H, parse_mode(or_mode));
            if (res.drawing) {
                write_output(or_output, aprac::serialize_drawing(*res.drawing));
            } else {
                std::cout << "not-found: exhaustive search of the " << W << "x" << H
                          << " grid (up to translation and axis symmetries) found no "
                          << or_mode << " drawing; " << aprac::OracleResult::kDisclaimer
                          << "\n";
                return 2;
            }
        } else if (*re) {
            aprac::Drawing d = aprac::parse_drawing(read_file(re_input));
            aprac::RenderOptions opts;
            opts.scale = re_scale;
            opts.mark_crossings = re_marks;
            opts.color_by_factor = re_colors;
            write_file(re_output, aprac::to_svg(d, opts));
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
