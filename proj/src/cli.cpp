#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "sas/facet.hpp"
#include "sas/io.hpp"
#include "sas/stats.hpp"
#include "sas/surface.hpp"
#include "sas/verify.hpp"

namespace sas {

namespace {

/// Raised for arguments that parse but describe no valid instance.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InstanceArgs {
    std::string mode = "surface";
    std::string style = "le";
    int m = 0;
    int n = 0;
};

void add_instance_flags(CLI::App* cmd, InstanceArgs& a) {
    cmd->add_option("--mode", a.mode, "Coupling of the optical I/O")->check(CLI::IsMember({"surface", "facet"}));
    cmd->add_option("--style", a.style, "Switch realization")->check(CLI::IsMember({"le", "bt"}));
    cmd->add_option("-m", a.m, "Input port count")->required();
    cmd->add_option("-n", a.n, "Output port count")->required();
}

CircuitSpec spec_of(const InstanceArgs& a) {
    try {
        return make_spec(a.m, a.n, a.mode == "surface" ? Coupling::Surface : Coupling::Facet,
                         a.style == "le" ? SwitchStyle::LumpedElement : SwitchStyle::BinaryTree);
    } catch (const LayoutError& e) {
        throw UsageError(e.what());
    }
}

Drawing layout_of(const CircuitSpec& s, const std::string& kind) {
    const bool surface = s.coupling == Coupling::Surface;
    const bool le = s.style == SwitchStyle::LumpedElement;
    if (kind == "basic") return surface ? build_basic_surface_drawing(s.m, s.n) : build_facet_axes_drawing(s.m, s.n);
    if (kind == "optimized")
        return surface ? build_zarankiewicz_drawing(s.m, s.n) : build_interleaved_facet_drawing(s.m, s.n);
    if (kind == "subgraph")
        return surface ? build_spanning_max_planar_subgraph(s.m, s.n) : build_facet_spanning_planar_subgraph(s.m, s.n);
    if (surface) return le ? place_wop_le_surface(s.m, s.n) : place_wop_bt_surface(s.m, s.n);
    return le ? place_wop_le_facet(s.m, s.n) : place_wop_bt_facet(s.m, s.n);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << content;
    if (!f) throw std::runtime_error("failed writing " + path);
}

std::string db(double v) {
    if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

int run_verify(int max_m, int max_n, bool convex, bool json, std::ostream& out, std::ostream& err) {
    const auto reports = verify_sweep(max_m, max_n);
    std::size_t failed = 0, noted = 0;
    for (const auto& r : reports) {
        if (json) out << report_json(r);
        noted += r.pass && !r.discrepancies.empty();
        if (r.pass) continue;
        ++failed;
        err << "FAIL " << r.spec.m << "x" << r.spec.n << " " << to_string(r.spec.coupling) << " "
            << to_string(r.spec.style) << ":";
        for (const auto& d : r.discrepancies)
            if (!d.whitelisted) err << " " << d.quantity << " formula " << d.formula << " measured " << d.measured;
        err << "\n";
    }
    out << "verified " << reports.size() << " instances up to " << max_m << "x" << max_n << ": "
        << reports.size() - failed << " pass, " << failed << " fail, " << noted
        << " with the whitelisted floor-form note\n";

    if (convex) {
        for (int n = 2; n <= 4; ++n) {
            const ConvexSearchResult c = exhaustive_convex_search(n);
            std::string alternating;
            for (int k = 0; k < n; ++k) alternating += "MN";
            const bool has_alternating =
                std::find(c.optimal_orders.begin(), c.optimal_orders.end(), alternating) != c.optimal_orders.end();
            const bool ok = has_alternating && c.min_crossings == eta_facet_interleaved(n, n);
            out << "convex n=" << n << ": minimum " << c.min_crossings << " over " << c.classes_examined
                << " classes, alternating order " << (has_alternating ? "optimal" : "not optimal") << "\n";
            if (!ok) {
                ++failed;
                err << "FAIL convex search n=" << n << "\n";
            }
        }
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Crossing and overpass counts for switch-and-select photonic circuits", "sas"};
    app.require_subcommand(1);

    InstanceArgs count_args;
    CLI::App* count = app.add_subcommand("count", "Print the closed-form counts of one instance as JSON");
    add_instance_flags(count, count_args);

    InstanceArgs layout_args;
    std::string out_path, svg_path, drawing_kind = "wop";
    RenderOptions render;
    CLI::App* layout = app.add_subcommand("layout", "Build a drawing and write it as JSON (and SVG)");
    add_instance_flags(layout, layout_args);
    layout->add_option("--out", out_path, "JSON output file")->required();
    layout->add_option("--svg", svg_path, "SVG output file");
    layout->add_option("--drawing", drawing_kind, "Which drawing to build")
        ->check(CLI::IsMember({"wop", "basic", "optimized", "subgraph"}));
    layout->add_option("--width", render.width_px, "SVG width in pixels")->check(CLI::Range(64, 100000));
    layout->add_flag("--markers", render.show_crossing_markers, "Mark planar crossings in the SVG");
    layout->add_flag("--labels", render.label_vertices, "Label vertices in the SVG");

    int which = 1;
    CLI::App* table = app.add_subcommand("table", "Print a reproduced comparison table as markdown");
    table->add_option("--which", which, "1: surface coupling, 2: facet coupling")->check(CLI::IsMember({1, 2}));

    int max_m = 12, max_n = 12;
    bool convex = false, as_json = false;
    CLI::App* verify = app.add_subcommand("verify", "Recount every drawing of a sweep against the closed forms");
    verify->add_option("--max-m", max_m, "Largest input count")->check(CLI::PositiveNumber);
    verify->add_option("--max-n", max_n, "Largest output count")->check(CLI::PositiveNumber);
    verify->add_flag("--exhaustive-convex", convex, "Also search all convex arrangements for n = 2, 3, 4");
    verify->add_flag("--json", as_json, "Print every report as JSON");

    long long crossings = 0;
    double il = 0, xt = 0;
    bool incoherent = false;
    CLI::App* penalty = app.add_subcommand("penalty", "Loss and crosstalk accumulated over crossings on one path");
    penalty->add_option("--crossings", crossings, "Crossings on the path")->required();
    penalty->add_option("--il-db", il, "Insertion loss per crossing (dB)")->required();
    penalty->add_option("--xt-db", xt, "Crosstalk per crossing (dB)")->required();
    penalty->add_flag("--incoherent", incoherent, "Add crosstalk powers instead of amplitudes");

    // CLI11 wants argv order reversed when handed a vector.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*count) {
            const CircuitSpec s = spec_of(count_args);
            out << formulas_json(s.coupling == Coupling::Surface ? FormulaValues{surface_formulas(s.m, s.n)}
                                                                 : FormulaValues{facet_formulas(s.m, s.n)});
        } else if (*layout) {
            const CircuitSpec s = spec_of(layout_args);
            const Drawing d = layout_of(s, drawing_kind);
            write_file(out_path, export_drawing_json(d));
            if (!svg_path.empty()) write_file(svg_path, render_svg(d, render));
            out << "wrote " << out_path << (svg_path.empty() ? "" : " and " + svg_path) << ": "
                << d.edges().size() << " edges, " << d.count_edges(EdgeKind::Overpass) << " overpasses\n";
        } else if (*table) {
            const Tables t = reproduce_tables();
            out << table_markdown(which == 1 ? t.surface : t.facet, which);
        } else if (*verify) {
            return run_verify(max_m, max_n, convex, as_json, out, err);
        } else if (*penalty) {
            PathPenalty p;
            try {
                p = path_penalty(crossings, il, xt, incoherent);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            out << "IL: " << db(p.total_il_db) << " dB, worst-case " << (incoherent ? "incoherent" : "coherent")
                << " XT: " << db(p.worst_case_xt_db) << " dB\n";
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace sas
