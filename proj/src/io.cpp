#include "sas/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "sas/crossing.hpp"

namespace sas {

namespace {

using Json = nlohmann::ordered_json;

Json point_json(const ExactPoint& p) { return Json::array({format_rational(p.x), format_rational(p.y)}); }

Json polyline_json(const Polyline& line) {
    Json out = Json::array();
    for (const auto& p : line) out.push_back(point_json(p));
    return out;
}

Json vertex_ref(const VertexId& v) {
    return Json{{"party", to_string(v.party)}, {"index", v.index}, {"split_ordinal", v.split}};
}

template <class T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

[[noreturn]] void schema_error(const std::string& what) { throw LayoutError("drawing JSON: " + what); }

const Json& field(const Json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) schema_error(std::string("missing field \"") + key + "\"");
    return obj.at(key);
}

int int_field(const Json& obj, const char* key) {
    const Json& v = field(obj, key);
    if (!v.is_number_integer()) schema_error(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::string string_field(const Json& obj, const char* key) {
    const Json& v = field(obj, key);
    if (!v.is_string()) schema_error(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

Rational rational_of(const Json& v) {
    if (!v.is_string()) schema_error("coordinates must be \"p/q\" strings");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        schema_error(e.what());
    }
}

ExactPoint point_of(const Json& v) {
    if (!v.is_array() || v.size() != 2) schema_error("a point is a pair of coordinates");
    return {rational_of(v[0]), rational_of(v[1])};
}

Polyline polyline_of(const Json& v) {
    if (!v.is_array()) schema_error("a route is an array of points");
    Polyline out;
    for (const auto& p : v) out.push_back(point_of(p));
    return out;
}

Party party_of(const std::string& s) {
    if (s == "M") return Party::M;
    if (s == "N") return Party::N;
    if (s == "Port") return Party::Port;
    schema_error("unknown party \"" + s + "\"");
}

VertexId vertex_of(const Json& v) {
    return {party_of(string_field(v, "party")), int_field(v, "index"), int_field(v, "split_ordinal")};
}

Json formulas_value(const FormulaValues& formulas) {
    if (const auto* s = std::get_if<SurfaceFormulaSet>(&formulas))
        return Json{{"coupling", "surface"},
                    {"eta_basic", s->eta_basic},
                    {"eta_conjectured", s->eta_conjectured},
                    {"xi", s->xi},
                    {"mu_le", s->mu_le},
                    {"mu_bt", optional_json(s->mu_bt)}};
    const auto& f = std::get<FacetFormulaSet>(formulas);
    return Json{{"coupling", "facet"},
                {"eta_basic", f.eta_basic},
                {"eta_interleaved", optional_json(f.eta_interleaved)},
                {"xi", optional_json(f.xi)},
                {"mu_le", f.mu_le},
                {"mu_bt", optional_json(f.mu_bt)}};
}

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

class PixelMap {
   public:
    PixelMap(const Drawing& d, int width_px) {
        std::vector<ExactPoint> all;
        for (const auto& [v, p] : d.positions()) all.push_back(p);
        auto take = [&](const Polyline& line) { all.insert(all.end(), line.begin(), line.end()); };
        for (const auto& e : d.edges()) {
            take(e.route);
            if (e.stubs) {
                take(e.stubs->first);
                take(e.stubs->second);
            }
        }
        if (d.boundary()) take(*d.boundary());
        min_x_ = max_x_ = all.front().x.get_d();
        min_y_ = max_y_ = all.front().y.get_d();
        for (const auto& p : all) {
            min_x_ = std::min(min_x_, p.x.get_d());
            max_x_ = std::max(max_x_, p.x.get_d());
            min_y_ = std::min(min_y_, p.y.get_d());
            max_y_ = std::max(max_y_, p.y.get_d());
        }
        margin_ = 24;
        const double span = std::max({max_x_ - min_x_, max_y_ - min_y_, 1e-9});
        scale_ = (width_px - 2 * margin_) / span;
        width_ = width_px;
        height_ = static_cast<int>(std::ceil((max_y_ - min_y_) * scale_ + 2 * margin_));
    }

    double x(const ExactPoint& p) const { return margin_ + (p.x.get_d() - min_x_) * scale_; }
    double y(const ExactPoint& p) const { return margin_ + (max_y_ - p.y.get_d()) * scale_; }
    int width() const { return width_; }
    int height() const { return height_; }

    std::string points(const Polyline& line) const {
        std::string s;
        for (const auto& p : line) {
            if (!s.empty()) s += ' ';
            s += px(x(p)) + "," + px(y(p));
        }
        return s;
    }

   private:
    double min_x_, max_x_, min_y_, max_y_;
    double margin_, scale_;
    int width_, height_;
};

}  // namespace

std::string export_drawing_json(const Drawing& drawing) {
    const CircuitSpec& s = drawing.spec();
    Json root;
    root["spec"] = Json{{"m", s.m}, {"n", s.n}, {"coupling", to_string(s.coupling)}, {"style", to_string(s.style)}};
    root["complete"] = drawing.is_complete();

    Json vertices = Json::array();
    for (const auto& [v, p] : drawing.positions()) {
        Json entry = vertex_ref(v);
        entry["x"] = format_rational(p.x);
        entry["y"] = format_rational(p.y);
        vertices.push_back(std::move(entry));
    }
    root["vertices"] = std::move(vertices);

    Json edges = Json::array();
    for (const auto& e : drawing.edges()) {
        Json entry{{"from", vertex_ref(e.from)},
                   {"to", vertex_ref(e.to)},
                   {"kind", e.kind == EdgeKind::Planar ? "Planar" : "Overpass"},
                   {"route", polyline_json(e.route)}};
        entry["stubs"] = e.stubs ? Json::array({polyline_json(e.stubs->first), polyline_json(e.stubs->second)})
                                 : Json(nullptr);
        edges.push_back(std::move(entry));
    }
    root["edges"] = std::move(edges);
    root["boundary"] = drawing.boundary() ? polyline_json(*drawing.boundary()) : Json(nullptr);

    Json connections = Json::array();
    for (const auto& [c, path] : drawing.connections())
        connections.push_back(Json{{"input", c.first}, {"output", c.second}, {"edges", path}});
    root["connections"] = std::move(connections);
    return root.dump(1) + "\n";
}

Drawing parse_drawing_json(const std::string& text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::parse_error& e) {
        schema_error(e.what());
    }
    const Json& spec = field(root, "spec");
    const std::string coupling = string_field(spec, "coupling");
    const std::string style = string_field(spec, "style");
    if (coupling != "surface" && coupling != "facet") schema_error("unknown coupling \"" + coupling + "\"");
    if (style != "le" && style != "bt") schema_error("unknown style \"" + style + "\"");
    DrawingBuilder b(make_spec(int_field(spec, "m"), int_field(spec, "n"),
                               coupling == "surface" ? Coupling::Surface : Coupling::Facet,
                               style == "le" ? SwitchStyle::LumpedElement : SwitchStyle::BinaryTree));
    const Json& complete = field(root, "complete");
    if (!complete.is_boolean()) schema_error("field \"complete\" must be a boolean");
    if (!complete.get<bool>()) b.partial();

    for (const auto& v : field(root, "vertices")) b.add_vertex(vertex_of(v), {rational_of(field(v, "x")), rational_of(field(v, "y"))});

    for (const auto& e : field(root, "edges")) {
        Edge edge{vertex_of(field(e, "from")), vertex_of(field(e, "to")), EdgeKind::Planar, polyline_of(field(e, "route")),
                  std::nullopt};
        const std::string kind = string_field(e, "kind");
        if (kind == "Overpass") {
            edge.kind = EdgeKind::Overpass;
            const Json& stubs = field(e, "stubs");
            if (!stubs.is_array() || stubs.size() != 2) schema_error("an overpass needs two stubs");
            edge.stubs = std::make_pair(polyline_of(stubs[0]), polyline_of(stubs[1]));
        } else if (kind != "Planar") {
            schema_error("unknown edge kind \"" + kind + "\"");
        }
        b.add_edge(std::move(edge));
    }

    const Json& boundary = field(root, "boundary");
    if (!boundary.is_null()) b.set_boundary(polyline_of(boundary));

    for (const auto& c : field(root, "connections")) {
        const Json& path = field(c, "edges");
        if (!path.is_array()) schema_error("connection edges must be an array");
        std::vector<std::size_t> edges;
        for (const auto& k : path) {
            if (!k.is_number_unsigned()) schema_error("edge indices must be nonnegative integers");
            edges.push_back(k.get<std::size_t>());
        }
        b.connect(int_field(c, "input"), int_field(c, "output"), std::move(edges));
    }
    return b.build();
}

std::string formulas_json(const FormulaValues& formulas) { return formulas_value(formulas).dump(2) + "\n"; }

std::string report_json(const VerificationReport& report) {
    const CircuitSpec& s = report.spec;
    const MeasuredValues& mv = report.measured;
    Json discrepancies = Json::array();
    for (const auto& d : report.discrepancies)
        discrepancies.push_back(Json{{"quantity", d.quantity},
                                     {"formula", d.formula},
                                     {"measured", d.measured},
                                     {"note", d.note},
                                     {"whitelisted", d.whitelisted}});
    Json root{
        {"spec", Json{{"m", s.m}, {"n", s.n}, {"coupling", to_string(s.coupling)}, {"style", to_string(s.style)}}},
        {"formula_values", formulas_value(report.formulas)},
        {"measured_values", Json{{"eta_basic", mv.eta_basic},
                                 {"eta_optimized", optional_json(mv.eta_optimized)},
                                 {"xi", optional_json(mv.xi)},
                                 {"xi_along_paths", optional_json(mv.xi_along_paths)},
                                 {"subgraph_edges", optional_json(mv.subgraph_edges)},
                                 {"subgraph_planar", optional_json(mv.subgraph_planar)},
                                 {"mu", optional_json(mv.mu)},
                                 {"wop_planar_crossings", optional_json(mv.wop_planar_crossings)},
                                 {"wop_projection_crossings", optional_json(mv.wop_projection_crossings)},
                                 {"wop_max_per_path", optional_json(mv.wop_max_per_path)},
                                 {"wop_paths_with_overpass", optional_json(mv.wop_paths_with_overpass)}}},
        {"discrepancies", std::move(discrepancies)},
        {"quartic_ratio", optional_json(report.quartic_ratio)},
        {"pass", report.pass}};
    return root.dump(2) + "\n";
}

std::string render_svg(const Drawing& drawing, const RenderOptions& opts) {
    if (opts.width_px < 64) throw LayoutError("render width must be at least 64 px");
    const PixelMap map(drawing, opts.width_px);
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << map.width() << "\" height=\""
        << map.height() << "\" viewBox=\"0 0 " << map.width() << ' ' << map.height() << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (drawing.boundary())
        svg << "<polygon class=\"boundary\" points=\"" << map.points(*drawing.boundary())
            << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";

    const char* planar_style = "fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\"";
    for (const auto& e : drawing.edges()) {
        if (e.kind == EdgeKind::Planar) {
            svg << "<polyline class=\"planar\" points=\"" << map.points(e.route) << "\" " << planar_style << "/>\n";
            continue;
        }
        svg << "<polyline class=\"stub\" points=\"" << map.points(e.stubs->first) << "\" " << planar_style << "/>\n";
        svg << "<polyline class=\"stub\" points=\"" << map.points(e.stubs->second) << "\" " << planar_style << "/>\n";
        const char* colour = opts.highlight_overpasses ? "#d62728" : "#555555";
        const char* width = opts.highlight_overpasses ? "2" : "1.5";
        svg << "<polyline class=\"overpass\" points=\"" << map.points(e.route) << "\" fill=\"none\" stroke=\"" << colour
            << "\" stroke-width=\"" << width << "\" stroke-dasharray=\"6,4\"/>\n";
    }

    if (opts.show_crossing_markers) {
        const CrossingReport report = count_crossings(drawing);
        for (const auto& p : report.crossing_points)
            svg << "<circle class=\"crossing\" cx=\"" << px(map.x(p)) << "\" cy=\"" << px(map.y(p))
                << "\" r=\"3\" fill=\"none\" stroke=\"#ff7f0e\" stroke-width=\"1.5\"/>\n";
    }

    for (const auto& [v, p] : drawing.positions()) {
        const char* fill = v.party == Party::M ? "#2ca02c" : v.party == Party::N ? "#9467bd" : "#7f7f7f";
        svg << "<circle class=\"vertex\" cx=\"" << px(map.x(p)) << "\" cy=\"" << px(map.y(p)) << "\" r=\""
            << (v.split > 0 ? "3" : "4.5") << "\" fill=\"" << fill << "\"/>\n";
        if (opts.label_vertices)
            svg << "<text x=\"" << px(map.x(p) + 6) << "\" y=\"" << px(map.y(p) - 6)
                << "\" font-family=\"sans-serif\" font-size=\"10\">" << to_string(v) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string table_markdown(const std::vector<TableRow>& rows, int which) {
    if (which != 1 && which != 2) throw LayoutError("tables are numbered 1 and 2");
    std::ostringstream md;
    md << (which == 1 ? "Surface-coupled n×n switch-and-select circuits\n\n"
                      : "Facet-coupled n×n switch-and-select circuits\n\n");
    md << "| SAS (n×n) | WGX (LE) | WOP (LE) | WOP (BT) | max WGX per path (LE) | max WOP per path (LE & BT) |\n"
       << "|---|---:|---:|---:|---:|---:|\n";
    for (const auto& r : rows)
        md << "| " << r.n << "×" << r.n << " | " << r.eta << " | " << r.mu_le << " | " << r.mu_bt << " | " << r.xi
           << " | " << r.wop_per_path << " |\n";
    return md.str();
}

}  // namespace sas
