#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sas/model.hpp"
#include "sas/verify.hpp"

namespace sas {

/// Drawing as JSON text. Coordinates are "p/q" strings; the output is deterministic, so
/// export(parse(export(d))) reproduces the same bytes.
std::string export_drawing_json(const Drawing& drawing);

/// Inverse of export_drawing_json. Throws LayoutError on schema violations and on drawings
/// that fail validation.
Drawing parse_drawing_json(const std::string& text);

std::string formulas_json(const FormulaValues& formulas);
std::string report_json(const VerificationReport& report);

struct RenderOptions {
    int width_px = 800;  // at least 64
    bool highlight_overpasses = true;
    bool show_crossing_markers = false;
    bool label_vertices = false;
};

/// SVG 1.1 picture: planar waveguides and stubs solid, overpass projections dashed, and
/// optionally one circle of class "crossing" per planar crossing pair.
std::string render_svg(const Drawing& drawing, const RenderOptions& opts = {});

/// Markdown rendering of one reproduced table (1: surface coupling, 2: facet coupling).
std::string table_markdown(const std::vector<TableRow>& rows, int which);

/// Command-line entry point. args excludes the program name. Exit codes: 0 success,
/// 1 verification failure or runtime error, 2 usage error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sas
