#pragma once

#include <cstdint>
#include <optional>

#include "sas/model.hpp"

namespace sas {

/// Closed-form counts for a surface-coupled m x n switch-and-select circuit.
struct SurfaceFormulaSet {
    std::int64_t eta_basic = 0;        // crossings of the unoptimized two-row layout
    std::int64_t eta_conjectured = 0;  // crossings of the Zarankiewicz drawing
    std::int64_t xi = 0;               // most crossings on one optical path
    std::int64_t mu_le = 0;            // overpasses with lumped-element switches
    std::optional<std::int64_t> mu_bt;  // overpasses with binary-tree switches; needs m, n >= 2
};

std::int64_t eta_basic(int m, int n);
std::int64_t eta_conjectured(int m, int n);
/// (ceil(m/2) - 1)(ceil(n/2) - 1): the per-edge maximum measured on the Zarankiewicz drawing.
std::int64_t xi_surface(int m, int n);
/// (floor(m/2) - 1)(floor(n/2) - 1). Agrees with xi_surface only when m and n are both even.
std::int64_t xi_surface_floor_form(int m, int n);
std::int64_t mu_surface_le(int m, int n);
std::int64_t mu_surface_bt(int m, int n);

SurfaceFormulaSet surface_formulas(int m, int n);

/// Inputs on the line y = 0 at x = 1..m, outputs on y = 1 at x = 1..n, straight waveguides.
Drawing build_basic_surface_drawing(int m, int n);

/// Inputs on the x-axis and outputs on the y-axis at -floor(k/2)..-1, 1..ceil(k/2), straight waveguides.
Drawing build_zarankiewicz_drawing(int m, int n);

/// Subgraph on the Zarankiewicz positions: the two outermost inputs and the outputs at y = +-1
/// are joined to every vertex of the other side. 2m + 2n - 4 crossing-free edges.
Drawing build_spanning_max_planar_subgraph(int m, int n);

/// The spanning subgraph plus one straight overpass per missing connection, before any
/// projection crossings are removed.
Drawing place_wop_le_surface_unresolved(int m, int n);

/// Lumped-element hybrid layout: (m-2)(n-2) overpasses, no planar crossings.
Drawing place_wop_le_surface(int m, int n);

/// Binary-tree hybrid layout: auxiliary 1x2 / 2x1 cells placed inside faces of the spanning
/// subgraph let one overpass serve two connections; ceil((m-2)(n-2)/2) overpasses.
Drawing place_wop_bt_surface(int m, int n);

}  // namespace sas
