#pragma once

#include <cstdint>
#include <optional>

#include "sas/model.hpp"

namespace sas {

/// Closed-form counts for a facet-coupled m x n switch-and-select circuit.
struct FacetFormulaSet {
    std::int64_t eta_basic = 0;
    std::optional<std::int64_t> eta_interleaved;  // only when m divides n
    std::optional<std::int64_t> xi;               // only for square instances
    std::int64_t mu_le = 0;
    std::optional<std::int64_t> mu_bt;  // needs m, n >= 2
};

std::int64_t eta_facet_basic(int m, int n);
/// Crossings with inputs evenly interleaved between outputs on a convex boundary. Requires n mod m = 0.
std::int64_t eta_facet_interleaved(int m, int n);
std::int64_t xi_facet(int n);
std::int64_t mu_facet_le(int m, int n);
std::int64_t mu_facet_bt(int m, int n);

FacetFormulaSet facet_formulas(int m, int n);

// Facet drawings pin input port i at (i, -1) and output port j at (-1, j) on a rectangular
// boundary, with input switches at (i, 0) and output switches at (0, j). Every path starts and
// ends with the access waveguide between a port and its switch.

Drawing build_facet_axes_drawing(int m, int n);

/// Input switches M_1 and output switch N_n joined to every vertex of the other side: m + n - 1 edges.
Drawing build_facet_spanning_planar_subgraph(int m, int n);

/// Spanning subgraph plus (m-1)(n-1) overpasses.
Drawing place_wop_le_facet(int m, int n);

/// Auxiliary 1x2 / 2x1 cells in the triangles of the spanning subgraph; ceil((m-1)(n-1)/2) overpasses.
Drawing place_wop_bt_facet(int m, int n);

/// Switches on a circle in the order M_1, N, ..., N, M_2, N, ..., with n/m outputs between
/// consecutive inputs; ports sit radially outside on a square boundary. Requires n mod m = 0.
Drawing build_interleaved_facet_drawing(int m, int n);
Drawing build_interleaved_facet_drawing(int n);

/// Stored 4x4 example: Zarankiewicz core with the access waveguides of the four inner switches
/// rerouted across the outer edges. 12 crossings.
Drawing build_rerouted_facet_example();

}  // namespace sas
