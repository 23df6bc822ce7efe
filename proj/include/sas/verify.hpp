#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sas/crossing.hpp"
#include "sas/facet.hpp"
#include "sas/model.hpp"
#include "sas/surface.hpp"

namespace sas {

/// Geometric measurements taken on the drawings built for one instance. Fields are empty
/// when the corresponding drawing does not apply to the instance.
struct MeasuredValues {
    std::int64_t eta_basic = 0;                   // basic (surface) or axes (facet) drawing
    std::optional<std::int64_t> eta_optimized;    // Zarankiewicz (surface) or interleaved (facet) drawing
    std::optional<std::int64_t> xi;               // per-edge maximum of that drawing
    std::optional<std::int64_t> xi_along_paths;   // per-path maximum of that drawing
    std::optional<std::int64_t> subgraph_edges;
    std::optional<bool> subgraph_planar;
    std::optional<std::int64_t> mu;               // overpasses in the WOP drawing of the instance's style
    std::optional<std::int64_t> wop_planar_crossings;
    std::optional<std::int64_t> wop_projection_crossings;
    std::optional<std::int64_t> wop_max_per_path;
    std::optional<std::int64_t> wop_paths_with_overpass;

    friend bool operator==(const MeasuredValues&, const MeasuredValues&) = default;
};

struct Discrepancy {
    std::string quantity;
    std::int64_t formula = 0;
    std::int64_t measured = 0;
    std::string note;
    bool whitelisted = false;
};

using FormulaValues = std::variant<SurfaceFormulaSet, FacetFormulaSet>;

struct VerificationReport {
    CircuitSpec spec;
    FormulaValues formulas;
    MeasuredValues measured;
    std::vector<Discrepancy> discrepancies;
    /// Conjectured crossings over n^4/16 for square surface instances; informational only.
    std::optional<double> quartic_ratio;
    bool pass = false;
};

/// The only known inconsistency tolerated by a passing report: the floor form of the local
/// crossing count disagrees with the measured value when m or n is odd.
inline constexpr const char* kXiFloorForm = "xi_floor_form";

VerificationReport verify_instance(const CircuitSpec& spec);

/// Every instance with 1 <= m <= max_m, 1 <= n <= max_n, both couplings and every valid style.
std::vector<VerificationReport> verify_sweep(int max_m, int max_n);

struct PathSummary {
    std::vector<PathTrace> paths;
    std::size_t total_planar_crossings = 0;  // summed over paths
    std::size_t max_planar_crossings = 0;
    std::size_t max_overpasses = 0;
    std::size_t paths_with_overpass = 0;
};

/// One trace per connection of a drawing whose connection map is total.
PathSummary enumerate_paths(const Drawing& drawing);

struct ConvexSearchResult {
    std::int64_t min_crossings = 0;
    /// Colour patterns ('M'/'N') of the optimal circular orders, one per rotation/reflection class,
    /// each written as its lexicographically smallest representative.
    std::vector<std::string> optimal_orders;
    std::size_t classes_examined = 0;
};

/// All circular arrangements of n inputs and n outputs in convex position with straight chords.
/// Labels within a party do not change the crossing count, so arrangements are enumerated as
/// colour patterns. Rejects n > 4.
ConvexSearchResult exhaustive_convex_search(int n);

struct TableRow {
    int n = 0;
    std::int64_t eta = 0;
    std::int64_t mu_le = 0;
    std::int64_t mu_bt = 0;
    std::int64_t xi = 0;
    std::int64_t wop_per_path = 0;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct Tables {
    std::vector<TableRow> surface;  // n = 4, 8, 16, 32, 64
    std::vector<TableRow> facet;
};

Tables reproduce_tables();

}  // namespace sas
