#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sas/model.hpp"

namespace sas {

/// Geometric crossing tally of one drawing.
struct CrossingReport {
    std::size_t total_planar_crossings = 0;
    std::size_t per_edge_max = 0;
    std::size_t overpass_projection_crossings = 0;
    /// One entry per crossing point between planar geometry of two edges (edge indices, smaller first).
    std::vector<std::pair<std::size_t, std::size_t>> crossing_pairs;
    std::vector<ExactPoint> crossing_points;  // parallel to crossing_pairs
    /// Crossings on the planar geometry of each edge.
    std::vector<std::size_t> per_edge;
    /// One entry per crossing point between two overpass projections.
    std::vector<std::pair<std::size_t, std::size_t>> projection_pairs;
    std::vector<ExactPoint> projection_points;
};

/// Counts crossings among planar routes and overpass stubs, plus crossings between
/// overpass projections. Throws LayoutError on overlapping segments or on a curve
/// running through a vertex or stub end.
CrossingReport count_crossings(const Drawing& drawing);

std::size_t local_crossing_of_drawing(const Drawing& drawing);

struct PathTrace {
    Connection connection;
    std::vector<std::size_t> edges;
    std::size_t planar_crossings = 0;
    std::size_t overpass_count = 0;
};

std::vector<PathTrace> trace_paths(const Drawing& drawing, const CrossingReport& report);

std::size_t max_crossings_along_path(const Drawing& drawing);
std::size_t max_overpasses_along_path(const Drawing& drawing);

using AbstractEdge = std::pair<std::size_t, std::size_t>;

/// Boyer-Myrvold planarity test on a simple graph with vertices 0..vertex_count-1.
bool is_planar_abstract(std::size_t vertex_count, const std::vector<AbstractEdge>& edges);

/// Face lengths (in edges) of some plane embedding; empty when the graph is not planar.
std::vector<std::size_t> face_sizes(std::size_t vertex_count, const std::vector<AbstractEdge>& edges);

/// Vertices of the drawing numbered in map order, with its planar edges only.
struct AbstractGraph {
    std::vector<VertexId> vertices;
    std::vector<AbstractEdge> edges;
};
AbstractGraph planar_skeleton(const Drawing& drawing);

/// Thrown when no stub extension removes a remaining projection crossing.
class IrreducibleProjectionCrossing : public LayoutError {
   public:
    using LayoutError::LayoutError;
};

/// Removes crossings between overpass projections by lengthening a stub along its
/// projection until it passes underneath the other overpass. Planar crossings and
/// connectivity are unchanged.
Drawing resolve_projection_crossing(const Drawing& drawing);

}  // namespace sas
