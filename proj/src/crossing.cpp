#include "sas/crossing.hpp"

#include <algorithm>
#include <set>

namespace sas {

namespace {

struct Box {
    Rational x0, y0, x1, y1;
};

Box bounds(const Polyline& line) {
    Box b{line[0].x, line[0].y, line[0].x, line[0].y};
    for (const auto& p : line) {
        if (p.x < b.x0) b.x0 = p.x;
        if (p.x > b.x1) b.x1 = p.x;
        if (p.y < b.y0) b.y0 = p.y;
        if (p.y > b.y1) b.y1 = p.y;
    }
    return b;
}

bool disjoint(const Box& a, const Box& b) { return a.x1 < b.x0 || b.x1 < a.x0 || a.y1 < b.y0 || b.y1 < a.y0; }

bool is_terminal(const ExactPoint& p, const Polyline& line) { return p == line.front() || p == line.back(); }

enum class Touch { Skip, Cross };

/// Distinct crossing points of two curves belonging to different edges.
template <typename Classify>
std::set<ExactPoint> common_points(const Polyline& a, const Polyline& b, Classify classify) {
    std::set<ExactPoint> points;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        Segment sa{a[i], a[i + 1]};
        for (std::size_t j = 0; j + 1 < b.size(); ++j) {
            SegmentContact c = intersect(sa, {b[j], b[j + 1]});
            if (c.kind == ContactKind::None) continue;
            if (c.kind == ContactKind::Overlap) throw LayoutError("two waveguides overlap along a segment");
            if (classify(c.point) == Touch::Cross) points.insert(c.point);
        }
    }
    return points;
}

}  // namespace

CrossingReport count_crossings(const Drawing& drawing) {
    CrossingReport report;
    report.per_edge.assign(drawing.edges().size(), 0);

    std::set<ExactPoint> vertex_points;
    for (const auto& [v, p] : drawing.positions()) vertex_points.insert(p);

    const auto pieces = planar_pieces(drawing);
    std::vector<Box> boxes;
    boxes.reserve(pieces.size());
    for (const auto& piece : pieces) boxes.push_back(bounds(*piece.line));

    for (std::size_t a = 0; a < pieces.size(); ++a) {
        for (std::size_t b = a + 1; b < pieces.size(); ++b) {
            if (pieces[a].edge == pieces[b].edge || disjoint(boxes[a], boxes[b])) continue;
            const Polyline& la = *pieces[a].line;
            const Polyline& lb = *pieces[b].line;
            auto points = common_points(la, lb, [&](const ExactPoint& p) {
                bool ta = is_terminal(p, la), tb = is_terminal(p, lb);
                if (ta && tb && vertex_points.contains(p)) return Touch::Skip;
                if (ta || tb) throw LayoutError("a waveguide runs through a vertex or a stub end");
                return Touch::Cross;
            });
            for (const auto& p : points) {
                report.crossing_pairs.emplace_back(pieces[a].edge, pieces[b].edge);
                report.crossing_points.push_back(p);
                ++report.per_edge[pieces[a].edge];
                ++report.per_edge[pieces[b].edge];
            }
        }
    }
    report.total_planar_crossings = report.crossing_pairs.size();
    for (std::size_t c : report.per_edge) report.per_edge_max = std::max(report.per_edge_max, c);

    const auto& edges = drawing.edges();
    for (std::size_t a = 0; a < edges.size(); ++a) {
        if (edges[a].kind != EdgeKind::Overpass) continue;
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
            if (edges[b].kind != EdgeKind::Overpass) continue;
            const Polyline& la = edges[a].route;
            const Polyline& lb = edges[b].route;
            auto points = common_points(la, lb, [&](const ExactPoint& p) {
                return is_terminal(p, la) && is_terminal(p, lb) ? Touch::Skip : Touch::Cross;
            });
            for (const auto& p : points) {
                report.projection_pairs.emplace_back(a, b);
                report.projection_points.push_back(p);
            }
        }
    }
    report.overpass_projection_crossings = report.projection_pairs.size();
    return report;
}

std::size_t local_crossing_of_drawing(const Drawing& drawing) { return count_crossings(drawing).per_edge_max; }

std::vector<PathTrace> trace_paths(const Drawing& drawing, const CrossingReport& report) {
    std::vector<PathTrace> out;
    out.reserve(drawing.connections().size());
    for (const auto& [conn, path] : drawing.connections()) {
        PathTrace t{conn, path, 0, 0};
        for (std::size_t e : path) {
            t.planar_crossings += report.per_edge[e];
            if (drawing.edges()[e].kind == EdgeKind::Overpass) ++t.overpass_count;
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::size_t max_crossings_along_path(const Drawing& drawing) {
    std::size_t best = 0;
    for (const auto& t : trace_paths(drawing, count_crossings(drawing))) best = std::max(best, t.planar_crossings);
    return best;
}

std::size_t max_overpasses_along_path(const Drawing& drawing) {
    std::size_t best = 0;
    for (const auto& [conn, path] : drawing.connections()) {
        std::size_t k = 0;
        for (std::size_t e : path) k += drawing.edges()[e].kind == EdgeKind::Overpass;
        best = std::max(best, k);
    }
    return best;
}

AbstractGraph planar_skeleton(const Drawing& drawing) {
    AbstractGraph g;
    std::map<VertexId, std::size_t> index;
    for (const auto& [v, p] : drawing.positions()) {
        index.emplace(v, g.vertices.size());
        g.vertices.push_back(v);
    }
    for (const Edge& e : drawing.edges())
        if (e.kind == EdgeKind::Planar) g.edges.emplace_back(index.at(e.from), index.at(e.to));
    return g;
}

}  // namespace sas
