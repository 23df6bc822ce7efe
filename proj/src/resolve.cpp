#include <algorithm>
#include <optional>
#include <tuple>

#include "sas/crossing.hpp"

namespace sas {

namespace {

struct ProjectionCrossing {
    std::size_t a;
    std::size_t b;
    ExactPoint point;
};

std::vector<ProjectionCrossing> projection_crossings(const std::vector<Edge>& edges) {
    std::vector<ProjectionCrossing> out;
    for (std::size_t a = 0; a < edges.size(); ++a) {
        if (edges[a].kind != EdgeKind::Overpass) continue;
        const Polyline& la = edges[a].route;
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
            if (edges[b].kind != EdgeKind::Overpass) continue;
            const Polyline& lb = edges[b].route;
            std::vector<ExactPoint> seen;
            for (std::size_t i = 0; i + 1 < la.size(); ++i)
                for (std::size_t j = 0; j + 1 < lb.size(); ++j) {
                    SegmentContact c = intersect({la[i], la[i + 1]}, {lb[j], lb[j + 1]});
                    if (c.kind != ContactKind::Point) continue;
                    bool ta = c.point == la.front() || c.point == la.back();
                    bool tb = c.point == lb.front() || c.point == lb.back();
                    if (ta && tb) continue;
                    if (std::find(seen.begin(), seen.end(), c.point) != seen.end()) continue;
                    seen.push_back(c.point);
                    out.push_back({a, b, c.point});
                }
        }
    }
    return out;
}

/// Position of p along segment a->b as a fraction of its length.
Rational along(const ExactPoint& a, const ExactPoint& b, const ExactPoint& p) {
    ExactPoint d = b - a;
    ExactPoint q = p - a;
    return (q.x * d.x + q.y * d.y) / (d.x * d.x + d.y * d.y);
}

Polyline reversed(const Polyline& line) { return Polyline(line.rbegin(), line.rend()); }

bool touches(const Polyline& line, const Segment& s) {
    for (std::size_t i = 0; i + 1 < line.size(); ++i)
        if (intersect(s, {line[i], line[i + 1]}).kind != ContactKind::None) return true;
    return false;
}

class Resolver {
   public:
    explicit Resolver(const Drawing& d) : edges_(d.edges()) {
        for (const auto& [v, p] : d.positions()) vertices_.push_back(p);
    }

    std::vector<Edge> run() {
        for (;;) {
            auto crossings = projection_crossings(edges_);
            if (crossings.empty()) return edges_;
            if (!try_any(crossings))
                throw IrreducibleProjectionCrossing("no stub extension removes the projection crossing between edges " +
                                                    std::to_string(crossings.front().a) + " and " +
                                                    std::to_string(crossings.front().b));
        }
    }

   private:
    bool try_any(const std::vector<ProjectionCrossing>& crossings) {
        for (const auto& c : crossings)
            for (std::size_t e : {c.a, c.b})
                for (bool far_end : {false, true})
                    if (extend(e, far_end, c.point)) return true;
        return false;
    }

    /// Lengthens one stub of edge `e` along its projection to just past `p`.
    bool extend(std::size_t e, bool far_end, const ExactPoint& p) {
        Edge& edge = edges_[e];
        Polyline near_stub = far_end ? reversed(edge.stubs->second) : edge.stubs->first;
        const Polyline& other_stub = far_end ? edge.stubs->first : edge.stubs->second;
        Polyline route = far_end ? reversed(edge.route) : edge.route;

        std::size_t seg = route.size();
        for (std::size_t i = 0; i + 1 < route.size(); ++i)
            if (on_segment(p, {route[i], route[i + 1]}) && p != route[i + 1]) {
                seg = i;
                break;
            }
        // A crossing at the stub end itself is resolved by pushing that end just past it.
        if (seg == route.size()) return false;

        // Stop halfway between p and the next thing the projection meets on this segment.
        const ExactPoint& a = route[seg];
        const ExactPoint& b = route[seg + 1];
        Rational tp = along(a, b, p);
        Rational limit = 1;
        auto consider = [&](const Polyline& line) {
            for (std::size_t i = 0; i + 1 < line.size(); ++i) {
                SegmentContact c = intersect({p, b}, {line[i], line[i + 1]});
                if (c.kind == ContactKind::Overlap) limit = tp;
                if (c.kind != ContactKind::Point || c.point == p) continue;
                Rational t = along(a, b, c.point);
                if (t < limit) limit = t;
            }
        };
        for (std::size_t k = 0; k < edges_.size(); ++k) {
            const Edge& other = edges_[k];
            if (k == e) continue;
            consider(other.route);
            if (other.stubs) {
                consider(other.stubs->first);
                consider(other.stubs->second);
            }
        }
        if (limit <= tp) return false;
        ExactPoint via = lerp(a, b, (tp + limit) / 2);

        Polyline extension(route.begin(), route.begin() + static_cast<std::ptrdiff_t>(seg) + 1);
        extension.push_back(via);
        if (!extension_is_clear(e, extension, other_stub)) return false;

        Polyline stub = near_stub;
        stub.insert(stub.end(), extension.begin() + 1, extension.end());
        if (!is_simple(stub)) return false;
        Polyline rest{via};
        rest.insert(rest.end(), route.begin() + static_cast<std::ptrdiff_t>(seg) + 1, route.end());

        if (far_end) {
            edge.stubs->second = reversed(stub);
            edge.route = reversed(rest);
        } else {
            edge.stubs->first = stub;
            edge.route = rest;
        }
        return true;
    }

    bool extension_is_clear(std::size_t e, const Polyline& extension, const Polyline& other_stub) const {
        for (std::size_t i = 0; i + 1 < extension.size(); ++i) {
            Segment s{extension[i], extension[i + 1]};
            for (const auto& v : vertices_)
                if (on_segment(v, s)) return false;
            if (touches(other_stub, s)) return false;
            for (std::size_t k = 0; k < edges_.size(); ++k) {
                if (k == e) continue;
                const Edge& other = edges_[k];
                if (other.kind == EdgeKind::Planar) {
                    if (touches(other.route, s)) return false;
                    continue;
                }
                if (touches(other.stubs->first, s) || touches(other.stubs->second, s)) return false;
                if (on_segment(other.route.front(), s) || on_segment(other.route.back(), s)) return false;
            }
        }
        return true;
    }

    std::vector<Edge> edges_;
    std::vector<ExactPoint> vertices_;
};

}  // namespace

Drawing resolve_projection_crossing(const Drawing& drawing) {
    std::vector<Edge> edges = Resolver(drawing).run();
    if (edges == drawing.edges()) return drawing;
    DrawingBuilder b(drawing);
    for (std::size_t k = 0; k < edges.size(); ++k) b.edge(k) = std::move(edges[k]);
    return b.build();
}

}  // namespace sas
