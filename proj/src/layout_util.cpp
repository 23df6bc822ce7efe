#include "layout_util.hpp"

#include <algorithm>
#include <cmath>

namespace sas::detail {

namespace {

Rational along(const ExactPoint& a, const ExactPoint& b, const ExactPoint& p) {
    ExactPoint d = b - a;
    ExactPoint q = p - a;
    return (q.x * d.x + q.y * d.y) / (d.x * d.x + d.y * d.y);
}

template <typename Visit>
void for_each_planar_line(const DrawingBuilder& b, Visit visit) {
    for (const Edge& e : b.edges()) {
        if (e.kind == EdgeKind::Planar) {
            visit(e.route);
        } else {
            visit(e.stubs->first);
            visit(e.stubs->second);
        }
    }
}

}  // namespace

Rational free_run(const DrawingBuilder& b, const ExactPoint& origin, const ExactPoint& target) {
    Rational best = 1;
    Segment probe{origin, target};
    auto visit = [&](const Polyline& line) {
        for (std::size_t i = 0; i + 1 < line.size(); ++i) {
            SegmentContact c = intersect(probe, {line[i], line[i + 1]});
            if (c.kind == ContactKind::None) continue;
            if (c.kind == ContactKind::Overlap) throw LayoutError("overpass would run along a planar waveguide");
            if (c.point == origin) continue;
            Rational t = along(origin, target, c.point);
            if (t < best) best = t;
        }
    };
    for_each_planar_line(b, visit);
    return best;
}

std::vector<ExactPoint> stack_points(const DrawingBuilder& b, const ExactPoint& origin, const ExactPoint& dir,
                                     std::size_t count) {
    Rational reach = 1;
    for_each_planar_line(b, [&](const Polyline& line) {
        for (const auto& p : line) reach = std::max({reach, Rational(abs(p.x - origin.x)), Rational(abs(p.y - origin.y))});
    });
    reach *= 4;
    ExactPoint far = origin + Rational(reach / std::max(Rational(abs(dir.x)), Rational(abs(dir.y)))) * dir;
    Rational hit = free_run(b, origin, far);
    std::vector<ExactPoint> out;
    for (std::size_t k = 1; k <= count; ++k)
        out.push_back(lerp(origin, far, hit * Rational(static_cast<long>(k), static_cast<long>(count + 1))));
    return out;
}

std::size_t add_straight_overpass(DrawingBuilder& b, const VertexId& from, const VertexId& to) {
    const ExactPoint a = b.position(from);
    const ExactPoint z = b.position(to);
    const Rational quarter(1, 4);
    ExactPoint via_a = lerp(a, z, std::min(Rational(free_run(b, a, z) / 2), quarter));
    // Both stubs stay within a quarter of the span, so they cannot meet each other.
    ExactPoint via_z = lerp(z, a, std::min(Rational(free_run(b, z, a) / 2), quarter));
    return b.add_overpass(from, to, {a, via_a}, {via_a, via_z}, {via_z, z});
}

Ordinals::Ordinals(const std::vector<int>& labels) : labels_(labels) { std::sort(labels_.begin(), labels_.end()); }

int Ordinals::of(int label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) throw LayoutError("unknown label " + std::to_string(label));
    return static_cast<int>(it - labels_.begin()) + 1;
}

std::vector<int> signed_labels(int k) {
    std::vector<int> out;
    for (int x = -(k / 2); x <= (k + 1) / 2; ++x)
        if (x != 0) out.push_back(x);
    return out;
}

ExactPoint circle_point(double theta) {
    // s = tan(theta / 2) rounded to 1/10000; the parametrization keeps the point exactly on the circle.
    Rational s(static_cast<long>(std::lround(std::tan(theta / 2) * 10000)), 10000);
    Rational d = 1 + s * s;
    return {(1 - s * s) / d, 2 * s / d};
}

}  // namespace sas::detail
