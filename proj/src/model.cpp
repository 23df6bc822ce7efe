#include "sas/model.hpp"

#include <algorithm>
#include <set>

namespace sas {

CircuitSpec make_spec(int m, int n, Coupling coupling, SwitchStyle style) {
    if (m < 1 || n < 1) throw LayoutError("port counts must be positive");
    if (style == SwitchStyle::BinaryTree && (m < 2 || n < 2))
        throw LayoutError("binary-tree switches need at least two ports on each side");
    return {m, n, coupling, style};
}

bool is_planar_by_kuratowski(const CircuitSpec& spec) { return std::min(spec.m, spec.n) <= 2; }

std::string to_string(Party p) {
    switch (p) {
        case Party::M: return "M";
        case Party::N: return "N";
        case Party::Port: return "Port";
    }
    return "?";
}

std::string to_string(Coupling c) { return c == Coupling::Surface ? "surface" : "facet"; }
std::string to_string(SwitchStyle s) { return s == SwitchStyle::LumpedElement ? "le" : "bt"; }

std::string to_string(const VertexId& v) {
    std::string s = "v_{" + to_string(v.party) + "," + std::to_string(v.index) + "}";
    if (v.split > 0) s += "'" + std::to_string(v.split);
    return s;
}

const ExactPoint& Drawing::position(const VertexId& v) const {
    auto it = positions_.find(v);
    if (it == positions_.end()) throw LayoutError("unknown vertex " + to_string(v));
    return it->second;
}

std::size_t Drawing::count_edges(EdgeKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.kind == kind; }));
}

DrawingBuilder::DrawingBuilder(CircuitSpec spec) : spec_(spec) {}

DrawingBuilder::DrawingBuilder(const Drawing& base)
    : spec_(base.spec_),
      positions_(base.positions_),
      edges_(base.edges_),
      boundary_(base.boundary_),
      connections_(base.connections_),
      complete_(base.complete_) {}

DrawingBuilder& DrawingBuilder::add_vertex(const VertexId& v, ExactPoint at) {
    if (!positions_.emplace(v, std::move(at)).second) throw LayoutError("duplicate vertex " + to_string(v));
    return *this;
}

const ExactPoint& DrawingBuilder::position(const VertexId& v) const {
    auto it = positions_.find(v);
    if (it == positions_.end()) throw LayoutError("unknown vertex " + to_string(v));
    return it->second;
}

std::size_t DrawingBuilder::add_planar(const VertexId& from, const VertexId& to, Polyline route) {
    if (route.empty()) route = {position(from), position(to)};
    return add_edge({from, to, EdgeKind::Planar, std::move(route), std::nullopt});
}

std::size_t DrawingBuilder::add_overpass(const VertexId& from, const VertexId& to, Polyline stub_from,
                                         Polyline projection, Polyline stub_to) {
    return add_edge({from, to, EdgeKind::Overpass, std::move(projection),
                     std::make_pair(std::move(stub_from), std::move(stub_to))});
}

std::size_t DrawingBuilder::add_edge(Edge e) {
    edges_.push_back(std::move(e));
    return edges_.size() - 1;
}

DrawingBuilder& DrawingBuilder::set_boundary(Polyline polygon) {
    boundary_ = std::move(polygon);
    return *this;
}

DrawingBuilder& DrawingBuilder::connect(int input, int output, std::vector<std::size_t> path) {
    if (!connections_.emplace(Connection{input, output}, std::move(path)).second)
        throw LayoutError("connection (" + std::to_string(input) + "," + std::to_string(output) + ") added twice");
    return *this;
}

namespace {

void check_line(const Polyline& line, const std::string& what) {
    if (line.size() < 2) throw LayoutError(what + ": polyline needs two points");
    if (!is_simple(line)) throw LayoutError(what + ": polyline is degenerate or self-intersecting");
}

void check_inside(const Polyline& line, const Polyline& boundary, const std::string& what) {
    for (const auto& p : line)
        if (locate(p, boundary) == Containment::Outside) throw LayoutError(what + " leaves the boundary");
    for (std::size_t i = 0; i + 1 < line.size(); ++i) {
        ExactPoint mid = lerp(line[i], line[i + 1], Rational(1, 2));
        if (locate(mid, boundary) == Containment::Outside) throw LayoutError(what + " leaves the boundary");
        for (std::size_t k = 0; k < boundary.size(); ++k) {
            Segment side{boundary[k], boundary[(k + 1) % boundary.size()]};
            Segment seg{line[i], line[i + 1]};
            if (orientation(side.a, side.b, seg.a) * orientation(side.a, side.b, seg.b) < 0 &&
                orientation(seg.a, seg.b, side.a) * orientation(seg.a, seg.b, side.b) < 0)
                throw LayoutError(what + " crosses the boundary");
        }
    }
}

}  // namespace

Drawing DrawingBuilder::build() const {
    make_spec(spec_.m, spec_.n, spec_.coupling, spec_.style);

    Drawing d;
    d.spec_ = spec_;
    d.positions_ = positions_;
    d.edges_ = edges_;
    d.boundary_ = boundary_;
    d.connections_ = connections_;
    d.complete_ = complete_;

    std::set<ExactPoint> seen;
    for (const auto& [v, p] : positions_) {
        if (!seen.insert(p).second) throw LayoutError("coincident vertex at " + to_string(v));
        if (v.split != 0) continue;
        if (v.party == Party::M) d.inputs_.push_back(v);
        if (v.party == Party::N) d.outputs_.push_back(v);
    }
    if (static_cast<int>(d.inputs_.size()) != spec_.m || static_cast<int>(d.outputs_.size()) != spec_.n)
        throw LayoutError("switch vertex count does not match the port counts");

    const bool facet = spec_.coupling == Coupling::Facet;
    if (facet != boundary_.has_value()) throw LayoutError("a boundary is required exactly for facet coupling");
    if (facet) {
        if (boundary_->size() < 3) throw LayoutError("boundary polygon needs three corners");
        for (int i = 1; i <= spec_.m; ++i)
            if (!positions_.contains({Party::Port, i, 0})) throw LayoutError("missing input port vertex");
        for (int j = 1; j <= spec_.n; ++j)
            if (!positions_.contains({Party::Port, -j, 0})) throw LayoutError("missing output port vertex");
        for (const auto& [v, p] : positions_) {
            Containment c = locate(p, *boundary_);
            if (v.party == Party::Port && c != Containment::Boundary)
                throw LayoutError(to_string(v) + " is not on the boundary");
            if (v.party != Party::Port && c != Containment::Inside)
                throw LayoutError(to_string(v) + " is not inside the boundary");
        }
    }

    for (std::size_t k = 0; k < edges_.size(); ++k) {
        const Edge& e = edges_[k];
        const std::string what = "edge " + std::to_string(k) + " " + to_string(e.from) + "-" + to_string(e.to);
        const ExactPoint& pf = d.position(e.from);
        const ExactPoint& pt = d.position(e.to);
        check_line(e.route, what);
        if (e.kind == EdgeKind::Planar) {
            if (e.stubs) throw LayoutError(what + ": planar edges carry no stubs");
            if (e.route.front() != pf || e.route.back() != pt) throw LayoutError(what + ": route misses endpoints");
        } else {
            if (!e.stubs) throw LayoutError(what + ": overpass needs two stubs");
            const auto& [s0, s1] = *e.stubs;
            check_line(s0, what + " stub");
            check_line(s1, what + " stub");
            if (s0.front() != pf || s0.back() != e.route.front() || s1.front() != e.route.back() || s1.back() != pt)
                throw LayoutError(what + ": stubs do not attach to the projection");
        }
        if (facet) {
            check_inside(e.route, *boundary_, what);
            if (e.stubs) {
                check_inside(e.stubs->first, *boundary_, what);
                check_inside(e.stubs->second, *boundary_, what);
            }
        }
    }

    if (complete_ && connections_.size() != static_cast<std::size_t>(spec_.m) * static_cast<std::size_t>(spec_.n))
        throw LayoutError("connection map is not total");
    for (const auto& [conn, path] : connections_) {
        const auto [i, j] = conn;
        if (i < 1 || i > spec_.m || j < 1 || j > spec_.n) throw LayoutError("connection index out of range");
        VertexId at = facet ? VertexId{Party::Port, i, 0} : d.input_switch(i);
        const VertexId goal = facet ? VertexId{Party::Port, -j, 0} : d.output_switch(j);
        if (path.empty()) throw LayoutError("empty path");
        for (std::size_t ei : path) {
            if (ei >= edges_.size()) throw LayoutError("path references a missing edge");
            const Edge& e = edges_[ei];
            if (e.from == at)
                at = e.to;
            else if (e.to == at)
                at = e.from;
            else
                throw LayoutError("path for (" + std::to_string(i) + "," + std::to_string(j) + ") is disconnected");
        }
        if (at != goal)
            throw LayoutError("path for (" + std::to_string(i) + "," + std::to_string(j) + ") ends at " +
                              to_string(at));
    }
    return d;
}

namespace {

VertexId swap_party(VertexId v) {
    if (v.party == Party::M)
        v.party = Party::N;
    else if (v.party == Party::N)
        v.party = Party::M;
    else
        v.index = -v.index;
    return v;
}

ExactPoint mirror(const ExactPoint& p) { return {p.y, p.x}; }

Polyline mirror(const Polyline& line) {
    Polyline out;
    out.reserve(line.size());
    for (const auto& p : line) out.push_back(mirror(p));
    return out;
}

}  // namespace

Drawing transpose(const Drawing& d) {
    CircuitSpec spec = d.spec();
    std::swap(spec.m, spec.n);
    DrawingBuilder b(spec);
    if (!d.is_complete()) b.partial();
    for (const auto& [v, p] : d.positions()) b.add_vertex(swap_party(v), mirror(p));
    for (const Edge& e : d.edges()) {
        Edge t{swap_party(e.from), swap_party(e.to), e.kind, mirror(e.route), std::nullopt};
        if (e.stubs) t.stubs = std::make_pair(mirror(e.stubs->first), mirror(e.stubs->second));
        b.add_edge(std::move(t));
    }
    if (d.boundary()) b.set_boundary(mirror(*d.boundary()));
    for (const auto& [conn, path] : d.connections())
        b.connect(conn.second, conn.first, std::vector<std::size_t>(path.rbegin(), path.rend()));
    return b.build();
}

Drawing scale(const Drawing& d, const Rational& factor) {
    if (factor <= 0) throw LayoutError("scale factor must be positive");
    auto sc = [&](const Polyline& line) {
        Polyline out;
        for (const auto& p : line) out.push_back(factor * p);
        return out;
    };
    DrawingBuilder b(d.spec());
    if (!d.is_complete()) b.partial();
    for (const auto& [v, p] : d.positions()) b.add_vertex(v, factor * p);
    for (const Edge& e : d.edges()) {
        Edge t{e.from, e.to, e.kind, sc(e.route), std::nullopt};
        if (e.stubs) t.stubs = std::make_pair(sc(e.stubs->first), sc(e.stubs->second));
        b.add_edge(std::move(t));
    }
    if (d.boundary()) b.set_boundary(sc(*d.boundary()));
    for (const auto& [conn, path] : d.connections()) b.connect(conn.first, conn.second, path);
    return b.build();
}

std::vector<PlanarPiece> planar_pieces(const Drawing& d) {
    std::vector<PlanarPiece> out;
    for (std::size_t k = 0; k < d.edges().size(); ++k) {
        const Edge& e = d.edges()[k];
        if (e.kind == EdgeKind::Planar) {
            out.push_back({k, &e.route});
        } else {
            out.push_back({k, &e.stubs->first});
            out.push_back({k, &e.stubs->second});
        }
    }
    return out;
}

}  // namespace sas
