#pragma once

// Independent oracles shared by the test suites. Nothing here calls the crossing engine.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sas/model.hpp"

namespace oracle {

using sas::Drawing;
using sas::ExactPoint;
using sas::Rational;

inline Rational det(const ExactPoint& a, const ExactPoint& b) { return a.x * b.y - a.y * b.x; }

/// Contact point of two closed segments that are not parallel, if any.
inline bool segment_meet(const ExactPoint& p, const ExactPoint& p2, const ExactPoint& q, const ExactPoint& q2,
                         ExactPoint& at) {
    const ExactPoint r{p2.x - p.x, p2.y - p.y};
    const ExactPoint s{q2.x - q.x, q2.y - q.y};
    const Rational d = det(r, s);
    if (d == 0) return false;
    const ExactPoint qp{q.x - p.x, q.y - p.y};
    const Rational t = det(qp, s) / d;
    const Rational u = det(qp, r) / d;
    if (t < 0 || t > 1 || u < 0 || u > 1) return false;
    at = ExactPoint{Rational(p.x + t * r.x), Rational(p.y + t * r.y)};
    return true;
}

inline std::vector<sas::Polyline> planar_pieces(const sas::Edge& e) {
    if (e.kind == sas::EdgeKind::Planar) return {e.route};
    return {e.stubs->first, e.stubs->second};
}

struct Tally {
    std::size_t total = 0;
    std::vector<std::size_t> per_edge;
    std::size_t per_edge_max() const {
        return per_edge.empty() ? 0 : *std::max_element(per_edge.begin(), per_edge.end());
    }
};

/// Brute force over all segment pairs of distinct edges; meeting points at vertices are not crossings.
inline Tally brute_crossings(const Drawing& d) {
    std::set<ExactPoint> vertices;
    for (const auto& [v, p] : d.positions()) vertices.insert(p);
    const auto& edges = d.edges();
    Tally t;
    t.per_edge.assign(edges.size(), 0);
    for (std::size_t a = 0; a < edges.size(); ++a)
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
            std::set<ExactPoint> points;
            for (const auto& la : planar_pieces(edges[a]))
                for (const auto& lb : planar_pieces(edges[b]))
                    for (std::size_t i = 0; i + 1 < la.size(); ++i)
                        for (std::size_t j = 0; j + 1 < lb.size(); ++j) {
                            ExactPoint at;
                            if (segment_meet(la[i], la[i + 1], lb[j], lb[j + 1], at) && !vertices.contains(at))
                                points.insert(at);
                        }
            t.total += points.size();
            t.per_edge[a] += points.size();
            t.per_edge[b] += points.size();
        }
    return t;
}

/// Walks every connection and returns a description of the first broken one, or "" when all are sound.
inline std::string check_paths(const Drawing& d) {
    const auto& s = d.spec();
    const bool facet = s.coupling == sas::Coupling::Facet;
    if (d.connections().size() != static_cast<std::size_t>(s.m * s.n)) return "connection map is not total";
    for (const auto& [c, path] : d.connections()) {
        const std::string where = "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")";
        sas::VertexId at = facet ? sas::VertexId{sas::Party::Port, c.first, 0} : d.input_switch(c.first);
        const sas::VertexId goal = facet ? sas::VertexId{sas::Party::Port, -c.second, 0} : d.output_switch(c.second);
        if (path.empty()) return where + " has no edges";
        for (std::size_t k : path) {
            const auto& e = d.edges().at(k);
            if (e.from == at)
                at = e.to;
            else if (e.to == at)
                at = e.from;
            else
                return where + " breaks at edge " + std::to_string(k);
        }
        if (at != goal) return where + " ends at the wrong vertex";
    }
    return "";
}

/// Number of connections each overpass edge serves.
inline std::map<std::size_t, int> overpass_load(const Drawing& d) {
    std::map<std::size_t, int> load;
    for (std::size_t k = 0; k < d.edges().size(); ++k)
        if (d.edges()[k].kind == sas::EdgeKind::Overpass) load[k] = 0;
    for (const auto& [c, path] : d.connections())
        for (std::size_t k : path)
            if (load.contains(k)) ++load[k];
    return load;
}

inline long long choose2(long long k) { return k * (k - 1) / 2; }

}  // namespace oracle
