#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sas/exact.hpp"

namespace sas {

/// Raised for any instance or drawing that violates its construction contract.
class LayoutError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class Coupling { Surface, Facet };
enum class SwitchStyle { LumpedElement, BinaryTree };

struct CircuitSpec {
    int m = 1;  // input ports
    int n = 1;  // output ports
    Coupling coupling = Coupling::Surface;
    SwitchStyle style = SwitchStyle::LumpedElement;

    friend bool operator==(const CircuitSpec&, const CircuitSpec&) = default;
};

CircuitSpec make_spec(int m, int n, Coupling coupling, SwitchStyle style);

/// K_{m,n} is planar exactly when one side has at most two vertices.
bool is_planar_by_kuratowski(const CircuitSpec& spec);

// Input switches sit in party M, output switches in N. Port vertices carry the
// attached switch's ordinal: +i for input port i, -j for output port j.
enum class Party { M, N, Port };

struct VertexId {
    Party party = Party::M;
    int index = 1;
    int split = 0;  // 0 for the switch itself, k >= 1 for its k-th auxiliary 1x2 / 2x1 cell

    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

std::string to_string(const VertexId& v);
std::string to_string(Party p);
std::string to_string(Coupling c);
std::string to_string(SwitchStyle s);

enum class EdgeKind { Planar, Overpass };

struct Edge {
    VertexId from;
    VertexId to;
    EdgeKind kind = EdgeKind::Planar;
    // Planar: the drawn curve. Overpass: planar projection between the two stub ends.
    Polyline route;
    // Overpass only: access waveguide from `from` to route.front(), and from route.back() to `to`.
    std::optional<std::pair<Polyline, Polyline>> stubs;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Input/output pair, both 1-based ordinals.
using Connection = std::pair<int, int>;

class DrawingBuilder;

/// Immutable, validated layout of one circuit instance.
class Drawing {
   public:
    const CircuitSpec& spec() const { return spec_; }
    const std::map<VertexId, ExactPoint>& positions() const { return positions_; }
    const ExactPoint& position(const VertexId& v) const;
    const std::vector<Edge>& edges() const { return edges_; }
    const std::optional<Polyline>& boundary() const { return boundary_; }
    /// Edge indices of the path realizing each connection, in order from input to output.
    const std::map<Connection, std::vector<std::size_t>>& connections() const { return connections_; }

    std::size_t count_edges(EdgeKind kind) const;

    /// False for subgraph drawings, whose connection map covers only the realized pairs.
    bool is_complete() const { return complete_; }

    /// Switch vertex for input i / output j (split 0, ordered by label).
    const VertexId& input_switch(int i) const { return inputs_.at(static_cast<std::size_t>(i - 1)); }
    const VertexId& output_switch(int j) const { return outputs_.at(static_cast<std::size_t>(j - 1)); }

    friend bool operator==(const Drawing& a, const Drawing& b) {
        return a.spec_ == b.spec_ && a.complete_ == b.complete_ && a.positions_ == b.positions_ && a.edges_ == b.edges_ &&
               a.boundary_ == b.boundary_ && a.connections_ == b.connections_;
    }

   private:
    friend class DrawingBuilder;
    Drawing() = default;

    CircuitSpec spec_;
    std::map<VertexId, ExactPoint> positions_;
    std::vector<Edge> edges_;
    std::optional<Polyline> boundary_;
    std::map<Connection, std::vector<std::size_t>> connections_;
    std::vector<VertexId> inputs_;
    std::vector<VertexId> outputs_;
    bool complete_ = true;
};

/// Collects vertices, edges and paths and validates them in build().
class DrawingBuilder {
   public:
    explicit DrawingBuilder(CircuitSpec spec);
    explicit DrawingBuilder(const Drawing& base);

    const CircuitSpec& spec() const { return spec_; }

    DrawingBuilder& add_vertex(const VertexId& v, ExactPoint at);
    bool has_vertex(const VertexId& v) const { return positions_.contains(v); }
    const ExactPoint& position(const VertexId& v) const;

    /// Straight or polyline planar edge; an empty route means the straight segment between the endpoints.
    std::size_t add_planar(const VertexId& from, const VertexId& to, Polyline route = {});
    std::size_t add_overpass(const VertexId& from, const VertexId& to, Polyline stub_from, Polyline projection,
                             Polyline stub_to);
    std::size_t add_edge(Edge e);

    Edge& edge(std::size_t i) { return edges_.at(i); }
    const std::vector<Edge>& edges() const { return edges_; }

    DrawingBuilder& set_boundary(Polyline polygon);
    DrawingBuilder& connect(int input, int output, std::vector<std::size_t> path);
    /// Marks the drawing as a subgraph: connections need not cover every pair.
    DrawingBuilder& partial() {
        complete_ = false;
        return *this;
    }

    /// Validates every invariant and freezes the drawing. Throws LayoutError.
    Drawing build() const;

   private:
    CircuitSpec spec_;
    std::map<VertexId, ExactPoint> positions_;
    std::vector<Edge> edges_;
    std::optional<Polyline> boundary_;
    std::map<Connection, std::vector<std::size_t>> connections_;
    bool complete_ = true;
};

/// Mirror across the diagonal with M and N exchanged: the result realizes K_{n,m}
/// with input i of the result equal to output i of the source.
Drawing transpose(const Drawing& d);

/// Positions scaled by a positive rational factor.
Drawing scale(const Drawing& d, const Rational& factor);

/// Every planar waveguide piece: planar edge routes and overpass stubs, tagged with their edge index.
struct PlanarPiece {
    std::size_t edge;
    const Polyline* line;
};
std::vector<PlanarPiece> planar_pieces(const Drawing& d);

}  // namespace sas
