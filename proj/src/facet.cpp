#include "sas/facet.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "layout_util.hpp"
#include "sas/crossing.hpp"

namespace sas {

namespace {

VertexId mv(int i, int split = 0) { return {Party::M, i, split}; }
VertexId nv(int j, int split = 0) { return {Party::N, j, split}; }
VertexId in_port(int i) { return {Party::Port, i, 0}; }
VertexId out_port(int j) { return {Party::Port, -j, 0}; }

void require_pair_counts(int m, int n) {
    if (m < 2 || n < 2) throw LayoutError("construction needs at least two ports on each side");
}

struct FacetFrame {
    DrawingBuilder builder;
    int m;
    int n;
    std::vector<std::size_t> access_in;   // by input, 1-based
    std::vector<std::size_t> access_out;  // by output, 1-based

    void connect(int i, int j, std::vector<std::size_t> core) {
        core.insert(core.begin(), access_in[static_cast<std::size_t>(i)]);
        core.push_back(access_out[static_cast<std::size_t>(j)]);
        builder.connect(i, j, std::move(core));
    }
};

FacetFrame facet_frame(int m, int n, SwitchStyle style) {
    FacetFrame f{DrawingBuilder(make_spec(m, n, Coupling::Facet, style)), m, n, {0}, {0}};
    DrawingBuilder& b = f.builder;
    b.set_boundary({{-1, -1}, {m + 1, -1}, {m + 1, n + 1}, {-1, n + 1}});
    for (int i = 1; i <= m; ++i) {
        b.add_vertex(mv(i), {i, 0});
        b.add_vertex(in_port(i), {i, -1});
        f.access_in.push_back(b.add_planar(in_port(i), mv(i)));
    }
    for (int j = 1; j <= n; ++j) {
        b.add_vertex(nv(j), {0, j});
        b.add_vertex(out_port(j), {-1, j});
        f.access_out.push_back(b.add_planar(nv(j), out_port(j)));
    }
    return f;
}

/// Spanning subgraph edges; returns the (i, j) pairs it realizes.
std::map<std::pair<int, int>, std::size_t> add_subgraph(FacetFrame& f) {
    std::map<std::pair<int, int>, std::size_t> planar;
    auto join = [&](int i, int j) {
        if (planar.contains({i, j})) return;
        std::size_t e = f.builder.add_planar(mv(i), nv(j));
        planar.emplace(std::make_pair(i, j), e);
        f.connect(i, j, {e});
    };
    for (int j = 1; j <= f.n; ++j) join(1, j);
    for (int i = 2; i <= f.m; ++i) join(i, f.n);
    return planar;
}

// Overpass geometry. Each projection is a horizontal segment at a height used by no other
// overpass, so projections never meet. A connection to output j runs in the band j < y < j + 1/2,
// which crosses the triangle {M_1, N_j, N_j+1} where output j's stubs live. Input i >= 2 reaches
// any height through the triangle {M_i-1, M_i, N_n}.
enum class WopKind {
    Direct,      // input switch -> output switch
    ToOutput,    // cell beside an input pair -> output switch
    FromInput,   // input switch -> cell beside an output pair
};

struct WopRequest {
    WopKind kind;
    int i;  // input (first of the pair for ToOutput)
    int j;  // output (first of the pair for FromInput)
    Rational y;
    VertexId cell{};
    std::size_t e0 = 0;  // planar edges joining the cell to its pair
    std::size_t e1 = 0;
};

class HorizontalOverpasses {
   public:
    explicit HorizontalOverpasses(FacetFrame& f) : f_(f) {}

    void request(WopKind kind, int i, int j) { requests_.push_back({kind, i, j, Rational(0)}); }

    /// Assigns heights, places cells and their planar edges, then adds every overpass and path.
    void build() {
        std::map<int, int> per_band;
        for (const auto& r : requests_) ++per_band[r.j];
        std::map<int, int> used;
        for (auto& r : requests_) r.y = r.j + Rational(++used[r.j], 2 * (per_band[r.j] + 1));

        std::map<VertexId, int> splits;
        auto next_copy = [&](const VertexId& v) { return VertexId{v.party, v.index, ++splits[v]}; };
        DrawingBuilder& b = f_.builder;
        for (auto& r : requests_) {
            if (r.kind == WopKind::ToOutput) {
                // On the median of {M_i, M_i+1, N_n}.
                r.cell = next_copy(nv(r.j));
                b.add_vertex(r.cell, {Rational(2 * r.i + 1, 2) * (1 - r.y / f_.n), r.y});
                r.e0 = b.add_planar(mv(r.i), r.cell);
                r.e1 = b.add_planar(mv(r.i + 1), r.cell);
            } else if (r.kind == WopKind::FromInput) {
                // On the median of {M_1, N_j, N_j+1}.
                r.cell = next_copy(mv(r.i));
                Rational s = r.y / Rational(2 * r.j + 1, 2);
                b.add_vertex(r.cell, {1 - s, r.y});
                r.e0 = b.add_planar(r.cell, nv(r.j));
                r.e1 = b.add_planar(r.cell, nv(r.j + 1));
            }
        }

        // Output stubs are laid from the top down so each new one stays clear of the ones below it.
        std::vector<WopRequest*> order;
        for (auto& r : requests_) order.push_back(&r);
        std::stable_sort(order.begin(), order.end(), [](const WopRequest* a, const WopRequest* b) { return a->y > b->y; });
        for (const WopRequest* r : order) add(*r);
    }

   private:
    Polyline input_stub(int i, const Rational& y) const {
        ExactPoint at = f_.builder.position(mv(i));
        return {at, {Rational(2 * i - 1, 2) * (1 - y / f_.n), y}};
    }

    Polyline output_stub(int j, const Rational& y) const {
        ExactPoint edge{Rational(0), y};
        ExactPoint far{Rational(f_.m + 1), y};
        Rational t = detail::free_run(f_.builder, edge, far) / 2;
        return {lerp(edge, far, t), f_.builder.position(nv(j))};
    }

    Polyline cell_stub(const VertexId& cell, int direction) const {
        ExactPoint at = f_.builder.position(cell);
        ExactPoint far{at.x + direction * (f_.m + 2), at.y};
        return {at, lerp(at, far, detail::free_run(f_.builder, at, far) / 2)};
    }

    void add(const WopRequest& r) {
        DrawingBuilder& b = f_.builder;
        switch (r.kind) {
            case WopKind::Direct: {
                Polyline low = input_stub(r.i, r.y);
                Polyline high = output_stub(r.j, r.y);
                std::size_t w = b.add_overpass(mv(r.i), nv(r.j), low, {low.back(), high.front()}, high);
                f_.connect(r.i, r.j, {w});
                break;
            }
            case WopKind::ToOutput: {
                Polyline low = cell_stub(r.cell, -1);
                Polyline high = output_stub(r.j, r.y);
                std::size_t w = b.add_overpass(r.cell, nv(r.j), low, {low.back(), high.front()}, high);
                f_.connect(r.i, r.j, {r.e0, w});
                f_.connect(r.i + 1, r.j, {r.e1, w});
                break;
            }
            case WopKind::FromInput: {
                Polyline low = input_stub(r.i, r.y);
                Polyline high = cell_stub(r.cell, 1);
                std::size_t w = b.add_overpass(mv(r.i), r.cell, low, {low.back(), high.back()},
                                               Polyline(high.rbegin(), high.rend()));
                f_.connect(r.i, r.j, {w, r.e0});
                f_.connect(r.i, r.j + 1, {w, r.e1});
                break;
            }
        }
    }

    FacetFrame& f_;
    std::vector<WopRequest> requests_;
};

/// Binary-tree placement for odd m or for both counts even.
Drawing bt_facet(int m, int n) {
    FacetFrame f = facet_frame(m, n, SwitchStyle::BinaryTree);
    add_subgraph(f);
    HorizontalOverpasses wop(f);
    // Input pairs {2,3}, {4,5}, ... with N_n; the last pair is {m-1, m} when m is odd.
    const int last_pair = m % 2 == 1 ? m - 1 : m - 2;
    for (int i = 2; i < last_pair + 1; i += 2)
        for (int j = 1; j <= n - 1; ++j) wop.request(WopKind::ToOutput, i, j);
    if (m % 2 == 0) {
        // M_m is still joined only to N_n: output pairs {1,2}, ..., {n-3,n-2} around M_1, then N_n-1 directly.
        for (int j = 1; j + 1 <= n - 2; j += 2) wop.request(WopKind::FromInput, m, j);
        wop.request(WopKind::Direct, m, n - 1);
    }
    wop.build();
    return f.builder.build();
}

/// m even, n odd: output pairs {1,2}, ..., {n-2,n-1} around M_1 take one cell per input 2..m.
Drawing bt_facet_output_pairs(int m, int n) {
    FacetFrame f = facet_frame(m, n, SwitchStyle::BinaryTree);
    add_subgraph(f);
    HorizontalOverpasses wop(f);
    for (int j = 1; j + 1 <= n - 1; j += 2)
        for (int i = 2; i <= m; ++i) wop.request(WopKind::FromInput, i, j);
    wop.build();
    return f.builder.build();
}

}  // namespace

std::int64_t eta_facet_basic(int m, int n) {
    const std::int64_t a = m, c = n;
    return (a * (a - 1) / 2) * (c * (c - 1) / 2);
}

std::int64_t eta_facet_interleaved(int m, int n) {
    if (m < 1 || n < 1) throw LayoutError("port counts must be positive");
    if (n % m != 0) throw LayoutError("interleaved count needs n to be a multiple of m");
    const std::int64_t a = m, c = n;
    return c * (a - 1) * (2 * a * c - 3 * a - c) / 12;
}

std::int64_t xi_facet(int n) {
    if (n < 1) throw LayoutError("port count must be positive");
    const std::int64_t k = n - 1;
    return 2 * (k / 2) * ((k + 1) / 2);
}

std::int64_t mu_facet_le(int m, int n) {
    if (m < 1 || n < 1) throw LayoutError("port counts must be positive");
    return static_cast<std::int64_t>(m - 1) * (n - 1);
}

std::int64_t mu_facet_bt(int m, int n) {
    require_pair_counts(m, n);
    return (static_cast<std::int64_t>(m - 1) * (n - 1) + 1) / 2;
}

FacetFormulaSet facet_formulas(int m, int n) {
    FacetFormulaSet s{eta_facet_basic(m, n), std::nullopt, std::nullopt, mu_facet_le(m, n), std::nullopt};
    if (n % m == 0) s.eta_interleaved = eta_facet_interleaved(m, n);
    if (m == n) s.xi = xi_facet(n);
    if (m >= 2 && n >= 2) s.mu_bt = mu_facet_bt(m, n);
    return s;
}

Drawing build_facet_axes_drawing(int m, int n) {
    FacetFrame f = facet_frame(m, n, SwitchStyle::LumpedElement);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) f.connect(i, j, {f.builder.add_planar(mv(i), nv(j))});
    return f.builder.build();
}

Drawing build_facet_spanning_planar_subgraph(int m, int n) {
    FacetFrame f = facet_frame(m, n, SwitchStyle::LumpedElement);
    add_subgraph(f);
    f.builder.partial();
    return f.builder.build();
}

Drawing place_wop_le_facet(int m, int n) {
    FacetFrame f = facet_frame(m, n, SwitchStyle::LumpedElement);
    add_subgraph(f);
    HorizontalOverpasses wop(f);
    for (int i = 2; i <= m; ++i)
        for (int j = 1; j <= n - 1; ++j) wop.request(WopKind::Direct, i, j);
    wop.build();
    return resolve_projection_crossing(f.builder.build());
}

Drawing place_wop_bt_facet(int m, int n) {
    require_pair_counts(m, n);
    if (m % 2 == 0 && n % 2 == 1) return bt_facet_output_pairs(m, n);
    return bt_facet(m, n);
}

Drawing build_interleaved_facet_drawing(int m, int n) {
    if (m < 1 || n < 1) throw LayoutError("port counts must be positive");
    if (n % m != 0) throw LayoutError("interleaving needs n to be a multiple of m");
    const int per = n / m;
    std::vector<VertexId> order;
    for (int i = 1; i <= m; ++i) {
        order.push_back(mv(i));
        for (int k = 1; k <= per; ++k) order.push_back(nv((i - 1) * per + k));
    }

    DrawingBuilder b(make_spec(m, n, Coupling::Facet, SwitchStyle::LumpedElement));
    const Rational half_side = 2;
    b.set_boundary({{-half_side, -half_side}, {half_side, -half_side}, {half_side, half_side}, {-half_side, half_side}});
    const double pi = std::acos(-1.0);
    const double total = static_cast<double>(order.size());
    std::map<VertexId, std::size_t> access;
    for (std::size_t k = 0; k < order.size(); ++k) {
        // Angles stay inside (-pi, pi) so the half-angle tangent is finite.
        ExactPoint p = detail::circle_point(-pi + 2 * pi * (static_cast<double>(k) + 0.5) / total);
        b.add_vertex(order[k], p);
        Rational reach = std::max(Rational(abs(p.x)), Rational(abs(p.y)));
        ExactPoint port = Rational(half_side / reach) * p;
        const VertexId& v = order[k];
        if (v.party == Party::M) {
            b.add_vertex(in_port(v.index), port);
            access[v] = b.add_planar(in_port(v.index), v);
        } else {
            b.add_vertex(out_port(v.index), port);
            access[v] = b.add_planar(v, out_port(v.index));
        }
    }
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) b.connect(i, j, {access[mv(i)], b.add_planar(mv(i), nv(j)), access[nv(j)]});
    return b.build();
}

Drawing build_interleaved_facet_drawing(int n) { return build_interleaved_facet_drawing(n, n); }

Drawing build_rerouted_facet_example() {
    DrawingBuilder b(make_spec(4, 4, Coupling::Facet, SwitchStyle::LumpedElement));
    b.set_boundary({{-3, -3}, {3, -3}, {3, 3}, {-3, 3}});
    const std::vector<int> labels = detail::signed_labels(4);
    const detail::Ordinals ord(labels);

    // Quarter turns about the origin carry M_1 to N_1, M_-1 and N_-1.
    auto turn = [](const ExactPoint& p, int quarters) {
        ExactPoint q = p;
        for (int k = 0; k < quarters; ++k) q = {-q.y, q.x};
        return q;
    };
    const Polyline inner_route{{1, 0}, {Rational(3, 2), 0}, {Rational(3, 2), 1}, {3, 1}};
    std::map<VertexId, std::size_t> access;
    for (int quarter = 0; quarter < 4; ++quarter) {
        const bool input = quarter % 2 == 0;
        const int sign = quarter < 2 ? 1 : -1;
        for (int label : {sign, 2 * sign}) {
            VertexId v = input ? mv(label) : nv(label);
            int ordinal = ord.of(label);
            VertexId port = input ? in_port(ordinal) : out_port(ordinal);
            Polyline route;
            if (std::abs(label) == 1) {
                for (const auto& p : inner_route) route.push_back(turn(p, quarter));
            } else {
                route = {turn({2, 0}, quarter), turn({3, 0}, quarter)};
            }
            b.add_vertex(v, route.front());
            b.add_vertex(port, route.back());
            if (input) {
                access[v] = b.add_planar(port, v, Polyline(route.rbegin(), route.rend()));
            } else {
                access[v] = b.add_planar(v, port, route);
            }
        }
    }
    for (int x : labels)
        for (int y : labels)
            b.connect(ord.of(x), ord.of(y), {access[mv(x)], b.add_planar(mv(x), nv(y)), access[nv(y)]});
    return b.build();
}

}  // namespace sas
