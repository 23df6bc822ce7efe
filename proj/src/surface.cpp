#include "sas/surface.hpp"

#include <map>

#include "layout_util.hpp"
#include "sas/crossing.hpp"

namespace sas {

using detail::Ordinals;
using detail::signed_labels;

namespace {

std::int64_t floor_half(std::int64_t k) { return k >= 0 ? k / 2 : -((-k + 1) / 2); }
std::int64_t ceil_half(std::int64_t k) { return k >= 0 ? (k + 1) / 2 : -((-k) / 2); }

void require_pair_counts(int m, int n) {
    if (m < 2 || n < 2) throw LayoutError("construction needs at least two ports on each side");
}

VertexId mv(int label, int split = 0) { return {Party::M, label, split}; }
VertexId nv(int label, int split = 0) { return {Party::N, label, split}; }

CircuitSpec surface_spec(int m, int n, SwitchStyle style) { return make_spec(m, n, Coupling::Surface, style); }

/// Zarankiewicz vertex placement shared by all drawings on the axes.
DrawingBuilder axis_frame(int m, int n, SwitchStyle style) {
    DrawingBuilder b(surface_spec(m, n, style));
    for (int x : signed_labels(m)) b.add_vertex(mv(x), {x, 0});
    for (int y : signed_labels(n)) b.add_vertex(nv(y), {0, y});
    return b;
}

struct SubgraphFrame {
    DrawingBuilder builder;
    std::vector<int> ms;  // ascending labels
    std::vector<int> ns;
    Ordinals m_ord;
    Ordinals n_ord;
    std::map<std::pair<int, int>, std::size_t> planar;  // (M label, N label) -> edge

    bool has(int x, int y) const { return planar.contains({x, y}); }
};

bool is_hub_m(const std::vector<int>& ms, int x) { return x == ms.front() || x == ms.back(); }
bool is_hub_n(int y) { return y == 1 || y == -1; }

SubgraphFrame subgraph_frame(int m, int n, SwitchStyle style) {
    require_pair_counts(m, n);
    SubgraphFrame f{axis_frame(m, n, style), signed_labels(m), signed_labels(n), Ordinals(signed_labels(m)),
                    Ordinals(signed_labels(n)), {}};
    for (int x : f.ms)
        for (int y : f.ns)
            if (is_hub_m(f.ms, x) || is_hub_n(y)) {
                std::size_t e = f.builder.add_planar(mv(x), nv(y));
                f.planar.emplace(std::make_pair(x, y), e);
                f.builder.connect(f.m_ord.of(x), f.n_ord.of(y), {e});
            }
    return f;
}

/// Outputs other than y = +-1 in the order ceil(n/2), ..., 2, -2, ..., -floor(n/2).
std::vector<int> non_hub_outputs(int n) {
    std::vector<int> out;
    for (int y = (n + 1) / 2; y >= 2; --y) out.push_back(y);
    for (int y = -2; y >= -(n / 2); --y) out.push_back(y);
    return out;
}

int sign(int v) { return v > 0 ? 1 : -1; }

// Overpass geometry for the binary-tree layout. Every projection is a vertical segment at an
// x-coordinate used by no other overpass, so no two projections can meet. The lower end of each
// projection sits next to an input switch or an auxiliary cell near the x-axis; the upper end lies
// in the face between the tents of output y and of its inner neighbour, on a line through the hub
// switch at the far end of that face.
class VerticalOverpasses {
   public:
    VerticalOverpasses(DrawingBuilder& b, const std::vector<int>& ms) : b_(b), left_(ms.front()), right_(ms.back()) {}

    /// Point above x = X inside the face owned by output y, a fraction t from the inner tent to the outer one.
    ExactPoint strip_point(int y, const Rational& x, const Rational& t) const {
        const int inner = y - sign(y);
        Rational h0 = Rational(inner) + t * Rational(y - inner);
        Rational wing = x > 0 ? Rational(right_) : Rational(left_);
        return {x, h0 * (1 - x / wing)};
    }

    /// Short stub from input switch x towards output side sigma, k-th of `count` leaving that switch.
    Polyline input_stub(int x, int sigma, int k, int count) const {
        Rational dx = Rational(k, 4 * (count + 1)) * sign(x);
        Rational dy = Rational(sigma, 2 * (std::abs(x) + 2));
        ExactPoint at{x, 0};
        return {at, {at.x + dx, dy}};
    }

    /// Overpass from the end of `low` (a stub leaving `from`) straight up or down to a stub of output y.
    std::size_t to_output(const VertexId& from, Polyline low, int y) {
        ExactPoint top = strip_point(y, low.back().x, Rational(2, 3));
        ExactPoint apex = b_.position({Party::N, y, 0});
        return b_.add_overpass(from, {Party::N, y, 0}, low, {low.back(), top}, {top, apex});
    }

    /// Overpass from the end of `low` to an auxiliary cell on the y-axis inside the face of output `outer`.
    std::size_t to_cell(const VertexId& from, Polyline low, const VertexId& cell, int outer) {
        ExactPoint top = strip_point(outer, low.back().x, Rational(1, 3));
        return b_.add_overpass(from, cell, low, {low.back(), top}, {top, b_.position(cell)});
    }

   private:
    DrawingBuilder& b_;
    int left_;
    int right_;
};

Drawing bt_direct(int m, int n) {
    SubgraphFrame f = subgraph_frame(m, n, SwitchStyle::BinaryTree);
    DrawingBuilder& b = f.builder;
    VerticalOverpasses wop(b, f.ms);
    std::map<VertexId, int> splits;
    auto next_copy = [&](const VertexId& v) { return VertexId{v.party, v.index, ++splits[v]}; };

    // Adjacent inner inputs, pairwise; with m odd the one left of the right hub stays unpaired.
    // Cells for outputs above the x-axis are stacked upwards from the pair, the others downwards.
    const std::vector<int> outputs = non_hub_outputs(n);
    for (std::size_t p = 1; p + 2 < f.ms.size(); p += 2) {
        const int x0 = f.ms[p], x1 = f.ms[p + 1];
        const ExactPoint base{Rational(x0 + x1, 2), Rational(0)};
        for (int sigma : {1, -1}) {
            std::vector<int> side;
            for (int y : outputs)
                if (sign(y) == sigma) side.push_back(y);
            if (side.empty()) continue;
            const auto spots = detail::stack_points(b, base, {0, sigma}, side.size());
            const std::size_t k_max = side.size() + 1;
            // Sideways stub lengths small enough to stay below the cells' own edges further up.
            const Rational step = abs(spots.front().y) / (8 * static_cast<long>(k_max) * std::max({1, std::abs(x0), std::abs(x1)}));
            for (std::size_t k = 0; k < side.size(); ++k) {
                const int y = side[k];
                VertexId cell = next_copy(nv(y));
                b.add_vertex(cell, spots[k]);
                std::size_t e0 = b.add_planar(mv(x0), cell);
                std::size_t e1 = b.add_planar(mv(x1), cell);
                ExactPoint out{spots[k].x + step * static_cast<long>(k + 1), spots[k].y};
                std::size_t w = wop.to_output(cell, {spots[k], out}, y);
                b.connect(f.m_ord.of(x0), f.n_ord.of(y), {e0, w});
                b.connect(f.m_ord.of(x1), f.n_ord.of(y), {e1, w});
            }
        }
    }

    if (m % 2 == 1) {
        const int xu = f.ms[f.ms.size() - 2];
        std::vector<int> pos, neg;
        for (int y = (n + 1) / 2; y >= 2; --y) pos.push_back(y);
        for (int y = -2; y >= -(n / 2); --y) neg.push_back(y);
        // One side has an odd count; its outermost output is joined directly.
        int single;
        if (pos.size() % 2 == 0) {
            single = neg.back();
            neg.pop_back();
        } else {
            single = pos.front();
            pos.erase(pos.begin());
        }
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t k = 0; k + 1 < pos.size(); k += 2) pairs.emplace_back(pos[k], pos[k + 1]);
        for (std::size_t k = 0; k + 1 < neg.size(); k += 2) pairs.emplace_back(neg[k], neg[k + 1]);

        const int count = static_cast<int>(pairs.size()) + 1;
        int k = 0;
        for (const auto& [y0, y1] : pairs) {
            // Consecutive labels: the face between their tents belongs to the one further out.
            const int outer = std::abs(y0) > std::abs(y1) ? y0 : y1;
            const int inner = outer == y0 ? y1 : y0;
            VertexId cell = next_copy(mv(xu));
            b.add_vertex(cell, {Rational(0), Rational(inner) + Rational(outer - inner, 3)});
            std::size_t e0 = b.add_planar(cell, nv(y0));
            std::size_t e1 = b.add_planar(cell, nv(y1));
            std::size_t w = wop.to_cell(mv(xu), wop.input_stub(xu, sign(outer), ++k, count), cell, outer);
            b.connect(f.m_ord.of(xu), f.n_ord.of(y0), {w, e0});
            b.connect(f.m_ord.of(xu), f.n_ord.of(y1), {w, e1});
        }
        std::size_t w = wop.to_output(mv(xu), wop.input_stub(xu, sign(single), ++k, count), single);
        b.connect(f.m_ord.of(xu), f.n_ord.of(single), {w});
    }

    return b.build();
}

}  // namespace

std::int64_t eta_basic(int m, int n) {
    const std::int64_t a = m, c = n;
    return (a * (a - 1) / 2) * (c * (c - 1) / 2);
}

std::int64_t eta_conjectured(int m, int n) {
    const std::int64_t a = m, c = n;
    return floor_half(a) * floor_half(c) * floor_half(a - 1) * floor_half(c - 1);
}

std::int64_t xi_surface(int m, int n) { return (ceil_half(m) - 1) * (ceil_half(n) - 1); }

std::int64_t xi_surface_floor_form(int m, int n) { return (floor_half(m) - 1) * (floor_half(n) - 1); }

std::int64_t mu_surface_le(int m, int n) {
    if (m < 2 || n < 2) return 0;
    return static_cast<std::int64_t>(m - 2) * (n - 2);
}

std::int64_t mu_surface_bt(int m, int n) {
    require_pair_counts(m, n);
    return (static_cast<std::int64_t>(m - 2) * (n - 2) + 1) / 2;
}

SurfaceFormulaSet surface_formulas(int m, int n) {
    if (m < 1 || n < 1) throw LayoutError("port counts must be positive");
    SurfaceFormulaSet s{eta_basic(m, n), eta_conjectured(m, n), xi_surface(m, n), mu_surface_le(m, n), std::nullopt};
    if (m >= 2 && n >= 2) s.mu_bt = mu_surface_bt(m, n);
    return s;
}

Drawing build_basic_surface_drawing(int m, int n) {
    DrawingBuilder b(surface_spec(m, n, SwitchStyle::LumpedElement));
    for (int i = 1; i <= m; ++i) b.add_vertex(mv(i), {i, 0});
    for (int j = 1; j <= n; ++j) b.add_vertex(nv(j), {j, 1});
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) b.connect(i, j, {b.add_planar(mv(i), nv(j))});
    return b.build();
}

Drawing build_zarankiewicz_drawing(int m, int n) {
    DrawingBuilder b = axis_frame(m, n, SwitchStyle::LumpedElement);
    const Ordinals mo(signed_labels(m)), no(signed_labels(n));
    for (int x : signed_labels(m))
        for (int y : signed_labels(n)) b.connect(mo.of(x), no.of(y), {b.add_planar(mv(x), nv(y))});
    return b.build();
}

Drawing build_spanning_max_planar_subgraph(int m, int n) {
    SubgraphFrame f = subgraph_frame(m, n, SwitchStyle::LumpedElement);
    f.builder.partial();
    return f.builder.build();
}

Drawing place_wop_le_surface_unresolved(int m, int n) {
    SubgraphFrame f = subgraph_frame(m, n, SwitchStyle::LumpedElement);
    for (int x : f.ms)
        for (int y : f.ns)
            if (!f.has(x, y)) {
                std::size_t k = detail::add_straight_overpass(f.builder, mv(x), nv(y));
                f.builder.connect(f.m_ord.of(x), f.n_ord.of(y), {k});
            }
    return f.builder.build();
}

Drawing place_wop_le_surface(int m, int n) {
    SubgraphFrame f = subgraph_frame(m, n, SwitchStyle::LumpedElement);
    VerticalOverpasses wop(f.builder, f.ms);
    const std::vector<int> outputs = non_hub_outputs(n);
    for (int x : f.ms) {
        if (is_hub_m(f.ms, x)) continue;
        const int count = static_cast<int>(outputs.size());
        int k = 0;
        for (int y : outputs) {
            std::size_t w = wop.to_output(mv(x), wop.input_stub(x, sign(y), ++k, count), y);
            f.builder.connect(f.m_ord.of(x), f.n_ord.of(y), {w});
        }
    }
    // Distinct projection abscissae leave nothing for the resolver; it still certifies the result.
    return resolve_projection_crossing(f.builder.build());
}

Drawing place_wop_bt_surface(int m, int n) {
    require_pair_counts(m, n);
    // The pairing runs over inner inputs; with an odd input count and an even output
    // count it is built with the roles exchanged and mirrored back.
    if (m % 2 == 1 && n % 2 == 0) return transpose(bt_direct(n, m));
    return bt_direct(m, n);
}

}  // namespace sas
