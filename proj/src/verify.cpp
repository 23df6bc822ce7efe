#include "sas/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <functional>
#include <future>
#include <map>
#include <thread>

#include "layout_util.hpp"

namespace sas {

namespace {

class ReportBuilder {
   public:
    explicit ReportBuilder(VerificationReport& r) : r_(r) {}

    void compare(const std::string& quantity, std::int64_t formula, std::int64_t measured, const std::string& note = {}) {
        if (formula != measured) r_.discrepancies.push_back({quantity, formula, measured, note, false});
    }

    void whitelist(const std::string& quantity, std::int64_t formula, std::int64_t measured, const std::string& note) {
        if (formula != measured) r_.discrepancies.push_back({quantity, formula, measured, note, true});
    }

    void finish() {
        r_.pass = std::all_of(r_.discrepancies.begin(), r_.discrepancies.end(),
                              [](const Discrepancy& d) { return d.whitelisted && d.quantity == kXiFloorForm; });
    }

   private:
    VerificationReport& r_;
};

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

void measure_wop(const Drawing& d, std::int64_t expected_mu, MeasuredValues& out, ReportBuilder& rb) {
    const CrossingReport cr = count_crossings(d);
    const PathSummary paths = enumerate_paths(d);
    out.mu = as_int(d.count_edges(EdgeKind::Overpass));
    out.wop_planar_crossings = as_int(cr.total_planar_crossings);
    out.wop_projection_crossings = as_int(cr.overpass_projection_crossings);
    out.wop_max_per_path = as_int(paths.max_overpasses);
    out.wop_paths_with_overpass = as_int(paths.paths_with_overpass);
    rb.compare("mu", expected_mu, *out.mu);
    rb.compare("wop_planar_crossings", 0, *out.wop_planar_crossings);
    rb.compare("wop_projection_crossings", 0, *out.wop_projection_crossings);
    rb.compare("wop_max_per_path", expected_mu > 0 ? 1 : 0, *out.wop_max_per_path);
}

bool skeleton_is_planar(const Drawing& d) {
    AbstractGraph g = planar_skeleton(d);
    return is_planar_abstract(g.vertices.size(), g.edges);
}

void verify_surface(const CircuitSpec& spec, VerificationReport& r) {
    const int m = spec.m, n = spec.n;
    const SurfaceFormulaSet f = surface_formulas(m, n);
    r.formulas = f;
    MeasuredValues& out = r.measured;
    ReportBuilder rb(r);

    out.eta_basic = as_int(count_crossings(build_basic_surface_drawing(m, n)).total_planar_crossings);
    rb.compare("eta_basic", f.eta_basic, out.eta_basic);

    const Drawing z = build_zarankiewicz_drawing(m, n);
    const CrossingReport zr = count_crossings(z);
    out.eta_optimized = as_int(zr.total_planar_crossings);
    out.xi = as_int(zr.per_edge_max);
    out.xi_along_paths = as_int(enumerate_paths(z).max_planar_crossings);
    rb.compare("eta_conjectured", f.eta_conjectured, *out.eta_optimized);
    rb.compare("xi", f.xi, *out.xi);
    rb.compare("xi_along_paths", f.xi, *out.xi_along_paths);
    rb.whitelist(kXiFloorForm, xi_surface_floor_form(m, n), *out.xi,
                 "floor form of the local crossing count; the drawing attains the ceiling form when m or n is odd");
    if (m == n) r.quartic_ratio = static_cast<double>(f.eta_conjectured) / (std::pow(static_cast<double>(n), 4) / 16);

    if (m < 2 || n < 2) return rb.finish();

    const Drawing sub = build_spanning_max_planar_subgraph(m, n);
    out.subgraph_edges = as_int(sub.edges().size());
    out.subgraph_planar = skeleton_is_planar(sub) && count_crossings(sub).total_planar_crossings == 0;
    rb.compare("subgraph_edges", 2 * m + 2 * n - 4, *out.subgraph_edges);
    rb.compare("subgraph_planar", 1, *out.subgraph_planar ? 1 : 0);

    if (spec.style == SwitchStyle::LumpedElement)
        measure_wop(place_wop_le_surface(m, n), f.mu_le, out, rb);
    else
        measure_wop(place_wop_bt_surface(m, n), *f.mu_bt, out, rb);
    rb.finish();
}

void verify_facet(const CircuitSpec& spec, VerificationReport& r) {
    const int m = spec.m, n = spec.n;
    const FacetFormulaSet f = facet_formulas(m, n);
    r.formulas = f;
    MeasuredValues& out = r.measured;
    ReportBuilder rb(r);

    out.eta_basic = as_int(count_crossings(build_facet_axes_drawing(m, n)).total_planar_crossings);
    rb.compare("eta_basic", f.eta_basic, out.eta_basic);

    if (f.eta_interleaved) {
        const Drawing d = build_interleaved_facet_drawing(m, n);
        const CrossingReport cr = count_crossings(d);
        out.eta_optimized = as_int(cr.total_planar_crossings);
        rb.compare("eta_interleaved", *f.eta_interleaved, *out.eta_optimized);
        out.xi = as_int(cr.per_edge_max);
        out.xi_along_paths = as_int(enumerate_paths(d).max_planar_crossings);
        if (f.xi) {
            rb.compare("xi", *f.xi, *out.xi);
            rb.compare("xi_along_paths", *f.xi, *out.xi_along_paths);
        }
    }

    const Drawing sub = build_facet_spanning_planar_subgraph(m, n);
    // Access waveguides are part of every facet drawing but not of the bipartite subgraph.
    out.subgraph_edges = as_int(sub.count_edges(EdgeKind::Planar)) - m - n;
    out.subgraph_planar = skeleton_is_planar(sub) && count_crossings(sub).total_planar_crossings == 0;
    rb.compare("subgraph_edges", m + n - 1, *out.subgraph_edges);
    rb.compare("subgraph_planar", 1, *out.subgraph_planar ? 1 : 0);

    if (spec.style == SwitchStyle::LumpedElement)
        measure_wop(place_wop_le_facet(m, n), f.mu_le, out, rb);
    else
        measure_wop(place_wop_bt_facet(m, n), *f.mu_bt, out, rb);
    rb.finish();
}

std::string canonical(const std::string& pattern) {
    std::string best = pattern;
    std::string mirrored(pattern.rbegin(), pattern.rend());
    for (const std::string& s : {pattern, mirrored})
        for (std::size_t k = 0; k < s.size(); ++k) best = std::min(best, s.substr(k) + s.substr(0, k));
    return best;
}

std::int64_t convex_crossings(const std::string& pattern, const std::vector<ExactPoint>& spots) {
    const int n = static_cast<int>(pattern.size() / 2);
    DrawingBuilder b(make_spec(n, n, Coupling::Surface, SwitchStyle::LumpedElement));
    int mi = 0, ni = 0;
    for (std::size_t k = 0; k < pattern.size(); ++k)
        b.add_vertex(pattern[k] == 'M' ? VertexId{Party::M, ++mi, 0} : VertexId{Party::N, ++ni, 0}, spots[k]);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) b.connect(i, j, {b.add_planar({Party::M, i, 0}, {Party::N, j, 0})});
    return as_int(count_crossings(b.build()).total_planar_crossings);
}

}  // namespace

VerificationReport verify_instance(const CircuitSpec& spec) {
    const CircuitSpec checked = make_spec(spec.m, spec.n, spec.coupling, spec.style);
    VerificationReport r{checked, SurfaceFormulaSet{}, {}, {}, std::nullopt, false};
    if (checked.coupling == Coupling::Surface)
        verify_surface(checked, r);
    else
        verify_facet(checked, r);
    return r;
}

std::vector<VerificationReport> verify_sweep(int max_m, int max_n) {
    if (max_m < 1 || max_n < 1) throw LayoutError("sweep bounds must be positive");
    std::vector<CircuitSpec> specs;
    for (int m = 1; m <= max_m; ++m)
        for (int n = 1; n <= max_n; ++n)
            for (Coupling c : {Coupling::Surface, Coupling::Facet}) {
                specs.push_back({m, n, c, SwitchStyle::LumpedElement});
                if (m >= 2 && n >= 2) specs.push_back({m, n, c, SwitchStyle::BinaryTree});
            }

    // Workers pull instances by index; results land in their fixed slots, so the order is deterministic.
    std::vector<VerificationReport> out(specs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k; (k = next++) < specs.size();) out[k] = verify_instance(specs[k]);
    };
    const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> pool;
    for (unsigned w = 0; w < workers; ++w) pool.push_back(std::async(std::launch::async, work));
    for (auto& f : pool) f.get();
    return out;
}

PathSummary enumerate_paths(const Drawing& drawing) {
    if (!drawing.is_complete()) throw LayoutError("paths need a total connection map");
    PathSummary s;
    s.paths = trace_paths(drawing, count_crossings(drawing));
    for (const auto& t : s.paths) {
        s.total_planar_crossings += t.planar_crossings;
        s.max_planar_crossings = std::max(s.max_planar_crossings, t.planar_crossings);
        s.max_overpasses = std::max(s.max_overpasses, t.overpass_count);
        if (t.overpass_count > 0) ++s.paths_with_overpass;
    }
    return s;
}

ConvexSearchResult exhaustive_convex_search(int n) {
    if (n < 1) throw LayoutError("search needs at least one vertex per party");
    if (n > 4) throw LayoutError("exhaustive convex search is limited to n <= 4");
    const int total = 2 * n;
    const double pi = std::acos(-1.0);
    std::vector<ExactPoint> spots;
    for (int k = 0; k < total; ++k) spots.push_back(detail::circle_point(-pi + 2 * pi * (k + 0.5) / total));

    std::map<std::string, std::int64_t> classes;
    for (unsigned mask = 0; mask < (1u << total); ++mask) {
        if (std::popcount(mask) != n) continue;
        std::string pattern;
        for (int k = 0; k < total; ++k) pattern += (mask >> k) & 1u ? 'M' : 'N';
        std::string key = canonical(pattern);
        if (!classes.contains(key)) classes.emplace(key, convex_crossings(key, spots));
    }

    ConvexSearchResult r;
    r.classes_examined = classes.size();
    r.min_crossings = std::min_element(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
                          return a.second < b.second;
                      })->second;
    for (const auto& [pattern, count] : classes)
        if (count == r.min_crossings) r.optimal_orders.push_back(pattern);
    return r;
}

Tables reproduce_tables() {
    Tables t;
    for (int n : {4, 8, 16, 32, 64}) {
        const SurfaceFormulaSet s = surface_formulas(n, n);
        t.surface.push_back({n, s.eta_conjectured, s.mu_le, *s.mu_bt, s.xi, s.mu_le > 0 ? 1 : 0});
        const FacetFormulaSet f = facet_formulas(n, n);
        t.facet.push_back({n, *f.eta_interleaved, f.mu_le, *f.mu_bt, *f.xi, f.mu_le > 0 ? 1 : 0});
    }
    return t;
}

}  // namespace sas
