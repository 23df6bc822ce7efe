// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "sas/crossing.hpp"
#include "sas/facet.hpp"
#include "sas/io.hpp"
#include "sas/stats.hpp"
#include "sas/surface.hpp"
#include "sas/verify.hpp"

using namespace sas;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

using Rows = std::map<int, std::vector<long long>>;

/// Parses "| n×n | a | b | c | d | e |" data rows of the CLI's markdown table.
Rows table_rows(const std::string& markdown) {
    Rows rows;
    std::istringstream in(markdown);
    for (std::string line; std::getline(in, line);) {
        if (line.rfind("| ", 0) != 0) continue;
        std::istringstream cells(line);
        std::string bar, size;
        cells >> bar >> size;
        const auto x = size.find("×");
        if (x == std::string::npos) continue;
        int n = std::stoi(size.substr(0, x));
        std::vector<long long> values;
        for (std::string cell; cells >> bar >> cell;) values.push_back(std::stoll(cell));
        rows[n] = values;
    }
    return rows;
}

Outcome table_criterion(int which, const Rows& expected) {
    Outcome o;
    std::ostringstream out, err;
    const int code = cli_main({"table", "--which", std::to_string(which)}, out, err);
    o.expect(code == 0, "table command failed: " + err.str());
    const Rows got = table_rows(out.str());
    o.expect(got == expected, "table rows differ");
    return o;
}

std::size_t paths_with_overpass(const Drawing& d) {
    std::size_t k = 0;
    for (const auto& [c, path] : d.connections())
        for (std::size_t e : path) k += d.edges()[e].kind == EdgeKind::Overpass;
    return k;
}

Outcome sweep_recounts() {
    Outcome o;
    for (int m = 1; m <= 12; ++m)
        for (int n = 1; n <= 12; ++n) {
            const std::string at = " at " + std::to_string(m) + "x" + std::to_string(n);
            auto total = [](const Drawing& d) {
                return static_cast<std::int64_t>(count_crossings(d).total_planar_crossings);
            };
            o.expect(total(build_basic_surface_drawing(m, n)) == eta_basic(m, n), "basic" + at);
            o.expect(total(build_zarankiewicz_drawing(m, n)) == eta_conjectured(m, n), "Zarankiewicz" + at);
            o.expect(total(build_facet_axes_drawing(m, n)) == eta_facet_basic(m, n), "facet axes" + at);
            if (n % m == 0)
                o.expect(total(build_interleaved_facet_drawing(m, n)) == eta_facet_interleaved(m, n), "interleaved" + at);
        }
    return o;
}

Outcome wop_constructions() {
    Outcome o;
    struct Placement {
        const char* name;
        std::function<Drawing(int, int)> build;
        std::function<std::int64_t(int, int)> count;
    };
    const std::vector<Placement> placements{
        {"surface LE", place_wop_le_surface, mu_surface_le},
        {"surface BT", place_wop_bt_surface, mu_surface_bt},
        {"facet LE", place_wop_le_facet, mu_facet_le},
        {"facet BT", place_wop_bt_facet, mu_facet_bt},
    };
    for (int m = 2; m <= 10; ++m)
        for (int n = 2; n <= 10; ++n)
            for (const auto& p : placements) {
                const std::string at = std::string(" for ") + p.name + " " + std::to_string(m) + "x" + std::to_string(n);
                try {
                    const Drawing d = p.build(m, n);
                    const CrossingReport r = count_crossings(d);
                    o.expect(r.total_planar_crossings == 0, "planar crossings" + at);
                    o.expect(r.overpass_projection_crossings == 0, "projection crossings" + at);
                    o.expect(static_cast<std::int64_t>(d.count_edges(EdgeKind::Overpass)) == p.count(m, n),
                             "overpass count" + at);
                    o.expect(d.is_complete() && d.connections().size() == static_cast<std::size_t>(m * n),
                             "connection map" + at);
                    o.expect(max_overpasses_along_path(d) <= 1, "overpasses per path" + at);
                } catch (const std::exception& e) {
                    o.expect(false, e.what() + at);
                }
            }
    return o;
}

bool skeleton_planar(const Drawing& d) {
    const AbstractGraph g = planar_skeleton(d);
    return is_planar_abstract(g.vertices.size(), g.edges);
}

Outcome subgraphs() {
    Outcome o;
    for (int m = 2; m <= 12; ++m)
        for (int n = 2; n <= 12; ++n) {
            const std::string at = " at " + std::to_string(m) + "x" + std::to_string(n);
            const Drawing s = build_spanning_max_planar_subgraph(m, n);
            o.expect(s.edges().size() == static_cast<std::size_t>(2 * m + 2 * n - 4), "surface edge count" + at);
            o.expect(skeleton_planar(s), "surface planarity" + at);
            const Drawing f = build_facet_spanning_planar_subgraph(m, n);
            // Access waveguides (one per port) are not part of the bipartite subgraph.
            o.expect(f.count_edges(EdgeKind::Planar) - static_cast<std::size_t>(m + n) ==
                         static_cast<std::size_t>(m + n - 1),
                     "facet edge count" + at);
            o.expect(skeleton_planar(f), "facet planarity" + at);

            if (m > 6 || n > 6) continue;
            const AbstractGraph g = planar_skeleton(s);
            std::set<AbstractEdge> present(g.edges.begin(), g.edges.end());
            for (std::size_t a = 0; a < g.vertices.size(); ++a)
                for (std::size_t b = 0; b < g.vertices.size(); ++b) {
                    if (g.vertices[a].party != Party::M || g.vertices[b].party != Party::N) continue;
                    if (present.contains({a, b}) || present.contains({b, a})) continue;
                    auto grown = g.edges;
                    grown.emplace_back(a, b);
                    o.expect(!is_planar_abstract(g.vertices.size(), grown), "maximality" + at);
                }
        }
    return o;
}

Outcome convex_search(double& n4_seconds) {
    Outcome o;
    const std::map<int, std::int64_t> minima{{2, 0}, {3, 3}, {4, 16}};
    for (const auto& [n, expected] : minima) {
        const auto t0 = std::chrono::steady_clock::now();
        const ConvexSearchResult r = exhaustive_convex_search(n);
        if (n == 4) n4_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::string alternating;
        for (int k = 0; k < n; ++k) alternating += "MN";
        o.expect(r.min_crossings == expected, "minimum for n=" + std::to_string(n));
        o.expect(std::find(r.optimal_orders.begin(), r.optimal_orders.end(), alternating) != r.optimal_orders.end(),
                 "alternating order not optimal for n=" + std::to_string(n));
    }
    o.expect(n4_seconds < 10, "n=4 search too slow");
    return o;
}

Outcome local_crossings() {
    Outcome o;
    for (int m = 2; m <= 11; ++m)
        for (int n = 2; n <= 11; ++n) {
            const std::string at = " at " + std::to_string(m) + "x" + std::to_string(n);
            const std::int64_t ceil_form = ((m + 1) / 2 - 1) * ((n + 1) / 2 - 1);
            o.expect(static_cast<std::int64_t>(local_crossing_of_drawing(build_zarankiewicz_drawing(m, n))) == ceil_form,
                     "Zarankiewicz per-edge maximum" + at);
            const VerificationReport r = verify_instance(make_spec(m, n, Coupling::Surface, SwitchStyle::LumpedElement));
            std::size_t whitelisted = 0, other = 0;
            for (const auto& d : r.discrepancies) (d.whitelisted && d.quantity == kXiFloorForm ? whitelisted : other) += 1;
            const bool odd = m % 2 == 1 || n % 2 == 1;
            const bool forms_differ = xi_surface_floor_form(m, n) != ceil_form;
            o.expect(other == 0 && r.pass, "unexpected discrepancy" + at);
            o.expect(whitelisted == (forms_differ ? 1u : 0u), "floor-form note" + at);
            if (!odd) o.expect(!forms_differ, "floor and ceiling forms differ for even sizes" + at);
        }
    for (int n = 2; n <= 12; ++n)
        o.expect(static_cast<std::int64_t>(local_crossing_of_drawing(build_interleaved_facet_drawing(n))) == xi_facet(n),
                 "interleaved per-edge maximum at n=" + std::to_string(n));
    return o;
}

Outcome demonstrator() {
    Outcome o;
    const Drawing d = place_wop_bt_surface(4, 4);
    o.expect(d.count_edges(EdgeKind::Overpass) == 2, "overpass count");
    o.expect(d.connections().size() == 16, "path count");
    o.expect(paths_with_overpass(d) == 4, "paths with an overpass");
    return o;
}

Outcome stats() {
    Outcome o;
    const DeviceStats s = device_stats(4);
    o.expect(s.mzi_count == 24 && s.phase_shifter_count == 48 && s.active_shifters_per_state == 16 &&
                 s.switch_state_count == 24 && !s.switch_state_overflow,
             "device_stats(4)");
    return o;
}

Outcome penalty() {
    Outcome o;
    const PathPenalty p = path_penalty(100, 0.04, -40);
    o.expect(std::abs(p.total_il_db - 4.0) <= 1e-9, "insertion loss");
    o.expect(std::abs(p.worst_case_xt_db - 0.0) <= 1e-9, "crosstalk");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string name;
        double limit_s;  // 0 means no time limit
        std::function<Outcome()> run;
    };
    double n4_seconds = 0;
    const std::vector<Criterion> criteria{
        {1, "surface table", 1,
         [] {
             return table_criterion(1, {{4, {4, 4, 2, 1, 1}},
                                        {8, {144, 36, 18, 9, 1}},
                                        {16, {3136, 196, 98, 49, 1}},
                                        {32, {57600, 900, 450, 225, 1}},
                                        {64, {984064, 3844, 1922, 961, 1}}});
         }},
        {2, "facet table", 1,
         [] {
             return table_criterion(2, {{4, {16, 9, 5, 4, 1}},
                                        {8, {448, 49, 25, 24, 1}},
                                        {16, {8960, 225, 113, 112, 1}},
                                        {32, {158720, 961, 481, 480, 1}},
                                        {64, {2666496, 3969, 1985, 1984, 1}}});
         }},
        {3, "formula-vs-geometry sweep up to 12x12", 60, sweep_recounts},
        {4, "overpass constructions up to 10x10", 60, wop_constructions},
        {5, "subgraph certification", 0, subgraphs},
        {6, "convex-position search", 0, [&] { return convex_search(n4_seconds); }},
        {7, "local crossing measurements", 0, local_crossings},
        {8, "demonstrator cross-check", 0, demonstrator},
        {9, "device statistics", 0, stats},
        {10, "penalty model", 0, penalty},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0) o.expect(s < c.limit_s, "over the time limit");
        all = all && o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name;
        std::ostringstream t;
        t.precision(3);
        t << std::fixed << s;
        std::cout << " (" << t.str() << " s";
        if (c.id == 6) {
            std::ostringstream n4;
            n4.precision(3);
            n4 << std::fixed << n4_seconds;
            std::cout << ", n=4 in " << n4.str() << " s";
        }
        std::cout << ")";
        if (!o.ok) std::cout << " - " << o.detail;
        std::cout << "\n";
    }
    return all ? 0 : 1;
}
