#include <doctest.h>

#include "sas/crossing.hpp"
#include "sas/surface.hpp"
#include "support.hpp"

using namespace sas;

TEST_SUITE("exact") {
    TEST_CASE("rationals parse and format canonically") {
        CHECK(parse_rational("6/4") == Rational(3, 2));
        CHECK(parse_rational("-7") == Rational(-7));
        CHECK(format_rational(parse_rational("6/4")) == "3/2");
        CHECK(format_rational(Rational(-5)) == "-5/1");
        CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
        CHECK_THROWS_AS(parse_rational("x/2"), std::invalid_argument);
        CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
        for (const char* text : {"0/1", "-17/3", "123456789012345678901234567891/2"})
            CHECK(format_rational(parse_rational(text)) == text);
    }

    TEST_CASE("orientation and intersection") {
        CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == 1);
        CHECK(orientation({0, 0}, {1, 0}, {0, -1}) == -1);
        CHECK(orientation({0, 0}, {1, 1}, {3, 3}) == 0);

        SegmentContact c = intersect({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}});
        CHECK(c.kind == ContactKind::Point);
        CHECK(c.point == ExactPoint{1, 1});
        CHECK(intersect({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}).kind == ContactKind::None);
        CHECK(intersect({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}}).kind == ContactKind::Overlap);
        c = intersect({{0, 0}, {1, 0}}, {{1, 0}, {2, 0}});
        CHECK(c.kind == ContactKind::Point);
        CHECK(c.point == ExactPoint{1, 0});
    }

    TEST_CASE("point location in a polygon") {
        Polyline square{{0, 0}, {2, 0}, {2, 2}, {0, 2}};
        CHECK(locate({1, 1}, square) == Containment::Inside);
        CHECK(locate({2, 1}, square) == Containment::Boundary);
        CHECK(locate({3, 1}, square) == Containment::Outside);
        CHECK(is_simple({{0, 0}, {1, 0}, {1, 1}}));
        CHECK_FALSE(is_simple({{0, 0}, {2, 0}, {2, 1}, {1, -1}}));
    }
}

TEST_SUITE("model") {
    TEST_CASE("spec validation") {
        CHECK_NOTHROW(make_spec(4, 4, Coupling::Surface, SwitchStyle::BinaryTree));
        CHECK_NOTHROW(make_spec(1, 5, Coupling::Surface, SwitchStyle::LumpedElement));
        CHECK_NOTHROW(make_spec(2, 2, Coupling::Facet, SwitchStyle::BinaryTree));
        CHECK_THROWS_AS(make_spec(1, 4, Coupling::Facet, SwitchStyle::BinaryTree), LayoutError);
        CHECK_THROWS_AS(make_spec(0, 3, Coupling::Surface, SwitchStyle::LumpedElement), LayoutError);
        CHECK_THROWS_AS(make_spec(3, 0, Coupling::Facet, SwitchStyle::LumpedElement), LayoutError);
    }

    TEST_CASE("planarity by Kuratowski") {
        CHECK(is_planar_by_kuratowski(make_spec(2, 100, Coupling::Surface, SwitchStyle::LumpedElement)));
        CHECK_FALSE(is_planar_by_kuratowski(make_spec(3, 3, Coupling::Surface, SwitchStyle::LumpedElement)));
        CHECK(is_planar_by_kuratowski(make_spec(1, 1, Coupling::Surface, SwitchStyle::LumpedElement)));
    }

    TEST_CASE("builder rejects broken drawings") {
        const CircuitSpec spec = make_spec(1, 2, Coupling::Surface, SwitchStyle::LumpedElement);
        DrawingBuilder b(spec);
        b.add_vertex({Party::M, 1, 0}, {0, 0});
        CHECK_THROWS_AS(b.add_vertex({Party::M, 1, 0}, {5, 5}), LayoutError);
        b.add_vertex({Party::N, 1, 0}, {1, 1});
        b.add_vertex({Party::N, 2, 0}, {-1, 1});
        const std::size_t e1 = b.add_planar({Party::M, 1, 0}, {Party::N, 1, 0});
        b.connect(1, 1, {e1});
        CHECK_THROWS_AS(b.build(), LayoutError);  // connection (1,2) is missing
        b.partial();
        CHECK_NOTHROW(b.build());

        DrawingBuilder same(spec);
        same.add_vertex({Party::M, 1, 0}, {0, 0});
        same.add_vertex({Party::N, 1, 0}, {0, 0});
        same.add_vertex({Party::N, 2, 0}, {1, 0});
        same.partial();
        CHECK_THROWS_AS(same.build(), LayoutError);  // coincident vertices
    }

    TEST_CASE("transpose swaps the parties") {
        const Drawing d = build_zarankiewicz_drawing(3, 5);
        const Drawing t = transpose(d);
        CHECK(t.spec().m == 5);
        CHECK(t.spec().n == 3);
        CHECK(t.edges().size() == d.edges().size());
        CHECK(oracle::check_paths(t).empty());
        CHECK(transpose(t) == d);
    }
}

TEST_SUITE("crossing") {
    TEST_CASE("known drawings") {
        CHECK(count_crossings(build_zarankiewicz_drawing(4, 4)).total_planar_crossings == 4);
        CHECK(count_crossings(build_zarankiewicz_drawing(1, 7)).total_planar_crossings == 0);
        CHECK(count_crossings(build_zarankiewicz_drawing(5, 5)).total_planar_crossings == 16);
        CHECK(local_crossing_of_drawing(build_zarankiewicz_drawing(8, 8)) == 9);
        CHECK(local_crossing_of_drawing(build_zarankiewicz_drawing(5, 5)) == 4);
        CHECK(local_crossing_of_drawing(build_spanning_max_planar_subgraph(6, 6)) == 0);
        CHECK(max_crossings_along_path(build_zarankiewicz_drawing(16, 16)) == 49);
    }

    TEST_CASE("three concurrent segments count three pairs") {
        DrawingBuilder b(make_spec(3, 3, Coupling::Surface, SwitchStyle::LumpedElement));
        b.partial();
        for (int k = 1; k <= 3; ++k) {
            b.add_vertex({Party::M, k, 0}, {k - 2, -1});
            b.add_vertex({Party::N, k, 0}, {2 - k, 1});
        }
        for (int k = 1; k <= 3; ++k) b.connect(k, k, {b.add_planar({Party::M, k, 0}, {Party::N, k, 0})});
        const CrossingReport r = count_crossings(b.build());
        CHECK(r.total_planar_crossings == 3);
        CHECK(r.per_edge_max == 2);
    }

    TEST_CASE("overlapping segments are rejected") {
        DrawingBuilder b(make_spec(2, 1, Coupling::Surface, SwitchStyle::LumpedElement));
        b.partial();
        b.add_vertex({Party::M, 1, 0}, {0, 0});
        b.add_vertex({Party::M, 2, 0}, {1, 0});
        b.add_vertex({Party::N, 1, 0}, {3, 0});
        b.add_planar({Party::M, 1, 0}, {Party::N, 1, 0}, {{0, 0}, {0, 1}, {3, 1}, {3, 0}});
        b.add_planar({Party::M, 2, 0}, {Party::N, 1, 0}, {{1, 0}, {1, 1}, {3, 1}, {3, 0}});
        CHECK_THROWS_AS(count_crossings(b.build()), LayoutError);
    }

    TEST_CASE("engine agrees with brute force on straight-line drawings") {
        for (int m = 1; m <= 7; ++m)
            for (int n = 1; n <= 7; ++n) {
                CAPTURE(m);
                CAPTURE(n);
                for (const Drawing& d : {build_zarankiewicz_drawing(m, n), build_basic_surface_drawing(m, n)}) {
                    const CrossingReport r = count_crossings(d);
                    const oracle::Tally t = oracle::brute_crossings(d);
                    CHECK(r.total_planar_crossings == t.total);
                    CHECK(r.per_edge_max == t.per_edge_max());
                    CHECK(r.per_edge == t.per_edge);
                }
            }
    }

    TEST_CASE("scale invariance and party symmetry") {
        const Drawing d = build_zarankiewicz_drawing(6, 5);
        const CrossingReport base = count_crossings(d);
        for (const Rational& f : {Rational(1, 3), Rational(7, 2), Rational(1000)}) {
            const CrossingReport s = count_crossings(scale(d, f));
            CHECK(s.total_planar_crossings == base.total_planar_crossings);
            CHECK(s.per_edge == base.per_edge);
            CHECK(s.crossing_pairs == base.crossing_pairs);
        }
        for (int n = 2; n <= 7; ++n) {
            const Drawing z = build_zarankiewicz_drawing(n, n);
            CHECK(count_crossings(transpose(z)).total_planar_crossings == count_crossings(z).total_planar_crossings);
        }
    }

    TEST_CASE("per-path maxima agree with per-edge maxima for lumped drawings") {
        for (int n = 2; n <= 9; ++n) {
            const Drawing z = build_zarankiewicz_drawing(n, n + 1);
            CHECK(max_crossings_along_path(z) == local_crossing_of_drawing(z));
        }
    }
}

TEST_SUITE("planarity") {
    std::vector<AbstractEdge> complete_bipartite(std::size_t m, std::size_t n) {
        std::vector<AbstractEdge> e;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) e.emplace_back(i, m + j);
        return e;
    }

    TEST_CASE("Kuratowski graphs") {
        CHECK_FALSE(is_planar_abstract(6, complete_bipartite(3, 3)));
        CHECK(is_planar_abstract(52, complete_bipartite(2, 50)));
        std::vector<AbstractEdge> k5;
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = i + 1; j < 5; ++j) k5.emplace_back(i, j);
        CHECK_FALSE(is_planar_abstract(5, k5));
        k5.pop_back();
        CHECK(is_planar_abstract(5, k5));
    }

    TEST_CASE("faces of a planar bipartite graph are even") {
        const AbstractGraph g = planar_skeleton(build_spanning_max_planar_subgraph(6, 6));
        const auto faces = face_sizes(g.vertices.size(), g.edges);
        REQUIRE_FALSE(faces.empty());
        for (std::size_t f : faces) CHECK(f == 4);
        // Euler: V - E + F = 2.
        CHECK(g.vertices.size() + faces.size() == g.edges.size() + 2);
    }

    TEST_CASE("crossing-free drawings have planar skeletons") {
        for (int m = 2; m <= 6; ++m)
            for (int n = 2; n <= 6; ++n) {
                const Drawing d = build_spanning_max_planar_subgraph(m, n);
                REQUIRE(count_crossings(d).total_planar_crossings == 0);
                const AbstractGraph g = planar_skeleton(d);
                CHECK(is_planar_abstract(g.vertices.size(), g.edges));
            }
    }
}

TEST_SUITE("resolver") {
    bool joins(const Edge& e, int m, int n) {
        return e.from == VertexId{Party::M, m, 0} && e.to == VertexId{Party::N, n, 0};
    }

    TEST_CASE("the 5x5 lumped layout has the projection conflict and loses it") {
        const Drawing naive = place_wop_le_surface_unresolved(5, 5);
        const CrossingReport before = count_crossings(naive);
        REQUIRE(before.overpass_projection_crossings > 0);
        bool conflict = false;
        for (const auto& [a, b] : before.projection_pairs) {
            const Edge& ea = naive.edges()[a];
            const Edge& eb = naive.edges()[b];
            conflict |= (joins(ea, 1, 3) && joins(eb, 2, 2)) || (joins(ea, 2, 2) && joins(eb, 1, 3));
        }
        CHECK(conflict);

        const Drawing fixed = resolve_projection_crossing(naive);
        const CrossingReport after = count_crossings(fixed);
        CHECK(after.overpass_projection_crossings == 0);
        CHECK(after.total_planar_crossings == before.total_planar_crossings);
        CHECK(fixed.connections() == naive.connections());
        CHECK(fixed.count_edges(EdgeKind::Overpass) == 9);
    }

    TEST_CASE("6x6 lumped layout resolves") {
        const Drawing fixed = resolve_projection_crossing(place_wop_le_surface_unresolved(6, 6));
        CHECK(count_crossings(fixed).overpass_projection_crossings == 0);
        CHECK(count_crossings(fixed).total_planar_crossings == 0);
    }

    TEST_CASE("no crossing means no change") {
        const Drawing d = place_wop_bt_surface(5, 5);
        CHECK(resolve_projection_crossing(d) == d);
    }

    TEST_CASE("crossing walled off from every stub is reported") {
        DrawingBuilder b(make_spec(2, 2, Coupling::Surface, SwitchStyle::LumpedElement));
        b.partial();
        const VertexId m1{Party::M, 1, 0}, m2{Party::M, 2, 0}, n1{Party::N, 1, 0}, n2{Party::N, 2, 0};
        b.add_vertex(m1, {0, 0});
        b.add_vertex(m2, {4, 0});
        b.add_vertex(n1, {4, 4});
        b.add_vertex(n2, {0, 4});
        const ExactPoint lo_l{Rational(1, 2), Rational(1, 2)}, hi_r{Rational(7, 2), Rational(7, 2)};
        const ExactPoint lo_r{Rational(7, 2), Rational(1, 2)}, hi_l{Rational(1, 2), Rational(7, 2)};
        b.add_overpass(m1, n1, {{0, 0}, lo_l}, {lo_l, hi_r}, {hi_r, {4, 4}});
        b.add_overpass(m2, n2, {{4, 0}, lo_r}, {lo_r, hi_l}, {hi_l, {0, 4}});
        // Two walls between the stub ends and the centre where the projections meet.
        b.add_planar(m1, n2, {{0, 0}, {1, 0}, {1, 4}, {0, 4}});
        b.add_planar(m2, n1, {{4, 0}, {3, 0}, {3, 4}, {4, 4}});
        const Drawing d = b.build();
        REQUIRE(count_crossings(d).overpass_projection_crossings == 1);
        CHECK(count_crossings(d).total_planar_crossings == 0);
        CHECK_THROWS_AS(resolve_projection_crossing(d), IrreducibleProjectionCrossing);
    }
}
