#include <catch2/catch_amalgamated.hpp>

#include "segstab/proximity.hpp"
#include "oracles.hpp"

using namespace segstab;
using Catch::Approx;

namespace {

bool has_edge(const std::vector<EdgeIndexPair>& edges, std::uint32_t a, std::uint32_t b) {
    const EdgeIndexPair e{std::min(a, b), std::max(a, b)};
    return std::binary_search(edges.begin(), edges.end(), e);
}

bool subset(const std::vector<EdgeIndexPair>& small, const std::vector<EdgeIndexPair>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

TEST_CASE("delaunay basics") {
    SECTION("triangle") {
        const auto tri = delaunay<double>({{0, 0}, {2, 0}, {1, 1.5}});
        CHECK(tri.graph.m() == 3);
        CHECK(tri.triangles.size() == 1);
    }
    SECTION("four points, five edges, correct diagonal") {
        const auto tri = delaunay<double>({{0, 0}, {1, 0}, {1, 1}, {0, 1.1}});
        CHECK(tri.graph.m() == 5);
        CHECK(tri.triangles.size() == 2);
        CHECK(has_edge(tri.graph.edges, 0, 2));        // (0,0)-(1,1)
        CHECK_FALSE(has_edge(tri.graph.edges, 1, 3));  // not (1,0)-(0,1.1)
        CHECK_FALSE(circumcircle_violation(tri).has_value());
    }
    SECTION("collinear triple rejected with the violating points") {
        try {
            delaunay<double>({{0, 0}, {1, 0}, {2, 0}});
            FAIL("expected rejection");
        } catch (const DegeneracyErrorT<double>& e) {
            CHECK(e.kind == DegeneracyErrorT<double>::Kind::all_collinear);
            CHECK(e.points.size() == 3);
        }
    }
    SECTION("duplicate point rejected") {
        CHECK_THROWS_AS(delaunay<double>({{0, 0}, {1, 0}, {0.5, 1}, {1, 0}}),
                        DegeneracyErrorT<double>);
    }
    SECTION("two points give the single edge") {
        CHECK(delaunay<double>({{0, 0}, {1, 2}}).graph.m() == 1);
    }
}

TEST_CASE("delaunay certificate and structure on random sets") {
    SplitMix64 rng(17);
    for (int it = 0; it < 12; ++it) {
        const int n = 16 + static_cast<int>(rng.next_int(0, 100));
        const auto pts = oracles::random_points(n, rng);
        const auto tri = delaunay<double>(pts, {DegeneracyPolicy::reject, rng.next_u64()});
        CHECK_FALSE(circumcircle_violation(tri).has_value());
        CHECK_FALSE(find_edge_crossing(tri.graph).has_value());
        // Euler check: with h hull vertices, a triangulation of the hull has
        // 3n - 3 - h edges and 2n - 2 - h triangles.
        const std::size_t m = tri.graph.m();
        const std::size_t t = tri.triangles.size();
        CHECK(3 * static_cast<std::size_t>(n) - 3 - m == 2 * static_cast<std::size_t>(n) - 2 - t);
        CHECK(t >= 1);
    }
}

TEST_CASE("cocircular degeneracies: reject vs perturb") {
    std::vector<Point> grid;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) grid.push_back({double(i), double(j)});
    }
    SECTION("reject mode throws with a quadruple") {
        try {
            delaunay<double>(grid);
            FAIL("expected rejection");
        } catch (const DegeneracyErrorT<double>& e) {
            CHECK((e.kind == DegeneracyErrorT<double>::Kind::cocircular ||
                   e.kind == DegeneracyErrorT<double>::Kind::collinear));
            CHECK(e.points.size() >= 3);
        }
    }
    SECTION("perturb mode yields a valid non-strict Delaunay triangulation") {
        const auto tri = delaunay<double>(grid, {DegeneracyPolicy::perturb, 9});
        CHECK(tri.triangles.size() == 8);
        CHECK_FALSE(circumcircle_violation(tri).has_value());
        CHECK_FALSE(find_edge_crossing(tri.graph).has_value());
    }
    SECTION("perturb mode is deterministic per seed") {
        const auto t1 = delaunay<double>(grid, {DegeneracyPolicy::perturb, 5});
        const auto t2 = delaunay<double>(grid, {DegeneracyPolicy::perturb, 5});
        CHECK(t1.graph.edges == t2.graph.edges);
    }
}

TEST_CASE("gabriel graph") {
    CHECK(gabriel<double>({{0, 0}, {3, 1}}).m() == 1);
    SECTION("near square: four sides, no diagonal") {
        const auto g = gabriel<double>({{0, 0}, {1, 0}, {1, 1}, {0, 1.1}});
        CHECK(g.m() == 4);
        CHECK_FALSE(has_edge(g.edges, 0, 2));
        CHECK_FALSE(has_edge(g.edges, 1, 3));
    }
    SECTION("equilateral triangle keeps all edges") {
        CHECK(gabriel<double>({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}}).m() == 3);
    }
    SECTION("matches the definition oracle") {
        SplitMix64 rng(31);
        for (int it = 0; it < 8; ++it) {
            const auto pts = oracles::random_points(40, rng);
            CHECK(gabriel<double>(pts).edges == oracles::brute_gabriel(pts));
        }
    }
}

TEST_CASE("relative neighbourhood graph") {
    CHECK(rng<double>({{0, 0}, {3, 1}}).m() == 1);
    SECTION("strict lune keeps exact boundary ties") {
        // right isoceles triangle: |uw| == |uv| exactly for the legs, so the
        // strict inequality is not met and both legs survive; the hypotenuse
        // has the right-angle corner strictly inside its lune and is removed
        const auto g = rng<double>({{0, 0}, {1, 0}, {0, 1}});
        CHECK(g.m() == 2);
        CHECK(has_edge(g.edges, 0, 1));
        CHECK(has_edge(g.edges, 0, 2));
    }
    SECTION("third point removes the long edge") {
        const auto g = rng<double>({{0, 0}, {2, 0}, {1, 0.9}});
        CHECK(g.m() == 2);
        CHECK_FALSE(has_edge(g.edges, 0, 1));
    }
    SECTION("matches the definition oracle") {
        SplitMix64 sm(33);
        for (int it = 0; it < 8; ++it) {
            const auto pts = oracles::random_points(40, sm);
            CHECK(rng<double>(pts).edges == oracles::brute_rng(pts));
        }
    }
}

TEST_CASE("euclidean minimum spanning tree") {
    SECTION("collinear equally spaced points form the path") {
        const auto g = emst<double>({{0, 0}, {1, 0}, {2, 0}, {3, 0}});
        REQUIRE(g.m() == 3);
        CHECK(has_edge(g.edges, 0, 1));
        CHECK(has_edge(g.edges, 1, 2));
        CHECK(has_edge(g.edges, 2, 3));
    }
    SECTION("two points") {
        CHECK(emst<double>({{0, 0}, {5, 5}}).m() == 1);
    }
    SECTION("weight equals the complete-graph MST") {
        SplitMix64 sm(41);
        for (int it = 0; it < 10; ++it) {
            const auto pts = oracles::random_points(10 + int(sm.next_int(0, 54)), sm);
            const auto g = emst<double>(pts);
            CHECK(g.m() == pts.size() - 1);
            double w = 0;
            for (std::size_t e = 0; e < g.m(); ++e) w += segment_length(g.segment(e));
            CHECK(w == Approx(oracles::brute_mst_weight(pts)).epsilon(1e-9));
        }
    }
}

TEST_CASE("nearest neighbour graph") {
    SECTION("three collinear points") {
        const auto g = nng<double>({{0, 0}, {1, 0}, {3, 0}});
        REQUIRE(g.m() == 2);
        CHECK(has_edge(g.edges, 0, 1));
        CHECK(has_edge(g.edges, 1, 2));
    }
    SECTION("two points") {
        CHECK(nng<double>({{0, 0}, {1, 1}}).m() == 1);
    }
    SECTION("1 x 10 rectangle corners: two short edges") {
        const auto g = nng<double>({{0, 0}, {10, 0}, {10, 1}, {0, 1}});
        REQUIRE(g.m() == 2);
        CHECK(has_edge(g.edges, 0, 3));
        CHECK(has_edge(g.edges, 1, 2));
    }
}

TEST_CASE("subgraph chain nng <= emst <= rng <= gabriel <= delaunay") {
    SplitMix64 sm(55);
    for (int it = 0; it < 20; ++it) {
        const int n = (it < 17) ? 16 + int(sm.next_int(0, 48)) : 256;
        const auto pts = oracles::random_points(n, sm);
        const auto dt = delaunay<double>(pts, {DegeneracyPolicy::reject, sm.next_u64()});
        const auto gg = gabriel<double>(pts);
        const auto rn = rng<double>(pts);
        const auto mst = emst<double>(pts);
        const auto nn = nng<double>(pts);
        CHECK(subset(nn.edges, mst.edges));
        CHECK(subset(mst.edges, rn.edges));
        CHECK(subset(rn.edges, gg.edges));
        CHECK(subset(gg.edges, dt.graph.edges));
        CHECK_FALSE(find_edge_crossing(dt.graph).has_value());
        CHECK_FALSE(find_edge_crossing(nn).has_value());
    }
}

TEST_CASE("edge crossing verifier flags a planted crossing") {
    const auto bad = PlaneGraph{{{0, 0}, {2, 0}, {1, -1}, {1, 1}}, {{0, 1}, {2, 3}}};
    const auto hit = find_edge_crossing(bad);
    REQUIRE(hit.has_value());
    CHECK(hit->first == 0);
    CHECK(hit->second == 1);
    // T-touch (endpoint in another edge's interior) is also invalid
    const auto touch = PlaneGraph{{{0, 0}, {2, 0}, {1, 0}, {1, 1}}, {{0, 1}, {2, 3}}};
    CHECK(find_edge_crossing(touch).has_value());
    // shared endpoints are fine
    const auto fan = PlaneGraph{{{0, 0}, {1, 0}, {0, 1}}, {{0, 1}, {0, 2}, {1, 2}}};
    CHECK_FALSE(find_edge_crossing(fan).has_value());
    // collinear overlap through a shared endpoint is not
    const auto overlap = PlaneGraph{{{0, 0}, {2, 0}, {1, 0}}, {{0, 1}, {0, 2}}};
    CHECK(find_edge_crossing(overlap).has_value());
}

TEST_CASE("edge statistics") {
    SECTION("equally spaced path has mu = 1") {
        const PlaneGraph g{{{0, 0}, {1, 0}, {2, 0}}, {{0, 1}, {1, 2}}};
        CHECK(edge_stats(g, 1.0).mu == Approx(1.0));
    }
    SECTION("lengths 1 and 5 give mu = 5") {
        const PlaneGraph g{{{0, 0}, {1, 0}, {6, 0}}, {{0, 1}, {1, 2}}};
        CHECK(edge_stats(g, 1.0).mu == Approx(5.0));
    }
    SECTION("aspect ratio 1 + d/(2r)") {
        const PlaneGraph g{{{0, 0}, {2, 0}}, {{0, 1}}};
        CHECK(edge_stats(g, 1.0).aspect_ratios[0] == Approx(2.0));
    }
}
