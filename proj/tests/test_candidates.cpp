#include <catch2/catch_amalgamated.hpp>

#include "segstab/candidates.hpp"
#include "segstab/proximity.hpp"
#include "segstab/setcover.hpp"
#include "segstab/solvers.hpp"
#include "oracles.hpp"

using namespace segstab;

namespace {

const Tolerance kTol{1e-9};

bool contains_point(const CandidateSet& c, const Point& p, double eps = 1e-9) {
    for (const auto& q : c.centers) {
        if (dist(p, q) <= eps) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("candidate centers of the crossing two-edge instance") {
    const auto g = make_plane_graph<double>({{0, 0}, {4, 0}, {2, -3}, {2, 3}}, {{0, 1}, {2, 3}});
    const auto c = candidate_centers(g, 1.0, kTol);
    for (const Point want : {Point{1, 1}, Point{1, -1}, Point{3, 1}, Point{3, -1}}) {
        CHECK(contains_point(c, want));
    }
    // fallbacks: 4 endpoints + 2 midpoints, and the midpoints coincide at (2,0)
    for (const Point want : {Point{0, 0}, Point{4, 0}, Point{2, -3}, Point{2, 3}, Point{2, 0}}) {
        CHECK(contains_point(c, want));
    }
    CHECK(c.size() == 9);
    std::size_t tags = 0;
    for (const auto& pv : c.provenance) tags += pv.size();
    CHECK(tags == 10);  // 4 pair points + 6 per-edge fallback tags
}

TEST_CASE("single edge yields exactly its three fallbacks") {
    const auto g = make_plane_graph<double>({{0, 0}, {2, 2}}, {{0, 1}});
    const auto c = candidate_centers(g, 0.5, kTol);
    REQUIRE(c.size() == 3);
    CHECK(contains_point(c, {0, 0}));
    CHECK(contains_point(c, {1, 1}));
    CHECK(contains_point(c, {2, 2}));
}

TEST_CASE("far-apart parallel edges have no pair intersections") {
    const auto g =
        make_plane_graph<double>({{0, 0}, {1, 0}, {0, 50}, {1, 50}}, {{0, 1}, {2, 3}});
    const auto c = candidate_centers(g, 1.0, kTol);
    CHECK(c.size() == 6);
    for (const auto& pv : c.provenance) {
        CHECK(pv.front().kind == CandidateProvenance::Kind::edge_fallback);
    }
}

TEST_CASE("candidate invariants on random instances") {
    SplitMix64 sm(77);
    for (int it = 0; it < 10; ++it) {
        const auto pts = oracles::random_points(6, sm);
        const auto g = delaunay<double>(pts, {DegeneracyPolicy::reject, sm.next_u64()}).graph;
        const EdgeStats st = edge_stats(g, 1.0);
        const double r = st.d_min + sm.next_double() * (st.d_max - st.d_min);
        const auto c = candidate_centers(g, r, kTol);
        // every candidate is feasible for at least one edge
        for (const auto& p : c.centers) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t e = 0; e < g.m(); ++e) {
                best = std::min(best, dist_point_segment(p, g.segment(e)));
            }
            CHECK(best <= r + kTol.eps);
        }
        const std::size_t m = g.m();
        CHECK(c.size() <= 8 * (m * (m - 1) / 2) + 3 * m);
    }
}

TEST_CASE("candidate set preserves the optimum (grid oracle)") {
    SplitMix64 sm(99);
    for (int it = 0; it < 8; ++it) {
        const auto pts = oracles::random_points(5, sm);
        auto g = emst<double>(pts);
        if (g.m() > 5) continue;
        const EdgeStats st = edge_stats(g, 1.0);
        const double r = st.d_min + 0.5 * (st.d_max - st.d_min);
        const auto cands = candidate_centers(g, r, kTol);
        const auto out = exact_min_stab(g, r, cands, kTol);
        REQUIRE(out.status == ExactOutcome::Status::optimal);
        const std::size_t grid = oracles::grid_optimum(g, r, r / 50.0, kTol.eps);
        CHECK(out.solution.centers.size() == grid);
    }
}

TEST_CASE("vertex-restricted candidates") {
    const auto g = make_plane_graph<double>({{0, 0}, {4, 0}, {2, -3}, {2, 3}}, {{0, 1}, {2, 3}});
    const auto c = candidate_centers(g, 1.0, kTol);
    SECTION("delta at least the diameter keeps everything and adds vertices") {
        const auto r = restrict_candidates(c, g, 100.0, kTol);
        CHECK(r.size() >= c.size());
        for (const auto& v : g.vertices) CHECK(contains_point(r, v));
    }
    SECTION("small delta keeps only near-vertex candidates plus the vertices") {
        const auto r = restrict_candidates(c, g, 0.05, kTol);
        CHECK(r.size() == g.n());  // no candidate is near a vertex here
        for (const auto& v : g.vertices) CHECK(contains_point(r, v));
    }
    SECTION("empty candidate set still yields the vertex set") {
        const auto r = restrict_candidates(CandidateSet{}, g, 1.0, kTol);
        CHECK(r.size() == g.n());
    }
    SECTION("restricted solve stays feasible") {
        const auto out = exact_min_stab(g, 1.0, restrict_candidates(c, g, 0.05, kTol), kTol);
        REQUIRE(out.status == ExactOutcome::Status::optimal);
        CHECK_FALSE(
            check_stabbing(g, 1.0, out.solution.centers, kTol).has_value());
    }
}
