// Acceptance suite: one test case per criterion, each printing a PASS line
// with the measured quantities when its assertions hold.

#include <catch2/catch_amalgamated.hpp>

#include <iostream>

#include "segstab/segstab.hpp"
#include "oracles.hpp"

using namespace segstab;

namespace {

const Tolerance kTol{1e-9};

PlaneGraph random_class_instance(GraphClass cls, SplitMix64& rng, std::size_t max_edges,
                                 int n_hint) {
    for (;;) {
        try {
            const PlaneGraph g =
                build_graph<double>(cls, oracles::random_points(n_hint, rng), rng.next_u64());
            if (g.m() >= 2 && g.m() <= max_edges) return g;
        } catch (const DegeneracyErrorT<double>&) {
        }
    }
}

std::size_t exact_count(const PlaneGraph& g, double r) {
    const auto out = exact_min_stab(g, r, candidate_centers(g, r, kTol), kTol);
    REQUIRE(out.status == ExactOutcome::Status::optimal);
    REQUIRE_FALSE(check_stabbing(g, r, out.solution.centers, kTol).has_value());
    return out.solution.centers.size();
}

void pass(const std::string& line) { std::cout << "[PASS] " << line << std::endl; }

}  // namespace

TEST_CASE("criterion 1: exact solver equals naive subset enumeration") {
    std::size_t instances = 0;
    for (const GraphClass cls : {GraphClass::delaunay, GraphClass::gabriel, GraphClass::emst}) {
        for (int seed = 1; seed <= 50; ++seed) {
            SplitMix64 rng(1000 * static_cast<int>(cls) + seed);
            const int n_hint = cls == GraphClass::emst ? 8 : 5;
            const PlaneGraph g = random_class_instance(cls, rng, 8, n_hint);
            const EdgeStats st = edge_stats(g, 1.0);
            const double r = st.d_min + rng.next_double() * (st.d_max - st.d_min);
            const auto cands = candidate_centers(g, r, kTol);
            std::vector<std::uint32_t> masks;
            for (const auto& c : cands.centers) {
                std::uint32_t mask = 0;
                for (std::size_t e = 0; e < g.m(); ++e) {
                    if (stabs(c, r, g.segment(e), kTol)) mask |= 1u << e;
                }
                masks.push_back(mask);
            }
            const std::size_t naive = oracles::naive_min_cover(masks, static_cast<int>(g.m()));
            REQUIRE(exact_count(g, r) == naive);
            ++instances;
        }
    }
    pass("criterion 1 — exact = naive enumeration on " + std::to_string(instances) +
         " instances (delaunay/gabriel/emst, |E| <= 8)");
}

TEST_CASE("criterion 2: candidate set preserves the optimum against a dense grid") {
    std::size_t instances = 0;
    for (int seed = 1; instances < 30; ++seed) {
        SplitMix64 rng(9000 + seed);
        const PlaneGraph g = random_class_instance(GraphClass::emst, rng, 6, 7);
        const EdgeStats st = edge_stats(g, 1.0);
        const double r = st.d_min + rng.next_double() * (st.d_max - st.d_min);
        const std::size_t over_candidates = exact_count(g, r);
        const std::size_t over_grid = oracles::grid_optimum(g, r, r / 50.0, kTol.eps);
        REQUIRE(over_candidates == over_grid);
        ++instances;
    }
    pass("criterion 2 — candidate-set optimum = r/50-grid optimum on 30 instances");
}

TEST_CASE("criterion 3: strip greedy is within factor 8 of the exact cover") {
    double max_ratio = 0.0;
    for (int seed = 1; seed <= 30; ++seed) {
        SplitMix64 rng(400 + seed);
        const int n = 3 + static_cast<int>(rng.next_int(0, 7));
        const auto pts = oracles::random_points(n, rng);
        const double r = 0.1 + 0.3 * rng.next_double();
        const auto approx = cesd_approx(pts, r);
        const auto exact = cesd_exact(pts, r, kTol);
        REQUIRE_FALSE(check_cover(pts, r, approx.centers, kTol).has_value());
        REQUIRE(approx.centers.size() <= 8 * exact.centers.size());
        max_ratio = std::max(max_ratio, static_cast<double>(approx.centers.size()) /
                                            static_cast<double>(exact.centers.size()));
    }
    std::ostringstream os;
    os << "criterion 3 — cover factor <= 8 on 30 point sets (max empirical ratio " << max_ratio
       << ")";
    pass(os.str());
}

TEST_CASE("criterion 4: end-to-end factor 8 p(1+2 lambda) against the exact optimum") {
    for (const double lambda : {0.5, 1.0}) {
        const HexCover phat = hex_cover_bound(1.0 + 2.0 * lambda);
        REQUIRE(phat.certified);
        for (int seed = 1; seed <= 15; ++seed) {
            SplitMix64 rng(7700 + seed + static_cast<int>(lambda * 2));
            const PlaneGraph g = random_class_instance(GraphClass::gabriel, rng, 8, 5);
            const EdgeStats st = edge_stats(g, 1.0);
            const double r = st.d_max / (2.0 * lambda) * (1.0 + 0.25 * rng.next_double());
            const auto approx = ipgd_approx(g, r, AnchorKind::endpoints, lambda);
            REQUIRE(approx.factor_guarantee);
            REQUIRE_FALSE(check_stabbing(g, r, approx.centers, kTol).has_value());
            const std::size_t opt = exact_count(g, r);
            REQUIRE(approx.centers.size() <= 8 * phat.count * opt);
        }
    }
    pass("criterion 4 — approx count <= 8 p_hat(1+2 lambda) opt on 30 instances "
         "(lambda in {0.5, 1}, hex coverage certified)");
}

TEST_CASE("criterion 5: square tiling respects the ceil(sqrt(2)/eta)^2 bound") {
    std::size_t instances = 0;
    for (const double eta : {0.5, 1.0, std::numbers::sqrt2}) {
        const auto bound =
            static_cast<std::size_t>(std::pow(std::ceil(std::numbers::sqrt2 / eta), 2));
        for (int seed = 1; seed <= 20; ++seed) {
            SplitMix64 rng(31000 + seed);
            const PlaneGraph g = random_class_instance(GraphClass::delaunay, rng, 64, 10);
            std::vector<Segment> segs(g.m());
            for (std::size_t e = 0; e < g.m(); ++e) segs[e] = g.segment(e);
            const double R = smallest_stabbing_disk(segs, kTol).radius;
            const double r = eta * R;
            const auto sol = grid_cover(g, r, kTol);
            REQUIRE_FALSE(check_stabbing(g, r, sol.centers, kTol).has_value());
            REQUIRE(sol.centers.size() <= bound);
            ++instances;
        }
    }
    pass("criterion 5 — grid_cover feasible and within ceil(sqrt(2)/eta)^2 on " +
         std::to_string(instances) + " instances (eta in {0.5, 1, sqrt(2)})");
}

TEST_CASE("criterion 6: lattice circle distance bound for r = 1, 2, 3") {
    std::ostringstream os;
    os << "criterion 6 — exhaustive bound check:";
    for (const int r : {1, 2, 3}) {
        const Lemma1Report rep = verify_lemma1(r);
        REQUIRE(rep.ok);
        os << " r=" << r << " min=" << static_cast<double>(rep.min_rho) << " >= "
           << to_double(rep.bound) << ";";
    }
    pass(os.str());
}

TEST_CASE("criterion 7: reduction equivalence k_CDC = k_IPGD with forward certificates") {
    for (int seed = 1; seed <= 10; ++seed) {
        SplitMix64 rng(55000 + seed);
        const int count = 1 + static_cast<int>(rng.next_int(0, 4));
        std::vector<Pt<long long>> d;
        while (static_cast<int>(d.size()) < count) {
            const Pt<long long> p{rng.next_int(0, 4), rng.next_int(0, 4)};
            if (std::find(d.begin(), d.end(), p) == d.end()) d.push_back(p);
        }
        const ReductionReport rep = verify_reduction(d, 1, rng.next_u64());
        REQUIRE_FALSE(rep.indeterminate);
        REQUIRE(rep.equal);
        REQUIRE(rep.forward_ok);
    }
    pass("criterion 7 — k_CDC = k_IPGD and forward certificate on 10 seeded sets, |D| <= 5");
}

TEST_CASE("criterion 8: subgraph chain on 100 seeded point sets") {
    const auto subset = [](const std::vector<EdgeIndexPair>& a,
                           const std::vector<EdgeIndexPair>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    for (int seed = 1; seed <= 100; ++seed) {
        SplitMix64 sm(123000 + seed);
        const auto pts = oracles::random_points(64, sm);
        const auto dt = delaunay<double>(pts, {DegeneracyPolicy::reject, sm.next_u64()});
        const auto gg = gabriel<double>(pts);
        const auto rn = rng<double>(pts);
        const auto mst = emst<double>(pts);
        const auto nn = nng<double>(pts);
        REQUIRE(subset(nn.edges, mst.edges));
        REQUIRE(subset(mst.edges, rn.edges));
        REQUIRE(subset(rn.edges, gg.edges));
        REQUIRE(subset(gg.edges, dt.graph.edges));
    }
    pass("criterion 8 — nng <= emst <= rng <= gabriel <= delaunay on 100 seeds, n = 64");
}

TEST_CASE("criterion 9: near-linear scaling of the approximation pipeline") {
    const std::vector<std::size_t> targets{1000, 2000, 4000, 8000};
    constexpr int kInstances = 5;  // independent instances per size
    std::vector<std::vector<PlaneGraph>> graphs(targets.size());
    std::vector<std::vector<double>> radii(targets.size());
    for (std::size_t s = 0; s < targets.size(); ++s) {
        const std::size_t m = targets[s];
        const int n = static_cast<int>(m / 3 + 16);
        for (int k = 0; k < kInstances; ++k) {
            SplitMix64 rng(777 + 131 * k);
            PlaneGraph g = delaunay<double>(oracles::random_points(n, rng),
                                            {DegeneracyPolicy::reject, 777 + 131ull * k})
                               .graph;
            REQUIRE(g.m() >= m);
            g.edges.resize(m);  // leading slice of the Delaunay edge set
            // r near the typical edge length, the regime the pipeline targets
            std::vector<double> lens;
            for (std::size_t e = 0; e < g.m(); ++e) {
                lens.push_back(segment_length(g.segment(e)));
            }
            std::nth_element(lens.begin(), lens.begin() + lens.size() / 2, lens.end());
            radii[s].push_back(2.0 * lens[lens.size() / 2]);
            graphs[s].push_back(std::move(g));
            ipgd_approx(graphs[s].back(), radii[s].back(), AnchorKind::endpoints);  // warm up
        }
    }
    // Median per-run wall time per size. Each timed batch rotates across the
    // independent instances: timing repeated identical runs lets the branch
    // predictor memorize an entire small instance (measured ~4x speedup at
    // |E| = 1000 on this hardware), which would fake superlinear growth.
    // Batches span milliseconds and sizes are interleaved against clock drift.
    std::vector<std::vector<double>> samples(targets.size());
    for (int batch = 0; batch < 11; ++batch) {
        for (std::size_t s = 0; s < targets.size(); ++s) {
            const int runs_per_batch =
                kInstances * std::max(2, static_cast<int>(16384 / targets[s]));
            const auto t0 = std::chrono::steady_clock::now();
            std::size_t sink = 0;
            for (int rep = 0; rep < runs_per_batch; ++rep) {
                const int k = rep % kInstances;
                sink += ipgd_approx(graphs[s][k], radii[s][k], AnchorKind::endpoints)
                            .centers.size();
            }
            const auto t1 = std::chrono::steady_clock::now();
            REQUIRE(sink >= static_cast<std::size_t>(runs_per_batch));
            samples[s].push_back(std::chrono::duration<double, std::micro>(t1 - t0).count() /
                                 runs_per_batch);
        }
    }
    std::vector<double> medians;
    for (auto& v : samples) {
        std::sort(v.begin(), v.end());
        medians.push_back(v[v.size() / 2]);
    }
    std::ostringstream os;
    os << "criterion 9 — medians (us):";
    for (std::size_t i = 0; i < medians.size(); ++i) {
        os << " " << targets[i] << "->" << medians[i];
        if (i > 0) os << " (x" << medians[i] / medians[i - 1] << ")";
    }
    std::cout << "  [measured] " << os.str() << std::endl;
    for (std::size_t i = 1; i < medians.size(); ++i) {
        REQUIRE(medians[i] / medians[i - 1] <= 2.6);
    }
    pass(os.str());
}

TEST_CASE("criterion 10: empirical mu report for random unit-disk triangulations") {
    std::ostringstream os;
    os << "criterion 10 — empirical mu (report only, non-binding):";
    for (const int n : {100, 1000}) {
        const Instance inst = generate(GraphClass::delaunay, n, PointDistribution::unit_disk,
                                       2026);
        os << " n=" << n << " mu=" << inst.meta.at("mu").get<double>() << ";";
    }
    pass(os.str());
}
