#pragma once

// Test-only oracles, independent of the solver paths they check: plain
// subset enumeration and bitmask DP for minimum cover, a dense-grid optimum
// for the candidate-set contract, a complete-graph MST, direct determinant
// evaluation for the predicates, and definition-based proximity graphs.

#include <cstdint>
#include <map>
#include <vector>

#include "segstab/core.hpp"
#include "segstab/graph.hpp"

namespace oracles {

using segstab::Point;
using segstab::PlaneGraph;
using segstab::Rational;

// Distinct nonzero coverage masks (universe of m <= 16 elements).
inline std::vector<std::uint32_t> distinct_masks(const std::vector<std::uint32_t>& masks) {
    std::vector<std::uint32_t> out = masks;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    out.erase(std::remove(out.begin(), out.end(), 0u), out.end());
    return out;
}

// Iterative-deepening subset enumeration: literally tries every subset of
// cardinality k = 1, 2, ... until one covers the universe.
inline std::size_t naive_min_cover(const std::vector<std::uint32_t>& raw_masks, int m) {
    const std::uint32_t full = (m >= 32) ? 0xffffffffu : ((1u << m) - 1);
    const std::vector<std::uint32_t> masks = distinct_masks(raw_masks);
    std::vector<std::size_t> stack;
    const auto dfs = [&](auto&& self, std::uint32_t covered, std::size_t from,
                         std::size_t k) -> bool {
        if (covered == full) return true;
        if (k == 0) return false;
        for (std::size_t i = from; i < masks.size(); ++i) {
            if (self(self, covered | masks[i], i + 1, k - 1)) return true;
        }
        return false;
    };
    for (std::size_t k = 1; k <= masks.size(); ++k) {
        if (dfs(dfs, 0, 0, k)) return k;
    }
    return SIZE_MAX;
}

// Bitmask DP over covered subsets; second independent route.
inline std::size_t dp_min_cover(const std::vector<std::uint32_t>& raw_masks, int m) {
    const std::uint32_t full = (1u << m) - 1;
    const std::vector<std::uint32_t> masks = distinct_masks(raw_masks);
    std::vector<std::uint32_t> dp(full + 1, 0xffffffffu);
    dp[0] = 0;
    for (std::uint32_t s = 0; s <= full; ++s) {
        if (dp[s] == 0xffffffffu) continue;
        for (const std::uint32_t msk : masks) {
            const std::uint32_t t = s | msk;
            dp[t] = std::min(dp[t], dp[s] + 1);
        }
    }
    return dp[full];
}

// Exact optimum when centers are restricted to a dense grid over the stadium
// union's bounding box (step-spaced), via the DP. The Lemma-2 oracle.
inline std::size_t grid_optimum(const PlaneGraph& g, double r, double step, double slack) {
    segstab::BBox box = segstab::graph_bbox(g);
    const int nx = static_cast<int>(std::ceil((box.hi.x - box.lo.x + 2 * r) / step)) + 1;
    const int ny = static_cast<int>(std::ceil((box.hi.y - box.lo.y + 2 * r) / step)) + 1;
    std::vector<std::uint32_t> masks;
    for (int i = 0; i <= nx; ++i) {
        for (int j = 0; j <= ny; ++j) {
            const Point c{box.lo.x - r + i * step, box.lo.y - r + j * step};
            std::uint32_t mask = 0;
            for (std::size_t e = 0; e < g.m(); ++e) {
                if (segstab::dist_point_segment(c, g.segment(e)) <= r + slack) {
                    mask |= 1u << e;
                }
            }
            if (mask) masks.push_back(mask);
        }
    }
    return dp_min_cover(masks, static_cast<int>(g.m()));
}

// Prim over the complete graph.
inline double brute_mst_weight(const std::vector<Point>& pts) {
    const std::size_t n = pts.size();
    if (n < 2) return 0.0;
    std::vector<double> key(n, std::numeric_limits<double>::infinity());
    std::vector<bool> used(n, false);
    key[0] = 0.0;
    double total = 0.0;
    for (std::size_t it = 0; it < n; ++it) {
        std::size_t best = SIZE_MAX;
        for (std::size_t v = 0; v < n; ++v) {
            if (!used[v] && (best == SIZE_MAX || key[v] < key[best])) best = v;
        }
        used[best] = true;
        total += key[best];
        for (std::size_t v = 0; v < n; ++v) {
            if (!used[v]) key[v] = std::min(key[v], segstab::dist(pts[best], pts[v]));
        }
    }
    return total;
}

// Direct cofactor evaluation of the orientation / in-circle determinants in
// exact rationals (no translation trick, no filter).
inline int orient_det_sign(const Point& a, const Point& b, const Point& c) {
    const Rational det = (Rational(a.x) * b.y - Rational(a.y) * b.x) -
                         (Rational(a.x) * c.y - Rational(a.y) * c.x) +
                         (Rational(b.x) * c.y - Rational(b.y) * c.x);
    return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

inline int incircle_det_sign(const Point& a, const Point& b, const Point& c, const Point& d) {
    const auto lift = [](const Point& p) {
        return std::array<Rational, 3>{Rational(p.x), Rational(p.y),
                                       Rational(p.x) * p.x + Rational(p.y) * p.y};
    };
    const std::array<std::array<Rational, 3>, 4> rows{lift(a), lift(b), lift(c), lift(d)};
    // 4x4 determinant [x y x^2+y^2 1]: expand along the trailing column of
    // ones (cofactor signs for column 4: -, +, -, +).
    Rational det = 0;
    for (int i = 0; i < 4; ++i) {
        std::array<const std::array<Rational, 3>*, 3> sub;
        int k = 0;
        for (int j = 0; j < 4; ++j) {
            if (j != i) sub[k++] = &rows[j];
        }
        const Rational minor = (*sub[0])[0] * ((*sub[1])[1] * (*sub[2])[2] -
                                               (*sub[1])[2] * (*sub[2])[1]) -
                               (*sub[0])[1] * ((*sub[1])[0] * (*sub[2])[2] -
                                               (*sub[1])[2] * (*sub[2])[0]) +
                               (*sub[0])[2] * ((*sub[1])[0] * (*sub[2])[1] -
                                               (*sub[1])[1] * (*sub[2])[0]);
        det += (i % 2 == 0 ? -minor : minor);
    }
    return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

// Definition-based Gabriel graph: closed diametral disk empty, all pairs.
inline std::vector<segstab::EdgeIndexPair> brute_gabriel(const std::vector<Point>& pts) {
    std::vector<segstab::EdgeIndexPair> edges;
    for (std::uint32_t i = 0; i < pts.size(); ++i) {
        for (std::uint32_t j = i + 1; j < pts.size(); ++j) {
            bool ok = true;
            for (std::uint32_t w = 0; w < pts.size() && ok; ++w) {
                if (w == i || w == j) continue;
                const Rational lhs = (Rational(pts[i].x) - pts[w].x) * (Rational(pts[j].x) - pts[w].x) +
                                     (Rational(pts[i].y) - pts[w].y) * (Rational(pts[j].y) - pts[w].y);
                ok = lhs > 0;
            }
            if (ok) edges.push_back({i, j});
        }
    }
    return edges;
}

// Definition-based relative neighbourhood graph (strict lune).
inline std::vector<segstab::EdgeIndexPair> brute_rng(const std::vector<Point>& pts) {
    const auto sq = [](const Point& a, const Point& b) {
        return Rational(Rational(a.x) - b.x) * (Rational(a.x) - b.x) +
               Rational(Rational(a.y) - b.y) * (Rational(a.y) - b.y);
    };
    std::vector<segstab::EdgeIndexPair> edges;
    for (std::uint32_t i = 0; i < pts.size(); ++i) {
        for (std::uint32_t j = i + 1; j < pts.size(); ++j) {
            const Rational dij = sq(pts[i], pts[j]);
            bool ok = true;
            for (std::uint32_t w = 0; w < pts.size() && ok; ++w) {
                if (w == i || w == j) continue;
                ok = !(sq(pts[i], pts[w]) < dij && sq(pts[j], pts[w]) < dij);
            }
            if (ok) edges.push_back({i, j});
        }
    }
    return edges;
}

inline std::vector<Point> random_points(int n, segstab::SplitMix64& rng) {
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.push_back({rng.next_double(), rng.next_double()});
    return pts;
}

}  // namespace oracles
