#pragma once

// Solver stack: exact minimum stabbing over a candidate set (set-cover
// branch and bound, plus the literal cardinality-sweep mode), the large-r
// constructive cover (square tiling of the smallest stabbing disk), the
// strip-greedy endpoint cover approximation and its exact oracle, and the
// constructive hexagonal upper bound for the disk-cover number p(x).

#include <map>
#include <numbers>

#include "segstab/candidates.hpp"
#include "segstab/minimax.hpp"
#include "segstab/setcover.hpp"

namespace segstab {

struct StabbingSolution {
    double radius = 0.0;
    std::vector<Point> centers;
    std::string algorithm;
    std::vector<std::uint32_t> certificate;  // per edge: index into centers
    bool factor_guarantee = true;            // approx lanes: declared regime held
};

struct CoverSolution {
    double radius = 0.0;
    std::vector<Point> centers;
    std::vector<std::uint32_t> certificate;  // per input point: index into centers
};

struct Violation {
    std::size_t index = 0;  // edge (stabbing) or point (cover)
    double distance = 0.0;
};

// Independent feasibility check: recomputes every distance from scratch.
inline std::optional<Violation> check_stabbing(const PlaneGraph& g, double r,
                                               const std::vector<Point>& centers,
                                               Tolerance tol) {
    for (std::size_t e = 0; e < g.m(); ++e) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& c : centers) best = std::min(best, dist_point_segment(c, g.segment(e)));
        if (!(best <= r + tol.eps)) return Violation{e, best};
    }
    return std::nullopt;
}

inline std::optional<Violation> check_cover(const std::vector<Point>& pts, double r,
                                            const std::vector<Point>& centers, Tolerance tol) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& c : centers) best = std::min(best, dist(c, pts[i]));
        if (!(best <= r + tol.eps)) return Violation{i, best};
    }
    return std::nullopt;
}

enum class ExactMode { branch_and_bound, sweep };

struct ExactOptions {
    std::optional<std::size_t> budget;  // report instead of solving past this cardinality
    ExactMode mode = ExactMode::branch_and_bound;
};

struct ExactOutcome {
    enum class Status { optimal, budget_exceeded };
    Status status = Status::optimal;
    StabbingSolution solution;  // empty when budget_exceeded
};

namespace detail {

inline std::vector<std::uint32_t> build_certificate(const PlaneGraph& g, double r,
                                                    const std::vector<Point>& centers,
                                                    Tolerance tol) {
    std::vector<std::uint32_t> cert(g.m(), 0);
    for (std::size_t e = 0; e < g.m(); ++e) {
        bool found = false;
        double best = std::numeric_limits<double>::infinity();
        for (std::uint32_t c = 0; c < centers.size(); ++c) {
            const double d = dist_point_segment(centers[c], g.segment(e));
            if (d < best) {
                best = d;
                cert[e] = c;
            }
            found |= d <= r + tol.eps;
        }
        if (!found) throw std::logic_error("solver produced an infeasible solution");
    }
    return cert;
}

}  // namespace detail

// Minimum-cardinality stabbing over the candidate set C. Deterministic: the
// returned centers form the lexicographically smallest optimal subset of C.
inline ExactOutcome exact_min_stab(const PlaneGraph& g, double r, const CandidateSet& cands,
                                   Tolerance tol, ExactOptions opt = {}) {
    if (g.m() == 0) throw std::invalid_argument("exact_min_stab: graph has no edges");
    const std::size_t m = g.m();
    std::vector<Segment> segs(m);
    for (std::size_t e = 0; e < m; ++e) segs[e] = g.segment(e);

    // Candidates are lex-sorted; identical coverage keeps the first (smallest)
    // representative, which preserves the lex-min-solution contract.
    std::vector<DynBitset> masks;
    std::vector<std::uint32_t> owner;
    std::map<std::vector<std::uint64_t>, std::uint32_t> seen;
    for (std::uint32_t c = 0; c < cands.centers.size(); ++c) {
        DynBitset mask(m);
        for (std::size_t e = 0; e < m; ++e) {
            if (stabs(cands.centers[c], r, segs[e], tol)) mask.set(e);
        }
        if (seen.emplace(mask.words(), c).second) {
            masks.push_back(std::move(mask));
            owner.push_back(c);
        }
    }

    std::optional<std::vector<std::uint32_t>> chosen;
    if (opt.mode == ExactMode::sweep) {
        chosen = sweep_min_cover(masks, m, opt.budget);
    } else {
        chosen = min_set_cover(masks, m, opt.budget);
        if (chosen) chosen = lex_min_cover(masks, m, chosen->size());
    }
    if (!chosen) {
        return ExactOutcome{ExactOutcome::Status::budget_exceeded, {}};
    }

    StabbingSolution sol;
    sol.radius = r;
    sol.algorithm = opt.mode == ExactMode::sweep ? "exact-sweep" : "exact";
    for (std::uint32_t k : *chosen) sol.centers.push_back(cands.centers[owner[k]]);
    sol.certificate = detail::build_certificate(g, r, sol.centers, tol);
    return ExactOutcome{ExactOutcome::Status::optimal, std::move(sol)};
}

// Constructive cover for the large-r regime. Computes the smallest stabbing
// disk (c*, R); for r >= R one disk suffices. Otherwise tiles the bounding
// square of B_R(c*) with axis-parallel squares of side r*sqrt(2) (each square
// is inscribed in a radius-r disk) and keeps the squares meeting B_R(c*);
// at most ceil(sqrt(2) R / r)^2 of them.
inline StabbingSolution grid_cover(const PlaneGraph& g, double r, Tolerance tol) {
    if (r <= 0) throw std::invalid_argument("grid_cover: r must be positive");
    if (g.m() == 0) throw std::invalid_argument("grid_cover: graph has no edges");
    std::vector<Segment> segs(g.m());
    for (std::size_t e = 0; e < g.m(); ++e) segs[e] = g.segment(e);
    const StabbingDisk disk = smallest_stabbing_disk(segs, tol);

    StabbingSolution sol;
    sol.radius = r;
    sol.algorithm = "grid";
    if (r >= disk.radius) {
        sol.centers = {disk.center};
        sol.certificate.assign(g.m(), 0);
        return sol;
    }
    // Pad the minimax radius so every edge provably meets the tiled square.
    const double R = disk.radius + 10.0 * tol.eps;
    const double side = r * std::numbers::sqrt2;
    const std::size_t k = static_cast<std::size_t>(std::ceil(std::numbers::sqrt2 * R / r));
    const double x0 = disk.center.x - 0.5 * static_cast<double>(k) * side;
    const double y0 = disk.center.y - 0.5 * static_cast<double>(k) * side;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const double lx = x0 + static_cast<double>(i) * side;
            const double ly = y0 + static_cast<double>(j) * side;
            const double cx = std::clamp(disk.center.x, lx, lx + side);
            const double cy = std::clamp(disk.center.y, ly, ly + side);
            const double dx = disk.center.x - cx;
            const double dy = disk.center.y - cy;
            if (dx * dx + dy * dy <= R * R) {
                sol.centers.push_back({lx + 0.5 * side, ly + 0.5 * side});
            }
        }
    }
    sol.certificate = detail::build_certificate(g, r, sol.centers, tol);
    return sol;
}

// Strip-greedy 8-approximation for covering points with radius-r disks.
// Horizontal strips of height r*sqrt(2) anchored at the minimum y; within a
// strip, a greedy sweep over x emits a disk centered on the strip midline
// covering the window [p.x, p.x + r*sqrt(2)] of the leftmost uncovered p.
// Points are grouped by strip with a counting pass, then each strip is sorted
// by (x, y, index); the per-strip sorts stay cache-resident. A sparse strip
// range (tiny r, few points) falls back to one comparison sort.
inline CoverSolution cesd_approx(const std::vector<Point>& pts, double r) {
    if (pts.empty()) throw std::invalid_argument("cesd_approx: empty point set");
    if (r <= 0) throw std::invalid_argument("cesd_approx: r must be positive");
    const double h = r * std::numbers::sqrt2;
    double ymin = pts[0].y;
    for (const auto& p : pts) ymin = std::min(ymin, p.y);

    std::vector<std::uint32_t> strip(pts.size());
    std::uint64_t max_strip = 0;
    for (std::uint32_t i = 0; i < pts.size(); ++i) {
        const double s = std::floor((pts[i].y - ymin) / h);
        if (s > 4e9) {
            throw std::invalid_argument("cesd_approx: r is vanishingly small for the spread");
        }
        strip[i] = static_cast<std::uint32_t>(s);
        max_strip = std::max<std::uint64_t>(max_strip, strip[i]);
    }

    // items sorted by (strip, x, y, idx); sorting runs per strip on compact
    // 16-byte records, and the y tie-break dereferences the input only when
    // two x values match exactly
    struct Item {
        double x;
        std::uint32_t idx;
        std::uint32_t strip;
    };
    const auto item_less = [&pts](const Item& a, const Item& b) {
        if (a.x != b.x) return a.x < b.x;
        if (pts[a.idx].y != pts[b.idx].y) return pts[a.idx].y < pts[b.idx].y;
        return a.idx < b.idx;
    };
    std::vector<Item> items(pts.size());
    if (max_strip <= 2 * pts.size() + 16) {
        std::vector<std::uint32_t> offset(max_strip + 2, 0);
        for (std::uint32_t i = 0; i < pts.size(); ++i) ++offset[strip[i] + 1];
        for (std::size_t s = 1; s < offset.size(); ++s) offset[s] += offset[s - 1];
        std::vector<std::uint32_t> cursor(offset.begin(), offset.end() - 1);
        for (std::uint32_t i = 0; i < pts.size(); ++i) {
            items[cursor[strip[i]]++] = {pts[i].x, i, strip[i]};
        }
        for (std::size_t s = 0; s + 1 < offset.size(); ++s) {
            std::sort(items.begin() + offset[s], items.begin() + offset[s + 1], item_less);
        }
    } else {
        for (std::uint32_t i = 0; i < pts.size(); ++i) items[i] = {pts[i].x, i, strip[i]};
        std::sort(items.begin(), items.end(), [&](const Item& a, const Item& b) {
            if (a.strip != b.strip) return a.strip < b.strip;
            return item_less(a, b);
        });
    }

    CoverSolution sol;
    sol.radius = r;
    sol.certificate.assign(pts.size(), 0);
    std::size_t i = 0;
    while (i < items.size()) {
        const std::uint32_t s = items[i].strip;
        const double window = items[i].x;
        const double mid = ymin + (static_cast<double>(s) + 0.5) * h;
        const std::uint32_t center_idx = static_cast<std::uint32_t>(sol.centers.size());
        sol.centers.push_back({window + 0.5 * h, mid});
        while (i < items.size() && items[i].strip == s && items[i].x <= window + h) {
            sol.certificate[items[i].idx] = center_idx;
            ++i;
        }
    }
    return sol;
}

// Exact minimum disk cover (small inputs). Candidate centers: the points
// themselves plus both centers of radius-r circles through each pair at
// distance <= 2r; optimality-preserving for congruent disk cover.
inline CoverSolution cesd_exact(const std::vector<Point>& pts, double r, Tolerance tol,
                                std::size_t guard = 25) {
    if (pts.empty()) throw std::invalid_argument("cesd_exact: empty point set");
    if (r <= 0) throw std::invalid_argument("cesd_exact: r must be positive");
    if (pts.size() > guard) {
        throw GuardExceeded("cesd_exact: point count exceeds the exact-search guard");
    }
    std::vector<Point> cands = pts;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const double d2 = sq_dist(pts[i], pts[j]);
            if (d2 > 4.0 * r * r) continue;
            const double d = std::sqrt(d2);
            const double half = 0.5 * d;
            const double lift = std::sqrt(std::max(0.0, r * r - half * half));
            const Point mid{0.5 * (pts[i].x + pts[j].x), 0.5 * (pts[i].y + pts[j].y)};
            const Point n{-(pts[j].y - pts[i].y) / d, (pts[j].x - pts[i].x) / d};
            cands.push_back({mid.x + lift * n.x, mid.y + lift * n.y});
            cands.push_back({mid.x - lift * n.x, mid.y - lift * n.y});
        }
    }
    std::sort(cands.begin(), cands.end());

    std::vector<DynBitset> masks;
    std::vector<std::uint32_t> owner;
    std::map<std::vector<std::uint64_t>, std::uint32_t> seen;
    for (std::uint32_t c = 0; c < cands.size(); ++c) {
        DynBitset mask(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (dist(cands[c], pts[i]) <= r + tol.eps) mask.set(i);
        }
        if (seen.emplace(mask.words(), c).second) {
            masks.push_back(std::move(mask));
            owner.push_back(c);
        }
    }
    auto chosen = min_set_cover(masks, pts.size());
    if (!chosen) throw std::logic_error("cesd_exact: cover not found");
    chosen = lex_min_cover(masks, pts.size(), chosen->size());

    CoverSolution sol;
    sol.radius = r;
    for (std::uint32_t k : *chosen) sol.centers.push_back(cands[owner[k]]);
    sol.certificate.assign(pts.size(), 0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::uint32_t c = 0; c < sol.centers.size(); ++c) {
            const double d = dist(sol.centers[c], pts[i]);
            if (d < best) {
                best = d;
                sol.certificate[i] = c;
            }
        }
    }
    return sol;
}

enum class AnchorKind { endpoints, midpoints };

// Approximation pipeline: cover an anchor set of the edges (all endpoints, or
// all midpoints) with cesd_approx; a disk covering an anchor of e stabs e.
// The factor guarantee holds when r >= d_max / (2 lambda) for the declared
// lambda; outside that regime the solution stays feasible and the
// factor_guarantee flag is cleared.
inline StabbingSolution ipgd_approx(const PlaneGraph& g, double r, AnchorKind anchor,
                                    std::optional<double> lambda = std::nullopt) {
    if (g.m() == 0) throw std::invalid_argument("ipgd_approx: graph has no edges");
    if (r <= 0) throw std::invalid_argument("ipgd_approx: r must be positive");

    constexpr std::uint32_t kUnset = 0xffffffffu;
    std::vector<Point> anchors;
    std::vector<std::uint32_t> edge_anchor(g.m());  // per edge: index into anchors
    if (anchor == AnchorKind::endpoints) {
        std::vector<std::uint32_t> vertex_anchor(g.n(), kUnset);
        for (std::size_t e = 0; e < g.m(); ++e) {
            for (const std::uint32_t v : {g.edges[e].first, g.edges[e].second}) {
                if (vertex_anchor[v] == kUnset) {
                    vertex_anchor[v] = static_cast<std::uint32_t>(anchors.size());
                    anchors.push_back(g.vertices[v]);
                }
            }
            edge_anchor[e] = vertex_anchor[g.edges[e].first];
        }
    } else {
        std::map<Point, std::uint32_t> seen;
        for (std::size_t e = 0; e < g.m(); ++e) {
            const Segment s = g.segment(e);
            const Point mid{0.5 * (s.a.x + s.b.x), 0.5 * (s.a.y + s.b.y)};
            auto [it, fresh] = seen.emplace(mid, static_cast<std::uint32_t>(anchors.size()));
            if (fresh) anchors.push_back(mid);
            edge_anchor[e] = it->second;
        }
    }

    const CoverSolution cover = cesd_approx(anchors, r);
    StabbingSolution sol;
    sol.radius = r;
    sol.algorithm = anchor == AnchorKind::endpoints ? "approx-endpoints" : "approx-midpoints";
    sol.centers = cover.centers;
    sol.certificate.resize(g.m());
    for (std::size_t e = 0; e < g.m(); ++e) {
        sol.certificate[e] = cover.certificate[edge_anchor[e]];
    }
    if (lambda) {
        double max_sq = 0.0;
        for (std::size_t e = 0; e < g.m(); ++e) {
            max_sq = std::max(max_sq, sq_dist(g.vertices[g.edges[e].first],
                                              g.vertices[g.edges[e].second]));
        }
        const double d_max = std::sqrt(max_sq);
        sol.factor_guarantee = r >= d_max / (2.0 * *lambda) - 1e-12 * d_max;
    } else {
        // derived lambda = d_max / (2r) satisfies r >= d_max / (2 lambda) identically
        sol.factor_guarantee = true;
    }
    return sol;
}

struct HexCover {
    std::size_t count = 0;
    std::vector<Point> centers;
    bool certified = false;
};

// Constructive upper bound p_hat(x) on the number of unit disks covering a
// radius-x disk: unit-circumradius hexagon cells (center spacing sqrt(3))
// clipped to the cells meeting B_x(0). The certificate re-checks that each
// kept cell lies in its disk and that a dense sample of B_x(0) is covered.
inline HexCover hex_cover_bound(double x) {
    if (x < 1.0) throw std::invalid_argument("hex_cover_bound: requires x >= 1");
    HexCover out;
    if (x == 1.0) {
        out.count = 1;
        out.centers = {{0.0, 0.0}};
        out.certified = true;
        return out;
    }
    const double sqrt3 = std::sqrt(3.0);
    std::array<Point, 6> corner;
    for (int k = 0; k < 6; ++k) {
        const double ang = std::numbers::pi / 6.0 + k * std::numbers::pi / 3.0;
        corner[k] = {std::cos(ang), std::sin(ang)};
    }
    const auto cell_meets_disk = [&](const Point& c) {
        std::array<Point, 6> v;
        for (int k = 0; k < 6; ++k) v[k] = {c.x + corner[k].x, c.y + corner[k].y};
        bool inside = true;
        for (int k = 0; k < 6; ++k) {
            const Point& a = v[k];
            const Point& b = v[(k + 1) % 6];
            if ((b.x - a.x) * (0.0 - a.y) - (b.y - a.y) * (0.0 - a.x) < 0.0) inside = false;
        }
        if (inside) return true;
        double d = std::numeric_limits<double>::infinity();
        for (int k = 0; k < 6; ++k) {
            d = std::min(d, dist_point_segment({0.0, 0.0}, {v[k], v[(k + 1) % 6]}));
        }
        return d <= x + 1e-12;
    };

    const int range = static_cast<int>(std::ceil((x + 2.0) / 1.5)) + 2;
    for (int j = -range; j <= range; ++j) {
        for (int i = -range; i <= range; ++i) {
            const Point c{sqrt3 * (i + 0.5 * j), 1.5 * j};
            if (cell_meets_disk(c)) out.centers.push_back(c);
        }
    }
    std::sort(out.centers.begin(), out.centers.end());
    out.count = out.centers.size();

    // Certificate part 1: each cell is inside its unit disk.
    bool ok = true;
    for (const auto& c : out.centers) {
        for (int k = 0; k < 6; ++k) {
            const double dx = corner[k].x, dy = corner[k].y;
            if (dx * dx + dy * dy > 1.0 + 1e-12) ok = false;
        }
    }
    // Certificate part 2: sampled coverage of B_x(0), boundary ring included.
    const double step = 0.02 * std::max(1.0, x);
    for (double rho = 0.0; ok && rho <= x + step; rho += step) {
        const double rr = std::min(rho, x);
        const int nt = std::max(8, static_cast<int>(std::ceil(2.0 * std::numbers::pi * rr / step)));
        for (int t = 0; t < nt; ++t) {
            const double ang = 2.0 * std::numbers::pi * t / nt;
            const Point p{rr * std::cos(ang), rr * std::sin(ang)};
            double best = std::numeric_limits<double>::infinity();
            for (const auto& c : out.centers) best = std::min(best, dist(p, c));
            if (best > 1.0 + 1e-9) {
                ok = false;
                break;
            }
        }
        if (rr >= x) break;
    }
    out.certified = ok;
    return out;
}

}  // namespace segstab
