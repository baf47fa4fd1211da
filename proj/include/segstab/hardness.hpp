#pragma once

// Hardness lab: exhaustive verification of the integer-lattice circle
// distance bound, and generation + verification of the disk-cover-to-stabbing
// reduction gadgets under exact rational construction.
//
// Verification arithmetic runs in Float50 (~50 significant decimal digits)
// with a conservative guard band on every sign decision. A decision inside
// the band is accepted only when the contact is structural (a candidate lies
// on the boundary of the stadium pair that generated it, or the arithmetic
// was exact integer); any other band hit marks the report indeterminate
// instead of risking a wrong verdict.

#include <future>
#include <map>

#include "segstab/delaunay.hpp"
#include "segstab/setcover.hpp"
#include "segstab/stadium.hpp"

namespace segstab {

namespace detail {
// Absolute bound on accumulated Float50 roundoff for the expression sizes
// used here (values up to ~1e6, a few hundred operations).
inline const Float50 kGuard{"1e-40"};
}  // namespace detail

// ---------------------------------------------------------------------------
// Lattice circle distance bound

struct Lemma1Report {
    int r = 1;
    Float50 min_rho;
    Rational bound;                       // 1 / (480 r^5)
    std::array<Pt<long long>, 3> argmin;  // u, v, w attaining the minimum
    bool ok = false;
};

namespace detail {

// Is u on one of the two radius-r circles through v and w? Exact integer test:
// distinct non-collinear u,v,w lie on a radius-r circle iff the circumradius
// of the triangle equals r, i.e. |uv|^2 |uw|^2 |vw|^2 == 4 r^2 cross^2.
inline bool on_lattice_circle(const Pt<long long>& u, const Pt<long long>& v,
                              const Pt<long long>& w, long long r) {
    const long long c = (v.x - u.x) * (w.y - u.y) - (v.y - u.y) * (w.x - u.x);
    if (c == 0) return false;  // a chord line re-meets the circle only at v, w
    const auto sq = [](const Pt<long long>& a, const Pt<long long>& b) {
        return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y);
    };
    return sq(u, v) * sq(u, w) * sq(v, w) == 4 * r * r * c * c;
}

struct Lemma1Partial {
    Float50 min_rho;
    std::array<Pt<long long>, 3> argmin;
    bool any = false;
};

inline Lemma1Partial lemma1_scan(const std::vector<Pt<long long>>& ws, int r) {
    Lemma1Partial out;
    out.min_rho = Float50(1e9);
    const long long span = 4ll * r + 1;
    for (const auto& w : ws) {
        const long long d2 = w.x * w.x + w.y * w.y;
        const Float50 lam = sqrt(Float50(r) * r - Float50(d2) / 4);
        const Float50 d = sqrt(Float50(d2));
        const Float50 nx = Float50(-w.y) / d;
        const Float50 ny = Float50(w.x) / d;
        const Float50 mx = Float50(w.x) / 2;
        const Float50 my = Float50(w.y) / 2;
        for (long long ux = -span; ux <= span; ++ux) {
            for (long long uy = -span; uy <= span; ++uy) {
                const Pt<long long> u{ux, uy};
                if ((ux == 0 && uy == 0) || (ux == w.x && uy == w.y)) continue;
                if (on_lattice_circle(u, {0, 0}, w, r)) continue;
                Float50 rho(-1);
                for (int s = -1; s <= 1; s += 2) {
                    const Float50 ox = mx + s * lam * nx;
                    const Float50 oy = my + s * lam * ny;
                    const Float50 dx = Float50(ux) - ox;
                    const Float50 dy = Float50(uy) - oy;
                    const Float50 cand = abs(sqrt(dx * dx + dy * dy) - r);
                    if (rho < 0 || cand < rho) rho = cand;
                }
                if (!out.any || rho < out.min_rho) {
                    out.any = true;
                    out.min_rho = rho;
                    out.argmin = {u, Pt<long long>{0, 0}, w};
                }
            }
        }
    }
    return out;
}

}  // namespace detail

// Exhaustively verifies min rho(u; v, w) >= 1/(480 r^5) over integer triples.
// Translation invariance fixes v at the origin; |u|_inf is capped at 4r+1
// because both circle centers lie within 2r of v, so any farther u has
// rho > 1 > bound. Parallel over w with a deterministic in-order reduction.
inline Lemma1Report verify_lemma1(int r) {
    if (r < 1) throw std::invalid_argument("verify_lemma1: r must be a positive integer");
    if (r > 5) throw GuardExceeded("verify_lemma1: exhaustive search guarded to r <= 5");

    std::vector<Pt<long long>> ws;
    for (long long wx = -2 * r; wx <= 2 * r; ++wx) {
        for (long long wy = -2 * r; wy <= 2 * r; ++wy) {
            if (wx == 0 && wy == 0) continue;
            if (wx * wx + wy * wy <= 4ll * r * r) ws.push_back({wx, wy});
        }
    }

    const unsigned workers = std::min<unsigned>(thread_budget(), 8);
    std::vector<std::future<detail::Lemma1Partial>> parts;
    const std::size_t chunk = (ws.size() + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
        const std::size_t lo = std::min(ws.size(), t * chunk);
        const std::size_t hi = std::min(ws.size(), lo + chunk);
        std::vector<Pt<long long>> slice(ws.begin() + lo, ws.begin() + hi);
        parts.push_back(std::async(std::launch::async, detail::lemma1_scan, std::move(slice), r));
    }

    Lemma1Report rep;
    rep.r = r;
    rep.bound = Rational(1) / (Rational(480) * Rational(r) * r * r * r * r);
    bool any = false;
    for (auto& f : parts) {
        const auto part = f.get();
        if (part.any && (!any || part.min_rho < rep.min_rho)) {
            any = true;
            rep.min_rho = part.min_rho;
            rep.argmin = part.argmin;
        }
    }
    if (!any) throw std::logic_error("verify_lemma1: empty enumeration");
    rep.ok = rep.min_rho >= Float50(rep.bound);
    return rep;
}

// ---------------------------------------------------------------------------
// Reduction instance construction (exact rational)

struct ReductionInstance {
    std::vector<Pt<long long>> d_points;
    int r0 = 1;
    Rational delta;  // default 1/(2000^2 * 2 * r0^11)
    Rational cell;   // grid cell: (delta/16) / |D|^2
    Rational r;      // r0 + delta
    std::vector<RatSegment> segments;         // I_u, one per point of D, in order
    RatPlaneGraph graph;                      // Delaunay triangulation of all endpoints
    std::vector<std::uint32_t> gadget_edges;  // index of each I_u in graph.edges
    double d_min = 0, d_max = 0, mu = 1;
    bool r_le_dmax = false;  // holds for drawing-derived D; reported, not enforced
    std::uint64_t seed = 0;
};

namespace detail {

inline bool general_position_ok(const std::vector<RatPoint>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[i] == pts[j]) return false;
            for (std::size_t k = j + 1; k < pts.size(); ++k) {
                if (orientation(pts[i], pts[j], pts[k]) == Orient::collinear) return false;
                for (std::size_t l = k + 1; l < pts.size(); ++l) {
                    if (in_circle(pts[i], pts[j], pts[k], pts[l]) == CircleSide::on) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

inline bool diametral_disks_empty(const std::vector<RatPoint>& pts) {
    // Points come in endpoint pairs (2i, 2i+1); closed diametral disk of each
    // pair must avoid every other point.
    for (std::size_t s = 0; s + 1 < pts.size(); s += 2) {
        for (std::size_t w = 0; w < pts.size(); ++w) {
            if (w == s || w == s + 1) continue;
            if (diametral_side(pts[s], pts[s + 1], pts[w]) <= 0) return false;
        }
    }
    return true;
}

}  // namespace detail

// Builds the gadget instance: for every u in D a short near-vertical segment
// I_u with rational endpoints drawn from the grid of cell (delta/16)/|D|^2
// inside the Chebyshev delta/2 box around u, lower endpoint below
// u_y - delta/4 and upper endpoint above u_y + delta/4; redraws until the
// accumulated endpoint set is in general position and every diametral disk is
// empty, then triangulates. Every I_u is certified to be a Delaunay edge.
inline ReductionInstance reduce_cdc(const std::vector<Pt<long long>>& d_points, int r0,
                                    std::uint64_t seed,
                                    std::optional<Rational> delta_override = std::nullopt) {
    if (d_points.empty()) throw std::invalid_argument("reduce_cdc: D must be nonempty");
    if (r0 < 1) throw std::invalid_argument("reduce_cdc: r0 must be a positive integer");
    for (std::size_t i = 0; i < d_points.size(); ++i) {
        for (std::size_t j = i + 1; j < d_points.size(); ++j) {
            if (d_points[i] == d_points[j]) {
                throw std::invalid_argument("reduce_cdc: duplicate point in D");
            }
        }
    }

    ReductionInstance inst;
    inst.d_points = d_points;
    inst.r0 = r0;
    inst.seed = seed;
    Rational r0_pow11(1);
    for (int i = 0; i < 11; ++i) r0_pow11 *= r0;
    inst.delta = delta_override ? *delta_override
                                : Rational(1) / (Rational(2000) * 2000 * 2 * r0_pow11);
    if (inst.delta <= 0) throw std::invalid_argument("reduce_cdc: delta must be positive");
    const long long dd = static_cast<long long>(d_points.size());
    inst.cell = (inst.delta / 16) / (dd * dd);
    inst.r = Rational(r0) + inst.delta;

    SplitMix64 rng(seed);
    const long long amax = 8 * dd * dd;   // |a * cell| <= delta/2
    const long long binner = 4 * dd * dd; // |b * cell| > delta/4

    std::vector<RatPoint> endpoints;
    for (const auto& u : d_points) {
        const Rational ux(u.x), uy(u.y);
        bool placed = false;
        for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
            const RatPoint lo{ux + rng.next_int(-amax, amax) * inst.cell,
                              uy + rng.next_int(-amax, -(binner + 1)) * inst.cell};
            const RatPoint hi{ux + rng.next_int(-amax, amax) * inst.cell,
                              uy + rng.next_int(binner + 1, amax) * inst.cell};
            std::vector<RatPoint> trial = endpoints;
            trial.push_back(lo);
            trial.push_back(hi);
            if (!detail::general_position_ok(trial)) continue;
            if (!detail::diametral_disks_empty(trial)) continue;
            endpoints = std::move(trial);
            inst.segments.push_back({lo, hi});
            placed = true;
        }
        if (!placed) {
            throw std::runtime_error(
                "reduce_cdc: could not reach general position within the retry budget "
                "(point (" + std::to_string(u.x) + "," + std::to_string(u.y) + "))");
        }
    }

    const auto tri = delaunay<Rational>(endpoints, DelaunayOptions{DegeneracyPolicy::reject, seed});
    inst.graph = tri.graph;
    for (std::uint32_t i = 0; i < inst.segments.size(); ++i) {
        const EdgeIndexPair want{2 * i, 2 * i + 1};
        const auto it = std::lower_bound(inst.graph.edges.begin(), inst.graph.edges.end(), want);
        if (it == inst.graph.edges.end() || *it != want) {
            throw std::logic_error("reduce_cdc: gadget segment missing from the triangulation");
        }
        inst.gadget_edges.push_back(static_cast<std::uint32_t>(it - inst.graph.edges.begin()));
    }

    inst.d_min = std::numeric_limits<double>::infinity();
    Rational max_sq(0);
    for (const auto& [i, j] : inst.graph.edges) {
        const Rational sq = sq_dist(inst.graph.vertices[i], inst.graph.vertices[j]);
        max_sq = std::max(max_sq, sq);
        const double len = std::sqrt(to_double(sq));
        inst.d_min = std::min(inst.d_min, len);
        inst.d_max = std::max(inst.d_max, len);
    }
    inst.mu = inst.d_max / inst.d_min;
    inst.r_le_dmax = inst.r * inst.r <= max_sq;
    return inst;
}

// ---------------------------------------------------------------------------
// Extended-precision equivalence check

struct ReductionReport {
    std::size_t k_cdc = 0;
    std::size_t k_ipgd = 0;
    bool equal = false;
    bool forward_ok = false;     // CDC centers, reused at radius r, stab every edge I_u
    bool indeterminate = false;  // some sign decision fell in the guard band unexplained
    ReductionInstance instance;
};

namespace detail {

struct F50Candidate {
    Pt<Float50> p;
    std::uint32_t e1 = kGhost;  // edges whose stadium boundary generated it
    std::uint32_t e2 = kGhost;
};

// Closed-disk incidence with guard-band accounting. diff = dist^2 - radius^2.
inline bool guarded_covered(const Float50& diff, bool explained, bool& indeterminate) {
    if (diff > kGuard) return false;
    if (diff < -kGuard) return true;
    if (!explained) indeterminate = true;  // unexplained boundary-tight contact
    return true;                           // closed boundary counts as covered
}

// Exact rational test: does q lie on the radius-r0 circle through p1, p2 whose
// center is m + s * (lift/d) * perp(p1 - p2)? (Same convention as the caller.)
// Resolves the structural case of a third lattice point sitting exactly on a
// pair circle. |q - c|^2 == r0^2 reduces to lhs == 2 s (lift/d) proj with
// rational lhs, proj; compare signs, then squares.
inline bool on_pair_circle_exact(const Pt<long long>& q, const Pt<long long>& p1,
                                 const Pt<long long>& p2, long long r0, int s) {
    const Rational d2 = Rational((p2.x - p1.x)) * (p2.x - p1.x) +
                        Rational((p2.y - p1.y)) * (p2.y - p1.y);
    const Rational lift2 = Rational(r0) * r0 - d2 / 4;
    const RatPoint m{(Rational(p1.x) + p2.x) / 2, (Rational(p1.y) + p2.y) / 2};
    const RatPoint w{Rational(q.x) - m.x, Rational(q.y) - m.y};
    const Rational lhs = w.x * w.x + w.y * w.y + lift2 - Rational(r0) * r0;
    const Rational proj = w.x * Rational(p2.y - p1.y) + w.y * Rational(p1.x - p2.x);
    if (lhs * Rational(s) * proj < 0) return false;
    return lhs * lhs * d2 == 4 * lift2 * proj * proj;
}

// Exact minimum disk cover of integer points at integer radius, Float50 lane.
struct F50Cover {
    std::size_t count = 0;
    std::vector<Pt<Float50>> centers;
    bool indeterminate = false;
};

inline F50Cover exact_cover_f50(const std::vector<Pt<long long>>& pts, int r0) {
    struct CdcCandidate {
        Pt<Float50> p;
        std::uint32_t p1 = kGhost, p2 = kGhost;  // defining pair (pair centers only)
        int sign = 0;
        bool exact = true;  // integer coordinates, exact Float50 arithmetic
    };
    std::vector<CdcCandidate> cands;
    for (std::uint32_t i = 0; i < pts.size(); ++i) {
        cands.push_back({{Float50(pts[i].x), Float50(pts[i].y)}, kGhost, kGhost, 0, true});
    }
    const long long rr4 = 4ll * r0 * r0;
    for (std::uint32_t i = 0; i < pts.size(); ++i) {
        for (std::uint32_t j = i + 1; j < pts.size(); ++j) {
            const long long dxl = pts[i].x - pts[j].x;
            const long long dyl = pts[i].y - pts[j].y;
            const long long d2 = dxl * dxl + dyl * dyl;
            if (d2 > rr4) continue;
            const Float50 d = sqrt(Float50(d2));
            const Float50 lift = sqrt(Float50(r0) * r0 - Float50(d2) / 4);
            const Pt<Float50> mid{(Float50(pts[i].x) + Float50(pts[j].x)) / 2,
                                  (Float50(pts[i].y) + Float50(pts[j].y)) / 2};
            const Pt<Float50> n{Float50(-dyl) / d, Float50(dxl) / d};
            cands.push_back({{mid.x + lift * n.x, mid.y + lift * n.y}, i, j, 1, false});
            cands.push_back({{mid.x - lift * n.x, mid.y - lift * n.y}, i, j, -1, false});
        }
    }

    F50Cover out;
    const Float50 r2 = Float50(r0) * r0;
    std::vector<DynBitset> masks;
    std::vector<std::uint32_t> owner;
    std::map<std::vector<std::uint64_t>, std::uint32_t> seen;
    for (std::uint32_t c = 0; c < cands.size(); ++c) {
        DynBitset mask(pts.size());
        for (std::uint32_t q = 0; q < pts.size(); ++q) {
            const Float50 dx = cands[c].p.x - pts[q].x;
            const Float50 dy = cands[c].p.y - pts[q].y;
            const Float50 diff = dx * dx + dy * dy - r2;
            bool explained = cands[c].exact || cands[c].p1 == q || cands[c].p2 == q;
            if (!explained && abs(diff) <= kGuard) {
                explained = on_pair_circle_exact(pts[q], pts[cands[c].p1], pts[cands[c].p2],
                                                 r0, cands[c].sign);
            }
            if (guarded_covered(diff, explained, out.indeterminate)) mask.set(q);
        }
        if (seen.emplace(mask.words(), c).second) {
            masks.push_back(std::move(mask));
            owner.push_back(c);
        }
    }
    const auto chosen = min_set_cover(masks, pts.size());
    if (!chosen) throw std::logic_error("exact_cover_f50: cover not found");
    out.count = chosen->size();
    for (std::uint32_t k : *chosen) out.centers.push_back(cands[owner[k]].p);
    return out;
}

}  // namespace detail

// Runs the full equivalence check on a fresh gadget instance: the exact CDC
// optimum on D at radius r0 versus the exact stabbing optimum on the gadget
// graph at radius r = r0 + delta, plus the constructive forward certificate.
inline ReductionReport verify_reduction(const std::vector<Pt<long long>>& d_points, int r0,
                                        std::uint64_t seed,
                                        std::optional<Rational> delta_override = std::nullopt) {
    if (d_points.size() > 8) {
        throw GuardExceeded("verify_reduction: exact oracles guarded to |D| <= 8");
    }
    ReductionReport rep;
    rep.instance = reduce_cdc(d_points, r0, seed, delta_override);
    const ReductionInstance& inst = rep.instance;

    const auto cdc = detail::exact_cover_f50(d_points, r0);
    rep.k_cdc = cdc.count;
    rep.indeterminate |= cdc.indeterminate;

    // Float50 copy of the gadget graph.
    std::vector<Pt<Float50>> verts;
    verts.reserve(inst.graph.n());
    for (const auto& v : inst.graph.vertices) verts.push_back({to_float50(v.x), to_float50(v.y)});
    std::vector<Seg<Float50>> segs;
    segs.reserve(inst.graph.m());
    for (const auto& [i, j] : inst.graph.edges) segs.push_back({verts[i], verts[j]});
    const Float50 rf = to_float50(inst.r);
    const Float50 r2 = rf * rf;

    std::vector<detail::F50Candidate> cands;
    for (std::uint32_t i = 0; i < segs.size(); ++i) {
        for (std::uint32_t j = i + 1; j < segs.size(); ++j) {
            const auto isect = intersect_stadium_boundaries<Float50>(
                {segs[i], rf}, {segs[j], rf}, detail::kGuard);
            for (const auto& p : isect.points) cands.push_back({p, i, j});
        }
    }
    for (std::uint32_t e = 0; e < segs.size(); ++e) {
        cands.push_back({{segs[e].a.x, segs[e].a.y}, e, kGhost});
        cands.push_back({{segs[e].b.x, segs[e].b.y}, e, kGhost});
        cands.push_back({{(segs[e].a.x + segs[e].b.x) / 2, (segs[e].a.y + segs[e].b.y) / 2},
                         e, kGhost});
    }

    std::vector<DynBitset> masks;
    std::map<std::vector<std::uint64_t>, std::uint32_t> seen;
    std::vector<char> on_vertex_circle(verts.size());
    for (std::uint32_t c = 0; c < cands.size(); ++c) {
        // Stadiums of edges sharing a vertex have coincident cap circles, so a
        // contact candidate sits at distance exactly r from that vertex and on
        // the boundary of every stadium whose edge is incident to it. Such
        // band hits are structural, not precision loss.
        for (std::uint32_t v = 0; v < verts.size(); ++v) {
            on_vertex_circle[v] = abs(sq_dist(cands[c].p, verts[v]) - r2) <= detail::kGuard;
        }
        DynBitset mask(segs.size());
        for (std::uint32_t e = 0; e < segs.size(); ++e) {
            const Float50 diff = sq_dist_point_segment(cands[c].p, segs[e]) - r2;
            const bool explained = cands[c].e1 == e || cands[c].e2 == e ||
                                   on_vertex_circle[inst.graph.edges[e].first] ||
                                   on_vertex_circle[inst.graph.edges[e].second];
            if (detail::guarded_covered(diff, explained, rep.indeterminate)) mask.set(e);
        }
        if (seen.emplace(mask.words(), c).second) masks.push_back(std::move(mask));
    }
    const auto chosen = min_set_cover(masks, segs.size());
    if (!chosen) throw std::logic_error("verify_reduction: stabbing cover not found");
    rep.k_ipgd = chosen->size();
    rep.equal = rep.k_cdc == rep.k_ipgd;

    // Forward direction: every gadget segment is stabbed, at radius r, by the
    // CDC center that covers its lattice point. Decisions must clear the
    // guard band outright (the construction leaves a delta-sized margin).
    rep.forward_ok = true;
    for (std::size_t i = 0; i < d_points.size(); ++i) {
        const Seg<Float50>& gadget = segs[inst.gadget_edges[i]];
        bool stabbed = false;
        for (const auto& c : cdc.centers) {
            if (sq_dist_point_segment(c, gadget) - r2 < -detail::kGuard) {
                stabbed = true;
                break;
            }
        }
        rep.forward_ok &= stabbed;
    }
    return rep;
}

}  // namespace segstab
