#pragma once

// Finite optimality-preserving candidate center set D_r(G): all isolated
// boundary-intersection points of stadium pairs, plus per-edge fallbacks
// (both endpoints and the midpoint) that keep a representative inside every
// single stadium — pair boundaries alone miss nested subfamilies and
// single-edge instances. Output order is canonical (lexicographic), so the
// result is independent of generation order.

#include "segstab/graph.hpp"
#include "segstab/stadium.hpp"

namespace segstab {

struct CandidateProvenance {
    enum class Kind { pair_intersection, edge_fallback, vertex };
    Kind kind;
    std::uint32_t first = 0;   // edge i / edge i / vertex v
    std::uint32_t second = 0;  // edge j (pair_intersection only)
};

struct CandidateSet {
    std::vector<Point> centers;
    // provenance[k] lists every origin merged into centers[k] by dedup.
    std::vector<std::vector<CandidateProvenance>> provenance;
    bool degenerate_pairs = false;  // some stadium pair had coincident boundary pieces

    std::size_t size() const { return centers.size(); }
};

namespace detail {

struct TaggedPoint {
    Point p;
    CandidateProvenance prov;
};

inline CandidateSet finalize_candidates(std::vector<TaggedPoint> raw, double eps,
                                        bool degenerate) {
    std::sort(raw.begin(), raw.end(),
              [](const TaggedPoint& a, const TaggedPoint& b) { return a.p < b.p; });
    CandidateSet out;
    out.degenerate_pairs = degenerate;
    for (const auto& tp : raw) {
        bool merged = false;
        for (std::size_t k = out.centers.size(); k-- > 0;) {
            if (out.centers[k].x < tp.p.x - eps) break;
            if (sq_dist(out.centers[k], tp.p) <= eps * eps) {
                out.provenance[k].push_back(tp.prov);
                merged = true;
                break;
            }
        }
        if (!merged) {
            out.centers.push_back(tp.p);
            out.provenance.push_back({tp.prov});
        }
    }
    return out;
}

}  // namespace detail

inline CandidateSet candidate_centers(const PlaneGraph& g, double r, Tolerance tol) {
    if (r <= 0) throw std::invalid_argument("candidate_centers: r must be positive");
    if (g.m() == 0) throw std::invalid_argument("candidate_centers: graph has no edges");
    std::vector<detail::TaggedPoint> raw;
    bool degenerate = false;
    std::vector<Stadium> stadiums;
    stadiums.reserve(g.m());
    for (std::size_t e = 0; e < g.m(); ++e) stadiums.push_back({g.segment(e), r});

    using Kind = CandidateProvenance::Kind;
    for (std::uint32_t i = 0; i < g.m(); ++i) {
        for (std::uint32_t j = i + 1; j < g.m(); ++j) {
            auto isect = intersect_stadium_boundaries(stadiums[i], stadiums[j], tol.eps);
            degenerate |= isect.degenerate;
            for (const auto& p : isect.points) {
                raw.push_back({p, {Kind::pair_intersection, i, j}});
            }
        }
    }
    for (std::uint32_t e = 0; e < g.m(); ++e) {
        const Segment s = g.segment(e);
        raw.push_back({s.a, {Kind::edge_fallback, e, 0}});
        raw.push_back({s.b, {Kind::edge_fallback, e, 0}});
        raw.push_back({Point{0.5 * (s.a.x + s.b.x), 0.5 * (s.a.y + s.b.y)},
                       {Kind::edge_fallback, e, 0}});
    }
    return detail::finalize_candidates(std::move(raw), tol.eps, degenerate);
}

// Vertex-restricted variant: keeps candidates within delta of some vertex and
// always adds the vertices themselves.
inline CandidateSet restrict_candidates(const CandidateSet& c, const PlaneGraph& g, double delta,
                                        Tolerance tol) {
    if (delta <= 0) throw std::invalid_argument("restrict_candidates: delta must be positive");
    std::vector<detail::TaggedPoint> raw;
    for (std::size_t k = 0; k < c.centers.size(); ++k) {
        bool near = false;
        for (const auto& v : g.vertices) {
            const double dx = c.centers[k].x - v.x;
            const double dy = c.centers[k].y - v.y;
            if (dx * dx + dy * dy <= (delta + tol.eps) * (delta + tol.eps)) {
                near = true;
                break;
            }
        }
        if (near) raw.push_back({c.centers[k], c.provenance[k].front()});
    }
    for (std::uint32_t v = 0; v < g.n(); ++v) {
        raw.push_back({g.vertices[v], {CandidateProvenance::Kind::vertex, v, 0}});
    }
    return detail::finalize_candidates(std::move(raw), tol.eps, c.degenerate_pairs);
}

}  // namespace segstab
