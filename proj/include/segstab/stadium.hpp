#pragma once

// Stadium (Minkowski sum of a segment and a disk) boundaries and their
// pairwise intersections. The boundary of N_r(e) splits into two straight
// sides parallel to the core and two half-circle caps centered at the core
// endpoints. Intersection work reduces to segment/segment, segment/circle and
// circle/circle subproblems; the scalar is templated (double for the standard
// lane, Float50 for the extended-precision lane) and every near-miss decision
// goes through one threshold in length units.

#include "segstab/core.hpp"

namespace segstab {

template <class T>
struct StadiumT {
    Seg<T> core;
    T radius{};  // > 0

    bool contains(const Pt<T>& p, const T& slack = T(0)) const {
        return sq_dist_point_segment(p, core) <= (radius + slack) * (radius + slack);
    }
};

using Stadium = StadiumT<double>;

// Half circle {center + radius * d : |d| = 1, dot(d, away) >= 0}.
template <class T>
struct ArcT {
    Pt<T> center;
    T radius{};
    Pt<T> away;  // direction only, not normalized
};

template <class T>
struct StadiumBoundaryT {
    std::array<Seg<T>, 2> sides;
    std::array<ArcT<T>, 2> caps;
};

using StadiumBoundary = StadiumBoundaryT<double>;

template <class T>
StadiumBoundaryT<T> stadium_boundary(const StadiumT<T>& st) {
    using std::sqrt;
    const Pt<T> u = st.core.b - st.core.a;
    const T len = sqrt(sq_norm(u));
    if (!(len > T(0)) || !(st.radius > T(0))) {
        throw std::invalid_argument("stadium: zero-length core or non-positive radius");
    }
    const T s = st.radius / len;
    const Pt<T> off{-s * u.y, s * u.x};
    StadiumBoundaryT<T> b;
    b.sides[0] = {st.core.a + off, st.core.b + off};
    b.sides[1] = {st.core.a - off, st.core.b - off};
    b.caps[0] = {st.core.a, st.radius, st.core.a - st.core.b};
    b.caps[1] = {st.core.b, st.radius, st.core.b - st.core.a};
    return b;
}

template <class T>
struct BoundaryIntersection {
    std::vector<Pt<T>> points;
    bool degenerate = false;  // some pair of boundary pieces coincides/overlaps
};

namespace detail {

template <class T>
bool on_arc(const ArcT<T>& arc, const Pt<T>& p, const T& eps) {
    using std::sqrt;
    return dot(p - arc.center, arc.away) >= -eps * sqrt(sq_norm(arc.away));
}

template <class T>
void seg_seg(const Seg<T>& s1, const Seg<T>& s2, const T& eps,
             std::vector<Pt<T>>& out, bool& degenerate) {
    using std::abs;
    using std::sqrt;
    const Pt<T> d1 = s1.b - s1.a;
    const Pt<T> d2 = s2.b - s2.a;
    const Pt<T> w = s2.a - s1.a;
    const T den = cross(d1, d2);
    const T l1 = sqrt(sq_norm(d1));
    const T l2 = sqrt(sq_norm(d2));
    if (den == T(0)) {
        // Exactly parallel at working precision; near-parallel crossings fall
        // through to the generic branch, where the range checks reject the
        // far-away line intersection. Coincident lines overlap in an interval.
        if (abs(cross(d1, w)) > eps * l1) return;
        const T lo = dot(w, d1) / sq_norm(d1);
        const T hi = dot(s2.b - s1.a, d1) / sq_norm(d1);
        const T t0 = std::max(std::min(lo, hi), T(0));
        const T t1 = std::min(std::max(lo, hi), T(1));
        if (t0 > t1) return;
        degenerate = true;
        out.push_back(s1.a + t0 * d1);
        out.push_back(s1.a + t1 * d1);
        return;
    }
    const T t = cross(w, d2) / den;
    const T s = cross(w, d1) / den;
    const T et = eps / l1;
    const T es = eps / l2;
    if (t < -et || t > T(1) + et || s < -es || s > T(1) + es) return;
    out.push_back(s1.a + t * d1);
}

template <class T>
void seg_circle(const Seg<T>& s, const Pt<T>& c, const T& r, const ArcT<T>& arc, const T& eps,
                std::vector<Pt<T>>& out) {
    using std::sqrt;
    const Pt<T> d = s.b - s.a;
    const Pt<T> w = s.a - c;
    const T A = sq_norm(d);
    const T B = T(2) * dot(d, w);
    T disc = B * B - T(4) * A * (sq_norm(w) - r * r);
    if (disc < T(0)) {
        if (disc < T(-4) * A * eps * eps) return;
        disc = T(0);
    }
    const T root = sqrt(disc);
    const T et = eps / sqrt(A);
    for (int sign = -1; sign <= 1; sign += 2) {
        const T t = (-B + T(sign) * root) / (T(2) * A);
        if (t < -et || t > T(1) + et) continue;
        const Pt<T> p = s.a + t * d;
        if (on_arc(arc, p, eps)) out.push_back(p);
    }
}

template <class T>
void arc_arc(const ArcT<T>& a1, const ArcT<T>& a2, const T& eps,
             std::vector<Pt<T>>& out, bool& degenerate) {
    using std::sqrt;
    const Pt<T> v = a2.center - a1.center;
    const T d2 = sq_norm(v);
    using std::abs;
    if (d2 <= eps * eps && abs(a1.radius - a2.radius) <= eps) {
        // Same supporting circle: overlapping arcs meet in a contact arc whose
        // endpoints are arc endpoints lying on the other half circle.
        degenerate = true;
        for (const ArcT<T>* self : {&a1, &a2}) {
            const ArcT<T>& other = (self == &a1) ? a2 : a1;
            const T s = self->radius / sqrt(sq_norm(self->away));
            const Pt<T> perp{-s * self->away.y, s * self->away.x};
            for (const Pt<T>& p : {self->center + perp, self->center - perp}) {
                if (on_arc(other, p, eps)) out.push_back(p);
            }
        }
        return;
    }
    const T d = sqrt(d2);
    if (d > a1.radius + a2.radius + eps) return;
    if (d < abs(a1.radius - a2.radius) - eps) return;
    const T a = (d2 + a1.radius * a1.radius - a2.radius * a2.radius) / (T(2) * d);
    T h2 = a1.radius * a1.radius - a * a;
    if (h2 < T(0)) h2 = T(0);  // tangency, already gated by the eps checks above
    const T h = sqrt(h2);
    const Pt<T> base = a1.center + (a / d) * v;
    const Pt<T> off{(-h / d) * v.y, (h / d) * v.x};
    for (const Pt<T>& p : {base + off, base - off}) {
        if (on_arc(a1, p, eps) && on_arc(a2, p, eps)) out.push_back(p);
    }
}

template <class T>
void dedup_points(std::vector<Pt<T>>& pts, const T& eps) {
    std::sort(pts.begin(), pts.end());
    std::vector<Pt<T>> kept;
    for (const auto& p : pts) {
        bool dup = false;
        for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
            if (it->x < p.x - eps) break;
            if (sq_dist(*it, p) <= eps * eps) {
                dup = true;
                break;
            }
        }
        if (!dup) kept.push_back(p);
    }
    pts = std::move(kept);
}

}  // namespace detail

// All isolated intersection points between the boundary pieces of two
// stadiums; coincident/overlapping pieces raise the degenerate flag and
// contribute their contact-interval endpoints.
template <class T>
BoundaryIntersection<T> intersect_stadium_boundaries(const StadiumT<T>& s1, const StadiumT<T>& s2,
                                                     const T& eps) {
    const StadiumBoundaryT<T> b1 = stadium_boundary(s1);
    const StadiumBoundaryT<T> b2 = stadium_boundary(s2);
    BoundaryIntersection<T> res;
    for (const auto& seg1 : b1.sides) {
        for (const auto& seg2 : b2.sides) {
            detail::seg_seg(seg1, seg2, eps, res.points, res.degenerate);
        }
        for (const auto& cap2 : b2.caps) {
            detail::seg_circle(seg1, cap2.center, cap2.radius, cap2, eps, res.points);
        }
    }
    for (const auto& cap1 : b1.caps) {
        for (const auto& seg2 : b2.sides) {
            detail::seg_circle(seg2, cap1.center, cap1.radius, cap1, eps, res.points);
        }
        for (const auto& cap2 : b2.caps) {
            detail::arc_arc(cap1, cap2, eps, res.points, res.degenerate);
        }
    }
    detail::dedup_points(res.points, eps);
    return res;
}

}  // namespace segstab
