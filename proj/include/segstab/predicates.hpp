#pragma once

// Exact geometric predicates. Double inputs go through a semi-static floating
// filter (Shewchuk's A-stage error bounds); when the filter cannot certify the
// sign, the determinant is re-evaluated in exact rational arithmetic. Every
// double is a dyadic rational, so the fallback is exact, not "more precise".
// Rational inputs are evaluated directly.

#include "segstab/core.hpp"

namespace segstab {

enum class Orient { right = -1, collinear = 0, left = 1 };
enum class CircleSide { outside = -1, on = 0, inside = 1 };

namespace detail {

inline constexpr double kEps = 1.1102230246251565e-16;  // 2^-53
inline constexpr double kOrientBound = (3.0 + 16.0 * kEps) * kEps;
inline constexpr double kInCircleBound = (10.0 + 96.0 * kEps) * kEps;
// Conservative bound for 4-term sums of difference products (dot / dist2 forms).
inline constexpr double kSum4Bound = 16.0 * kEps;

inline int sign_of(const Rational& v) {
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

inline int orient_sign_exact(const Point& a, const Point& b, const Point& c) {
    const Rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
    return sign_of((bx - ax) * (cy - ay) - (by - ay) * (cx - ax));
}

inline int in_circle_sign_exact(const Point& a, const Point& b, const Point& c, const Point& d) {
    const Rational adx = Rational(a.x) - Rational(d.x);
    const Rational ady = Rational(a.y) - Rational(d.y);
    const Rational bdx = Rational(b.x) - Rational(d.x);
    const Rational bdy = Rational(b.y) - Rational(d.y);
    const Rational cdx = Rational(c.x) - Rational(d.x);
    const Rational cdy = Rational(c.y) - Rational(d.y);
    const Rational det = (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy) +
                         (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy) +
                         (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady);
    return sign_of(det);
}

}  // namespace detail

// Sign of the orientation determinant: left = counterclockwise turn a->b->c.
inline Orient orientation(const Point& a, const Point& b, const Point& c) {
    const double detleft = (b.x - a.x) * (c.y - a.y);
    const double detright = (b.y - a.y) * (c.x - a.x);
    const double det = detleft - detright;
    const double detsum = std::abs(detleft) + std::abs(detright);
    if (std::abs(det) > detail::kOrientBound * detsum) {
        return det > 0 ? Orient::left : Orient::right;
    }
    const int s = detail::orient_sign_exact(a, b, c);
    return s > 0 ? Orient::left : (s < 0 ? Orient::right : Orient::collinear);
}

inline Orient orientation(const RatPoint& a, const RatPoint& b, const RatPoint& c) {
    const int s = detail::sign_of((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
    return s > 0 ? Orient::left : (s < 0 ? Orient::right : Orient::collinear);
}

// Position of d relative to the circle through a, b, c, independent of the
// orientation of (a, b, c). Collinear (a, b, c) degenerates to "on".
inline CircleSide in_circle(const Point& a, const Point& b, const Point& c, const Point& d) {
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;

    const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    const double cdxady = cdx * ady, adxcdy = adx * cdy;
    const double adxbdy = adx * bdy, bdxady = bdx * ady;
    const double alift = adx * adx + ady * ady;
    const double blift = bdx * bdx + bdy * bdy;
    const double clift = cdx * cdx + cdy * cdy;

    const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                       clift * (adxbdy - bdxady);
    const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
                             (std::abs(cdxady) + std::abs(adxcdy)) * blift +
                             (std::abs(adxbdy) + std::abs(bdxady)) * clift;

    int s;
    if (std::abs(det) > detail::kInCircleBound * permanent) {
        s = det > 0 ? 1 : -1;
    } else {
        s = detail::in_circle_sign_exact(a, b, c, d);
    }

    const Orient o = orientation(a, b, c);
    if (o == Orient::collinear) return CircleSide::on;
    if (o == Orient::right) s = -s;
    return s > 0 ? CircleSide::inside : (s < 0 ? CircleSide::outside : CircleSide::on);
}

inline CircleSide in_circle(const RatPoint& a, const RatPoint& b, const RatPoint& c,
                            const RatPoint& d) {
    const Rational adx = a.x - d.x, ady = a.y - d.y;
    const Rational bdx = b.x - d.x, bdy = b.y - d.y;
    const Rational cdx = c.x - d.x, cdy = c.y - d.y;
    const Rational det = (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy) +
                         (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy) +
                         (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady);
    int s = detail::sign_of(det);
    const Orient o = orientation(a, b, c);
    if (o == Orient::collinear) return CircleSide::on;
    if (o == Orient::right) s = -s;
    return s > 0 ? CircleSide::inside : (s < 0 ? CircleSide::outside : CircleSide::on);
}

// Sign of dot(w - u, w - v): negative iff w lies strictly inside the open disk
// with diameter [u, v] (angle at w exceeds a right angle).
inline int diametral_side(const Point& u, const Point& v, const Point& w) {
    const double t1 = (w.x - u.x) * (w.x - v.x);
    const double t2 = (w.y - u.y) * (w.y - v.y);
    const double det = t1 + t2;
    if (std::abs(det) > detail::kOrientBound * (std::abs(t1) + std::abs(t2))) {
        return det > 0 ? 1 : -1;
    }
    const Rational wx(w.x), wy(w.y);
    return detail::sign_of((wx - Rational(u.x)) * (wx - Rational(v.x)) +
                           (wy - Rational(u.y)) * (wy - Rational(v.y)));
}

inline int diametral_side(const RatPoint& u, const RatPoint& v, const RatPoint& w) {
    return detail::sign_of((w.x - u.x) * (w.x - v.x) + (w.y - u.y) * (w.y - v.y));
}

// Sign of |a-b|^2 - |c-d|^2.
inline int compare_sq_dist(const Point& a, const Point& b, const Point& c, const Point& d) {
    const double t1 = (a.x - b.x) * (a.x - b.x);
    const double t2 = (a.y - b.y) * (a.y - b.y);
    const double t3 = (c.x - d.x) * (c.x - d.x);
    const double t4 = (c.y - d.y) * (c.y - d.y);
    const double det = (t1 + t2) - (t3 + t4);
    if (std::abs(det) > detail::kSum4Bound * (t1 + t2 + t3 + t4)) {
        return det > 0 ? 1 : -1;
    }
    const Rational e1 = Rational(a.x) - Rational(b.x);
    const Rational e2 = Rational(a.y) - Rational(b.y);
    const Rational e3 = Rational(c.x) - Rational(d.x);
    const Rational e4 = Rational(c.y) - Rational(d.y);
    return detail::sign_of(e1 * e1 + e2 * e2 - e3 * e3 - e4 * e4);
}

inline int compare_sq_dist(const RatPoint& a, const RatPoint& b, const RatPoint& c,
                           const RatPoint& d) {
    return detail::sign_of(sq_dist(a, b) - sq_dist(c, d));
}

namespace detail {

// p collinear with [a, b] assumed; true iff p lies in the closed segment.
template <class T>
bool collinear_on_segment(const Pt<T>& a, const Pt<T>& b, const Pt<T>& p) {
    if (a.x != b.x) {
        return (a.x < b.x) ? (a.x <= p.x && p.x <= b.x) : (b.x <= p.x && p.x <= a.x);
    }
    return (a.y < b.y) ? (a.y <= p.y && p.y <= b.y) : (b.y <= p.y && p.y <= a.y);
}

}  // namespace detail

// True iff closed segments [a,b] and [c,d] share at least one point. Exact.
template <class T>
bool segments_intersect(const Pt<T>& a, const Pt<T>& b, const Pt<T>& c, const Pt<T>& d) {
    const Orient o1 = orientation(a, b, c);
    const Orient o2 = orientation(a, b, d);
    const Orient o3 = orientation(c, d, a);
    const Orient o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4) return true;  // proper crossing or endpoint touch
    if (o1 == Orient::collinear && detail::collinear_on_segment(a, b, c)) return true;
    if (o2 == Orient::collinear && detail::collinear_on_segment(a, b, d)) return true;
    if (o3 == Orient::collinear && detail::collinear_on_segment(c, d, a)) return true;
    if (o4 == Orient::collinear && detail::collinear_on_segment(c, d, b)) return true;
    return false;
}

}  // namespace segstab
