#pragma once

// Smallest disk intersecting every segment of E (radius R(E)). The objective
// c -> max_e dist(c, e) is a convex minimax with Lipschitz constant 1, and its
// partial minimum over y is convex in x, so nested ternary search converges;
// a compass-search polish absorbs the inner-search noise. Contract is the
// additive tolerance, not an exact combinatorial optimum.

#include "segstab/core.hpp"

namespace segstab {

struct StabbingDisk {
    Point center;
    double radius = 0.0;
};

namespace detail {

struct MinimaxBest {
    Point c{};
    double value = std::numeric_limits<double>::infinity();

    void offer(const Point& p, double v) {
        if (v < value) {
            value = v;
            c = p;
        }
    }
};

}  // namespace detail

inline StabbingDisk smallest_stabbing_disk(const std::vector<Segment>& segments, Tolerance tol) {
    if (segments.empty()) {
        throw std::invalid_argument("smallest_stabbing_disk: empty segment set");
    }
    BBox box;
    for (const auto& s : segments) {
        box.expand(s.a);
        box.expand(s.b);
    }
    const auto farthest = [&](const Point& c) {
        double m = 0.0;
        for (const auto& s : segments) m = std::max(m, dist_point_segment(c, s));
        return m;
    };

    detail::MinimaxBest best;
    const double pos_tol = std::max(tol.eps * 1e-3, 1e-15 * std::max(box.diagonal(), 1.0));

    const auto min_over_y = [&](double x) {
        double lo = box.lo.y, hi = box.hi.y;
        while (hi - lo > pos_tol) {
            const double m1 = lo + (hi - lo) / 3.0;
            const double m2 = hi - (hi - lo) / 3.0;
            const double f1 = farthest({x, m1});
            const double f2 = farthest({x, m2});
            best.offer({x, m1}, f1);
            best.offer({x, m2}, f2);
            if (f1 < f2) {
                hi = m2;
            } else {
                lo = m1;
            }
        }
        const double mid = 0.5 * (lo + hi);
        const double f = farthest({x, mid});
        best.offer({x, mid}, f);
        return f;
    };

    double lo = box.lo.x, hi = box.hi.x;
    while (hi - lo > pos_tol) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (min_over_y(m1) < min_over_y(m2)) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    min_over_y(0.5 * (lo + hi));

    // Compass polish around the incumbent.
    double step = std::max(box.diagonal() / 8.0, pos_tol);
    while (step > pos_tol / 4.0) {
        bool moved = false;
        const Point c = best.c;
        for (const Point& p : {Point{c.x + step, c.y}, Point{c.x - step, c.y},
                               Point{c.x, c.y + step}, Point{c.x, c.y - step}}) {
            const double v = farthest(p);
            if (v < best.value) {
                best.offer(p, v);
                moved = true;
            }
        }
        if (!moved) step *= 0.5;
    }
    return StabbingDisk{best.c, best.value};
}

}  // namespace segstab
