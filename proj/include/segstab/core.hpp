#pragma once

// Planar primitives shared by the whole library. Metric code is templated on
// the coordinate scalar: double for the standard lane, Rational for exact
// instance construction, Float50 for the extended-precision hardness lane.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace segstab {

using Rational = boost::multiprecision::cpp_rational;
using Float50 = boost::multiprecision::cpp_bin_float_50;

template <class T>
struct Pt {
    T x{};
    T y{};

    friend bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Pt& a, const Pt& b) { return !(a == b); }
    // Lexicographic order; the canonical order used everywhere.
    friend bool operator<(const Pt& a, const Pt& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
};

using Point = Pt<double>;
using RatPoint = Pt<Rational>;

template <class T> Pt<T> operator+(const Pt<T>& a, const Pt<T>& b) { return {a.x + b.x, a.y + b.y}; }
template <class T> Pt<T> operator-(const Pt<T>& a, const Pt<T>& b) { return {a.x - b.x, a.y - b.y}; }
template <class T> Pt<T> operator*(const T& s, const Pt<T>& p) { return {s * p.x, s * p.y}; }

template <class T> T dot(const Pt<T>& a, const Pt<T>& b) { return a.x * b.x + a.y * b.y; }
template <class T> T cross(const Pt<T>& a, const Pt<T>& b) { return a.x * b.y - a.y * b.x; }
template <class T> T sq_norm(const Pt<T>& p) { return p.x * p.x + p.y * p.y; }
template <class T> T sq_dist(const Pt<T>& a, const Pt<T>& b) { return sq_norm(a - b); }

inline double norm(const Point& p) { return std::hypot(p.x, p.y); }
inline double dist(const Point& a, const Point& b) { return norm(a - b); }

inline bool finite(const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

template <class T>
struct Seg {
    Pt<T> a;
    Pt<T> b;
};

using Segment = Seg<double>;
using RatSegment = Seg<Rational>;

struct Disk {
    Point center;
    double radius = 0.0;  // >= 0
};

// Absolute comparison slack for metric (non-predicate) quantities.
struct Tolerance {
    double eps = 1e-12;

    static Tolerance for_diameter(double diam) {
        return Tolerance{std::max(1e-9 * diam, 1e-300)};
    }
};

struct BBox {
    Point lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    Point hi{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};

    void expand(const Point& p) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
    bool empty() const { return lo.x > hi.x; }
    double diagonal() const { return empty() ? 0.0 : dist(lo, hi); }
};

template <class It>
BBox bounding_box(It first, It last) {
    BBox box;
    for (It it = first; it != last; ++it) box.expand(*it);
    return box;
}

// Squared distance from p to the closed segment s. Exact when T is Rational.
template <class T>
T sq_dist_point_segment(const Pt<T>& p, const Seg<T>& s) {
    const Pt<T> d = s.b - s.a;
    const Pt<T> w = p - s.a;
    const T len2 = sq_norm(d);
    if (len2 == T(0)) return sq_norm(w);  // degenerate input; callers reject a == b upstream
    const T t = dot(w, d);
    if (t <= T(0)) return sq_norm(w);
    if (t >= len2) return sq_dist(p, s.b);
    // squared distance to the perpendicular foot: |w|^2 - t^2 / len2
    return sq_norm(w) - (t * t) / len2;
}

inline double dist_point_segment(const Point& p, const Segment& s) {
    return std::sqrt(std::max(0.0, sq_dist_point_segment(p, s)));
}

// Disk of radius r centered at c intersects s (closed condition, metric slack).
inline bool stabs(const Point& c, double r, const Segment& s, Tolerance tol) {
    return dist_point_segment(c, s) <= r + tol.eps;
}

inline double segment_length(const Segment& s) { return dist(s.a, s.b); }

// Guard failures raised where the spec caps input sizes (exit code 3 in the CLI).
struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Deterministic, platform-independent RNG used by all generators.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [lo, hi], inclusive. Rejection sampling, no modulo bias.
    std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(next_u64());  // full range
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / span * span;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return lo + static_cast<std::int64_t>(v % span);
    }

    template <class V>
    void shuffle(V& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_int(0, static_cast<std::int64_t>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    std::uint64_t state_;
};

// Worker cap shared by the parallel paths; SEGSTAB_THREADS overrides.
inline unsigned thread_budget() {
    if (const char* env = std::getenv("SEGSTAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }
inline double to_double(const Float50& f) { return f.template convert_to<double>(); }
inline Float50 to_float50(const Rational& q) { return Float50(q); }

inline Point to_point(const RatPoint& p) { return {to_double(p.x), to_double(p.y)}; }

}  // namespace segstab
