#pragma once

// Randomized incremental Delaunay triangulation over exact predicates.
//
// The triangulation is maintained as a closed fan of real triangles plus one
// ghost triangle per hull edge (ghost vertex = kGhost). For a CCW hull edge
// (a -> b) the ghost triangle is stored (b, a, kGhost), so adjacency is the
// uniform rule "neighbour across directed edge (u -> v) owns (v -> u)".
// Insertion digs the Bowyer-Watson cavity and fans the new point to its
// boundary. The ghost "circumdisk" of hull edge (a -> b) is the open half
// plane strictly right of (a -> b) plus, under the perturbation policy, the
// open edge itself.

#include <array>
#include <unordered_map>

#include "segstab/graph.hpp"

namespace segstab {

inline constexpr std::uint32_t kGhost = 0xffffffffu;

enum class DegeneracyPolicy { reject, perturb };

// Construction-time degeneracy, carrying the violating points.
template <class T>
struct DegeneracyErrorT : std::runtime_error {
    enum class Kind { duplicate, collinear, cocircular, all_collinear };
    Kind kind;
    std::vector<Pt<T>> points;

    DegeneracyErrorT(Kind k, std::vector<Pt<T>> pts, const char* what)
        : std::runtime_error(what), kind(k), points(std::move(pts)) {}
};

template <class T>
struct TriangulationT {
    std::vector<Pt<T>> points;
    std::vector<std::array<std::uint32_t, 3>> triangles;  // real triangles, CCW
    PlaneGraphT<T> graph;                                 // vertices + Delaunay edges
};

using Triangulation = TriangulationT<double>;

struct DelaunayOptions {
    DegeneracyPolicy policy = DegeneracyPolicy::reject;
    std::uint64_t seed = 1;  // insertion-order shuffle
};

namespace detail {

template <class T>
class DelaunayBuilder {
  public:
    DelaunayBuilder(std::vector<Pt<T>> pts, DelaunayOptions opt)
        : pts_(std::move(pts)), opt_(opt) {}

    TriangulationT<T> build() {
        reject_duplicates();
        const std::size_t n = pts_.size();
        TriangulationT<T> out;
        out.points = pts_;
        if (n < 2) {
            out.graph = PlaneGraphT<T>{pts_, {}};
            return out;
        }
        if (n == 2) {
            out.graph = PlaneGraphT<T>{pts_, {{0, 1}}};
            return out;
        }

        std::vector<std::uint32_t> order(n);
        for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
        SplitMix64 rng(opt_.seed);
        rng.shuffle(order);
        seed_triangle(order);
        for (std::size_t k = 3; k < n; ++k) insert(order[k]);

        for (std::size_t t = 0; t < tris_.size(); ++t) {
            if (!alive_[t] || is_ghost(t)) continue;
            out.triangles.push_back(tris_[t]);
        }
        std::vector<EdgeIndexPair> edges;
        for (const auto& tri : out.triangles) {
            for (int i = 0; i < 3; ++i) {
                std::uint32_t u = tri[i], v = tri[(i + 1) % 3];
                edges.emplace_back(std::min(u, v), std::max(u, v));
            }
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        out.graph = PlaneGraphT<T>{pts_, std::move(edges)};
        return out;
    }

  private:
    using Err = DegeneracyErrorT<T>;

    void reject_duplicates() const {
        std::vector<std::uint32_t> idx(pts_.size());
        for (std::uint32_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return pts_[a] < pts_[b]; });
        for (std::size_t k = 1; k < idx.size(); ++k) {
            if (pts_[idx[k - 1]] == pts_[idx[k]]) {
                throw Err(Err::Kind::duplicate, {pts_[idx[k]]}, "delaunay: duplicate point");
            }
        }
    }

    void seed_triangle(std::vector<std::uint32_t>& order) {
        std::size_t k = 2;
        while (k < order.size() &&
               orientation(pts_[order[0]], pts_[order[1]], pts_[order[k]]) == Orient::collinear) {
            ++k;
        }
        if (k == order.size()) {
            throw Err(Err::Kind::all_collinear,
                      {pts_[order[0]], pts_[order[1]], pts_[order[2]]},
                      "delaunay: all points collinear");
        }
        std::swap(order[2], order[k]);
        std::uint32_t a = order[0], b = order[1], c = order[2];
        if (orientation(pts_[a], pts_[b], pts_[c]) == Orient::right) std::swap(b, c);
        add_tri({a, b, c});
        add_tri({b, a, kGhost});
        add_tri({c, b, kGhost});
        add_tri({a, c, kGhost});
    }

    static std::uint64_t edge_key(std::uint32_t u, std::uint32_t v) {
        return (static_cast<std::uint64_t>(u) << 32) | v;
    }

    bool is_ghost(std::size_t t) const { return tris_[t][2] == kGhost; }

    std::size_t add_tri(std::array<std::uint32_t, 3> tri) {
        // Normalize: ghost vertex (if any) goes last; rotations keep cyclic order.
        while (tri[0] == kGhost || tri[1] == kGhost) {
            tri = {tri[1], tri[2], tri[0]};
        }
        const std::size_t id = tris_.size();
        tris_.push_back(tri);
        alive_.push_back(true);
        for (int i = 0; i < 3; ++i) {
            edge_map_[edge_key(tri[i], tri[(i + 1) % 3])] = id;
        }
        return id;
    }

    void remove_tri(std::size_t t) {
        alive_[t] = false;
        for (int i = 0; i < 3; ++i) {
            edge_map_.erase(edge_key(tris_[t][i], tris_[t][(i + 1) % 3]));
        }
    }

    // Circumdisk membership of p for triangle t under the active policy.
    bool in_disk(std::size_t t, std::uint32_t p) {
        const auto& tri = tris_[t];
        if (is_ghost(t)) {
            // Stored (x, y, kGhost) for CCW hull edge (y -> x).
            const Pt<T>& a = pts_[tri[1]];
            const Pt<T>& b = pts_[tri[0]];
            const Orient o = orientation(a, b, pts_[p]);
            if (o == Orient::right) return true;
            if (o == Orient::collinear) {
                if (opt_.policy == DegeneracyPolicy::reject) {
                    throw Err(Err::Kind::collinear, {a, b, pts_[p]},
                              "delaunay: collinear triple");
                }
                return collinear_on_segment(a, b, pts_[p]);
            }
            return false;
        }
        const CircleSide s = in_circle(pts_[tri[0]], pts_[tri[1]], pts_[tri[2]], pts_[p]);
        if (s == CircleSide::on) {
            if (opt_.policy == DegeneracyPolicy::reject) {
                throw Err(Err::Kind::cocircular,
                          {pts_[tri[0]], pts_[tri[1]], pts_[tri[2]], pts_[p]},
                          "delaunay: cocircular quadruple");
            }
            return false;  // deterministic resolution: cocircular counts as outside
        }
        return s == CircleSide::inside;
    }

    void insert(std::uint32_t p) {
        std::vector<std::size_t> cavity;
        for (std::size_t t = 0; t < tris_.size(); ++t) {
            if (alive_[t] && in_disk(t, p)) cavity.push_back(t);
        }
        if (cavity.empty()) {
            throw std::logic_error("delaunay: empty cavity (corrupt state)");
        }
        std::vector<char> in_cavity(tris_.size(), 0);
        for (std::size_t t : cavity) in_cavity[t] = 1;

        if (opt_.policy == DegeneracyPolicy::reject) {
            // A point exactly on an interior edge is never seen by the strict
            // in-circle tests above; scan cavity edges for it.
            for (std::size_t t : cavity) {
                if (is_ghost(t)) continue;
                for (int i = 0; i < 3; ++i) {
                    const Pt<T>& u = pts_[tris_[t][i]];
                    const Pt<T>& v = pts_[tris_[t][(i + 1) % 3]];
                    if (orientation(u, v, pts_[p]) == Orient::collinear) {
                        throw Err(Err::Kind::collinear, {u, v, pts_[p]},
                                  "delaunay: collinear triple");
                    }
                }
            }
        }

        std::vector<std::pair<std::uint32_t, std::uint32_t>> boundary;
        for (std::size_t t : cavity) {
            for (int i = 0; i < 3; ++i) {
                const std::uint32_t u = tris_[t][i];
                const std::uint32_t v = tris_[t][(i + 1) % 3];
                const auto rev = edge_map_.find(edge_key(v, u));
                if (rev == edge_map_.end()) {
                    throw std::logic_error("delaunay: open boundary (corrupt state)");
                }
                if (!in_cavity[rev->second]) boundary.emplace_back(u, v);
            }
        }
        for (std::size_t t : cavity) remove_tri(t);
        for (const auto& [u, v] : boundary) {
            if (u != kGhost && v != kGhost &&
                orientation(pts_[u], pts_[v], pts_[p]) != Orient::left) {
                throw Err(Err::Kind::collinear, {pts_[u], pts_[v], pts_[p]},
                          "delaunay: degenerate fill triangle");
            }
            add_tri({u, v, p});
        }
    }

    std::vector<Pt<T>> pts_;
    DelaunayOptions opt_;
    std::vector<std::array<std::uint32_t, 3>> tris_;
    std::vector<char> alive_;
    std::unordered_map<std::uint64_t, std::size_t> edge_map_;
};

}  // namespace detail

// Delaunay triangulation of S. Throws DegeneracyErrorT with the violating
// triple/quadruple under the reject policy; the perturb policy resolves
// cocircular and on-edge ties deterministically instead. Input sets that are
// entirely collinear admit no triangulation and are always rejected.
template <class T>
TriangulationT<T> delaunay(std::vector<Pt<T>> points, DelaunayOptions opt = {}) {
    return detail::DelaunayBuilder<T>(std::move(points), opt).build();
}

// Empty-circumcircle certificate: no input point strictly inside the
// circumcircle of any triangle. Returns the first violation.
template <class T>
std::optional<std::array<std::uint32_t, 4>> circumcircle_violation(const TriangulationT<T>& tri) {
    for (const auto& t : tri.triangles) {
        for (std::uint32_t p = 0; p < tri.points.size(); ++p) {
            if (p == t[0] || p == t[1] || p == t[2]) continue;
            if (in_circle(tri.points[t[0]], tri.points[t[1]], tri.points[t[2]],
                          tri.points[p]) == CircleSide::inside) {
                return std::array<std::uint32_t, 4>{t[0], t[1], t[2], p};
            }
        }
    }
    return std::nullopt;
}

}  // namespace segstab
