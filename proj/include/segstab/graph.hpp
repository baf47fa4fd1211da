#pragma once

// PointSet / PlaneGraph containers, the exact no-crossing verifier and the
// per-instance edge statistics (d_min, d_max, mu, stadium aspect ratios).

#include <optional>
#include <utility>

#include "segstab/core.hpp"
#include "segstab/predicates.hpp"

namespace segstab {

using EdgeIndexPair = std::pair<std::uint32_t, std::uint32_t>;  // i < j

template <class T>
struct PlaneGraphT {
    std::vector<Pt<T>> vertices;
    std::vector<EdgeIndexPair> edges;  // canonical: i < j, sorted lexicographically

    Seg<T> segment(std::size_t e) const {
        return {vertices[edges[e].first], vertices[edges[e].second]};
    }
    std::size_t n() const { return vertices.size(); }
    std::size_t m() const { return edges.size(); }
};

using PlaneGraph = PlaneGraphT<double>;
using RatPlaneGraph = PlaneGraphT<Rational>;

namespace detail {

template <class T>
void canonicalize_edges(std::vector<EdgeIndexPair>& edges, std::size_t n) {
    for (auto& [i, j] : edges) {
        if (i == j) throw std::invalid_argument("plane graph: loop edge");
        if (i > j) std::swap(i, j);
        if (j >= n) throw std::invalid_argument("plane graph: edge index out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw std::invalid_argument("plane graph: parallel edge");
    }
}

}  // namespace detail

// Builds a canonical PlaneGraph; rejects loops, parallel edges, out-of-range
// indices and coincident vertices. Zero-length edges cannot arise once
// vertices are pairwise distinct.
template <class T>
PlaneGraphT<T> make_plane_graph(std::vector<Pt<T>> vertices, std::vector<EdgeIndexPair> edges) {
    detail::canonicalize_edges<T>(edges, vertices.size());
    std::vector<std::size_t> order(vertices.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return vertices[a] < vertices[b]; });
    for (std::size_t k = 1; k < order.size(); ++k) {
        if (vertices[order[k - 1]] == vertices[order[k]]) {
            throw std::invalid_argument("plane graph: coincident vertices");
        }
    }
    return PlaneGraphT<T>{std::move(vertices), std::move(edges)};
}

// Exhaustive exact check that no two edges meet outside a shared endpoint.
// Returns the first offending edge pair, or nullopt for a valid embedding.
template <class T>
std::optional<std::pair<std::size_t, std::size_t>> find_edge_crossing(const PlaneGraphT<T>& g) {
    for (std::size_t e = 0; e < g.m(); ++e) {
        const auto [ea, eb] = g.edges[e];
        for (std::size_t f = e + 1; f < g.m(); ++f) {
            const auto [fa, fb] = g.edges[f];
            const bool share_a = (ea == fa || ea == fb);
            const bool share_b = (eb == fa || eb == fb);
            const auto& A = g.vertices[ea];
            const auto& B = g.vertices[eb];
            const auto& C = g.vertices[fa];
            const auto& D = g.vertices[fb];
            if (share_a || share_b) {
                // Shared endpoint: only a collinear overlap can be invalid.
                if (orientation(A, B, C) == Orient::collinear &&
                    orientation(A, B, D) == Orient::collinear) {
                    const Pt<T>& shared = share_a ? A : B;
                    const Pt<T>& tip_e = share_a ? B : A;
                    const Pt<T>& tip_f = (fa == (share_a ? ea : eb)) ? D : C;
                    if (detail::collinear_on_segment(shared, tip_e, tip_f) ||
                        detail::collinear_on_segment(shared, tip_f, tip_e)) {
                        return std::make_pair(e, f);
                    }
                }
                continue;
            }
            if (segments_intersect(A, B, C, D)) return std::make_pair(e, f);
        }
    }
    return std::nullopt;
}

struct EdgeStats {
    double d_min = 0.0;
    double d_max = 0.0;
    double mu = 1.0;                     // d_max / d_min
    std::vector<double> aspect_ratios;  // per edge: 1 + d(e) / (2r)
};

inline EdgeStats edge_stats(const PlaneGraph& g, double r) {
    if (r <= 0) throw std::invalid_argument("edge_stats: r must be positive");
    if (g.m() == 0) throw std::invalid_argument("edge_stats: graph has no edges");
    EdgeStats st;
    st.d_min = std::numeric_limits<double>::infinity();
    st.d_max = 0.0;
    st.aspect_ratios.reserve(g.m());
    for (std::size_t e = 0; e < g.m(); ++e) {
        const double len = segment_length(g.segment(e));
        st.d_min = std::min(st.d_min, len);
        st.d_max = std::max(st.d_max, len);
        st.aspect_ratios.push_back(1.0 + len / (2.0 * r));
    }
    st.mu = st.d_max / st.d_min;
    return st;
}

inline BBox graph_bbox(const PlaneGraph& g) {
    return bounding_box(g.vertices.begin(), g.vertices.end());
}

inline Tolerance default_tolerance(const PlaneGraph& g) {
    return Tolerance::for_diameter(std::max(graph_bbox(g).diagonal(), 1.0e-6));
}

}  // namespace segstab
