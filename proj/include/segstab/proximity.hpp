#pragma once

// The instance classes: Delaunay triangulation, Gabriel graph, relative
// neighbourhood graph, Euclidean minimum spanning tree, nearest-neighbour
// graph. Gabriel/RNG/EMST are computed by filtering Delaunay edges; when
// delaunay() rejects a degenerate input they fall back to the definition
// applied to all pairs (size-guarded, exact predicates).

#include <numeric>

#include "segstab/delaunay.hpp"

namespace segstab {

namespace detail {

inline constexpr std::size_t kBruteForceLimit = 1024;

struct Dsu {
    std::vector<std::uint32_t> parent;
    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

// Closed diametral disk of (u, v) contains no other point of pts. A point on
// the circle itself (right angle) counts as contained and kills the edge.
template <class T>
bool diametral_disk_empty(const std::vector<Pt<T>>& pts, std::uint32_t u, std::uint32_t v) {
    for (std::uint32_t w = 0; w < pts.size(); ++w) {
        if (w == u || w == v) continue;
        if (diametral_side(pts[u], pts[v], pts[w]) <= 0) return false;
    }
    return true;
}

// No w with max(|u-w|, |v-w|) < |u-v| (strict lune test).
template <class T>
bool lune_empty(const std::vector<Pt<T>>& pts, std::uint32_t u, std::uint32_t v) {
    for (std::uint32_t w = 0; w < pts.size(); ++w) {
        if (w == u || w == v) continue;
        if (compare_sq_dist(pts[u], pts[w], pts[u], pts[v]) < 0 &&
            compare_sq_dist(pts[v], pts[w], pts[u], pts[v]) < 0) {
            return false;
        }
    }
    return true;
}

template <class T>
std::vector<EdgeIndexPair> all_pairs(std::size_t n) {
    if (n > kBruteForceLimit) {
        throw GuardExceeded("proximity: brute-force fallback limited to 1024 points");
    }
    std::vector<EdgeIndexPair> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    return pairs;
}

// Delaunay edges when the input is in general position, otherwise every pair.
template <class T>
std::vector<EdgeIndexPair> superset_edges(const std::vector<Pt<T>>& pts, std::uint64_t seed) {
    try {
        return delaunay(pts, DelaunayOptions{DegeneracyPolicy::reject, seed}).graph.edges;
    } catch (const DegeneracyErrorT<T>&) {
        return all_pairs<T>(pts.size());
    }
}

template <class T>
std::vector<EdgeIndexPair> kruskal(const std::vector<Pt<T>>& pts,
                                   std::vector<EdgeIndexPair> pool) {
    // Ties broken by lexicographic edge index for deterministic output.
    std::sort(pool.begin(), pool.end(), [&](const EdgeIndexPair& a, const EdgeIndexPair& b) {
        const int c = compare_sq_dist(pts[a.first], pts[a.second], pts[b.first], pts[b.second]);
        if (c != 0) return c < 0;
        return a < b;
    });
    Dsu dsu(pts.size());
    std::vector<EdgeIndexPair> tree;
    for (const auto& e : pool) {
        if (dsu.unite(e.first, e.second)) tree.push_back(e);
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

}  // namespace detail

template <class T>
PlaneGraphT<T> gabriel(const std::vector<Pt<T>>& pts, std::uint64_t seed = 1) {
    std::vector<EdgeIndexPair> edges;
    for (const auto& e : detail::superset_edges(pts, seed)) {
        if (detail::diametral_disk_empty(pts, e.first, e.second)) edges.push_back(e);
    }
    return PlaneGraphT<T>{pts, std::move(edges)};
}

template <class T>
PlaneGraphT<T> rng(const std::vector<Pt<T>>& pts, std::uint64_t seed = 1) {
    std::vector<EdgeIndexPair> edges;
    for (const auto& e : detail::superset_edges(pts, seed)) {
        if (detail::lune_empty(pts, e.first, e.second)) edges.push_back(e);
    }
    return PlaneGraphT<T>{pts, std::move(edges)};
}

template <class T>
PlaneGraphT<T> emst(const std::vector<Pt<T>>& pts, std::uint64_t seed = 1) {
    if (pts.size() < 2) return PlaneGraphT<T>{pts, {}};
    return PlaneGraphT<T>{pts, detail::kruskal(pts, detail::superset_edges(pts, seed))};
}

// Undirected union of nearest-neighbour links; distance ties pick the
// lexicographically smallest neighbour point.
template <class T>
PlaneGraphT<T> nng(const std::vector<Pt<T>>& pts) {
    std::vector<EdgeIndexPair> edges;
    for (std::uint32_t i = 0; i < pts.size(); ++i) {
        std::optional<std::uint32_t> best;
        for (std::uint32_t j = 0; j < pts.size(); ++j) {
            if (j == i) continue;
            if (!best) {
                best = j;
                continue;
            }
            const int c = compare_sq_dist(pts[i], pts[j], pts[i], pts[*best]);
            if (c < 0 || (c == 0 && pts[j] < pts[*best])) best = j;
        }
        if (best) edges.emplace_back(std::min(i, *best), std::max(i, *best));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return PlaneGraphT<T>{pts, std::move(edges)};
}

enum class GraphClass { delaunay, gabriel, rng, emst, nng };

inline const char* to_string(GraphClass c) {
    switch (c) {
        case GraphClass::delaunay: return "delaunay";
        case GraphClass::gabriel: return "gabriel";
        case GraphClass::rng: return "rng";
        case GraphClass::emst: return "emst";
        case GraphClass::nng: return "nng";
    }
    return "?";
}

inline std::optional<GraphClass> graph_class_from(const std::string& s) {
    if (s == "delaunay") return GraphClass::delaunay;
    if (s == "gabriel") return GraphClass::gabriel;
    if (s == "rng") return GraphClass::rng;
    if (s == "emst") return GraphClass::emst;
    if (s == "nng") return GraphClass::nng;
    return std::nullopt;
}

template <class T>
PlaneGraphT<T> build_graph(GraphClass c, const std::vector<Pt<T>>& pts, std::uint64_t seed = 1) {
    switch (c) {
        case GraphClass::delaunay:
            return delaunay(pts, DelaunayOptions{DegeneracyPolicy::reject, seed}).graph;
        case GraphClass::gabriel: return gabriel(pts, seed);
        case GraphClass::rng: return rng(pts, seed);
        case GraphClass::emst: return emst(pts, seed);
        case GraphClass::nng: return nng(pts);
    }
    throw std::invalid_argument("unknown graph class");
}

}  // namespace segstab
