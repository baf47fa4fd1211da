#pragma once

// File formats, instance generators, SVG rendering and the bench harness.
// Instances and solutions are single JSON documents; exact-rational instances
// store every coordinate (and r) as a "num/den" string, everything else uses
// doubles. Bench emits one CSV row per (instance, algorithm) run.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "segstab/hardness.hpp"
#include "segstab/minimax.hpp"
#include "segstab/proximity.hpp"
#include "segstab/solvers.hpp"

namespace segstab {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

inline std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(q) << "/" << boost::multiprecision::denominator(q);
    return os.str();
}

inline Rational rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        return Rational(boost::multiprecision::cpp_int(s));
    }
    const boost::multiprecision::cpp_int num(s.substr(0, slash));
    const boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    return Rational(num, den);
}

// ---------------------------------------------------------------------------
// Instance files

struct Instance {
    double r = 1.0;
    PlaneGraph graph;  // double view, always populated
    bool exact = false;
    Rational rat_r;
    RatPlaneGraph rat_graph;  // populated when exact
    json meta = json::object();
};

inline json to_json(const Instance& inst) {
    json j;
    j["version"] = kFormatVersion;
    j["meta"] = inst.meta;
    json edges = json::array();
    for (const auto& [a, b] : inst.graph.edges) edges.push_back({a, b});
    j["edges"] = std::move(edges);
    json verts = json::array();
    if (inst.exact) {
        j["r"] = to_string(inst.rat_r);
        for (const auto& v : inst.rat_graph.vertices) {
            verts.push_back({to_string(v.x), to_string(v.y)});
        }
    } else {
        j["r"] = inst.r;
        for (const auto& v : inst.graph.vertices) verts.push_back({v.x, v.y});
    }
    j["vertices"] = std::move(verts);
    return j;
}

inline Instance instance_from_json(const json& j) {
    Instance inst;
    if (j.value("version", kFormatVersion) != kFormatVersion) {
        throw std::invalid_argument("instance: unsupported format version");
    }
    inst.meta = j.value("meta", json::object());
    std::vector<EdgeIndexPair> edges;
    for (const auto& e : j.at("edges")) {
        edges.emplace_back(e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>());
    }
    const json& verts = j.at("vertices");
    inst.exact = j.at("r").is_string() ||
                 (!verts.empty() && verts.front().at(0).is_string());
    if (inst.exact) {
        std::vector<RatPoint> pts;
        for (const auto& v : verts) {
            pts.push_back({rational_from_string(v.at(0).get<std::string>()),
                           rational_from_string(v.at(1).get<std::string>())});
        }
        inst.rat_r = j.at("r").is_string() ? rational_from_string(j.at("r").get<std::string>())
                                           : Rational(j.at("r").get<double>());
        inst.rat_graph = make_plane_graph<Rational>(pts, edges);
        std::vector<Point> dpts;
        for (const auto& p : pts) dpts.push_back(to_point(p));
        inst.graph = PlaneGraph{std::move(dpts), inst.rat_graph.edges};
        inst.r = to_double(inst.rat_r);
    } else {
        std::vector<Point> pts;
        for (const auto& v : verts) pts.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
        for (const auto& p : pts) {
            if (!finite(p)) throw std::invalid_argument("instance: non-finite coordinate");
        }
        inst.graph = make_plane_graph<double>(std::move(pts), std::move(edges));
        inst.r = j.at("r").get<double>();
    }
    if (!(inst.r > 0)) throw std::invalid_argument("instance: r must be positive");
    return inst;
}

inline Instance from_reduction(const ReductionInstance& red) {
    Instance inst;
    inst.exact = true;
    inst.rat_r = red.r;
    inst.r = to_double(red.r);
    inst.rat_graph = red.graph;
    std::vector<Point> dpts;
    for (const auto& p : red.graph.vertices) dpts.push_back(to_point(p));
    inst.graph = PlaneGraph{std::move(dpts), red.graph.edges};
    inst.meta["generator"] = "reduce-cdc";
    inst.meta["seed"] = red.seed;
    inst.meta["r0"] = red.r0;
    inst.meta["delta"] = to_string(red.delta);
    inst.meta["cell"] = to_string(red.cell);
    json dp = json::array();
    for (const auto& p : red.d_points) dp.push_back({p.x, p.y});
    inst.meta["d_points"] = std::move(dp);
    inst.meta["gadget_edges"] = red.gadget_edges;
    inst.meta["d_min"] = red.d_min;
    inst.meta["d_max"] = red.d_max;
    inst.meta["mu"] = red.mu;
    inst.meta["r_le_dmax"] = red.r_le_dmax;
    return inst;
}

// ---------------------------------------------------------------------------
// Solution files

struct SolutionFile {
    double r = 1.0;
    std::vector<Point> centers;
    std::string algorithm;
    std::vector<std::uint32_t> certificate;
    json stats = json::object();
};

inline json to_json(const SolutionFile& sol) {
    json j;
    j["version"] = kFormatVersion;
    j["r"] = sol.r;
    json centers = json::array();
    for (const auto& c : sol.centers) centers.push_back({c.x, c.y});
    j["centers"] = std::move(centers);
    j["algorithm"] = sol.algorithm;
    j["certificate"] = sol.certificate;
    j["stats"] = sol.stats;
    return j;
}

inline SolutionFile solution_from_json(const json& j) {
    SolutionFile sol;
    if (j.value("version", kFormatVersion) != kFormatVersion) {
        throw std::invalid_argument("solution: unsupported format version");
    }
    sol.r = j.at("r").get<double>();
    for (const auto& c : j.at("centers")) {
        sol.centers.push_back({c.at(0).get<double>(), c.at(1).get<double>()});
    }
    sol.algorithm = j.value("algorithm", "");
    if (j.contains("certificate")) {
        sol.certificate = j.at("certificate").get<std::vector<std::uint32_t>>();
    }
    sol.stats = j.value("stats", json::object());
    return sol;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// Generators

enum class PointDistribution { unit_square, unit_disk, clustered };

inline std::optional<PointDistribution> distribution_from(const std::string& s) {
    if (s == "unit-square") return PointDistribution::unit_square;
    if (s == "unit-disk") return PointDistribution::unit_disk;
    if (s == "clustered") return PointDistribution::clustered;
    return std::nullopt;
}

inline const char* to_string(PointDistribution d) {
    switch (d) {
        case PointDistribution::unit_square: return "unit-square";
        case PointDistribution::unit_disk: return "unit-disk";
        case PointDistribution::clustered: return "clustered";
    }
    return "?";
}

namespace detail {

inline std::vector<Point> sample_points(PointDistribution dist, int n, SplitMix64& rng) {
    std::vector<Point> pts;
    pts.reserve(n);
    switch (dist) {
        case PointDistribution::unit_square:
            for (int i = 0; i < n; ++i) pts.push_back({rng.next_double(), rng.next_double()});
            break;
        case PointDistribution::unit_disk:
            for (int i = 0; i < n; ++i) {
                const double rho = std::sqrt(rng.next_double());
                const double ang = 2.0 * std::numbers::pi * rng.next_double();
                pts.push_back({rho * std::cos(ang), rho * std::sin(ang)});
            }
            break;
        case PointDistribution::clustered: {
            const int k = std::max(1, n / 16);
            std::vector<Point> hubs;
            for (int i = 0; i < k; ++i) hubs.push_back({rng.next_double(), rng.next_double()});
            for (int i = 0; i < n; ++i) {
                const Point& hub = hubs[static_cast<std::size_t>(rng.next_int(0, k - 1))];
                const double u1 = std::max(rng.next_double(), 1e-12);
                const double u2 = rng.next_double();
                const double mag = 0.04 * std::sqrt(-2.0 * std::log(u1));
                pts.push_back({hub.x + mag * std::cos(2.0 * std::numbers::pi * u2),
                               hub.y + mag * std::sin(2.0 * std::numbers::pi * u2)});
            }
            break;
        }
    }
    return pts;
}

}  // namespace detail

// Seeded, reproducible instance generator. r defaults to the r_frac
// interpolation between d_min and d_max (the hardness regime); an explicit r
// wins. Degenerate samples (never seen in practice for random doubles) are
// redrawn from the same stream.
inline Instance generate(GraphClass cls, int n, PointDistribution dist, std::uint64_t seed,
                         std::optional<double> r = std::nullopt, double r_frac = 0.5) {
    if (n < 2) throw std::invalid_argument("generate: n must be at least 2");
    SplitMix64 rng(seed);
    Instance inst;
    for (int attempt = 0;; ++attempt) {
        if (attempt >= 16) throw std::runtime_error("generate: degenerate samples persist");
        try {
            inst.graph = build_graph<double>(cls, detail::sample_points(dist, n, rng), seed);
            break;
        } catch (const DegeneracyErrorT<double>&) {
            continue;
        }
    }
    double d_min = std::numeric_limits<double>::infinity(), d_max = 0.0;
    for (std::size_t e = 0; e < inst.graph.m(); ++e) {
        const double len = segment_length(inst.graph.segment(e));
        d_min = std::min(d_min, len);
        d_max = std::max(d_max, len);
    }
    inst.r = r ? *r : d_min + r_frac * (d_max - d_min);
    inst.meta["generator"] = "segstab-gen";
    inst.meta["class"] = to_string(cls);
    inst.meta["distribution"] = to_string(dist);
    inst.meta["n"] = n;
    inst.meta["seed"] = seed;
    inst.meta["d_min"] = d_min;
    inst.meta["d_max"] = d_max;
    inst.meta["mu"] = d_max / d_min;
    return inst;
}

// ---------------------------------------------------------------------------
// Solving and verification glue shared by the CLI and bench

struct SolveSpec {
    std::string algorithm = "exact";  // exact | approx-endpoints | approx-midpoints | grid
    ExactMode mode = ExactMode::branch_and_bound;
    std::optional<std::size_t> budget;
    std::optional<double> lambda;
    std::optional<double> r_override;
    std::optional<double> restrict_delta;  // vertex-restricted candidate filter
    std::optional<double> tol_override;
};

struct SolveReport {
    StabbingSolution solution;
    bool budget_exceeded = false;
    double ms = 0.0;
};

inline SolveReport solve_instance(const Instance& inst, const SolveSpec& spec) {
    const double r = spec.r_override.value_or(inst.r);
    const Tolerance tol =
        spec.tol_override ? Tolerance{*spec.tol_override} : default_tolerance(inst.graph);
    SolveReport rep;
    const auto t0 = std::chrono::steady_clock::now();
    if (spec.algorithm == "exact") {
        CandidateSet cands = candidate_centers(inst.graph, r, tol);
        if (spec.restrict_delta) {
            cands = restrict_candidates(cands, inst.graph, *spec.restrict_delta, tol);
        }
        const auto out =
            exact_min_stab(inst.graph, r, cands, tol, ExactOptions{spec.budget, spec.mode});
        if (out.status == ExactOutcome::Status::budget_exceeded) {
            rep.budget_exceeded = true;
        } else {
            rep.solution = out.solution;
        }
    } else if (spec.algorithm == "approx-endpoints") {
        rep.solution = ipgd_approx(inst.graph, r, AnchorKind::endpoints, spec.lambda);
    } else if (spec.algorithm == "approx-midpoints") {
        rep.solution = ipgd_approx(inst.graph, r, AnchorKind::midpoints, spec.lambda);
    } else if (spec.algorithm == "grid") {
        rep.solution = grid_cover(inst.graph, r, tol);
    } else {
        throw std::invalid_argument("unknown algorithm: " + spec.algorithm);
    }
    rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                 .count();
    return rep;
}

struct VerifyOutcome {
    bool pass = false;
    std::string message;
};

inline VerifyOutcome verify_solution(const Instance& inst, const SolutionFile& sol,
                                     std::optional<double> tol_override = std::nullopt) {
    const Tolerance tol =
        tol_override ? Tolerance{*tol_override} : default_tolerance(inst.graph);
    if (inst.graph.m() > 0 && sol.centers.empty()) {
        return {false, "no centers for a nonempty edge set"};
    }
    if (const auto v = check_stabbing(inst.graph, sol.r, sol.centers, tol)) {
        std::ostringstream os;
        os << "edge " << v->index << " unstabbed (distance " << v->distance << " > r = " << sol.r
           << ")";
        return {false, os.str()};
    }
    if (!sol.certificate.empty()) {
        if (sol.certificate.size() != inst.graph.m()) {
            return {false, "certificate length mismatch"};
        }
        for (std::size_t e = 0; e < inst.graph.m(); ++e) {
            if (sol.certificate[e] >= sol.centers.size()) {
                return {false, "certificate index out of range"};
            }
            if (!stabs(sol.centers[sol.certificate[e]], sol.r, inst.graph.segment(e), tol)) {
                std::ostringstream os;
                os << "certificate for edge " << e << " does not stab it";
                return {false, os.str()};
            }
        }
    }
    return {true, "feasible"};
}

// ---------------------------------------------------------------------------
// SVG rendering

namespace detail {

inline std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(9) << v;
    return os.str();
}

}  // namespace detail

// Deterministic figure: edges, stadium outlines at the instance radius, and
// (optionally) solution disks with their centers.
inline std::string render_svg(const Instance& inst, const SolutionFile* sol = nullptr) {
    const double r = inst.r;
    BBox box = graph_bbox(inst.graph);
    if (sol) {
        for (const auto& c : sol->centers) box.expand(c);
    }
    const double margin = r + 0.05 * std::max(box.diagonal(), 1.0);
    const double w = (box.hi.x - box.lo.x) + 2 * margin;
    const double h = (box.hi.y - box.lo.y) + 2 * margin;
    using detail::fmt;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(box.lo.x - margin) << " "
        << fmt(box.lo.y - margin) << " " << fmt(w) << " " << fmt(h) << "\">\n";
    svg << "<rect x=\"" << fmt(box.lo.x - margin) << "\" y=\"" << fmt(box.lo.y - margin)
        << "\" width=\"" << fmt(w) << "\" height=\"" << fmt(h) << "\" fill=\"white\"/>\n";
    const double stroke = 0.004 * std::max(w, h);

    for (std::size_t e = 0; e < inst.graph.m(); ++e) {
        const StadiumBoundary b = stadium_boundary(Stadium{inst.graph.segment(e), r});
        svg << "<path d=\"M " << fmt(b.sides[0].a.x) << " " << fmt(b.sides[0].a.y) << " L "
            << fmt(b.sides[0].b.x) << " " << fmt(b.sides[0].b.y) << " A " << fmt(r) << " "
            << fmt(r) << " 0 0 0 " << fmt(b.sides[1].b.x) << " " << fmt(b.sides[1].b.y) << " L "
            << fmt(b.sides[1].a.x) << " " << fmt(b.sides[1].a.y) << " A " << fmt(r) << " "
            << fmt(r) << " 0 0 0 " << fmt(b.sides[0].a.x) << " " << fmt(b.sides[0].a.y)
            << " Z\" fill=\"none\" stroke=\"#7aa6c2\" stroke-width=\"" << fmt(stroke) << "\"/>\n";
    }
    for (std::size_t e = 0; e < inst.graph.m(); ++e) {
        const Segment s = inst.graph.segment(e);
        svg << "<line x1=\"" << fmt(s.a.x) << "\" y1=\"" << fmt(s.a.y) << "\" x2=\""
            << fmt(s.b.x) << "\" y2=\"" << fmt(s.b.y)
            << "\" stroke=\"black\" stroke-width=\"" << fmt(1.5 * stroke) << "\"/>\n";
    }
    if (sol) {
        for (const auto& c : sol->centers) {
            svg << "<circle cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(c.y) << "\" r=\""
                << fmt(sol->r) << "\" fill=\"#d0454555\" stroke=\"#d04545\" stroke-width=\""
                << fmt(stroke) << "\"/>\n";
            svg << "<circle cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(c.y) << "\" r=\""
                << fmt(2.0 * stroke) << "\" fill=\"#d04545\"/>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

// ---------------------------------------------------------------------------
// Bench harness

struct BenchConfig {
    std::vector<GraphClass> classes{GraphClass::delaunay};
    std::vector<int> sizes{64, 128, 256};
    int seeds_per_size = 3;
    std::uint64_t seed0 = 1;
    PointDistribution distribution = PointDistribution::unit_square;
    double r_frac = 0.5;
    std::vector<std::string> algorithms{"approx-endpoints", "grid"};
    std::size_t exact_max_edges = 12;  // run the exact reference up to this size
};

inline std::string run_bench_csv(const BenchConfig& cfg) {
    std::ostringstream csv;
    csv << "instance,n,m,d_min,d_max,mu,R,algorithm,count,opt,ratio,ms\n";
    for (const GraphClass cls : cfg.classes) {
        for (const int n : cfg.sizes) {
            for (int s = 0; s < cfg.seeds_per_size; ++s) {
                const std::uint64_t seed = cfg.seed0 + static_cast<std::uint64_t>(s);
                const Instance inst =
                    generate(cls, n, cfg.distribution, seed, std::nullopt, cfg.r_frac);
                const EdgeStats st = edge_stats(inst.graph, inst.r);
                std::vector<Segment> segs(inst.graph.m());
                for (std::size_t e = 0; e < inst.graph.m(); ++e) segs[e] = inst.graph.segment(e);
                const double R =
                    smallest_stabbing_disk(segs, default_tolerance(inst.graph)).radius;

                std::optional<std::size_t> opt;
                if (inst.graph.m() <= cfg.exact_max_edges) {
                    SolveSpec spec;
                    spec.algorithm = "exact";
                    opt = solve_instance(inst, spec).solution.centers.size();
                }
                for (const std::string& algo : cfg.algorithms) {
                    SolveSpec spec;
                    spec.algorithm = algo;
                    const SolveReport rep = solve_instance(inst, spec);
                    csv << to_string(cls) << "-" << n << "-" << seed << "," << n << ","
                        << inst.graph.m() << "," << st.d_min << "," << st.d_max << "," << st.mu
                        << "," << R << "," << algo << "," << rep.solution.centers.size() << ",";
                    if (opt) {
                        csv << *opt << ","
                            << static_cast<double>(rep.solution.centers.size()) /
                                   static_cast<double>(*opt);
                    } else {
                        csv << ",";
                    }
                    csv << "," << rep.ms << "\n";
                }
            }
        }
    }
    return csv.str();
}

}  // namespace segstab
