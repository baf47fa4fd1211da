// segstab command line: instance generation, solving, verification, SVG
// rendering, benchmarking, and the hardness-lab entry points.
//
// Exit codes: 0 success, 2 infeasible / failed verification, 3 guard exceeded.

#include <iostream>

#include <CLI11.hpp>

#include "segstab/segstab.hpp"

namespace {

using namespace segstab;

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::vector<Pt<long long>> parse_lattice_points(const std::string& inline_spec,
                                                const std::string& file) {
    std::vector<Pt<long long>> pts;
    if (!file.empty()) {
        const json j = load_json_file(file);
        for (const auto& p : j.at("points")) {
            pts.push_back({p.at(0).get<long long>(), p.at(1).get<long long>()});
        }
        return pts;
    }
    std::istringstream in(inline_spec);
    std::string tok;
    while (std::getline(in, tok, ';')) {
        const auto comma = tok.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("points: expected x,y;x,y");
        pts.push_back({std::stoll(tok.substr(0, comma)), std::stoll(tok.substr(comma + 1))});
    }
    if (pts.empty()) throw std::invalid_argument("points: empty set");
    return pts;
}

GraphClass parse_class(const std::string& s) {
    const auto c = graph_class_from(s);
    if (!c) throw CLI::ValidationError("--class", "unknown graph class: " + s);
    return *c;
}

PointDistribution parse_dist(const std::string& s) {
    const auto d = distribution_from(s);
    if (!d) throw CLI::ValidationError("--dist", "unknown distribution: " + s);
    return *d;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"stab the edges of a plane graph with a minimum number of radius-r disks"};
    app.require_subcommand(1);

    // --- gen
    auto* gen = app.add_subcommand("gen", "generate a random proximity-graph instance");
    std::string gen_class = "delaunay", gen_dist = "unit-square", gen_out = "-";
    int gen_n = 32;
    std::uint64_t gen_seed = 1;
    double gen_rfrac = 0.5;
    std::optional<double> gen_r;
    gen->add_option("--class", gen_class, "delaunay|gabriel|rng|emst|nng");
    gen->add_option("--n", gen_n, "number of points")->required();
    gen->add_option("--dist", gen_dist, "unit-square|unit-disk|clustered");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--r", gen_r, "explicit stabbing radius");
    gen->add_option("--r-frac", gen_rfrac, "r = d_min + frac (d_max - d_min), default 0.5");
    gen->add_option("--out", gen_out, "output file (- for stdout)");

    // --- solve
    auto* solve = app.add_subcommand("solve", "solve an instance");
    std::string solve_in, solve_out = "-", solve_algo = "exact", solve_mode = "bnb";
    std::optional<double> solve_lambda, solve_r, solve_tol, solve_delta;
    std::optional<std::size_t> solve_budget;
    solve->add_option("--in", solve_in, "instance file")->required();
    solve->add_option("--algorithm", solve_algo, "exact|approx-endpoints|approx-midpoints|grid");
    solve->add_option("--mode", solve_mode, "exact search mode: bnb|sweep");
    solve->add_option("--budget", solve_budget, "exact: report 'optimum > budget' beyond this");
    solve->add_option("--lambda", solve_lambda, "approx: declared aspect parameter");
    solve->add_option("--r-override", solve_r, "solve at this radius instead of the instance r");
    solve->add_option("--restrict-delta", solve_delta,
                      "exact: restrict centers to delta-balls around vertices");
    solve->add_option("--tol", solve_tol, "metric tolerance override");
    solve->add_option("--out", solve_out, "output file (- for stdout)");

    // --- verify
    auto* verify = app.add_subcommand("verify", "verify a solution against an instance");
    std::string verify_in, verify_sol;
    std::optional<double> verify_tol;
    verify->add_option("--in", verify_in, "instance file")->required();
    verify->add_option("--solution", verify_sol, "solution file")->required();
    verify->add_option("--tol", verify_tol, "metric tolerance override");

    // --- render
    auto* render = app.add_subcommand("render", "render an instance (and solution) to SVG");
    std::string render_in, render_sol, render_out = "-";
    render->add_option("--in", render_in, "instance file")->required();
    render->add_option("--solution", render_sol, "optional solution file");
    render->add_option("--out", render_out, "output SVG file (- for stdout)");

    // --- bench
    auto* bench = app.add_subcommand("bench", "run a benchmark suite, emit CSV");
    std::string bench_classes = "delaunay", bench_algos = "approx-endpoints,grid";
    std::string bench_sizes = "64,128,256", bench_dist = "unit-square", bench_out = "-";
    int bench_seeds = 3;
    std::uint64_t bench_seed = 1;
    double bench_rfrac = 0.5;
    std::size_t bench_exact_max = 12;
    bench->add_option("--classes", bench_classes, "comma list of graph classes");
    bench->add_option("--sizes", bench_sizes, "comma list of point counts");
    bench->add_option("--seeds", bench_seeds, "seeds per size");
    bench->add_option("--seed", bench_seed, "first seed");
    bench->add_option("--dist", bench_dist, "point distribution");
    bench->add_option("--r-frac", bench_rfrac, "radius interpolation");
    bench->add_option("--algorithms", bench_algos, "comma list of algorithms");
    bench->add_option("--exact-max-edges", bench_exact_max,
                      "run the exact reference when |E| is at most this");
    bench->add_option("--out", bench_out, "output CSV (- for stdout)");

    // --- reduce-cdc
    auto* reduce = app.add_subcommand("reduce-cdc",
                                      "build a disk-cover-to-stabbing gadget instance");
    std::string red_points, red_file, red_out = "-", red_delta;
    int red_r0 = 1;
    std::uint64_t red_seed = 1;
    bool red_verify = false;
    reduce->add_option("--points", red_points, "inline lattice points: x,y;x,y");
    reduce->add_option("--in", red_file, "JSON file with {\"points\": [[x,y],...]}");
    reduce->add_option("--r0", red_r0, "cover radius (positive integer)");
    reduce->add_option("--seed", red_seed, "endpoint draw seed");
    reduce->add_option("--delta", red_delta, "override the gadget half-width (num/den)");
    reduce->add_flag("--verify", red_verify, "also run the equivalence check (|D| <= 8)");
    reduce->add_option("--out", red_out, "output instance file (- for stdout)");

    // --- verify-lemma1
    auto* lemma = app.add_subcommand("verify-lemma1",
                                     "exhaustively check the lattice circle distance bound");
    int lemma_r = 1;
    lemma->add_option("--r", lemma_r, "integer radius (guarded to r <= 5)")->required();

    // --- stats
    auto* stats = app.add_subcommand("stats", "print instance statistics");
    std::string stats_in;
    std::optional<double> stats_r;
    stats->add_option("--in", stats_in, "instance file")->required();
    stats->add_option("--r", stats_r, "radius for aspect ratios (default: instance r)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (*gen) {
        const Instance inst = generate(parse_class(gen_class), gen_n, parse_dist(gen_dist),
                                       gen_seed, gen_r, gen_rfrac);
        write_text(gen_out, to_json(inst).dump(2) + "\n");
        return 0;
    }

    if (*solve) {
        const Instance inst = instance_from_json(load_json_file(solve_in));
        SolveSpec spec;
        spec.algorithm = solve_algo;
        spec.mode = solve_mode == "sweep" ? ExactMode::sweep : ExactMode::branch_and_bound;
        spec.budget = solve_budget;
        spec.lambda = solve_lambda;
        spec.r_override = solve_r;
        spec.restrict_delta = solve_delta;
        spec.tol_override = solve_tol;
        const SolveReport rep = solve_instance(inst, spec);
        if (rep.budget_exceeded) {
            json j{{"status", "optimum > budget"}, {"budget", *solve_budget}};
            write_text(solve_out, j.dump(2) + "\n");
            std::cerr << "optimum > budget\n";
            return 0;
        }
        SolutionFile sol;
        sol.r = rep.solution.radius;
        sol.centers = rep.solution.centers;
        sol.algorithm = rep.solution.algorithm;
        sol.certificate = rep.solution.certificate;
        sol.stats["count"] = rep.solution.centers.size();
        sol.stats["ms"] = rep.ms;
        sol.stats["factor_guarantee"] = rep.solution.factor_guarantee;
        if (!rep.solution.factor_guarantee) {
            std::cerr << "warning: r < d_max / (2 lambda); the approximation factor guarantee "
                         "lapses (the solution is still feasible)\n";
        }
        write_text(solve_out, to_json(sol).dump(2) + "\n");
        return 0;
    }

    if (*verify) {
        const Instance inst = instance_from_json(load_json_file(verify_in));
        const SolutionFile sol = solution_from_json(load_json_file(verify_sol));
        const VerifyOutcome out = verify_solution(inst, sol, verify_tol);
        std::cout << (out.pass ? "PASS" : "FAIL") << ": " << out.message << "\n";
        return out.pass ? 0 : 2;
    }

    if (*render) {
        const Instance inst = instance_from_json(load_json_file(render_in));
        std::optional<SolutionFile> sol;
        if (!render_sol.empty()) sol = solution_from_json(load_json_file(render_sol));
        write_text(render_out, render_svg(inst, sol ? &*sol : nullptr));
        return 0;
    }

    if (*bench) {
        BenchConfig cfg;
        cfg.classes.clear();
        for (const auto& c : split_csv(bench_classes)) cfg.classes.push_back(parse_class(c));
        cfg.sizes.clear();
        for (const auto& s : split_csv(bench_sizes)) cfg.sizes.push_back(std::stoi(s));
        cfg.seeds_per_size = bench_seeds;
        cfg.seed0 = bench_seed;
        cfg.distribution = parse_dist(bench_dist);
        cfg.r_frac = bench_rfrac;
        cfg.algorithms = split_csv(bench_algos);
        cfg.exact_max_edges = bench_exact_max;
        write_text(bench_out, run_bench_csv(cfg));
        return 0;
    }

    if (*reduce) {
        const auto d = parse_lattice_points(red_points, red_file);
        std::optional<Rational> delta;
        if (!red_delta.empty()) delta = rational_from_string(red_delta);
        const ReductionInstance inst = reduce_cdc(d, red_r0, red_seed, delta);
        write_text(red_out, to_json(from_reduction(inst)).dump(2) + "\n");
        if (red_verify) {
            const ReductionReport rep = verify_reduction(d, red_r0, red_seed, delta);
            std::cout << "k_cdc=" << rep.k_cdc << " k_ipgd=" << rep.k_ipgd
                      << " equal=" << (rep.equal ? "yes" : "no")
                      << " forward=" << (rep.forward_ok ? "pass" : "fail")
                      << " indeterminate=" << (rep.indeterminate ? "yes" : "no") << "\n";
            if (!rep.equal || !rep.forward_ok || rep.indeterminate) return 2;
        }
        return 0;
    }

    if (*lemma) {
        const Lemma1Report rep = verify_lemma1(lemma_r);
        std::cout << "r=" << rep.r << " min_rho=" << rep.min_rho << " bound=" << rep.bound
                  << " (~" << Float50(rep.bound) << ")"
                  << " argmin: u=(" << rep.argmin[0].x << "," << rep.argmin[0].y << ") v=(0,0) w=("
                  << rep.argmin[2].x << "," << rep.argmin[2].y << ") "
                  << (rep.ok ? "OK" : "VIOLATED") << "\n";
        return rep.ok ? 0 : 2;
    }

    if (*stats) {
        const Instance inst = instance_from_json(load_json_file(stats_in));
        const double r = stats_r.value_or(inst.r);
        const EdgeStats st = edge_stats(inst.graph, r);
        std::vector<Segment> segs(inst.graph.m());
        for (std::size_t e = 0; e < inst.graph.m(); ++e) segs[e] = inst.graph.segment(e);
        const StabbingDisk disk = smallest_stabbing_disk(segs, default_tolerance(inst.graph));
        double amin = st.aspect_ratios[0], amax = st.aspect_ratios[0];
        for (const double a : st.aspect_ratios) {
            amin = std::min(amin, a);
            amax = std::max(amax, a);
        }
        std::cout << "n=" << inst.graph.n() << " m=" << inst.graph.m() << "\n"
                  << "r=" << r << (inst.exact ? " (exact-rational instance)" : "") << "\n"
                  << "d_min=" << st.d_min << " d_max=" << st.d_max << " mu=" << st.mu << "\n"
                  << "R(E)=" << disk.radius << " at (" << disk.center.x << "," << disk.center.y
                  << ")\n"
                  << "aspect ratio 1+d(e)/2r in [" << amin << ", " << amax << "]\n";
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const segstab::GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
