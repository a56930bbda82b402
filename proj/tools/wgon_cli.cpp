// wgon command line: instance generation, solving, conformance measurement,
// benchmarking, and SVG rendering. Talks to the solver exclusively through
// the C API in wgon.h.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wgon.h"

namespace {

struct PointsDeleter {
    void operator()(wg_points* p) const { wg_points_free(p); }
};
struct SolutionDeleter {
    void operator()(wg_solution* s) const { wg_solution_free(s); }
};
struct StringDeleter {
    void operator()(char* s) const { wg_string_free(s); }
};

using PointsPtr = std::unique_ptr<wg_points, PointsDeleter>;
using SolutionPtr = std::unique_ptr<wg_solution, SolutionDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void die(wg_status status) {
    std::cerr << "error (" << wg_status_name(status) << "): " << wg_last_error() << "\n";
    std::exit(static_cast<int>(status));
}

void check(wg_status status) {
    if (status != WG_OK) die(status);
}

void write_file(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content)) {
        std::cerr << "error (io-error): cannot write '" << path << "'\n";
        std::exit(static_cast<int>(WG_EIO));
    }
}

PointsPtr load_points(const std::string& path) {
    wg_points* raw = nullptr;
    check(wg_points_load(path.c_str(), &raw));
    return PointsPtr(raw);
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

struct SolveArgs {
    std::string instance_path;
    std::string objective = "min-area";
    std::string algorithm = "baseline";
    int w = 0;
    double budget = -1.0;
    std::string budget_metric = "area";
    bool parallel = false;
    int threads = 0;
    bool strict_seam = false;
    bool perturb = false;
    bool allow_large = false;
    bool experimental = false;
    std::uint64_t max_subsets = 0;
    double timeout = 0.0;
    std::string out = "-";
    std::string svg_out;
};

void add_solve_flags(CLI::App* cmd, SolveArgs& args, bool fixed_oracle) {
    cmd->add_option("instance", args.instance_path, "instance file (CSV or JSON)")->required();
    cmd->add_option("--objective", args.objective, "min-area | min-perimeter | minch | budget")
        ->default_val("min-area");
    if (!fixed_oracle)
        cmd->add_option("--algorithm", args.algorithm, "baseline | doubling | oracle")
            ->default_val("baseline");
    cmd->add_option("-w,--size", args.w, "polygon size / kept-point count");
    cmd->add_option("--budget", args.budget,
                    "budget value (twice-area units for area, length for perimeter)");
    cmd->add_option("--budget-metric", args.budget_metric, "area | perimeter")->default_val("area");
    cmd->add_flag("--parallel", args.parallel, "enable parallel mode (threads from WGON_THREADS)");
    cmd->add_option("--threads", args.threads, "explicit thread count (implies --parallel)");
    cmd->add_flag("--strict-seam", args.strict_seam, "doubling: require convex seam turns");
    cmd->add_flag("--perturb", args.perturb, "perturb degenerate inputs deterministically");
    cmd->add_flag("--allow-large", args.allow_large, "lift desk-scale size guardrails");
    cmd->add_flag("--experimental", args.experimental,
                  "unlock measured-but-unproven paths (minch via doubling)");
    cmd->add_option("--max-subsets", args.max_subsets, "oracle subset cap");
    cmd->add_option("--timeout", args.timeout, "oracle timeout in seconds");
    cmd->add_option("-o,--out", args.out, "solution file path ('-' for stdout)")->default_val("-");
    cmd->add_option("--svg-out", args.svg_out, "also write an SVG figure");
}

int run_solve_cmd(const SolveArgs& args) {
    PointsPtr pts = load_points(args.instance_path);

    wg_solve_options opts;
    wg_solve_options_init(&opts);
    opts.objective = args.objective.c_str();
    opts.algorithm = args.algorithm.c_str();
    opts.w = args.w;
    if (args.objective == "budget") {
        if (args.budget < 0) {
            std::cerr << "error (invalid-argument): budget objective needs --budget\n";
            return static_cast<int>(WG_EINVAL);
        }
        if (args.budget_metric == "area") {
            opts.has_budget_area2 = 1;
            opts.budget_area2 = static_cast<int64_t>(args.budget);
        } else if (args.budget_metric == "perimeter") {
            opts.has_budget_perimeter = 1;
            opts.budget_perimeter = args.budget;
        } else {
            std::cerr << "error (invalid-argument): budget metric must be area or perimeter\n";
            return static_cast<int>(WG_EINVAL);
        }
    }
    opts.threads = args.threads > 0 ? args.threads : (args.parallel ? 0 : 1);
    opts.strict_seam = args.strict_seam ? 1 : 0;
    opts.perturb = args.perturb ? 1 : 0;
    opts.allow_large = args.allow_large ? 1 : 0;
    opts.experimental = args.experimental ? 1 : 0;
    opts.oracle_max_subsets = args.max_subsets;
    opts.oracle_timeout_sec = args.timeout;

    wg_solution* raw = nullptr;
    check(wg_solve(pts.get(), &opts, &raw));
    SolutionPtr sol(raw);

    StringPtr json(wg_solution_to_json(sol.get()));
    write_file(args.out, json.get());

    if (!args.svg_out.empty()) {
        StringPtr svg(wg_render_svg(pts.get(), sol.get()));
        if (!svg) die(WG_EINTERNAL);
        write_file(args.svg_out, svg.get());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wgon: optimal convex w-gons, minimum-vertex hulls with outliers"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random instance in general position");
    int gen_n = 10;
    std::uint64_t gen_seed = 1;
    std::int64_t gen_range = 100;
    std::string gen_shape = "uniform";
    std::string gen_out = "-";
    gen->add_option("-n,--count", gen_n, "number of points")->required();
    gen->add_option("--seed", gen_seed, "generator seed")->default_val(1);
    gen->add_option("--range", gen_range, "coordinates land in [0, range]^2")->default_val(100);
    gen->add_option("--shape", gen_shape, "uniform | annulus | clustered")->default_val("uniform");
    gen->add_option("-o,--out", gen_out, "output path (.json for the envelope, else CSV)")
        ->default_val("-");

    // solve / oracle
    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "compute an optimal polygon");
    add_solve_flags(solve, solve_args, false);

    SolveArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "brute-force ground truth (desk scale)");
    add_solve_flags(oracle, oracle_args, true);
    oracle_args.algorithm = "oracle";

    // conformance
    auto* conf = app.add_subcommand("conformance", "measure doubling-vs-baseline agreement");
    int conf_count = 100;
    int conf_n = 10;
    std::uint64_t conf_seed = 1;
    std::int64_t conf_range = 100;
    std::vector<int> conf_ws{4};
    std::string conf_weight = "area2";
    bool conf_strict = false;
    int conf_threads = 1;
    std::string conf_out = "-";
    conf->add_option("--count", conf_count, "number of generated instances")->default_val(100);
    conf->add_option("-n,--points", conf_n, "points per instance")->default_val(10);
    conf->add_option("--seed", conf_seed, "base seed")->default_val(1);
    conf->add_option("--range", conf_range, "coordinate range")->default_val(100);
    conf->add_option("-w,--sizes", conf_ws, "polygon sizes to test")->expected(-1);
    conf->add_option("--weight", conf_weight, "area2 | perimeter | vertex-count | coverage")
        ->default_val("area2");
    conf->add_flag("--strict-seam", conf_strict, "strict seam mode");
    conf->add_option("--threads", conf_threads, "thread count (0 = auto)")->default_val(1);
    conf->add_option("-o,--out", conf_out, "report CSV path")->default_val("-");

    // bench
    auto* bench = app.add_subcommand("bench", "wall-clock scaling measurements");
    std::vector<int> bench_ns{40};
    std::vector<int> bench_ws{4, 32};
    std::string bench_objective = "min-area";
    std::vector<std::string> bench_algos{"baseline", "doubling"};
    int bench_reps = 3;
    std::uint64_t bench_seed = 7;
    std::int64_t bench_range = 100000;
    bool bench_allow_large = false;
    std::string bench_out = "-";
    bench->add_option("-n,--points", bench_ns, "instance sizes")->expected(-1);
    bench->add_option("-w,--sizes", bench_ws, "polygon sizes")->expected(-1);
    bench->add_option("--objective", bench_objective, "min-area | min-perimeter")
        ->default_val("min-area");
    bench->add_option("--algorithms", bench_algos, "algorithms to time")->expected(-1);
    bench->add_option("--reps", bench_reps, "repetitions per cell")->default_val(3);
    bench->add_option("--seed", bench_seed, "instance seed")->default_val(7);
    bench->add_option("--range", bench_range, "coordinate range")->default_val(100000);
    bench->add_flag("--allow-large", bench_allow_large, "lift guardrails");
    bench->add_option("-o,--out", bench_out, "CSV path")->default_val("-");

    // render
    auto* render = app.add_subcommand("render", "draw an instance (and a solution) as SVG");
    std::string render_instance;
    std::string render_solution;
    std::string render_out = "-";
    render->add_option("instance", render_instance, "instance file")->required();
    render->add_option("--solution", render_solution, "solution JSON to overlay");
    render->add_option("-o,--out", render_out, "SVG path")->default_val("-");

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        wg_points* raw = nullptr;
        check(wg_points_generate(gen_n, gen_seed, gen_range, gen_shape.c_str(), &raw));
        PointsPtr pts(raw);
        if (gen_out == "-") {
            StringPtr csv(wg_points_to_csv(pts.get()));
            std::cout << csv.get();
        } else {
            check(wg_points_save(pts.get(), gen_out.c_str()));
        }
        return 0;
    }

    if (solve->parsed()) return run_solve_cmd(solve_args);
    if (oracle->parsed()) {
        oracle_args.algorithm = "oracle";
        return run_solve_cmd(oracle_args);
    }

    if (conf->parsed()) {
        if (conf_ws.empty()) {
            std::cerr << "error (invalid-argument): conformance needs at least one size\n";
            return static_cast<int>(WG_EINVAL);
        }
        std::vector<PointsPtr> instances;
        std::vector<wg_points*> raw;
        for (int k = 0; k < conf_count; ++k) {
            wg_points* p = nullptr;
            check(wg_points_generate(conf_n, conf_seed + static_cast<std::uint64_t>(k), conf_range,
                                     "uniform", &p));
            instances.emplace_back(p);
            raw.push_back(p);
        }
        char* csv = nullptr;
        check(wg_conformance(raw.data(), conf_count, conf_ws.data(),
                             static_cast<int>(conf_ws.size()), conf_weight.c_str(),
                             conf_strict ? 1 : 0, conf_threads, &csv));
        StringPtr out(csv);
        write_file(conf_out, out.get());
        return 0;
    }

    if (bench->parsed()) {
        if (bench_ws.empty() || bench_ns.empty() || bench_algos.empty()) {
            std::cerr << "error (invalid-argument): bench needs sizes, point counts and algorithms\n";
            return static_cast<int>(WG_EINVAL);
        }
        std::string csv = "n,w,objective,algorithm,reps,median_ms,min_ms,max_ms\n";
        // median time per (n, w, algorithm), then growth ratios per algorithm
        struct Cell {
            int n, w;
            std::string algo;
            double med;
        };
        std::vector<Cell> cells;
        for (const int n : bench_ns) {
            wg_points* raw = nullptr;
            check(wg_points_generate(n, bench_seed, bench_range, "uniform", &raw));
            PointsPtr pts(raw);
            for (const int w : bench_ws) {
                for (const std::string& algo : bench_algos) {
                    wg_solve_options opts;
                    wg_solve_options_init(&opts);
                    opts.objective = bench_objective.c_str();
                    opts.algorithm = algo.c_str();
                    opts.w = w;
                    opts.allow_large = bench_allow_large ? 1 : 0;
                    std::vector<double> times;
                    for (int r = 0; r < bench_reps; ++r) {
                        const auto t0 = std::chrono::steady_clock::now();
                        wg_solution* sol = nullptr;
                        check(wg_solve(pts.get(), &opts, &sol));
                        wg_solution_free(sol);
                        times.push_back(std::chrono::duration<double, std::milli>(
                                            std::chrono::steady_clock::now() - t0)
                                            .count());
                    }
                    const double med = median(times);
                    char buf[160];
                    std::snprintf(buf, sizeof buf, "%d,%d,%s,%s,%d,%.3f,%.3f,%.3f\n", n, w,
                                  bench_objective.c_str(), algo.c_str(), bench_reps, med,
                                  *std::min_element(times.begin(), times.end()),
                                  *std::max_element(times.begin(), times.end()));
                    csv += buf;
                    cells.push_back({n, w, algo, med});
                }
            }
        }
        const int w_lo = *std::min_element(bench_ws.begin(), bench_ws.end());
        const int w_hi = *std::max_element(bench_ws.begin(), bench_ws.end());
        if (w_lo != w_hi) {
            csv += "ratio_rows:n,algorithm,w_hi,w_lo,t_ratio\n";
            for (const int n : bench_ns)
                for (const std::string& algo : bench_algos) {
                    double lo = 0, hi = 0;
                    for (const Cell& c : cells)
                        if (c.n == n && c.algo == algo) {
                            if (c.w == w_lo) lo = c.med;
                            if (c.w == w_hi) hi = c.med;
                        }
                    if (lo > 0) {
                        char buf[128];
                        std::snprintf(buf, sizeof buf, "ratio,%d,%s,%d,%d,%.3f\n", n, algo.c_str(),
                                      w_hi, w_lo, hi / lo);
                        csv += buf;
                    }
                }
        }
        write_file(bench_out, csv);
        return 0;
    }

    if (render->parsed()) {
        PointsPtr pts = load_points(render_instance);
        StringPtr svg;
        if (render_solution.empty()) {
            svg.reset(wg_render_svg(pts.get(), nullptr));
        } else {
            std::ifstream in(render_solution, std::ios::binary);
            if (!in) {
                std::cerr << "error (io-error): cannot open '" << render_solution << "'\n";
                return static_cast<int>(WG_EIO);
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(buf.str());
            } catch (const std::exception& e) {
                std::cerr << "error (parse-error): bad solution JSON: " << e.what() << "\n";
                return static_cast<int>(WG_EPARSE);
            }
            std::vector<int> polygon = j.value("polygon", std::vector<int>{});
            std::vector<int> outliers = j.value("outliers", std::vector<int>{});
            svg.reset(wg_render_svg_indices(pts.get(), polygon.data(),
                                            static_cast<int>(polygon.size()), outliers.data(),
                                            static_cast<int>(outliers.size())));
        }
        if (!svg) die(WG_EINTERNAL);
        write_file(render_out, svg.get());
        return 0;
    }

    return 0;
}
