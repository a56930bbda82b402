#include "wgon/minch.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "wgon/dp_baseline.hpp"
#include "wgon/dp_doubling.hpp"

namespace wgon {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
};

MinchResult degenerate_keep(const PointSet& P, int w) {
    // Sub-triangle hulls: keeping w points yields a hull of w vertices.
    MinchResult r;
    r.hull_size = w;
    for (int k = 0; k < w; ++k) r.polygon.push_back(k);
    r.coverage = w;
    for (int k = w; k < P.size(); ++k) r.outliers.push_back(k);
    r.algorithm = "baseline";
    return r;
}

MinchResult from_witness(const PointSet& P, const Solution& sol) {
    MinchResult r;
    r.hull_size = static_cast<int>(sol.polygon.size());
    r.polygon = sol.polygon;
    auto [covered, outliers] = classify_coverage(P, r.polygon);
    r.coverage = static_cast<std::int64_t>(covered.size());
    r.outliers = std::move(outliers);
    r.algorithm = sol.algorithm;
    return r;
}

} // namespace

std::pair<std::vector<int>, std::vector<int>> classify_coverage(const PointSet& P,
                                                                std::span<const int> polygon) {
    const std::vector<Point> pts = gather(P, polygon);
    std::vector<int> covered, outliers;
    for (int q = 0; q < P.size(); ++q) {
        if (contains_on_or_inside(pts, P[q]))
            covered.push_back(q);
        else
            outliers.push_back(q);
    }
    return {covered, outliers};
}

MinchResult solve_minch(const PointSet& P, int w, const MinchOptions& opts) {
    Timer timer;
    if (w < 1 || w > P.size())
        fail(Errc::invalid_argument, "minch: w must be in [1, n]; got " + std::to_string(w));
    require_general_position(P);

    if (w <= 2) {
        MinchResult r = degenerate_keep(P, w);
        r.stats.total_ms = timer.ms();
        return r;
    }

    // The full hull covers all n >= w points, so the sweep never has to look
    // past its vertex count.
    const std::vector<int> hull = convex_hull(P.span());
    const int hull_size = static_cast<int>(hull.size());

    BaselineOptions base_opts;
    base_opts.threads = opts.threads;
    const WeightFunction cover = make_weight(WeightId::Coverage);
    const AllSizesResult all = solve_all_sizes(P, hull_size, cover, base_opts);

    for (int m = 3; m <= hull_size; ++m) {
        const Solution& sol = all.at_size(m);
        if (!sol.feasible) continue;
        if (sol.value.iv >= w) {
            MinchResult r = from_witness(P, sol);
            if (r.coverage != sol.value.iv)
                fail(Errc::internal, "minch: coverage audit disagrees with DP value");
            r.stats = all.stats;
            r.stats.total_ms = timer.ms();
            return r;
        }
    }
    fail(Errc::internal, "minch: full hull did not cover all points");
}

MinchResult solve_minch_doubling(const PointSet& P, int w, const MinchOptions& opts) {
    Timer timer;
    if (w < 1 || w > P.size())
        fail(Errc::invalid_argument, "minch: w must be in [1, n]; got " + std::to_string(w));
    require_general_position(P);

    if (w <= 2) {
        MinchResult r = degenerate_keep(P, w);
        r.algorithm = "doubling-experimental";
        r.stats.total_ms = timer.ms();
        return r;
    }

    const std::vector<int> hull = convex_hull(P.span());
    const int hull_size = static_cast<int>(hull.size());
    const WeightFunction cover = make_weight(WeightId::Coverage);
    DoublingOptions dopts;
    dopts.threads = opts.threads;

    for (int m = 3; m <= hull_size; ++m) {
        const Solution sol = solve_doubling(P, m, cover, dopts);
        if (!sol.feasible || !sol.valid) continue;
        if (sol.value.iv >= w) {
            MinchResult r = from_witness(P, sol);
            r.algorithm = "doubling-experimental";
            r.stats = sol.stats;
            r.stats.total_ms = timer.ms();
            return r;
        }
    }
    // The merge may fail to surface a covering polygon of any size; that is
    // a measured property of the experimental path, not an input error.
    MinchResult r;
    r.feasible = false;
    r.algorithm = "doubling-experimental";
    r.stats.total_ms = timer.ms();
    return r;
}

MinchResult solve_budget(const PointSet& P, const WeightFunction& wf, const WeightValue& budget,
                         const MinchOptions& opts) {
    Timer timer;
    if (wf.id() != WeightId::Area2 && wf.id() != WeightId::Perimeter)
        fail(Errc::invalid_argument, "budget objective requires the area2 or perimeter weight");
    if (wf.direction() != Direction::Min)
        fail(Errc::invalid_argument, "budget objective requires a minimizing weight");
    if (wf.integral() ? budget.iv < 0 : !(budget.rv >= 0.0))
        fail(Errc::invalid_argument, "budget must be non-negative");
    require_general_position(P);

    auto within = [&](const WeightValue& v) {
        return wf.integral() ? v.iv <= budget.iv : v.rv <= budget.rv;
    };

    BaselineOptions base_opts;
    base_opts.threads = opts.threads;

    // Grow the size cap geometrically; once a size is infeasible every larger
    // size is too, so the search space is bounded by the largest subset in
    // convex position.
    const int n = P.size();
    int cap = std::min(n, 8);
    for (;;) {
        const AllSizesResult all = solve_all_sizes(P, cap, wf, base_opts);
        for (int m = 3; m <= cap; ++m) {
            const Solution& sol = all.at_size(m);
            if (!sol.feasible) {
                MinchResult r;
                r.feasible = false;
                r.algorithm = "baseline";
                r.stats = all.stats;
                r.stats.total_ms = timer.ms();
                return r;
            }
            if (within(sol.value)) {
                MinchResult r = from_witness(P, sol);
                r.stats = all.stats;
                r.stats.total_ms = timer.ms();
                return r;
            }
        }
        if (cap == n) break;
        cap = std::min(n, cap * 2);
    }
    MinchResult r;
    r.feasible = false;
    r.algorithm = "baseline";
    r.stats.total_ms = timer.ms();
    return r;
}

} // namespace wgon
