#include "wgon/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <string>

namespace wgon {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double sec() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); }
    double ms() const { return sec() * 1000.0; }
};

/// Visit every k-subset of [0, n) in lexicographic order.
template <class Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    for (;;) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

void check_timeout(const Timer& timer, const EnumerationBudget& budget, std::uint64_t done) {
    if ((done & 0x3ff) == 0 && timer.sec() > budget.timeout_sec)
        fail(Errc::exhausted, "oracle timed out after " + std::to_string(done) + " subsets");
}

} // namespace

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        if (r > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
        r = r * num / static_cast<std::uint64_t>(i);
    }
    return r;
}

bool in_convex_position(const PointSet& P, std::span<const int> subset) {
    return convex_hull_subset(P, subset).size() == subset.size();
}

Solution oracle_wgon(const PointSet& P, int w, const WeightFunction& wf,
                     const EnumerationBudget& budget) {
    Timer timer;
    const int n = P.size();
    if (w < 3 || w > n)
        fail(Errc::invalid_argument, "oracle: w must be in [3, n]; got " + std::to_string(w));
    require_general_position(P);
    if (binomial(n, w) > budget.max_subsets)
        fail(Errc::exhausted, "oracle: C(" + std::to_string(n) + "," + std::to_string(w) +
                                  ") exceeds the subset budget");

    bool found = false;
    WeightValue best{};
    std::vector<int> best_poly;
    std::uint64_t done = 0;
    for_each_subset(n, w, [&](const std::vector<int>& subset) {
        ++done;
        check_timeout(timer, budget, done);
        std::vector<int> hull = convex_hull_subset(P, subset);
        if (static_cast<int>(hull.size()) != w) return;
        const WeightValue v = polygon_weight(hull, P, wf);
        if (!found || wf.better(v, best)) {
            found = true;
            best = v;
            best_poly = std::move(hull);
        }
    });

    Solution sol;
    sol.weight = wf.id();
    sol.direction = wf.direction();
    sol.algorithm = "oracle";
    if (found) {
        sol.polygon = std::move(best_poly);
        sol.value = best;
    } else {
        sol = Solution::infeasible(wf.id(), wf.direction(), "oracle");
    }
    sol.stats.total_ms = timer.ms();
    sol.stats.work_items = done;
    return sol;
}

MinchResult oracle_minch(const PointSet& P, int w, const EnumerationBudget& budget) {
    Timer timer;
    const int n = P.size();
    if (w < 1 || w > n)
        fail(Errc::invalid_argument, "oracle: w must be in [1, n]; got " + std::to_string(w));
    require_general_position(P);
    if (n > budget.max_points_minch)
        fail(Errc::exhausted, "oracle_minch is capped at n = " + std::to_string(budget.max_points_minch));
    std::uint64_t planned = 0;
    for (int k = 0; k <= n - w; ++k) planned += binomial(n, k);
    if (planned > budget.max_subsets) fail(Errc::exhausted, "oracle_minch: subset budget exceeded");

    bool found = false;
    int best_hull = 0;
    std::vector<int> best_poly;
    std::vector<int> best_outliers;
    std::uint64_t done = 0;

    std::vector<char> is_out(static_cast<size_t>(n), 0);
    for (int k = 0; k <= n - w; ++k) { // smaller |C| first: ties prefer fewer outliers
        for_each_subset(n, k, [&](const std::vector<int>& outliers) {
            ++done;
            check_timeout(timer, budget, done);
            std::fill(is_out.begin(), is_out.end(), 0);
            for (const int o : outliers) is_out[static_cast<size_t>(o)] = 1;
            std::vector<int> kept;
            kept.reserve(static_cast<size_t>(n - k));
            for (int q = 0; q < n; ++q)
                if (!is_out[static_cast<size_t>(q)]) kept.push_back(q);
            const std::vector<int> hull = convex_hull_subset(P, kept);
            const int hs = static_cast<int>(hull.size());
            // within a (|C|, lex C) sweep only strict improvements count
            if (!found || hs < best_hull) {
                found = true;
                best_hull = hs;
                best_poly = hull;
                best_outliers = outliers;
            }
        });
    }

    MinchResult r;
    r.algorithm = "oracle";
    r.hull_size = best_hull;
    r.polygon = std::move(best_poly);
    // Report the canonical partition of the witness polygon, not the
    // enumeration's outlier set: points covered by the winning hull are kept.
    auto [covered, outliers] = classify_coverage(P, r.polygon);
    r.coverage = static_cast<std::int64_t>(covered.size());
    r.outliers = std::move(outliers);
    r.stats.total_ms = timer.ms();
    r.stats.work_items = done;
    return r;
}

MinchResult oracle_budget(const PointSet& P, const WeightFunction& wf, const WeightValue& budget,
                          const EnumerationBudget& enum_budget) {
    Timer timer;
    if (wf.id() != WeightId::Area2 && wf.id() != WeightId::Perimeter)
        fail(Errc::invalid_argument, "budget objective requires the area2 or perimeter weight");
    if (wf.direction() != Direction::Min)
        fail(Errc::invalid_argument, "budget objective requires a minimizing weight");
    if (wf.integral() ? budget.iv < 0 : !(budget.rv >= 0.0))
        fail(Errc::invalid_argument, "budget must be non-negative");
    require_general_position(P);

    const int n = P.size();
    auto within = [&](const WeightValue& v) {
        return wf.integral() ? v.iv <= budget.iv : v.rv <= budget.rv;
    };

    std::uint64_t done = 0;
    for (int m = 3; m <= n; ++m) {
        if (binomial(n, m) > enum_budget.max_subsets)
            fail(Errc::exhausted, "oracle_budget: subset budget exceeded at m = " + std::to_string(m));
        bool any_convex = false;
        bool found = false;
        WeightValue best{};
        std::vector<int> best_poly;
        for_each_subset(n, m, [&](const std::vector<int>& subset) {
            ++done;
            check_timeout(timer, enum_budget, done);
            std::vector<int> hull = convex_hull_subset(P, subset);
            if (static_cast<int>(hull.size()) != m) return;
            any_convex = true;
            const WeightValue v = polygon_weight(hull, P, wf);
            if (!found || wf.better(v, best)) {
                found = true;
                best = v;
                best_poly = std::move(hull);
            }
        });
        if (found && within(best)) {
            MinchResult r;
            r.algorithm = "oracle";
            r.hull_size = m;
            r.polygon = std::move(best_poly);
            auto [covered, outliers] = classify_coverage(P, r.polygon);
            r.coverage = static_cast<std::int64_t>(covered.size());
            r.outliers = std::move(outliers);
            r.stats.total_ms = timer.ms();
            r.stats.work_items = done;
            return r;
        }
        if (!any_convex) break; // no convex m-gon => none larger either
    }

    MinchResult r;
    r.feasible = false;
    r.algorithm = "oracle";
    r.stats.total_ms = timer.ms();
    r.stats.work_items = done;
    return r;
}

} // namespace wgon
