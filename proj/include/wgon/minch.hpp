#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wgon/solution.hpp"

namespace wgon {

/// Result of a fewest-hull-vertices query: the witness polygon, the points it
/// covers (on or inside), and the discarded outliers. The three groups
/// partition the input.
struct MinchResult {
    int hull_size = 0;
    std::vector<int> polygon;          // CCW; for hull_size < 3 just the kept points
    std::int64_t coverage = 0;         // points on or inside the polygon
    std::vector<int> outliers;         // ascending indices
    bool feasible = true;
    std::string algorithm;
    SolveStats stats;
};

struct MinchOptions {
    int threads = 1;
};

/// Fewest convex-hull vertices after discarding at most n - w points: find
/// the smallest m such that some convex m-gon over P covers at least w
/// points. Solved by the baseline DP under the coverage weight (maximized
/// per size), sweeping sizes upward. Always feasible for 1 <= w <= n since
/// the full hull covers everything.
MinchResult solve_minch(const PointSet& P, int w, const MinchOptions& opts = {});

/// Continuous-budget variant: the smallest m whose optimal m-gon weight is
/// within the budget. wf must be Area2 (budget in twice-area units, in
/// budget.iv) or Perimeter (budget.rv). Infeasible when even the best
/// triangle exceeds the budget.
MinchResult solve_budget(const PointSet& P, const WeightFunction& wf, const WeightValue& budget,
                         const MinchOptions& opts = {});

/// Experimental: the same size sweep driven by the doubling merge instead of
/// the exact baseline. The doubling table carries one scalar per cell, so
/// per-size maximum coverage is only approximated; the result is a sound
/// witness when feasible but its hull size may overshoot solve_minch. Meant
/// for side-by-side measurement, never as a default path.
MinchResult solve_minch_doubling(const PointSet& P, int w, const MinchOptions& opts = {});

/// Containment audit: classify every point of P against a convex CCW witness
/// polygon. Returns (covered ascending, outliers ascending).
std::pair<std::vector<int>, std::vector<int>> classify_coverage(const PointSet& P,
                                                                std::span<const int> polygon);

} // namespace wgon
