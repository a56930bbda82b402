#pragma once

#include <cstdint>
#include <optional>

#include "wgon/minch.hpp"
#include "wgon/solution.hpp"

namespace wgon {

/// Hard caps for brute-force enumeration. When a cap would be exceeded the
/// oracle reports Errc::exhausted instead of returning a partial optimum.
struct EnumerationBudget {
    std::uint64_t max_subsets = 1'000'000;
    double timeout_sec = 120.0;
    int max_points_minch = 14;
};

/// Exhaustive ground truth for the optimal w-gon: every w-subset in convex
/// position, evaluated directly. No pruning by design.
Solution oracle_wgon(const PointSet& P, int w, const WeightFunction& wf,
                     const EnumerationBudget& budget = {});

/// Exhaustive ground truth for the fewest-hull-vertices problem: every
/// outlier set C with |C| <= n - w. Ties break towards smaller |C|, then
/// lexicographically smaller C.
MinchResult oracle_minch(const PointSet& P, int w, const EnumerationBudget& budget = {});

/// Exhaustive ground truth for the budget variant: subsets in convex position
/// by increasing size until one meets the budget.
MinchResult oracle_budget(const PointSet& P, const WeightFunction& wf, const WeightValue& budget,
                          const EnumerationBudget& enum_budget = {});

/// Is the subset in convex position (every point a vertex of its hull)?
bool in_convex_position(const PointSet& P, std::span<const int> subset);

/// Closed-form count of the subsets an oracle call will enumerate; used by
/// the exhaustiveness accounting tests. Saturates at uint64 max.
std::uint64_t binomial(int n, int k);

} // namespace wgon
