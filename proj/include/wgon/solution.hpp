#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wgon/weights.hpp"

namespace wgon {

struct SolveStats {
    double total_ms = 0.0;
    int threads = 1;
    std::uint64_t work_items = 0; // DP cells touched or subsets enumerated
};

/// An optimizer answer: a witness polygon (CCW vertex indices, starting at its
/// bottommost vertex) with its objective value and provenance. Infeasible
/// answers carry feasible = false and an empty polygon instead of a sentinel
/// value. valid reports whether the witness passed its post-checks; exact
/// algorithms always produce valid witnesses, the doubling merge may not.
struct Solution {
    std::vector<int> polygon;
    WeightValue value;
    WeightId weight = WeightId::Area2;
    Direction direction = Direction::Min;
    std::string algorithm;
    bool feasible = true;
    bool valid = true;
    std::optional<std::vector<int>> outliers;
    std::optional<std::int64_t> coverage;
    SolveStats stats;

    static Solution infeasible(WeightId w, Direction d, std::string algo) {
        Solution s;
        s.weight = w;
        s.direction = d;
        s.algorithm = std::move(algo);
        s.feasible = false;
        s.valid = false;
        return s;
    }
};

} // namespace wgon
