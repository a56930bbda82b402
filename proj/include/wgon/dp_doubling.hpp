#pragma once

#include <span>
#include <vector>

#include "wgon/solution.hpp"

namespace wgon {

struct DoublingOptions {
    int threads = 1;
    /// Additionally require a convex turn at the seam vertex of every merge.
    /// Off by default: the plain merge applies no seam check, which is why
    /// candidates are post-validated instead of trusted.
    bool strict_seam = false;
};

/// One merge step of the size-doubling solver: chains whose outer chain has
/// `left` edges absorb chains with `right` edges, producing left + right.
struct MergeStep {
    int left = 0;
    int right = 0;
    friend bool operator==(const MergeStep&, const MergeStep&) = default;
};

/// Merge plan reaching `target` from single-edge atoms: repeated doubling up
/// to the most significant bit of target, then one cross-merge per remaining
/// set bit (most significant first). A power of two is pure doubling.
std::vector<MergeStep> merge_schedule(int target);

/// The size-doubling dynamic program. Chains are indexed by (first outer
/// vertex j, last outer vertex l) per bottom vertex; a merge reads the
/// recorded best end of the absorbed class at the seam vertex and relaxes the
/// combined cell. Every final candidate is reconstructed and post-validated
/// (convex CCW, exactly w distinct vertices, value equal to direct
/// evaluation); the best surviving candidate is returned with valid = true,
/// otherwise the best raw candidate is returned flagged valid = false.
Solution solve_doubling(const PointSet& P, int w, const WeightFunction& wf,
                        const DoublingOptions& opts = {});

/// Per-bottom-vertex tables of one size class, exposed for inspection.
struct SizeClassTable {
    int bottom = -1;
    int edges = 0; // outer-chain edge count of the class
    int from_left = 0, from_right = 0;
    std::vector<WeightValue> cost;     // (j, l) -> best chain weight
    std::vector<std::int16_t> seam;    // (j, l) -> merge seam vertex, -1 for atoms
    std::vector<std::int16_t> end;     // j -> recorded last vertex, -1 = none
};

/// Build and return every size-class table for one bottom vertex, in
/// ascending class order. A chain with c outer-chain edges closes into a
/// (c + 2)-gon, so a w-gon query reads the class w - 2.
std::vector<SizeClassTable> doubling_tables(const PointSet& P, int bottom, int w,
                                            const WeightFunction& wf, bool strict_seam = false);

struct ConformanceRow {
    int n = 0;
    int w = 0;
    WeightId weight = WeightId::Area2;
    bool strict_seam = false;
    bool baseline_feasible = false;
    bool doubling_feasible = false;
    WeightValue baseline_value;
    WeightValue doubling_value;
    bool doubling_valid = false;
    bool agreement = false;
    double baseline_ms = 0.0;
    double doubling_ms = 0.0;
};

/// Side-by-side measurement of the doubling merge against the exact baseline.
/// Agreement is recorded, never asserted.
struct ConformanceReport {
    std::vector<ConformanceRow> rows;

    double agreement_rate() const;
};

ConformanceReport run_conformance(std::span<const PointSet> instances, std::span<const int> ws,
                                  const WeightFunction& wf, const DoublingOptions& opts = {});

} // namespace wgon
