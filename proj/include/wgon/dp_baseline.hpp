#pragma once

#include <cstdint>
#include <vector>

#include "wgon/solution.hpp"

namespace wgon {

struct BaselineOptions {
    int threads = 1; // 1 = sequential reference mode; 0 = auto (env / hardware)
};

/// Per-bottom-vertex DP tables of the ear-addition algorithm.
///
/// A convex polygon whose bottommost (lex y,x minimum) vertex is `bottom` is a
/// fan of triangles around it; the DP state is the directed last edge (u, v)
/// of the partial fan chain, per chain size m. value_at(m, u, v) is the best
/// weight over chains with m vertices total (bottom included) ending in edge
/// u -> v; parent_at gives the predecessor of u on the best chain.
class BaselineTable {
public:
    BaselineTable(int bottom, int m_max, int n, const WeightFunction& wf);

    int bottom() const { return bottom_; }
    int m_max() const { return m_max_; }
    int n() const { return n_; }

    const WeightValue& value_at(int m, int u, int v) const { return values_[idx(m, u, v)]; }
    int parent_at(int m, int u, int v) const { return parents_[idx(m, u, v)]; }
    bool finite(int m, int u, int v) const { return wf_.is_set(value_at(m, u, v)); }
    std::uint64_t cells() const { return values_.size(); }

    WeightValue& value_ref(int m, int u, int v) { return values_[idx(m, u, v)]; }
    std::int16_t& parent_ref(int m, int u, int v) { return parents_[idx(m, u, v)]; }

private:
    size_t idx(int m, int u, int v) const {
        return (static_cast<size_t>(m - 3) * static_cast<size_t>(n_) + static_cast<size_t>(u)) *
                   static_cast<size_t>(n_) +
               static_cast<size_t>(v);
    }

    int bottom_;
    int m_max_;
    int n_;
    WeightFunction wf_;
    std::vector<WeightValue> values_;
    std::vector<std::int16_t> parents_;
};

/// The directed last edge that closes a chain into a polygon.
struct ClosingEdge {
    int u = -1;
    int v = -1;
};

/// Build the full DP table for one bottom vertex. Candidate vertices are the
/// points lexicographically above the bottom (exactly the points whose angle
/// from it lies in [0, pi)); the running prefix-best over admissible
/// predecessors makes each (m, v) pass linear in the angular order.
BaselineTable build_baseline_table(const PointSet& P, int bottom, int m_max, const PreparedWeight& pw);

/// Walk parent pointers from a closing edge back to its size-3 seed.
/// Returns the polygon CCW, bottom vertex first. The cell must be finite.
std::vector<int> reconstruct(const BaselineTable& table, ClosingEdge closing, int m);

/// Optimal weights for every polygon size 3..m_max simultaneously, with one
/// witness per size. Entries for sizes with no convex polygon are infeasible.
struct AllSizesResult {
    std::vector<Solution> by_size; // index 0 <-> size 3
    SolveStats stats;

    const Solution& at_size(int m) const { return by_size[static_cast<size_t>(m - 3)]; }
};

AllSizesResult solve_all_sizes(const PointSet& P, int m_max, const WeightFunction& wf,
                               const BaselineOptions& opts = {});

/// The size-w entry of solve_all_sizes, as a single answer.
Solution solve_exact_wgon(const PointSet& P, int w, const WeightFunction& wf,
                          const BaselineOptions& opts = {});

/// Verification variant: every vertex may serve as the fan anchor, with no
/// lexicographic candidate filter. Chains track their first fan vertex so
/// that winding sequences are excluded exactly; closures are post-validated.
/// O(n^4 m) — intended for cross-checking at small n only.
AllSizesResult solve_all_sizes_any_anchor(const PointSet& P, int m_max, const WeightFunction& wf);

} // namespace wgon
