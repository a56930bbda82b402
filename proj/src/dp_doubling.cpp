#include "wgon/dp_doubling.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <string>

#include "wgon/dp_baseline.hpp"
#include "wgon/parallel.hpp"

namespace wgon {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
};

struct ClassTable {
    int from_left = 0;
    int from_right = 0;
    std::vector<WeightValue> cost;
    std::vector<std::int16_t> seam;     // merge vertex r per (j, l); -1 for atoms
    std::vector<std::int16_t> prev_end; // outer vertex right before l on the chain
    std::vector<std::int16_t> second;   // outer vertex right after j on the chain
    std::vector<std::int16_t> end;      // recorded last vertex per first vertex j

    void init(int n, const WeightValue& unset) {
        const size_t nn = static_cast<size_t>(n) * static_cast<size_t>(n);
        cost.assign(nn, unset);
        seam.assign(nn, -1);
        prev_end.assign(nn, -1);
        second.assign(nn, -1);
        end.assign(static_cast<size_t>(n), -1);
    }
};

/// Candidate filter shared with the baseline: only points lexicographically
/// above the bottom vertex may appear on a chain.
std::vector<char> bottom_candidates(const PointSet& P, int bottom, int* count) {
    const int n = P.size();
    std::vector<char> candidate(static_cast<size_t>(n), 0);
    int cnt = 0;
    for (int q = 0; q < n; ++q)
        if (lex_yx_less(P[bottom], P[q])) {
            candidate[static_cast<size_t>(q)] = 1;
            ++cnt;
        }
    if (count) *count = cnt;
    return candidate;
}

/// The per-bottom table construction: seed one-edge atoms (fan triangles),
/// then run the merge plan. Chains are keyed by (first, last) outer vertex;
/// a merge consults the absorbed class's recorded end at the seam vertex.
std::map<int, ClassTable> build_classes(const PointSet& P, int bottom, int target,
                                        const PreparedWeight& pw, const AngularTables& ang,
                                        const std::vector<char>& candidate, bool strict_seam,
                                        std::uint64_t* cells) {
    const int n = P.size();
    const WeightFunction& wf = pw.wf();
    std::map<int, ClassTable> classes;
    auto ensure_class = [&](int cls) -> ClassTable& {
        auto [it, fresh] = classes.try_emplace(cls);
        if (fresh) {
            it->second.init(n, wf.worst());
            if (cells) *cells += static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
        }
        return it->second;
    };

    ClassTable& atoms = ensure_class(1);
    for (int j = 0; j < n; ++j) {
        if (!candidate[static_cast<size_t>(j)]) continue;
        const auto& ring = ang.orders[static_cast<size_t>(j)].order;
        for (const int l : ring) {
            if (!candidate[static_cast<size_t>(l)] || l == j) continue;
            if (orientation(P[bottom], P[j], P[l]) != Orient::CCW) continue;
            const size_t cell = static_cast<size_t>(j) * static_cast<size_t>(n) + static_cast<size_t>(l);
            atoms.cost[cell] = pw.base(bottom, j, l);
            atoms.prev_end[cell] = static_cast<std::int16_t>(j);
            atoms.second[cell] = static_cast<std::int16_t>(l);
            if (atoms.end[static_cast<size_t>(j)] < 0 ||
                wf.better(atoms.cost[cell],
                          atoms.cost[static_cast<size_t>(j) * static_cast<size_t>(n) +
                                     static_cast<size_t>(atoms.end[static_cast<size_t>(j)])]))
                atoms.end[static_cast<size_t>(j)] = static_cast<std::int16_t>(l);
        }
    }

    for (const MergeStep& step : merge_schedule(target)) {
        const ClassTable& A = classes.at(step.left);
        const ClassTable& B = classes.at(step.right);
        ClassTable& C = ensure_class(step.left + step.right);
        C.from_left = step.left;
        C.from_right = step.right;
        for (const int j : ang.orders[static_cast<size_t>(bottom)].order) {
            if (!candidate[static_cast<size_t>(j)]) continue;
            for (const int r : ang.orders[static_cast<size_t>(j)].order) {
                if (r == bottom || r == j || !candidate[static_cast<size_t>(r)]) continue;
                if (orientation(P[bottom], P[j], P[r]) != Orient::CCW) continue;
                const int l = B.end[static_cast<size_t>(r)];
                if (l < 0) continue;
                const size_t jr = static_cast<size_t>(j) * static_cast<size_t>(n) + static_cast<size_t>(r);
                const size_t rl = static_cast<size_t>(r) * static_cast<size_t>(n) + static_cast<size_t>(l);
                if (!wf.is_set(A.cost[jr]) || !wf.is_set(B.cost[rl])) continue;
                if (strict_seam &&
                    orientation(P[A.prev_end[jr]], P[r], P[B.second[rl]]) != Orient::CCW)
                    continue;
                const WeightValue cand = pw.merge(A.cost[jr], B.cost[rl], bottom, r);
                const size_t jl = static_cast<size_t>(j) * static_cast<size_t>(n) + static_cast<size_t>(l);
                if (wf.better(cand, C.cost[jl])) {
                    C.cost[jl] = cand;
                    C.seam[jl] = static_cast<std::int16_t>(r);
                    C.prev_end[jl] = B.prev_end[rl];
                    C.second[jl] = A.second[jr];
                    C.end[static_cast<size_t>(j)] = static_cast<std::int16_t>(l);
                }
            }
        }
    }
    return classes;
}

void reconstruct_chain(const std::map<int, ClassTable>& classes, int cls, int j, int l, int n,
                       std::vector<int>& out) {
    const ClassTable& ct = classes.at(cls);
    const size_t cell = static_cast<size_t>(j) * static_cast<size_t>(n) + static_cast<size_t>(l);
    if (cls == 1) {
        out.push_back(j);
        out.push_back(l);
        return;
    }
    const int r = ct.seam[cell];
    if (r < 0) fail(Errc::internal, "doubling: candidate cell has no merge provenance");
    reconstruct_chain(classes, ct.from_left, j, r, n, out);
    std::vector<int> right;
    reconstruct_chain(classes, ct.from_right, r, l, n, right);
    out.insert(out.end(), right.begin() + 1, right.end());
}

struct Candidate {
    WeightValue value;
    int j = -1;
    int l = -1;
};

struct PerBottom {
    std::optional<Candidate> best_valid;
    std::vector<int> best_valid_polygon;
    std::optional<Candidate> best_any;
    std::vector<int> best_any_polygon;
    std::uint64_t cells = 0;
};

PerBottom solve_bottom(const PointSet& P, int bottom, int w, const PreparedWeight& pw,
                       const AngularTables& ang, bool strict_seam) {
    const int n = P.size();
    const WeightFunction& wf = pw.wf();
    PerBottom out;

    int cand_count = 0;
    const std::vector<char> candidate = bottom_candidates(P, bottom, &cand_count);
    if (cand_count < w - 1) return out;

    const int target = w - 2; // outer-chain edges of a closed w-gon's chain
    const std::map<int, ClassTable> classes =
        build_classes(P, bottom, target, pw, ang, candidate, strict_seam, &out.cells);

    // Rank the target-class cells best-first and keep the first candidate
    // whose reconstructed witness survives validation.
    const ClassTable& top = classes.at(target);
    std::vector<Candidate> cands;
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
            const size_t cell = static_cast<size_t>(j) * static_cast<size_t>(n) + static_cast<size_t>(l);
            if (wf.is_set(top.cost[cell])) cands.push_back({top.cost[cell], j, l});
        }
    std::sort(cands.begin(), cands.end(), [&](const Candidate& a, const Candidate& b) {
        if (wf.better(a.value, b.value)) return true;
        if (wf.better(b.value, a.value)) return false;
        if (a.j != b.j) return a.j < b.j;
        return a.l < b.l;
    });
    if (cands.empty()) return out;

    out.best_any = cands.front();
    {
        std::vector<int> chain;
        reconstruct_chain(classes, target, cands.front().j, cands.front().l, n, chain);
        out.best_any_polygon.push_back(bottom);
        out.best_any_polygon.insert(out.best_any_polygon.end(), chain.begin(), chain.end());
    }

    for (const Candidate& c : cands) {
        std::vector<int> chain;
        reconstruct_chain(classes, target, c.j, c.l, n, chain);
        std::vector<int> poly;
        poly.reserve(static_cast<size_t>(w));
        poly.push_back(bottom);
        poly.insert(poly.end(), chain.begin(), chain.end());
        if (static_cast<int>(poly.size()) != w) continue;
        std::vector<int> sorted = poly;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        const std::vector<Point> pts = gather(P, poly);
        if (!is_convex_ccw(pts)) continue;
        bool bottom_ok = true;
        for (const int q : poly)
            if (lex_yx_less(P[q], P[bottom])) bottom_ok = false;
        if (!bottom_ok) continue;
        if (!wf.equal(polygon_weight(poly, P, wf), c.value)) continue;
        out.best_valid = c;
        out.best_valid_polygon = std::move(poly);
        break;
    }
    return out;
}

} // namespace

std::vector<MergeStep> merge_schedule(int target) {
    if (target < 1) fail(Errc::invalid_argument, "merge_schedule: target must be >= 1");
    std::vector<MergeStep> steps;
    int msb = 1;
    while (msb * 2 <= target) msb *= 2;
    for (int p = 1; p < msb; p *= 2) steps.push_back({p, p});
    int acc = msb;
    for (int b = msb / 2; b >= 1; b /= 2) {
        if (target & b) {
            steps.push_back({acc, b});
            acc += b;
        }
    }
    return steps;
}

double ConformanceReport::agreement_rate() const {
    if (rows.empty()) return 0.0;
    size_t agree = 0;
    for (const auto& r : rows)
        if (r.agreement) ++agree;
    return static_cast<double>(agree) / static_cast<double>(rows.size());
}

std::vector<SizeClassTable> doubling_tables(const PointSet& P, int bottom, int w,
                                            const WeightFunction& wf, bool strict_seam) {
    if (w < 3 || w > P.size()) fail(Errc::invalid_argument, "doubling_tables: w out of range");
    require_general_position(P);
    const PreparedWeight pw(P, wf);
    const AngularTables ang = precompute_angular(P);
    const std::vector<char> candidate = bottom_candidates(P, bottom, nullptr);
    const std::map<int, ClassTable> classes =
        build_classes(P, bottom, w - 2, pw, ang, candidate, strict_seam, nullptr);
    std::vector<SizeClassTable> out;
    out.reserve(classes.size());
    for (const auto& [cls, table] : classes) {
        SizeClassTable t;
        t.bottom = bottom;
        t.edges = cls;
        t.from_left = table.from_left;
        t.from_right = table.from_right;
        t.cost = table.cost;
        t.seam = table.seam;
        t.end = table.end;
        out.push_back(std::move(t));
    }
    return out;
}

Solution solve_doubling(const PointSet& P, int w, const WeightFunction& wf,
                        const DoublingOptions& opts) {
    Timer timer;
    if (w < 3 || w > P.size())
        fail(Errc::invalid_argument,
             "polygon size must be in [3, n]; got " + std::to_string(w) + " with n = " +
                 std::to_string(P.size()));
    require_general_position(P);

    const int n = P.size();
    const PreparedWeight pw(P, wf);
    const AngularTables ang = precompute_angular(P);
    const int threads = resolve_threads(opts.threads);

    std::vector<PerBottom> slots(static_cast<size_t>(n));
    parallel_for_index(n, threads, [&](int i) {
        slots[static_cast<size_t>(i)] = solve_bottom(P, i, w, pw, ang, opts.strict_seam);
    });

    const PerBottom* valid_winner = nullptr;
    const PerBottom* any_winner = nullptr;
    std::uint64_t cells = 0;
    for (const auto& s : slots) { // ordered reduction; lowest bottom wins ties
        cells += s.cells;
        if (s.best_valid && (!valid_winner || wf.better(s.best_valid->value, valid_winner->best_valid->value)))
            valid_winner = &s;
        if (s.best_any && (!any_winner || wf.better(s.best_any->value, any_winner->best_any->value)))
            any_winner = &s;
    }

    Solution sol;
    sol.weight = wf.id();
    sol.direction = wf.direction();
    sol.algorithm = "doubling";
    if (valid_winner) {
        sol.polygon = valid_winner->best_valid_polygon;
        sol.value = valid_winner->best_valid->value;
        sol.valid = true;
    } else if (any_winner) {
        sol.polygon = any_winner->best_any_polygon;
        sol.value = any_winner->best_any->value;
        sol.valid = false;
    } else {
        sol = Solution::infeasible(wf.id(), wf.direction(), "doubling");
    }
    sol.stats.total_ms = timer.ms();
    sol.stats.threads = threads;
    sol.stats.work_items = cells;
    return sol;
}

ConformanceReport run_conformance(std::span<const PointSet> instances, std::span<const int> ws,
                                  const WeightFunction& wf, const DoublingOptions& opts) {
    ConformanceReport report;
    BaselineOptions base_opts;
    base_opts.threads = opts.threads;
    for (const PointSet& P : instances) {
        for (const int w : ws) {
            ConformanceRow row;
            row.n = P.size();
            row.w = w;
            row.weight = wf.id();
            row.strict_seam = opts.strict_seam;

            const Solution base = solve_exact_wgon(P, w, wf, base_opts);
            row.baseline_feasible = base.feasible;
            row.baseline_value = base.value;
            row.baseline_ms = base.stats.total_ms;

            const Solution dbl = solve_doubling(P, w, wf, opts);
            row.doubling_feasible = dbl.feasible;
            row.doubling_value = dbl.value;
            row.doubling_valid = dbl.valid;
            row.doubling_ms = dbl.stats.total_ms;

            if (!base.feasible && !dbl.feasible)
                row.agreement = true;
            else if (base.feasible && dbl.feasible)
                row.agreement = dbl.valid && wf.equal(base.value, dbl.value);
            else
                row.agreement = false;
            report.rows.push_back(row);
        }
    }
    return report;
}

} // namespace wgon
