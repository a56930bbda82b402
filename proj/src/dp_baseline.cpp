#include "wgon/dp_baseline.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>

#include "wgon/parallel.hpp"

namespace wgon {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
};

void check_size_params(const PointSet& P, int m_max) {
    if (m_max < 3 || m_max > P.size())
        fail(Errc::invalid_argument,
             "polygon size must be in [3, n]; got " + std::to_string(m_max) + " with n = " +
                 std::to_string(P.size()));
}

/// Fan candidates around one bottom vertex, per chain head v: the admissible
/// predecessors (u_arc, strictly right of the line bottom -> v) and the
/// admissible extensions (w_arc, strictly left), both in the CCW order around
/// v obtained by starting the sweep just past the direction towards bottom.
/// In that order the predecessor set admissible for a given extension w is
/// always a prefix of u_arc, which is what makes the running prefix-best work.
struct FanArcs {
    std::vector<std::vector<int>> u_arc;
    std::vector<std::vector<int>> w_arc;
};

FanArcs build_arcs(const PointSet& P, int bottom, const std::vector<char>& candidate,
                   const AngularTables& ang) {
    const int n = P.size();
    FanArcs arcs;
    arcs.u_arc.assign(static_cast<size_t>(n), {});
    arcs.w_arc.assign(static_cast<size_t>(n), {});
    for (int v = 0; v < n; ++v) {
        if (!candidate[static_cast<size_t>(v)]) continue;
        const auto& ring = ang.orders[static_cast<size_t>(v)].order;
        const int rn = static_cast<int>(ring.size());
        const int start = ang.pos[static_cast<size_t>(v)][static_cast<size_t>(bottom)];
        auto& us = arcs.u_arc[static_cast<size_t>(v)];
        auto& ws = arcs.w_arc[static_cast<size_t>(v)];
        for (int k = 1; k < rn; ++k) {
            const int q = ring[static_cast<size_t>((start + k) % rn)];
            if (!candidate[static_cast<size_t>(q)]) continue;
            if (orientation(P[bottom], P[q], P[v]) == Orient::CCW)
                us.push_back(q);
            else
                ws.push_back(q);
        }
    }
    return arcs;
}

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

void fill_table(BaselineTable& table, const PointSet& P, int bottom, const PreparedWeight& pw,
                const FanArcs& arcs) {
    const int n = P.size();
    const int m_max = table.m_max();
    const WeightFunction& wf = pw.wf();

    // Size-3 seeds: one fan triangle per admissible directed edge.
    for (int v = 0; v < n; ++v)
        for (int u : arcs.u_arc[static_cast<size_t>(v)]) {
            table.value_ref(3, u, v) = pw.base(bottom, u, v);
            table.parent_ref(3, u, v) = -1;
        }

    for (int m = 3; m < m_max; ++m) {
        for (int v = 0; v < n; ++v) {
            const auto& us = arcs.u_arc[static_cast<size_t>(v)];
            const auto& ws = arcs.w_arc[static_cast<size_t>(v)];
            if (us.empty() || ws.empty()) continue;
            WeightValue best = wf.worst();
            int best_u = -1;
            size_t ptr = 0;
            for (int w : ws) {
                // Admit every predecessor that keeps the turn at v convex;
                // the admissible set only grows as w sweeps CCW, so a running
                // best over the scanned prefix replaces the inner minimum.
                while (ptr < us.size() && orientation(P[us[ptr]], P[v], P[w]) == Orient::CCW) {
                    const int u = us[ptr];
                    if (table.finite(m, u, v) && wf.better(table.value_at(m, u, v), best)) {
                        best = table.value_at(m, u, v);
                        best_u = u;
                    }
                    ++ptr;
                }
                if (best_u < 0) continue;
                table.value_ref(m + 1, v, w) = pw.merge(best, pw.base(bottom, v, w), bottom, v);
                table.parent_ref(m + 1, v, w) = static_cast<std::int16_t>(best_u);
            }
        }
    }
}

struct PerSizeBest {
    WeightValue value;
    std::vector<int> polygon;
};

struct PerBottomResult {
    std::vector<std::optional<PerSizeBest>> by_size;
    std::uint64_t cells = 0;
};

PerBottomResult solve_bottom(const PointSet& P, int bottom, int m_max, const PreparedWeight& pw,
                             const AngularTables& ang) {
    const int n = P.size();
    const WeightFunction& wf = pw.wf();
    PerBottomResult out;
    out.by_size.assign(static_cast<size_t>(m_max - 2), std::nullopt);

    int cand_count = 0;
    const std::vector<char> candidate = bottom_candidates(P, bottom, &cand_count);
    if (cand_count < 2) return out;

    const FanArcs arcs = build_arcs(P, bottom, candidate, ang);
    BaselineTable table(bottom, m_max, n, wf);
    out.cells = table.cells();
    fill_table(table, P, bottom, pw, arcs);

    // Closures: a chain ending in (u, v) is a polygon iff the turn at v back
    // to the bottom vertex is convex; the turn at the bottom is implied by
    // the half-plane restriction on candidates.
    for (int m = 3; m <= m_max; ++m) {
        WeightValue best = wf.worst();
        ClosingEdge best_edge;
        for (int v = 0; v < n; ++v)
            for (int u : arcs.u_arc[static_cast<size_t>(v)]) {
                if (!table.finite(m, u, v)) continue;
                if (orientation(P[u], P[v], P[bottom]) != Orient::CCW) continue;
                if (wf.better(table.value_at(m, u, v), best)) {
                    best = table.value_at(m, u, v);
                    best_edge = {u, v};
                }
            }
        if (best_edge.u >= 0)
            out.by_size[static_cast<size_t>(m - 3)] = PerSizeBest{best, reconstruct(table, best_edge, m)};
    }
    return out;
}

} // namespace

BaselineTable::BaselineTable(int bottom, int m_max, int n, const WeightFunction& wf)
    : bottom_(bottom), m_max_(m_max), n_(n), wf_(wf) {
    const size_t total =
        static_cast<size_t>(m_max - 2) * static_cast<size_t>(n) * static_cast<size_t>(n);
    values_.assign(total, wf.worst());
    parents_.assign(total, -1);
}

BaselineTable build_baseline_table(const PointSet& P, int bottom, int m_max, const PreparedWeight& pw) {
    check_size_params(P, m_max);
    const AngularTables ang = precompute_angular(P);
    const std::vector<char> candidate = bottom_candidates(P, bottom, nullptr);
    const FanArcs arcs = build_arcs(P, bottom, candidate, ang);
    BaselineTable table(bottom, m_max, P.size(), pw.wf());
    fill_table(table, P, bottom, pw, arcs);
    return table;
}

std::vector<int> reconstruct(const BaselineTable& table, ClosingEdge closing, int m) {
    if (m < 3 || m > table.m_max()) fail(Errc::invalid_argument, "reconstruct: size out of range");
    if (!table.finite(m, closing.u, closing.v))
        fail(Errc::invalid_argument, "reconstruct: cell is not finite");
    int u = closing.u;
    int v = closing.v;
    std::vector<int> rev;
    rev.reserve(static_cast<size_t>(m));
    rev.push_back(v);
    rev.push_back(u);
    for (int mm = m; mm > 3; --mm) {
        const int p = table.parent_at(mm, u, v);
        if (p < 0) fail(Errc::internal, "reconstruct: broken parent chain");
        rev.push_back(p);
        v = u;
        u = p;
    }
    std::vector<int> poly;
    poly.reserve(static_cast<size_t>(m));
    poly.push_back(table.bottom());
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) poly.push_back(*it);
    if (static_cast<int>(poly.size()) != m) fail(Errc::internal, "reconstruct: wrong size");
    return poly;
}

AllSizesResult solve_all_sizes(const PointSet& P, int m_max, const WeightFunction& wf,
                               const BaselineOptions& opts) {
    Timer timer;
    check_size_params(P, m_max);
    require_general_position(P);

    const int n = P.size();
    const PreparedWeight pw(P, wf);
    const AngularTables ang = precompute_angular(P);
    const int threads = resolve_threads(opts.threads);

    std::vector<PerBottomResult> slots(static_cast<size_t>(n));
    parallel_for_index(n, threads,
                       [&](int i) { slots[static_cast<size_t>(i)] = solve_bottom(P, i, m_max, pw, ang); });

    AllSizesResult out;
    out.by_size.reserve(static_cast<size_t>(m_max - 2));
    std::uint64_t cells = 0;
    for (const auto& s : slots) cells += s.cells;

    for (int m = 3; m <= m_max; ++m) {
        const PerSizeBest* best = nullptr;
        for (const auto& s : slots) { // ordered reduction; lowest bottom wins ties
            const auto& cand = s.by_size[static_cast<size_t>(m - 3)];
            if (cand && (!best || wf.better(cand->value, best->value))) best = &*cand;
        }
        if (best) {
            Solution sol;
            sol.polygon = best->polygon;
            sol.value = best->value;
            sol.weight = wf.id();
            sol.direction = wf.direction();
            sol.algorithm = "baseline";
            out.by_size.push_back(std::move(sol));
        } else {
            out.by_size.push_back(Solution::infeasible(wf.id(), wf.direction(), "baseline"));
        }
    }

    out.stats.total_ms = timer.ms();
    out.stats.threads = threads;
    out.stats.work_items = cells;
    for (auto& s : out.by_size) s.stats = out.stats;
    return out;
}

Solution solve_exact_wgon(const PointSet& P, int w, const WeightFunction& wf,
                          const BaselineOptions& opts) {
    AllSizesResult all = solve_all_sizes(P, w, wf, opts);
    return all.at_size(w);
}

AllSizesResult solve_all_sizes_any_anchor(const PointSet& P, int m_max, const WeightFunction& wf) {
    Timer timer;
    check_size_params(P, m_max);
    require_general_position(P);
    const int n = P.size();
    if (n > 64) fail(Errc::limit_exceeded, "any-anchor verification variant is capped at n = 64");
    const PreparedWeight pw(P, wf);

    struct Best {
        WeightValue value;
        std::vector<int> polygon;
        bool set = false;
    };
    std::vector<Best> best(static_cast<size_t>(m_max - 2));

    // Fix the anchor and the first fan vertex; chains are then forced to keep
    // strictly increasing angular positions relative to the first direction,
    // which rules out multi-winding sequences without a half-plane filter.
    std::vector<WeightValue> val(static_cast<size_t>(n) * static_cast<size_t>(n));
    std::vector<WeightValue> nxt(static_cast<size_t>(n) * static_cast<size_t>(n));
    std::vector<std::vector<std::int16_t>> parents;
    auto at = [n](std::vector<WeightValue>& t, int u, int v) -> WeightValue& {
        return t[static_cast<size_t>(u) * static_cast<size_t>(n) + static_cast<size_t>(v)];
    };

    for (int anchor = 0; anchor < n; ++anchor) {
        const Point pa = P[anchor];
        for (int q1 = 0; q1 < n; ++q1) {
            if (q1 == anchor) continue;
            const Coord rx = P[q1].x - pa.x, ry = P[q1].y - pa.y;
            auto rel_before = [&](int a, int b) {
                return angle_less_from(rx, ry, P[a].x - pa.x, P[a].y - pa.y, P[b].x - pa.x,
                                       P[b].y - pa.y);
            };
            std::fill(val.begin(), val.end(), wf.worst());
            parents.assign(static_cast<size_t>(m_max - 2), {});
            for (auto& p : parents)
                p.assign(static_cast<size_t>(n) * static_cast<size_t>(n), -1);

            for (int q2 = 0; q2 < n; ++q2) {
                if (q2 == anchor || q2 == q1) continue;
                if (orientation(pa, P[q1], P[q2]) != Orient::CCW) continue;
                at(val, q1, q2) = pw.base(anchor, q1, q2);
            }

            for (int m = 3; m <= m_max; ++m) {
                // close chains of size m
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v) {
                        const WeightValue& cv = at(val, u, v);
                        if (!wf.is_set(cv)) continue;
                        if (orientation(P[u], P[v], pa) != Orient::CCW) continue;
                        if (orientation(P[v], pa, P[q1]) != Orient::CCW) continue;
                        auto& slot = best[static_cast<size_t>(m - 3)];
                        if (!slot.set || wf.better(cv, slot.value)) {
                            // walk parents to recover the chain
                            std::vector<int> rev{v, u};
                            int uu = u, vv = v;
                            for (int mm = m; mm > 3; --mm) {
                                const int p = parents[static_cast<size_t>(mm - 3)]
                                                     [static_cast<size_t>(uu) * static_cast<size_t>(n) +
                                                      static_cast<size_t>(vv)];
                                if (p < 0) fail(Errc::internal, "any-anchor: broken parent chain");
                                rev.push_back(p);
                                vv = uu;
                                uu = p;
                            }
                            std::vector<int> poly{anchor};
                            for (auto it = rev.rbegin(); it != rev.rend(); ++it) poly.push_back(*it);
                            const auto pts = gather(P, poly);
                            if (is_convex_ccw(pts)) {
                                slot.set = true;
                                slot.value = cv;
                                slot.polygon = std::move(poly);
                            }
                        }
                    }
                if (m == m_max) break;
                // extend to size m + 1
                std::fill(nxt.begin(), nxt.end(), wf.worst());
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v) {
                        const WeightValue& cv = at(val, u, v);
                        if (!wf.is_set(cv)) continue;
                        for (int w = 0; w < n; ++w) {
                            if (w == anchor || w == u || w == v || w == q1) continue;
                            if (orientation(pa, P[v], P[w]) != Orient::CCW) continue;
                            if (orientation(P[u], P[v], P[w]) != Orient::CCW) continue;
                            if (!rel_before(v, w)) continue; // no wrap past the first direction
                            const WeightValue cand = pw.merge(cv, pw.base(anchor, v, w), anchor, v);
                            WeightValue& slot = at(nxt, v, w);
                            if (!wf.is_set(slot) || wf.better(cand, slot)) {
                                slot = cand;
                                parents[static_cast<size_t>(m + 1 - 3)]
                                       [static_cast<size_t>(v) * static_cast<size_t>(n) +
                                        static_cast<size_t>(w)] = static_cast<std::int16_t>(u);
                            }
                        }
                    }
                std::swap(val, nxt);
            }
        }
    }

    AllSizesResult out;
    for (int m = 3; m <= m_max; ++m) {
        const auto& slot = best[static_cast<size_t>(m - 3)];
        if (slot.set) {
            Solution sol;
            sol.polygon = slot.polygon;
            sol.value = slot.value;
            sol.weight = wf.id();
            sol.direction = wf.direction();
            sol.algorithm = "baseline-any-anchor";
            out.by_size.push_back(std::move(sol));
        } else {
            out.by_size.push_back(Solution::infeasible(wf.id(), wf.direction(), "baseline-any-anchor"));
        }
    }
    out.stats.total_ms = timer.ms();
    out.stats.threads = 1;
    return out;
}

} // namespace wgon
