#include <doctest.h>

#include <algorithm>

#include "test_util.hpp"
#include "wgon/dp_baseline.hpp"
#include "wgon/dp_doubling.hpp"

using namespace wgon;
using wgon::test::canonical_cycle;
using wgon::test::make_points;
using wgon::test::random_points;
using wgon::test::square_plus_inner;

TEST_CASE("merge schedule shapes") {
    CHECK(merge_schedule(8) ==
          std::vector<MergeStep>{{1, 1}, {2, 2}, {4, 4}});
    CHECK(merge_schedule(6) == std::vector<MergeStep>{{1, 1}, {2, 2}, {4, 2}});
    CHECK(merge_schedule(7) == std::vector<MergeStep>{{1, 1}, {2, 2}, {4, 2}, {6, 1}});
    CHECK(merge_schedule(1).empty());
    CHECK(merge_schedule(2) == std::vector<MergeStep>{{1, 1}});
    CHECK_THROWS_AS((void)merge_schedule(0), Error);

    // every step combines classes that exist by the time it runs
    for (int target = 1; target <= 64; ++target) {
        std::vector<int> built{1};
        for (const MergeStep& s : merge_schedule(target)) {
            CHECK(std::count(built.begin(), built.end(), s.left) > 0);
            CHECK(std::count(built.begin(), built.end(), s.right) > 0);
            built.push_back(s.left + s.right);
        }
        CHECK(built.back() == target);
    }
}

TEST_CASE("square corners: the unique 4-gon is found and valid") {
    const PointSet P = make_points({{0, 0}, {9, 0}, {9, 9}, {0, 9}});
    const Solution sol = solve_doubling(P, 4, make_weight(WeightId::Area2));
    REQUIRE(sol.feasible);
    CHECK(sol.valid);
    CHECK(sol.value.iv == 2 * 9 * 9);
    CHECK(canonical_cycle(sol.polygon, P) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("size 3 degenerates to exhaustive triangle search: always agrees") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const PointSet P = random_points(seed, 10);
        for (const WeightId id : {WeightId::Area2, WeightId::Perimeter}) {
            const WeightFunction wf = make_weight(id);
            const Solution dbl = solve_doubling(P, 3, wf);
            const Solution base = solve_exact_wgon(P, 3, wf);
            REQUIRE(dbl.feasible);
            CHECK(dbl.valid);
            CHECK(wf.equal(dbl.value, base.value));
        }
    }
}

TEST_CASE("valid witnesses are genuine w-gons bounded by the exact optimum") {
    for (std::uint64_t seed = 30; seed < 50; ++seed) {
        const PointSet P = random_points(seed, 10);
        for (const int w : {4, 8}) {
            for (const bool strict : {false, true}) {
                DoublingOptions opts;
                opts.strict_seam = strict;
                const Solution dbl = solve_doubling(P, w, make_weight(WeightId::Area2), opts);
                const Solution base = solve_exact_wgon(P, w, make_weight(WeightId::Area2));
                if (!base.feasible) {
                    // no convex w-gon exists, so no witness may validate
                    CHECK_FALSE(dbl.valid);
                    continue;
                }
                if (!dbl.feasible || !dbl.valid) continue;
                REQUIRE(static_cast<int>(dbl.polygon.size()) == w);
                std::vector<int> sorted = dbl.polygon;
                std::sort(sorted.begin(), sorted.end());
                CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
                CHECK(is_convex_ccw(gather(P, dbl.polygon)));
                CHECK(polygon_weight(dbl.polygon, P, make_weight(WeightId::Area2)).iv == dbl.value.iv);
                CHECK(dbl.value.iv >= base.value.iv);
            }
        }
    }
}

TEST_CASE("deterministic across repeated and parallel runs") {
    const PointSet P = random_points(123, 12);
    DoublingOptions seq;
    DoublingOptions par;
    par.threads = 4;
    const Solution a = solve_doubling(P, 6, make_weight(WeightId::Area2), seq);
    const Solution b = solve_doubling(P, 6, make_weight(WeightId::Area2), seq);
    const Solution c = solve_doubling(P, 6, make_weight(WeightId::Area2), par);
    CHECK(a.feasible == b.feasible);
    CHECK(a.valid == b.valid);
    CHECK(a.polygon == b.polygon);
    CHECK(a.value.iv == b.value.iv);
    CHECK(a.feasible == c.feasible);
    CHECK(a.valid == c.valid);
    CHECK(a.polygon == c.polygon);
    CHECK(a.value.iv == c.value.iv);
}

TEST_CASE("conformance report measures agreement without asserting it") {
    std::vector<PointSet> instances;
    for (std::uint64_t seed = 200; seed < 210; ++seed) instances.push_back(random_points(seed, 10));
    const std::vector<int> ws{3, 4};
    const ConformanceReport report =
        run_conformance(instances, ws, make_weight(WeightId::Area2));
    REQUIRE(report.rows.size() == instances.size() * ws.size());
    for (const ConformanceRow& row : report.rows) {
        CHECK(row.n == 10);
        if (row.agreement) {
            REQUIRE(row.baseline_feasible == row.doubling_feasible);
            if (row.baseline_feasible) CHECK(row.baseline_value.iv == row.doubling_value.iv);
        }
        if (row.w == 3) CHECK(row.agreement);
    }
    CHECK(report.agreement_rate() > 0.0);
}

TEST_CASE("maximizing weights flow through the relaxation unchanged") {
    std::vector<PointSet> instances;
    for (std::uint64_t seed = 600; seed < 606; ++seed) instances.push_back(random_points(seed, 9));
    const std::vector<int> ws{3, 4};
    const ConformanceReport report =
        run_conformance(instances, ws, make_weight(WeightId::Coverage));
    for (const ConformanceRow& row : report.rows) {
        if (row.w == 3) CHECK(row.agreement); // exhaustive in both algorithms
        if (row.agreement && row.baseline_feasible)
            CHECK(row.baseline_value.iv == row.doubling_value.iv);
    }
}

TEST_CASE("conformance on an empty instance list is empty") {
    const std::vector<PointSet> none;
    const std::vector<int> ws{4};
    CHECK(run_conformance(none, ws, make_weight(WeightId::Area2)).rows.empty());
}

TEST_CASE("size class tables: atoms, end bookkeeping and merge provenance") {
    const PointSet P = random_points(321, 9);
    const WeightFunction wf = make_weight(WeightId::Area2);
    const int bottom = 0;
    const auto tables = doubling_tables(P, bottom, 6, wf);
    // classes for w = 6: target 4 via {1, 2, 4}
    REQUIRE(tables.size() == 3);
    CHECK(tables[0].edges == 1);
    CHECK(tables[1].edges == 2);
    CHECK(tables[2].edges == 4);
    CHECK(tables[1].from_left == 1);
    CHECK(tables[1].from_right == 1);
    CHECK(tables[2].from_left == 2);
    CHECK(tables[2].from_right == 2);

    const int n = P.size();
    const auto& atoms = tables[0];
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
            const WeightValue& v = atoms.cost[static_cast<size_t>(j * n + l)];
            const bool fan = j != l && lex_yx_less(P[bottom], P[j]) && lex_yx_less(P[bottom], P[l]) &&
                             orientation(P[bottom], P[j], P[l]) == Orient::CCW;
            CHECK(wf.is_set(v) == fan);
            if (fan) {
                CHECK(v.iv == triangle_area2(P[bottom], P[j], P[l]));
                CHECK(atoms.seam[static_cast<size_t>(j * n + l)] == -1);
            }
        }
    // the recorded end of each row is its best finite cell
    for (int j = 0; j < n; ++j) {
        const int e = atoms.end[static_cast<size_t>(j)];
        if (e < 0) continue;
        const WeightValue& at_end = atoms.cost[static_cast<size_t>(j * n + e)];
        REQUIRE(wf.is_set(at_end));
        for (int l = 0; l < n; ++l) {
            const WeightValue& v = atoms.cost[static_cast<size_t>(j * n + l)];
            if (wf.is_set(v)) CHECK_FALSE(wf.better(v, at_end));
        }
    }
    // merged cells carry a seam inside the candidate set
    const auto& quads = tables[1];
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
            if (!wf.is_set(quads.cost[static_cast<size_t>(j * n + l)])) continue;
            const int r = quads.seam[static_cast<size_t>(j * n + l)];
            REQUIRE(r >= 0);
            CHECK(r != j);
            CHECK(r != l);
            CHECK(lex_yx_less(P[bottom], P[r]));
        }
}

TEST_CASE("doubling parameter validation") {
    const PointSet P = square_plus_inner();
    CHECK_THROWS_AS((void)solve_doubling(P, 2, make_weight(WeightId::Area2)), Error);
    CHECK_THROWS_AS((void)solve_doubling(P, 6, make_weight(WeightId::Area2)), Error);
}
