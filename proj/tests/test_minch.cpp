#include <doctest.h>

#include <algorithm>

#include "test_util.hpp"
#include "wgon/minch.hpp"
#include "wgon/oracle.hpp"

using namespace wgon;
using wgon::test::canonical_cycle;
using wgon::test::make_points;
using wgon::test::random_points;
using wgon::test::square_plus_inner;

namespace {

void audit(const PointSet& P, const MinchResult& r, int w) {
    REQUIRE(r.feasible);
    REQUIRE(static_cast<int>(r.polygon.size()) == r.hull_size);
    CHECK(r.coverage >= w);
    CHECK(static_cast<int>(r.outliers.size()) == P.size() - r.coverage);

    if (r.hull_size >= 3) {
        // partition: every point is a vertex, strictly inside, or an outlier
        const auto pts = gather(P, r.polygon);
        REQUIRE(is_convex_ccw(pts));
        std::int64_t covered = 0;
        for (int q = 0; q < P.size(); ++q) {
            const bool inside = contains_on_or_inside(pts, P[q]);
            const bool out = std::find(r.outliers.begin(), r.outliers.end(), q) != r.outliers.end();
            CHECK(inside != out);
            if (inside) ++covered;
        }
        CHECK(covered == r.coverage);

        // the witness is the hull of the kept points
        std::vector<int> kept;
        for (int q = 0; q < P.size(); ++q)
            if (std::find(r.outliers.begin(), r.outliers.end(), q) == r.outliers.end())
                kept.push_back(q);
        const auto hull = convex_hull_subset(P, kept);
        CHECK(canonical_cycle(r.polygon, P) == hull);
    }
}

} // namespace

TEST_CASE("worked instance: dropping one corner leaves a triangle") {
    const PointSet P = square_plus_inner();
    const MinchResult r = solve_minch(P, 4);
    CHECK(r.hull_size == 3);
    CHECK(r.coverage == 4);
    CHECK(r.outliers.size() == 1);
    audit(P, r, 4);
}

TEST_CASE("worked instance: keeping all five points needs the square") {
    const PointSet P = square_plus_inner();
    const MinchResult r = solve_minch(P, 5);
    CHECK(r.hull_size == 4);
    CHECK(r.coverage == 5);
    CHECK(r.outliers.empty());
    audit(P, r, 5);
}

TEST_CASE("w = 3 is always a triangle") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const PointSet P = random_points(seed, 9);
        const MinchResult r = solve_minch(P, 3);
        CHECK(r.hull_size == 3);
        audit(P, r, 3);
    }
}

TEST_CASE("degenerate kept-point counts") {
    const PointSet P = square_plus_inner();
    const MinchResult one = solve_minch(P, 1);
    CHECK(one.hull_size == 1);
    CHECK(one.polygon.size() == 1);
    CHECK(one.outliers.size() == 4);
    const MinchResult two = solve_minch(P, 2);
    CHECK(two.hull_size == 2);
    CHECK(two.polygon.size() == 2);
}

TEST_CASE("parameter validation") {
    const PointSet P = square_plus_inner();
    CHECK_THROWS_AS((void)solve_minch(P, 0), Error);
    CHECK_THROWS_AS((void)solve_minch(P, 6), Error);
}

TEST_CASE("oracle equivalence across full w sweeps") {
    for (std::uint64_t seed = 10; seed < 22; ++seed) {
        const PointSet P = random_points(seed, 9);
        int prev = 0;
        for (int w = 3; w <= 9; ++w) {
            const MinchResult dp = solve_minch(P, w);
            const MinchResult oracle = oracle_minch(P, w);
            CHECK(dp.hull_size == oracle.hull_size);
            audit(P, dp, w);
            // more points to keep can never need fewer hull vertices
            CHECK(dp.hull_size >= prev);
            prev = dp.hull_size;
        }
    }
}

TEST_CASE("budget: worked instance thresholds") {
    const PointSet P = square_plus_inner();
    const WeightFunction area = make_weight(WeightId::Area2);

    // the smallest triangle has twice-area 10
    const MinchResult m10 = solve_budget(P, area, WeightValue::of_int(10));
    REQUIRE(m10.feasible);
    CHECK(m10.hull_size == 3);

    const MinchResult m40 = solve_budget(P, area, WeightValue::of_int(40));
    REQUIRE(m40.feasible);
    CHECK(m40.hull_size == 3);

    // nothing fits in budget zero under general position
    const MinchResult zero = solve_budget(P, area, WeightValue::of_int(0));
    CHECK_FALSE(zero.feasible);

    // the hull's own weight is always enough for some polygon of at most
    // hull-many vertices
    const std::vector<int> hull = convex_hull(P.span());
    const WeightValue hull_area = polygon_weight(hull, P, area);
    const MinchResult big = solve_budget(P, area, hull_area);
    REQUIRE(big.feasible);
    CHECK(big.hull_size <= static_cast<int>(hull.size()));

    CHECK_THROWS_AS((void)solve_budget(P, area, WeightValue::of_int(-1)), Error);
    CHECK_THROWS_AS(
        (void)solve_budget(P, make_weight(WeightId::VertexCount), WeightValue::of_int(5)), Error);
}

TEST_CASE("experimental doubling sweep: sound when feasible, never beats exact") {
    int feasible = 0, agree = 0, total = 0;
    for (std::uint64_t seed = 70; seed < 90; ++seed) {
        const PointSet P = random_points(seed, 10);
        for (int w = 3; w <= 8; ++w) {
            ++total;
            const MinchResult exact = solve_minch(P, w);
            const MinchResult exp = solve_minch_doubling(P, w);
            if (!exp.feasible) continue;
            ++feasible;
            audit(P, exp, w);
            CHECK(exp.hull_size >= exact.hull_size);
            if (exp.hull_size == exact.hull_size) ++agree;
        }
    }
    // the heuristic sweep must at least produce answers regularly; its
    // agreement with the exact solver is measured, not asserted
    CHECK(feasible > total / 2);
    MESSAGE("doubling minch: ", feasible, "/", total, " feasible, ", agree, " matching the exact size");
}

TEST_CASE("budget: matches the oracle on random instances, both metrics") {
    for (std::uint64_t seed = 40; seed < 52; ++seed) {
        const PointSet P = random_points(seed, 9);
        const WeightFunction area = make_weight(WeightId::Area2);
        const Solution tri = oracle_wgon(P, 3, area);
        REQUIRE(tri.feasible);
        for (const std::int64_t budget :
             {tri.value.iv - 1, tri.value.iv, 2 * tri.value.iv, 20 * tri.value.iv}) {
            if (budget < 0) continue;
            const MinchResult dp = solve_budget(P, area, WeightValue::of_int(budget));
            const MinchResult oracle = oracle_budget(P, area, WeightValue::of_int(budget));
            REQUIRE(dp.feasible == oracle.feasible);
            if (dp.feasible) CHECK(dp.hull_size == oracle.hull_size);
        }

        const WeightFunction perim = make_weight(WeightId::Perimeter);
        const Solution ptri = oracle_wgon(P, 3, perim);
        for (const double budget : {ptri.value.rv * 0.999, ptri.value.rv * 1.5}) {
            const MinchResult dp = solve_budget(P, perim, WeightValue::of_real(budget));
            const MinchResult oracle = oracle_budget(P, perim, WeightValue::of_real(budget));
            REQUIRE(dp.feasible == oracle.feasible);
            if (dp.feasible) CHECK(dp.hull_size == oracle.hull_size);
        }
    }
}
