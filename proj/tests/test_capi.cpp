#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "wgon.h"

namespace {

struct Cleanup {
    wg_points* pts = nullptr;
    wg_solution* sol = nullptr;
    char* str = nullptr;
    ~Cleanup() {
        wg_points_free(pts);
        wg_solution_free(sol);
        wg_string_free(str);
    }
};

const int64_t kWorked[] = {0, 0, 10, 0, 10, 10, 0, 10, 4, 5};

} // namespace

TEST_CASE("create, inspect and free a point set") {
    wg_points* pts = nullptr;
    REQUIRE(wg_points_create(kWorked, 5, &pts) == WG_OK);
    CHECK(wg_points_count(pts) == 5);
    int64_t x = -1, y = -1;
    REQUIRE(wg_points_get(pts, 4, &x, &y) == WG_OK);
    CHECK(x == 4);
    CHECK(y == 5);
    CHECK(wg_points_get(pts, 9, &x, &y) == WG_EINVAL);
    CHECK(wg_points_degenerate(pts) == 0);
    wg_points_free(pts);
}

TEST_CASE("status codes carry through the boundary") {
    wg_points* pts = nullptr;
    CHECK(wg_points_create(kWorked, 2, &pts) == WG_EINVAL);
    CHECK(pts == nullptr);
    CHECK(std::string(wg_last_error()).find("3 points") != std::string::npos);

    CHECK(wg_points_parse("0,0\nbroken\n", &pts) == WG_EPARSE);
    CHECK(wg_points_load("/definitely/not/here.csv", &pts) == WG_EIO);
    CHECK(wg_points_generate(3, 1, 1, "uniform", &pts) == WG_EINVAL);
    CHECK(wg_points_generate(5, 1, 100, "dodecahedron", &pts) == WG_EINVAL);

    CHECK(std::string(wg_status_name(WG_EDEGENERATE)) == "degenerate-input");
    CHECK(std::string(wg_version()) == "0.1.0");
}

TEST_CASE("degenerate detection reports violations") {
    const int64_t collinear[] = {0, 0, 1, 1, 2, 2, 5, 0};
    wg_points* pts = nullptr;
    REQUIRE(wg_points_create(collinear, 4, &pts) == WG_OK);
    CHECK(wg_points_degenerate(pts) == 1);
    CHECK(std::string(wg_last_error()).find("collinear") != std::string::npos);

    wg_solve_options opts;
    wg_solve_options_init(&opts);
    wg_solution* sol = nullptr;
    CHECK(wg_solve(pts, &opts, &sol) == WG_EDEGENERATE);
    CHECK(sol == nullptr);
    wg_points_free(pts);
}

TEST_CASE("solve the worked instance through the C surface") {
    Cleanup c;
    REQUIRE(wg_points_create(kWorked, 5, &c.pts) == WG_OK);

    wg_solve_options opts;
    wg_solve_options_init(&opts);
    opts.objective = "minch";
    opts.w = 4;
    REQUIRE(wg_solve(c.pts, &opts, &c.sol) == WG_OK);
    CHECK(wg_solution_feasible(c.sol) == 1);
    CHECK(wg_solution_valid(c.sol) == 1);
    int64_t hull = 0;
    REQUIRE(wg_solution_value_int(c.sol, &hull) == WG_OK);
    CHECK(hull == 3);
    CHECK(wg_solution_size(c.sol) == 3);
    CHECK(wg_solution_outlier_count(c.sol) == 1);
    CHECK(wg_solution_coverage(c.sol) == 4);
    CHECK(std::string(wg_solution_algorithm(c.sol)) == "baseline");
    CHECK(wg_solution_vertex(c.sol, 0) >= 0);
    CHECK(wg_solution_vertex(c.sol, 7) == -1);

    c.str = wg_solution_to_json(c.sol);
    REQUIRE(c.str != nullptr);
    CHECK(std::string(c.str).find("\"hull_size\": 3") != std::string::npos);
}

TEST_CASE("value accessors refuse the wrong form") {
    Cleanup c;
    REQUIRE(wg_points_create(kWorked, 5, &c.pts) == WG_OK);
    wg_solve_options opts;
    wg_solve_options_init(&opts);
    opts.objective = "min-perimeter";
    opts.w = 3;
    REQUIRE(wg_solve(c.pts, &opts, &c.sol) == WG_OK);
    int64_t iv = 0;
    CHECK(wg_solution_value_int(c.sol, &iv) == WG_EINVAL);
    double rv = 0.0;
    REQUIRE(wg_solution_value_real(c.sol, &rv) == WG_OK);
    CHECK(rv > 0.0);
}

TEST_CASE("solution json without stats is reproducible") {
    Cleanup a, b;
    REQUIRE(wg_points_create(kWorked, 5, &a.pts) == WG_OK);
    REQUIRE(wg_points_create(kWorked, 5, &b.pts) == WG_OK);
    wg_solve_options opts;
    wg_solve_options_init(&opts);
    opts.objective = "min-area";
    opts.w = 4;
    REQUIRE(wg_solve(a.pts, &opts, &a.sol) == WG_OK);
    REQUIRE(wg_solve(b.pts, &opts, &b.sol) == WG_OK);
    a.str = wg_solution_to_json_no_stats(a.sol);
    b.str = wg_solution_to_json_no_stats(b.sol);
    CHECK(std::string(a.str) == std::string(b.str));
}

TEST_CASE("generate, serialize and re-parse through the C surface") {
    Cleanup c;
    REQUIRE(wg_points_generate(12, 77, 500, "annulus", &c.pts) == WG_OK);
    CHECK(wg_points_count(c.pts) == 12);
    CHECK(wg_points_degenerate(c.pts) == 0);
    c.str = wg_points_to_csv(c.pts);
    REQUIRE(c.str != nullptr);
    wg_points* back = nullptr;
    REQUIRE(wg_points_parse(c.str, &back) == WG_OK);
    CHECK(wg_points_count(back) == 12);
    char* json = wg_points_to_json(back);
    CHECK(json != nullptr);
    wg_string_free(json);
    wg_points_free(back);
}

TEST_CASE("svg rendering through the C surface") {
    Cleanup c;
    REQUIRE(wg_points_create(kWorked, 5, &c.pts) == WG_OK);
    wg_solve_options opts;
    wg_solve_options_init(&opts);
    opts.objective = "min-area";
    opts.w = 3;
    REQUIRE(wg_solve(c.pts, &opts, &c.sol) == WG_OK);
    c.str = wg_render_svg(c.pts, c.sol);
    REQUIRE(c.str != nullptr);
    const std::string svg(c.str);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<path") != std::string::npos);

    const int polygon[] = {0, 1, 2};
    const int outliers[] = {4};
    char* svg2 = wg_render_svg_indices(c.pts, polygon, 3, outliers, 1);
    REQUIRE(svg2 != nullptr);
    CHECK(std::string(svg2).find("<line") != std::string::npos);
    wg_string_free(svg2);

    const int bad[] = {0, 1, 99};
    CHECK(wg_render_svg_indices(c.pts, bad, 3, nullptr, 0) == nullptr);
}

TEST_CASE("conformance through the C surface") {
    wg_points* a = nullptr;
    wg_points* b = nullptr;
    REQUIRE(wg_points_generate(8, 1, 100, "uniform", &a) == WG_OK);
    REQUIRE(wg_points_generate(8, 2, 100, "uniform", &b) == WG_OK);
    const wg_points* instances[] = {a, b};
    const int ws[] = {3, 4};
    char* csv = nullptr;
    REQUIRE(wg_conformance(instances, 2, ws, 2, "area2", 0, 1, &csv) == WG_OK);
    REQUIRE(csv != nullptr);
    const std::string text(csv);
    CHECK(text.rfind("n,w,weight,mode", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 5);
    wg_string_free(csv);
    wg_points_free(a);
    wg_points_free(b);
}

TEST_CASE("budget solve through the C surface") {
    Cleanup c;
    REQUIRE(wg_points_create(kWorked, 5, &c.pts) == WG_OK);
    wg_solve_options opts;
    wg_solve_options_init(&opts);
    opts.objective = "budget";
    opts.has_budget_area2 = 1;
    opts.budget_area2 = 10;
    REQUIRE(wg_solve(c.pts, &opts, &c.sol) == WG_OK);
    CHECK(wg_solution_feasible(c.sol) == 1);
    int64_t m = 0;
    REQUIRE(wg_solution_value_int(c.sol, &m) == WG_OK);
    CHECK(m == 3);

    // infeasible budgets are results, not errors
    wg_solution* zero = nullptr;
    opts.budget_area2 = 0;
    REQUIRE(wg_solve(c.pts, &opts, &zero) == WG_OK);
    CHECK(wg_solution_feasible(zero) == 0);
    wg_solution_free(zero);
}
