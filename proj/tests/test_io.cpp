#include <doctest.h>

#include <algorithm>

#include <json.hpp>

#include "test_util.hpp"
#include "wgon/driver.hpp"
#include "wgon/parallel.hpp"
#include "wgon/solution_io.hpp"

using namespace wgon;
using wgon::test::make_points;

TEST_CASE("generation is deterministic and in general position") {
    GenSpec spec;
    spec.n = 5;
    spec.seed = 1;
    spec.range = 100;
    const Instance a = generate(spec);
    const Instance b = generate(spec);
    CHECK(to_csv(a) == to_csv(b));
    CHECK(to_json(a) == to_json(b));

    for (const GenShape shape : {GenShape::Uniform, GenShape::Annulus, GenShape::Clustered}) {
        GenSpec s;
        s.n = 50;
        s.seed = 9;
        s.range = 1000;
        s.shape = shape;
        const Instance inst = generate(s);
        CHECK(validate_general_position(inst.points).empty());
        CHECK(inst.points.size() == 50);
    }
}

TEST_CASE("generation rejects a lattice too small for the request") {
    GenSpec spec;
    spec.n = 3;
    spec.seed = 1;
    spec.range = 1;
    CHECK_THROWS_AS((void)generate(spec), Error);
    try {
        (void)generate(spec);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::invalid_argument);
    }
}

TEST_CASE("csv round trip is the identity on canonical files") {
    const std::string canonical = "0,0\n10,0\n10,10\n0,10\n4,5\n";
    const Instance inst = parse_instance(canonical);
    CHECK(inst.points.size() == 5);
    CHECK(to_csv(inst) == canonical);

    // comments and blank lines are accepted but not canonical
    const Instance relaxed = parse_instance("# corpus\n\n0,0\n10,0\n10,10\n0,10\n4,5\n");
    CHECK(to_csv(relaxed) == canonical);
}

TEST_CASE("json round trip preserves points and metadata") {
    GenSpec spec;
    spec.n = 6;
    spec.seed = 3;
    spec.range = 50;
    const Instance inst = generate(spec);
    const std::string text = to_json(inst);
    const Instance back = parse_instance(text);
    CHECK(back.points.points() == inst.points.points());
    REQUIRE(back.gen.has_value());
    CHECK(back.gen->seed == 3);
    CHECK(to_json(back) == text);
}

TEST_CASE("parse errors carry the parse code") {
    try {
        (void)parse_instance("0,0\nbroken\n1,1\n");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::parse);
    }
    CHECK_THROWS_AS((void)parse_instance(""), Error);
}

TEST_CASE("perturbation reaches general position deterministically") {
    // collinear input: the raw points cannot be solved directly
    std::vector<Point> pts{{0, 0}, {1, 1}, {2, 2}, {5, 0}, {0, 5}};
    Instance inst;
    inst.points = PointSet::create(std::move(pts));
    REQUIRE_FALSE(validate_general_position(inst.points).empty());

    const Instance a = perturb(inst);
    const Instance b = perturb(inst);
    CHECK(validate_general_position(a.points).empty());
    CHECK(a.points.points() == b.points.points());
    REQUIRE(a.perturb.has_value());
    CHECK(a.perturb->scale == 8);
    // offsets stay within one lattice unit of the scaled coordinates
    for (int q = 0; q < inst.points.size(); ++q) {
        CHECK(std::abs(a.points[q].x - 8 * inst.points[q].x) <= 1);
        CHECK(std::abs(a.points[q].y - 8 * inst.points[q].y) <= 1);
    }
}

TEST_CASE("solve driver produces a stable record and json") {
    const Instance inst = parse_instance("0,0\n10,0\n10,10\n0,10\n4,5\n");
    SolveRequest req;
    req.objective = Objective::MinArea;
    req.algorithm = Algorithm::Baseline;
    req.w = 3;
    const SolutionRecord rec = run_solve(inst, req);
    CHECK(rec.feasible);
    CHECK(rec.value_int == 10);
    CHECK(rec.n == 5);
    CHECK(rec.objective == "min-area");

    const std::string j1 = record_to_json_no_stats(rec);
    const std::string j2 = record_to_json_no_stats(run_solve(inst, req));
    CHECK(j1 == j2);

    const auto parsed = nlohmann::json::parse(record_to_json(rec));
    CHECK(parsed["value"]["twice_area"] == 10);
    CHECK(parsed["value"]["area"] == doctest::Approx(5.0));
    CHECK(parsed["instance"]["n"] == 5);
    CHECK(parsed.contains("stats"));
}

TEST_CASE("degenerate inputs fail unless perturbation is requested") {
    Instance inst;
    inst.points = PointSet::create({{0, 0}, {1, 1}, {2, 2}, {5, 0}, {0, 5}});
    SolveRequest req;
    req.w = 3;
    CHECK_THROWS_AS((void)run_solve(inst, req), Error);
    req.perturb_if_degenerate = true;
    const SolutionRecord rec = run_solve(inst, req);
    CHECK(rec.feasible);
    CHECK(rec.perturbed);
    const auto parsed = nlohmann::json::parse(record_to_json(rec));
    CHECK(parsed["instance"]["perturbed"] == true);
}

TEST_CASE("budget objective rejects ambiguous or missing budgets") {
    const Instance inst = parse_instance("0,0\n10,0\n10,10\n0,10\n4,5\n");
    SolveRequest req;
    req.objective = Objective::Budget;
    CHECK_THROWS_AS((void)run_solve(inst, req), Error);
    req.budget_area2 = 10;
    req.budget_perimeter = 5.0;
    CHECK_THROWS_AS((void)run_solve(inst, req), Error);
    req.budget_perimeter.reset();
    const SolutionRecord rec = run_solve(inst, req);
    CHECK(rec.feasible);
    CHECK(rec.value_int == 3);
}

TEST_CASE("guardrails: oracle refuses large instances unless lifted") {
    GenSpec spec;
    spec.n = 16;
    spec.seed = 5;
    spec.range = 1000;
    Instance inst = generate(spec);
    SolveRequest req;
    req.algorithm = Algorithm::Oracle;
    req.w = 3;
    CHECK_THROWS_AS((void)run_solve(inst, req), Error);
    req.allow_large = true;
    const SolutionRecord rec = run_solve(inst, req);
    CHECK(rec.feasible);
}

TEST_CASE("svg output contains one glyph per point and a single path") {
    const Instance inst = parse_instance("0,0\n10,0\n10,10\n0,10\n4,5\n");
    SolveRequest req;
    req.objective = Objective::Minch;
    req.w = 4;
    const SolutionRecord rec = run_solve(inst, req);
    const std::string svg = render_svg(inst, &rec);

    auto count = [](const std::string& text, const std::string& needle) {
        size_t c = 0, pos = 0;
        while ((pos = text.find(needle, pos)) != std::string::npos) {
            ++c;
            pos += needle.size();
        }
        return c;
    };
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count(svg, "<circle") == 5);
    CHECK(count(svg, "<path") == 1);
    CHECK(count(svg, "<line") == 2 * rec.outliers.size());

    const std::string bare = render_svg(inst, nullptr);
    CHECK(count(bare, "<circle") == 5);
    CHECK(bare.find("<path") == std::string::npos);
}

TEST_CASE("conformance csv has a header and one row per pair") {
    std::vector<PointSet> instances;
    for (std::uint64_t seed = 500; seed < 503; ++seed)
        instances.push_back(wgon::test::random_points(seed, 8));
    const std::vector<int> ws{3, 4};
    const ConformanceReport report = run_conformance(instances, ws, make_weight(WeightId::Area2));
    const std::string csv = conformance_csv(report);
    const size_t lines = static_cast<size_t>(std::count(csv.begin(), csv.end(), '\n'));
    CHECK(lines == 1 + instances.size() * ws.size());
    CHECK(csv.rfind("n,w,weight,mode", 0) == 0);
}

TEST_CASE("thread resolution: explicit beats env beats hardware") {
    setenv("WGON_THREADS", "3", 1);
    CHECK(resolve_threads(2) == 2);
    CHECK(resolve_threads(0) == 3);
    unsetenv("WGON_THREADS");
    CHECK(resolve_threads(0) >= 1);
    CHECK(resolve_threads(1) == 1);
}

TEST_CASE("minch via doubling stays behind the experimental flag") {
    const Instance inst = parse_instance("0,0\n10,0\n10,10\n0,10\n4,5\n");
    SolveRequest req;
    req.objective = Objective::Minch;
    req.algorithm = Algorithm::Doubling;
    req.w = 4;
    CHECK_THROWS_AS((void)run_solve(inst, req), Error);
    req.experimental = true;
    const SolutionRecord rec = run_solve(inst, req);
    CHECK(rec.algorithm == "doubling-experimental");
}

TEST_CASE("instance scaling multiplies coordinates exactly") {
    const Instance inst = parse_instance("0,0\n10,0\n10,10\n0,10\n4,5\n");
    const Instance scaled = scale_instance(inst, 3);
    for (int q = 0; q < inst.points.size(); ++q) {
        CHECK(scaled.points[q].x == 3 * inst.points[q].x);
        CHECK(scaled.points[q].y == 3 * inst.points[q].y);
    }
    CHECK_THROWS_AS((void)scale_instance(inst, 0), Error);
}
