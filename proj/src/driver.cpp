#include "wgon/driver.hpp"

#include <algorithm>

#include "wgon/dp_baseline.hpp"

namespace wgon {

std::string objective_name(Objective o) {
    switch (o) {
        case Objective::MinArea: return "min-area";
        case Objective::MinPerimeter: return "min-perimeter";
        case Objective::Minch: return "minch";
        case Objective::Budget: return "budget";
    }
    return "?";
}

Objective objective_from_name(const std::string& name) {
    if (name == "min-area") return Objective::MinArea;
    if (name == "min-perimeter") return Objective::MinPerimeter;
    if (name == "minch") return Objective::Minch;
    if (name == "budget") return Objective::Budget;
    fail(Errc::invalid_argument, "unknown objective '" + name + "'");
}

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Baseline: return "baseline";
        case Algorithm::Doubling: return "doubling";
        case Algorithm::Oracle: return "oracle";
    }
    return "?";
}

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "baseline") return Algorithm::Baseline;
    if (name == "doubling") return Algorithm::Doubling;
    if (name == "oracle") return Algorithm::Oracle;
    fail(Errc::invalid_argument, "unknown algorithm '" + name + "'");
}

namespace {

void fill_from_solution(SolutionRecord& rec, const Solution& sol) {
    rec.algorithm = sol.algorithm;
    rec.weight = weight_name(sol.weight);
    rec.direction = sol.direction == Direction::Min ? "min" : "max";
    rec.feasible = sol.feasible;
    rec.valid = sol.valid;
    rec.integral_value = sol.weight != WeightId::Perimeter;
    rec.value_int = sol.value.iv;
    rec.value_real = sol.weight == WeightId::Perimeter ? sol.value.rv
                                                       : static_cast<double>(sol.value.iv);
    rec.polygon = sol.polygon;
    if (sol.outliers) rec.outliers = *sol.outliers;
    rec.coverage = sol.coverage;
    rec.stats = sol.stats;
}

void fill_from_minch(SolutionRecord& rec, const MinchResult& res, const char* weight) {
    rec.algorithm = res.algorithm;
    rec.weight = weight;
    rec.direction = "min";
    rec.feasible = res.feasible;
    rec.valid = res.feasible;
    rec.integral_value = true;
    rec.value_int = res.hull_size;
    rec.value_real = static_cast<double>(res.hull_size);
    rec.polygon = res.polygon;
    rec.outliers = res.outliers;
    rec.coverage = res.coverage;
    rec.stats = res.stats;
}

} // namespace

SolutionRecord run_solve(const Instance& inst, const SolveRequest& req) {
    const Instance* active = &inst;
    Instance perturbed_storage;

    SolutionRecord rec;
    rec.objective = objective_name(req.objective);
    rec.w = req.objective == Objective::Budget ? std::optional<int>{} : std::optional<int>{req.w};
    rec.budget_area2 = req.budget_area2;
    rec.budget_perimeter = req.budget_perimeter;
    rec.parallel = req.threads != 1;
    rec.strict_seam = req.strict_seam;
    rec.instance_checksum = instance_checksum(inst);
    rec.n = inst.points.size();

    if (!validate_general_position(inst.points).empty()) {
        if (!req.perturb_if_degenerate) require_general_position(inst.points); // throws with details
        perturbed_storage = perturb(inst);
        active = &perturbed_storage;
        rec.perturbed = true;
        rec.perturb_seed = perturbed_storage.perturb->seed;
    } else if (inst.perturb) {
        rec.perturbed = true;
        rec.perturb_seed = inst.perturb->seed;
    }

    const PointSet& P = active->points;
    const int n = P.size();
    const int dp_cap = req.allow_large ? kMaxPoints : kMaxPointsDp;
    const int oracle_cap = req.allow_large ? kMaxPoints : kMaxPointsOracle;
    if (req.algorithm == Algorithm::Oracle ? n > oracle_cap : n > dp_cap)
        fail(Errc::limit_exceeded,
             "instance has " + std::to_string(n) + " points, over the guardrail for this algorithm " +
                 "(pass the allow-large flag to override)");

    switch (req.objective) {
        case Objective::MinArea:
        case Objective::MinPerimeter: {
            const WeightFunction wf = make_weight(
                req.objective == Objective::MinArea ? WeightId::Area2 : WeightId::Perimeter);
            Solution sol;
            switch (req.algorithm) {
                case Algorithm::Baseline:
                    sol = solve_exact_wgon(P, req.w, wf, BaselineOptions{req.threads});
                    break;
                case Algorithm::Doubling:
                    sol = solve_doubling(P, req.w, wf, DoublingOptions{req.threads, req.strict_seam});
                    break;
                case Algorithm::Oracle:
                    sol = oracle_wgon(P, req.w, wf, req.oracle_budget_caps);
                    break;
            }
            fill_from_solution(rec, sol);
            break;
        }
        case Objective::Minch: {
            MinchResult res;
            if (req.algorithm == Algorithm::Doubling) {
                // The scalar doubling table cannot carry the coverage
                // constraint exactly, so this path stays opt-in.
                if (!req.experimental)
                    fail(Errc::invalid_argument,
                         "minch via the doubling merge is a measured, non-exact path; pass the "
                         "experimental flag to run it");
                res = solve_minch_doubling(P, req.w, MinchOptions{req.threads});
            } else if (req.algorithm == Algorithm::Oracle) {
                res = oracle_minch(P, req.w, req.oracle_budget_caps);
            } else {
                res = solve_minch(P, req.w, MinchOptions{req.threads});
            }
            fill_from_minch(rec, res, "coverage");
            break;
        }
        case Objective::Budget: {
            const bool area = req.budget_area2.has_value();
            const bool perim = req.budget_perimeter.has_value();
            if (area == perim)
                fail(Errc::invalid_argument, "budget objective needs exactly one of an area2 or "
                                             "perimeter budget");
            const WeightFunction wf = make_weight(area ? WeightId::Area2 : WeightId::Perimeter);
            const WeightValue budget =
                area ? WeightValue::of_int(*req.budget_area2) : WeightValue::of_real(*req.budget_perimeter);
            MinchResult res = req.algorithm == Algorithm::Oracle
                                  ? oracle_budget(P, wf, budget, req.oracle_budget_caps)
                                  : solve_budget(P, wf, budget, MinchOptions{req.threads});
            fill_from_minch(rec, res, area ? "area2" : "perimeter");
            break;
        }
    }
    return rec;
}

} // namespace wgon
