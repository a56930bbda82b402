#pragma once

#include <optional>
#include <string>

#include "wgon/dp_doubling.hpp"
#include "wgon/instance.hpp"
#include "wgon/minch.hpp"
#include "wgon/oracle.hpp"
#include "wgon/solution.hpp"

namespace wgon {

enum class Objective { MinArea, MinPerimeter, Minch, Budget };
enum class Algorithm { Baseline, Doubling, Oracle };

std::string objective_name(Objective o);
Objective objective_from_name(const std::string& name);
std::string algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

struct SolveRequest {
    Objective objective = Objective::MinArea;
    Algorithm algorithm = Algorithm::Baseline;
    int w = 0;                       // polygon size / kept-point count
    std::optional<std::int64_t> budget_area2; // Budget objective, area metric
    std::optional<double> budget_perimeter;   // Budget objective, perimeter metric
    int threads = 1;                 // 0 = auto (WGON_THREADS / hardware)
    bool strict_seam = false;
    bool perturb_if_degenerate = false;
    bool allow_large = false;        // lift the desk-scale guardrails
    bool experimental = false;       // unlock measured-but-unproven paths
    EnumerationBudget oracle_budget_caps;
};

/// Everything a solution file records. Building the record (not the JSON) is
/// the core's job so that the C API and the CLI stay thin.
struct SolutionRecord {
    std::string objective;
    std::string algorithm;
    std::string weight;
    std::string direction;
    std::optional<int> w;
    std::optional<std::int64_t> budget_area2;
    std::optional<double> budget_perimeter;
    bool feasible = false;
    bool valid = false;
    bool integral_value = true;
    std::int64_t value_int = 0;  // twice-area / vertex count / hull size / coverage
    double value_real = 0.0;     // perimeter; for area also the halved decimal
    std::vector<int> polygon;
    std::vector<int> outliers;
    std::optional<std::int64_t> coverage;
    SolveStats stats;
    bool parallel = false;
    bool strict_seam = false;
    bool perturbed = false;
    std::uint64_t perturb_seed = 0;
    std::uint64_t instance_checksum = 0;
    int n = 0;
};

/// Guardrails (overridable via SolveRequest::allow_large).
inline constexpr int kMaxPointsDp = 200;
inline constexpr int kMaxPointsOracle = 14;

/// Validate, optionally perturb, dispatch to the owning solver, and assemble
/// the record. Throws Error on parameter or input problems; infeasibility is
/// reported inside the record.
SolutionRecord run_solve(const Instance& inst, const SolveRequest& req);

} // namespace wgon
