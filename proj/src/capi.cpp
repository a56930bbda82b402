#include "wgon.h"

#include <cstring>
#include <new>
#include <string>

#include "wgon/driver.hpp"
#include "wgon/solution_io.hpp"

struct wg_points {
    wgon::Instance inst;
};

struct wg_solution {
    wgon::SolutionRecord rec;
    wgon::Instance instance_copy; // kept so the solution can render itself
};

namespace {

thread_local std::string t_last_error;

wg_status status_of(wgon::Errc code) {
    using wgon::Errc;
    switch (code) {
        case Errc::invalid_argument: return WG_EINVAL;
        case Errc::parse: return WG_EPARSE;
        case Errc::degenerate_input: return WG_EDEGENERATE;
        case Errc::exhausted: return WG_EXHAUSTED;
        case Errc::limit_exceeded: return WG_ELIMIT;
        case Errc::io: return WG_EIO;
        case Errc::internal: return WG_EINTERNAL;
    }
    return WG_EINTERNAL;
}

template <class Fn>
wg_status guarded(Fn&& fn) {
    try {
        fn();
        return WG_OK;
    } catch (const wgon::Error& e) {
        t_last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        t_last_error = "out of memory";
        return WG_EINTERNAL;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return WG_EINTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char* wg_status_name(wg_status status) {
    switch (status) {
        case WG_OK: return "ok";
        case WG_EINVAL: return "invalid-argument";
        case WG_EPARSE: return "parse-error";
        case WG_EDEGENERATE: return "degenerate-input";
        case WG_EXHAUSTED: return "budget-exhausted";
        case WG_ELIMIT: return "limit-exceeded";
        case WG_EIO: return "io-error";
        case WG_EINTERNAL: return "internal-error";
    }
    return "unknown";
}

const char* wg_last_error(void) { return t_last_error.c_str(); }

const char* wg_version(void) { return wgon::kToolVersion; }

wg_status wg_points_create(const int64_t* xy, int n, wg_points** out) {
    if (!xy || !out) {
        t_last_error = "null argument";
        return WG_EINVAL;
    }
    *out = nullptr;
    return guarded([&] {
        std::vector<wgon::Point> pts;
        pts.reserve(static_cast<size_t>(n > 0 ? n : 0));
        for (int i = 0; i < n; ++i) pts.push_back({xy[2 * i], xy[2 * i + 1]});
        auto* handle = new wg_points{};
        try {
            handle->inst.points = wgon::PointSet::create(std::move(pts));
        } catch (...) {
            delete handle;
            throw;
        }
        *out = handle;
    });
}

wg_status wg_points_generate(int n, uint64_t seed, int64_t range, const char* shape, wg_points** out) {
    if (!out) {
        t_last_error = "null argument";
        return WG_EINVAL;
    }
    *out = nullptr;
    return guarded([&] {
        wgon::GenSpec spec;
        spec.n = n;
        spec.seed = seed;
        spec.range = range;
        spec.shape = shape ? wgon::shape_from_name(shape) : wgon::GenShape::Uniform;
        *out = new wg_points{wgon::generate(spec)};
    });
}

wg_status wg_points_parse(const char* text, wg_points** out) {
    if (!text || !out) {
        t_last_error = "null argument";
        return WG_EINVAL;
    }
    *out = nullptr;
    return guarded([&] { *out = new wg_points{wgon::parse_instance(text)}; });
}

wg_status wg_points_load(const char* path, wg_points** out) {
    if (!path || !out) {
        t_last_error = "null argument";
        return WG_EINVAL;
    }
    *out = nullptr;
    return guarded([&] { *out = new wg_points{wgon::load_instance(path)}; });
}

wg_status wg_points_save(const wg_points* pts, const char* path) {
    if (!pts || !path) {
        t_last_error = "null argument";
        return WG_EINVAL;
    }
    return guarded([&] { wgon::save_instance(pts->inst, path); });
}

void wg_points_free(wg_points* pts) { delete pts; }

int wg_points_count(const wg_points* pts) { return pts ? pts->inst.points.size() : 0; }

wg_status wg_points_get(const wg_points* pts, int index, int64_t* x, int64_t* y) {
    if (!pts || !x || !y) {
        t_last_error = "null argument";
        return WG_EINVAL;
    }
    if (index < 0 || index >= pts->inst.points.size()) {
        t_last_error = "point index out of range";
        return WG_EINVAL;
    }
    *x = pts->inst.points[index].x;
    *y = pts->inst.points[index].y;
    return WG_OK;
}

int wg_points_degenerate(const wg_points* pts) {
    if (!pts) return 1;
    const auto violations = wgon::validate_general_position(pts->inst.points);
    if (violations.empty()) return 0;
    std::string msg;
    for (size_t i = 0; i < violations.size() && i < 8; ++i) {
        const auto& v = violations[i];
        if (!msg.empty()) msg += "; ";
        if (v.kind == wgon::PositionViolation::Kind::Duplicate)
            msg += "duplicate(" + std::to_string(v.a) + "," + std::to_string(v.b) + ")";
        else
            msg += "collinear(" + std::to_string(v.a) + "," + std::to_string(v.b) + "," +
                   std::to_string(v.c) + ")";
    }
    t_last_error = msg;
    return 1;
}

char* wg_points_to_csv(const wg_points* pts) {
    if (!pts) return nullptr;
    return dup_string(wgon::to_csv(pts->inst));
}

char* wg_points_to_json(const wg_points* pts) {
    if (!pts) return nullptr;
    return dup_string(wgon::to_json(pts->inst));
}

void wg_solve_options_init(wg_solve_options* opts) {
    if (!opts) return;
    std::memset(opts, 0, sizeof *opts);
    opts->objective = "min-area";
    opts->algorithm = "baseline";
    opts->w = 3;
    opts->threads = 1;
}

wg_status wg_solve(const wg_points* pts, const wg_solve_options* opts, wg_solution** out) {
    if (!pts || !opts || !out) {
        t_last_error = "null argument";
        return WG_EINVAL;
    }
    *out = nullptr;
    return guarded([&] {
        wgon::SolveRequest req;
        req.objective = wgon::objective_from_name(opts->objective ? opts->objective : "");
        req.algorithm = wgon::algorithm_from_name(opts->algorithm ? opts->algorithm : "");
        req.w = opts->w;
        if (opts->has_budget_area2) req.budget_area2 = opts->budget_area2;
        if (opts->has_budget_perimeter) req.budget_perimeter = opts->budget_perimeter;
        req.threads = opts->threads;
        req.strict_seam = opts->strict_seam != 0;
        req.perturb_if_degenerate = opts->perturb != 0;
        req.allow_large = opts->allow_large != 0;
        req.experimental = opts->experimental != 0;
        if (opts->oracle_max_subsets > 0) req.oracle_budget_caps.max_subsets = opts->oracle_max_subsets;
        if (opts->oracle_timeout_sec > 0) req.oracle_budget_caps.timeout_sec = opts->oracle_timeout_sec;
        if (opts->allow_large) req.oracle_budget_caps.max_points_minch = wgon::kMaxPoints;

        auto* handle = new wg_solution{};
        try {
            handle->rec = wgon::run_solve(pts->inst, req);
            handle->instance_copy = pts->inst;
        } catch (...) {
            delete handle;
            throw;
        }
        *out = handle;
    });
}

int wg_solution_feasible(const wg_solution* sol) { return sol && sol->rec.feasible ? 1 : 0; }

int wg_solution_valid(const wg_solution* sol) { return sol && sol->rec.valid ? 1 : 0; }

wg_status wg_solution_value_int(const wg_solution* sol, int64_t* out) {
    if (!sol || !out) {
        t_last_error = "null argument";
        return WG_EINVAL;
    }
    if (!sol->rec.feasible || !sol->rec.integral_value) {
        t_last_error = "no integral value on this solution";
        return WG_EINVAL;
    }
    *out = sol->rec.value_int;
    return WG_OK;
}

wg_status wg_solution_value_real(const wg_solution* sol, double* out) {
    if (!sol || !out) {
        t_last_error = "null argument";
        return WG_EINVAL;
    }
    if (!sol->rec.feasible) {
        t_last_error = "infeasible solution has no value";
        return WG_EINVAL;
    }
    *out = sol->rec.value_real;
    return WG_OK;
}

int wg_solution_size(const wg_solution* sol) {
    return sol ? static_cast<int>(sol->rec.polygon.size()) : 0;
}

int wg_solution_vertex(const wg_solution* sol, int k) {
    if (!sol || k < 0 || k >= static_cast<int>(sol->rec.polygon.size())) return -1;
    return sol->rec.polygon[static_cast<size_t>(k)];
}

int wg_solution_outlier_count(const wg_solution* sol) {
    return sol ? static_cast<int>(sol->rec.outliers.size()) : 0;
}

int wg_solution_outlier(const wg_solution* sol, int k) {
    if (!sol || k < 0 || k >= static_cast<int>(sol->rec.outliers.size())) return -1;
    return sol->rec.outliers[static_cast<size_t>(k)];
}

int64_t wg_solution_coverage(const wg_solution* sol) {
    if (!sol || !sol->rec.coverage) return -1;
    return *sol->rec.coverage;
}

const char* wg_solution_algorithm(const wg_solution* sol) {
    return sol ? sol->rec.algorithm.c_str() : "";
}

char* wg_solution_to_json(const wg_solution* sol) {
    if (!sol) return nullptr;
    return dup_string(wgon::record_to_json(sol->rec));
}

char* wg_solution_to_json_no_stats(const wg_solution* sol) {
    if (!sol) return nullptr;
    return dup_string(wgon::record_to_json_no_stats(sol->rec));
}

void wg_solution_free(wg_solution* sol) { delete sol; }

char* wg_render_svg(const wg_points* pts, const wg_solution* sol) {
    if (!pts) return nullptr;
    try {
        return dup_string(wgon::render_svg(pts->inst, sol ? &sol->rec : nullptr));
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return nullptr;
    }
}

char* wg_render_svg_indices(const wg_points* pts, const int* polygon, int polygon_len,
                            const int* outliers, int outlier_len) {
    if (!pts) return nullptr;
    try {
        wgon::SolutionRecord rec;
        const int n = pts->inst.points.size();
        for (int k = 0; k < polygon_len; ++k) {
            if (!polygon || polygon[k] < 0 || polygon[k] >= n) {
                t_last_error = "polygon index out of range";
                return nullptr;
            }
            rec.polygon.push_back(polygon[k]);
        }
        for (int k = 0; k < outlier_len; ++k) {
            if (!outliers || outliers[k] < 0 || outliers[k] >= n) {
                t_last_error = "outlier index out of range";
                return nullptr;
            }
            rec.outliers.push_back(outliers[k]);
        }
        return dup_string(wgon::render_svg(pts->inst, &rec));
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return nullptr;
    }
}

wg_status wg_conformance(const wg_points* const* instances, int count, const int* ws, int w_count,
                         const char* weight, int strict_seam, int threads, char** csv_out) {
    if (!instances || !ws || !csv_out || count < 0 || w_count <= 0) {
        t_last_error = "null or empty argument";
        return WG_EINVAL;
    }
    *csv_out = nullptr;
    return guarded([&] {
        std::vector<wgon::PointSet> sets;
        sets.reserve(static_cast<size_t>(count));
        for (int i = 0; i < count; ++i) {
            if (!instances[i]) wgon::fail(wgon::Errc::invalid_argument, "null instance handle");
            sets.push_back(instances[i]->inst.points);
        }
        const wgon::WeightFunction wf =
            wgon::make_weight(wgon::weight_from_name(weight ? weight : "area2"));
        wgon::DoublingOptions opts;
        opts.threads = threads;
        opts.strict_seam = strict_seam != 0;
        const wgon::ConformanceReport report =
            wgon::run_conformance(sets, std::span<const int>(ws, static_cast<size_t>(w_count)), wf, opts);
        *csv_out = dup_string(wgon::conformance_csv(report));
        if (!*csv_out) wgon::fail(wgon::Errc::internal, "out of memory");
    });
}

void wg_string_free(char* s) { delete[] s; }

} // extern "C"
