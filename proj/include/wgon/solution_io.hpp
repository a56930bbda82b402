#pragma once

#include <string>

#include "wgon/driver.hpp"

namespace wgon {

inline constexpr const char* kToolName = "wgon";
inline constexpr const char* kToolVersion = "0.1.0";

/// Solution file JSON. Deterministic for identical inputs and flags except
/// for the "stats" object (timings); comparisons should drop it.
std::string record_to_json(const SolutionRecord& rec);

/// The same JSON with the stats object removed, for determinism comparisons.
std::string record_to_json_no_stats(const SolutionRecord& rec);

/// SVG figure: one circle per input point, the witness polygon as a single
/// path, and an X marker over each outlier.
std::string render_svg(const Instance& inst, const SolutionRecord* rec = nullptr);

/// Conformance report CSV (header + one row per instance/size pair).
std::string conformance_csv(const ConformanceReport& report);

} // namespace wgon
