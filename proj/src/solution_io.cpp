#include "wgon/solution_io.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

namespace wgon {

namespace {

using ordered_json = nlohmann::ordered_json;

char hexdigit(unsigned v) { return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10); }

std::string hex64(std::uint64_t v) {
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<size_t>(i)] = hexdigit(static_cast<unsigned>(v & 0xf));
        v >>= 4;
    }
    return s;
}

ordered_json record_json(const SolutionRecord& rec, bool with_stats) {
    ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["instance"] = {{"checksum", hex64(rec.instance_checksum)}, {"n", rec.n}};
    if (rec.perturbed) {
        j["instance"]["perturbed"] = true;
        j["instance"]["perturb_seed"] = rec.perturb_seed;
    }
    j["objective"] = rec.objective;
    j["weight"] = rec.weight;
    j["direction"] = rec.direction;
    if (rec.w) j["w"] = *rec.w;
    if (rec.budget_area2) j["budget_area2"] = *rec.budget_area2;
    if (rec.budget_perimeter) j["budget_perimeter"] = *rec.budget_perimeter;
    j["algorithm"] = rec.algorithm;
    j["feasible"] = rec.feasible;
    j["valid"] = rec.valid;

    ordered_json value;
    if (rec.objective == "min-area") {
        value["twice_area"] = rec.value_int;
        value["area"] = static_cast<double>(rec.value_int) / 2.0;
    } else if (rec.objective == "min-perimeter") {
        value["perimeter"] = rec.value_real;
    } else {
        value["hull_size"] = rec.value_int;
    }
    if (!rec.feasible) value = nullptr;
    j["value"] = value;

    j["polygon"] = rec.polygon;
    if (rec.objective == "minch" || rec.objective == "budget") {
        j["outliers"] = rec.outliers;
        if (rec.coverage) j["coverage"] = *rec.coverage;
    }
    j["flags"] = {{"parallel", rec.parallel}, {"strict_seam", rec.strict_seam}};
    if (with_stats)
        j["stats"] = {{"total_ms", rec.stats.total_ms},
                      {"threads", rec.stats.threads},
                      {"work_items", rec.stats.work_items}};
    return j;
}

} // namespace

std::string record_to_json(const SolutionRecord& rec) { return record_json(rec, true).dump(2) + "\n"; }

std::string record_to_json_no_stats(const SolutionRecord& rec) {
    return record_json(rec, false).dump(2) + "\n";
}

std::string render_svg(const Instance& inst, const SolutionRecord* rec) {
    const PointSet& P = inst.points;
    Coord min_x = P[0].x, max_x = P[0].x, min_y = P[0].y, max_y = P[0].y;
    for (const Point& p : P.points()) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double span = static_cast<double>(std::max<Coord>({max_x - min_x, max_y - min_y, 1}));
    const double margin = 0.06 * span;
    const double r = 0.012 * span;

    // SVG y grows downward; flip so the figure reads like the plane.
    auto sx = [&](Coord x) { return static_cast<double>(x); };
    auto sy = [&](Coord y) { return static_cast<double>(max_y) - static_cast<double>(y) + static_cast<double>(min_y); };

    char buf[256];
    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"%.3f %.3f %.3f %.3f\">\n",
                  static_cast<double>(min_x) - margin, static_cast<double>(min_y) - margin,
                  span + 2 * margin, span + 2 * margin);
    svg += buf;

    if (rec && !rec->polygon.empty()) {
        svg += "  <path fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"#3182bd\" stroke-width=\"";
        std::snprintf(buf, sizeof buf, "%.3f\" d=\"", 0.25 * r);
        svg += buf;
        for (size_t k = 0; k < rec->polygon.size(); ++k) {
            const Point& p = P[rec->polygon[k]];
            std::snprintf(buf, sizeof buf, "%c %.3f %.3f ", k == 0 ? 'M' : 'L', sx(p.x), sy(p.y));
            svg += buf;
        }
        svg += "Z\"/>\n";
    }

    std::vector<char> outlier(static_cast<size_t>(P.size()), 0);
    if (rec)
        for (const int o : rec->outliers) outlier[static_cast<size_t>(o)] = 1;

    for (int q = 0; q < P.size(); ++q) {
        const Point& p = P[q];
        std::snprintf(buf, sizeof buf, "  <circle cx=\"%.3f\" cy=\"%.3f\" r=\"%.3f\" fill=\"%s\"/>\n",
                      sx(p.x), sy(p.y), r, outlier[static_cast<size_t>(q)] ? "#de2d26" : "#2c3e50");
        svg += buf;
        if (outlier[static_cast<size_t>(q)]) {
            const double d = 1.8 * r;
            std::snprintf(buf, sizeof buf,
                          "  <line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" stroke=\"#de2d26\" "
                          "stroke-width=\"%.3f\"/>\n",
                          sx(p.x) - d, sy(p.y) - d, sx(p.x) + d, sy(p.y) + d, 0.4 * r);
            svg += buf;
            std::snprintf(buf, sizeof buf,
                          "  <line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" stroke=\"#de2d26\" "
                          "stroke-width=\"%.3f\"/>\n",
                          sx(p.x) - d, sy(p.y) + d, sx(p.x) + d, sy(p.y) - d, 0.4 * r);
            svg += buf;
        }
    }
    svg += "</svg>\n";
    return svg;
}

std::string conformance_csv(const ConformanceReport& report) {
    std::string out =
        "n,w,weight,mode,baseline_feasible,doubling_feasible,baseline_value,doubling_value,"
        "doubling_valid,agreement,baseline_ms,doubling_ms\n";
    char buf[64];
    for (const ConformanceRow& r : report.rows) {
        const WeightFunction wf = make_weight(r.weight);
        out += std::to_string(r.n) + ',' + std::to_string(r.w) + ',' + weight_name(r.weight) + ',';
        out += r.strict_seam ? "strict-seam" : "default";
        out += ',';
        out += r.baseline_feasible ? "1," : "0,";
        out += r.doubling_feasible ? "1," : "0,";
        out += r.baseline_feasible ? wf.display(r.baseline_value) : "";
        out += ',';
        out += r.doubling_feasible ? wf.display(r.doubling_value) : "";
        out += ',';
        out += r.doubling_valid ? "1," : "0,";
        out += r.agreement ? "1," : "0,";
        std::snprintf(buf, sizeof buf, "%.3f,%.3f\n", r.baseline_ms, r.doubling_ms);
        out += buf;
    }
    return out;
}

} // namespace wgon
