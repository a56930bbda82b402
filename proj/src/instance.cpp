#include "wgon/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wgon/rng.hpp"

namespace wgon {

namespace {

using ordered_json = nlohmann::ordered_json;

bool triple_ok(const std::vector<Point>& pts, const Point& q) {
    for (const Point& p : pts)
        if (p == q) return false;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (orientation(pts[i], pts[j], q) == Orient::Collinear) return false;
    return true;
}

Point sample_point(SplitMix64& rng, const GenSpec& spec, const std::vector<Point>& centers, int idx) {
    const Coord R = spec.range;
    switch (spec.shape) {
        case GenShape::Uniform:
            return {rng.range(0, R), rng.range(0, R)};
        case GenShape::Annulus: {
            // integer ring test around the square's center
            const Coord c2 = R;                             // doubled center coordinate
            const std::int64_t r_hi2 = R * R;               // (2r_hi)^2 with r_hi = R/2
            const std::int64_t r_lo2 = (R / 2) * (R / 2);   // r_lo = R/4
            for (;;) {
                const Point p{rng.range(0, R), rng.range(0, R)};
                const std::int64_t dx = 2 * p.x - c2;
                const std::int64_t dy = 2 * p.y - c2;
                const std::int64_t d2 = dx * dx + dy * dy;
                if (d2 >= r_lo2 && d2 <= r_hi2) return p;
            }
        }
        case GenShape::Clustered: {
            const Point& c = centers[static_cast<size_t>(idx) % centers.size()];
            const Coord spread = std::max<Coord>(1, R / 10);
            // triangular offsets: sum of two uniforms, integer-only
            const Coord dx = rng.range(-spread, spread) + rng.range(-spread, spread);
            const Coord dy = rng.range(-spread, spread) + rng.range(-spread, spread);
            return {std::clamp<Coord>(c.x + dx / 2, 0, R), std::clamp<Coord>(c.y + dy / 2, 0, R)};
        }
    }
    fail(Errc::internal, "unreachable shape");
}

} // namespace

std::string shape_name(GenShape s) {
    switch (s) {
        case GenShape::Uniform: return "uniform";
        case GenShape::Annulus: return "annulus";
        case GenShape::Clustered: return "clustered";
    }
    return "?";
}

GenShape shape_from_name(const std::string& name) {
    if (name == "uniform") return GenShape::Uniform;
    if (name == "annulus") return GenShape::Annulus;
    if (name == "clustered") return GenShape::Clustered;
    fail(Errc::invalid_argument, "unknown shape '" + name + "'");
}

Instance generate(const GenSpec& spec) {
    if (spec.n < 3) fail(Errc::invalid_argument, "generate: need n >= 3");
    if (spec.n > kMaxPoints) fail(Errc::limit_exceeded, "generate: n exceeds the point cap");
    if (spec.range < 1 || spec.range > kCoordLimit)
        fail(Errc::invalid_argument, "generate: range must be in [1, 2^20]");
    // Capacity check: a cramped lattice cannot reliably host n points in
    // general position.
    if ((spec.range + 1) * (spec.range + 1) < 4 * static_cast<Coord>(spec.n))
        fail(Errc::invalid_argument, "generate: range " + std::to_string(spec.range) +
                                         " is too small to host " + std::to_string(spec.n) +
                                         " points in general position");

    SplitMix64 rng(spec.seed);
    std::vector<Point> centers;
    if (spec.shape == GenShape::Clustered) {
        const int k = std::max(1, spec.n / 8);
        const Coord lo = spec.range / 10, hi = spec.range - spec.range / 10;
        for (int i = 0; i < k; ++i) centers.push_back({rng.range(lo, hi), rng.range(lo, hi)});
    }

    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(spec.n));
    std::uint64_t rejections = 0;
    const std::uint64_t cap = 2000ULL * static_cast<std::uint64_t>(spec.n) + 10000ULL;
    while (static_cast<int>(pts.size()) < spec.n) {
        const Point q = sample_point(rng, spec, centers, static_cast<int>(pts.size()));
        if (triple_ok(pts, q)) {
            pts.push_back(q);
        } else if (++rejections > cap) {
            fail(Errc::invalid_argument,
                 "generate: rejection bound exceeded; range too small for general position");
        }
    }

    Instance inst;
    inst.points = PointSet::create(std::move(pts));
    inst.name = shape_name(spec.shape) + "-n" + std::to_string(spec.n) + "-s" + std::to_string(spec.seed);
    inst.gen = GenMeta{spec.shape, spec.seed, spec.range, rejections};
    return inst;
}

std::string to_csv(const Instance& inst) {
    std::string out;
    for (const Point& p : inst.points.points()) {
        out += std::to_string(p.x);
        out += ',';
        out += std::to_string(p.y);
        out += '\n';
    }
    return out;
}

std::string to_json(const Instance& inst) {
    ordered_json j;
    if (!inst.name.empty()) j["name"] = inst.name;
    if (inst.gen) {
        j["generator"] = {{"shape", shape_name(inst.gen->shape)},
                          {"seed", inst.gen->seed},
                          {"range", inst.gen->range},
                          {"rejections", inst.gen->rejections}};
    }
    if (inst.perturb) j["perturbed"] = {{"seed", inst.perturb->seed}, {"scale", inst.perturb->scale}};
    auto& pts = j["points"] = ordered_json::array();
    for (const Point& p : inst.points.points()) pts.push_back({p.x, p.y});
    return j.dump(2) + "\n";
}

namespace {

Instance parse_csv(const std::string& text) {
    std::vector<Point> pts;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        const auto comma = line.find(',', first);
        if (comma == std::string::npos)
            fail(Errc::parse, "line " + std::to_string(lineno) + ": expected 'x,y'");
        try {
            const Coord x = std::stoll(line.substr(first, comma - first));
            const Coord y = std::stoll(line.substr(comma + 1));
            pts.push_back({x, y});
        } catch (const std::exception&) {
            fail(Errc::parse, "line " + std::to_string(lineno) + ": bad integer coordinate");
        }
    }
    Instance inst;
    inst.points = PointSet::create(std::move(pts));
    return inst;
}

Instance parse_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        fail(Errc::parse, std::string("bad JSON instance: ") + e.what());
    }
    if (!j.contains("points") || !j["points"].is_array())
        fail(Errc::parse, "JSON instance is missing the points array");
    std::vector<Point> pts;
    for (const auto& pj : j["points"]) {
        if (!pj.is_array() || pj.size() != 2 || !pj[0].is_number_integer() || !pj[1].is_number_integer())
            fail(Errc::parse, "each point must be an [x, y] integer pair");
        pts.push_back({pj[0].get<Coord>(), pj[1].get<Coord>()});
    }
    Instance inst;
    inst.points = PointSet::create(std::move(pts));
    if (j.contains("name")) inst.name = j["name"].get<std::string>();
    if (j.contains("generator")) {
        const auto& g = j["generator"];
        GenMeta meta;
        meta.shape = shape_from_name(g.value("shape", "uniform"));
        meta.seed = g.value("seed", std::uint64_t{0});
        meta.range = g.value("range", Coord{0});
        meta.rejections = g.value("rejections", std::uint64_t{0});
        inst.gen = meta;
    }
    if (j.contains("perturbed")) {
        PerturbMeta meta;
        meta.seed = j["perturbed"].value("seed", std::uint64_t{0});
        meta.scale = j["perturbed"].value("scale", Coord{8});
        inst.perturb = meta;
    }
    return inst;
}

} // namespace

Instance parse_instance(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) fail(Errc::parse, "empty instance");
    return text[first] == '{' ? parse_json(text) : parse_csv(text);
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::io, "cannot open instance file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    Instance inst = parse_instance(buf.str());
    if (inst.name.empty()) {
        auto slash = path.find_last_of('/');
        inst.name = slash == std::string::npos ? path : path.substr(slash + 1);
    }
    return inst;
}

void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::io, "cannot write instance file '" + path + "'");
    const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    out << (json ? to_json(inst) : to_csv(inst));
    if (!out) fail(Errc::io, "short write to '" + path + "'");
}

std::uint64_t instance_checksum(const Instance& inst) {
    const std::string csv = to_csv(inst);
    return fnv1a64(csv.data(), csv.size());
}

Instance perturb(const Instance& inst) {
    const std::string csv = to_csv(inst);
    const std::uint64_t base_seed = fnv1a64(csv.data(), csv.size());
    for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
        const std::uint64_t seed = base_seed + attempt;
        SplitMix64 rng(seed);
        std::vector<Point> pts;
        pts.reserve(static_cast<size_t>(inst.points.size()));
        for (const Point& p : inst.points.points()) {
            const Coord dx = static_cast<Coord>(rng.below(3)) - 1;
            const Coord dy = static_cast<Coord>(rng.below(3)) - 1;
            pts.push_back({p.x * 8 + dx, p.y * 8 + dy});
        }
        PointSet candidate = PointSet::create_derived(std::move(pts));
        if (validate_general_position(candidate).empty()) {
            Instance out;
            out.points = std::move(candidate);
            out.name = inst.name;
            out.gen = inst.gen;
            out.perturb = PerturbMeta{seed, 8};
            return out;
        }
    }
    fail(Errc::degenerate_input, "perturbation failed to reach general position");
}

Instance scale_instance(const Instance& inst, Coord factor) {
    if (factor < 1) fail(Errc::invalid_argument, "scale factor must be positive");
    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(inst.points.size()));
    for (const Point& p : inst.points.points()) pts.push_back({p.x * factor, p.y * factor});
    Instance out;
    out.points = PointSet::create_derived(std::move(pts));
    out.name = inst.name;
    return out;
}

} // namespace wgon
