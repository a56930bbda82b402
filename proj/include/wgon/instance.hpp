#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wgon/geom.hpp"

namespace wgon {

enum class GenShape { Uniform, Annulus, Clustered };

std::string shape_name(GenShape s);
GenShape shape_from_name(const std::string& name);

struct GenSpec {
    int n = 0;
    std::uint64_t seed = 0;
    Coord range = 100; // coordinates are drawn from [0, range]^2
    GenShape shape = GenShape::Uniform;
};

struct GenMeta {
    GenShape shape = GenShape::Uniform;
    std::uint64_t seed = 0;
    Coord range = 0;
    std::uint64_t rejections = 0;
};

struct PerturbMeta {
    std::uint64_t seed = 0; // hash of the original coordinates (plus retries)
    Coord scale = 8;
};

/// A point set plus file-level metadata (name, generator provenance,
/// perturbation provenance). Geometry algorithms take the bare PointSet.
struct Instance {
    PointSet points;
    std::string name;
    std::optional<GenMeta> gen;
    std::optional<PerturbMeta> perturb;
};

/// Deterministic seeded generation; rejection-samples points until the set is
/// in general position. Integer arithmetic only, so outputs are identical
/// across platforms. Fails when the lattice is too small to host n points.
Instance generate(const GenSpec& spec);

/// Parse an instance from CSV ("x,y" per line, '#' comments) or from the JSON
/// envelope; the format is detected from the content.
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);

/// Canonical serializations. parse(to_csv(i)) reproduces the points exactly,
/// and to_csv(parse(f)) == f for canonical files.
std::string to_csv(const Instance& inst);
std::string to_json(const Instance& inst);
void save_instance(const Instance& inst, const std::string& path); // format by extension

/// Checksum of the canonical CSV form; recorded in solution files.
std::uint64_t instance_checksum(const Instance& inst);

/// Deterministic integer perturbation for inputs that violate general
/// position: scale all coordinates by 8, then offset each by hash-derived
/// values in {-1, 0, 1}, retrying with a bumped seed until the result is in
/// general position. The seed derives from the coordinates themselves.
Instance perturb(const Instance& inst);

/// Scale all coordinates by a positive integer factor (exactness testing).
Instance scale_instance(const Instance& inst, Coord factor);

} // namespace wgon
