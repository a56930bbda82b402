#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wgon/error.hpp"

namespace wgon {

using Coord = std::int64_t;

/// Maximum magnitude accepted for input coordinates. Keeping |x|,|y| below
/// this bound guarantees that every cross product and twice-area value in the
/// library fits in signed 64-bit arithmetic with a wide margin.
inline constexpr Coord kCoordLimit = Coord{1} << 20;

/// Internal safety bound: derived point sets (perturbed or scaled instances)
/// may exceed kCoordLimit but must stay below this for exactness.
inline constexpr Coord kCoordSafeLimit = Coord{1} << 25;

/// Library-wide cap on point count; keeps integer weight accumulation
/// (sums of up to n twice-areas) comfortably inside 64 bits.
inline constexpr int kMaxPoints = 512;

struct Point {
    Coord x = 0;
    Coord y = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

enum class Orient : int { CW = -1, Collinear = 0, CCW = 1 };

/// Exact cross product (b - a) x (c - a). No floating point.
inline std::int64_t cross(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline Orient orientation(const Point& a, const Point& b, const Point& c) {
    const std::int64_t s = cross(a, b, c);
    if (s > 0) return Orient::CCW;
    if (s < 0) return Orient::CW;
    return Orient::Collinear;
}

/// Twice the Euclidean area of triangle abc, exactly.
inline std::int64_t triangle_area2(const Point& a, const Point& b, const Point& c) {
    const std::int64_t s = cross(a, b, c);
    return s < 0 ? -s : s;
}

/// True iff q lies strictly to the right of the directed line i -> j.
/// Points on the line are not in the half-plane; the predicate is total.
inline bool in_right_half_plane(const Point& i, const Point& j, const Point& q) {
    return orientation(i, j, q) == Orient::CW;
}

/// Strict (y, then x) order; the minimum is the "bottommost" vertex used to
/// anchor fan decompositions.
inline bool lex_yx_less(const Point& a, const Point& b) {
    return a.y < b.y || (a.y == b.y && a.x < b.x);
}

/// Angular half of a nonzero direction vector: 0 for angles in [0, pi),
/// measured CCW from the positive x-axis, 1 for [pi, 2*pi).
inline int angle_half(Coord dx, Coord dy) {
    return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
}

/// Exact comparator: does direction a come strictly before direction b when
/// sweeping CCW from the positive x-axis? Collinear same-ray directions
/// compare by squared length.
inline bool angle_less(Coord ax, Coord ay, Coord bx, Coord by) {
    const int ha = angle_half(ax, ay);
    const int hb = angle_half(bx, by);
    if (ha != hb) return ha < hb;
    const std::int64_t cr = ax * by - ay * bx;
    if (cr != 0) return cr > 0;
    return ax * ax + ay * ay < bx * bx + by * by;
}

/// An immutable planar point set. Construction validates counts and
/// coordinate bounds only; general position is checked separately so that
/// degenerate inputs remain representable (for validation and perturbation).
class PointSet {
public:
    PointSet() = default;

    /// Validating constructor for external inputs (|coord| <= kCoordLimit).
    static PointSet create(std::vector<Point> pts);

    /// Constructor for internally derived sets (perturbed / scaled); enforces
    /// only the arithmetic safety bound.
    static PointSet create_derived(std::vector<Point> pts);

    int size() const { return static_cast<int>(pts_.size()); }
    const Point& operator[](int i) const { return pts_[static_cast<size_t>(i)]; }
    const std::vector<Point>& points() const { return pts_; }
    std::span<const Point> span() const { return pts_; }

private:
    explicit PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {}
    std::vector<Point> pts_;
};

/// CCW angular order of all other indices around a center point.
struct AngularOrder {
    int center = -1;
    std::vector<int> order;
};

/// Sort indices != center by CCW angle around P[center], starting from the
/// positive x-axis. Exact comparisons only.
AngularOrder angular_sort(const PointSet& P, int center);

/// Angular orders around every point plus inverse position lookup; computed
/// once per solve and shared across bottom vertices.
struct AngularTables {
    std::vector<AngularOrder> orders;
    std::vector<std::vector<int>> pos; // pos[center][q]; -1 for q == center
};

AngularTables precompute_angular(const PointSet& P);

/// Does direction a come strictly before direction b when sweeping CCW from
/// the reference direction r? All directions must be nonzero; positions are
/// taken in [0, 2*pi) relative to r.
bool angle_less_from(Coord rx, Coord ry, Coord ax, Coord ay, Coord bx, Coord by);

struct PositionViolation {
    enum class Kind { Duplicate, Collinear } kind;
    int a = -1;
    int b = -1;
    int c = -1; // unused for duplicates
};

/// Exhaustive O(n^3) scan for duplicate points and collinear triples.
/// Empty result means the set is in general position.
std::vector<PositionViolation> validate_general_position(const PointSet& P);

/// Throws Errc::degenerate_input when P is not in general position.
void require_general_position(const PointSet& P);

/// Number of points of P strictly inside CCW triangle abc. Vertices are never
/// counted; edge incidence cannot occur for general-position P.
std::int64_t count_strict_interior(const Point& a, const Point& b, const Point& c,
                                   const PointSet& P);

/// True iff the vertex sequence is strictly convex, CCW, and winds exactly
/// once (star-shaped multi-winding sequences are rejected).
bool is_convex_ccw(std::span<const Point> poly);

/// True iff q is on or inside the convex CCW polygon.
bool contains_on_or_inside(std::span<const Point> poly, const Point& q);

/// Strict convex hull (monotone chain). Returns indices into pts, CCW,
/// rotated to start at the lex (y, x) minimum. Handles sizes 1 and 2.
std::vector<int> convex_hull(std::span<const Point> pts);

/// Hull of a subset of P; returns indices into P.
std::vector<int> convex_hull_subset(const PointSet& P, std::span<const int> subset);

/// Gather polygon vertex coordinates from indices into P.
std::vector<Point> gather(const PointSet& P, std::span<const int> indices);

} // namespace wgon
