#include "wgon/geom.hpp"

#include <algorithm>
#include <string>

namespace wgon {

PointSet PointSet::create(std::vector<Point> pts) {
    const int n = static_cast<int>(pts.size());
    if (n < 3) fail(Errc::invalid_argument, "point set needs at least 3 points, got " + std::to_string(n));
    if (n > kMaxPoints)
        fail(Errc::limit_exceeded,
             "point set has " + std::to_string(n) + " points, cap is " + std::to_string(kMaxPoints));
    for (const Point& p : pts) {
        if (p.x < -kCoordLimit || p.x > kCoordLimit || p.y < -kCoordLimit || p.y > kCoordLimit)
            fail(Errc::invalid_argument, "coordinate (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                                             ") exceeds |coord| <= 2^20");
    }
    return PointSet(std::move(pts));
}

PointSet PointSet::create_derived(std::vector<Point> pts) {
    const int n = static_cast<int>(pts.size());
    if (n < 3) fail(Errc::invalid_argument, "point set needs at least 3 points");
    if (n > kMaxPoints) fail(Errc::limit_exceeded, "point set exceeds the " + std::to_string(kMaxPoints) + " point cap");
    for (const Point& p : pts) {
        if (p.x < -kCoordSafeLimit || p.x > kCoordSafeLimit || p.y < -kCoordSafeLimit || p.y > kCoordSafeLimit)
            fail(Errc::internal, "derived coordinates exceed the exact-arithmetic bound");
    }
    return PointSet(std::move(pts));
}

AngularOrder angular_sort(const PointSet& P, int center) {
    const int n = P.size();
    if (center < 0 || center >= n) fail(Errc::invalid_argument, "angular_sort: center index out of range");
    AngularOrder out;
    out.center = center;
    out.order.reserve(static_cast<size_t>(n) - 1);
    for (int i = 0; i < n; ++i)
        if (i != center) out.order.push_back(i);
    const Point c = P[center];
    std::sort(out.order.begin(), out.order.end(), [&](int a, int b) {
        const Point& pa = P[a];
        const Point& pb = P[b];
        const Coord ax = pa.x - c.x, ay = pa.y - c.y;
        const Coord bx = pb.x - c.x, by = pb.y - c.y;
        if (ax == bx && ay == by) return a < b; // duplicates; tolerated pre-validation
        return angle_less(ax, ay, bx, by);
    });
    return out;
}

AngularTables precompute_angular(const PointSet& P) {
    const int n = P.size();
    AngularTables t;
    t.orders.reserve(static_cast<size_t>(n));
    t.pos.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
    for (int c = 0; c < n; ++c) {
        t.orders.push_back(angular_sort(P, c));
        const auto& ord = t.orders.back().order;
        for (int k = 0; k < static_cast<int>(ord.size()); ++k)
            t.pos[static_cast<size_t>(c)][static_cast<size_t>(ord[static_cast<size_t>(k)])] = k;
    }
    return t;
}

bool angle_less_from(Coord rx, Coord ry, Coord ax, Coord ay, Coord bx, Coord by) {
    // Position relative to r: half 0 covers [0, pi) (same direction as r
    // counts as position zero), half 1 covers [pi, 2*pi).
    auto rel_half = [&](Coord dx, Coord dy) {
        const std::int64_t cr = rx * dy - ry * dx;
        if (cr > 0) return 0;
        if (cr < 0) return 1;
        const std::int64_t dot = rx * dx + ry * dy;
        return dot > 0 ? 0 : 1;
    };
    const int ha = rel_half(ax, ay);
    const int hb = rel_half(bx, by);
    if (ha != hb) return ha < hb;
    const std::int64_t cr = ax * by - ay * bx;
    if (cr != 0) return cr > 0;
    return ax * ax + ay * ay < bx * bx + by * by;
}

std::vector<PositionViolation> validate_general_position(const PointSet& P) {
    std::vector<PositionViolation> out;
    const int n = P.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (P[i] == P[j]) out.push_back({PositionViolation::Kind::Duplicate, i, j, -1});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (P[i] == P[j]) continue;
            for (int k = j + 1; k < n; ++k)
                if (orientation(P[i], P[j], P[k]) == Orient::Collinear && !(P[k] == P[i]) && !(P[k] == P[j]))
                    out.push_back({PositionViolation::Kind::Collinear, i, j, k});
        }
    return out;
}

void require_general_position(const PointSet& P) {
    const auto violations = validate_general_position(P);
    if (violations.empty()) return;
    const auto& v = violations.front();
    std::string what = "input is not in general position: ";
    if (v.kind == PositionViolation::Kind::Duplicate)
        what += "points " + std::to_string(v.a) + " and " + std::to_string(v.b) + " coincide";
    else
        what += "points " + std::to_string(v.a) + ", " + std::to_string(v.b) + ", " + std::to_string(v.c) +
                " are collinear";
    what += " (" + std::to_string(violations.size()) + " violation(s) total)";
    fail(Errc::degenerate_input, what);
}

std::int64_t count_strict_interior(const Point& a, const Point& b, const Point& c, const PointSet& P) {
    if (orientation(a, b, c) != Orient::CCW)
        fail(Errc::invalid_argument, "count_strict_interior: triangle must be CCW and non-degenerate");
    std::int64_t count = 0;
    for (const Point& q : P.points()) {
        if (orientation(a, b, q) == Orient::CCW && orientation(b, c, q) == Orient::CCW &&
            orientation(c, a, q) == Orient::CCW)
            ++count;
    }
    return count;
}

bool is_convex_ccw(std::span<const Point> poly) {
    const size_t n = poly.size();
    if (n < 3) return false;
    // All turns strictly CCW, and the edge directions wrap the circle exactly once.
    int wraps = 0;
    for (size_t k = 0; k < n; ++k) {
        const Point& a = poly[k];
        const Point& b = poly[(k + 1) % n];
        const Point& c = poly[(k + 2) % n];
        if (orientation(a, b, c) != Orient::CCW) return false;
        const Coord e1x = b.x - a.x, e1y = b.y - a.y;
        const Coord e2x = c.x - b.x, e2y = c.y - b.y;
        if (angle_less(e2x, e2y, e1x, e1y)) ++wraps;
    }
    return wraps == 1;
}

bool contains_on_or_inside(std::span<const Point> poly, const Point& q) {
    const size_t n = poly.size();
    if (n == 1) return poly[0] == q;
    if (n == 2) {
        if (orientation(poly[0], poly[1], q) != Orient::Collinear) return false;
        const Coord lox = std::min(poly[0].x, poly[1].x), hix = std::max(poly[0].x, poly[1].x);
        const Coord loy = std::min(poly[0].y, poly[1].y), hiy = std::max(poly[0].y, poly[1].y);
        return q.x >= lox && q.x <= hix && q.y >= loy && q.y <= hiy;
    }
    for (size_t k = 0; k < n; ++k)
        if (orientation(poly[k], poly[(k + 1) % n], q) == Orient::CW) return false;
    return true;
}

std::vector<int> convex_hull(std::span<const Point> pts) {
    const int n = static_cast<int>(pts.size());
    if (n == 0) return {};
    std::vector<int> idx(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return pts[a].x < pts[b].x || (pts[a].x == pts[b].x && pts[a].y < pts[b].y);
    });
    if (n == 1) return idx;
    if (n == 2) {
        if (pts[idx[0]] == pts[idx[1]]) idx.pop_back();
        // canonical start: lex (y, x) minimum
        if (idx.size() == 2 && lex_yx_less(pts[idx[1]], pts[idx[0]])) std::swap(idx[0], idx[1]);
        return idx;
    }
    std::vector<int> hull;
    hull.reserve(static_cast<size_t>(2 * n));
    // lower then upper chain; strict turns only, so collinear points are dropped
    for (int pass = 0; pass < 2; ++pass) {
        const size_t base = hull.size();
        for (int ii = 0; ii < n; ++ii) {
            const int i = pass == 0 ? idx[static_cast<size_t>(ii)] : idx[static_cast<size_t>(n - 1 - ii)];
            while (hull.size() >= base + 2 &&
                   orientation(pts[hull[hull.size() - 2]], pts[hull.back()], pts[i]) != Orient::CCW)
                hull.pop_back();
            hull.push_back(i);
        }
        hull.pop_back();
    }
    if (hull.empty()) {
        // all points identical
        return {idx[0]};
    }
    size_t start = 0;
    for (size_t k = 1; k < hull.size(); ++k)
        if (lex_yx_less(pts[hull[k]], pts[hull[start]])) start = k;
    std::rotate(hull.begin(), hull.begin() + static_cast<std::ptrdiff_t>(start), hull.end());
    return hull;
}

std::vector<int> convex_hull_subset(const PointSet& P, std::span<const int> subset) {
    std::vector<Point> pts;
    pts.reserve(subset.size());
    for (int i : subset) pts.push_back(P[i]);
    std::vector<int> local = convex_hull(pts);
    std::vector<int> out;
    out.reserve(local.size());
    for (int k : local) out.push_back(subset[static_cast<size_t>(k)]);
    return out;
}

std::vector<Point> gather(const PointSet& P, std::span<const int> indices) {
    std::vector<Point> out;
    out.reserve(indices.size());
    for (int i : indices) out.push_back(P[i]);
    return out;
}

} // namespace wgon
