#include "wgon/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wgon {

namespace {

double dist(const Point& a, const Point& b) {
    const double dx = static_cast<double>(a.x - b.x);
    const double dy = static_cast<double>(a.y - b.y);
    return std::sqrt(dx * dx + dy * dy);
}

bool nearly_equal(double a, double b, double rel) {
    const double diff = std::abs(a - b);
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return diff <= rel * scale;
}

} // namespace

std::string weight_name(WeightId id) {
    switch (id) {
        case WeightId::Area2: return "area2";
        case WeightId::Perimeter: return "perimeter";
        case WeightId::VertexCount: return "vertex-count";
        case WeightId::Coverage: return "coverage";
    }
    return "?";
}

WeightId weight_from_name(const std::string& name) {
    if (name == "area2" || name == "area") return WeightId::Area2;
    if (name == "perimeter") return WeightId::Perimeter;
    if (name == "vertex-count") return WeightId::VertexCount;
    if (name == "coverage") return WeightId::Coverage;
    fail(Errc::invalid_argument, "unknown weight '" + name + "'");
}

WeightValue WeightFunction::base(const PointSet& P, int i, int j, int l) const {
    switch (id_) {
        case WeightId::Area2:
            return WeightValue::of_int(triangle_area2(P[i], P[j], P[l]));
        case WeightId::Perimeter:
            return WeightValue::of_real(dist(P[i], P[j]) + dist(P[j], P[l]) + dist(P[l], P[i]));
        case WeightId::VertexCount:
            return WeightValue::of_int(3);
        case WeightId::Coverage:
            return WeightValue::of_int(3 + count_strict_interior(P[i], P[j], P[l], P));
    }
    fail(Errc::internal, "unreachable weight id");
}

WeightValue WeightFunction::merge(const WeightValue& x, const WeightValue& y, const Point& a,
                                  const Point& b) const {
    switch (id_) {
        case WeightId::Area2:
            return WeightValue::of_int(x.iv + y.iv);
        case WeightId::Perimeter:
            // The shared chord is traversed by both sub-polygons but is not an
            // edge of the union, so its length leaves the total twice.
            return WeightValue::of_real(x.rv + y.rv - 2.0 * dist(a, b));
        case WeightId::VertexCount:
        case WeightId::Coverage:
            // Chord endpoints are counted by both sides.
            return WeightValue::of_int(x.iv + y.iv - 2);
    }
    fail(Errc::internal, "unreachable weight id");
}

bool WeightFunction::better(const WeightValue& x, const WeightValue& y) const {
    if (integral()) return dir_ == Direction::Min ? x.iv < y.iv : x.iv > y.iv;
    return dir_ == Direction::Min ? x.rv < y.rv : x.rv > y.rv;
}

WeightValue WeightFunction::worst() const {
    if (integral())
        return WeightValue::of_int(dir_ == Direction::Min ? std::numeric_limits<std::int64_t>::max()
                                                          : std::numeric_limits<std::int64_t>::min());
    return WeightValue::of_real(dir_ == Direction::Min ? std::numeric_limits<double>::infinity()
                                                       : -std::numeric_limits<double>::infinity());
}

bool WeightFunction::is_set(const WeightValue& v) const {
    if (integral()) return v.iv != worst().iv;
    return std::isfinite(v.rv);
}

bool WeightFunction::equal(const WeightValue& x, const WeightValue& y) const {
    if (integral()) return x.iv == y.iv;
    return nearly_equal(x.rv, y.rv, 1e-9);
}

std::string WeightFunction::display(const WeightValue& v) const {
    if (integral()) return std::to_string(v.iv);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v.rv);
    return buf;
}

WeightFunction make_weight(WeightId id) {
    return WeightFunction(id, id == WeightId::Coverage ? Direction::Max : Direction::Min);
}

WeightFunction make_weight(WeightId id, Direction dir) { return WeightFunction(id, dir); }

namespace {

int bottom_position(std::span<const int> poly, const PointSet& P) {
    int best = 0;
    for (int k = 1; k < static_cast<int>(poly.size()); ++k)
        if (lex_yx_less(P[poly[static_cast<size_t>(k)]], P[poly[static_cast<size_t>(best)]])) best = k;
    return best;
}

} // namespace

WeightValue polygon_weight(std::span<const int> poly, const PointSet& P, const WeightFunction& wf) {
    const int m = static_cast<int>(poly.size());
    if (m < 3) fail(Errc::invalid_argument, "polygon_weight: need at least 3 vertices");
    const std::vector<Point> pts = gather(P, poly);
    if (!is_convex_ccw(pts)) fail(Errc::invalid_argument, "polygon_weight: polygon is not convex CCW");

    // Fan from the bottommost vertex; the value is independent of the anchor,
    // this just fixes the evaluation order.
    const int b = bottom_position(poly, P);
    auto at = [&](int k) { return poly[static_cast<size_t>((b + k) % m)]; };

    WeightValue acc = wf.base(P, at(0), at(1), at(2));
    for (int k = 2; k + 1 < m; ++k) {
        const WeightValue tri = wf.base(P, at(0), at(k), at(k + 1));
        acc = wf.merge(acc, tri, P[at(0)], P[at(k)]);
    }

    if (wf.id() == WeightId::Perimeter) {
        double direct = 0.0;
        for (int k = 0; k < m; ++k)
            direct += dist(P[poly[static_cast<size_t>(k)]], P[poly[static_cast<size_t>((k + 1) % m)]]);
        if (!nearly_equal(acc.rv, direct, 1e-9))
            fail(Errc::internal, "perimeter fan fold disagrees with direct edge sum");
    }
    return acc;
}

bool check_decomposition(std::span<const int> poly, int chord_pos, const PointSet& P,
                         const WeightFunction& wf) {
    const int m = static_cast<int>(poly.size());
    if (m < 4) fail(Errc::invalid_argument, "check_decomposition: need at least 4 vertices");
    if (chord_pos < 2 || chord_pos > m - 2)
        fail(Errc::invalid_argument, "check_decomposition: chord position out of range");

    std::vector<int> left(poly.begin(), poly.begin() + chord_pos + 1);
    std::vector<int> right;
    right.push_back(poly[0]);
    for (int k = chord_pos; k < m; ++k) right.push_back(poly[static_cast<size_t>(k)]);

    const WeightValue whole = polygon_weight(poly, P, wf);
    const WeightValue wl = polygon_weight(left, P, wf);
    const WeightValue wr = polygon_weight(right, P, wf);
    const WeightValue merged = wf.merge(wl, wr, P[poly[0]], P[poly[static_cast<size_t>(chord_pos)]]);
    return wf.equal(whole, merged);
}

TriangleCounter::TriangleCounter(const PointSet& P) : P_(P), n_(P.size()) {
    // Rank points in lex (x, y) order; "below chord (u, v)" is then a plain
    // orientation test on the strictly-between points. The triangle count
    // telescopes from three chord counts.
    lex_rank_.assign(static_cast<size_t>(n_), 0);
    std::vector<int> order(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return P[a].x < P[b].x || (P[a].x == P[b].x && P[a].y < P[b].y);
    });
    for (int r = 0; r < n_; ++r) lex_rank_[static_cast<size_t>(order[static_cast<size_t>(r)])] = r;

    below_.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_), 0);
    for (int u = 0; u < n_; ++u) {
        for (int v = 0; v < n_; ++v) {
            if (lex_rank_[static_cast<size_t>(u)] >= lex_rank_[static_cast<size_t>(v)]) continue;
            std::int32_t cnt = 0;
            for (int p = 0; p < n_; ++p) {
                if (lex_rank_[static_cast<size_t>(p)] <= lex_rank_[static_cast<size_t>(u)] ||
                    lex_rank_[static_cast<size_t>(p)] >= lex_rank_[static_cast<size_t>(v)])
                    continue;
                if (orientation(P[u], P[v], P[p]) == Orient::CW) ++cnt;
            }
            below_[static_cast<size_t>(u) * static_cast<size_t>(n_) + static_cast<size_t>(v)] = cnt;
        }
    }
}

std::int64_t TriangleCounter::count(int a, int b, int c) const {
    int v[3] = {a, b, c};
    std::sort(v, v + 3, [&](int x, int y) {
        return lex_rank_[static_cast<size_t>(x)] < lex_rank_[static_cast<size_t>(y)];
    });
    auto below = [&](int u, int w) {
        return static_cast<std::int64_t>(
            below_[static_cast<size_t>(u) * static_cast<size_t>(n_) + static_cast<size_t>(w)]);
    };
    const int lo = v[0], mid = v[1], hi = v[2];
    if (orientation(P_[lo], P_[hi], P_[mid]) == Orient::CW) {
        // middle vertex hangs below the long chord
        return below(lo, hi) - below(lo, mid) - below(mid, hi) - 1;
    }
    return below(lo, mid) + below(mid, hi) - below(lo, hi);
}

PreparedWeight::PreparedWeight(const PointSet& P, const WeightFunction& wf) : P_(P), wf_(wf) {
    if (wf.id() == WeightId::Coverage) counter_.emplace_back(P);
}

WeightValue PreparedWeight::base(int i, int j, int l) const {
    if (!counter_.empty()) return WeightValue::of_int(3 + counter_.front().count(i, j, l));
    return wf_.base(P_, i, j, l);
}

} // namespace wgon
