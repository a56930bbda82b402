#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wgon/geom.hpp"

namespace wgon {

enum class WeightId { Area2, Perimeter, VertexCount, Coverage };
enum class Direction { Min, Max };

std::string weight_name(WeightId id);
WeightId weight_from_name(const std::string& name);

/// A weight value. Area2, VertexCount and Coverage are exact 64-bit integers;
/// Perimeter is a double. The owning WeightFunction fixes which field is live.
struct WeightValue {
    std::int64_t iv = 0;
    double rv = 0.0;

    static WeightValue of_int(std::int64_t v) { return {v, static_cast<double>(v)}; }
    static WeightValue of_real(double v) { return {0, v}; }
};

/// A decomposable polygon weight: a base value on a fan triangle plus a
/// constant-time merge across a shared chord, monotone in both arguments.
/// polygon weight == fold of triangle bases under merge, for any chord split.
class WeightFunction {
public:
    WeightFunction(WeightId id, Direction dir) : id_(id), dir_(dir) {}

    WeightId id() const { return id_; }
    Direction direction() const { return dir_; }
    bool integral() const { return id_ != WeightId::Perimeter; }

    /// Weight of fan triangle (P[i], P[j], P[l]). Coverage needs the full set.
    WeightValue base(const PointSet& P, int i, int j, int l) const;

    /// Combine two sub-polygon weights that share the chord (a, b).
    WeightValue merge(const WeightValue& x, const WeightValue& y, const Point& a, const Point& b) const;

    /// Strictly better according to the optimization direction.
    bool better(const WeightValue& x, const WeightValue& y) const;

    /// Sentinel that every real value beats; tables start here.
    WeightValue worst() const;
    bool is_set(const WeightValue& v) const;

    /// Equality at the weight's native tolerance (exact for integral weights,
    /// 1e-9 relative for perimeter).
    bool equal(const WeightValue& x, const WeightValue& y) const;

    std::string display(const WeightValue& v) const;

private:
    WeightId id_;
    Direction dir_;
};

/// Factory with the conventional direction per weight (Coverage maximizes,
/// everything else minimizes).
WeightFunction make_weight(WeightId id);
WeightFunction make_weight(WeightId id, Direction dir);

/// Direct evaluation of a convex CCW polygon (vertex indices into P) by fan
/// decomposition from its bottommost vertex. Rejects non-convex input.
/// Perimeter results are cross-checked against the plain edge-length sum.
WeightValue polygon_weight(std::span<const int> poly, const PointSet& P, const WeightFunction& wf);

/// Does the weight split correctly across the chord (poly[0], poly[chord_pos])?
/// chord_pos must be strictly between the second and last positions.
bool check_decomposition(std::span<const int> poly, int chord_pos, const PointSet& P,
                         const WeightFunction& wf);

/// O(1) triangle interior counts backed by an O(n^3) "points below chord"
/// table. Used by solvers so that Coverage fan bases stop costing O(n) each.
class TriangleCounter {
public:
    explicit TriangleCounter(const PointSet& P);
    std::int64_t count(int a, int b, int c) const;

private:
    const PointSet& P_;
    int n_;
    std::vector<std::int32_t> below_; // below_[u*n+v], u lex-x before v
    std::vector<int> lex_rank_;
};

/// Solver-side evaluator: same contract as WeightFunction::base but with the
/// coverage counts precomputed. Holds its own copy of the weight function.
class PreparedWeight {
public:
    PreparedWeight(const PointSet& P, const WeightFunction& wf);

    const WeightFunction& wf() const { return wf_; }
    WeightValue base(int i, int j, int l) const;
    WeightValue merge(const WeightValue& x, const WeightValue& y, int chord_a, int chord_b) const {
        return wf_.merge(x, y, P_[chord_a], P_[chord_b]);
    }
    bool better(const WeightValue& x, const WeightValue& y) const { return wf_.better(x, y); }

private:
    const PointSet& P_;
    WeightFunction wf_;
    std::vector<TriangleCounter> counter_; // 0 or 1 elements
};

} // namespace wgon
