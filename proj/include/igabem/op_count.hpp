#pragma once

#include <cstdint>

#include "igabem/nurbs.hpp"

namespace igabem {

/// Tally of elementary operations (multiplications and divisions). Single
/// threaded by design; use one counter per worker.
class OpCounter {
public:
    std::uint64_t count() const { return count_; }
    void reset() { count_ = 0; }

    double mul(double a, double b) { ++count_; return a * b; }
    double div(double a, double b) { ++count_; return a / b; }
    /// Scaling a control point counts as one elementary operation: the cost
    /// model charges the mapping with (p+1)^d ops in the parametric
    /// dimension d, independent of the physical dimension.
    Vec2 mul(double s, const Vec2& c) { ++count_; return c * s; }

private:
    std::uint64_t count_ = 0;
};

enum class EvalKind { bspline_point, bspline_tangent, nurbs_point, nurbs_tangent };

/// Closed-form number of elementary operations for the evaluation of curve
/// points and tangents with B-spline or NURBS basis functions of order p.
std::uint64_t predicted_op_count(EvalKind kind, int p);

/// Instrumented evaluation paths. Each performs the true arithmetic while
/// tallying every multiplication and division on the counter; the tally
/// matches predicted_op_count exactly. The curve is interpreted as B-spline
/// (weights ignored) for the bspline variants.
Vec2 counted_curve_point(EvalKind kind, const NurbsCurve& curve, double u, OpCounter& ctr);

}  // namespace igabem
