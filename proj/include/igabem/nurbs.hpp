#pragma once

#include <vector>

#include "igabem/geometry.hpp"
#include "igabem/knot_vector.hpp"

namespace igabem {

/// Rational basis: open knot vector plus one positive weight per function.
/// With equal weights the rational values coincide with the B-spline ones.
class NurbsBasis {
public:
    NurbsBasis(KnotVector kv, std::vector<double> weights);

    /// All weights one.
    static NurbsBasis polynomial(KnotVector kv);

    const KnotVector& knot_vector() const { return kv_; }
    int order() const { return kv_.order(); }
    int count() const { return kv_.num_basis(); }
    const std::vector<double>& weights() const { return weights_; }

    /// Rational values and first derivatives of the non-vanishing functions.
    BasisValues eval(double u) const;

private:
    KnotVector kv_;
    std::vector<double> weights_;
};

struct CurvePoint {
    Vec2 point;
    Vec2 tangent;       ///< derivative of the mapping w.r.t. u
    double gram = 0.0;  ///< sqrt(g) = |tangent| for a curve
};

/// NURBS curve in the plane.
class NurbsCurve {
public:
    NurbsCurve(NurbsBasis basis, std::vector<Vec2> control_points);

    const NurbsBasis& basis() const { return basis_; }
    const KnotVector& knot_vector() const { return basis_.knot_vector(); }
    int order() const { return basis_.order(); }
    const std::vector<Vec2>& control_points() const { return control_points_; }

    CurvePoint eval(double u) const;
    Vec2 point(double u) const { return eval(u).point; }

private:
    NurbsBasis basis_;
    std::vector<Vec2> control_points_;
};

/// Rational knot insertion (geometry preserved exactly).
NurbsCurve insert_knot(const NurbsCurve& curve, double u_new);

/// Order elevation p -> p+1 (geometry preserved, every distinct knot's
/// multiplicity raised by one).
NurbsCurve elevate_order(const NurbsCurve& curve);

/// Bezier decomposition of a geometry curve over the merged knot vector of
/// several accumulated field knot vectors. The merged vector carries the
/// geometry order; every interior breakpoint reaches multiplicity p.
struct BezierSegment {
    double a;
    double b;
    std::vector<Vec2> control_points;  ///< p+1 points, convex hull contains the arc
    std::vector<double> weights;
};

struct BezierDecomposition {
    KnotVector merged;  ///< Xi_h
    std::vector<BezierSegment> segments;
};

BezierDecomposition bezier_segments(const NurbsCurve& geometry,
                                    const std::vector<KnotVector>& accumulated);

/// Axis-aligned box containing chi(supp{basis function j of `field`}), built
/// from the control points of the Bezier segments overlapping the support.
Box support_bounding_box(const BezierDecomposition& dec, const KnotVector& field, int j);

}  // namespace igabem
