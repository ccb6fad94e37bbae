#include "igabem/nurbs.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace igabem {

NurbsBasis::NurbsBasis(KnotVector kv, std::vector<double> weights)
    : kv_(std::move(kv)), weights_(std::move(weights)) {
    if (static_cast<int>(weights_.size()) != kv_.num_basis())
        throw std::invalid_argument("nurbs basis: one weight per basis function required");
    for (double w : weights_)
        if (!(w > 0.0)) throw std::invalid_argument("nurbs basis: weights must be positive");
}

NurbsBasis NurbsBasis::polynomial(KnotVector kv) {
    const int n = kv.num_basis();
    return NurbsBasis(std::move(kv), std::vector<double>(static_cast<std::size_t>(n), 1.0));
}

BasisValues NurbsBasis::eval(double u) const {
    BasisValues b = eval_bspline(kv_, u);
    const int p = order();
    double W = 0.0, Wp = 0.0;
    for (int k = 0; k <= p; ++k) {
        const double w = weights_[b.first + k];
        b.values[k] *= w;
        b.derivs[k] *= w;
        W += b.values[k];
        Wp += b.derivs[k];
    }
    const double beta = Wp / W;
    for (int k = 0; k <= p; ++k) {
        b.derivs[k] = (b.derivs[k] - b.values[k] * beta) / W;
        b.values[k] /= W;
    }
    return b;
}

NurbsCurve::NurbsCurve(NurbsBasis basis, std::vector<Vec2> control_points)
    : basis_(std::move(basis)), control_points_(std::move(control_points)) {
    if (static_cast<int>(control_points_.size()) != basis_.count())
        throw std::invalid_argument("nurbs curve: one control point per basis function required");
}

CurvePoint NurbsCurve::eval(double u) const {
    const BasisValues b = basis_.eval(u);
    CurvePoint out;
    for (int k = 0; k <= order(); ++k) {
        out.point += b.values[k] * control_points_[b.first + k];
        out.tangent += b.derivs[k] * control_points_[b.first + k];
    }
    out.gram = out.tangent.norm();
    return out;
}

namespace {

struct Hom {
    double x, y, w;
};

std::vector<Hom> to_homogeneous(const NurbsCurve& c) {
    std::vector<Hom> h(c.control_points().size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        const double w = c.basis().weights()[i];
        h[i] = {c.control_points()[i].x * w, c.control_points()[i].y * w, w};
    }
    return h;
}

NurbsCurve from_homogeneous(KnotVector kv, const std::vector<Hom>& h) {
    std::vector<Vec2> pts(h.size());
    std::vector<double> w(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        w[i] = h[i].w;
        pts[i] = {h[i].x / h[i].w, h[i].y / h[i].w};
    }
    return NurbsCurve(NurbsBasis(std::move(kv), std::move(w)), std::move(pts));
}

// Boehm single knot insertion in homogeneous coordinates.
std::vector<Hom> insert_homogeneous(const KnotVector& kv, const std::vector<Hom>& P, double u) {
    const int p = kv.order();
    const int k = kv.find_span(u);
    std::vector<Hom> Q(P.size() + 1);
    for (int i = 0; i <= k - p; ++i) Q[i] = P[i];
    for (int i = k - p + 1; i <= k; ++i) {
        const double a = (u - kv[i]) / (kv[i + p] - kv[i]);
        Q[i] = {a * P[i].x + (1.0 - a) * P[i - 1].x,
                a * P[i].y + (1.0 - a) * P[i - 1].y,
                a * P[i].w + (1.0 - a) * P[i - 1].w};
    }
    for (std::size_t i = k + 1; i < Q.size(); ++i) Q[i] = P[i - 1];
    return Q;
}

constexpr double kKnotSeparation = 1e-12;

}  // namespace

NurbsCurve insert_knot(const NurbsCurve& curve, double u_new) {
    const KnotVector& kv = curve.knot_vector();
    if (u_new <= kv.front() || u_new >= kv.back())
        throw std::domain_error("knot insertion: value must lie strictly inside the knot range");
    if (kv.multiplicity(u_new) == 0) {
        for (double k : kv.knots())
            if (std::abs(k - u_new) < kKnotSeparation)
                throw std::domain_error("knot insertion: new knot too close to an existing knot");
    }
    if (kv.multiplicity(u_new) >= kv.order())
        throw std::domain_error("knot insertion: multiplicity would exceed the order");
    const std::vector<Hom> Q = insert_homogeneous(kv, to_homogeneous(curve), u_new);
    return from_homogeneous(kv.inserted(u_new), Q);
}

NurbsCurve elevate_order(const NurbsCurve& curve) {
    // The elevated space contains the curve exactly, so the homogeneous
    // control points are recovered by interpolation at the Greville
    // abscissae of the elevated basis (Schoenberg-Whitney holds there).
    const KnotVector elevated = curve.knot_vector().elevated();
    const int n = elevated.num_basis();
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd rhs(n, 3);
    const std::vector<Hom> P = to_homogeneous(curve);
    const KnotVector& kv = curve.knot_vector();
    for (int row = 0; row < n; ++row) {
        const double u = elevated.greville(row);
        const BasisValues b = eval_bspline_values(elevated, u);
        for (int k = 0; k <= elevated.order(); ++k) A(row, b.first + k) = b.values[k];
        // Homogeneous curve point at u in the original basis.
        const BasisValues o = eval_bspline_values(kv, u);
        Hom s{0.0, 0.0, 0.0};
        for (int k = 0; k <= kv.order(); ++k) {
            s.x += o.values[k] * P[o.first + k].x;
            s.y += o.values[k] * P[o.first + k].y;
            s.w += o.values[k] * P[o.first + k].w;
        }
        rhs(row, 0) = s.x;
        rhs(row, 1) = s.y;
        rhs(row, 2) = s.w;
    }
    const Eigen::MatrixXd sol = A.partialPivLu().solve(rhs);
    std::vector<Hom> Q(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) Q[i] = {sol(i, 0), sol(i, 1), sol(i, 2)};
    return from_homogeneous(elevated, Q);
}

BezierDecomposition bezier_segments(const NurbsCurve& geometry,
                                    const std::vector<KnotVector>& accumulated) {
    const KnotVector& kv = geometry.knot_vector();
    const int p = kv.order();
    std::vector<double> breaks = kv.breakpoints();
    for (const KnotVector& other : accumulated) {
        if (other.front() != kv.front() || other.back() != kv.back())
            throw std::domain_error("bezier segments: knot vectors must share the parametric range");
        for (double b : other.breakpoints())
            if (std::find(breaks.begin(), breaks.end(), b) == breaks.end()) breaks.push_back(b);
    }
    std::sort(breaks.begin(), breaks.end());

    // Raise every interior breakpoint to multiplicity p by knot insertion.
    KnotVector merged = kv;
    std::vector<Hom> P = to_homogeneous(geometry);
    for (std::size_t bi = 1; bi + 1 < breaks.size(); ++bi) {
        while (merged.multiplicity(breaks[bi]) < p) {
            P = insert_homogeneous(merged, P, breaks[bi]);
            merged = merged.inserted(breaks[bi]);
        }
    }

    BezierDecomposition out{merged, {}};
    // Segment l covers [breaks[l], breaks[l+1]] with control points l*p .. l*p+p.
    for (std::size_t l = 0; l + 1 < breaks.size(); ++l) {
        BezierSegment seg;
        seg.a = breaks[l];
        seg.b = breaks[l + 1];
        const std::size_t start = l * static_cast<std::size_t>(p);
        for (int k = 0; k <= p; ++k) {
            const Hom& h = P[start + k];
            seg.control_points.push_back({h.x / h.w, h.y / h.w});
            seg.weights.push_back(h.w);
        }
        out.segments.push_back(std::move(seg));
    }
    return out;
}

Box support_bounding_box(const BezierDecomposition& dec, const KnotVector& field, int j) {
    if (j < 0 || j >= field.num_basis())
        throw std::invalid_argument("support bounding box: basis index out of range");
    const double lo = field[j];
    const double hi = field[j + field.order() + 1];
    Box box;
    for (const BezierSegment& seg : dec.segments) {
        if (seg.b <= lo || seg.a >= hi) continue;
        for (const Vec2& c : seg.control_points) box.extend(c);
    }
    return box;
}

}  // namespace igabem
