#pragma once

#include <vector>

namespace igabem {

/// Open knot vector of order p: non-decreasing knots with the first and last
/// knot repeated exactly p+1 times and at least one non-zero span.
class KnotVector {
public:
    KnotVector(std::vector<double> knots, int order);

    int order() const { return order_; }
    int size() const { return static_cast<int>(knots_.size()); }
    int num_basis() const { return size() - order_ - 1; }
    double front() const { return knots_.front(); }
    double back() const { return knots_.back(); }
    double operator[](int i) const { return knots_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& knots() const { return knots_; }

    /// Span index k with knots[k] <= u < knots[k+1]; u == back() maps to the
    /// final non-zero span. Throws std::domain_error outside [front, back].
    int find_span(double u) const;

    /// Multiplicity of the exact value u (bitwise comparison).
    int multiplicity(double u) const;

    /// Distinct knot values in ascending order.
    std::vector<double> breakpoints() const;

    /// Non-zero spans as (knot index, [a,b]) pairs, ascending.
    struct Span {
        int index;
        double a;
        double b;
    };
    std::vector<Span> nonzero_spans() const;

    /// Knot vector with u inserted once (after position find_span(u)).
    KnotVector inserted(double u) const;

    /// Same breakpoints, every multiplicity raised by one, order p+1.
    KnotVector elevated() const;

    /// Greville abscissa of basis function i: mean of p consecutive knots.
    double greville(int i) const;

    bool operator==(const KnotVector& o) const {
        return order_ == o.order_ && knots_ == o.knots_;
    }

    /// True if every knot of `sub` occurs in *this with at least the same
    /// multiplicity (multiset inclusion).
    bool contains(const KnotVector& sub) const;

private:
    std::vector<double> knots_;
    int order_;
};

/// Values of the p+1 non-vanishing B-spline basis functions at u together
/// with their first derivatives. Function `span - p + k` carries values[k].
struct BasisValues {
    int span = 0;
    int first = 0;  ///< index of the first non-vanishing function
    std::vector<double> values;
    std::vector<double> derivs;
};

/// Cox-de Boor evaluation of all non-vanishing functions and derivatives.
BasisValues eval_bspline(const KnotVector& kv, double u);

/// Values only (no derivative pass); same layout as eval_bspline.
BasisValues eval_bspline_values(const KnotVector& kv, double u);

}  // namespace igabem
