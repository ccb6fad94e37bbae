#include "igabem/op_count.hpp"

#include <stdexcept>
#include <vector>

namespace igabem {

std::uint64_t predicted_op_count(EvalKind kind, int p) {
    if (p < 1) throw std::domain_error("predicted_op_count: order must be >= 1");
    const std::uint64_t q = static_cast<std::uint64_t>(p);
    switch (kind) {
        case EvalKind::bspline_point:
            return (3 * q * q + 5 * q + 2) / 2;
        case EvalKind::bspline_tangent:
            return (3 * q * q + 3 * q + 6) / 2;
        case EvalKind::nurbs_point:
            return (3 * q * q + 9 * q + 6) / 2;
        case EvalKind::nurbs_tangent:
            return (3 * q * q + 15 * q + 14) / 2;
    }
    throw std::domain_error("predicted_op_count: unknown evaluation kind");
}

namespace {

// Cox-de Boor triangle with counted operations: three per connection,
// 3*p*(p+1)/2 in total for order p. Saves the final-row quotients when
// requested (no extra operations).
void counted_triangle(const KnotVector& kv, int order, double u, int span, OpCounter& ctr,
                      std::vector<double>& N, std::vector<double>* last_quotients) {
    N.assign(static_cast<std::size_t>(order) + 1, 0.0);
    N[0] = 1.0;
    std::vector<double> left(static_cast<std::size_t>(order) + 1);
    std::vector<double> right(static_cast<std::size_t>(order) + 1);
    for (int j = 1; j <= order; ++j) {
        left[j] = u - kv[span + 1 - j];
        right[j] = kv[span + j] - u;
        double saved = 0.0;
        for (int r = 0; r < j; ++r) {
            const double temp = ctr.div(N[r], right[r + 1] + left[j - r]);
            if (j == order && last_quotients) (*last_quotients)[r] = temp;
            N[r] = saved + ctr.mul(right[r + 1], temp);
            saved = ctr.mul(left[j - r], temp);
        }
        N[j] = saved;
    }
}

// Standalone first derivatives: the order p-1 triangle plus one division and
// one multiplication per output, 2(p+1) in total. The divisions at the two
// degenerate boundary terms have zero numerators; a unit divisor keeps them
// well defined when the knot difference vanishes.
void counted_derivatives(const KnotVector& kv, double u, int span, OpCounter& ctr,
                         std::vector<double>& derivs) {
    const int p = kv.order();
    std::vector<double> Nlow;
    if (p > 1) {
        counted_triangle(kv, p - 1, u, span, ctr, Nlow, nullptr);
    } else {
        Nlow.assign(1, 1.0);
    }
    derivs.assign(static_cast<std::size_t>(p) + 1, 0.0);
    double q_left = 0.0;  // quotient of the function below the support range
    for (int f = 0; f <= p; ++f) {
        // Right quotient of output f: N_{k+1,p-1} / (xi_{k+p+1} - xi_{k+1}),
        // k = span - p + f. Local order p-1 values live at k = span-p+1..span.
        const double num = (f < p) ? Nlow[f] : 0.0;
        const double den = kv[span + f + 1] - kv[span - p + f + 1];
        const double q_right = ctr.div(num, den > 0.0 ? den : 1.0);
        derivs[f] = ctr.mul(static_cast<double>(p), q_left - q_right);
        q_left = q_right;
    }
}

Vec2 counted_map(const std::vector<double>& coeff, const NurbsCurve& curve, int first,
                 OpCounter& ctr) {
    Vec2 out;
    for (std::size_t k = 0; k < coeff.size(); ++k)
        out += ctr.mul(coeff[k], curve.control_points()[first + static_cast<int>(k)]);
    return out;
}

}  // namespace

Vec2 counted_curve_point(EvalKind kind, const NurbsCurve& curve, double u, OpCounter& ctr) {
    const KnotVector& kv = curve.knot_vector();
    const int p = kv.order();
    const int span = kv.find_span(u);
    const int first = span - p;
    const std::vector<double>& w = curve.basis().weights();

    std::vector<double> N, derivs;
    switch (kind) {
        case EvalKind::bspline_point:
            counted_triangle(kv, p, u, span, ctr, N, nullptr);
            return counted_map(N, curve, first, ctr);

        case EvalKind::bspline_tangent:
            counted_derivatives(kv, u, span, ctr, derivs);
            return counted_map(derivs, curve, first, ctr);

        case EvalKind::nurbs_point: {
            counted_triangle(kv, p, u, span, ctr, N, nullptr);
            double W = 0.0;
            for (int k = 0; k <= p; ++k) {
                N[k] = ctr.mul(N[k], w[first + k]);
                W += N[k];
            }
            for (int k = 0; k <= p; ++k) N[k] = ctr.div(N[k], W);
            return counted_map(N, curve, first, ctr);
        }

        case EvalKind::nurbs_tangent: {
            // Values and derivatives together from one triangle pass: the
            // saved quotients give each derivative with one multiplication.
            std::vector<double> q(static_cast<std::size_t>(p), 0.0);
            counted_triangle(kv, p, u, span, ctr, N, &q);
            derivs.assign(static_cast<std::size_t>(p) + 1, 0.0);
            for (int f = 0; f <= p; ++f) {
                const double q_left = (f > 0) ? q[f - 1] : 0.0;
                const double q_right = (f < p) ? q[f] : 0.0;
                derivs[f] = ctr.mul(static_cast<double>(p), q_left - q_right);
            }
            double W = 0.0, Wp = 0.0;
            for (int k = 0; k <= p; ++k) {
                N[k] = ctr.mul(N[k], w[first + k]);
                derivs[k] = ctr.mul(derivs[k], w[first + k]);
                W += N[k];
                Wp += derivs[k];
            }
            const double beta = ctr.div(Wp, W);
            for (int k = 0; k <= p; ++k)
                derivs[k] = ctr.div(derivs[k] - ctr.mul(N[k], beta), W);
            return counted_map(derivs, curve, first, ctr);
        }
    }
    throw std::domain_error("counted_curve_point: unknown evaluation kind");
}

}  // namespace igabem
