#pragma once

#include <Eigen/Core>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "igabem/errors.hpp"
#include "igabem/geometry.hpp"

namespace igabem {

/// Gauss-Legendre rule on (-1,1); exact for polynomials of degree <= 2G-1.
/// Rules are cached per order behind a mutex.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_rule(int order);

struct QuadratureConfig {
    double eps = 1e-9;              ///< relative tolerance between order pairs
    int g0 = 4;                     ///< initial order
    int g_step = 2;                 ///< order escalation step
    int g_max = 64;                 ///< order cap
    double near_singular_factor = 1.0;  ///< subdivide while diam > factor * dist

    void validate() const;
};

enum class RegionKind { regular, singular_at_a, singular_at_b };

/// Parametric integration interval within one element of a patch.
struct IntegrationRegion {
    double a;
    double b;
    RegionKind kind = RegionKind::regular;
};

/// Split an element [a,b] against a collocation point. `preimage` is the
/// parameter of x on this patch if x lies on the element's closure (NaN
/// otherwise). `sample` maps a parameter to the physical curve point.
std::vector<IntegrationRegion> classify_and_subdivide(
    double a, double b, const Vec2& x, double preimage,
    const std::function<Vec2(double)>& sample, const QuadratureConfig& cfg);

namespace detail {
inline double scalar_norm(double v) { return std::abs(v); }
inline double scalar_norm(const Mat2& m) { return m.frobenius_norm(); }
inline double scalar_norm(const Vec2& v) { return v.norm(); }

template <typename T>
T gauss_sum(const std::function<T(double)>& f, double a, double b, int order) {
    const GaussRule& rule = gauss_rule(order);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    T acc{};
    for (std::size_t g = 0; g < rule.nodes.size(); ++g)
        acc += rule.weights[g] * half * f(mid + half * rule.nodes[g]);
    return acc;
}

// Gauss sum under the grading u = u0 + s*h*eta^2 that flattens endpoint log
// singularities; the Jacobian h*(1+xi)/2 vanishes at the singular end.
template <typename T>
T graded_gauss_sum(const std::function<T(double)>& f, double a, double b, bool singular_at_a,
                   int order) {
    const GaussRule& rule = gauss_rule(order);
    const double h = b - a;
    const double u0 = singular_at_a ? a : b;
    const double s = singular_at_a ? 1.0 : -1.0;
    T acc{};
    for (std::size_t g = 0; g < rule.nodes.size(); ++g) {
        const double eta = 0.5 * (1.0 + rule.nodes[g]);
        const double u = u0 + s * h * eta * eta;
        acc += rule.weights[g] * (h * eta) * f(u);
    }
    return acc;
}

template <typename T, typename Evaluate>
T escalate(const Evaluate& evaluate, const QuadratureConfig& cfg, const char* what) {
    T q0 = evaluate(cfg.g0);
    double change = scalar_norm(q0);
    for (int g = cfg.g0 + cfg.g_step; g <= cfg.g_max; g += cfg.g_step) {
        const T q1 = evaluate(g);
        change = scalar_norm(q1 - q0);
        if (change <= cfg.eps * scalar_norm(q1) || change == 0.0) return q1;
        q0 = q1;
    }
    const double scale = scalar_norm(q0);
    throw QuadratureNonConvergence(std::string(what) + ": order cap reached without convergence",
                                   scale, scale > 0.0 ? change / scale : change);
}
}  // namespace detail

/// Adaptive Gauss integration of a finite integrand over [a,b]: successive
/// order pairs (G, G+step) until their relative variation drops below eps.
template <typename T>
T integrate_adaptive(const std::function<T(double)>& f, double a, double b,
                     const QuadratureConfig& cfg) {
    return detail::escalate<T>([&](int g) { return detail::gauss_sum(f, a, b, g); }, cfg,
                               "integrate_adaptive");
}

/// Integration with a log-type endpoint singularity: quadratic grading plus
/// order escalation, with dyadic bisection toward the singular end as a
/// fallback when the order cap alone cannot reach the tolerance.
template <typename T>
T integrate_singular(const std::function<T(double)>& f, double a, double b, bool singular_at_a,
                     const QuadratureConfig& cfg, int depth = 0) {
    try {
        return detail::escalate<T>(
            [&](int g) { return detail::graded_gauss_sum(f, a, b, singular_at_a, g); }, cfg,
            "integrate_singular");
    } catch (const QuadratureNonConvergence&) {
        if (depth >= 40) throw;
        const double mid = 0.5 * (a + b);
        if (singular_at_a) {
            return integrate_singular(f, a, mid, true, cfg, depth + 1) +
                   integrate_adaptive(f, mid, b, cfg);
        }
        return integrate_adaptive(f, a, mid, cfg) +
               integrate_singular(f, mid, b, false, cfg, depth + 1);
    }
}

/// Integrate over a classified region.
template <typename T>
T integrate_region(const std::function<T(double)>& f, const IntegrationRegion& region,
                   const QuadratureConfig& cfg) {
    switch (region.kind) {
        case RegionKind::regular:
            return integrate_adaptive(f, region.a, region.b, cfg);
        case RegionKind::singular_at_a:
            return integrate_singular(f, region.a, region.b, true, cfg);
        case RegionKind::singular_at_b:
            return integrate_singular(f, region.a, region.b, false, cfg);
    }
    return T{};
}

}  // namespace igabem
