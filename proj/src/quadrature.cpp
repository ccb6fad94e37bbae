#include "igabem/quadrature.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace igabem {

namespace {

// Newton iteration on the Legendre polynomial, seeded with the Chebyshev
// angle approximation of the roots.
GaussRule compute_gauss_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    if (n == 1) {
        rule.nodes[0] = 0.0;
        rule.weights[0] = 2.0;
    }
    return rule;
}

std::mutex g_gauss_mutex;
std::map<int, GaussRule> g_gauss_cache;

}  // namespace

const GaussRule& gauss_rule(int order) {
    if (order < 1) throw std::invalid_argument("gauss_rule: order must be >= 1");
    std::lock_guard<std::mutex> lock(g_gauss_mutex);
    auto it = g_gauss_cache.find(order);
    if (it == g_gauss_cache.end()) it = g_gauss_cache.emplace(order, compute_gauss_rule(order)).first;
    return it->second;
}

void QuadratureConfig::validate() const {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("quadrature: eps must be in (0,1)");
    if (g0 < 1 || g0 >= g_max) throw std::invalid_argument("quadrature: need 1 <= G0 < Gmax");
    if (g_step < 1) throw std::invalid_argument("quadrature: order step must be >= 1");
    if (!(near_singular_factor > 0.0))
        throw std::invalid_argument("quadrature: near-singular factor must be positive");
}

namespace {

// Chord-based diameter and distance from three parametric samples.
struct RegionGeometry {
    double diam;
    double dist;
};

RegionGeometry region_geometry(double a, double b, const Vec2& x,
                               const std::function<Vec2(double)>& sample) {
    const Vec2 pa = sample(a);
    const Vec2 pm = sample(0.5 * (a + b));
    const Vec2 pb = sample(b);
    RegionGeometry g;
    g.diam = std::max({(pa - pm).norm(), (pm - pb).norm(), (pa - pb).norm()});
    g.dist = std::min({(pa - x).norm(), (pm - x).norm(), (pb - x).norm()});
    return g;
}

void subdivide_near(double a, double b, const Vec2& x, const std::function<Vec2(double)>& sample,
                    const QuadratureConfig& cfg, int depth, std::vector<IntegrationRegion>& out) {
    const RegionGeometry g = region_geometry(a, b, x, sample);
    if (g.diam <= cfg.near_singular_factor * g.dist || depth >= 40) {
        out.push_back({a, b, RegionKind::regular});
        return;
    }
    const double mid = 0.5 * (a + b);
    subdivide_near(a, mid, x, sample, cfg, depth + 1, out);
    subdivide_near(mid, b, x, sample, cfg, depth + 1, out);
}

}  // namespace

std::vector<IntegrationRegion> classify_and_subdivide(
    double a, double b, const Vec2& x, double preimage,
    const std::function<Vec2(double)>& sample, const QuadratureConfig& cfg) {
    std::vector<IntegrationRegion> out;
    if (!std::isnan(preimage) && preimage >= a && preimage <= b) {
        if (preimage > a) out.push_back({a, preimage, RegionKind::singular_at_b});
        if (preimage < b) out.push_back({preimage, b, RegionKind::singular_at_a});
        return out;
    }
    subdivide_near(a, b, x, sample, cfg, 0, out);
    return out;
}

}  // namespace igabem
