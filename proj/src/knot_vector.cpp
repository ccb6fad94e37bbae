#include "igabem/knot_vector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace igabem {

KnotVector::KnotVector(std::vector<double> knots, int order)
    : knots_(std::move(knots)), order_(order) {
    if (order_ < 1) throw std::invalid_argument("knot vector: order must be >= 1");
    const int n = static_cast<int>(knots_.size());
    if (n < 2 * (order_ + 1)) throw std::invalid_argument("knot vector: too few knots for order");
    for (int i = 0; i + 1 < n; ++i) {
        if (knots_[i] > knots_[i + 1]) throw std::invalid_argument("knot vector: knots must be non-decreasing");
        if (!std::isfinite(knots_[i])) throw std::invalid_argument("knot vector: knots must be finite");
    }
    if (multiplicity(knots_.front()) != order_ + 1 || multiplicity(knots_.back()) != order_ + 1)
        throw std::invalid_argument("knot vector: not open (end knots must repeat order+1 times)");
    if (knots_.front() == knots_.back())
        throw std::invalid_argument("knot vector: needs at least one non-zero span");
}

int KnotVector::find_span(double u) const {
    if (u < front() || u > back()) throw std::domain_error("parameter outside knot range");
    // Last non-zero span for u == back(); half-open spans otherwise.
    if (u == back()) {
        int k = size() - order_ - 2;
        while (knots_[k] == knots_[k + 1]) --k;
        return k;
    }
    const auto it = std::upper_bound(knots_.begin(), knots_.end(), u);
    return static_cast<int>(it - knots_.begin()) - 1;
}

int KnotVector::multiplicity(double u) const {
    const auto range = std::equal_range(knots_.begin(), knots_.end(), u);
    return static_cast<int>(range.second - range.first);
}

std::vector<double> KnotVector::breakpoints() const {
    std::vector<double> out;
    for (double k : knots_)
        if (out.empty() || out.back() != k) out.push_back(k);
    return out;
}

std::vector<KnotVector::Span> KnotVector::nonzero_spans() const {
    std::vector<Span> out;
    for (int i = order_; i < size() - order_ - 1; ++i)
        if (knots_[i] < knots_[i + 1]) out.push_back({i, knots_[i], knots_[i + 1]});
    return out;
}

KnotVector KnotVector::inserted(double u) const {
    if (u <= front() || u >= back())
        throw std::domain_error("knot insertion: value must lie strictly inside the knot range");
    std::vector<double> k = knots_;
    k.insert(k.begin() + find_span(u) + 1, u);
    return KnotVector(std::move(k), order_);
}

KnotVector KnotVector::elevated() const {
    std::vector<double> k;
    k.reserve(knots_.size() + breakpoints().size());
    for (std::size_t i = 0; i < knots_.size(); ++i) {
        k.push_back(knots_[i]);
        if (i + 1 == knots_.size() || knots_[i] != knots_[i + 1]) k.push_back(knots_[i]);
    }
    std::sort(k.begin(), k.end());
    return KnotVector(std::move(k), order_ + 1);
}

double KnotVector::greville(int i) const {
    double s = 0.0;
    for (int l = 1; l <= order_; ++l) s += knots_[i + l];
    return s / order_;
}

bool KnotVector::contains(const KnotVector& sub) const {
    for (double b : sub.breakpoints())
        if (multiplicity(b) < sub.multiplicity(b)) return false;
    return true;
}

namespace {

// Triangular Cox-de Boor pass. When `last_quotients` is non-null it receives
// the final-row quotients N_{k,p-1}/(u_{k+p}-u_k), from which the first
// derivatives follow with one multiplication per function.
void basis_triangle(const KnotVector& kv, double u, int span, std::vector<double>& N,
                    std::vector<double>* last_quotients) {
    const int p = kv.order();
    N.assign(static_cast<std::size_t>(p) + 1, 0.0);
    N[0] = 1.0;
    std::vector<double> left(static_cast<std::size_t>(p) + 1), right(static_cast<std::size_t>(p) + 1);
    for (int j = 1; j <= p; ++j) {
        left[j] = u - kv[span + 1 - j];
        right[j] = kv[span + j] - u;
        double saved = 0.0;
        for (int r = 0; r < j; ++r) {
            const double temp = N[r] / (right[r + 1] + left[j - r]);
            if (j == p && last_quotients) (*last_quotients)[r] = temp;
            N[r] = saved + right[r + 1] * temp;
            saved = left[j - r] * temp;
        }
        N[j] = saved;
    }
}

}  // namespace

BasisValues eval_bspline(const KnotVector& kv, double u) {
    const int p = kv.order();
    BasisValues out;
    out.span = kv.find_span(u);
    out.first = out.span - p;
    std::vector<double> q(static_cast<std::size_t>(std::max(p, 1)), 0.0);
    basis_triangle(kv, u, out.span, out.values, &q);
    // N'_{k,p} = p * (Q_k - Q_{k+1}) with Q the saved last-row quotients and
    // zero outside the non-vanishing range of order p-1.
    out.derivs.assign(static_cast<std::size_t>(p) + 1, 0.0);
    for (int f = 0; f <= p; ++f) {
        const double q_left = (f > 0) ? q[f - 1] : 0.0;
        const double q_right = (f < p) ? q[f] : 0.0;
        out.derivs[f] = p * (q_left - q_right);
    }
    return out;
}

BasisValues eval_bspline_values(const KnotVector& kv, double u) {
    const int p = kv.order();
    BasisValues out;
    out.span = kv.find_span(u);
    out.first = out.span - p;
    basis_triangle(kv, u, out.span, out.values, nullptr);
    return out;
}

}  // namespace igabem
