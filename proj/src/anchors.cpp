#include "igabem/anchors.hpp"

#include <algorithm>
#include <stdexcept>

namespace igabem {

namespace {

enum class Side { left, none, right };  // side of the non-zero knot span

// A discontinuous function either ends at its anchor knot (support to the
// left) or starts there (support to the right).
Side discontinuity_side(const KnotVector& kv, int i, bool ends_discontinuous) {
    const int p = kv.order();
    const int n = kv.num_basis();
    if (i == 0) return ends_discontinuous ? Side::right : Side::none;
    if (i == n - 1) return ends_discontinuous ? Side::left : Side::none;
    // Interior C^-1 pair at a knot of multiplicity p+1: the p averaged knots
    // of the Greville abscissa all coincide with that knot.
    const double g = kv.greville(i);
    if (kv[i + 1] == kv[i + p] && kv.multiplicity(g) >= p + 1)
        return kv[i] == g ? Side::right : Side::left;
    return Side::none;
}

}  // namespace

AnchorSet greville_anchors(const KnotVector& kv, bool ends_discontinuous) {
    const int n = kv.num_basis();
    const int p = kv.order();
    const int L = (p - 1 < 2) ? 1 : 2;

    std::vector<Side> side(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) side[i] = discontinuity_side(kv, i, ends_discontinuous);

    // Extended sequence u_hat: all knots plus all Greville abscissae, sorted.
    // Ties are ordered so that a discontinuous abscissa sits closest to its
    // non-zero knot span: left-sided before the equal knots, right-sided
    // (and continuous) after them.
    struct Entry {
        double value;
        int rank;       // 0 = left-sided greville, 1 = knot, 2 = other greville
        int function;   // >= 0 for greville entries
    };
    std::vector<Entry> uhat;
    uhat.reserve(kv.knots().size() + static_cast<std::size_t>(n));
    for (double k : kv.knots()) uhat.push_back({k, 1, -1});
    for (int i = 0; i < n; ++i)
        uhat.push_back({kv.greville(i), side[i] == Side::left ? 0 : 2, i});
    std::stable_sort(uhat.begin(), uhat.end(), [](const Entry& a, const Entry& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.rank < b.rank;
    });

    AnchorSet out;
    out.anchors.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.anchors.push_back({i, kv.greville(i), 0.0});

    const int m = static_cast<int>(uhat.size());
    for (int pos = 0; pos < m; ++pos) {
        const Entry& e = uhat[pos];
        if (e.function < 0 || side[e.function] == Side::none) continue;
        // Window of L neighbours on each side, clamped at the ends of u_hat.
        double sum = 0.0;
        int terms = 0;
        for (int l = 1; l <= L; ++l) {
            if (pos - l >= 0) {
                sum += uhat[pos - l].value - e.value;
                ++terms;
            }
            if (pos + l < m) {
                sum += uhat[pos + l].value - e.value;
                ++terms;
            }
        }
        out.anchors[e.function].alpha = sum / (terms + 1);
    }

    for (std::size_t i = 0; i + 1 < out.anchors.size(); ++i)
        if (!(out.anchors[i].position() < out.anchors[i + 1].position()))
            throw std::runtime_error("anchors: offsets failed to separate coincident anchors");
    return out;
}

}  // namespace igabem
