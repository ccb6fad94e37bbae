#include "igabem/patch.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace igabem {

namespace {

KnotVector elevate_times(KnotVector kv, int times) {
    for (int i = 0; i < times; ++i) kv = kv.elevated();
    return kv;
}

// Interior breakpoints where the geometry is only C0 and the tangent
// direction actually jumps.
std::vector<double> detect_corners(const NurbsCurve& geometry) {
    const KnotVector& kv = geometry.knot_vector();
    const int p = kv.order();
    std::vector<double> corners;
    const std::vector<double> breaks = kv.breakpoints();
    for (std::size_t i = 1; i + 1 < breaks.size(); ++i) {
        if (kv.multiplicity(breaks[i]) < p) continue;
        const double h = 1e-9 * (kv.back() - kv.front());
        const Vec2 tl = geometry.eval(breaks[i] - h).tangent.normalized();
        const Vec2 tr = geometry.eval(breaks[i] + h).tangent.normalized();
        if (std::abs(tl.cross(tr)) > 1e-8 || tl.dot(tr) < 0.0) corners.push_back(breaks[i]);
    }
    return corners;
}

KnotVector raise_multiplicity(KnotVector kv, double value, int target) {
    while (kv.multiplicity(value) < target) kv = kv.inserted(value);
    return kv;
}

KnotVector refined_kv(const KnotVector& kv, RefinementStrategy strategy) {
    switch (strategy) {
        case RefinementStrategy::uniform_midpoint_insertion: {
            KnotVector out = kv;
            for (const KnotVector::Span& s : kv.nonzero_spans()) out = out.inserted(0.5 * (s.a + s.b));
            return out;
        }
        case RefinementStrategy::order_elevation:
            return kv.elevated();
        case RefinementStrategy::bezier_multiplicity: {
            KnotVector out = kv;
            for (const KnotVector::Span& s : kv.nonzero_spans())
                out = raise_multiplicity(out, 0.5 * (s.a + s.b), kv.order());
            return out;
        }
    }
    throw std::domain_error("refine: unknown refinement strategy");
}

}  // namespace

SubparametricPatch::SubparametricPatch(NurbsCurve geometry, BcType bc, KnownData known,
                                       int field_order)
    : geometry_(std::move(geometry)),
      bc_(bc),
      known_(std::move(known)),
      unknown_kv_(geometry_.knot_vector()),
      known_kv_(geometry_.knot_vector()),
      iso_known_kv_(geometry_.knot_vector()) {
    const int pg = geometry_.order();
    if (field_order != 0 && field_order < pg)
        throw std::invalid_argument("patch: field order below the geometry order");
    const int elevations = field_order == 0 ? 0 : field_order - pg;
    corners_ = detect_corners(geometry_);

    // The initial displacement basis is the (possibly elevated) geometry
    // basis; the traction basis breaks C^-1 at interior corners.
    KnotVector phi = elevate_times(geometry_.knot_vector(), elevations);
    KnotVector psi = phi;
    for (double c : corners_) psi = raise_multiplicity(psi, c, psi.order() + 1);

    unknown_kv_ = bc_ == BcType::neumann ? phi : psi;
    known_kv_ = bc_ == BcType::neumann ? psi : phi;
    iso_known_kv_ = known_kv_;
}

void SubparametricPatch::refine(RefinementStrategy strategy) {
    unknown_kv_ = refined_kv(unknown_kv_, strategy);
    iso_known_kv_ = refined_kv(iso_known_kv_, strategy);
    if (known_.is_complex) known_kv_ = refined_kv(known_kv_, strategy);
    ++refinements_;
}

BoundaryPoint SubparametricPatch::boundary_point(double u) const {
    const CurvePoint c = geometry_.eval(u);
    return {c.point, c.tangent.rotated_cw().normalized(), -1, u};
}

Discretisation::Discretisation(std::vector<SubparametricPatch> patches, Material material)
    : patches_(std::move(patches)), material_(material) {
    if (patches_.empty()) throw std::invalid_argument("discretisation: needs at least one patch");
    // Closed counter-clockwise loop with matching corners.
    double scale = 0.0;
    for (const SubparametricPatch& p : patches_) {
        const KnotVector& kv = p.geometry().knot_vector();
        scale = std::max(scale, (p.geometry().point(kv.back()) - p.geometry().point(kv.front())).norm());
    }
    double area2 = 0.0;
    for (std::size_t l = 0; l < patches_.size(); ++l) {
        const SubparametricPatch& a = patches_[l];
        const SubparametricPatch& b = patches_[(l + 1) % patches_.size()];
        const Vec2 ea = a.geometry().point(a.geometry().knot_vector().back());
        const Vec2 sb = b.geometry().point(b.geometry().knot_vector().front());
        if ((ea - sb).norm() > 1e-10 * std::max(scale, 1.0))
            throw std::invalid_argument("discretisation: boundary is not closed between patches");
        const KnotVector& kv = a.geometry().knot_vector();
        for (int s = 0; s < 32; ++s) {
            const double u0 = kv.front() + (kv.back() - kv.front()) * s / 32.0;
            const double u1 = kv.front() + (kv.back() - kv.front()) * (s + 1) / 32.0;
            area2 += a.geometry().point(u0).cross(a.geometry().point(u1));
        }
    }
    if (area2 <= 0.0)
        throw std::invalid_argument("discretisation: patches must run counter-clockwise");
}

void Discretisation::refine_all(RefinementStrategy strategy) {
    for (SubparametricPatch& p : patches_) p.refine(strategy);
}

double Discretisation::total_arc_length() const {
    const GaussRule& rule = gauss_rule(32);
    double total = 0.0;
    for (const SubparametricPatch& p : patches_) {
        for (const KnotVector::Span& s : p.geometry().knot_vector().nonzero_spans()) {
            const double mid = 0.5 * (s.a + s.b), half = 0.5 * (s.b - s.a);
            for (std::size_t g = 0; g < rule.nodes.size(); ++g)
                total += rule.weights[g] * half * p.geometry().eval(mid + half * rule.nodes[g]).gram;
        }
    }
    return total;
}

FieldSpace FieldSpace::displacement(const Discretisation& disc) {
    FieldSpace out;
    out.kind_ = Kind::displacement;
    const int L = disc.patch_count();
    out.bases_.reserve(static_cast<std::size_t>(L));
    for (int l = 0; l < L; ++l) out.bases_.push_back(disc.patch(l).displacement_basis());
    for (int l = 0; l < L; ++l) out.elements_.push_back(out.bases_[l].nonzero_spans());
    out.local_to_global_.assign(static_cast<std::size_t>(L), {});

    // Interior functions of each patch get their own global index; the last
    // function of patch l and the first of patch l+1 share the corner DOF.
    std::vector<int> corner_dof(static_cast<std::size_t>(L), -1);  // join (l, l+1)
    int next = 0;
    for (int l = 0; l < L; ++l) {
        const int n = out.bases_[l].num_basis();
        auto& map = out.local_to_global_[l];
        map.assign(static_cast<std::size_t>(n), -1);
        for (int i = 1; i < n - 1; ++i) {
            map[i] = next;
            out.functions_.push_back({});
            Function& f = out.functions_.back();
            f.pieces = {{l, i}};
            const double u = out.bases_[l].greville(i);
            f.anchor_locations = {{l, u}};
            f.anchor_point = disc.patch(l).geometry().point(u);
            f.known = disc.patch(l).bc_type() == BcType::dirichlet;
            ++next;
        }
        corner_dof[l] = next;
        out.functions_.push_back({});
        ++next;
    }
    for (int l = 0; l < L; ++l) {
        const int r = (l + 1) % L;
        const int n = out.bases_[l].num_basis();
        out.local_to_global_[l][n - 1] = corner_dof[l];
        out.local_to_global_[r][0] = corner_dof[l];
        Function& f = out.functions_[static_cast<std::size_t>(corner_dof[l])];
        f.pieces = {{l, n - 1}, {r, 0}};
        f.anchor_locations = {{l, out.bases_[l].back()}, {r, out.bases_[r].front()}};
        f.anchor_point = disc.patch(l).geometry().point(out.bases_[l].back());
        f.known = disc.patch(l).bc_type() == BcType::dirichlet ||
                  disc.patch(r).bc_type() == BcType::dirichlet;
    }
    return out;
}

FieldSpace FieldSpace::traction(const Discretisation& disc) {
    FieldSpace out;
    out.kind_ = Kind::traction;
    const int L = disc.patch_count();
    for (int l = 0; l < L; ++l) out.bases_.push_back(disc.patch(l).traction_basis());
    for (int l = 0; l < L; ++l) out.elements_.push_back(out.bases_[l].nonzero_spans());
    out.local_to_global_.assign(static_cast<std::size_t>(L), {});
    int next = 0;
    for (int l = 0; l < L; ++l) {
        const int n = out.bases_[l].num_basis();
        const AnchorSet anchors = greville_anchors(out.bases_[l], /*ends_discontinuous=*/true);
        auto& map = out.local_to_global_[l];
        map.assign(static_cast<std::size_t>(n), -1);
        for (int i = 0; i < n; ++i) {
            map[i] = next;
            out.functions_.push_back({});
            Function& f = out.functions_.back();
            f.pieces = {{l, i}};
            const double u = anchors.anchors[static_cast<std::size_t>(i)].position();
            f.anchor_locations = {{l, u}};
            f.anchor_point = disc.patch(l).geometry().point(u);
            f.known = disc.patch(l).bc_type() == BcType::neumann;
            ++next;
        }
    }
    return out;
}

int FieldSpace::global_index(int patch, int local) const {
    return local_to_global_[static_cast<std::size_t>(patch)][static_cast<std::size_t>(local)];
}

int FieldSpace::unknown_count() const {
    int n = 0;
    for (const Function& f : functions_)
        if (!f.known) ++n;
    return n;
}

namespace {

void check_distinct(const std::vector<CollocationPoint>& pts, double scale) {
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
            if ((pts[a].x - pts[b].x).norm() < 1e-12 * std::max(scale, 1.0))
                throw std::runtime_error("collocation: coincident physical collocation points");
}

double boundary_scale(const Discretisation& disc) {
    Box box;
    for (int l = 0; l < disc.patch_count(); ++l)
        for (const Vec2& c : disc.patch(l).geometry().control_points()) box.extend(c);
    return box.diameter();
}

}  // namespace

CollocationSet collocation_points(const Discretisation& disc, const FieldSpace& disp,
                                  const FieldSpace& trac) {
    CollocationSet set;
    for (int j = 0; j < trac.count(); ++j) {
        const FieldSpace::Function& f = trac.function(j);
        if (f.known) continue;
        set.points.push_back({f.anchor_point, f.anchor_locations, FieldSpace::Kind::traction, j});
    }
    set.dirichlet_rows = static_cast<int>(set.points.size());
    for (int j = 0; j < disp.count(); ++j) {
        const FieldSpace::Function& f = disp.function(j);
        if (f.known) continue;
        set.points.push_back({f.anchor_point, f.anchor_locations, FieldSpace::Kind::displacement, j});
    }
    check_distinct(set.points, boundary_scale(disc));
    return set;
}

CollocationSet density_collocation(const Discretisation& disc, const FieldSpace& disp) {
    CollocationSet set;
    for (int j = 0; j < disp.count(); ++j) {
        const FieldSpace::Function& f = disp.function(j);
        set.points.push_back({f.anchor_point, f.anchor_locations, FieldSpace::Kind::displacement, j});
    }
    set.dirichlet_rows = 0;
    check_distinct(set.points, boundary_scale(disc));
    return set;
}

FieldCoefficients project_known_data(const SubparametricPatch& patch, int patch_index,
                                     const std::function<Vec2(const BoundaryPoint&)>& g) {
    const KnotVector& kv = patch.known_basis();
    const bool discontinuous = patch.bc_type() == BcType::neumann;  // traction-type data
    const AnchorSet anchors = greville_anchors(kv, discontinuous);
    const int n = kv.num_basis();
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd rhs(n, 2);
    for (int a = 0; a < n; ++a) {
        const double u = anchors.anchors[static_cast<std::size_t>(a)].position();
        const BasisValues b = eval_bspline_values(kv, u);
        for (int k = 0; k <= kv.order(); ++k) A(a, b.first + k) = b.values[k];
        BoundaryPoint bp = patch.boundary_point(u);
        bp.patch = patch_index;
        const Vec2 v = g(bp);
        rhs(a, 0) = v.x;
        rhs(a, 1) = v.y;
    }
    const Eigen::MatrixXd sol = A.partialPivLu().solve(rhs);
    const double resid = (A * sol - rhs).cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, rhs.cwiseAbs().maxCoeff());
    if (!(resid < 1e-12 * scale))
        throw std::runtime_error("project_known_data: singular interpolation system");
    FieldCoefficients out;
    out.values.resize(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        out.values[static_cast<std::size_t>(i)] = sol(i, 0);
        out.values[static_cast<std::size_t>(n + i)] = sol(i, 1);
    }
    return out;
}

KnownCoefficients project_all_known_data(const Discretisation& disc, const FieldSpace& disp,
                                         const FieldSpace& trac) {
    KnownCoefficients out;
    out.disp.assign(static_cast<std::size_t>(disp.count()), Vec2{});
    out.trac.assign(static_cast<std::size_t>(trac.count()), Vec2{});
    std::vector<bool> disp_has(static_cast<std::size_t>(disp.count()), false);
    std::vector<bool> trac_has(static_cast<std::size_t>(trac.count()), false);

    for (int l = 0; l < disc.patch_count(); ++l) {
        const SubparametricPatch& p = disc.patch(l);
        if (p.known_data().is_zero()) continue;
        const FieldCoefficients c = project_known_data(p, l, p.known_data().fn);
        const FieldSpace& space = p.bc_type() == BcType::dirichlet ? disp : trac;
        const int n = c.count();
        for (int i = 0; i < n; ++i) {
            const int j = space.global_index(l, i);
            const Vec2 v{c.component(0, i), c.component(1, i)};
            auto& store = p.bc_type() == BcType::dirichlet ? out.disp : out.trac;
            auto& has = p.bc_type() == BcType::dirichlet ? disp_has : trac_has;
            if (has[static_cast<std::size_t>(j)]) {
                if ((store[static_cast<std::size_t>(j)] - v).norm() >
                    1e-8 * std::max(1.0, v.norm()))
                    throw std::runtime_error(
                        "project_known_data: inconsistent corner data between adjacent patches");
            } else {
                store[static_cast<std::size_t>(j)] = v;
                has[static_cast<std::size_t>(j)] = true;
            }
        }
    }
    for (int j = 0; j < disp.count(); ++j)
        if (disp_has[static_cast<std::size_t>(j)]) out.disp_data_cols.push_back(j);
    for (int j = 0; j < trac.count(); ++j)
        if (trac_has[static_cast<std::size_t>(j)]) out.trac_data_cols.push_back(j);
    return out;
}

}  // namespace igabem
