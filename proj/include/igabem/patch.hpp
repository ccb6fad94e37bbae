#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "igabem/anchors.hpp"
#include "igabem/kernels.hpp"
#include "igabem/nurbs.hpp"

namespace igabem {

enum class BcType { dirichlet, neumann };

enum class RefinementStrategy { uniform_midpoint_insertion, order_elevation, bezier_multiplicity };

struct BoundaryPoint {
    Vec2 x;
    Vec2 normal;  ///< unit outward normal of the enclosed region
    int patch = -1;
    double u = 0.0;
};

/// Prescribed boundary data on one patch. A null function marks homogeneous
/// (zero) data whose matrix columns are neither calculated nor stored.
/// `is_complex` marks data that the initial basis cannot represent; such a
/// known field is refined in lockstep with the unknown one.
struct KnownData {
    std::function<Vec2(const BoundaryPoint&)> fn;
    bool is_complex = false;

    bool is_zero() const { return !fn; }
    static KnownData zero() { return {}; }
    static KnownData constant(const Vec2& c) {
        return {[c](const BoundaryPoint&) { return c; }, false};
    }
};

/// One boundary patch with independent discretisations: the geometry keeps
/// its design-model basis, displacement and traction fields start from it
/// (traction with C^-1 breaks at corners) and only the unknown field is
/// refined.
class SubparametricPatch {
public:
    /// `field_order` elevates the Cauchy-data bases beyond the geometry
    /// order at construction (0 keeps the geometry order).
    SubparametricPatch(NurbsCurve geometry, BcType bc, KnownData known, int field_order = 0);

    const NurbsCurve& geometry() const { return geometry_; }
    BcType bc_type() const { return bc_; }
    const KnownData& known_data() const { return known_; }

    const KnotVector& displacement_basis() const { return bc_ == BcType::neumann ? unknown_kv_ : known_kv_; }
    const KnotVector& traction_basis() const { return bc_ == BcType::dirichlet ? unknown_kv_ : known_kv_; }
    const KnotVector& unknown_basis() const { return unknown_kv_; }
    const KnotVector& known_basis() const { return known_kv_; }
    /// Hypothetical isoparametric layout: the known basis refined in
    /// lockstep with the unknown one (for compression accounting).
    const KnotVector& iso_known_basis() const { return iso_known_kv_; }

    int refinement_count() const { return refinements_; }
    const std::vector<double>& corner_parameters() const { return corners_; }

    /// Refine the unknown field (and the known one if its data is complex).
    /// The geometry is never touched.
    void refine(RefinementStrategy strategy);

    BoundaryPoint boundary_point(double u) const;

private:
    NurbsCurve geometry_;
    BcType bc_;
    KnownData known_;
    KnotVector unknown_kv_;
    KnotVector known_kv_;
    KnotVector iso_known_kv_;
    std::vector<double> corners_;
    int refinements_ = 0;
};

/// Closed boundary made of patches, counter-clockwise, with shared corners.
class Discretisation {
public:
    Discretisation(std::vector<SubparametricPatch> patches, Material material);

    int patch_count() const { return static_cast<int>(patches_.size()); }
    const SubparametricPatch& patch(int i) const { return patches_[static_cast<std::size_t>(i)]; }
    SubparametricPatch& patch(int i) { return patches_[static_cast<std::size_t>(i)]; }
    const Material& material() const { return material_; }

    void refine_all(RefinementStrategy strategy);

    double total_arc_length() const;

private:
    std::vector<SubparametricPatch> patches_;
    Material material_;
};

/// A global scalar basis over the whole boundary: the displacement space
/// glues patch-end functions C0 at the joins, the traction space keeps all
/// patch functions independent (C^-1 at joins, anchors offset inward).
class FieldSpace {
public:
    enum class Kind { displacement, traction };

    struct Piece {
        int patch;
        int local;
    };
    struct Function {
        std::vector<Piece> pieces;
        std::vector<std::pair<int, double>> anchor_locations;  ///< (patch, param)
        Vec2 anchor_point;
        bool known;
    };

    static FieldSpace displacement(const Discretisation& disc);
    static FieldSpace traction(const Discretisation& disc);

    Kind kind() const { return kind_; }
    int count() const { return static_cast<int>(functions_.size()); }
    const Function& function(int j) const { return functions_[static_cast<std::size_t>(j)]; }
    int global_index(int patch, int local) const;
    const KnotVector& basis(int patch) const { return bases_[static_cast<std::size_t>(patch)]; }
    const std::vector<KnotVector::Span>& elements(int patch) const {
        return elements_[static_cast<std::size_t>(patch)];
    }
    int unknown_count() const;

private:
    Kind kind_;
    std::vector<KnotVector> bases_;
    std::vector<std::vector<KnotVector::Span>> elements_;
    std::vector<Function> functions_;
    std::vector<std::vector<int>> local_to_global_;
};

struct CollocationPoint {
    Vec2 x;
    /// Locations of the point on the boundary parametrisation; glued corner
    /// anchors carry one location per adjacent patch.
    std::vector<std::pair<int, double>> locations;
    FieldSpace::Kind field;
    int function;  ///< global index within its field space
};

struct CollocationSet {
    std::vector<CollocationPoint> points;
    int dirichlet_rows = 0;  ///< leading rows collocate on the Dirichlet part

    int size() const { return static_cast<int>(points.size()); }
};

/// Mixed collocation: anchors of the unknown field, one per unknown; the
/// displacement anchor at a Neumann/Dirichlet join is excluded (the
/// displacement is known there).
CollocationSet collocation_points(const Discretisation& disc, const FieldSpace& disp,
                                  const FieldSpace& trac);

/// All displacement anchors, for indirect (density) formulations.
CollocationSet density_collocation(const Discretisation& disc, const FieldSpace& disp);

/// Coefficients of one patch field, direction-major: all x-components, then
/// all y-components.
struct FieldCoefficients {
    std::vector<double> values;  ///< 2 * basis count
    int count() const { return static_cast<int>(values.size()) / 2; }
    double component(int dir, int i) const { return values[static_cast<std::size_t>(dir * count() + i)]; }
};

/// Interpolate g at the anchors of the patch's known field. The square
/// system is solved densely; anchor residuals beyond 1e-12 of the data
/// scale indicate a singular system and raise an error.
FieldCoefficients project_known_data(const SubparametricPatch& patch, int patch_index,
                                     const std::function<Vec2(const BoundaryPoint&)>& g);

/// Global known coefficients (zero-data patches contribute no columns).
struct KnownCoefficients {
    std::vector<Vec2> disp;            ///< per displacement function
    std::vector<Vec2> trac;            ///< per traction function
    std::vector<int> disp_data_cols;   ///< functions with stored columns
    std::vector<int> trac_data_cols;
};

KnownCoefficients project_all_known_data(const Discretisation& disc, const FieldSpace& disp,
                                         const FieldSpace& trac);

}  // namespace igabem
