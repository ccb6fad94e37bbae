#pragma once

#include "igabem/geometry.hpp"

namespace igabem {

/// Plane-strain material. Lame constants are derived from E and nu.
struct Material {
    double youngs_modulus;
    double poisson_ratio;
    double lame_lambda;
    double lame_mu;

    Material(double E, double nu);
};

/// Kelvin fundamental solution for displacements (plane strain):
///   U_ij = [ (3-4nu) ln(1/r) d_ij + r,i r,j ] / (8 pi mu (1-nu)).
/// Symmetric, translation invariant, weakly singular.
Mat2 kelvin_U(const Material& mat, const Vec2& x, const Vec2& y);

/// Conormal derivative of kelvin_U at y with unit outward normal n_y:
///   T_ij = -[ dr/dn ((1-2nu) d_ij + 2 r,i r,j)
///             + (1-2nu)(r,i n_j - r,j n_i) ] / (4 pi (1-nu) r).
/// Strongly singular (1/r), linear in the normal.
Mat2 kelvin_T(const Material& mat, const Vec2& x, const Vec2& y, const Vec2& n_y);

/// Integral-free term on smooth boundary parts: (1/2) I.
Mat2 free_term_smooth();

}  // namespace igabem
