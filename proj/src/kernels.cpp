#include "igabem/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace igabem {

Material::Material(double E, double nu) : youngs_modulus(E), poisson_ratio(nu) {
    if (!(E > 0.0)) throw std::invalid_argument("material: Young's modulus must be positive");
    if (!(nu > -1.0 && nu < 0.5)) throw std::invalid_argument("material: Poisson ratio outside (-1, 0.5)");
    lame_lambda = E * nu / ((1.0 - 2.0 * nu) * (1.0 + nu));
    lame_mu = E / (2.0 * (1.0 + nu));
}

Mat2 kelvin_U(const Material& mat, const Vec2& x, const Vec2& y) {
    const Vec2 d = y - x;
    const double r = d.norm();
    if (r == 0.0) throw std::domain_error("kelvin_U: singular at x == y");
    const double nu = mat.poisson_ratio;
    const double c = 1.0 / (8.0 * std::numbers::pi * mat.lame_mu * (1.0 - nu));
    const double lg = (3.0 - 4.0 * nu) * std::log(1.0 / r);
    const double rx = d.x / r, ry = d.y / r;
    return Mat2{c * (lg + rx * rx), c * rx * ry,
                c * rx * ry,        c * (lg + ry * ry)};
}

Mat2 kelvin_T(const Material& mat, const Vec2& x, const Vec2& y, const Vec2& n_y) {
    const Vec2 d = y - x;
    const double r = d.norm();
    if (r == 0.0) throw std::domain_error("kelvin_T: singular at x == y");
    if (std::abs(n_y.norm() - 1.0) > 1e-10)
        throw std::domain_error("kelvin_T: normal must have unit length");
    const double nu = mat.poisson_ratio;
    const double k = 1.0 - 2.0 * nu;
    const double c = -1.0 / (4.0 * std::numbers::pi * (1.0 - nu) * r);
    const double rx = d.x / r, ry = d.y / r;
    const double drdn = rx * n_y.x + ry * n_y.y;
    Mat2 t;
    const double rr[2] = {rx, ry};
    const double nn[2] = {n_y.x, n_y.y};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const double dij = (i == j) ? 1.0 : 0.0;
            t(i, j) = c * (drdn * (k * dij + 2.0 * rr[i] * rr[j]) +
                           k * (rr[i] * nn[j] - rr[j] * nn[i]));
        }
    return t;
}

Mat2 free_term_smooth() { return Mat2{0.5, 0.0, 0.0, 0.5}; }

}  // namespace igabem
