#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace igabem {

/// 2D point / vector.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
    Vec2& operator*=(double s) { x *= s; y *= s; return *this; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
    double squared_norm() const { return x * x + y * y; }
    Vec2 normalized() const { const double n = norm(); return {x / n, y / n}; }
    /// Rotate by -90 degrees; for a counter-clockwise curve this turns the
    /// tangent into the outward normal of the enclosed region.
    Vec2 rotated_cw() const { return {y, -x}; }

    double operator[](int i) const { return i == 0 ? x : y; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

/// 2x2 matrix, row major. Used for kernel values and entry blocks.
struct Mat2 {
    double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;

    Mat2() = default;
    Mat2(double m11, double m12, double m21, double m22)
        : a11(m11), a12(m12), a21(m21), a22(m22) {}

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 zero() { return {}; }

    Mat2 operator+(const Mat2& o) const { return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22}; }
    Mat2 operator-(const Mat2& o) const { return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22}; }
    Mat2 operator*(double s) const { return {a11 * s, a12 * s, a21 * s, a22 * s}; }
    Mat2& operator+=(const Mat2& o) { a11 += o.a11; a12 += o.a12; a21 += o.a21; a22 += o.a22; return *this; }
    Mat2& operator-=(const Mat2& o) { a11 -= o.a11; a12 -= o.a12; a21 -= o.a21; a22 -= o.a22; return *this; }

    Vec2 operator*(const Vec2& v) const { return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y}; }

    Mat2 transposed() const { return {a11, a21, a12, a22}; }
    double frobenius_norm() const { return std::sqrt(a11 * a11 + a12 * a12 + a21 * a21 + a22 * a22); }
    double max_abs() const { return std::max({std::abs(a11), std::abs(a12), std::abs(a21), std::abs(a22)}); }

    double operator()(int i, int j) const {
        return i == 0 ? (j == 0 ? a11 : a12) : (j == 0 ? a21 : a22);
    }
    double& operator()(int i, int j) {
        return i == 0 ? (j == 0 ? a11 : a12) : (j == 0 ? a21 : a22);
    }
};

inline Mat2 operator*(double s, const Mat2& m) { return m * s; }

/// Axis-aligned bounding box in 2D.
struct Box {
    Vec2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    Vec2 hi{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};

    Box() = default;
    Box(const Vec2& lo_, const Vec2& hi_) : lo(lo_), hi(hi_) {}

    static Box point(const Vec2& p) { return {p, p}; }

    bool empty() const { return lo.x > hi.x; }

    void extend(const Vec2& p) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
    void extend(const Box& b) {
        if (b.empty()) return;
        extend(b.lo);
        extend(b.hi);
    }

    bool contains(const Vec2& p, double tol = 0.0) const {
        return p.x >= lo.x - tol && p.x <= hi.x + tol && p.y >= lo.y - tol && p.y <= hi.y + tol;
    }

    double diameter() const { return empty() ? 0.0 : (hi - lo).norm(); }
    double extent(int axis) const { return axis == 0 ? hi.x - lo.x : hi.y - lo.y; }
    Vec2 center() const { return (lo + hi) * 0.5; }
};

/// Distance between two axis-aligned boxes (0 if they touch or overlap).
inline double distance(const Box& a, const Box& b) {
    const double dx = std::max({0.0, a.lo.x - b.hi.x, b.lo.x - a.hi.x});
    const double dy = std::max({0.0, a.lo.y - b.hi.y, b.lo.y - a.hi.y});
    return std::hypot(dx, dy);
}

}  // namespace igabem
