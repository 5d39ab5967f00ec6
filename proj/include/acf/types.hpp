// SPDX-License-Identifier: Apache-2.0
#ifndef ACF_TYPES_HPP
#define ACF_TYPES_HPP

#include <cmath>

namespace acf {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
  double norm2() const { return x * x + y * y; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }
inline double cross(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Symmetric 2x2 matrix.
struct Mat2 {
  double a11 = 0.0;
  double a12 = 0.0;
  double a22 = 0.0;

  static Mat2 identity() { return {1.0, 0.0, 1.0}; }

  Vec2 apply(const Vec2& v) const { return {a11 * v.x + a12 * v.y, a12 * v.x + a22 * v.y}; }
  double quad_form(const Vec2& v) const {
    return a11 * v.x * v.x + 2.0 * a12 * v.x * v.y + a22 * v.y * v.y;
  }
  Mat2 scaled(double s) const { return {s * a11, s * a12, s * a22}; }

  // Eigenvalues of a symmetric 2x2 matrix, smallest first.
  void eigenvalues(double& lo, double& hi) const {
    const double tr = a11 + a22;
    const double disc = std::sqrt(0.25 * (a11 - a22) * (a11 - a22) + a12 * a12);
    lo = 0.5 * tr - disc;
    hi = 0.5 * tr + disc;
  }
};

} // namespace acf

#endif
