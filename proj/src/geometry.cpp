// SPDX-License-Identifier: Apache-2.0
#include "acf/geometry.hpp"

#include <cmath>
#include <sstream>

#include "acf/errors.hpp"

namespace acf {

namespace {
constexpr double kSqrt3 = 1.7320508075688772;
}

double CryptGeometry::unit_area_edge() { return std::sqrt(2.0) / std::pow(3.0, 0.75); }

CryptGeometry CryptGeometry::paper_defaults() {
  CryptGeometry g;
  g.a = unit_area_edge();
  g.r = g.a / 4.0;
  g.R = g.a / 2.0;
  g.L = 14.0 * g.a;
  return g;
}

void CryptGeometry::validate() const {
  std::ostringstream err;
  if (!(a > 0.0)) {
    err << "geometry: hexagon edge a must be positive, got " << a;
    throw ConfigError(err.str());
  }
  if (std::abs(hexagon_area() - 1.0) > 1e-12) {
    err << "geometry: hexagon area must be 1 (a = sqrt(2)/3^(3/4)), got area "
        << hexagon_area();
    throw ConfigError(err.str());
  }
  if (!(0.0 < r && r < R && R < a)) {
    err << "geometry: radii must satisfy 0 < r < R < a, got r = " << r
        << ", R = " << R << ", a = " << a;
    throw ConfigError(err.str());
  }
  if (!(L > 0.0)) {
    err << "geometry: crypt height L must be positive, got " << L;
    throw ConfigError(err.str());
  }
}

bool inside_hexagon(const Vec2& X, double a, double slack) {
  // Flat-top hexagon with vertices (+-a, 0), (+-a/2, +-sqrt(3)a/2):
  // |y| <= sqrt(3)a/2, |sqrt(3)x +- y| <= sqrt(3)a.
  const double tol = slack * a;
  if (std::abs(X.y) > 0.5 * kSqrt3 * a + tol) return false;
  if (std::abs(kSqrt3 * X.x + X.y) > kSqrt3 * a + kSqrt3 * tol) return false;
  if (std::abs(kSqrt3 * X.x - X.y) > kSqrt3 * a + kSqrt3 * tol) return false;
  return true;
}

Vec2 project_to_plane(const Vec3& p, const CryptGeometry& g, double tol) {
  const double abs_tol = tol * g.a;
  const double rho = std::hypot(p.x, p.y);

  // Lateral wall: |x| = R, 0 <= x3 <= L.  Checked first so the seams with
  // the collar (x3 = L) and the bottom (x3 = 0) take the same value from
  // either branch.
  if (std::abs(rho - g.R) <= abs_tol && p.z >= -abs_tol && p.z <= g.L + abs_tol) {
    const double x3 = std::min(std::max(p.z, 0.0), g.L);
    const double f = (g.r + (x3 / g.L) * (g.R - g.r)) / g.R;
    return {f * p.x, f * p.y};
  }
  // Inter-cryptal collar: x3 = L, |x| > R, inside the hexagon.
  if (std::abs(p.z - g.L) <= abs_tol && rho >= g.R - abs_tol &&
      inside_hexagon({p.x, p.y}, g.a)) {
    return {p.x, p.y};
  }
  // Bottom disc: x3 = 0, |x| <= R.
  if (std::abs(p.z) <= abs_tol && rho <= g.R + abs_tol) {
    const double f = g.r / g.R;
    return {f * p.x, f * p.y};
  }

  std::ostringstream err;
  err << "project_to_plane: point (" << p.x << ", " << p.y << ", " << p.z
      << ") does not lie on the crypt surface";
  throw DomainError(err.str());
}

RegionTag region_of(const Vec2& X, const CryptGeometry& g) {
  if (!inside_hexagon(X, g.a)) {
    std::ostringstream err;
    err << "region_of: point (" << X.x << ", " << X.y
        << ") lies outside the reference hexagon (edge " << g.a << ")";
    throw DomainError(err.str());
  }
  const double rho = X.norm();
  if (rho < g.r) return RegionTag::P3;
  if (rho <= g.R) return RegionTag::P2;
  return RegionTag::P1;
}

double crypt_height_at(const Vec2& X, const CryptGeometry& g) {
  switch (region_of(X, g)) {
  case RegionTag::P1:
    return g.L;
  case RegionTag::P2:
    return g.L * (X.norm() - g.r) / (g.R - g.r);
  case RegionTag::P3:
    return 0.0;
  }
  return 0.0; // unreachable
}

double ellipticity_bound(const CryptGeometry& g) {
  const double q = g.r / g.R;
  return q * q;
}

WrapResult wrap_to_cell(const Vec2& X, double eps, const CryptGeometry& g) {
  if (!(eps > 0.0)) throw ConfigError("wrap_to_cell: eps must be positive");
  const double a = g.a;
  const Vec2 Z{X.x / eps, X.y / eps};

  // Axial coordinates for flat-top hexagons of circumradius a, then cube
  // rounding to the nearest lattice center.
  const double qf = (2.0 / 3.0) * Z.x / a;
  const double rf = (-Z.x / 3.0 + Z.y / kSqrt3) / a;

  double rx = std::round(qf);
  double ry = std::round(-qf - rf);
  double rz = std::round(rf);
  const double dx = std::abs(rx - qf);
  const double dy = std::abs(ry - (-qf - rf));
  const double dz = std::abs(rz - rf);
  if (dx > dy && dx > dz) {
    rx = -ry - rz;
  } else if (dy > dz) {
    ry = -rx - rz;
  } else {
    rz = -rx - ry;
  }

  WrapResult out;
  out.idx.i = static_cast<std::int64_t>(rx);
  out.idx.j = static_cast<std::int64_t>(rz);
  const Vec2 center = static_cast<double>(out.idx.i) * g.lattice_t1() +
                      static_cast<double>(out.idx.j) * g.lattice_t2();
  out.Y = Z - center;
  return out;
}

Mat2 CoefficientField::A(const Vec2& X) const {
  if (identity_A_) {
    region_of(X, geom_); // keep the domain check
    return Mat2::identity();
  }
  switch (region_of(X, geom_)) {
  case RegionTag::P1:
    return Mat2::identity();
  case RegionTag::P3: {
    const double s = ellipticity_bound(geom_);
    return {s, 0.0, s};
  }
  case RegionTag::P2: {
    // A = (rho^2/R^2) I + K (X x X)/rho^2 with K = ((R-r)/L)^2.
    const double rho2 = X.norm2();
    const double K = (geom_.R - geom_.r) / geom_.L;
    const double k2 = K * K;
    const double iso = rho2 / (geom_.R * geom_.R);
    return {iso + k2 * X.x * X.x / rho2, k2 * X.x * X.y / rho2,
            iso + k2 * X.y * X.y / rho2};
  }
  }
  return Mat2::identity(); // unreachable
}

Vec2 CoefficientField::divA(const Vec2& X) const {
  if (identity_A_) {
    region_of(X, geom_);
    return {0.0, 0.0};
  }
  if (region_of(X, geom_) != RegionTag::P2) return {0.0, 0.0};
  // sum_j dA_ij/dX_j = X_i (2/R^2 + K/rho^2), K = ((R-r)/L)^2.
  const double rho2 = X.norm2();
  const double K = (geom_.R - geom_.r) / geom_.L;
  const double w = 2.0 / (geom_.R * geom_.R) + K * K / rho2;
  return {w * X.x, w * X.y};
}

double CoefficientField::gamma(const Vec2& X) const {
  const double x3 = crypt_height_at(X, geom_);
  const double cut = 2.0 * geom_.L / 3.0;
  if (x3 > cut) return 0.0;
  const double d = x3 - cut;
  return react_.tau_gamma * d * d;
}

double CoefficientField::beta(const Vec2& X) const {
  const double x3 = crypt_height_at(X, geom_);
  const double cut = 2.0 * geom_.L / 3.0;
  if (x3 > cut) return react_.beta2;
  const double d = x3 - cut;
  return react_.tau_beta1 * d * d + react_.beta2;
}

Mat2 CoefficientField::A_eps(const Vec2& X, double eps) const {
  return A(wrap_to_cell(X, eps, geom_).Y);
}

Vec2 CoefficientField::divA_eps(const Vec2& X, double eps) const {
  const Vec2 b = divA(wrap_to_cell(X, eps, geom_).Y);
  return {b.x / eps, b.y / eps};
}

double CoefficientField::gamma_eps(const Vec2& X, double eps) const {
  return gamma(wrap_to_cell(X, eps, geom_).Y);
}

double CoefficientField::beta_eps(const Vec2& X, double eps) const {
  return beta(wrap_to_cell(X, eps, geom_).Y);
}

} // namespace acf
