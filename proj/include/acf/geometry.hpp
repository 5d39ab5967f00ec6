// SPDX-License-Identifier: Apache-2.0
//
// Crypt geometry: the 3D crypt surface, its projection onto the unit-area
// reference hexagon, the region decomposition, the piecewise coefficient
// field and the hexagonal-lattice wrap used for the periodic extension.
#ifndef ACF_GEOMETRY_HPP
#define ACF_GEOMETRY_HPP

#include <cstdint>
#include <utility>

#include "acf/types.hpp"

namespace acf {

// Dimensional constants of a single crypt.  The reference hexagon is
// flat-top with two vertices on the x-axis at (+-a, 0); the lattice
// translations (3a/2, sqrt(3)a/2) and (0, sqrt(3)a) tile the plane with it.
struct CryptGeometry {
  double a = 0.0; // hexagon edge
  double r = 0.0; // projected crypt-bottom radius
  double R = 0.0; // crypt orifice radius
  double L = 0.0; // crypt height

  // a chosen so the hexagon has unit area, r = a/4, R = a/2, L = 14a.
  static CryptGeometry paper_defaults();
  static double unit_area_edge(); // sqrt(2)/3^(3/4)

  // Throws ConfigError if 0 < r < R < a or the unit-area constraint fails.
  void validate() const;

  double hexagon_area() const { return 1.5 * std::sqrt(3.0) * a * a; }
  double inradius() const { return 0.5 * std::sqrt(3.0) * a; }
  Vec2 lattice_t1() const { return {1.5 * a, 0.5 * std::sqrt(3.0) * a}; }
  Vec2 lattice_t2() const { return {0.0, std::sqrt(3.0) * a}; }
};

enum class RegionTag {
  P1, // inter-cryptal collar (outside the orifice circle)
  P2, // lateral annulus r <= |X| <= R
  P3  // shrunken crypt-bottom disc |X| < r
};

// Closed flat-top hexagon membership with an absolute slack proportional
// to the edge length (slack covers floating error from lattice wrapping).
bool inside_hexagon(const Vec2& X, double a, double slack = 1e-9);

// Projection of the crypt surface onto the reference hexagon.  Throws
// DomainError when p does not lie on the crypt surface (collar, lateral
// wall or bottom disc) within `tol`.
Vec2 project_to_plane(const Vec3& p, const CryptGeometry& g, double tol = 1e-9);

// Region of a point of the closed hexagon; both bounding circles belong
// to P2 so coefficient evaluation is deterministic.  Throws DomainError
// outside the hexagon.
RegionTag region_of(const Vec2& X, const CryptGeometry& g);

// Height x3 on the crypt surface above a projected point: L on the
// collar, 0 on the bottom disc, linear in |X| across the annulus.
double crypt_height_at(const Vec2& X, const CryptGeometry& g);

// Lower bound (r/R)^2 of the quadratic form of the coefficient matrix.
double ellipticity_bound(const CryptGeometry& g);

// Lattice cell index (coordinates in the basis t1, t2).
struct CellIndex {
  std::int64_t i = 0;
  std::int64_t j = 0;
  bool operator==(const CellIndex&) const = default;
};

struct WrapResult {
  Vec2 Y;        // representative in the fundamental hexagon
  CellIndex idx; // X/eps = Y + idx.i*t1 + idx.j*t2
};

// Reduce X/eps modulo the hexagonal lattice into the fundamental hexagon.
// O(1) via axial coordinates with cube rounding.
WrapResult wrap_to_cell(const Vec2& X, double eps, const CryptGeometry& g);

// Reaction and diffusion parameters entering the coefficient field.
struct ReactionParams {
  double tau_gamma = 0.01; // curvature of the normal-cell birth rate
  double tau_beta1 = 0.01; // curvature of the abnormal-cell birth rate
  double beta2 = 0.1;      // abnormal-cell floor rate (active everywhere)
  double D = 0.1;          // common diffusion coefficient

  static ReactionParams paper_defaults() { return {}; }
};

// Piecewise coefficient evaluators on the reference hexagon.  `identity_A`
// replaces the projected matrix by the identity (test override).  E is
// carried for interface completeness but fixed to zero: both cell
// populations share one diffusion constant.
class CoefficientField {
public:
  CoefficientField(const CryptGeometry& g, const ReactionParams& rp,
                   bool identity_A = false)
      : geom_(g), react_(rp), identity_A_(identity_A) {}

  const CryptGeometry& geometry() const { return geom_; }
  const ReactionParams& reaction() const { return react_; }
  bool has_identity_A() const { return identity_A_; }

  // Symmetric matrix A(X): identity on the collar, (r/R)^2 I on the
  // bottom disc, (|X|^2/R^2) I + ((R-r)/L)^2 XX^T/|X|^2 on the annulus.
  Mat2 A(const Vec2& X) const;

  // Row divergence b_i = sum_j dA_ij/dX_j, evaluated analytically per
  // region (zero outside the annulus).  A is symmetric, so this equals
  // the column divergence as well.
  Vec2 divA(const Vec2& X) const;

  // Birth rates composed with the crypt height; gamma vanishes in the
  // upper third of the crypt, beta keeps the floor rate there.
  double gamma(const Vec2& X) const;
  double beta(const Vec2& X) const;

  double D() const { return react_.D; }
  double E() const { return 0.0; }

  // Periodic eps-scaled evaluations (coefficients of the heterogeneous
  // model).  divA gains the 1/eps chain-rule factor.
  Mat2 A_eps(const Vec2& X, double eps) const;
  Vec2 divA_eps(const Vec2& X, double eps) const;
  double gamma_eps(const Vec2& X, double eps) const;
  double beta_eps(const Vec2& X, double eps) const;

private:
  CryptGeometry geom_;
  ReactionParams react_;
  bool identity_A_ = false;
};

} // namespace acf

#endif
