// SPDX-License-Identifier: Apache-2.0
#ifndef ACF_QUADRATURE_HPP
#define ACF_QUADRATURE_HPP

#include <vector>

#include "acf/types.hpp"

namespace acf {

// Reference-element quadrature rule.  Triangle rules live on the unit
// reference triangle (0,0)-(1,0)-(0,1), quad rules on [-1,1]^2.  Weights
// sum to the reference area.
struct QuadratureRule {
  std::vector<Vec2> points;
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
  double weight_sum() const;
};

// Degree-2 three-point rule on the reference triangle.
QuadratureRule tri_rule_3pt();

// Degree-5 seven-point rule on the reference triangle (oracle-grade).
QuadratureRule tri_rule_7pt();

// 2x2 tensor Gauss on [-1,1]^2 (exact for bi-cubic polynomials).
QuadratureRule quad_rule_2x2();

// 3x3 tensor Gauss on [-1,1]^2 (used for error integration in tests).
QuadratureRule quad_rule_3x3();

} // namespace acf

#endif
