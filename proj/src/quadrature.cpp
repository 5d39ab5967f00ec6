// SPDX-License-Identifier: Apache-2.0
#include "acf/quadrature.hpp"

#include <cmath>

namespace acf {

double QuadratureRule::weight_sum() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

QuadratureRule tri_rule_3pt() {
  QuadratureRule q;
  q.points = {{2.0 / 3.0, 1.0 / 6.0}, {1.0 / 6.0, 2.0 / 3.0}, {1.0 / 6.0, 1.0 / 6.0}};
  q.weights = {1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0};
  return q;
}

QuadratureRule tri_rule_7pt() {
  const double s15 = std::sqrt(15.0);
  const double a1 = (6.0 - s15) / 21.0, w1 = (155.0 - s15) / 1200.0 * 0.5;
  const double a2 = (6.0 + s15) / 21.0, w2 = (155.0 + s15) / 1200.0 * 0.5;
  QuadratureRule q;
  q.points = {{1.0 / 3.0, 1.0 / 3.0},
              {a1, a1},
              {1.0 - 2.0 * a1, a1},
              {a1, 1.0 - 2.0 * a1},
              {a2, a2},
              {1.0 - 2.0 * a2, a2},
              {a2, 1.0 - 2.0 * a2}};
  q.weights = {9.0 / 40.0 * 0.5, w1, w1, w1, w2, w2, w2};
  return q;
}

namespace {
QuadratureRule tensor_gauss(const std::vector<double>& nodes,
                            const std::vector<double>& w1d) {
  QuadratureRule q;
  for (std::size_t j = 0; j < nodes.size(); ++j)
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      q.points.push_back({nodes[i], nodes[j]});
      q.weights.push_back(w1d[i] * w1d[j]);
    }
  return q;
}
} // namespace

QuadratureRule quad_rule_2x2() {
  const double g = 1.0 / std::sqrt(3.0);
  return tensor_gauss({-g, g}, {1.0, 1.0});
}

QuadratureRule quad_rule_3x3() {
  const double g = std::sqrt(0.6);
  return tensor_gauss({-g, 0.0, g}, {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0});
}

} // namespace acf
