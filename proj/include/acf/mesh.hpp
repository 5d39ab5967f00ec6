// SPDX-License-Identifier: Apache-2.0
//
// Meshes: structured triangulation of the reference hexagon with periodic
// DOF identification, and the structured bilinear mesh of [-1,1]^2.
#ifndef ACF_MESH_HPP
#define ACF_MESH_HPP

#include <array>
#include <vector>

#include "acf/types.hpp"

namespace acf {

struct TriMesh {
  std::vector<Vec2> nodes;
  std::vector<std::array<int, 3>> tris; // positively oriented
  std::vector<int> boundary_nodes;      // hexagon boundary, unsorted unique
  int n_ref = 0;
  double edge = 0.0; // hexagon edge length

  double total_area() const;
  double tri_area(int t) const;
};

// Hexagon split into 6 sectors around the center, each uniformly refined
// n_ref times (6*n_ref^2 triangles).  Opposite boundary edges carry node
// sequences that match exactly under the lattice translations.
TriMesh triangulate_hexagon(int n_ref, double a);

// Node -> periodic DOF map.  Boundary nodes are identified with their
// partners on the opposite edge; the six corners collapse to two orbits.
struct DofMap {
  std::vector<int> node_to_dof;
  int n_dofs = 0;

  // Scatter DOF values to nodes / gather (representative) node values.
  std::vector<double> expand(const std::vector<double>& dof_values) const;
  std::vector<double> restrict_nodes(const std::vector<double>& node_values) const;
};

DofMap periodic_dof_map(const TriMesh& mesh, double pair_tol = 1e-9);

// Structured bilinear mesh of Omega = [-1,1]^2 with spacing h (2/h must be
// an integer).  Elements are listed row-major, nodes counter-clockwise.
struct QuadMesh {
  double h = 0.0;
  int n = 0; // elements per side
  std::vector<Vec2> nodes;
  std::vector<std::array<int, 4>> elems;
  std::vector<bool> is_boundary;
  std::vector<int> interior_index; // node -> interior DOF, -1 on boundary
  int n_interior = 0;

  int n_nodes() const { return static_cast<int>(nodes.size()); }
  int node_id(int i, int j) const { return j * (n + 1) + i; }
};

QuadMesh quad_mesh_rect(double h);

// Plain-text node/element dump (visualization aid).
void write_mesh_text(const TriMesh& mesh, const std::string& path);

} // namespace acf

#endif
