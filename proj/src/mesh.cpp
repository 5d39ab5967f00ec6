// SPDX-License-Identifier: Apache-2.0
#include "acf/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "acf/errors.hpp"

namespace acf {

double TriMesh::tri_area(int t) const {
  const auto& tr = tris[t];
  const Vec2 u = nodes[tr[1]] - nodes[tr[0]];
  const Vec2 w = nodes[tr[2]] - nodes[tr[0]];
  return 0.5 * cross(u, w);
}

double TriMesh::total_area() const {
  double s = 0.0;
  for (int t = 0; t < static_cast<int>(tris.size()); ++t) s += tri_area(t);
  return s;
}

TriMesh triangulate_hexagon(int n_ref, double a) {
  if (n_ref < 1) throw ConfigError("triangulate_hexagon: n_ref must be >= 1");
  if (!(a > 0.0)) throw ConfigError("triangulate_hexagon: edge length must be positive");

  const int n = n_ref;
  const double hh = 0.5 * std::sqrt(3.0) * a;
  const Vec2 corner[6] = {{a, 0.0},  {0.5 * a, hh},   {-0.5 * a, hh},
                          {-a, 0.0}, {-0.5 * a, -hh}, {0.5 * a, -hh}};

  TriMesh mesh;
  mesh.n_ref = n;
  mesh.edge = a;
  mesh.nodes.push_back({0.0, 0.0}); // center

  // Shared node ids: rays from the center to each corner, then the outer
  // edges, then sector interiors.  Ray k at parameter s/n; outer edge of
  // sector k at parameter j/n from corner k towards corner k+1.
  std::vector<std::array<int, 65>> ray_id(6); // s = 1..n, n <= 64 typical
  const bool small = n <= 64;
  std::vector<std::vector<int>> ray_id_big(small ? 0 : 6, std::vector<int>(n + 1, -1));
  auto ray = [&](int m, int s) -> int& {
    return small ? ray_id[m][s] : ray_id_big[m][s];
  };
  for (int m = 0; m < 6; ++m)
    for (int s = 1; s <= n; ++s) {
      const double f = static_cast<double>(s) / n;
      mesh.nodes.push_back(corner[m] * f);
      ray(m, s) = static_cast<int>(mesh.nodes.size()) - 1;
    }

  std::vector<std::vector<int>> edge_id(6, std::vector<int>(std::max(0, n - 1), -1));
  for (int k = 0; k < 6; ++k) {
    const Vec2 d = corner[(k + 1) % 6] - corner[k];
    for (int j = 1; j < n; ++j) {
      mesh.nodes.push_back(corner[k] + d * (static_cast<double>(j) / n));
      edge_id[k][j - 1] = static_cast<int>(mesh.nodes.size()) - 1;
    }
  }

  std::vector<std::vector<int>> interior(6);
  for (int k = 0; k < 6; ++k) {
    const Vec2 u = corner[k] * (1.0 / n);
    const Vec2 w = corner[(k + 1) % 6] * (1.0 / n);
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; i + j <= n - 1; ++j) {
        mesh.nodes.push_back(u * static_cast<double>(i) + w * static_cast<double>(j));
        interior[k].push_back(static_cast<int>(mesh.nodes.size()) - 1);
      }
  }

  auto node_at = [&](int k, int i, int j) -> int {
    if (i == 0 && j == 0) return 0;
    if (j == 0) return ray(k, i);
    if (i == 0) return ray((k + 1) % 6, j);
    if (i + j == n) return edge_id[k][j - 1];
    // row-major over the strict interior (i outer, j inner)
    int idx = 0;
    for (int ii = 1; ii < i; ++ii) idx += n - 1 - ii;
    idx += j - 1;
    return interior[k][idx];
  };

  for (int k = 0; k < 6; ++k)
    for (int i = 0; i <= n - 1; ++i)
      for (int j = 0; i + j <= n - 1; ++j) {
        mesh.tris.push_back({node_at(k, i, j), node_at(k, i + 1, j), node_at(k, i, j + 1)});
        if (i + j <= n - 2)
          mesh.tris.push_back(
              {node_at(k, i + 1, j), node_at(k, i + 1, j + 1), node_at(k, i, j + 1)});
      }

  for (int k = 0; k < 6; ++k) {
    mesh.boundary_nodes.push_back(ray(k, n));
    for (int j = 1; j < n; ++j) mesh.boundary_nodes.push_back(edge_id[k][j - 1]);
  }
  return mesh;
}

namespace {
int uf_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}
} // namespace

DofMap periodic_dof_map(const TriMesh& mesh, double pair_tol) {
  const double a = mesh.edge;
  const double s3 = std::sqrt(3.0);
  const Vec2 shifts[3] = {{1.5 * a, 0.5 * s3 * a}, {0.0, s3 * a}, {1.5 * a, -0.5 * s3 * a}};
  const double tol = pair_tol * a;

  std::vector<int> parent(mesh.nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int> match_count(mesh.nodes.size(), 0);

  for (int u : mesh.boundary_nodes) {
    for (const Vec2& t : shifts) {
      for (int sign = -1; sign <= 1; sign += 2) {
        const Vec2 target = mesh.nodes[u] + t * static_cast<double>(sign);
        for (int v : mesh.boundary_nodes) {
          if ((mesh.nodes[v] - target).norm() <= tol) {
            const int ru = uf_find(parent, u), rv = uf_find(parent, v);
            if (ru != rv) parent[ru] = rv;
            ++match_count[u];
          }
        }
      }
    }
  }

  for (int u : mesh.boundary_nodes) {
    if (match_count[u] == 0) {
      std::ostringstream err;
      err << "periodic_dof_map: boundary node " << u << " at (" << mesh.nodes[u].x
          << ", " << mesh.nodes[u].y << ") has no lattice partner within tolerance";
      throw MeshError(err.str());
    }
  }

  DofMap dm;
  dm.node_to_dof.assign(mesh.nodes.size(), -1);
  std::map<int, int> root_to_dof;
  for (int v = 0; v < static_cast<int>(mesh.nodes.size()); ++v) {
    const int root = uf_find(parent, v);
    auto it = root_to_dof.find(root);
    if (it == root_to_dof.end())
      it = root_to_dof.emplace(root, static_cast<int>(root_to_dof.size())).first;
    dm.node_to_dof[v] = it->second;
  }
  dm.n_dofs = static_cast<int>(root_to_dof.size());
  return dm;
}

std::vector<double> DofMap::expand(const std::vector<double>& dof_values) const {
  std::vector<double> out(node_to_dof.size());
  for (std::size_t v = 0; v < node_to_dof.size(); ++v) out[v] = dof_values[node_to_dof[v]];
  return out;
}

std::vector<double> DofMap::restrict_nodes(const std::vector<double>& node_values) const {
  std::vector<double> out(n_dofs, 0.0);
  std::vector<bool> seen(n_dofs, false);
  for (std::size_t v = 0; v < node_to_dof.size(); ++v) {
    if (!seen[node_to_dof[v]]) {
      out[node_to_dof[v]] = node_values[v];
      seen[node_to_dof[v]] = true;
    }
  }
  return out;
}

QuadMesh quad_mesh_rect(double h) {
  if (!(h > 0.0)) throw ConfigError("quad_mesh_rect: spacing h must be positive");
  const double n_real = 2.0 / h;
  const int n = static_cast<int>(std::lround(n_real));
  if (n < 1 || std::abs(n_real - n) > 1e-9 * n_real) {
    std::ostringstream err;
    err << "quad_mesh_rect: 2/h must be an integer, got h = " << h;
    throw ConfigError(err.str());
  }

  QuadMesh m;
  m.h = 2.0 / n;
  m.n = n;
  m.nodes.resize(static_cast<std::size_t>(n + 1) * (n + 1));
  m.is_boundary.resize(m.nodes.size());
  m.interior_index.assign(m.nodes.size(), -1);
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) {
      const int id = m.node_id(i, j);
      m.nodes[id] = {2.0 * i / n - 1.0, 2.0 * j / n - 1.0};
      m.is_boundary[id] = (i == 0 || i == n || j == 0 || j == n);
      if (!m.is_boundary[id]) m.interior_index[id] = m.n_interior++;
    }
  m.elems.reserve(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      m.elems.push_back({m.node_id(i, j), m.node_id(i + 1, j), m.node_id(i + 1, j + 1),
                         m.node_id(i, j + 1)});
  return m;
}

void write_mesh_text(const TriMesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("write_mesh_text: cannot open " + path);
  out << "# nodes " << mesh.nodes.size() << "\n";
  for (const auto& p : mesh.nodes) {
    char line[64];
    std::snprintf(line, sizeof line, "%.17g %.17g\n", p.x, p.y);
    out << line;
  }
  out << "# triangles " << mesh.tris.size() << "\n";
  for (const auto& t : mesh.tris) out << t[0] << " " << t[1] << " " << t[2] << "\n";
}

} // namespace acf
