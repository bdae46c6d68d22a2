// Copyright (c) 2026 The cutbddc authors
// SPDX-License-Identifier: Apache-2.0

#include "core/mesh.hpp"

#include <algorithm>
#include <cmath>

namespace cutbddc {

double BackgroundMesh::cell_volume() const {
  return dim_ == 2 ? h_[0] * h_[1] : h_[0] * h_[1] * h_[2];
}

std::int64_t BackgroundMesh::n_cells_total() const {
  std::int64_t n = ncell_[0] * static_cast<std::int64_t>(ncell_[1]);
  if (dim_ == 3) n *= ncell_[2];
  return n;
}

std::int64_t BackgroundMesh::n_nodes_total() const {
  std::int64_t n = (ncell_[0] + 1) * static_cast<std::int64_t>(ncell_[1] + 1);
  if (dim_ == 3) n *= ncell_[2] + 1;
  return n;
}

std::int64_t BackgroundMesh::cell_id(int i, int j, int k) const {
  const std::int64_t nz = dim_ == 3 ? ncell_[2] : 1;
  return (static_cast<std::int64_t>(i) * ncell_[1] + j) * nz + (dim_ == 3 ? k : 0);
}

std::array<int, 3> BackgroundMesh::cell_coords(std::int64_t cell) const {
  const std::int64_t nz = dim_ == 3 ? ncell_[2] : 1;
  int k = static_cast<int>(cell % nz);
  std::int64_t rest = cell / nz;
  int j = static_cast<int>(rest % ncell_[1]);
  int i = static_cast<int>(rest / ncell_[1]);
  return {i, j, k};
}

std::int64_t BackgroundMesh::node_id(int i, int j, int k) const {
  const std::int64_t nz = dim_ == 3 ? ncell_[2] + 1 : 1;
  return (static_cast<std::int64_t>(i) * (ncell_[1] + 1) + j) * nz + (dim_ == 3 ? k : 0);
}

std::array<int, 3> BackgroundMesh::node_coords(std::int64_t node) const {
  const std::int64_t nz = dim_ == 3 ? ncell_[2] + 1 : 1;
  int k = static_cast<int>(node % nz);
  std::int64_t rest = node / nz;
  int j = static_cast<int>(rest % (ncell_[1] + 1));
  int i = static_cast<int>(rest / (ncell_[1] + 1));
  return {i, j, k};
}

Vec3 BackgroundMesh::node_position(std::int64_t node) const {
  auto [i, j, k] = node_coords(node);
  return origin_ + Vec3(i * h_[0], j * h_[1], dim_ == 3 ? k * h_[2] : 0.0);
}

Vec3 BackgroundMesh::cell_lo(std::int64_t cell) const {
  auto [i, j, k] = cell_coords(cell);
  return origin_ + Vec3(i * h_[0], j * h_[1], dim_ == 3 ? k * h_[2] : 0.0);
}

void BackgroundMesh::cell_nodes(std::int64_t cell, std::int64_t out[8]) const {
  auto [i, j, k] = cell_coords(cell);
  const int nl = nodes_per_cell();
  for (int l = 0; l < nl; ++l) {
    const int lx = l & 1, ly = (l >> 1) & 1, lz = (l >> 2) & 1;
    out[l] = node_id(i + lx, j + ly, k + lz);
  }
}

bool BackgroundMesh::edge_active(std::int64_t node_a, std::int64_t node_b) const {
  auto a = node_coords(node_a);
  auto b = node_coords(node_b);
  int axis = -1;
  for (int d = 0; d < 3; ++d) {
    if (a[d] != b[d]) {
      if (axis != -1 || std::abs(a[d] - b[d]) != 1) return false;
      axis = d;
    }
  }
  if (axis < 0) return false;
  const int i0 = std::min(a[0], b[0]), j0 = std::min(a[1], b[1]), k0 = std::min(a[2], b[2]);
  // cells sharing the lattice edge: vary the transverse axes by -1/0
  for (int da = -1; da <= 0; ++da) {
    for (int db = -1; db <= 0; ++db) {
      int ci = i0, cj = j0, ck = k0;
      if (axis == 0) {
        cj += da;
        ck += db;
      } else if (axis == 1) {
        ci += da;
        ck += db;
      } else {
        ci += da;
        cj += db;
      }
      if (dim_ == 2 && (axis == 2 || (axis == 0 ? db : axis == 1 ? db : false))) continue;
      if (dim_ == 2) ck = 0;
      if (ci < 0 || cj < 0 || ck < 0 || ci >= ncell_[0] || cj >= ncell_[1]) continue;
      if (dim_ == 3 && ck >= ncell_[2]) continue;
      if (cls_[static_cast<size_t>(cell_id(ci, cj, ck))] != CellClass::Exterior) return true;
    }
  }
  return false;
}

std::int64_t BackgroundMesh::count_class(CellClass c) const {
  return std::count(cls_.begin(), cls_.end(), c);
}

BackgroundMesh BackgroundMesh::classify(const MeshParams& params, const LevelSet& ls) {
  BackgroundMesh m;
  m.dim_ = params.dim;
  if (m.dim_ != 2 && m.dim_ != 3) fail(ErrorCode::InvalidArgument, "mesh: dim must be 2 or 3");
  m.ncell_ = params.cells;
  if (m.dim_ == 2) m.ncell_[2] = 1;
  for (int d = 0; d < m.dim_; ++d)
    if (m.ncell_[d] < 1) fail(ErrorCode::InvalidArgument, "mesh: needs at least one cell per axis");
  m.origin_ = params.box_lo + params.translation;
  for (int d = 0; d < m.dim_; ++d) m.h_[d] = (params.box_hi[d] - params.box_lo[d]) / m.ncell_[d];
  if (m.dim_ == 2) m.h_[2] = 0.0;
  double hmin = m.h_[0];
  for (int d = 1; d < m.dim_; ++d) hmin = std::min(hmin, m.h_[d]);
  if (!(hmin > 0)) fail(ErrorCode::InvalidArgument, "mesh: non-positive cell size");
  m.tol_geo_ = 1e-12 * hmin;

  const std::int64_t n_nodes = m.n_nodes_total();
  m.phi_.resize(static_cast<size_t>(n_nodes));
  parallel_for(n_nodes, [&](std::int64_t node) {
    double v = ls.phi(m.node_position(node));
    if (std::abs(v) <= m.tol_geo_) v = -m.tol_geo_;  // snap to the inside
    m.phi_[static_cast<size_t>(node)] = v;
  });

  const std::int64_t n_cells = m.n_cells_total();
  m.cls_.resize(static_cast<size_t>(n_cells));
  const int npc = m.nodes_per_cell();
  parallel_for(n_cells, [&](std::int64_t cell) {
    std::int64_t nodes[8];
    m.cell_nodes(cell, nodes);
    int neg = 0;
    for (int l = 0; l < npc; ++l)
      if (m.phi_[static_cast<size_t>(nodes[l])] < 0) ++neg;
    m.cls_[static_cast<size_t>(cell)] =
        neg == npc ? CellClass::Interior : (neg == 0 ? CellClass::Exterior : CellClass::Cut);
  });

  for (std::int64_t c = 0; c < n_cells; ++c)
    if (m.cls_[static_cast<size_t>(c)] != CellClass::Exterior) m.active_cells_.push_back(c);
  if (m.active_cells_.empty()) fail(ErrorCode::InvalidArgument, "mesh: empty active mesh");

  // DOFs over active nodes, in lexicographic node order.
  m.dof_of_node_.assign(static_cast<size_t>(n_nodes), -1);
  for (std::int64_t c : m.active_cells_) {
    std::int64_t nodes[8];
    m.cell_nodes(c, nodes);
    for (int l = 0; l < npc; ++l) m.dof_of_node_[static_cast<size_t>(nodes[l])] = 0;
  }
  for (std::int64_t node = 0; node < n_nodes; ++node) {
    if (m.dof_of_node_[static_cast<size_t>(node)] == 0) {
      m.dof_of_node_[static_cast<size_t>(node)] = m.n_dofs_++;
      m.node_of_dof_.push_back(node);
    }
  }
  return m;
}

}  // namespace cutbddc
