// Copyright (c) 2026 The cutbddc authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CUTBDDC_MESH_HPP
#define CUTBDDC_MESH_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "core/common.hpp"
#include "core/levelset.hpp"

namespace cutbddc {

enum class CellClass : std::uint8_t { Interior, Exterior, Cut };

struct MeshParams {
  int dim = 3;
  Vec3 box_lo = Vec3(-1, -1, -1);
  Vec3 box_hi = Vec3(1, 1, 1);
  std::array<int, 3> cells = {16, 16, 16};  // cells[2] ignored in 2D
  Vec3 translation = Vec3::Zero();          // rigid shift of the background mesh
};

// Cartesian background mesh with interior/exterior/cut cell classification
// and active-node DOF numbering. Level-set values at mesh nodes are snapped
// (|phi| <= tol_geo goes to the negative side) and cached so quadrature and
// classification always see the same linear cut model.
class BackgroundMesh {
 public:
  static BackgroundMesh classify(const MeshParams& params, const LevelSet& ls);

  int dim() const { return dim_; }
  const std::array<int, 3>& ncells() const { return ncell_; }
  const Vec3& origin() const { return origin_; }
  const Vec3& h() const { return h_; }
  double cell_volume() const;
  double tol_geo() const { return tol_geo_; }

  std::int64_t n_cells_total() const;
  std::int64_t n_nodes_total() const;
  int nodes_per_cell() const { return dim_ == 2 ? 4 : 8; }

  std::int64_t cell_id(int i, int j, int k) const;
  std::array<int, 3> cell_coords(std::int64_t cell) const;
  std::int64_t node_id(int i, int j, int k) const;
  std::array<int, 3> node_coords(std::int64_t node) const;
  Vec3 node_position(std::int64_t node) const;
  Vec3 cell_lo(std::int64_t cell) const;

  // Local node l uses bit l = lx + 2*ly + 4*lz; matches the Q1 basis order.
  void cell_nodes(std::int64_t cell, std::int64_t out[8]) const;

  CellClass cell_class(std::int64_t cell) const { return cls_[static_cast<size_t>(cell)]; }
  const std::vector<std::int64_t>& active_cells() const { return active_cells_; }

  double phi_node(std::int64_t node) const { return phi_[static_cast<size_t>(node)]; }

  int n_dofs() const { return n_dofs_; }
  int node_dof(std::int64_t node) const { return dof_of_node_[static_cast<size_t>(node)]; }
  std::int64_t dof_node(int dof) const { return node_of_dof_[static_cast<size_t>(dof)]; }

  // True when the lattice edge between two (adjacent) nodes belongs to at
  // least one active cell.
  bool edge_active(std::int64_t node_a, std::int64_t node_b) const;

  std::int64_t count_class(CellClass c) const;

 private:
  int dim_ = 3;
  std::array<int, 3> ncell_ = {0, 0, 0};
  Vec3 origin_ = Vec3::Zero();
  Vec3 h_ = Vec3::Zero();
  double tol_geo_ = 0.0;
  std::vector<CellClass> cls_;
  std::vector<double> phi_;  // snapped, per node
  std::vector<std::int64_t> active_cells_;
  std::vector<int> dof_of_node_;
  std::vector<std::int64_t> node_of_dof_;
  int n_dofs_ = 0;
};

}  // namespace cutbddc

#endif
