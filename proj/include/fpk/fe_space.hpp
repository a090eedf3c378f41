#pragma once

#include <cstdint>
#include <vector>

#include "fpk/grid.hpp"

namespace fpk {

enum class SpaceKind {
  /// Y-periodic vector fields; opposite-face nodes share degrees of freedom.
  /// The zero-mean constraint is handled at solve time by one scalar Lagrange
  /// multiplier per component.
  periodic_zero_mean,
  /// Vector fields whose components tangential to each boundary face vanish
  /// there. At edges and corners a component is constrained as soon as it is
  /// tangential to any face containing the node.
  tangential_trace,
};

/// Conforming multilinear (tensor-degree-1) vector element space on a
/// structured mesh.
struct FeSpace {
  Mesh mesh;
  SpaceKind kind = SpaceKind::periodic_zero_mean;
  int n_free = 0;
  /// (node_flat * dim + component) -> free dof index, or -1 when the
  /// component is constrained to zero. Periodic spaces map slaved wrap nodes
  /// to their master's dof, so every entry is valid there.
  std::vector<std::int32_t> dof_map;

  int dof(std::int64_t node_flat, int component) const {
    return dof_map[static_cast<std::size_t>(node_flat) * static_cast<std::size_t>(mesh.dim) +
                   static_cast<std::size_t>(component)];
  }
  /// Number of solve-time Lagrange multiplier rows (dim for periodic, else 0).
  int multiplier_count() const { return kind == SpaceKind::periodic_zero_mean ? mesh.dim : 0; }
  std::int64_t system_dim() const { return n_free + multiplier_count(); }
  /// Integral of one periodic nodal basis function: the entry of each
  /// mean-constraint vector.
  double mean_entry() const;
};

FeSpace build_space(const Mesh& mesh, SpaceKind kind);

}  // namespace fpk
