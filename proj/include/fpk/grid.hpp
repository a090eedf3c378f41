#pragma once

#include <array>
#include <cstdint>

#include "fpk/types.hpp"

namespace fpk {

/// Structured tensor lattice on Y = (0,1)^n with N axis-aligned cube cells of
/// side h = 1/N per dimension. Flat indices are lexicographic in the
/// multi-index with the last coordinate fastest.
struct Mesh {
  int dim = 0;
  int cells_per_dim = 0;
  double h = 0.0;

  std::int64_t node_count() const;
  std::int64_t cell_count() const;
  int nodes_per_dim() const { return cells_per_dim + 1; }
  int corners_per_cell() const { return 1 << dim; }

  std::int64_t node_flat(const std::array<int, kMaxDim>& multi) const;
  std::array<int, kMaxDim> node_multi(std::int64_t flat) const;
  std::int64_t cell_flat(const std::array<int, kMaxDim>& multi) const;
  std::array<int, kMaxDim> cell_multi(std::int64_t flat) const;

  Vec node_coords(std::int64_t flat) const;
  /// Node multi-index of corner `corner` (bit d set = upper face in dim d) of
  /// the given cell.
  std::array<int, kMaxDim> cell_corner(const std::array<int, kMaxDim>& cell, int corner) const;
};

/// Validates dim in {2,3} and N >= 2.
Mesh build_mesh(int dim, int cells_per_dim);

/// Values and physical gradients of the 2^dim multilinear basis functions of
/// one cell, evaluated at a point of the reference cube [0,1]^dim. Corner
/// ordering matches Mesh::cell_corner.
struct ShapeEval {
  int count = 0;
  std::array<double, 8> value{};
  std::array<Vec, 8> grad{};
};

ShapeEval shape_eval(const Mesh& mesh, const Vec& local);

}  // namespace fpk
