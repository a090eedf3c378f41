#include "fpk/grid.hpp"

#include "fpk/errors.hpp"

namespace fpk {

namespace {

std::int64_t power(int base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::int64_t flat_index(const std::array<int, kMaxDim>& multi, int dim, int per_dim) {
  std::int64_t flat = 0;
  for (int d = 0; d < dim; ++d) flat = flat * per_dim + multi[static_cast<std::size_t>(d)];
  return flat;
}

std::array<int, kMaxDim> multi_index(std::int64_t flat, int dim, int per_dim) {
  std::array<int, kMaxDim> multi{};
  for (int d = dim - 1; d >= 0; --d) {
    multi[static_cast<std::size_t>(d)] = static_cast<int>(flat % per_dim);
    flat /= per_dim;
  }
  return multi;
}

}  // namespace

std::int64_t Mesh::node_count() const { return power(nodes_per_dim(), dim); }
std::int64_t Mesh::cell_count() const { return power(cells_per_dim, dim); }

std::int64_t Mesh::node_flat(const std::array<int, kMaxDim>& multi) const {
  return flat_index(multi, dim, nodes_per_dim());
}

std::array<int, kMaxDim> Mesh::node_multi(std::int64_t flat) const {
  return multi_index(flat, dim, nodes_per_dim());
}

std::int64_t Mesh::cell_flat(const std::array<int, kMaxDim>& multi) const {
  return flat_index(multi, dim, cells_per_dim);
}

std::array<int, kMaxDim> Mesh::cell_multi(std::int64_t flat) const {
  return multi_index(flat, dim, cells_per_dim);
}

Vec Mesh::node_coords(std::int64_t flat) const {
  const auto multi = node_multi(flat);
  Vec x = Vec::zero(dim);
  for (int d = 0; d < dim; ++d) x[d] = multi[static_cast<std::size_t>(d)] * h;
  return x;
}

std::array<int, kMaxDim> Mesh::cell_corner(const std::array<int, kMaxDim>& cell,
                                           int corner) const {
  std::array<int, kMaxDim> node = cell;
  for (int d = 0; d < dim; ++d)
    node[static_cast<std::size_t>(d)] += (corner >> (dim - 1 - d)) & 1;
  return node;
}

Mesh build_mesh(int dim, int cells_per_dim) {
  if (dim != 2 && dim != 3) throw Error("unsupported dimension (must be 2 or 3)");
  if (cells_per_dim < 2) throw Error("mesh needs at least 2 cells per dimension");
  Mesh mesh;
  mesh.dim = dim;
  mesh.cells_per_dim = cells_per_dim;
  mesh.h = 1.0 / cells_per_dim;
  return mesh;
}

ShapeEval shape_eval(const Mesh& mesh, const Vec& local) {
  ShapeEval out;
  out.count = mesh.corners_per_cell();
  const double inv_h = 1.0 / mesh.h;
  for (int corner = 0; corner < out.count; ++corner) {
    std::array<double, kMaxDim> f{};
    std::array<double, kMaxDim> df{};
    for (int d = 0; d < mesh.dim; ++d) {
      const bool upper = ((corner >> (mesh.dim - 1 - d)) & 1) != 0;
      f[static_cast<std::size_t>(d)] = upper ? local[d] : 1.0 - local[d];
      df[static_cast<std::size_t>(d)] = upper ? 1.0 : -1.0;
    }
    double value = 1.0;
    for (int d = 0; d < mesh.dim; ++d) value *= f[static_cast<std::size_t>(d)];
    Vec grad = Vec::zero(mesh.dim);
    for (int d = 0; d < mesh.dim; ++d) {
      double g = df[static_cast<std::size_t>(d)];
      for (int e = 0; e < mesh.dim; ++e)
        if (e != d) g *= f[static_cast<std::size_t>(e)];
      grad[d] = g * inv_h;  // physical gradient: reference gradient over h
    }
    out.value[static_cast<std::size_t>(corner)] = value;
    out.grad[static_cast<std::size_t>(corner)] = grad;
  }
  return out;
}

}  // namespace fpk
