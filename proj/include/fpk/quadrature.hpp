#pragma once

#include <functional>
#include <vector>

#include "fpk/types.hpp"

namespace fpk {

/// Gauss-Legendre rule mapped to [0,1]. `points` nodes integrate polynomials
/// of degree <= 2*points - 1 exactly.
struct QuadRule1d {
  std::vector<double> nodes;
  std::vector<double> weights;
};

QuadRule1d gauss_legendre_01(int points);

/// Tensor-product Gauss rule on the reference cube [0,1]^dim.
struct TensorRule {
  int dim = 0;
  std::vector<Vec> nodes;
  std::vector<double> weights;  // sum to 1
};

TensorRule tensor_gauss(int dim, int points);

/// Composite tensor Gauss rule over a cells^dim grid on the unit cube.
/// Cell traversal and point placement match the assembly loops exactly, so
/// these nodes are bit-identical to the assembly quadrature points.
struct CompositeRule {
  std::vector<Vec> nodes;
  std::vector<double> weights;  // sum to 1
};

CompositeRule composite_gauss(int dim, int cells, int points);

/// Composite Gauss integral of f over the unit cube.
double integrate(int dim, int cells, int points, const std::function<double(const Vec&)>& f);

}  // namespace fpk
