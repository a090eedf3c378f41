#include "fpk/quadrature.hpp"

#include <cmath>
#include <cstddef>

#include "fpk/errors.hpp"

namespace fpk {

QuadRule1d gauss_legendre_01(int points) {
  if (points < 1 || points > 32) throw Error("quadrature order must be in [1,32]");
  QuadRule1d rule;
  rule.nodes.resize(static_cast<std::size_t>(points));
  rule.weights.resize(static_cast<std::size_t>(points));
  const int n = points;
  // Newton iteration on Legendre polynomials, nodes on [-1,1].
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // map [-1,1] -> [0,1]
    rule.nodes[static_cast<std::size_t>(i)] = 0.5 * (1.0 - x);
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = 0.5 * (1.0 + x);
    rule.weights[static_cast<std::size_t>(i)] = 0.5 * w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = 0.5 * w;
  }
  return rule;
}

TensorRule tensor_gauss(int dim, int points) {
  const QuadRule1d rule = gauss_legendre_01(points);
  TensorRule out;
  out.dim = dim;
  const int total = [&] {
    int t = 1;
    for (int d = 0; d < dim; ++d) t *= points;
    return t;
  }();
  out.nodes.reserve(static_cast<std::size_t>(total));
  out.weights.reserve(static_cast<std::size_t>(total));
  std::array<int, kMaxDim> idx{};
  for (int flat = 0; flat < total; ++flat) {
    int rem = flat;
    for (int d = dim - 1; d >= 0; --d) {
      idx[static_cast<std::size_t>(d)] = rem % points;
      rem /= points;
    }
    Vec p = Vec::zero(dim);
    double w = 1.0;
    for (int d = 0; d < dim; ++d) {
      const auto k = static_cast<std::size_t>(idx[static_cast<std::size_t>(d)]);
      p[d] = rule.nodes[k];
      w *= rule.weights[k];
    }
    out.nodes.push_back(p);
    out.weights.push_back(w);
  }
  return out;
}

CompositeRule composite_gauss(int dim, int cells, int points) {
  if (cells < 1) throw Error("composite rule needs at least one cell");
  const TensorRule local = tensor_gauss(dim, points);
  const double h = 1.0 / cells;
  CompositeRule out;
  long total_cells = 1;
  for (int d = 0; d < dim; ++d) total_cells *= cells;
  out.nodes.reserve(static_cast<std::size_t>(total_cells) * local.nodes.size());
  out.weights.reserve(out.nodes.capacity());
  const double cell_volume = [&] {
    double v = 1.0;
    for (int d = 0; d < dim; ++d) v *= h;
    return v;
  }();
  std::array<int, kMaxDim> cell{};
  for (long flat = 0; flat < total_cells; ++flat) {
    long rem = flat;
    for (int d = dim - 1; d >= 0; --d) {
      cell[static_cast<std::size_t>(d)] = static_cast<int>(rem % cells);
      rem /= cells;
    }
    for (std::size_t q = 0; q < local.nodes.size(); ++q) {
      Vec p = Vec::zero(dim);
      for (int d = 0; d < dim; ++d)
        p[d] = (cell[static_cast<std::size_t>(d)] + local.nodes[q][d]) * h;
      out.nodes.push_back(p);
      out.weights.push_back(local.weights[q] * cell_volume);
    }
  }
  return out;
}

double integrate(int dim, int cells, int points, const std::function<double(const Vec&)>& f) {
  const CompositeRule rule = composite_gauss(dim, cells, points);
  double sum = 0.0;
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) sum += rule.weights[q] * f(rule.nodes[q]);
  return sum;
}

}  // namespace fpk
