#pragma once

#include <array>
#include <cmath>
#include <span>

namespace fpk {

inline constexpr int kMaxDim = 3;

/// Point in the unit cell Y = (0,1)^n, or an n-vector. Only the first `dim`
/// entries are meaningful; the remainder stays zero.
struct Vec {
  int dim = 0;
  std::array<double, kMaxDim> v{};

  Vec() = default;
  Vec(double x, double y) : dim(2), v{x, y, 0.0} {}
  Vec(double x, double y, double z) : dim(3), v{x, y, z} {}

  static Vec zero(int n) {
    Vec p;
    p.dim = n;
    return p;
  }

  double& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
};

/// Dense n-by-n matrix in a fixed row-major buffer.
struct Mat {
  int dim = 0;
  std::array<double, kMaxDim * kMaxDim> m{};

  static Mat zero(int n) {
    Mat a;
    a.dim = n;
    return a;
  }
  static Mat identity(int n) {
    Mat a = zero(n);
    for (int i = 0; i < n; ++i) a(i, i) = 1.0;
    return a;
  }

  double& operator()(int i, int j) { return m[static_cast<std::size_t>(i * kMaxDim + j)]; }
  double operator()(int i, int j) const { return m[static_cast<std::size_t>(i * kMaxDim + j)]; }
};

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (int i = 0; i < a.dim; ++i) s += a[i] * b[i];
  return s;
}

inline double norm_sq(const Vec& a) { return dot(a, a); }

inline double trace(const Mat& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim; ++i) s += a(i, i);
  return s;
}

/// Squared Frobenius norm |A|^2 = A:A.
inline double frobenius_sq(const Mat& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) s += a(i, j) * a(i, j);
  return s;
}

inline Vec matvec(const Mat& a, const Vec& x) {
  Vec y = Vec::zero(a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) y[i] += a(i, j) * x[j];
  return y;
}

inline bool all_finite(const Vec& a) {
  for (int i = 0; i < a.dim; ++i)
    if (!std::isfinite(a[i])) return false;
  return true;
}

inline bool all_finite(const Mat& a) {
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      if (!std::isfinite(a(i, j))) return false;
  return true;
}

/// Largest |a_ij - a_ji| relative to the largest entry magnitude.
double relative_asymmetry(const Mat& a);

/// Eigenvalues of a symmetric 2x2 or 3x3 matrix, ascending. `out` must have
/// size a.dim. Closed-form (quadratic / trigonometric), no iteration.
void symmetric_eigenvalues(const Mat& a, std::span<double> out);

}  // namespace fpk
