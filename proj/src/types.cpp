#include "fpk/types.hpp"

#include <algorithm>

namespace fpk {

double relative_asymmetry(const Mat& a) {
  double scale = 0.0;
  double worst = 0.0;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) scale = std::max(scale, std::abs(a(i, j)));
  for (int i = 0; i < a.dim; ++i)
    for (int j = i + 1; j < a.dim; ++j) worst = std::max(worst, std::abs(a(i, j) - a(j, i)));
  return scale > 0.0 ? worst / scale : worst;
}

namespace {

void eigenvalues_2x2(const Mat& a, std::span<double> out) {
  const double mean = 0.5 * (a(0, 0) + a(1, 1));
  const double off = 0.5 * (a(0, 1) + a(1, 0));
  const double half_gap = 0.5 * (a(0, 0) - a(1, 1));
  const double r = std::hypot(half_gap, off);
  out[0] = mean - r;
  out[1] = mean + r;
}

// Trigonometric solution of the characteristic cubic for symmetric 3x3.
void eigenvalues_3x3(const Mat& a, std::span<double> out) {
  const double q = trace(a) / 3.0;
  Mat b = a;
  for (int i = 0; i < 3; ++i) b(i, i) -= q;
  const double p2 = frobenius_sq(b) / 6.0;
  const double p = std::sqrt(p2);
  if (p < 1e-300) {
    out[0] = out[1] = out[2] = q;
    return;
  }
  // det(b / p)
  const double inv = 1.0 / p;
  double d = 0.0;
  d += b(0, 0) * inv * (b(1, 1) * inv * b(2, 2) * inv - b(1, 2) * inv * b(2, 1) * inv);
  d -= b(0, 1) * inv * (b(1, 0) * inv * b(2, 2) * inv - b(1, 2) * inv * b(2, 0) * inv);
  d += b(0, 2) * inv * (b(1, 0) * inv * b(2, 1) * inv - b(1, 1) * inv * b(2, 0) * inv);
  const double r = std::clamp(d / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double two_pi_third = 2.0943951023931953;
  out[2] = q + 2.0 * p * std::cos(phi);
  out[0] = q + 2.0 * p * std::cos(phi + 2.0 * two_pi_third);
  out[1] = 3.0 * q - out[0] - out[2];
}

}  // namespace

void symmetric_eigenvalues(const Mat& a, std::span<double> out) {
  if (a.dim == 2) {
    eigenvalues_2x2(a, out);
  } else {
    eigenvalues_3x3(a, out);
  }
  std::sort(out.begin(), out.end());
}

}  // namespace fpk
