#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fpk/errors.hpp"
#include "fpk/types.hpp"

namespace fpk {

using ScalarField = std::function<double(const Vec&)>;
using VectorField = std::function<Vec(const Vec&)>;
using MatrixField = std::function<Mat(const Vec&)>;

/// Problem data over Y = (0,1)^n: diffusion A, drift b, optional reaction c,
/// optional scalar source f or vector potential F with f = -div F.
struct CoefficientField {
  int dim = 0;
  MatrixField A;
  VectorField b;  // empty means identically zero
  ScalarField c;  // reaction, lower-order setting only
  ScalarField f;  // scalar source (Dirichlet setting)
  VectorField F;  // vector potential (Dirichlet setting)
  std::string family_tag = "custom";

  /// Recorded uniform ellipticity bounds for the sampled eigenvalues of A.
  double ell_lower = 0.0;
  double ell_upper = 0.0;

  /// Families with a known answer override the sampled drift decision.
  std::optional<bool> drift_active;
  /// Essential infimum of the Cordes ratio minus (n-1), when known in closed
  /// form for the family.
  std::optional<double> analytic_delta_star;
  /// >0 when A has jumps aligned with a cells^dim grid; meshes must use a
  /// multiple of this cell count per dimension.
  int alignment_cells = 0;

  bool has_drift() const { return static_cast<bool>(b); }
  Mat eval_A(const Vec& x) const;
  Vec eval_b(const Vec& x) const;
};

enum class CordesSetting { periodic, dirichlet, lower_order };

std::string to_string(CordesSetting s);

/// Outcome of a Cordes-condition verification over a sample set.
struct CordesReport {
  CordesSetting setting = CordesSetting::periodic;
  double delta_star = 0.0;       // largest admissible delta, clamped to <= 1
  double delta_star_raw = 0.0;   // sampled minimum before clamping
  double delta_threshold = 0.0;  // delta_0, delta_hat_0, or 0
  double eta = 0.0;              // 1 iff the drift is active
  std::optional<double> nearness_const;  // kappa / kappa_hat
  std::optional<double> lambda_shift;    // lower-order setting only
  double max_cone_angle = 0.0;           // radians
  std::size_t sample_count = 0;
  bool passed = false;
};

/// A solve was requested but the Cordes verification did not pass (or was run
/// for the wrong setting).
struct CordesGateError : Error {
  CordesGateError(const std::string& what, CordesReport r) : Error(what), report(std::move(r)) {}
  CordesReport report;
};

/// Renormalization gamma(x) = tr(A) / (|A|^2 + |b|^2), Frobenius norm.
double eval_gamma(const CoefficientField& coeffs, const Vec& x);

/// Renormalization s(x) of the lower-order setting,
/// s = (tr A + c/lambda) / (|A|^2 + |b|^2/(2 lambda) + c^2/lambda^2).
double eval_renormalization_s(const CoefficientField& coeffs, double lambda_shift, const Vec& x);

/// Verifies the Cordes-type condition for the periodic or Dirichlet setting
/// over the given sample set (default choice elsewhere: the assembly
/// quadrature points). Throws on an empty sample set, an ellipticity or
/// symmetry violation at a sample, or non-finite coefficient values.
CordesReport check_cordes(const CoefficientField& coeffs, CordesSetting setting,
                          std::span<const Vec> samples);

/// Verifies the Cordes-type condition with lower-order terms for the shift
/// parameter lambda. Requires c; passes iff the sampled delta is positive.
CordesReport check_cordes_lower_order(const CoefficientField& coeffs, double lambda_shift,
                                      std::span<const Vec> samples);

// --- Built-in coefficient families -----------------------------------------

CoefficientField make_constant_identity(int dim);
CoefficientField make_constant(int dim, const Mat& a, const Vec& drift);
/// Two values of a scalar diffusion a(x) I, split at 1/2 along `split_axis`.
CoefficientField make_checkerboard(int dim, double value_low, double value_high, int split_axis);
/// Piecewise-constant scalar diffusion a(x_1) I on equal-width slabs.
CoefficientField make_layered(int dim, std::vector<double> values);
/// A = I, b = grad V with V = amplitude * prod_d sin(2 pi x_d).
CoefficientField make_trig_drift(int dim, double amplitude);
/// Cell-centered CSV table, header i,j[,k],a11,a12[,a13],a22[,a23,a33],b1,b2[,b3],
/// rows in row-major cell order. Piecewise constant per cell.
CoefficientField make_table(int dim, const std::string& csv_path);

}  // namespace fpk
