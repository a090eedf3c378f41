#include "fpk/coefficients.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

namespace fpk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDriftZeroTol = 1e-14;

double clamp_unit(double x) { return std::min(x, 1.0); }

}  // namespace

std::string to_string(CordesSetting s) {
  switch (s) {
    case CordesSetting::periodic:
      return "periodic";
    case CordesSetting::dirichlet:
      return "dirichlet";
    case CordesSetting::lower_order:
      return "lower_order";
  }
  return "unknown";
}

Mat CoefficientField::eval_A(const Vec& x) const {
  Mat a = A(x);
  if (!all_finite(a)) throw EvalError("diffusion coefficient evaluated to a non-finite value", x);
  return a;
}

Vec CoefficientField::eval_b(const Vec& x) const {
  if (!b) return Vec::zero(dim);
  Vec v = b(x);
  if (!all_finite(v)) throw EvalError("drift coefficient evaluated to a non-finite value", x);
  return v;
}

double eval_gamma(const CoefficientField& coeffs, const Vec& x) {
  const Mat a = coeffs.eval_A(x);
  const Vec drift = coeffs.eval_b(x);
  const double denom = frobenius_sq(a) + norm_sq(drift);
  const double g = trace(a) / denom;
  if (!std::isfinite(g) || g <= 0.0)
    throw EvalError("renormalization is not a positive finite number", x);
  return g;
}

double eval_renormalization_s(const CoefficientField& coeffs, double lambda_shift, const Vec& x) {
  if (!coeffs.c) throw Error("lower-order renormalization requires the reaction coefficient c");
  if (!(lambda_shift > 0.0)) throw Error("lambda_shift must be positive");
  const Mat a = coeffs.eval_A(x);
  const Vec drift = coeffs.eval_b(x);
  const double c = coeffs.c(x);
  if (!std::isfinite(c) || c < 0.0)
    throw EvalError("reaction coefficient must be finite and nonnegative", x);
  const double num = trace(a) + c / lambda_shift;
  const double den = frobenius_sq(a) + norm_sq(drift) / (2.0 * lambda_shift) +
                     c * c / (lambda_shift * lambda_shift);
  const double s = num / den;
  if (!std::isfinite(s) || s <= 0.0)
    throw EvalError("renormalization is not a positive finite number", x);
  return s;
}

namespace {

struct SampleScan {
  double min_delta = std::numeric_limits<double>::infinity();
  double min_cos = 1.0;
  bool drift_seen = false;
};

// Shared per-sample arithmetic: symmetry / ellipticity validation, the Cordes
// ratio, and the eigenvalue cone angle.
SampleScan scan_samples(const CoefficientField& coeffs, std::span<const Vec> samples,
                        const std::function<double(const Mat&, const Vec&, const Vec&)>& delta_at) {
  if (samples.empty()) throw Error("Cordes check requires a nonempty sample set");
  SampleScan scan;
  std::array<double, kMaxDim> eigs{};
  for (const Vec& x : samples) {
    const Mat a = coeffs.eval_A(x);
    if (relative_asymmetry(a) > 1e-12)
      throw EvalError("diffusion matrix is not symmetric at a sample", x);
    symmetric_eigenvalues(a, std::span<double>(eigs.data(), static_cast<std::size_t>(a.dim)));
    if (!(eigs[0] > 0.0)) throw EvalError("ellipticity violation at a sample", x);
    const Vec drift = coeffs.eval_b(x);
    if (norm_sq(drift) > kDriftZeroTol * kDriftZeroTol) scan.drift_seen = true;
    scan.min_delta = std::min(scan.min_delta, delta_at(a, drift, x));
    const double cos_angle =
        trace(a) / (std::sqrt(static_cast<double>(a.dim)) * std::sqrt(frobenius_sq(a)));
    scan.min_cos = std::min(scan.min_cos, std::clamp(cos_angle, -1.0, 1.0));
  }
  return scan;
}

}  // namespace

CordesReport check_cordes(const CoefficientField& coeffs, CordesSetting setting,
                          std::span<const Vec> samples) {
  if (setting == CordesSetting::lower_order)
    throw Error("use check_cordes_lower_order for the lower-order setting");
  const int n = coeffs.dim;
  const SampleScan scan =
      scan_samples(coeffs, samples, [n](const Mat& a, const Vec& drift, const Vec&) {
        const double tr = trace(a);
        return tr * tr / (frobenius_sq(a) + norm_sq(drift)) - (n - 1);
      });

  CordesReport report;
  report.setting = setting;
  report.sample_count = samples.size();
  report.delta_star_raw = scan.min_delta;
  double delta = scan.min_delta;
  if (coeffs.analytic_delta_star) delta = std::min(delta, *coeffs.analytic_delta_star);
  report.delta_star = clamp_unit(delta);
  report.eta = coeffs.drift_active.value_or(scan.drift_seen) ? 1.0 : 0.0;

  const bool periodic = setting == CordesSetting::periodic;
  const double poincare_sq = periodic ? 1.0 / (4.0 * kPi * kPi) : 1.0 / (kPi * kPi);
  report.delta_threshold = report.eta / (1.0 + 1.0 / poincare_sq);
  report.nearness_const =
      clamp_unit((report.delta_star - report.delta_threshold) * (1.0 + report.eta * poincare_sq));
  report.max_cone_angle = std::acos(scan.min_cos);
  report.passed = report.delta_star > report.delta_threshold;

  // Consequence of the condition: |I - gamma A|^2 + |gamma b|^2 <= 1 - delta
  // pointwise. Exact in real arithmetic, so a violation beyond roundoff means
  // the arithmetic above is broken.
  for (const Vec& x : samples) {
    const Mat a = coeffs.eval_A(x);
    const Vec drift = coeffs.eval_b(x);
    const double g = eval_gamma(coeffs, x);
    Mat residual = Mat::identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) residual(i, j) -= g * a(i, j);
    const double lhs = frobenius_sq(residual) + g * g * norm_sq(drift);
    if (lhs > 1.0 - report.delta_star + 1e-10)
      throw Error("internal consistency failure in the Cordes arithmetic");
  }
  return report;
}

CordesReport check_cordes_lower_order(const CoefficientField& coeffs, double lambda_shift,
                                      std::span<const Vec> samples) {
  if (!coeffs.c) throw Error("lower-order Cordes check requires the reaction coefficient c");
  if (!(lambda_shift > 0.0)) throw Error("lambda_shift must be positive");
  const int n = coeffs.dim;
  const ScalarField& reaction = coeffs.c;
  const SampleScan scan = scan_samples(
      coeffs, samples, [n, lambda_shift, &reaction](const Mat& a, const Vec& drift, const Vec& x) {
        const double c = reaction(x);
        if (!std::isfinite(c) || c < 0.0)
          throw EvalError("reaction coefficient must be finite and nonnegative", x);
        const double num = trace(a) + c / lambda_shift;
        const double den = frobenius_sq(a) + norm_sq(drift) / (2.0 * lambda_shift) +
                           c * c / (lambda_shift * lambda_shift);
        return num * num / den - n;
      });

  CordesReport report;
  report.setting = CordesSetting::lower_order;
  report.sample_count = samples.size();
  report.delta_star_raw = scan.min_delta;
  report.delta_star = clamp_unit(scan.min_delta);
  report.delta_threshold = 0.0;
  report.eta = scan.drift_seen ? 1.0 : 0.0;
  report.lambda_shift = lambda_shift;
  report.max_cone_angle = std::acos(scan.min_cos);
  report.passed = report.delta_star > 0.0;
  return report;
}

// --- Built-in families ------------------------------------------------------

CoefficientField make_constant_identity(int dim) {
  return make_constant(dim, Mat::identity(dim), Vec::zero(dim));
}

CoefficientField make_constant(int dim, const Mat& a, const Vec& drift) {
  if (relative_asymmetry(a) > 1e-12) throw Error("constant diffusion matrix must be symmetric");
  std::array<double, kMaxDim> eigs{};
  symmetric_eigenvalues(a, std::span<double>(eigs.data(), static_cast<std::size_t>(dim)));
  if (!(eigs[0] > 0.0)) throw Error("constant diffusion matrix must be positive definite");

  CoefficientField field;
  field.dim = dim;
  field.family_tag = "constant";
  field.A = [a](const Vec&) { return a; };
  const bool has_drift = norm_sq(drift) > kDriftZeroTol * kDriftZeroTol;
  if (has_drift) field.b = [drift](const Vec&) { return drift; };
  field.ell_lower = eigs[0];
  field.ell_upper = eigs[static_cast<std::size_t>(dim - 1)];
  field.drift_active = has_drift;
  const double tr = trace(a);
  field.analytic_delta_star = tr * tr / (frobenius_sq(a) + norm_sq(drift)) - (dim - 1);
  return field;
}

namespace {

CoefficientField make_scalar_diffusion(int dim, ScalarField a, double lo, double hi,
                                       std::string tag, int alignment) {
  CoefficientField field;
  field.dim = dim;
  field.family_tag = std::move(tag);
  field.A = [dim, a = std::move(a)](const Vec& x) {
    Mat m = Mat::identity(dim);
    const double s = a(x);
    for (int i = 0; i < dim; ++i) m(i, i) = s;
    return m;
  };
  field.ell_lower = lo;
  field.ell_upper = hi;
  field.drift_active = false;
  // (tr aI)^2 / |aI|^2 = n for any scalar a, so delta = 1 exactly.
  field.analytic_delta_star = 1.0;
  field.alignment_cells = alignment;
  return field;
}

}  // namespace

CoefficientField make_checkerboard(int dim, double value_low, double value_high, int split_axis) {
  if (!(value_low > 0.0) || !(value_high > 0.0))
    throw Error("checkerboard values must be positive");
  if (split_axis < 0 || split_axis >= dim) throw Error("checkerboard split axis out of range");
  ScalarField a = [value_low, value_high, split_axis](const Vec& x) {
    return x[split_axis] < 0.5 ? value_low : value_high;
  };
  return make_scalar_diffusion(dim, std::move(a), std::min(value_low, value_high),
                               std::max(value_low, value_high), "checkerboard", 2);
}

CoefficientField make_layered(int dim, std::vector<double> values) {
  if (values.empty()) throw Error("layered profile needs at least one value");
  for (double v : values)
    if (!(v > 0.0)) throw Error("layered profile values must be positive");
  const int layers = static_cast<int>(values.size());
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double vlo = *lo, vhi = *hi;
  ScalarField a = [values = std::move(values), layers](const Vec& x) {
    const int idx = std::clamp(static_cast<int>(x[0] * layers), 0, layers - 1);
    return values[static_cast<std::size_t>(idx)];
  };
  return make_scalar_diffusion(dim, std::move(a), vlo, vhi, "layered", layers);
}

CoefficientField make_trig_drift(int dim, double amplitude) {
  CoefficientField field;
  field.dim = dim;
  field.family_tag = "trig_drift";
  field.A = [dim](const Vec&) { return Mat::identity(dim); };
  if (amplitude != 0.0) {
    field.b = [dim, amplitude](const Vec& x) {
      // grad of V = amplitude * prod_d sin(2 pi x_d)
      Vec g = Vec::zero(dim);
      for (int d = 0; d < dim; ++d) {
        double term = amplitude * 2.0 * kPi * std::cos(2.0 * kPi * x[d]);
        for (int e = 0; e < dim; ++e)
          if (e != d) term *= std::sin(2.0 * kPi * x[e]);
        g[d] = term;
      }
      return g;
    };
  }
  field.ell_lower = 1.0;
  field.ell_upper = 1.0;
  field.drift_active = amplitude != 0.0;
  // max |grad V|^2 = (2 pi amplitude)^2, attained where one factor peaks.
  const double drift_max_sq = 4.0 * kPi * kPi * amplitude * amplitude;
  field.analytic_delta_star =
      static_cast<double>(dim * dim) / (dim + drift_max_sq) - (dim - 1);
  return field;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss(line);
  while (std::getline(ss, item, ',')) {
    const auto begin = item.find_first_not_of(" \t\r");
    const auto end = item.find_last_not_of(" \t\r");
    out.push_back(begin == std::string::npos ? "" : item.substr(begin, end - begin + 1));
  }
  return out;
}

double parse_double_token(const std::string& token, int line_no) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw Error("table CSV: malformed number '" + token + "' on line " + std::to_string(line_no));
  return value;
}

}  // namespace

CoefficientField make_table(int dim, const std::string& csv_path) {
  std::ifstream in(csv_path);
  if (!in) throw Error("table CSV: cannot open '" + csv_path + "'");

  const std::vector<std::string> expected_header =
      dim == 2 ? std::vector<std::string>{"i", "j", "a11", "a12", "a22", "b1", "b2"}
               : std::vector<std::string>{"i",   "j",   "k",   "a11", "a12", "a13",
                                          "a22", "a23", "a33", "b1",  "b2",  "b3"};
  std::string line;
  if (!std::getline(in, line)) throw Error("table CSV: empty file");
  if (split_csv_line(line) != expected_header)
    throw Error("table CSV: header must be exactly 'i,j[,k],a11,a12[,a13],a22[,a23,a33],b1,b2[,b3]'");

  std::vector<Mat> mats;
  std::vector<Vec> drifts;
  std::vector<std::array<long, kMaxDim>> indices;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto tokens = split_csv_line(line);
    if (tokens.size() != expected_header.size())
      throw Error("table CSV: wrong column count on line " + std::to_string(line_no));
    std::array<long, kMaxDim> idx{};
    for (int d = 0; d < dim; ++d)
      idx[static_cast<std::size_t>(d)] =
          static_cast<long>(parse_double_token(tokens[static_cast<std::size_t>(d)], line_no));
    std::size_t t = static_cast<std::size_t>(dim);
    Mat a = Mat::zero(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = i; j < dim; ++j) {
        const double v = parse_double_token(tokens[t++], line_no);
        a(i, j) = v;
        a(j, i) = v;
      }
    Vec drift = Vec::zero(dim);
    for (int d = 0; d < dim; ++d) drift[d] = parse_double_token(tokens[t++], line_no);
    indices.push_back(idx);
    mats.push_back(a);
    drifts.push_back(drift);
  }
  if (mats.empty()) throw Error("table CSV: no data rows");

  long cells = 1;
  while (true) {
    long total = 1;
    for (int d = 0; d < dim; ++d) total *= cells;
    if (total == static_cast<long>(mats.size())) break;
    if (total > static_cast<long>(mats.size()))
      throw Error("table CSV: row count must be a dim-th power of the grid size");
    ++cells;
  }
  for (std::size_t r = 0; r < indices.size(); ++r) {
    long rem = static_cast<long>(r);
    std::array<long, kMaxDim> want{};
    for (int d = dim - 1; d >= 0; --d) {
      want[static_cast<std::size_t>(d)] = rem % cells;
      rem /= cells;
    }
    if (want != indices[r])
      throw Error("table CSV: rows must follow row-major cell order (row " + std::to_string(r + 2) +
                  ")");
  }

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  bool drift_seen = false;
  double min_delta = std::numeric_limits<double>::infinity();
  std::array<double, kMaxDim> eigs{};
  for (std::size_t r = 0; r < mats.size(); ++r) {
    symmetric_eigenvalues(mats[r], std::span<double>(eigs.data(), static_cast<std::size_t>(dim)));
    if (!(eigs[0] > 0.0))
      throw Error("table CSV: diffusion matrix is not positive definite in row " +
                  std::to_string(r + 2));
    lo = std::min(lo, eigs[0]);
    hi = std::max(hi, eigs[static_cast<std::size_t>(dim - 1)]);
    if (norm_sq(drifts[r]) > kDriftZeroTol * kDriftZeroTol) drift_seen = true;
    const double tr = trace(mats[r]);
    min_delta =
        std::min(min_delta, tr * tr / (frobenius_sq(mats[r]) + norm_sq(drifts[r])) - (dim - 1));
  }

  CoefficientField field;
  field.dim = dim;
  field.family_tag = "table";
  const int nc = static_cast<int>(cells);
  auto cell_of = [nc, dim](const Vec& x) {
    std::size_t flat = 0;
    for (int d = 0; d < dim; ++d) {
      const int i = std::clamp(static_cast<int>(x[d] * nc), 0, nc - 1);
      flat = flat * static_cast<std::size_t>(nc) + static_cast<std::size_t>(i);
    }
    return flat;
  };
  field.A = [mats = std::move(mats), cell_of](const Vec& x) { return mats[cell_of(x)]; };
  if (drift_seen)
    field.b = [drifts = std::move(drifts), cell_of](const Vec& x) { return drifts[cell_of(x)]; };
  field.ell_lower = lo;
  field.ell_upper = hi;
  field.drift_active = drift_seen;
  field.analytic_delta_star = min_delta;  // piecewise constant: the min is exact
  field.alignment_cells = nc;
  return field;
}

}  // namespace fpk
