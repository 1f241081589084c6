#include "veelocus/wdvv.hpp"

#include <algorithm>
#include <cmath>

#include "veelocus/kernels.hpp"

namespace veelocus {

namespace {

double xnorm(std::span<const cplx> x) { return std::max(herm_norm(x), 1.0); }

Vec sample_off_hyperplanes(const Configuration& config, std::uint64_t seed,
                           double margin) {
  std::vector<Vec> avoid;
  avoid.reserve(config.entries.size());
  for (const Entry& e : config.entries) avoid.push_back(e.vector);
  return sample_point(config.dim, seed, avoid, margin);
}

}  // namespace

cplx eval_prepotential(const Configuration& config, std::span<const cplx> x,
                       const Tolerance& tol) {
  if (config.kind != ConfigKind::vee)
    throw BadParameter("eval_prepotential: configuration must be vee kind");
  cplx sum{0.0, 0.0};
  for (const Entry& e : config.entries) {
    const cplx ax = bilinear(e.vector, x);
    if (approx_zero(ax, herm_norm(e.vector) * xnorm(x), tol))
      throw OnHyperplane("eval_prepotential: point on a configuration hyperplane");
    const cplx sq = ax * ax;
    sum += e.weight * sq * std::log(sq);
  }
  return sum;
}

Matrix third_deriv_matrix(const Configuration& config, std::span<const cplx> x,
                          std::size_t m, const Tolerance& tol) {
  if (config.kind != ConfigKind::vee)
    throw BadParameter("third_deriv_matrix: configuration must be vee kind");
  if (m >= config.dim) throw BadParameter("third_deriv_matrix: coordinate out of range");
  Matrix result(config.dim, config.dim);
  for (const Entry& e : config.entries) {
    const cplx ax = bilinear(e.vector, x);
    if (approx_zero(ax, herm_norm(e.vector) * xnorm(x), tol))
      throw OnHyperplane("third_deriv_matrix: point on a configuration hyperplane");
    const cplx coef = 4.0 * e.weight * e.vector[m] / ax;
    kernels::active().rank1_update(coef, e.vector.data(), config.dim,
                                   result.data.data());
  }
  return result;
}

WdvvReport check_wdvv(const Configuration& config, int num_points,
                      std::uint64_t seed, const Tolerance& tol) {
  if (config.kind != ConfigKind::vee)
    throw BadParameter("check_wdvv: configuration must be vee kind");
  WdvvReport report;
  report.dim = config.dim;
  const Configuration reduced = reduce_to_span(config, tol);
  report.effective_dim = reduced.dim;
  const std::size_t n = reduced.dim;
  if (n <= 2) {
    report.points = 0;
    return report;  // i,j,k in {1,2} makes the system an identity
  }

  constexpr int kMaxRetries = 20;
  for (int point = 0; point < num_points; ++point) {
    std::vector<Matrix> f(n);
    std::vector<Matrix> f_inv(n);
    bool built = false;
    for (int retry = 0; retry < kMaxRetries && !built; ++retry) {
      const Vec x = sample_off_hyperplanes(
          reduced, mix_seed(seed, 7919 * point + retry), 0.05);
      try {
        for (std::size_t m = 0; m < n; ++m) {
          f[m] = third_deriv_matrix(reduced, x, m, tol);
          f_inv[m] = invert(f[m], tol);
        }
        built = true;
      } catch (const DegenerateMatrix&) {
        // resample the point
      }
    }
    if (!built)
      throw DegenerateMatrix(config.label +
                             ": some F_k stayed degenerate after point resampling");
    ++report.points;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          const Matrix lhs = multiply(multiply(f[i], f_inv[k]), f[j]);
          const Matrix rhs = multiply(multiply(f[j], f_inv[k]), f[i]);
          double diff = 0.0;
          for (std::size_t c = 0; c < lhs.data.size(); ++c)
            diff = std::max(diff, std::abs(lhs.data[c] - rhs.data[c]));
          const double scale = std::max(lhs.max_abs(), tol.zero_scale_floor);
          const double residual = diff / scale;
          report.residuals.push_back(residual);
          report.max_residual = std::max(report.max_residual, residual);
          ++report.checks;
        }
      }
    }
  }
  report.overall = report.max_residual < kWdvvPassThreshold;
  return report;
}

}  // namespace veelocus
