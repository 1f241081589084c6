#include "veelocus/locus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace veelocus {

namespace {

double xnorm(std::span<const cplx> x) { return std::max(herm_norm(x), 1.0); }

cplx pow_odd(cplx base, int exponent) {
  cplx result{1.0, 0.0};
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

// Generic point of the pivot hyperplane: project a real sample onto
// (alpha,x)=0 and keep a margin from every other hyperplane.
Vec sample_on_hyperplane(const Configuration& config, std::size_t pivot,
                         std::uint64_t seed, double margin, const Tolerance& tol) {
  const Vec& alpha = config.entries[pivot].vector;
  const cplx aa = bilinear(alpha, alpha);
  if (approx_zero(aa, herm_norm_sq(alpha), tol))
    throw IsotropicVector("sample_on_hyperplane: isotropic pivot");
  Rng rng(seed);
  for (int attempt = 0; attempt < 500; ++attempt) {
    Vec x(config.dim);
    for (auto& v : x) v = cplx{rng.symmetric(), 0.0};
    const cplx coef = -bilinear(alpha, x) / aa;
    for (std::size_t c = 0; c < x.size(); ++c) x[c] += coef * alpha[c];
    if (herm_norm(x) < 0.3) continue;
    bool ok = true;
    for (std::size_t i = 0; i < config.entries.size() && ok; ++i) {
      if (i == pivot) continue;
      const Vec& beta = config.entries[i].vector;
      if (std::abs(bilinear(beta, x)) < margin * herm_norm(beta)) ok = false;
    }
    if (ok) return x;
  }
  throw SamplingExhausted("sample_on_hyperplane: no admissible point");
}

}  // namespace

cplx eval_potential_scaled(const Configuration& config, std::span<const cplx> x,
                           double& scale, const Tolerance& tol) {
  if (config.kind != ConfigKind::locus)
    throw BadParameter("eval_potential: configuration must be locus kind");
  cplx sum{0.0, 0.0};
  scale = 0.0;
  for (const Entry& e : config.entries) {
    const cplx ax = bilinear(e.vector, x);
    if (approx_zero(ax, herm_norm(e.vector) * xnorm(x), tol))
      throw OnHyperplane("eval_potential: point on a configuration hyperplane");
    const double m = static_cast<double>(e.multiplicity);
    const cplx term = m * (m + 1.0) * bilinear(e.vector, e.vector) / (ax * ax);
    sum += term;
    scale += std::abs(term);
  }
  return sum;
}

cplx eval_potential(const Configuration& config, std::span<const cplx> x,
                    const Tolerance& tol) {
  double scale = 0.0;
  return eval_potential_scaled(config, x, scale, tol);
}

std::vector<LocusCondition> check_locus_plane(const PlaneGroup& plane,
                                              std::size_t plane_id, std::size_t pivot,
                                              const Configuration& config,
                                              const Tolerance& tol) {
  const Vec& alpha = config.entries[pivot].vector;
  const auto transversals = transversal_coefficients(plane, pivot, config, tol);
  std::vector<LocusCondition> conditions;
  const int m_pivot = config.entries[pivot].multiplicity;
  for (int s = 1; s <= m_pivot; ++s) {
    cplx sum{0.0, 0.0};
    double scale = 0.0;
    for (const auto& [member, t] : transversals) {
      const Vec& beta = config.entries[member].vector;
      const double mb = static_cast<double>(config.entries[member].multiplicity);
      const cplx ab = bilinear(alpha, beta);
      const cplx term = mb * (mb + 1.0) * bilinear(beta, beta) *
                        pow_odd(ab, 2 * s - 1) / pow_odd(t, 2 * s + 1);
      sum += term;
      // (alpha,beta) may itself cancel to ~0; the term's scale uses the
      // no-cancellation magnitude of that product
      const double ab_scale = std::max(bilinear_scale(alpha, beta), std::abs(ab));
      scale += mb * (mb + 1.0) * std::abs(bilinear(beta, beta)) *
               std::pow(ab_scale, 2 * s - 1) / std::pow(std::abs(t), 2 * s + 1);
    }
    LocusCondition cond;
    cond.plane = plane_id;
    cond.pivot = pivot;
    cond.s = s;
    cond.residual = std::abs(sum);
    cond.scale = scale;
    cond.pass = approx_zero(sum, scale, tol);
    conditions.push_back(cond);
  }
  return conditions;
}

LocusReport check_locus(const Configuration& config, int oracle_samples,
                        std::uint64_t seed, const Tolerance& tol) {
  if (config.kind != ConfigKind::locus)
    throw BadParameter("check_locus: configuration must be locus kind");
  LocusReport report;
  const std::vector<PlaneGroup> planes = enumerate_planes(config, tol);
  report.plane_count = planes.size();

  std::vector<bool> pivot_plane_pass(config.entries.size(), true);
  for (std::size_t p = 0; p < planes.size(); ++p) {
    for (std::size_t pivot : planes[p].members) {
      auto conditions = check_locus_plane(planes[p], p, pivot, config, tol);
      for (const LocusCondition& c : conditions) {
        if (!c.pass) {
          report.overall = false;
          pivot_plane_pass[pivot] = false;
        }
        report.per_condition.push_back(c);
      }
    }
  }

  if (oracle_samples > 0) {
    for (std::size_t pivot = 0; pivot < config.entries.size(); ++pivot) {
      const Vec& alpha = config.entries[pivot].vector;
      bool oracle_pass = true;
      for (int point = 0; point < oracle_samples; ++point) {
        const Vec x = sample_on_hyperplane(
            config, pivot, mix_seed(seed, 1000 * pivot + point), 0.15, tol);
        for (int s = 1; s <= config.entries[pivot].multiplicity; ++s) {
          cplx sum{0.0, 0.0};
          double scale = 0.0;
          for (std::size_t i = 0; i < config.entries.size(); ++i) {
            if (i == pivot) continue;
            const Vec& beta = config.entries[i].vector;
            const double mb = static_cast<double>(config.entries[i].multiplicity);
            const cplx ab = bilinear(alpha, beta);
            const cplx bx = bilinear(beta, x);
            const cplx term = mb * (mb + 1.0) * bilinear(beta, beta) *
                              pow_odd(ab, 2 * s - 1) / pow_odd(bx, 2 * s + 1);
            sum += term;
            const double ab_scale = std::max(bilinear_scale(alpha, beta), std::abs(ab));
            scale += mb * (mb + 1.0) * std::abs(bilinear(beta, beta)) *
                     std::pow(ab_scale, 2 * s - 1) / std::pow(std::abs(bx), 2 * s + 1);
          }
          LocusOracleRecord rec;
          rec.pivot = pivot;
          rec.point = point;
          rec.s = s;
          rec.residual = std::abs(sum);
          rec.scale = scale;
          rec.pass = approx_zero(sum, scale, tol);
          if (!rec.pass) oracle_pass = false;
          report.oracle.push_back(rec);
        }
      }
      if (oracle_pass != pivot_plane_pass[pivot])
        throw CrossCheckDisagreement(
            config.label + ": plane verdict and sampling oracle disagree at pivot " +
            std::to_string(pivot));
    }
  }
  return report;
}

double decay_order_slope(const Configuration& config, std::size_t pivot,
                         std::uint64_t seed, const Tolerance& tol) {
  if (pivot >= config.entries.size())
    throw BadParameter("decay_order_slope: pivot out of range");
  const Vec& alpha = config.entries[pivot].vector;
  const cplx aa = bilinear(alpha, alpha);
  if (approx_zero(aa, herm_norm_sq(alpha), tol))
    throw IsotropicVector("decay_order_slope: isotropic pivot");

  const Vec x0 = sample_on_hyperplane(config, pivot, mix_seed(seed, 77 + pivot), 0.5, tol);
  const double eps_values[5] = {1e-1, 3.16227766016838e-2, 1e-2,
                                3.16227766016838e-3, 1e-3};
  double logs_eps[5];
  double logs_d[5];
  double max_d = 0.0;
  double max_scale = 0.0;
  for (int i = 0; i < 5; ++i) {
    const double eps = eps_values[i];
    Vec x = x0;
    const cplx step = eps / aa;
    for (std::size_t c = 0; c < x.size(); ++c) x[c] += step * alpha[c];
    double scale = 0.0;
    const cplx u = eval_potential_scaled(config, x, scale, tol);
    const cplx u_mirror = eval_potential(config, reflect(alpha, x, tol), tol);
    const double d = std::abs(u - u_mirror);
    logs_eps[i] = std::log(eps);
    logs_d[i] = std::log(std::max(d, 1e-300));
    max_d = std::max(max_d, d);
    max_scale = std::max(max_scale, scale);
  }
  if (max_d <= 1e-13 * max_scale) return std::numeric_limits<double>::infinity();

  double mean_x = 0.0, mean_y = 0.0;
  for (int i = 0; i < 5; ++i) { mean_x += logs_eps[i]; mean_y += logs_d[i]; }
  mean_x /= 5.0;
  mean_y /= 5.0;
  double num = 0.0, den = 0.0;
  for (int i = 0; i < 5; ++i) {
    num += (logs_eps[i] - mean_x) * (logs_d[i] - mean_y);
    den += (logs_eps[i] - mean_x) * (logs_eps[i] - mean_x);
  }
  return num / den;
}

}  // namespace veelocus
