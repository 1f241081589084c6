#include "veelocus/planes.hpp"

#include <algorithm>
#include <cmath>

namespace veelocus {

bool coplanar_triple(std::span<const cplx> a, std::span<const cplx> b,
                     std::span<const cplx> c, const Tolerance& tol) {
  const std::size_t dim = a.size();
  double max_minor = 0.0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = j + 1; k < dim; ++k) {
        const cplx det = a[i] * (b[j] * c[k] - b[k] * c[j]) -
                         a[j] * (b[i] * c[k] - b[k] * c[i]) +
                         a[k] * (b[i] * c[j] - b[j] * c[i]);
        max_minor = std::max(max_minor, std::abs(det));
      }
  double norms[3] = {herm_norm(a), herm_norm(b), herm_norm(c)};
  std::sort(norms, norms + 3);
  const double scale = norms[1] * norms[2];
  return max_minor <= 1e3 * tol.rel_eps * std::max(scale, tol.zero_scale_floor);
}

std::vector<PlaneGroup> enumerate_planes(const Configuration& config,
                                         const Tolerance& tol) {
  const std::size_t n = config.entries.size();
  std::vector<std::vector<bool>> covered(n, std::vector<bool>(n, false));
  std::vector<PlaneGroup> planes;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (covered[i][j]) continue;
      PlaneGroup group;
      group.basis_a = i;
      group.basis_b = j;
      group.members = {i, j};
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (coplanar_triple(config.entries[i].vector, config.entries[j].vector,
                            config.entries[k].vector, tol))
          group.members.push_back(k);
      }
      std::sort(group.members.begin(), group.members.end());
      for (std::size_t a = 0; a < group.members.size(); ++a)
        for (std::size_t b = a + 1; b < group.members.size(); ++b)
          covered[group.members[a]][group.members[b]] = true;
      planes.push_back(std::move(group));
    }
  }
  std::sort(planes.begin(), planes.end(),
            [](const PlaneGroup& a, const PlaneGroup& b) { return a.members < b.members; });
  return planes;
}

std::vector<std::pair<std::size_t, cplx>> transversal_coefficients(
    const PlaneGroup& plane, std::size_t pivot, const Configuration& config,
    const Tolerance& tol) {
  if (std::find(plane.members.begin(), plane.members.end(), pivot) == plane.members.end())
    throw BadParameter("transversal_coefficients: pivot not a plane member");
  const Vec& alpha = config.entries[pivot].vector;
  const cplx aa = bilinear(alpha, alpha);
  if (approx_zero(aa, herm_norm_sq(alpha), tol))
    throw IsotropicVector("transversal_coefficients: isotropic pivot");

  const std::size_t ref = pivot == plane.basis_a ? plane.basis_b : plane.basis_a;
  const Vec& b = config.entries[ref].vector;
  Vec tau = b;
  const cplx coef = -bilinear(alpha, b) / aa;
  for (std::size_t c = 0; c < tau.size(); ++c) tau[c] += coef * alpha[c];
  const cplx tt = bilinear(tau, tau);
  if (!approx_zero(tt, herm_norm_sq(tau), tol)) {
    // normalize where possible; an isotropic in-plane complement (possible
    // over C) keeps the unnormalized transversal
    const cplx inv_len = 1.0 / std::sqrt(tt);
    for (cplx& c : tau) c *= inv_len;
  }

  // best-conditioned 2x2 coordinate subsystem of [alpha tau]
  std::size_t p = 0, q = 1;
  double best = 0.0;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (std::size_t j = i + 1; j < alpha.size(); ++j) {
      const double mag = std::abs(alpha[i] * tau[j] - alpha[j] * tau[i]);
      if (mag > best) { best = mag; p = i; q = j; }
    }
  const cplx det = alpha[p] * tau[q] - alpha[q] * tau[p];
  if (std::abs(det) == 0.0)
    throw Error("transversal_coefficients: degenerate plane basis");

  std::vector<std::pair<std::size_t, cplx>> result;
  for (std::size_t member : plane.members) {
    if (member == pivot) continue;
    const Vec& beta = config.entries[member].vector;
    const cplx s = (beta[p] * tau[q] - beta[q] * tau[p]) / det;
    const cplx t = (alpha[p] * beta[q] - alpha[q] * beta[p]) / det;
    // in-plane decomposition must reconstruct beta
    double residual = 0.0;
    for (std::size_t c = 0; c < beta.size(); ++c)
      residual = std::max(residual, std::abs(beta[c] - s * alpha[c] - t * tau[c]));
    if (residual > 1e-6 * std::max(1.0, herm_norm(beta)))
      throw Error("transversal_coefficients: member outside plane span");
    result.emplace_back(member, t);
  }
  return result;
}

}  // namespace veelocus
