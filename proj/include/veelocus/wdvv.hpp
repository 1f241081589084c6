#pragma once

#include <cstdint>
#include <vector>

#include "veelocus/configuration.hpp"

namespace veelocus {

/// Pass threshold for the normalized WDVV residual: ~5 orders above the
/// observed residual of true solutions (~1e-12) and ~5 below observed
/// violations (~1e-1).
inline constexpr double kWdvvPassThreshold = 1e-8;

struct WdvvReport {
  bool overall = true;
  double max_residual = 0.0;
  std::size_t points = 0;
  std::size_t checks = 0;
  std::size_t dim = 0;
  std::size_t effective_dim = 0;
  std::vector<double> residuals;  // one per (i<j, k, point)
};

/// F(x) = sum_alpha w_alpha (alpha,x)^2 log (alpha,x)^2, principal branch.
cplx eval_prepotential(const Configuration& config, std::span<const cplx> x,
                       const Tolerance& tol = {});

/// Third-derivative matrix (F_m)_{pq} = sum_alpha 4 w_alpha
/// alpha_m alpha_p alpha_q / (alpha,x).
Matrix third_deriv_matrix(const Configuration& config, std::span<const cplx> x,
                          std::size_t m, const Tolerance& tol = {});

/// At each generic real sample point, for all i<j and every k, the normalized
/// residual of F_i F_k^{-1} F_j = F_j F_k^{-1} F_i. Reduces a non-spanning
/// configuration to its span first; dimension <= 2 passes vacuously.
WdvvReport check_wdvv(const Configuration& config, int num_points = 5,
                      std::uint64_t seed = 0, const Tolerance& tol = {});

}  // namespace veelocus
