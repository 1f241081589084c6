#pragma once

#include <cstdint>
#include <vector>

#include "veelocus/configuration.hpp"
#include "veelocus/planes.hpp"

namespace veelocus {

struct LocusCondition {
  std::size_t plane = 0;
  std::size_t pivot = 0;
  int s = 1;
  double residual = 0.0;
  double scale = 0.0;
  bool pass = true;
};

struct LocusOracleRecord {
  std::size_t pivot = 0;
  int point = 0;
  int s = 1;
  double residual = 0.0;
  double scale = 0.0;
  bool pass = true;
};

struct LocusReport {
  bool overall = true;
  std::size_t plane_count = 0;
  std::vector<LocusCondition> per_condition;
  std::vector<LocusOracleRecord> oracle;
};

/// u(x) = sum_alpha m(m+1)(alpha,alpha)/(alpha,x)^2. Throws OnHyperplane when
/// some |(alpha,x)| falls below tolerance scale.
cplx eval_potential(const Configuration& config, std::span<const cplx> x,
                    const Tolerance& tol = {});

/// Same sum with the per-term magnitudes accumulated into scale.
cplx eval_potential_scaled(const Configuration& config, std::span<const cplx> x,
                           double& scale, const Tolerance& tol = {});

/// In-plane locus conditions for one pivot: for s = 1..m_pivot,
///   sum_{beta in plane, beta != pivot}
///     m_b(m_b+1)(beta,beta)(alpha,beta)^{2s-1} / t_beta^{2s+1}  == 0.
std::vector<LocusCondition> check_locus_plane(const PlaneGroup& plane,
                                              std::size_t plane_id, std::size_t pivot,
                                              const Configuration& config,
                                              const Tolerance& tol = {});

/// Plane conditions for every (plane, pivot) are the verdict authority; the
/// sampling oracle evaluates the full-space sums at generic points of each
/// pivot hyperplane and must agree (CrossCheckDisagreement otherwise).
LocusReport check_locus(const Configuration& config, int oracle_samples = 5,
                        std::uint64_t seed = 0, const Tolerance& tol = {});

/// Log-log slope of |u(x) - u(s_alpha x)| along x(eps) = x0 + eps*alpha/(alpha,alpha)
/// over eps in [1e-3, 1e-1]. Returns +infinity when the difference vanishes
/// identically (the reflection is an exact symmetry of the potential).
double decay_order_slope(const Configuration& config, std::size_t pivot,
                         std::uint64_t seed = 0, const Tolerance& tol = {});

}  // namespace veelocus
