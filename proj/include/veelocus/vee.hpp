#pragma once

#include <optional>
#include <vector>

#include "veelocus/configuration.hpp"
#include "veelocus/planes.hpp"

namespace veelocus {

/// Bilinear form G = sum_alpha w_alpha alpha (x) alpha, its inverse, and the
/// dual vectors alpha-vee = G^{-1} alpha.
struct VeeContext {
  Matrix G;
  Matrix G_inv;
  std::vector<Vec> duals;
  const Configuration* config = nullptr;
};

enum class VeePlaneCase { two_orthogonal, multi_proportional };

struct VeePlaneVerdict {
  std::size_t plane = 0;
  VeePlaneCase kind = VeePlaneCase::two_orthogonal;
  double residual = 0.0;
  std::optional<cplx> lambda;
  bool pass = true;
};

struct VeeReport {
  bool overall = true;
  std::size_t dim = 0;
  std::size_t effective_dim = 0;  // after span reduction
  bool real_field = true;
  std::vector<VeePlaneVerdict> per_plane;
};

/// Requires the covectors to span the space (DegenerateForm otherwise).
VeeContext build_context(const Configuration& config, const Tolerance& tol = {});

/// Two-member plane: pass iff beta(alpha-vee) = 0. Three or more members:
/// for each member, sum_beta w_b beta(alpha-vee) beta-vee must be parallel to
/// alpha-vee, cross-checked against proportionality of G and G_Pi restricted
/// to the dual plane; disagreement throws CrossCheckDisagreement.
VeePlaneVerdict check_vee_plane(const PlaneGroup& plane, std::size_t plane_id,
                                const VeeContext& ctx, const Tolerance& tol = {});

/// Reduces a non-spanning configuration to its span first (the verdict is
/// invariant under invertible linear maps), then aggregates plane verdicts.
VeeReport check_vee(const Configuration& config, const Tolerance& tol = {});

}  // namespace veelocus
