#include "veelocus/vee.hpp"

#include <algorithm>
#include <cmath>

#include "veelocus/kernels.hpp"

namespace veelocus {

namespace {

cplx pair_eval(const Vec& covector, const Vec& vector) {
  return bilinear(covector, vector);
}

bool config_is_real(const Configuration& config) {
  for (const Entry& e : config.entries) {
    for (const cplx& c : e.vector)
      if (std::abs(c.imag()) > 1e-14 * (1.0 + std::abs(c.real()))) return false;
    if (std::abs(e.weight.imag()) > 1e-14) return false;
  }
  return true;
}

}  // namespace

VeeContext build_context(const Configuration& config, const Tolerance& tol) {
  if (config.kind != ConfigKind::vee)
    throw BadParameter("build_context: configuration must be vee kind");
  const std::size_t n = config.dim;
  VeeContext ctx;
  ctx.config = &config;
  ctx.G = Matrix(n, n);
  for (const Entry& e : config.entries)
    kernels::active().rank1_update(e.weight, e.vector.data(), n, ctx.G.data.data());
  try {
    ctx.G_inv = invert(ctx.G, tol);
  } catch (const DegenerateMatrix&) {
    throw DegenerateForm(config.label + ": form G is degenerate");
  }
  ctx.duals.reserve(config.entries.size());
  for (const Entry& e : config.entries) ctx.duals.push_back(mat_vec(ctx.G_inv, e.vector));
  return ctx;
}

VeePlaneVerdict check_vee_plane(const PlaneGroup& plane, std::size_t plane_id,
                                const VeeContext& ctx, const Tolerance& tol) {
  const Configuration& config = *ctx.config;
  VeePlaneVerdict verdict;
  verdict.plane = plane_id;

  if (plane.members.size() == 2) {
    verdict.kind = VeePlaneCase::two_orthogonal;
    const std::size_t a = plane.members[0];
    const std::size_t b = plane.members[1];
    const Vec& beta = config.entries[b].vector;
    const Vec& dual_a = ctx.duals[a];
    const cplx value = bilinear(beta, dual_a);
    // the dual carries inversion noise of order eps * |beta| * |dual|, so the
    // pairing is judged against that magnitude, not against its own terms
    const double scale = herm_norm(beta) * herm_norm(dual_a);
    verdict.residual = scale > 0.0 ? std::abs(value) / scale : 0.0;
    verdict.pass = approx_zero(value, scale, tol);
    return verdict;
  }

  verdict.kind = VeePlaneCase::multi_proportional;
  const std::size_t n = config.dim;

  // eigenvector form: r = sum_{beta in plane} w_b beta(alpha-vee) beta-vee
  // must be parallel to alpha-vee for every member alpha
  bool expl_pass = true;
  double worst_residual = 0.0;
  for (std::size_t pivot : plane.members) {
    const Vec& dual_pivot = ctx.duals[pivot];
    Vec r(n, cplx{0.0, 0.0});
    double term_scale = 0.0;
    for (std::size_t member : plane.members) {
      const Entry& e = config.entries[member];
      const cplx coef = e.weight * pair_eval(e.vector, dual_pivot);
      const Vec& dual = ctx.duals[member];
      for (std::size_t c = 0; c < n; ++c) r[c] += coef * dual[c];
      term_scale += std::abs(e.weight) * herm_norm(e.vector) * herm_norm(dual_pivot) *
                    herm_norm(dual);
    }
    cplx lambda;
    const cplx dd = bilinear(dual_pivot, dual_pivot);
    if (!approx_zero(dd, herm_norm_sq(dual_pivot), tol)) {
      lambda = bilinear(r, dual_pivot) / dd;
    } else {
      // isotropic dual (possible over C): largest-coordinate ratio
      std::size_t p = 0;
      double best = 0.0;
      for (std::size_t c = 0; c < n; ++c)
        if (std::abs(dual_pivot[c]) > best) { best = std::abs(dual_pivot[c]); p = c; }
      lambda = r[p] / dual_pivot[p];
    }
    double residual = 0.0;
    for (std::size_t c = 0; c < n; ++c)
      residual = std::max(residual, std::abs(r[c] - lambda * dual_pivot[c]));
    const double scale =
        std::max(term_scale, std::abs(lambda) * herm_norm(dual_pivot));
    worst_residual = std::max(worst_residual, scale > 0.0 ? residual / scale : 0.0);
    if (!approx_zero(cplx{residual, 0.0}, scale, tol)) expl_pass = false;
  }

  // restriction form: G and G_Pi restricted to the dual plane are proportional
  const Vec& u0 = ctx.duals[plane.members[0]];
  const Vec& u1 = ctx.duals[plane.members[1]];
  cplx M[2][2], MP[2][2];
  const Vec* basis[2] = {&u0, &u1};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const Vec gu = mat_vec(ctx.G, *basis[b]);
      M[a][b] = bilinear(*basis[a], gu);
      cplx acc{0.0, 0.0};
      for (std::size_t member : plane.members) {
        const Entry& e = config.entries[member];
        acc += e.weight * pair_eval(e.vector, *basis[a]) * pair_eval(e.vector, *basis[b]);
      }
      MP[a][b] = acc;
    }
  double m_norm = 0.0, mp_norm = 0.0;
  int pa = 0, pb = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      if (std::abs(M[a][b]) > m_norm) { m_norm = std::abs(M[a][b]); pa = a; pb = b; }
      mp_norm = std::max(mp_norm, std::abs(MP[a][b]));
    }
  cplx lambda_plane{0.0, 0.0};
  if (m_norm > 0.0) lambda_plane = MP[pa][pb] / M[pa][pb];
  double restr_residual = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      restr_residual = std::max(restr_residual, std::abs(MP[a][b] - lambda_plane * M[a][b]));
  double plane_mass = 0.0;
  for (std::size_t member : plane.members) {
    const Entry& e = config.entries[member];
    plane_mass += std::abs(e.weight) * herm_norm_sq(e.vector);
  }
  const double umax2 = std::max(herm_norm_sq(u0), herm_norm_sq(u1));
  const double restr_scale =
      std::max({mp_norm, std::abs(lambda_plane) * m_norm, plane_mass * umax2});
  const bool restr_pass = approx_zero(cplx{restr_residual, 0.0}, restr_scale, tol);

  if (expl_pass != restr_pass)
    throw CrossCheckDisagreement(config.label + ": eigenvector and restriction forms disagree on plane " +
                                 std::to_string(plane_id));

  verdict.lambda = lambda_plane;
  verdict.residual = worst_residual;
  verdict.pass = expl_pass;
  return verdict;
}

VeeReport check_vee(const Configuration& config, const Tolerance& tol) {
  if (config.kind != ConfigKind::vee)
    throw BadParameter("check_vee: configuration must be vee kind");
  VeeReport report;
  report.dim = config.dim;
  const Configuration reduced = reduce_to_span(config, tol);
  report.effective_dim = reduced.dim;
  report.real_field = config_is_real(reduced);

  const VeeContext ctx = build_context(reduced, tol);
  const std::vector<PlaneGroup> planes = enumerate_planes(reduced, tol);
  for (std::size_t p = 0; p < planes.size(); ++p) {
    VeePlaneVerdict verdict = check_vee_plane(planes[p], p, ctx, tol);
    if (!verdict.pass) report.overall = false;
    report.per_plane.push_back(std::move(verdict));
  }
  return report;
}

}  // namespace veelocus
