#include "veelocus/configuration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace veelocus {

namespace {

int symmetrized_mult(int m) { return std::max(m, -1 - m); }

Vec basis_vec(std::size_t dim, std::size_t i, cplx value = cplx{1.0, 0.0}) {
  Vec v(dim);
  v[i] = value;
  return v;
}

void push(Configuration& config, Vec v, int mult) {
  if (mult == 0) return;
  Entry e;
  e.vector = std::move(v);
  e.multiplicity = mult;
  config.entries.push_back(std::move(e));
}

}  // namespace

void validate(const Configuration& config, const Tolerance& tol) {
  for (std::size_t i = 0; i < config.entries.size(); ++i) {
    const Entry& e = config.entries[i];
    if (e.vector.size() != config.dim)
      throw InvariantViolation(config.label + ": entry " + std::to_string(i) +
                               " has wrong dimension");
    for (const cplx& c : e.vector)
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw InvariantViolation(config.label + ": non-finite coordinate");
    if (is_isotropic(e.vector, tol))
      throw InvariantViolation(config.label + ": isotropic vector at entry " +
                               std::to_string(i));
    if (config.kind == ConfigKind::locus && e.multiplicity < 1)
      throw InvariantViolation(config.label + ": non-positive multiplicity at entry " +
                               std::to_string(i));
  }
  for (std::size_t i = 0; i < config.entries.size(); ++i)
    for (std::size_t j = i + 1; j < config.entries.size(); ++j)
      if (collinear(config.entries[i].vector, config.entries[j].vector, tol))
        throw InvariantViolation(config.label + ": collinear entries " +
                                 std::to_string(i) + "," + std::to_string(j));
}

Configuration coxeter_positive_roots(CoxeterFamily family, std::size_t rank,
                                     const std::vector<int>& orbit_mults) {
  if (rank < 2) throw BadParameter("coxeter_positive_roots: rank must be >= 2");
  const auto need = [&](std::size_t n) {
    if (orbit_mults.size() != n)
      throw BadParameter("coxeter_positive_roots: expected " + std::to_string(n) +
                         " orbit multiplicities");
    for (int m : orbit_mults)
      if (m < 1) throw BadParameter("coxeter_positive_roots: multiplicities must be >= 1");
  };
  Configuration config;
  config.kind = ConfigKind::locus;
  std::ostringstream label;
  switch (family) {
    case CoxeterFamily::A: {
      need(1);
      config.dim = rank + 1;
      for (std::size_t i = 0; i < config.dim; ++i)
        for (std::size_t j = i + 1; j < config.dim; ++j) {
          Vec v(config.dim);
          v[i] = 1.0;
          v[j] = -1.0;
          push(config, std::move(v), orbit_mults[0]);
        }
      label << "A_" << rank << "(m=" << orbit_mults[0] << ")";
      break;
    }
    case CoxeterFamily::B:
    case CoxeterFamily::C: {
      need(2);
      config.dim = rank;
      for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = i + 1; j < rank; ++j)
          for (double s : {-1.0, 1.0}) {
            Vec v(rank);
            v[i] = 1.0;
            v[j] = s;
            push(config, std::move(v), orbit_mults[0]);
          }
      const double len = family == CoxeterFamily::B ? 1.0 : 2.0;
      for (std::size_t i = 0; i < rank; ++i)
        push(config, basis_vec(rank, i, cplx{len, 0.0}), orbit_mults[1]);
      label << (family == CoxeterFamily::B ? "B_" : "C_") << rank << "(k="
            << orbit_mults[0] << ",m=" << orbit_mults[1] << ")";
      break;
    }
    case CoxeterFamily::D: {
      need(1);
      if (rank < 3) throw BadParameter("coxeter_positive_roots: D needs rank >= 3");
      config.dim = rank;
      for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = i + 1; j < rank; ++j)
          for (double s : {-1.0, 1.0}) {
            Vec v(rank);
            v[i] = 1.0;
            v[j] = s;
            push(config, std::move(v), orbit_mults[0]);
          }
      label << "D_" << rank << "(m=" << orbit_mults[0] << ")";
      break;
    }
    default:
      throw UnknownFamily("coxeter_positive_roots: unknown family");
  }
  config.label = label.str();
  validate(config);
  return config;
}

Configuration a_n1(std::size_t n, int m) {
  if (n < 2) throw BadParameter("a_n1: n must be >= 2");
  if (m == 0 || m == -1) throw BadParameter("a_n1: m in {0,-1} degenerates the family");
  Configuration config;
  config.kind = ConfigKind::locus;
  config.dim = n + 1;
  const int mstar = symmetrized_mult(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v(config.dim);
      v[i] = 1.0;
      v[j] = -1.0;
      push(config, std::move(v), mstar);
    }
  const cplx root = sqrt_branch(static_cast<double>(m));
  for (std::size_t i = 0; i < n; ++i) {
    Vec v(config.dim);
    v[i] = 1.0;
    v[n] = -root;
    push(config, std::move(v), 1);
  }
  std::ostringstream label;
  label << "A_{" << n - 1 << ",1}(" << m << ")";
  config.label = label.str();
  validate(config);
  return config;
}

Configuration c_n1(std::size_t n, int m, int l) {
  if (n < 2) throw BadParameter("c_n1: n must be >= 2");
  if ((2 * m + 1) % (2 * l + 1) != 0)
    throw BadParameter("c_n1: (2l+1) must divide (2m+1)");
  const int k = (2 * m + 1) / (2 * l + 1);
  if (k == -1) throw BadParameter("c_n1: k = -1 makes the cross vectors isotropic");
  Configuration config;
  config.kind = ConfigKind::locus;
  config.dim = n + 1;
  const int kstar = symmetrized_mult(k);
  const int mstar = symmetrized_mult(m);
  const int lstar = symmetrized_mult(l);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (double s : {-1.0, 1.0}) {
        Vec v(config.dim);
        v[i] = 1.0;
        v[j] = s;
        push(config, std::move(v), kstar);
      }
  for (std::size_t i = 0; i < n; ++i)
    push(config, basis_vec(config.dim, i, cplx{2.0, 0.0}), mstar);
  const cplx root = sqrt_branch(static_cast<double>(k));
  for (std::size_t i = 0; i < n; ++i)
    for (double s : {-1.0, 1.0}) {
      Vec v(config.dim);
      v[i] = 1.0;
      v[n] = s * root;
      push(config, std::move(v), 1);
    }
  push(config, basis_vec(config.dim, n, 2.0 * root), lstar);
  std::ostringstream label;
  label << "C_{" << n << ",1}(" << m << "," << l << ")";
  config.label = label.str();
  validate(config);
  return config;
}

Configuration a_n2(std::size_t n, int m) {
  if (n < 2) throw BadParameter("a_n2: n must be >= 2");
  if (m < 1) throw BadParameter("a_n2: m must be >= 1");
  Configuration config;
  config.kind = ConfigKind::locus;
  config.dim = n + 2;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v(config.dim);
      v[i] = 1.0;
      v[j] = -1.0;
      push(config, std::move(v), m);
    }
  const cplx root_m = sqrt_branch(static_cast<double>(m));
  const cplx root_neg = sqrt_branch(static_cast<double>(-1 - m));
  for (std::size_t i = 0; i < n; ++i) {
    Vec v(config.dim);
    v[i] = 1.0;
    v[n] = -root_m;
    push(config, std::move(v), 1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vec v(config.dim);
    v[i] = 1.0;
    v[n + 1] = -root_neg;
    push(config, std::move(v), 1);
  }
  Vec cross(config.dim);
  cross[n] = root_m;
  cross[n + 1] = -root_neg;
  push(config, std::move(cross), 1);
  std::ostringstream label;
  label << "A_{" << n - 1 << ",2}(" << m << ")";
  config.label = label.str();
  validate(config);
  return config;
}

Hyperplane an2_containing_hyperplane(std::size_t n, int m) {
  if (n < 2 || m < 1) throw BadParameter("an2_containing_hyperplane: bad parameters");
  Vec normal(n + 2, cplx{1.0, 0.0});
  normal[n] = 1.0 / sqrt_branch(static_cast<double>(m));
  normal[n + 1] = 1.0 / sqrt_branch(static_cast<double>(-1 - m));
  return Hyperplane{std::move(normal)};
}

Configuration a_type_general(const std::vector<cplx>& mu,
                             const std::vector<std::vector<int>>& mult,
                             std::string label) {
  const std::size_t n = mu.size();
  if (n < 2) throw BadParameter("a_type_general: need at least two coordinates");
  if (mult.size() != n)
    throw BadParameter("a_type_general: multiplicity table must be n x n");
  for (const auto& row : mult)
    if (row.size() != n)
      throw BadParameter("a_type_general: multiplicity table must be n x n");
  for (const cplx& v : mu)
    if (std::abs(v) == 0.0) throw BadParameter("a_type_general: mu entries must be nonzero");
  Configuration config;
  config.kind = ConfigKind::locus;
  config.dim = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (mult[i][j] != mult[j][i])
        throw BadParameter("a_type_general: multiplicity table must be symmetric");
      if (mult[i][j] < 0) throw BadParameter("a_type_general: negative multiplicity");
      if (mult[i][j] == 0) continue;
      if (approx_zero(mu[i] * mu[i] + mu[j] * mu[j],
                      std::norm(mu[i]) + std::norm(mu[j])))
        throw IsotropicVector("a_type_general: mu_i^2 + mu_j^2 = 0");
      Vec v(n);
      v[i] = mu[i];
      v[j] = -mu[j];
      push(config, std::move(v), mult[i][j]);
    }
  config.label = label.empty() ? "A-type(general)" : std::move(label);
  validate(config);
  return config;
}

Configuration vee_An_c(const std::vector<double>& c) {
  const std::size_t n = c.size();
  if (n < 1) throw BadParameter("vee_An_c: empty parameter list");
  for (double v : c)
    if (v <= 0.0) throw BadParameter("vee_An_c: parameters must be positive");
  Configuration config;
  config.kind = ConfigKind::vee;
  config.dim = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v(n);
      v[i] = std::sqrt(c[i] * c[j]);
      v[j] = -std::sqrt(c[i] * c[j]);
      push(config, std::move(v), 1);
    }
  for (std::size_t i = 0; i < n; ++i)
    push(config, basis_vec(n, i, cplx{std::sqrt(c[i]), 0.0}), 1);
  config.label = "An(c)";
  validate(config);
  return config;
}

Configuration vee_Bn_c(double c0, const std::vector<double>& c) {
  const std::size_t n = c.size();
  if (n < 1) throw BadParameter("vee_Bn_c: empty parameter list");
  for (double v : c) {
    if (v <= 0.0) throw BadParameter("vee_Bn_c: c_i must be positive");
    if (v * (v + c0) <= 0.0)
      throw BadParameter("vee_Bn_c: c_i (c_i + c0) must be positive");
  }
  Configuration config;
  config.kind = ConfigKind::vee;
  config.dim = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (double s : {-1.0, 1.0}) {
        Vec v(n);
        v[i] = std::sqrt(c[i] * c[j]);
        v[j] = s * std::sqrt(c[i] * c[j]);
        push(config, std::move(v), 1);
      }
  for (std::size_t i = 0; i < n; ++i)
    push(config, basis_vec(n, i, cplx{std::sqrt(2.0 * c[i] * (c[i] + c0)), 0.0}), 1);
  config.label = "Bn(c)";
  validate(config);
  return config;
}

Configuration vee_A3_general(const std::array<cplx, 6>& mu) {
  for (const cplx& v : mu)
    if (std::abs(v) == 0.0) throw BadParameter("vee_A3_general: mu entries must be nonzero");
  Configuration config;
  config.kind = ConfigKind::vee;
  config.dim = 4;
  std::size_t idx = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      Vec v(4);
      v[i] = mu[idx];
      v[j] = -mu[idx];
      push(config, std::move(v), 1);
      ++idx;
    }
  config.label = "A3-type(mu)";
  validate(config);
  return config;
}

Configuration weighted_from_locus(const Configuration& config) {
  if (config.kind != ConfigKind::locus)
    throw BadParameter("weighted_from_locus: input must be locus kind");
  Configuration out;
  out.dim = config.dim;
  out.kind = ConfigKind::vee;
  out.label = "vee[" + config.label + "]";
  for (const Entry& e : config.entries) {
    Entry w;
    w.vector = e.vector;
    const double scale = std::sqrt(static_cast<double>(e.multiplicity));
    for (cplx& c : w.vector) c *= scale;
    w.multiplicity = 1;
    w.weight = cplx{1.0, 0.0};
    out.entries.push_back(std::move(w));
  }
  return out;
}

Configuration project_to_coordinate_zero(const Configuration& config,
                                         std::size_t coordinate,
                                         const Tolerance& tol) {
  if (config.kind != ConfigKind::vee)
    throw BadParameter("project_to_coordinate_zero: projection is only vee-legitimate");
  if (coordinate >= config.dim)
    throw BadParameter("project_to_coordinate_zero: coordinate out of range");
  Configuration out;
  out.dim = config.dim - 1;
  out.kind = ConfigKind::vee;
  out.label = config.label + "|proj";
  for (const Entry& e : config.entries) {
    Entry p;
    p.weight = e.weight;
    p.multiplicity = e.multiplicity;
    p.vector.reserve(out.dim);
    for (std::size_t c = 0; c < config.dim; ++c)
      if (c != coordinate) p.vector.push_back(e.vector[c]);
    if (herm_norm(p.vector) <= tol.rel_eps * herm_norm(e.vector)) continue;
    out.entries.push_back(std::move(p));
  }
  for (std::size_t i = 0; i < out.entries.size(); ++i)
    for (std::size_t j = i + 1; j < out.entries.size(); ++j)
      if (collinear(out.entries[i].vector, out.entries[j].vector, tol))
        throw CollinearityCollision("project_to_coordinate_zero: entries " +
                                    std::to_string(i) + "," + std::to_string(j) +
                                    " become collinear");
  validate(out, tol);
  return out;
}

namespace {

// Bilinear orthonormal basis of the hyperplane (normal,x)=0, by Gram-Schmidt
// on the standard basis with the normal component removed. Isotropic
// directions are skipped; on failure the candidate order is reseeded with
// random complex combinations.
std::vector<Vec> hyperplane_basis(const Vec& normal, const Tolerance& tol,
                                  std::uint64_t seed) {
  const std::size_t dim = normal.size();
  const cplx nn = bilinear(normal, normal);
  if (approx_zero(nn, herm_norm_sq(normal), tol))
    throw IsotropicVector("restrict_to_hyperplane: isotropic normal");

  std::vector<Vec> candidates;
  for (std::size_t i = 0; i < dim; ++i) {
    Vec v(dim);
    v[i] = 1.0;
    const cplx coef = -bilinear(normal, v) / nn;
    for (std::size_t c = 0; c < dim; ++c) v[c] += coef * normal[c];
    if (herm_norm(v) > 1e-12) candidates.push_back(std::move(v));
  }

  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<Vec> pool = candidates;
    if (attempt > 0) {
      Rng rng(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
      for (Vec& v : pool)
        for (cplx& c : v) c *= cplx{1.0 + 0.2 * rng.symmetric(), 0.2 * rng.symmetric()};
    }
    std::vector<Vec> basis;
    for (Vec w : pool) {
      for (const Vec& b : basis) {
        const cplx proj = bilinear(b, w);
        for (std::size_t c = 0; c < w.size(); ++c) w[c] -= proj * b[c];
      }
      const cplx ww = bilinear(w, w);
      if (approx_zero(ww, std::max(herm_norm_sq(w), 1e-8), tol)) continue;
      const cplx inv_len = 1.0 / std::sqrt(ww);
      for (cplx& c : w) c *= inv_len;
      basis.push_back(std::move(w));
      if (basis.size() == dim - 1) return basis;
    }
  }
  throw IsotropicDirection("restrict_to_hyperplane: could not build a basis");
}

}  // namespace

Configuration restrict_to_hyperplane(const Configuration& config,
                                     const Hyperplane& plane,
                                     const Tolerance& tol) {
  if (plane.normal.size() != config.dim)
    throw BadParameter("restrict_to_hyperplane: normal dimension mismatch");
  const double nscale = herm_norm(plane.normal);
  for (std::size_t i = 0; i < config.entries.size(); ++i) {
    const Vec& v = config.entries[i].vector;
    if (!approx_zero(bilinear(plane.normal, v), nscale * herm_norm(v) * 1e3, tol))
      throw VectorOffPlane("restrict_to_hyperplane: entry " + std::to_string(i) +
                           " is off the hyperplane");
  }
  const std::vector<Vec> basis = hyperplane_basis(plane.normal, tol, 0);
  Configuration out;
  out.dim = config.dim - 1;
  out.kind = config.kind;
  out.label = config.label + "|restricted";
  for (const Entry& e : config.entries) {
    Entry r;
    r.multiplicity = e.multiplicity;
    r.weight = e.weight;
    r.vector.resize(out.dim);
    for (std::size_t k = 0; k < basis.size(); ++k)
      r.vector[k] = bilinear(basis[k], e.vector);
    out.entries.push_back(std::move(r));
  }
  validate(out, tol);
  return out;
}

Configuration reduce_to_span(const Configuration& config, const Tolerance& tol) {
  const std::size_t rows = config.entries.size();
  const std::size_t dim = config.dim;
  // column-pivoted elimination on the entries-by-coordinates matrix
  std::vector<Vec> m(rows);
  double max_entry = 0.0;
  for (std::size_t r = 0; r < rows; ++r) {
    m[r] = config.entries[r].vector;
    for (const cplx& v : m[r]) max_entry = std::max(max_entry, std::abs(v));
  }
  const double threshold = 1e3 * tol.rel_eps * std::max(max_entry, tol.zero_scale_floor);
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < dim && row < rows; ++col) {
    std::size_t best_row = row;
    double best = 0.0;
    for (std::size_t r = row; r < rows; ++r) {
      const double mag = std::abs(m[r][col]);
      if (mag > best) { best = mag; best_row = r; }
    }
    if (best <= threshold) continue;
    std::swap(m[row], m[best_row]);
    const cplx inv_p = 1.0 / m[row][col];
    for (std::size_t c = 0; c < dim; ++c) m[row][c] *= inv_p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row) continue;
      const cplx f = m[r][col];
      if (f == cplx{0.0, 0.0}) continue;
      for (std::size_t c = 0; c < dim; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  if (pivot_cols.size() == dim) return config;

  Configuration out;
  out.dim = pivot_cols.size();
  out.kind = config.kind;
  out.label = config.label + "|span";
  for (const Entry& e : config.entries) {
    Entry p;
    p.multiplicity = e.multiplicity;
    p.weight = e.weight;
    p.vector.reserve(out.dim);
    for (std::size_t col : pivot_cols) p.vector.push_back(e.vector[col]);
    out.entries.push_back(std::move(p));
  }
  return out;
}

}  // namespace veelocus
