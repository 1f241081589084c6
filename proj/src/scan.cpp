#include "veelocus/scan.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "veelocus/locus.hpp"
#include "veelocus/vee.hpp"
#include "veelocus/wdvv.hpp"

namespace veelocus {

namespace {

double mm1(int m) { return static_cast<double>(m) * (m + 1.0); }

cplx pow_odd(cplx base, int exponent) {
  cplx r{1.0, 0.0};
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

// Locus conditions of the three-vector system in squared variables, a^2 = 1:
//   pivot alpha (mult m), s=1..m: l(l+1)(B+C)(-B)^{2s-1} + k(k+1)(1+C) = 0
//   pivot beta  (mult l), s=1..l: m(m+1)(1+B)(-B)^{2s-1} + k(k+1)(1+C)C^{2s-1} = 0
//   pivot gamma (mult k), s=1..k: m(m+1)(1+B) - l(l+1)(B+C)C^{2s-1} = 0
bool three_vector_conditions_hold(cplx B, cplx C, int m, int l, int k,
                                  const Tolerance& tol) {
  const cplx one{1.0, 0.0};
  // non-isotropy of the realized vectors
  const double qscale = 1.0 + std::abs(B) + std::abs(C);
  if (std::abs(one + B) < 1e-8 * qscale) return false;
  if (std::abs(B + C) < 1e-8 * qscale) return false;
  if (std::abs(one + C) < 1e-8 * qscale) return false;

  const auto ok = [&](cplx t1, cplx t2) {
    return approx_zero(t1 + t2, std::abs(t1) + std::abs(t2), tol);
  };
  for (int s = 1; s <= m; ++s)
    if (!ok(mm1(l) * (B + C) * pow_odd(-B, 2 * s - 1), mm1(k) * (one + C))) return false;
  for (int s = 1; s <= l; ++s)
    if (!ok(mm1(m) * (one + B) * pow_odd(-B, 2 * s - 1),
            mm1(k) * (one + C) * pow_odd(C, 2 * s - 1)))
      return false;
  for (int s = 1; s <= k; ++s)
    if (!ok(mm1(m) * (one + B), -mm1(l) * (B + C) * pow_odd(C, 2 * s - 1))) return false;
  return true;
}

Configuration realize_three_vector(cplx B, cplx C, int m, int l, int k) {
  const std::vector<cplx> mu = {cplx{1.0, 0.0}, std::sqrt(B), std::sqrt(C)};
  std::vector<std::vector<int>> mult(3, std::vector<int>(3, 0));
  mult[0][1] = mult[1][0] = m;
  mult[1][2] = mult[2][1] = l;
  mult[0][2] = mult[2][0] = k;
  std::ostringstream label;
  label << "three-vector(" << m << "," << l << "," << k << ")";
  return a_type_general(mu, mult, label.str());
}

std::pair<cplx, cplx> quadratic_roots(cplx a, cplx b, cplx c) {
  const cplx disc = std::sqrt(b * b - 4.0 * a * c);
  return {(-b + disc) / (2.0 * a), (-b - disc) / (2.0 * a)};
}

bool near(cplx a, cplx b, double tol_abs) { return std::abs(a - b) <= tol_abs; }

}  // namespace

ScanResult solve_three_vector(int m, int l, int k, const Tolerance& tol) {
  if (m < 1 || l < 1 || k < 1)
    throw BadParameter("solve_three_vector: multiplicities must be >= 1");
  ScanResult result;
  {
    std::ostringstream q;
    q << "three-vector multiplicities (" << m << "," << l << "," << k << ")";
    result.query = q.str();
  }
  const cplx one{1.0, 0.0};

  std::vector<std::pair<cplx, cplx>> candidates;
  candidates.emplace_back(one, one);  // Coxeter point
  {
    // heavy alpha: B = 1; k(k+1) C^2 + k(k+1) C - 2 m(m+1) = 0
    auto [r1, r2] = quadratic_roots(cplx{mm1(k), 0}, cplx{mm1(k), 0}, cplx{-2.0 * mm1(m), 0});
    candidates.emplace_back(one, r1);
    candidates.emplace_back(one, r2);
  }
  {
    // heavy beta: C = B; 2 l(l+1) B^2 - k(k+1) B - k(k+1) = 0
    auto [r1, r2] = quadratic_roots(cplx{2.0 * mm1(l), 0}, cplx{-mm1(k), 0}, cplx{-mm1(k), 0});
    candidates.emplace_back(r1, r1);
    candidates.emplace_back(r2, r2);
  }
  {
    // heavy gamma: C = 1; l(l+1) B^2 + l(l+1) B - 2 k(k+1) = 0
    auto [r1, r2] = quadratic_roots(cplx{mm1(l), 0}, cplx{mm1(l), 0}, cplx{-2.0 * mm1(k), 0});
    candidates.emplace_back(r1, one);
    candidates.emplace_back(r2, one);
  }

  // isotropic conic 1 + B + C = 0, probed at generic representatives
  bool conic_solves = true;
  const double conic_samples[3] = {0.7, -2.3, 1.9};
  for (double t : conic_samples) {
    const cplx B{t, 0.0};
    const cplx C = -one - B;
    if (!three_vector_conditions_hold(B, C, m, l, k, tol)) { conic_solves = false; break; }
    const Configuration config = realize_three_vector(B, C, m, l, k);
    if (!check_locus(config, 2, 11, tol).overall) { conic_solves = false; break; }
  }

  std::vector<ThreeVectorSolution> kept;
  for (const auto& [B, C] : candidates) {
    if (!std::isfinite(B.real()) || !std::isfinite(C.real())) continue;
    if (!three_vector_conditions_hold(B, C, m, l, k, tol)) continue;
    const Configuration config = realize_three_vector(B, C, m, l, k);
    if (!check_locus(config, 2, 11, tol).overall) continue;
    if (conic_solves && std::abs(one + B + C) <= 1e-8 * (1.0 + std::abs(B) + std::abs(C)))
      continue;  // absorbed into the conic family
    ThreeVectorSolution sol;
    if (near(B, one, 1e-8) && near(C, one, 1e-8)) {
      sol.kind = ThreeVectorSolution::Kind::coxeter;
      sol.b2 = sol.c2 = one;
    } else {
      sol.kind = ThreeVectorSolution::Kind::discrete;
      sol.b2 = B;
      sol.c2 = C;
    }
    bool duplicate = false;
    for (const ThreeVectorSolution& other : kept)
      if (near(sol.b2, other.b2, 1e-8) && near(sol.c2, other.c2, 1e-8)) duplicate = true;
    if (!duplicate) kept.push_back(sol);
  }
  if (conic_solves) {
    ThreeVectorSolution sol;
    sol.kind = ThreeVectorSolution::Kind::isotropic_conic;
    sol.b2 = cplx{0.7, 0.0};
    sol.c2 = -one - sol.b2;
    kept.push_back(sol);
  }

  std::sort(kept.begin(), kept.end(), [](const ThreeVectorSolution& a,
                                         const ThreeVectorSolution& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    const auto key = [](const ThreeVectorSolution& s) {
      return std::make_tuple(s.b2.real(), s.b2.imag(), s.c2.real(), s.c2.imag());
    };
    return key(a) < key(b);
  });
  result.solutions = std::move(kept);
  return result;
}

bool matches_a_type_family(const std::vector<cplx>& mu,
                           const std::vector<std::vector<int>>& mult,
                           double pattern_tol) {
  const std::size_t n = mu.size();
  std::vector<cplx> q(n);
  double qscale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    q[i] = mu[i] * mu[i];
    qscale = std::max(qscale, std::abs(q[i]));
  }
  const double tol_abs = pattern_tol * qscale;
  const auto q_equal = [&](std::size_t i, std::size_t j) {
    return std::abs(q[i] - q[j]) <= tol_abs;
  };
  const auto table_is = [&](std::size_t i, std::size_t j, int v) {
    return mult[i][j] == v;
  };

  // (1) all mu equal, uniform table
  {
    bool uniform_q = true;
    bool uniform_t = true;
    const int t0 = mult[0][1];
    for (std::size_t i = 0; i < n && (uniform_q || uniform_t); ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!q_equal(i, j)) uniform_q = false;
        if (!table_is(i, j, t0)) uniform_t = false;
      }
    if (uniform_q && uniform_t) return true;
  }

  // (2)/(3) one special coordinate sp with unit multiplicities to it
  for (std::size_t sp = 0; sp < n; ++sp) {
    bool base_equal = true;
    int base_mult = -1;
    bool table_ok = true;
    cplx base_q{0.0, 0.0};
    bool first = true;
    for (std::size_t i = 0; i < n && table_ok; ++i) {
      if (i == sp) continue;
      if (first) { base_q = q[i]; first = false; }
      if (std::abs(q[i] - base_q) > tol_abs) base_equal = false;
      if (!table_is(i, sp, 1)) table_ok = false;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (j == sp) continue;
        if (base_mult < 0) base_mult = mult[i][j];
        if (!table_is(i, j, base_mult)) table_ok = false;
      }
    }
    if (!base_equal || !table_ok) continue;
    if (base_mult < 0) base_mult = 1;  // n = 2: no base pair constrains m
    const double mv = static_cast<double>(base_mult);
    if (std::abs(q[sp] - mv * base_q) <= tol_abs) return true;
    if (std::abs(q[sp] - (-1.0 - mv) * base_q) <= tol_abs) return true;
    // n = 2 leaves m unconstrained by the table; accept any integer ratio
    if (n == 2) {
      const cplx ratio = q[sp] / base_q;
      if (std::abs(ratio.imag()) <= pattern_tol) {
        const double r = ratio.real();
        if (std::abs(r - std::round(r)) <= pattern_tol &&
            (std::round(r) >= 1.0 || std::round(r) <= -2.0))
          return true;
      }
    }
  }

  // (4) two special coordinates carrying m and -1-m
  for (std::size_t sp1 = 0; sp1 < n; ++sp1)
    for (std::size_t sp2 = 0; sp2 < n; ++sp2) {
      if (sp1 == sp2) continue;
      bool base_equal = true;
      int base_mult = -1;
      bool table_ok = true;
      cplx base_q{0.0, 0.0};
      bool first = true;
      for (std::size_t i = 0; i < n && table_ok; ++i) {
        if (i == sp1 || i == sp2) continue;
        if (first) { base_q = q[i]; first = false; }
        if (std::abs(q[i] - base_q) > tol_abs) base_equal = false;
        if (!table_is(std::min(i, sp1), std::max(i, sp1), 1)) table_ok = false;
        if (!table_is(std::min(i, sp2), std::max(i, sp2), 1)) table_ok = false;
        for (std::size_t j = i + 1; j < n; ++j) {
          if (j == sp1 || j == sp2) continue;
          if (base_mult < 0) base_mult = mult[i][j];
          if (!table_is(i, j, base_mult)) table_ok = false;
        }
      }
      if (!table_is(std::min(sp1, sp2), std::max(sp1, sp2), 1)) table_ok = false;
      if (first || !base_equal || !table_ok) continue;
      if (base_mult < 0) base_mult = 1;
      const double mv = static_cast<double>(base_mult);
      if (std::abs(q[sp1] - mv * base_q) <= tol_abs &&
          std::abs(q[sp2] - (-1.0 - mv) * base_q) <= tol_abs)
        return true;
    }

  // (5) n = 3, unit table, isotropic sum
  if (n == 3 && mult[0][1] == 1 && mult[0][2] == 1 && mult[1][2] == 1) {
    if (std::abs(q[0] + q[1] + q[2]) <=
        pattern_tol * (std::abs(q[0]) + std::abs(q[1]) + std::abs(q[2])))
      return true;
  }
  return false;
}

namespace {

struct FamilyInstance {
  std::vector<cplx> mu;
  std::vector<std::vector<int>> mult;
  std::string label;
};

std::vector<FamilyInstance> theorem1_families(std::size_t n, int max_m,
                                              std::uint64_t seed) {
  std::vector<FamilyInstance> out;
  const auto uniform_table = [&](int v) {
    return std::vector<std::vector<int>>(n, std::vector<int>(n, v));
  };
  for (int m = 1; m <= max_m; ++m) {
    {
      FamilyInstance f;
      f.mu.assign(n, cplx{1.0, 0.0});
      f.mult = uniform_table(m);
      f.label = "family1(m=" + std::to_string(m) + ")";
      out.push_back(std::move(f));
    }
    for (int variant = 0; variant < 2; ++variant) {
      FamilyInstance f;
      f.mu.assign(n, cplx{1.0, 0.0});
      f.mu[n - 1] = variant == 0 ? sqrt_branch(static_cast<double>(m))
                                 : sqrt_branch(static_cast<double>(-1 - m));
      f.mult = uniform_table(m);
      for (std::size_t i = 0; i + 1 < n; ++i) f.mult[i][n - 1] = f.mult[n - 1][i] = 1;
      f.label = (variant == 0 ? "family2(m=" : "family3(m=") + std::to_string(m) + ")";
      out.push_back(std::move(f));
    }
    if (n >= 3) {
      FamilyInstance f;
      f.mu.assign(n, cplx{1.0, 0.0});
      f.mu[n - 2] = sqrt_branch(static_cast<double>(m));
      f.mu[n - 1] = sqrt_branch(static_cast<double>(-1 - m));
      f.mult = uniform_table(m);
      for (std::size_t i = 0; i < n; ++i) {
        f.mult[i][n - 1] = f.mult[n - 1][i] = 1;
        f.mult[i][n - 2] = f.mult[n - 2][i] = 1;
      }
      f.label = "family4(m=" + std::to_string(m) + ")";
      out.push_back(std::move(f));
    }
  }
  if (n == 3) {
    Rng rng(mix_seed(seed, 555));
    for (int i = 0; i < 3; ++i) {
      const double r = 0.5 + rng.uniform();
      FamilyInstance f;
      f.mu = {cplx{1.0, 0.0}, cplx{r, 0.0}, cplx{0.0, std::sqrt(1.0 + r * r)}};
      f.mult = uniform_table(1);
      f.label = "family5(r=" + std::to_string(r) + ")";
      out.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace

ScanResult scan_theorem1(std::size_t n, int max_m, int perturbations,
                         std::uint64_t seed, const Tolerance& tol) {
  if (n < 3) throw BadParameter("scan_theorem1: n must be >= 3");
  ScanResult result;
  {
    std::ostringstream q;
    q << "A-type classification n=" << n << " max_m=" << max_m;
    result.query = q.str();
  }
  const std::vector<FamilyInstance> families = theorem1_families(n, max_m, seed);
  result.expected_pass = families.size();
  for (const FamilyInstance& f : families) {
    const Configuration config = a_type_general(f.mu, f.mult, f.label);
    if (check_locus(config, 2, mix_seed(seed, 1), tol).overall)
      ++result.observed_pass;
    else
      ++result.counterexample_count;
  }

  result.expected_fail = static_cast<std::size_t>(perturbations);
  Rng rng(mix_seed(seed, 9009));
  for (int p = 0; p < perturbations; ++p) {
    const FamilyInstance& base = families[p % families.size()];
    std::vector<cplx> mu;
    bool found = false;
    for (int attempt = 0; attempt < 100 && !found; ++attempt) {
      mu = base.mu;
      for (cplx& v : mu) {
        const double mag = 0.02 + 0.03 * rng.uniform();
        const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
        v *= (1.0 + sign * mag);
      }
      if (!matches_a_type_family(mu, base.mult)) found = true;
    }
    if (!found) { ++result.counterexample_count; continue; }
    const Configuration config = a_type_general(mu, base.mult, base.label + "|perturbed");
    if (!check_locus(config, 0, 0, tol).overall)
      ++result.observed_fail;
    else
      ++result.counterexample_count;
  }
  result.ok = result.counterexample_count == 0 &&
              result.observed_pass == result.expected_pass &&
              result.observed_fail == result.expected_fail;
  return result;
}

ScanResult scan_prop3(int samples, std::uint64_t seed, const Tolerance& tol) {
  if (samples < 0) throw BadParameter("scan_prop3: samples must be >= 0");
  ScanResult result;
  result.query = "A3-type vee-condition discrimination, " + std::to_string(samples) +
                 "+" + std::to_string(samples) + " samples";
  result.expected_pass = static_cast<std::size_t>(samples);
  result.expected_fail = static_cast<std::size_t>(samples);
  for (int i = 0; i < samples; ++i) {
    Rng rng(mix_seed(seed, 31 * i + 1));
    double c[4];
    for (double& v : c) v = 0.3 + 2.7 * rng.uniform();
    const std::array<cplx, 6> mu = {
        cplx{std::sqrt(c[0] * c[1]), 0.0}, cplx{std::sqrt(c[0] * c[2]), 0.0},
        cplx{std::sqrt(c[0] * c[3]), 0.0}, cplx{std::sqrt(c[1] * c[2]), 0.0},
        cplx{std::sqrt(c[1] * c[3]), 0.0}, cplx{std::sqrt(c[2] * c[3]), 0.0}};
    if (check_vee(vee_A3_general(mu), tol).overall)
      ++result.observed_pass;
    else
      ++result.counterexample_count;

    std::array<cplx, 6> bad = mu;
    const double factor = 1.05 + 0.45 * rng.uniform();
    bad[static_cast<std::size_t>(i) % 6] *= factor;
    if (!check_vee(vee_A3_general(bad), tol).overall)
      ++result.observed_fail;
    else
      ++result.counterexample_count;
  }
  result.ok = result.counterexample_count == 0;
  return result;
}

ScanResult scan_prop2(int max_m, const std::vector<std::size_t>& n_range,
                      std::uint64_t seed, const Tolerance& tol) {
  if (max_m < 2) throw BadParameter("scan_prop2: max_m must be >= 2");
  ScanResult result;
  result.query = "projected a_n2 systems, m = 1.." + std::to_string(max_m);
  for (std::size_t n : n_range) {
    for (int m = 1; m <= max_m; ++m) {
      const Configuration projected = project_to_coordinate_zero(
          weighted_from_locus(a_n2(n, m)), n + 1, tol);
      ScanResult::Prop2Row row;
      row.n = n;
      row.m = m;
      row.expected_pass = m == 1;
      row.vee_pass = check_vee(projected, tol).overall;
      const WdvvReport wdvv = check_wdvv(projected, 5, seed, tol);
      row.wdvv_pass = wdvv.overall;
      row.wdvv_residual = wdvv.max_residual;
      if (row.vee_pass != row.expected_pass || row.wdvv_pass != row.expected_pass)
        ++result.counterexample_count;
      if (row.expected_pass) {
        ++result.expected_pass;
        if (row.vee_pass && row.wdvv_pass) ++result.observed_pass;
      } else {
        ++result.expected_fail;
        if (!row.vee_pass && !row.wdvv_pass) ++result.observed_fail;
      }
      result.prop2_rows.push_back(row);
    }
  }
  result.ok = result.counterexample_count == 0;
  return result;
}

}  // namespace veelocus
