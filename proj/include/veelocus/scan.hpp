#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "veelocus/configuration.hpp"

namespace veelocus {

struct ThreeVectorSolution {
  enum class Kind { coxeter, discrete, isotropic_conic };
  Kind kind = Kind::discrete;
  // squared parameters normalized to a^2 = 1; for the conic a representative
  // point with 1 + b^2 + c^2 = 0
  cplx b2{0.0, 0.0};
  cplx c2{0.0, 0.0};
};

struct ScanResult {
  std::string query;
  std::vector<ThreeVectorSolution> solutions;  // three-vector classification

  struct Prop2Row {
    std::size_t n = 0;
    int m = 0;
    bool vee_pass = false;
    bool wdvv_pass = false;
    double wdvv_residual = 0.0;
    bool expected_pass = false;
  };
  std::vector<Prop2Row> prop2_rows;

  std::size_t expected_pass = 0;
  std::size_t observed_pass = 0;
  std::size_t expected_fail = 0;
  std::size_t observed_fail = 0;
  std::size_t counterexample_count = 0;
  bool ok = true;
};

/// Locus classification of the three-vector system {a e1 - b e2, b e2 - c e3,
/// a e1 - c e3} with multiplicities (m, l, k): candidate branches from the
/// case analysis, numeric root-finding on the residual polynomials, every
/// candidate filtered by the full condition set and re-verified by
/// check_locus on the realized configuration.
ScanResult solve_three_vector(int m, int l, int k, const Tolerance& tol = {});

/// Builds all five families of the A-type classification for parameters up
/// to max_m, asserts check_locus passes, and asserts seeded 5% perturbations
/// of mu (resampled out of every family pattern) all fail.
ScanResult scan_theorem1(std::size_t n, int max_m, int perturbations = 40,
                         std::uint64_t seed = 0, const Tolerance& tol = {});

/// A_3-type covectors: product-condition-satisfying tuples must pass
/// check_vee, violating tuples must fail.
ScanResult scan_prop3(int samples, std::uint64_t seed = 0, const Tolerance& tol = {});

/// Projected weighted systems from a_n2: check_vee and check_wdvv must pass
/// iff m = 1.
ScanResult scan_prop2(int max_m, const std::vector<std::size_t>& n_range,
                      std::uint64_t seed = 0, const Tolerance& tol = {});

/// True when mu (with the given multiplicity table) matches one of the five
/// passing patterns of the A-type classification, to relative tolerance
/// pattern_tol. Used to keep perturbations outside every family.
bool matches_a_type_family(const std::vector<cplx>& mu,
                           const std::vector<std::vector<int>>& mult,
                           double pattern_tol = 1e-6);

}  // namespace veelocus
