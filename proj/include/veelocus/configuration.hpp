#pragma once

#include <array>
#include <string>
#include <vector>

#include "veelocus/numeric.hpp"

namespace veelocus {

enum class ConfigKind { locus, vee };

struct Entry {
  Vec vector;
  int multiplicity = 1;        // locus kind
  cplx weight{1.0, 0.0};       // vee kind
};

/// A finite list of pairwise non-collinear, non-isotropic vectors with
/// integer multiplicities (locus side) or weights (vee side).
struct Configuration {
  std::size_t dim = 0;
  ConfigKind kind = ConfigKind::locus;
  std::vector<Entry> entries;
  std::string label;
};

/// Enforces pairwise non-collinearity, non-isotropy, and (locus kind)
/// positive integer multiplicities. Throws InvariantViolation.
void validate(const Configuration& config, const Tolerance& tol = {});

struct Hyperplane {
  Vec normal;
};

enum class CoxeterFamily { A, B, C, D };

/// Standard positive roots: A_{rank}: e_i-e_j in (rank+1)-space;
/// B_n: e_i+-e_j, e_i; C_n: e_i+-e_j, 2e_i; D_n: e_i+-e_j.
/// B/C take two orbit multiplicities (e_i+-e_j first), A/D take one.
Configuration coxeter_positive_roots(CoxeterFamily family, std::size_t rank,
                                     const std::vector<int>& orbit_mults);

/// A_{n-1,1}(m) in (n+1)-space: e_i-e_j with multiplicity m* = max(m,-1-m),
/// e_i - sqrt(m) e_{n+1} with multiplicity 1. Negative m gives an imaginary
/// last coordinate. Requires m not in {0,-1}.
Configuration a_n1(std::size_t n, int m);

/// C_{n,1}(m,l) in (n+1)-space; requires (2l+1) | (2m+1), k = (2m+1)/(2l+1).
/// Vectors with computed multiplicity 0 are omitted.
Configuration c_n1(std::size_t n, int m, int l);

/// A_{n-1,2}(m) in (n+2)-space (n >= 2, m >= 1): e_i-e_j (mult m),
/// e_i - sqrt(m) e_{n+1}, e_i - sqrt(-1-m) e_{n+2}, and the cross vector
/// sqrt(m) e_{n+1} - sqrt(-1-m) e_{n+2}, each with multiplicity 1.
Configuration a_n2(std::size_t n, int m);

/// The hyperplane that contains every vector of a_n2(n, m).
Hyperplane an2_containing_hyperplane(std::size_t n, int m);

/// General A-type system mu_i e_i - mu_j e_j (i<j) with multiplicity table
/// mult[i][j]; a zero table entry omits the vector.
Configuration a_type_general(const std::vector<cplx>& mu,
                             const std::vector<std::vector<int>>& mult,
                             std::string label = "");

/// Vee families of Theorem 2 and its B-analogue; weights folded into lengths.
Configuration vee_An_c(const std::vector<double>& c);
Configuration vee_Bn_c(double c0, const std::vector<double>& c);

/// A_3-type covectors mu_ij (e_i - e_j) in 4-space;
/// mu order: (12, 13, 14, 23, 24, 34).
Configuration vee_A3_general(const std::array<cplx, 6>& mu);

/// alpha -> sqrt(m_alpha) * alpha with weight 1.
Configuration weighted_from_locus(const Configuration& config);

/// Drop one coordinate from every covector (restriction to the subspace
/// x_coordinate = 0); removes vectors that project to zero. Throws
/// CollinearityCollision when two projected vectors become collinear.
Configuration project_to_coordinate_zero(const Configuration& config,
                                         std::size_t coordinate,
                                         const Tolerance& tol = {});

/// Re-express a configuration contained in a hyperplane in a bilinear
/// orthonormal basis of that hyperplane; all pairwise products preserved.
Configuration restrict_to_hyperplane(const Configuration& config,
                                     const Hyperplane& plane,
                                     const Tolerance& tol = {});

/// Project a configuration onto the pivot coordinates of its span. Exact for
/// vee checks: the verdict is invariant under any invertible linear map.
/// Returns the input unchanged when the vectors already span the space.
Configuration reduce_to_span(const Configuration& config, const Tolerance& tol = {});

}  // namespace veelocus
