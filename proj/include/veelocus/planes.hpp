#pragma once

#include <utility>
#include <vector>

#include "veelocus/configuration.hpp"

namespace veelocus {

/// A maximal coplanar subset of a configuration, with two linearly
/// independent member vectors as its stored basis.
struct PlaneGroup {
  std::vector<std::size_t> members;  // entry indices, sorted
  std::size_t basis_a = 0;
  std::size_t basis_b = 0;
};

/// Every unordered pair of entries belongs to exactly one returned group;
/// groups are maximal and ordered lexicographically by member indices.
std::vector<PlaneGroup> enumerate_planes(const Configuration& config,
                                         const Tolerance& tol = {});

/// For each member beta != pivot, the coefficient t_beta of beta against the
/// plane's transversal direction (bilinear-orthogonal to the pivot), so that
/// (beta, x) = t_beta * (tau, x) along the pivot's hyperplane. The common
/// transversal scale is irrelevant to the locus conditions, which are
/// homogeneous in it.
std::vector<std::pair<std::size_t, cplx>> transversal_coefficients(
    const PlaneGroup& plane, std::size_t pivot, const Configuration& config,
    const Tolerance& tol = {});

/// Rank test on the 3 x dim coordinate matrix via its largest 3x3 minor.
bool coplanar_triple(std::span<const cplx> a, std::span<const cplx> b,
                     std::span<const cplx> c, const Tolerance& tol = {});

}  // namespace veelocus
