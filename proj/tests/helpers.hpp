#pragma once

#include <string>
#include <vector>

#include "veelocus/catalog.hpp"
#include "veelocus/configuration.hpp"
#include "veelocus/numeric.hpp"

namespace testutil {

using veelocus::Configuration;
using veelocus::cplx;
using veelocus::Vec;

inline Vec rv(std::initializer_list<double> values) {
  Vec v;
  for (double x : values) v.push_back(cplx{x, 0.0});
  return v;
}

// catalog configurations used by the cross-module oracle tests
inline std::vector<std::string> catalog_suite() {
  return {
      "A:2:m=1",       "A:3:m=2",          "B:2:m=1,2",      "B:3:m=2,1",
      "C:2:m=2,2",     "D:3:m=1",          "An1:n=2:m=2",    "An1:n=3:m=1",
      "An1:n=2:m=-2",  "An1:n=3:m=-3",     "Cn1:n=2:m=1:l=0", "Cn1:n=2:m=2:l=0",
      "Cn1:n=2:m=1:l=1", "Cn1:n=3:m=4:l=1", "An2:n=2:m=1",    "An2:n=2:m=2",
      "An2:n=3:m=1",   "An2-restricted:n=2:m=2",
  };
}

inline std::vector<std::string> vee_suite() {
  return {
      "vee-An:c=1,2,3",      "vee-An:c=1,1,1,1", "vee-Bn:c0=1:c=1,2",
      "vee-Bn:c0=0.5:c=1,2,3", "vee-A:3:m=1",    "vee-B:2:m=1,2",
      "vee-D:3:m=1",         "vee-An1:n=3:m=2",  "vee-Cn1:n=2:m=1:l=1",
      "vee-An2:n=3:m=1",     "vee-An2:n=3:m=2",
  };
}

// signed coordinate permutation of every vector (an element of S_n x Z_2^n)
inline Configuration apply_signed_permutation(const Configuration& config,
                                              std::uint64_t seed) {
  veelocus::Rng rng(seed);
  const std::size_t dim = config.dim;
  std::vector<std::size_t> perm(dim);
  for (std::size_t i = 0; i < dim; ++i) perm[i] = i;
  for (std::size_t i = dim; i > 1; --i)
    std::swap(perm[i - 1], perm[rng.next_u64() % i]);
  std::vector<double> sign(dim);
  for (double& s : sign) s = rng.uniform() < 0.5 ? -1.0 : 1.0;
  Configuration out = config;
  out.label += "|W";
  for (veelocus::Entry& e : out.entries) {
    Vec v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[perm[i]] = sign[perm[i]] * e.vector[i];
    e.vector = std::move(v);
  }
  return out;
}

inline Configuration apply_matrix(const Configuration& config,
                                  const veelocus::Matrix& q) {
  Configuration out = config;
  out.label += "|Q";
  for (veelocus::Entry& e : out.entries) e.vector = veelocus::mat_vec(q, e.vector);
  return out;
}

inline Configuration scale_all(const Configuration& config, cplx t) {
  Configuration out = config;
  out.label += "|scaled";
  for (veelocus::Entry& e : out.entries)
    for (cplx& c : e.vector) c *= t;
  return out;
}

}  // namespace testutil
