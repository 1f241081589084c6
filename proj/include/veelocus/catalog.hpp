#pragma once

#include <string>
#include <vector>

#include "veelocus/configuration.hpp"

namespace veelocus {

/// Builds a configuration from a colon-delimited catalog name, e.g.
///   "A:2:m=1", "B:2:m=1,2", "An1:n=3:m=2", "Cn1:n=2:m=1:l=0",
///   "An2:n=2:m=2", "An2-restricted:n=2:m=2",
///   "vee-An:c=1,2,3", "vee-Bn:c0=1:c=1,2", "vee-A3:mu=1,1,1,1,1,1",
///   "vee-An2:n=3:m=2", and "vee-<locus name>" for weighted systems.
/// Throws UnknownCatalogName / BadParameter.
Configuration make_catalog(const std::string& name, const Tolerance& tol = {});

struct CatalogPattern {
  std::string pattern;
  std::string description;
};

std::vector<CatalogPattern> catalog_patterns();

}  // namespace veelocus
