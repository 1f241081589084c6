#pragma once

#include <stdexcept>
#include <string>

namespace veelocus {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LengthMismatch : Error { using Error::Error; };
struct DegenerateMatrix : Error { using Error::Error; };
struct IsotropicVector : Error { using Error::Error; };
struct IsotropicDirection : Error { using Error::Error; };
struct SamplingExhausted : Error { using Error::Error; };
struct BadParameter : Error { using Error::Error; };
struct UnknownFamily : Error { using Error::Error; };
struct CollinearityCollision : Error { using Error::Error; };
struct VectorOffPlane : Error { using Error::Error; };
struct OnHyperplane : Error { using Error::Error; };
struct DegenerateForm : Error { using Error::Error; };
struct CrossCheckDisagreement : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct InvariantViolation : Error { using Error::Error; };
struct UnknownCatalogName : Error { using Error::Error; };

}  // namespace veelocus
