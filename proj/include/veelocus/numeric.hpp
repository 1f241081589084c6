#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "veelocus/errors.hpp"

namespace veelocus {

using cplx = std::complex<double>;
using Vec = std::vector<cplx>;

/// Relative tolerance policy shared by every checker. Residuals are always
/// compared against an accumulated scale (sum of magnitudes of the summands
/// that produced them), never against an absolute constant.
struct Tolerance {
  double rel_eps = 1e-9;
  double zero_scale_floor = 1e-300;
};

bool approx_zero(cplx value, double scale, const Tolerance& tol = {});
bool approx_equal(cplx a, cplx b, double scale, const Tolerance& tol = {});

/// Symmetric bilinear form sum x_i y_i — no complex conjugation. All inner
/// products in this library are this form; a Hermitian product would be wrong
/// for the complex configurations.
cplx bilinear(std::span<const cplx> x, std::span<const cplx> y);

/// Hermitian magnitude sqrt(sum |x_i|^2), used only for scale accounting.
double herm_norm(std::span<const cplx> x);
double herm_norm_sq(std::span<const cplx> x);

/// No-cancellation magnitude sum |x_i y_i| of the bilinear form: the scale
/// against which a computed (x,y) that cancels to ~0 must be judged.
double bilinear_scale(std::span<const cplx> x, std::span<const cplx> y);

/// Principal square root; for real negative v returns i*sqrt(-v).
cplx sqrt_branch(double v);

/// x - 2(a,x)/(a,a) * a. Involutive; fixes the hyperplane (a,x)=0.
/// Throws IsotropicVector when |(a,a)| is below tolerance scale.
Vec reflect(std::span<const cplx> alpha, std::span<const cplx> x,
            const Tolerance& tol = {});

/// 2x2-minor collinearity test, relative to the product of Hermitian norms.
bool collinear(std::span<const cplx> a, std::span<const cplx> b,
               const Tolerance& tol = {});

bool is_isotropic(std::span<const cplx> a, const Tolerance& tol = {});

/// Row-major dense complex matrix; never larger than ~12x12 here.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<cplx> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  static Matrix identity(std::size_t n);

  cplx& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  cplx operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  double max_abs() const;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Vec mat_vec(const Matrix& a, std::span<const cplx> v);

/// Gauss-Jordan with partial pivoting by magnitude. Throws DegenerateMatrix
/// when a pivot falls below rel_eps times the pivot row's original scale.
Matrix invert(const Matrix& a, const Tolerance& tol = {});

/// Deterministic RNG: fully specified generation so streams are reproducible
/// bit-for-bit across platforms for a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next_u64();
  double uniform();    // [0,1)
  double symmetric();  // [-1,1)
  double normal();     // Box-Muller from the uniform stream

 private:
  std::uint64_t state_[4];
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

/// Deterministic real point in [-1,1]^dim with |(beta,x)| >= margin*|beta|
/// for every beta in avoid. Throws SamplingExhausted after a bounded number
/// of redraws.
Vec sample_point(std::size_t dim, std::uint64_t seed,
                 std::span<const Vec> avoid = {}, double margin = 0.05,
                 const Tolerance& tol = {});

/// Seeded real orthogonal matrix (modified Gram-Schmidt on a Gaussian draw).
Matrix random_orthogonal(std::size_t n, std::uint64_t seed);

}  // namespace veelocus
