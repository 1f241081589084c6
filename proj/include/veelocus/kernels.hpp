#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

// Data-parallel inner loops shared by every checker, as a scalar reference
// implementation plus an AVX2 variant selected at runtime. Both variants are
// equivalence-tested against each other; the scalar path is the authority.

namespace veelocus::kernels {

using cplx = std::complex<double>;

struct Ops {
  const char* name;
  // sum_i x[i]*y[i], no conjugation
  cplx (*dot)(const cplx* x, const cplx* y, std::size_t n);
  // y[i] += a*x[i]
  void (*axpy)(cplx a, const cplx* x, cplx* y, std::size_t n);
  // a (n x n, row-major) += w * v v^T
  void (*rank1_update)(cplx w, const cplx* v, std::size_t n, cplx* a);
  // c (rows x cols) = a (rows x inner) * b (inner x cols), all row-major
  void (*matmul)(const cplx* a, const cplx* b, cplx* c,
                 std::size_t rows, std::size_t inner, std::size_t cols);
};

const Ops& scalar_ops();

// nullptr when the binary lacks the AVX2 path or the CPU does not support it.
const Ops* avx2_ops();

// Active variant: VEELOCUS_KERNELS=scalar|avx2|auto wins, else best available.
const Ops& active();

// Override at runtime ("scalar", "avx2", "auto"). Throws BadParameter on an
// unknown name or when avx2 is requested but unavailable. Not thread safe;
// intended for tests and benchmarking.
void select(std::string_view name);

}  // namespace veelocus::kernels
