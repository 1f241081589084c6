// AVX2 variants of the complex kernels. Compiled with -mavx2 -mfma; only
// reachable after the runtime CPU check in avx2_ops_impl().

#include <immintrin.h>

#include "veelocus/kernels.hpp"

namespace veelocus::kernels {

namespace {

// Two interleaved complex doubles per __m256d: [x0.re, x0.im, x1.re, x1.im].
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d a_re = _mm256_movedup_pd(a);
  const __m256d a_im = _mm256_permute_pd(a, 0xF);
  const __m256d b_sw = _mm256_permute_pd(b, 0x5);
  return _mm256_fmaddsub_pd(a_re, b, _mm256_mul_pd(a_im, b_sw));
}

inline __m256d cmul_bcast(__m256d a_re, __m256d a_im, __m256d b) {
  const __m256d b_sw = _mm256_permute_pd(b, 0x5);
  return _mm256_fmaddsub_pd(a_re, b, _mm256_mul_pd(a_im, b_sw));
}

cplx avx2_dot(const cplx* x, const cplx* y, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    acc = _mm256_add_pd(acc, cmul(xv, yv));
  }
  __m128d lo = _mm256_castpd256_pd128(acc);
  __m128d hi = _mm256_extractf128_pd(acc, 1);
  __m128d sum = _mm_add_pd(lo, hi);
  alignas(16) double out[2];
  _mm_store_pd(out, sum);
  cplx result{out[0], out[1]};
  for (; i < n; ++i) result += x[i] * y[i];
  return result;
}

inline void axpy_inner(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const __m256d a_re = _mm256_set1_pd(a.real());
  const __m256d a_im = _mm256_set1_pd(a.imag());
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul_bcast(a_re, a_im, xv)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void avx2_axpy(cplx a, const cplx* x, cplx* y, std::size_t n) {
  axpy_inner(a, x, y, n);
}

void avx2_rank1(cplx w, const cplx* v, std::size_t n, cplx* a) {
  for (std::size_t p = 0; p < n; ++p) axpy_inner(w * v[p], v, a + p * n, n);
}

void avx2_matmul(const cplx* a, const cplx* b, cplx* c,
                 std::size_t rows, std::size_t inner, std::size_t cols) {
  for (std::size_t i = 0; i < rows * cols; ++i) c[i] = cplx{0.0, 0.0};
  for (std::size_t i = 0; i < rows; ++i) {
    cplx* crow = c + i * cols;
    for (std::size_t l = 0; l < inner; ++l) {
      axpy_inner(a[i * inner + l], b + l * cols, crow, cols);
    }
  }
}

constexpr Ops kAvx2Ops{"avx2", avx2_dot, avx2_axpy, avx2_rank1, avx2_matmul};

}  // namespace

const Ops* avx2_ops_impl() {
  static const Ops* ops = [] {
    const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return ok ? &kAvx2Ops : nullptr;
  }();
  return ops;
}

}  // namespace veelocus::kernels
