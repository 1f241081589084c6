#include "veelocus/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "veelocus/errors.hpp"

namespace veelocus::kernels {

namespace {

cplx scalar_dot(const cplx* x, const cplx* y, std::size_t n) {
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void scalar_axpy(cplx a, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scalar_rank1(cplx w, const cplx* v, std::size_t n, cplx* a) {
  for (std::size_t p = 0; p < n; ++p) {
    const cplx coef = w * v[p];
    cplx* row = a + p * n;
    for (std::size_t q = 0; q < n; ++q) row[q] += coef * v[q];
  }
}

void scalar_matmul(const cplx* a, const cplx* b, cplx* c,
                   std::size_t rows, std::size_t inner, std::size_t cols) {
  for (std::size_t i = 0; i < rows * cols; ++i) c[i] = cplx{0.0, 0.0};
  for (std::size_t i = 0; i < rows; ++i) {
    cplx* crow = c + i * cols;
    for (std::size_t l = 0; l < inner; ++l) {
      const cplx coef = a[i * inner + l];
      const cplx* brow = b + l * cols;
      for (std::size_t q = 0; q < cols; ++q) crow[q] += coef * brow[q];
    }
  }
}

constexpr Ops kScalarOps{"scalar", scalar_dot, scalar_axpy, scalar_rank1, scalar_matmul};

const Ops* resolve_default() {
  if (const char* env = std::getenv("VEELOCUS_KERNELS")) {
    const std::string_view want{env};
    if (want == "scalar") return &kScalarOps;
    if (want == "avx2" && avx2_ops() != nullptr) return avx2_ops();
    // "auto" or anything unrecognized falls through to detection
  }
  if (const Ops* ops = avx2_ops()) return ops;
  return &kScalarOps;
}

std::atomic<const Ops*>& active_slot() {
  static std::atomic<const Ops*> slot{resolve_default()};
  return slot;
}

}  // namespace

const Ops& scalar_ops() { return kScalarOps; }

const Ops* avx2_ops() {
#if defined(VEELOCUS_HAVE_AVX2)
  extern const Ops* avx2_ops_impl();
  return avx2_ops_impl();
#else
  return nullptr;
#endif
}

const Ops& active() { return *active_slot().load(std::memory_order_relaxed); }

void select(std::string_view name) {
  if (name == "scalar") {
    active_slot().store(&kScalarOps, std::memory_order_relaxed);
  } else if (name == "avx2") {
    const Ops* ops = avx2_ops();
    if (ops == nullptr) throw BadParameter("avx2 kernels unavailable on this host");
    active_slot().store(ops, std::memory_order_relaxed);
  } else if (name == "auto") {
    active_slot().store(avx2_ops() != nullptr ? avx2_ops() : &kScalarOps,
                        std::memory_order_relaxed);
  } else {
    throw BadParameter("unknown kernel variant: " + std::string(name));
  }
}

}  // namespace veelocus::kernels
