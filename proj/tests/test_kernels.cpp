#include <cmath>
#include <vector>

#include "doctest.h"
#include "veelocus/kernels.hpp"
#include "veelocus/numeric.hpp"

using veelocus::Rng;
using veelocus::cplx;
namespace kernels = veelocus::kernels;

namespace {

std::vector<cplx> random_array(std::size_t n, Rng& rng) {
  std::vector<cplx> v(n);
  for (auto& c : v) c = cplx{rng.symmetric(), rng.symmetric()};
  return v;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("scalar dot matches a plain loop") {
  Rng rng(1);
  const auto x = random_array(13, rng);
  const auto y = random_array(13, rng);
  cplx expected{0.0, 0.0};
  for (std::size_t i = 0; i < x.size(); ++i) expected += x[i] * y[i];
  const cplx got = kernels::scalar_ops().dot(x.data(), y.data(), x.size());
  CHECK(std::abs(got - expected) < 1e-14);
}

TEST_CASE("scalar matmul matches the naive triple loop") {
  Rng rng(2);
  const std::size_t r = 5, k = 7, c = 4;
  const auto a = random_array(r * k, rng);
  const auto b = random_array(k * c, rng);
  std::vector<cplx> got(r * c), expected(r * c);
  kernels::scalar_ops().matmul(a.data(), b.data(), got.data(), r, k, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t l = 0; l < k; ++l) expected[i * c + j] += a[i * k + l] * b[l * c + j];
  CHECK(max_diff(got, expected) < 1e-13);
}

TEST_CASE("avx2 variants agree with the scalar reference") {
  const kernels::Ops* avx2 = kernels::avx2_ops();
  if (avx2 == nullptr) {
    MESSAGE("avx2 unavailable on this host; equivalence not exercised");
    return;
  }
  const kernels::Ops& scalar = kernels::scalar_ops();
  Rng rng(3);
  for (std::size_t n : {0, 1, 2, 3, 4, 5, 8, 11, 12, 16, 17, 33}) {
    const auto x = random_array(n, rng);
    const auto y = random_array(n, rng);
    CHECK(std::abs(scalar.dot(x.data(), y.data(), n) - avx2->dot(x.data(), y.data(), n)) <
          1e-12 * (1.0 + static_cast<double>(n)));

    const cplx a{rng.symmetric(), rng.symmetric()};
    auto y1 = y, y2 = y;
    scalar.axpy(a, x.data(), y1.data(), n);
    avx2->axpy(a, x.data(), y2.data(), n);
    CHECK(max_diff(y1, y2) < 1e-13);

    std::vector<cplx> m1(n * n), m2(n * n);
    scalar.rank1_update(a, x.data(), n, m1.data());
    avx2->rank1_update(a, x.data(), n, m2.data());
    CHECK(max_diff(m1, m2) < 1e-13);
  }
  for (std::size_t n : {1, 3, 6, 12}) {
    const auto a = random_array(n * n, rng);
    const auto b = random_array(n * n, rng);
    std::vector<cplx> c1(n * n), c2(n * n);
    scalar.matmul(a.data(), b.data(), c1.data(), n, n, n);
    avx2->matmul(a.data(), b.data(), c2.data(), n, n, n);
    CHECK(max_diff(c1, c2) < 1e-12);
  }
}

TEST_CASE("kernel selection") {
  const std::string active_before = kernels::active().name;
  kernels::select("scalar");
  CHECK(std::string(kernels::active().name) == "scalar");
  if (kernels::avx2_ops() != nullptr) {
    kernels::select("avx2");
    CHECK(std::string(kernels::active().name) == "avx2");
  }
  kernels::select("auto");
  CHECK_THROWS_AS(kernels::select("never"), veelocus::BadParameter);
  kernels::select(active_before);
}
