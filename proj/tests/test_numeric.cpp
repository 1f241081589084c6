#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "veelocus/numeric.hpp"

using namespace veelocus;
using testutil::rv;

TEST_CASE("bilinear form has no conjugation") {
  CHECK(std::abs(bilinear(rv({1, 0}), rv({0, 1}))) == 0.0);

  const Vec iso = {cplx{1, 0}, cplx{0, 1}};
  CHECK(std::abs(bilinear(iso, iso)) < 1e-15);  // (1,i) is isotropic

  const double r2 = std::sqrt(2.0);
  const Vec a = rv({1, 0, -r2});
  const Vec b = rv({0, 1, -r2});
  CHECK(bilinear(a, b).real() == doctest::Approx(2.0).epsilon(1e-12));

  CHECK_THROWS_AS(bilinear(rv({1}), rv({1, 2})), LengthMismatch);
}

TEST_CASE("bilinear symmetry (sampled)") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    Vec x(6), y(6);
    for (auto& v : x) v = cplx{rng.symmetric(), rng.symmetric()};
    for (auto& v : y) v = cplx{rng.symmetric(), rng.symmetric()};
    CHECK(std::abs(bilinear(x, y) - bilinear(y, x)) < 1e-13);
  }
}

TEST_CASE("approx_zero is a relative test") {
  CHECK(approx_zero(cplx{1e-15, 0}, 1.0));
  CHECK_FALSE(approx_zero(cplx{0.3, 0}, 1.0));
  CHECK(approx_zero(cplx{1e-4, 0}, 1e8));
  CHECK(approx_zero(cplx{0, 0}, 0.0));
}

TEST_CASE("invert: identity, hand-checked 2x2, rank-1 rejection") {
  const Matrix id = Matrix::identity(3);
  const Matrix id_inv = invert(id);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(std::abs(id_inv(i, j) - id(i, j)) < 1e-15);

  Matrix g(2, 2);
  g(0, 0) = 2; g(0, 1) = -1; g(1, 0) = -1; g(1, 1) = 2;
  const Matrix gi = invert(g);
  CHECK(std::abs(gi(0, 0) - cplx{2.0 / 3.0, 0}) < 1e-14);
  CHECK(std::abs(gi(0, 1) - cplx{1.0 / 3.0, 0}) < 1e-14);
  CHECK(std::abs(gi(1, 0) - cplx{1.0 / 3.0, 0}) < 1e-14);
  CHECK(std::abs(gi(1, 1) - cplx{2.0 / 3.0, 0}) < 1e-14);

  Matrix singular(2, 2);
  singular(0, 0) = singular(0, 1) = singular(1, 0) = singular(1, 1) = 1;
  CHECK_THROWS_AS(invert(singular), DegenerateMatrix);
}

TEST_CASE("invert round-trip on random well-conditioned matrices") {
  Rng rng(23);
  const Tolerance tol;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 10;
    Matrix a(n, n);
    for (auto& v : a.data) v = cplx{rng.symmetric(), rng.symmetric()};
    for (std::size_t i = 0; i < n; ++i) a(i, i) += cplx{4.0, 0.0};  // diagonally dominant
    const Matrix ai = invert(a, tol);
    const Matrix prod = multiply(a, ai);
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        err = std::max(err, std::abs(prod(i, j) - (i == j ? cplx{1, 0} : cplx{0, 0})));
    CHECK(err <= 10.0 * tol.rel_eps * a.max_abs());
  }
}

TEST_CASE("reflect: examples and involution") {
  const Vec r1 = reflect(rv({1, 0}), rv({3, 5}));
  CHECK(std::abs(r1[0] - cplx{-3, 0}) < 1e-14);
  CHECK(std::abs(r1[1] - cplx{5, 0}) < 1e-14);

  const Vec r2 = reflect(rv({1, -1, 0}), rv({2, 7, 4}));  // transposition
  CHECK(std::abs(r2[0] - cplx{7, 0}) < 1e-14);
  CHECK(std::abs(r2[1] - cplx{2, 0}) < 1e-14);
  CHECK(std::abs(r2[2] - cplx{4, 0}) < 1e-14);

  CHECK_THROWS_AS(reflect(Vec{cplx{1, 0}, cplx{0, 1}}, rv({1, 2})), IsotropicVector);

  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    Vec alpha(4), x(4);
    for (auto& v : alpha) v = cplx{rng.symmetric(), 0.3 * rng.symmetric()};
    for (auto& v : x) v = cplx{rng.symmetric(), rng.symmetric()};
    if (is_isotropic(alpha)) continue;
    const Vec twice = reflect(alpha, reflect(alpha, x));
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(twice[i] - x[i]) < 1e-10);
  }
}

TEST_CASE("sample_point determinism and margins") {
  const Vec a = sample_point(3, 7);
  const Vec b = sample_point(3, 7);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(a[i] == b[i]);  // bit-for-bit
    CHECK(std::abs(a[i].real()) <= 1.0);
    CHECK(a[i].imag() == 0.0);
  }
  CHECK(sample_point(3, 8)[0] != a[0]);

  const std::vector<Vec> avoid = {rv({1, 0})};
  const Vec c = sample_point(2, 5, avoid, 0.05);
  CHECK(std::abs(c[0]) >= 0.05);

  const std::vector<Vec> impossible = {rv({1})};
  CHECK_THROWS_AS(sample_point(1, 5, impossible, 2.0), SamplingExhausted);
}

TEST_CASE("random_orthogonal produces orthogonal matrices") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    const Matrix q = random_orthogonal(5, seed);
    double err = 0.0;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) {
        cplx dot{0, 0};
        for (std::size_t c = 0; c < 5; ++c) dot += q(i, c) * q(j, c);
        err = std::max(err, std::abs(dot - (i == j ? cplx{1, 0} : cplx{0, 0})));
      }
    CHECK(err < 1e-12);
  }
}

TEST_CASE("collinearity test") {
  CHECK(collinear(rv({1, 2, 0}), rv({-2, -4, 0})));
  CHECK_FALSE(collinear(rv({1, 2, 0}), rv({1, 2, 1e-3})));
  const Vec ci = {cplx{0, 1}, cplx{0, 2}};
  CHECK(collinear(rv({1, 2}), ci));  // complex scalar multiple
}
