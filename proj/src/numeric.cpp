#include "veelocus/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "veelocus/kernels.hpp"

namespace veelocus {

bool approx_zero(cplx value, double scale, const Tolerance& tol) {
  return std::abs(value) <= tol.rel_eps * std::max(scale, tol.zero_scale_floor);
}

bool approx_equal(cplx a, cplx b, double scale, const Tolerance& tol) {
  return approx_zero(a - b, std::max({scale, std::abs(a), std::abs(b)}), tol);
}

cplx bilinear(std::span<const cplx> x, std::span<const cplx> y) {
  if (x.size() != y.size()) throw LengthMismatch("bilinear: length mismatch");
  return kernels::active().dot(x.data(), y.data(), x.size());
}

double herm_norm_sq(std::span<const cplx> x) {
  double s = 0.0;
  for (const cplx& v : x) s += std::norm(v);
  return s;
}

double herm_norm(std::span<const cplx> x) { return std::sqrt(herm_norm_sq(x)); }

double bilinear_scale(std::span<const cplx> x, std::span<const cplx> y) {
  if (x.size() != y.size()) throw LengthMismatch("bilinear_scale: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::abs(x[i] * y[i]);
  return s;
}

cplx sqrt_branch(double v) {
  return v >= 0.0 ? cplx{std::sqrt(v), 0.0} : cplx{0.0, std::sqrt(-v)};
}

bool is_isotropic(std::span<const cplx> a, const Tolerance& tol) {
  const cplx aa = bilinear(a, a);
  return approx_zero(aa, herm_norm_sq(a), tol);
}

Vec reflect(std::span<const cplx> alpha, std::span<const cplx> x, const Tolerance& tol) {
  if (alpha.size() != x.size()) throw LengthMismatch("reflect: length mismatch");
  const cplx aa = bilinear(alpha, alpha);
  if (approx_zero(aa, herm_norm_sq(alpha), tol))
    throw IsotropicVector("reflect: isotropic mirror vector");
  const cplx coef = -2.0 * bilinear(alpha, x) / aa;
  Vec out(x.begin(), x.end());
  kernels::active().axpy(coef, alpha.data(), out.data(), out.size());
  return out;
}

bool collinear(std::span<const cplx> a, std::span<const cplx> b, const Tolerance& tol) {
  if (a.size() != b.size()) throw LengthMismatch("collinear: length mismatch");
  double max_minor = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      max_minor = std::max(max_minor, std::abs(a[i] * b[j] - a[j] * b[i]));
  const double scale = herm_norm(a) * herm_norm(b);
  return max_minor <= 1e3 * tol.rel_eps * std::max(scale, tol.zero_scale_floor);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = cplx{1.0, 0.0};
  return m;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const cplx& v : data) m = std::max(m, std::abs(v));
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw LengthMismatch("multiply: inner dimension mismatch");
  Matrix c(a.rows, b.cols);
  kernels::active().matmul(a.data.data(), b.data.data(), c.data.data(),
                           a.rows, a.cols, b.cols);
  return c;
}

Vec mat_vec(const Matrix& a, std::span<const cplx> v) {
  if (a.cols != v.size()) throw LengthMismatch("mat_vec: dimension mismatch");
  Vec out(a.rows);
  for (std::size_t r = 0; r < a.rows; ++r)
    out[r] = kernels::active().dot(a.data.data() + r * a.cols, v.data(), a.cols);
  return out;
}

Matrix invert(const Matrix& a, const Tolerance& tol) {
  if (a.rows != a.cols) throw LengthMismatch("invert: matrix not square");
  const std::size_t n = a.rows;
  Matrix work = a;
  Matrix inv = Matrix::identity(n);
  std::vector<double> row_scale(n, 0.0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      row_scale[r] = std::max(row_scale[r], std::abs(work(r, c)));

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(work(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double mag = std::abs(work(r, col));
      if (mag > best) { best = mag; pivot = r; }
    }
    if (best <= tol.rel_eps * std::max(row_scale[pivot], tol.zero_scale_floor))
      throw DegenerateMatrix("invert: pivot below tolerance at column " + std::to_string(col));
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
      std::swap(row_scale[pivot], row_scale[col]);
    }
    const cplx inv_p = 1.0 / work(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) *= inv_p;
      inv(col, c) *= inv_p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const cplx f = -work(r, col);
      if (f == cplx{0.0, 0.0}) continue;
      kernels::active().axpy(f, work.data.data() + col * n, work.data.data() + r * n, n);
      kernels::active().axpy(f, inv.data.data() + col * n, inv.data.data() + r * n, n);
    }
  }
  return inv;
}

// xoshiro256** with splitmix64 seeding; both algorithms are fully specified,
// so the stream is identical on every platform.
namespace {
inline std::uint64_t splitmix64(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t s = seed;
  for (auto& w : state_) w = splitmix64(s);
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::symmetric() { return 2.0 * uniform() - 1.0; }

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL + (salt << 1));
  return splitmix64(s);
}

Vec sample_point(std::size_t dim, std::uint64_t seed, std::span<const Vec> avoid,
                 double margin, const Tolerance& tol) {
  if (margin <= 0.0) throw BadParameter("sample_point: margin must be positive");
  Rng rng(seed);
  constexpr int kMaxAttempts = 10000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Vec x(dim);
    for (auto& v : x) v = cplx{rng.symmetric(), 0.0};
    bool ok = true;
    for (const Vec& beta : avoid) {
      if (beta.size() != dim) throw LengthMismatch("sample_point: avoid vector dimension");
      if (std::abs(bilinear(beta, x)) < margin * herm_norm(beta)) { ok = false; break; }
    }
    if (ok) return x;
  }
  (void)tol;
  throw SamplingExhausted("sample_point: no admissible point after retries");
}

Matrix random_orthogonal(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Matrix q(n, n);
  for (std::size_t attempt = 0; attempt < 32; ++attempt) {
    for (auto& v : q.data) v = cplx{rng.normal(), 0.0};
    bool ok = true;
    // modified Gram-Schmidt on rows
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        cplx proj{0.0, 0.0};
        for (std::size_t c = 0; c < n; ++c) proj += q(i, c) * q(j, c);
        for (std::size_t c = 0; c < n; ++c) q(i, c) -= proj * q(j, c);
      }
      double norm = 0.0;
      for (std::size_t c = 0; c < n; ++c) norm += std::norm(q(i, c));
      norm = std::sqrt(norm);
      if (norm < 1e-6) { ok = false; break; }
      for (std::size_t c = 0; c < n; ++c) q(i, c) /= norm;
    }
    if (ok) return q;
  }
  throw SamplingExhausted("random_orthogonal: degenerate draws");
}

}  // namespace veelocus
