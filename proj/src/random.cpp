#include "eao/random.hpp"

#include <algorithm>

namespace eao {

long Sampler::uniform(long lo, long hi) {
  // Plain rejection on the raw 64-bit stream keeps results identical across
  // standard library implementations.
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

long Sampler::nonzero() {
  long x;
  do {
    x = integer();
  } while (x == 0);
  return x;
}

Matrix Sampler::matrix(std::size_t rows, std::size_t cols) {
  return Matrix::generate(rows, cols, [&](std::size_t, std::size_t) { return Rational(integer()); });
}

Matrix Sampler::invertible(std::size_t n) {
  for (;;) {
    Matrix g = matrix(n, n);
    if (sgn(determinant(g)) != 0) return g;
  }
}

std::vector<Rational> Sampler::distinct(std::size_t n) {
  std::vector<long> picked;
  long h = std::max<long>(height_, static_cast<long>(n));
  while (picked.size() < n) {
    const long x = uniform(-h, h);
    if (std::find(picked.begin(), picked.end(), x) == picked.end()) picked.push_back(x);
  }
  return {picked.begin(), picked.end()};
}

Matrix Sampler::rank_one(std::size_t rows, std::size_t cols) {
  auto nonzero_vector = [&](std::size_t len) {
    for (;;) {
      Matrix v = matrix(len, 1);
      if (!v.is_zero()) return v;
    }
  };
  const Matrix c = nonzero_vector(rows);
  const Matrix b = nonzero_vector(cols).transpose();
  return c * b;
}

Point Sampler::point(std::size_t n, std::size_t p, std::size_t q, std::size_t r) {
  Matrix b = matrix(n, p);
  Matrix c = matrix(q, n);
  std::vector<Matrix> a;
  for (std::size_t i = 0; i < r; ++i) a.push_back(matrix(n, n));
  return Point(std::move(b), std::move(c), std::move(a));
}

}  // namespace eao
