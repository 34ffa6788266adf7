#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "eao/invariants.hpp"

namespace eao {

/// Seeded source of random integer-valued test data. Entries are drawn
/// uniformly from [-height, height]. Output depends only on the seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, long height = 10) : engine_(seed), height_(height) {}

  long height() const noexcept { return height_; }

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  long integer() { return uniform(-height_, height_); }
  long nonzero();

  Matrix matrix(std::size_t rows, std::size_t cols);
  /// Rejection-samples until the determinant is nonzero.
  Matrix invertible(std::size_t n);
  /// n pairwise distinct integers.
  std::vector<Rational> distinct(std::size_t n);
  /// c b with c, b nonzero integer vectors (rank exactly one).
  Matrix rank_one(std::size_t rows, std::size_t cols);
  Point point(std::size_t n, std::size_t p, std::size_t q, std::size_t r = 1);

 private:
  std::mt19937_64 engine_;
  long height_;
};

}  // namespace eao
