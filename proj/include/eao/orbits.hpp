#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "eao/invariants.hpp"

namespace eao {

/// Lie algebra centralizer {X : XB = 0, CX = 0, [X, A] = 0} of a point.
struct StabilizerReport {
  std::size_t stab_dim = 0;
  std::size_t orbit_dim = 0;
  /// Subspace of Q^{n^2}; X is flattened row-major.
  Subspace kernel_basis;
};

StabilizerReport stabilizer(const Point& w);

/// Nonzero discriminant of the characteristic polynomial.
bool is_regular_semisimple(const Matrix& a);

struct ReconstructionData {
  std::vector<Rational> t;
  std::vector<Matrix> x;
  /// (c_k, b_k) with X_k = c_k b_k; c_k is q x 1 and b_k is 1 x p.
  std::vector<std::pair<Matrix, Matrix>> factors;
};

/// X_k = D(t)^-1 Gamma, each split as a column times a row. Rank-zero X_k is
/// accepted (factors are zero) unless `strict_rank1` is set.
/// Throws Error(degenerate_spectrum) or Error(fiber_condition_violated).
ReconstructionData reconstruction_data(std::span<const Rational> t,
                                       std::span<const Matrix> gamma,
                                       bool strict_rank1 = false);

/// (B, C, diag(t)) whose invariants are (power sums of t; gamma).
Point reconstruct_fiber_point(std::span<const Rational> t, std::span<const Matrix> gamma,
                              bool strict_rank1 = false);

/// Rank-one factorization X = c b. The first nonzero column of X becomes c;
/// b is scaled so that its entry at that column is 1. Zero X gives zeros.
std::pair<Matrix, Matrix> rank_one_factors(const Matrix& x);

/// Invariant equality; meaningful for points whose orbits are closed.
bool same_closed_orbit(const Point& w1, const Point& w2);

}  // namespace eao
