#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eao/matrix.hpp"

namespace eao {

/// A linear subspace of Q^ambient. The basis matrix has one column per basis
/// vector and is kept in reduced column echelon form, so two equal subspaces
/// always carry identical basis matrices.
class Subspace {
 public:
  Subspace() = default;

  /// Span of the columns of `vectors` (which must have `ambient` rows).
  static Subspace span(const Matrix& vectors);
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.cols(); }
  const Matrix& basis() const noexcept { return basis_; }

  bool contains(const Matrix& vector) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(std::size_t ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

  std::size_t ambient_ = 0;
  Matrix basis_;
};

struct RrefDecomposition {
  std::size_t rank = 0;
  Subspace column_space;
  Subspace kernel;
};

RrefDecomposition rref_decompose(const Matrix& m);

/// Reduced row echelon form together with the pivot column of each nonzero row.
struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};
Rref rref(const Matrix& m);

std::size_t rank(const Matrix& m);
Rational determinant(const Matrix& m);
/// Throws Error(singular_matrix) when m is not invertible.
Matrix inverse(const Matrix& m);

enum class SubspaceRelation { equal, s_in_t, t_in_s, incomparable };
SubspaceRelation subspace_compare(const Subspace& s, const Subspace& t);

Subspace subspace_sum(const Subspace& s, const Subspace& t);
Subspace intersect(const Subspace& s, const Subspace& t);
/// Image {A x : x in s}.
Subspace image(const Matrix& a, const Subspace& s);
/// Preimage {x : A x in s}.
Subspace preimage(const Matrix& a, const Subspace& s);

/// Monic polynomial, coefficients listed from x^n down to the constant term.
struct Polynomial {
  std::vector<Rational> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  Rational evaluate(const Rational& x) const;
  Matrix evaluate(const Matrix& a) const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// Characteristic polynomial det(x I - A) by the Faddeev-LeVerrier recursion.
/// Every step divides by a small integer only, so it is exact over Q.
Polynomial char_poly(const Matrix& a);

/// Discriminant of a monic polynomial, computed as a Sylvester resultant of the
/// polynomial and its derivative. Nonzero iff the roots are pairwise distinct.
Rational discriminant(const Polynomial& f);

/// Power sums p_1..p_m of the roots, from the coefficients (Newton's identities).
std::vector<Rational> power_sums(const Polynomial& f, std::size_t m);
/// Monic degree-n polynomial whose roots have the given power sums p_1..p_n.
Polynomial from_power_sums(std::span<const Rational> sums);

/// Solves sum_r t_r^k X_r = rhs_k (k = 0..n-1) for the X_r.
/// Throws Error(degenerate_spectrum) on repeated t entries.
std::vector<Matrix> vandermonde_solve(std::span<const Rational> t,
                                      std::span<const Matrix> rhs);

/// D(t) = (t_j^{i})_{i,j}, i = 0..n-1.
Matrix vandermonde(std::span<const Rational> t);

}  // namespace eao
