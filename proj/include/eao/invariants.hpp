#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "eao/linalg.hpp"
#include "eao/matrix.hpp"

namespace eao {

/// A point (B, C, A_1, ..., A_r) of M_{n,p} + M_{q,n} + M_n^r.
/// The enhanced adjoint action is the case r = 1.
class Point {
 public:
  Point() = default;
  /// Validates every shape against (n, p, q) taken from B and C.
  Point(Matrix b, Matrix c, std::vector<Matrix> a);
  Point(Matrix b, Matrix c, Matrix a);

  static Point zero(std::size_t n, std::size_t p, std::size_t q, std::size_t r = 1);

  std::size_t n() const noexcept { return b_.rows(); }
  std::size_t p() const noexcept { return b_.cols(); }
  std::size_t q() const noexcept { return c_.rows(); }
  std::size_t r() const noexcept { return a_.size(); }

  const Matrix& b() const noexcept { return b_; }
  const Matrix& c() const noexcept { return c_; }
  /// The adjoint part; requires r = 1.
  const Matrix& a() const;
  const std::vector<Matrix>& a_list() const noexcept { return a_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  Matrix b_, c_;
  std::vector<Matrix> a_;
};

/// pi_W(w): tau_k = tr(A^k) for k = 1..n, gamma[k] = C A^k B for k = 0..n-1.
struct InvariantVector {
  std::vector<Rational> tau;
  std::vector<Matrix> gamma;

  bool is_zero() const;
  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

/// Direction (dB, dC, dA) at a point with r = 1.
struct TangentVector {
  Matrix db, dc, da;
};

/// Letters are 1-based indices into the adjoint list. The empty word stands
/// for the identity matrix.
using Word = std::vector<std::size_t>;

struct WordInvariants {
  /// Keyed by the lexicographically least cyclic rotation of the word.
  std::map<Word, Rational> tau;
  /// Keyed by the word itself; includes the empty word.
  std::map<Word, Matrix> gamma;

  friend bool operator==(const WordInvariants&, const WordInvariants&) = default;
};

/// Least rotation of `word` in lexicographic order.
Word canonical_rotation(const Word& word);

InvariantVector evaluate_invariants(const Point& w);

/// (gB, C g^-1, g A_i g^-1). Throws Error(singular_matrix) for singular g.
Point group_action(const Matrix& g, const Point& w);

/// tau_I = tr(A_I) for 1 <= |I| <= max_len, gamma^K = C A_K B for |K| <= max_len.
WordInvariants word_invariants(const Point& w, std::size_t max_len);

/// Exact directional derivative of pi_W at w along dw (product rule).
InvariantVector differential(const Point& w, const TangentVector& dw);

/// Dimension of the tangent space n^2 + np + nq; coordinates ordered as the
/// entries of dB, then dC, then dA, each row-major.
std::size_t tangent_dim(std::size_t n, std::size_t p, std::size_t q);
/// Dimension of the target C^n + M_{q,p}^n.
std::size_t invariant_dim(std::size_t n, std::size_t p, std::size_t q);

/// Coordinates of an invariant vector: tau, then each gamma[k] row-major.
std::vector<Rational> flatten(const InvariantVector& v);

/// Matrix of d pi_W at w, one column per standard tangent direction.
Matrix jacobian(const Point& w);
std::size_t jacobian_rank(const Point& w);

/// Psi(t; X) = (power sums of t; (sum_r t_r^k X_r)_{k=0..n-1}).
/// Throws Error(not_in_det1) when some X_r has rank >= 2.
InvariantVector psi_map(std::span<const Rational> t, std::span<const Matrix> x);

struct SlRelation {
  Rational d1;
  Rational d2;
  Rational hankel_det;
  bool holds = false;
};

/// D1 = det(v; vA; ...; vA^{n-1}), D2 = det(u, Au, ..., A^{n-1}u) and the
/// Hankel determinant det(v A^{i+j} u). For p = q = 1 shapes.
SlRelation sl_relation_check(const Matrix& u, const Matrix& v, const Matrix& a);

/// Point of C^n + M_{q,p}^n as produced by the toy map
/// (a; v) -> ((sum a_i^k)_{k=1..n}; (sum a_i^k v_i)_{k=1..n}).
struct ToyImage {
  std::vector<Rational> power_sums;
  std::vector<Matrix> moments;
};

struct NonclosedImageDemo {
  ToyImage image_point;
  ToyImage limit_point;
  /// max |coordinate difference| between the two.
  Rational gap;
  /// True when the limit point provably has no preimage in Z: its power sums
  /// force every a_i to vanish, contradicting a_i v_i = u != 0.
  bool limit_absent = false;
};

/// Toy model over Z = {(a; v) : a_i v_i = u} with a = (eps, 2 eps, ..., n eps).
NonclosedImageDemo nonclosed_image_demo(std::size_t n, const Matrix& u, const Rational& eps);

/// True when no (a; v) with a_i v_i = u != 0 can map to `point`, certified
/// root-free: if every power sum vanishes, Newton's identities give the
/// polynomial x^n, so every a_i = 0. False means "not excluded".
bool toy_preimage_excluded(const ToyImage& point);

}  // namespace eao
