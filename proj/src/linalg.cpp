#include "eao/linalg.hpp"

#include <utility>

#include "eao/error.hpp"

namespace eao {
namespace {

// In-place reduction to reduced row echelon form on a row-major scratch buffer.
std::vector<std::size_t> reduce_rows(std::vector<Rational>& a, std::size_t rows,
                                     std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  Rational factor, tmp;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(a[i * cols + c]) != 0) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[sel * cols + j], a[r * cols + j]);
    const Rational inv = 1 / a[r * cols + c];
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i * cols + c]) == 0) continue;
      factor = a[i * cols + c];
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(a[r * cols + j]) == 0) continue;
        tmp = factor * a[r * cols + j];
        a[i * cols + j] -= tmp;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<Rational> copy_entries(const Matrix& m) {
  return {m.entries().begin(), m.entries().end()};
}

}  // namespace

Rref rref(const Matrix& m) {
  auto buf = copy_entries(m);
  auto pivots = reduce_rows(buf, m.rows(), m.cols());
  return {Matrix(m.rows(), m.cols(), std::move(buf)), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  auto buf = copy_entries(m);
  return reduce_rows(buf, m.rows(), m.cols()).size();
}

Subspace Subspace::span(const Matrix& vectors) {
  const std::size_t n = vectors.rows();
  auto buf = copy_entries(vectors.transpose());
  const auto pivots = reduce_rows(buf, vectors.cols(), n);
  const std::size_t d = pivots.size();
  Matrix basis = Matrix::generate(n, d, [&](std::size_t i, std::size_t j) {
    return buf[j * n + i];
  });
  return Subspace(n, std::move(basis));
}

Subspace Subspace::zero(std::size_t ambient) { return Subspace(ambient, Matrix(ambient, 0)); }

Subspace Subspace::full(std::size_t ambient) {
  return Subspace(ambient, Matrix::identity(ambient));
}

bool Subspace::contains(const Matrix& vector) const {
  if (vector.rows() != ambient_ || vector.cols() != 1)
    throw Error(ErrorCode::shape_mismatch, "vector does not live in the ambient space");
  return rank(hstack(basis_, vector)) == dim();
}

RrefDecomposition rref_decompose(const Matrix& m) {
  const auto [reduced, pivots] = rref(m);
  const std::size_t rank = pivots.size();

  Matrix pivot_columns = Matrix::generate(m.rows(), rank, [&](std::size_t i, std::size_t j) {
    return m(i, pivots[j]);
  });

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix kernel_vectors(m.cols(), free_cols.size());
  std::vector<Rational> kv(m.cols() * free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    kv[free_cols[f] * free_cols.size() + f] = 1;
    for (std::size_t r = 0; r < rank; ++r)
      kv[pivots[r] * free_cols.size() + f] = -reduced(r, free_cols[f]);
  }
  kernel_vectors = Matrix(m.cols(), free_cols.size(), std::move(kv));

  return {rank, Subspace::span(pivot_columns), Subspace::span(kernel_vectors)};
}

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::shape_mismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  auto a = copy_entries(m);
  Rational det = 1, factor, tmp;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = n;
    for (std::size_t i = c; i < n; ++i)
      if (sgn(a[i * n + c]) != 0) {
        sel = i;
        break;
      }
    if (sel == n) return 0;
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[sel * n + j], a[c * n + j]);
      det = -det;
    }
    det *= a[c * n + c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a[i * n + c]) == 0) continue;
      factor = a[i * n + c] / a[c * n + c];
      for (std::size_t j = c; j < n; ++j) {
        tmp = factor * a[c * n + j];
        a[i * n + j] -= tmp;
      }
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::shape_mismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  auto buf = copy_entries(hstack(m, Matrix::identity(n)));
  const auto pivots = reduce_rows(buf, n, 2 * n);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    throw Error(ErrorCode::singular_matrix, "matrix is singular");
  return Matrix::generate(n, n, [&](std::size_t i, std::size_t j) {
    return buf[i * 2 * n + n + j];
  });
}

SubspaceRelation subspace_compare(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim())
    throw Error(ErrorCode::shape_mismatch, "subspaces live in different ambient spaces");
  const std::size_t joint = rank(hstack(s.basis(), t.basis()));
  const bool s_in_t = joint == t.dim();
  const bool t_in_s = joint == s.dim();
  if (s_in_t && t_in_s) return SubspaceRelation::equal;
  if (s_in_t) return SubspaceRelation::s_in_t;
  if (t_in_s) return SubspaceRelation::t_in_s;
  return SubspaceRelation::incomparable;
}

Subspace subspace_sum(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim())
    throw Error(ErrorCode::shape_mismatch, "subspaces live in different ambient spaces");
  return Subspace::span(hstack(s.basis(), t.basis()));
}

Subspace intersect(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim())
    throw Error(ErrorCode::shape_mismatch, "subspaces live in different ambient spaces");
  // [S | -T] (x; y) = 0  <=>  S x = T y, and S x ranges over the intersection.
  const auto kernel = rref_decompose(hstack(s.basis(), -t.basis())).kernel;
  if (kernel.dim() == 0) return Subspace::zero(s.ambient_dim());
  return Subspace::span(s.basis() * kernel.basis().block(0, 0, s.dim(), kernel.dim()));
}

Subspace image(const Matrix& a, const Subspace& s) {
  if (a.cols() != s.ambient_dim())
    throw Error(ErrorCode::shape_mismatch, "map and subspace do not compose");
  return Subspace::span(a * s.basis());
}

Subspace preimage(const Matrix& a, const Subspace& s) {
  if (a.rows() != s.ambient_dim())
    throw Error(ErrorCode::shape_mismatch, "map and subspace do not compose");
  // [A | -S] (x; y) = 0  <=>  A x = S y.
  const auto kernel = rref_decompose(hstack(a, -s.basis())).kernel;
  if (kernel.dim() == 0) return Subspace::zero(a.cols());
  return Subspace::span(kernel.basis().block(0, 0, a.cols(), kernel.dim()));
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (const auto& c : coeffs) acc = acc * x + c;
  return acc;
}

Matrix Polynomial::evaluate(const Matrix& a) const {
  if (!a.is_square()) throw Error(ErrorCode::shape_mismatch, "polynomial of non-square matrix");
  Matrix acc(a.rows(), a.cols());
  const Matrix id = Matrix::identity(a.rows());
  for (const auto& c : coeffs) acc = acc * a + c * id;
  return acc;
}

Polynomial char_poly(const Matrix& a) {
  if (!a.is_square())
    throw Error(ErrorCode::shape_mismatch, "characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  std::vector<Rational> coeffs(n + 1);
  coeffs[0] = 1;
  Matrix m(n, n);
  const Matrix id = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + coeffs[k - 1] * id;
    coeffs[k] = -(a * m).trace() / Rational(static_cast<long>(k));
  }
  return {std::move(coeffs)};
}

Rational discriminant(const Polynomial& f) {
  const std::size_t n = f.degree();
  if (n == 0) throw Error(ErrorCode::invalid_argument, "discriminant of a constant");
  if (n == 1) return 1;
  std::vector<Rational> df(n);
  for (std::size_t i = 0; i < n; ++i)
    df[i] = f.coeffs[i] * Rational(static_cast<long>(n - i));
  // Sylvester matrix of f (degree n) and f' (degree n-1): size 2n-1.
  const std::size_t size = 2 * n - 1;
  std::vector<Rational> s(size * size);
  for (std::size_t r = 0; r < n - 1; ++r)
    for (std::size_t j = 0; j <= n; ++j) s[r * size + r + j] = f.coeffs[j];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j) s[(n - 1 + r) * size + r + j] = df[j];
  Rational res = determinant(Matrix(size, size, std::move(s)));
  const bool negate = ((n * (n - 1)) / 2) % 2 == 1;
  res /= f.coeffs[0];
  return negate ? Rational(-res) : res;
}

std::vector<Rational> power_sums(const Polynomial& f, std::size_t m) {
  // For monic x^n + a_1 x^{n-1} + ... + a_n:
  // p_k = -(a_1 p_{k-1} + ... + a_{k-1} p_1 + k a_k)  (a_k = 0 for k > n).
  const std::size_t n = f.degree();
  auto a = [&](std::size_t k) { return k <= n ? f.coeffs[k] : Rational(0); };
  std::vector<Rational> p(m + 1);
  for (std::size_t k = 1; k <= m; ++k) {
    Rational acc = Rational(static_cast<long>(k)) * a(k);
    for (std::size_t i = 1; i < k; ++i) acc += a(i) * p[k - i];
    p[k] = -acc;
  }
  return {p.begin() + 1, p.end()};
}

Polynomial from_power_sums(std::span<const Rational> sums) {
  const std::size_t n = sums.size();
  std::vector<Rational> a(n + 1);
  a[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = sums[k - 1];
    for (std::size_t i = 1; i < k; ++i) acc += a[i] * sums[k - i - 1];
    a[k] = -acc / Rational(static_cast<long>(k));
  }
  return {std::move(a)};
}

Matrix vandermonde(std::span<const Rational> t) {
  const std::size_t n = t.size();
  std::vector<Rational> entries(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational x = 1;
    for (std::size_t i = 0; i < n; ++i) {
      entries[i * n + j] = x;
      x *= t[j];
    }
  }
  return Matrix(n, n, std::move(entries));
}

std::vector<Matrix> vandermonde_solve(std::span<const Rational> t,
                                      std::span<const Matrix> rhs) {
  const std::size_t n = t.size();
  if (rhs.size() != n)
    throw Error(ErrorCode::shape_mismatch, "vandermonde_solve needs one right-hand side per node");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (t[i] == t[j])
        throw Error(ErrorCode::degenerate_spectrum,
                    "repeated node " + format_rational(t[i]));
  if (n == 0) return {};
  const std::size_t q = rhs[0].rows(), p = rhs[0].cols();
  for (const auto& r : rhs)
    if (r.rows() != q || r.cols() != p)
      throw Error(ErrorCode::shape_mismatch, "right-hand sides differ in shape");

  const Matrix dinv = inverse(vandermonde(t));
  std::vector<Matrix> out;
  out.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    Matrix acc(q, p);
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(dinv(r, k)) != 0) acc = acc + dinv(r, k) * rhs[k];
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace eao
