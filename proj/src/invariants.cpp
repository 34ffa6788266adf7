#include "eao/invariants.hpp"

#include <algorithm>

#include "eao/error.hpp"

namespace eao {

Point::Point(Matrix b, Matrix c, std::vector<Matrix> a)
    : b_(std::move(b)), c_(std::move(c)), a_(std::move(a)) {
  const std::size_t n = b_.rows();
  if (n == 0 || b_.cols() == 0 || c_.rows() == 0)
    throw Error(ErrorCode::shape_mismatch, "n, p and q must be positive");
  if (c_.cols() != n) throw Error(ErrorCode::shape_mismatch, "C must be q x n");
  if (a_.empty()) throw Error(ErrorCode::shape_mismatch, "at least one adjoint matrix required");
  for (const auto& m : a_)
    if (m.rows() != n || m.cols() != n)
      throw Error(ErrorCode::shape_mismatch, "adjoint matrices must be n x n");
}

Point::Point(Matrix b, Matrix c, Matrix a)
    : Point(std::move(b), std::move(c), std::vector<Matrix>{std::move(a)}) {}

Point Point::zero(std::size_t n, std::size_t p, std::size_t q, std::size_t r) {
  return Point(Matrix(n, p), Matrix(q, n), std::vector<Matrix>(r, Matrix(n, n)));
}

const Matrix& Point::a() const {
  if (a_.size() != 1)
    throw Error(ErrorCode::invalid_argument, "operation requires exactly one adjoint matrix");
  return a_.front();
}

bool InvariantVector::is_zero() const {
  return std::all_of(tau.begin(), tau.end(), [](const Rational& x) { return sgn(x) == 0; }) &&
         std::all_of(gamma.begin(), gamma.end(), [](const Matrix& m) { return m.is_zero(); });
}

Word canonical_rotation(const Word& word) {
  Word best = word;
  Word rotated = word;
  for (std::size_t i = 1; i < word.size(); ++i) {
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    if (rotated < best) best = rotated;
  }
  return best;
}

InvariantVector evaluate_invariants(const Point& w) {
  const Matrix& a = w.a();
  const std::size_t n = w.n();
  InvariantVector out;
  out.tau.reserve(n);
  out.gamma.reserve(n);
  Matrix power = a;
  for (std::size_t k = 1; k <= n; ++k) {
    out.tau.push_back(power.trace());
    if (k < n) power = power * a;
  }
  Matrix ab = w.b();
  for (std::size_t k = 0; k < n; ++k) {
    out.gamma.push_back(w.c() * ab);
    if (k + 1 < n) ab = a * ab;
  }
  return out;
}

Point group_action(const Matrix& g, const Point& w) {
  if (g.rows() != w.n() || g.cols() != w.n())
    throw Error(ErrorCode::shape_mismatch, "group element must be n x n");
  const Matrix g_inv = inverse(g);
  std::vector<Matrix> moved;
  moved.reserve(w.r());
  for (const auto& a : w.a_list()) moved.push_back(g * a * g_inv);
  return Point(g * w.b(), w.c() * g_inv, std::move(moved));
}

WordInvariants word_invariants(const Point& w, std::size_t max_len) {
  WordInvariants out;
  const std::size_t r = w.r();
  // Breadth-first over words; each level extends the previous products by one
  // letter on the right.
  std::vector<std::pair<Word, Matrix>> level{{Word{}, Matrix::identity(w.n())}};
  out.gamma.emplace(Word{}, w.c() * w.b());
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::pair<Word, Matrix>> next;
    next.reserve(level.size() * r);
    for (const auto& [word, product] : level) {
      for (std::size_t letter = 1; letter <= r; ++letter) {
        Word extended = word;
        extended.push_back(letter);
        Matrix m = product * w.a_list()[letter - 1];
        out.tau.try_emplace(canonical_rotation(extended), m.trace());
        out.gamma.emplace(extended, w.c() * m * w.b());
        next.emplace_back(std::move(extended), std::move(m));
      }
    }
    level = std::move(next);
  }
  return out;
}

namespace {

// Powers of A and the partial products C A^i, A^i B used by the differential.
struct PowerTable {
  std::vector<Matrix> a_pow;   // A^0 .. A^n
  std::vector<Matrix> c_a;     // C A^i, i = 0..n
  std::vector<Matrix> a_b;     // A^i B, i = 0..n

  explicit PowerTable(const Point& w) {
    const std::size_t n = w.n();
    a_pow.push_back(Matrix::identity(n));
    for (std::size_t i = 1; i <= n; ++i) a_pow.push_back(a_pow.back() * w.a());
    for (std::size_t i = 0; i <= n; ++i) {
      c_a.push_back(w.c() * a_pow[i]);
      a_b.push_back(a_pow[i] * w.b());
    }
  }
};

InvariantVector differential_with(const Point& w, const PowerTable& pw, const TangentVector& dw) {
  const std::size_t n = w.n();
  InvariantVector out;
  out.tau.reserve(n);
  out.gamma.reserve(n);
  const bool da_zero = dw.da.is_zero();
  for (std::size_t k = 1; k <= n; ++k) {
    if (da_zero) {
      out.tau.emplace_back(0);
    } else {
      out.tau.push_back(Rational(static_cast<long>(k)) * (pw.a_pow[k - 1] * dw.da).trace());
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    Matrix term = dw.dc * pw.a_b[k] + pw.c_a[k] * dw.db;
    if (!da_zero)
      for (std::size_t i = 0; i < k; ++i) term = term + pw.c_a[i] * dw.da * pw.a_b[k - 1 - i];
    out.gamma.push_back(std::move(term));
  }
  return out;
}

void check_tangent(const Point& w, const TangentVector& dw) {
  if (dw.db.rows() != w.n() || dw.db.cols() != w.p() || dw.dc.rows() != w.q() ||
      dw.dc.cols() != w.n() || dw.da.rows() != w.n() || dw.da.cols() != w.n())
    throw Error(ErrorCode::shape_mismatch, "tangent vector does not match the point");
}

}  // namespace

InvariantVector differential(const Point& w, const TangentVector& dw) {
  w.a();
  check_tangent(w, dw);
  return differential_with(w, PowerTable(w), dw);
}

std::size_t tangent_dim(std::size_t n, std::size_t p, std::size_t q) {
  return n * n + n * p + n * q;
}

std::size_t invariant_dim(std::size_t n, std::size_t p, std::size_t q) { return n + n * p * q; }

std::vector<Rational> flatten(const InvariantVector& v) {
  std::vector<Rational> out(v.tau.begin(), v.tau.end());
  for (const auto& g : v.gamma) out.insert(out.end(), g.entries().begin(), g.entries().end());
  return out;
}

Matrix jacobian(const Point& w) {
  w.a();
  const std::size_t n = w.n(), p = w.p(), q = w.q();
  const PowerTable pw(w);
  const std::size_t cols = tangent_dim(n, p, q);
  const std::size_t rows = invariant_dim(n, p, q);
  std::vector<Rational> entries(rows * cols);
  auto unit = [](std::size_t r, std::size_t c, std::size_t idx) {
    std::vector<Rational> e(r * c);
    e[idx] = 1;
    return Matrix(r, c, std::move(e));
  };
  for (std::size_t col = 0; col < cols; ++col) {
    TangentVector dw{Matrix(n, p), Matrix(q, n), Matrix(n, n)};
    if (col < n * p) {
      dw.db = unit(n, p, col);
    } else if (col < n * p + q * n) {
      dw.dc = unit(q, n, col - n * p);
    } else {
      dw.da = unit(n, n, col - n * p - q * n);
    }
    const auto values = flatten(differential_with(w, pw, dw));
    for (std::size_t row = 0; row < rows; ++row) entries[row * cols + col] = values[row];
  }
  return Matrix(rows, cols, std::move(entries));
}

std::size_t jacobian_rank(const Point& w) { return rank(jacobian(w)); }

InvariantVector psi_map(std::span<const Rational> t, std::span<const Matrix> x) {
  const std::size_t n = t.size();
  if (x.size() != n || n == 0)
    throw Error(ErrorCode::shape_mismatch, "psi_map needs one matrix per node");
  for (std::size_t r = 0; r < n; ++r) {
    if (x[r].rows() != x[0].rows() || x[r].cols() != x[0].cols())
      throw Error(ErrorCode::shape_mismatch, "psi_map matrices differ in shape");
    if (rank(x[r]) > 1)
      throw Error(ErrorCode::not_in_det1, "X[" + std::to_string(r) + "] has rank >= 2");
  }
  InvariantVector out;
  std::vector<Rational> pw(t.begin(), t.end());
  for (std::size_t k = 1; k <= n; ++k) {
    Rational sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      sum += pw[i];
      pw[i] *= t[i];
    }
    out.tau.push_back(sum);
  }
  std::fill(pw.begin(), pw.end(), Rational(1));
  for (std::size_t k = 0; k < n; ++k) {
    Matrix acc(x[0].rows(), x[0].cols());
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(pw[i]) != 0) acc = acc + pw[i] * x[i];
      pw[i] *= t[i];
    }
    out.gamma.push_back(std::move(acc));
  }
  return out;
}

SlRelation sl_relation_check(const Matrix& u, const Matrix& v, const Matrix& a) {
  const std::size_t n = a.rows();
  if (!a.is_square() || u.rows() != n || u.cols() != 1 || v.rows() != 1 || v.cols() != n)
    throw Error(ErrorCode::shape_mismatch, "expected u: n x 1, v: 1 x n, A: n x n");
  std::vector<Matrix> krylov_u{u}, krylov_v{v};
  for (std::size_t i = 1; i < n; ++i) {
    krylov_u.push_back(a * krylov_u.back());
    krylov_v.push_back(krylov_v.back() * a);
  }
  const Matrix rows_v = Matrix::generate(n, n, [&](std::size_t i, std::size_t j) {
    return krylov_v[i](0, j);
  });
  const Matrix cols_u = Matrix::generate(n, n, [&](std::size_t i, std::size_t j) {
    return krylov_u[j](i, 0);
  });
  // gamma^m = v A^m u for m = 0..2n-2.
  std::vector<Rational> moments;
  Matrix au = u;
  for (std::size_t m = 0; m + 1 < 2 * n; ++m) {
    moments.push_back((v * au)(0, 0));
    au = a * au;
  }
  const Matrix hankel = Matrix::generate(n, n, [&](std::size_t i, std::size_t j) {
    return moments[i + j];
  });
  SlRelation out{determinant(rows_v), determinant(cols_u), determinant(hankel), false};
  out.holds = out.d1 * out.d2 == out.hankel_det;
  return out;
}

namespace {

ToyImage toy_map(std::span<const Rational> a, std::span<const Matrix> v) {
  const std::size_t n = a.size();
  ToyImage out;
  std::vector<Rational> pw(a.begin(), a.end());
  for (std::size_t k = 1; k <= n; ++k) {
    Rational sum = 0;
    Matrix acc(v[0].rows(), v[0].cols());
    for (std::size_t i = 0; i < n; ++i) {
      sum += pw[i];
      acc = acc + pw[i] * v[i];
      pw[i] *= a[i];
    }
    out.power_sums.push_back(sum);
    out.moments.push_back(std::move(acc));
  }
  return out;
}

Rational toy_gap(const ToyImage& x, const ToyImage& y) {
  Rational best = 0;
  for (std::size_t k = 0; k < x.power_sums.size(); ++k) {
    Rational d = abs(x.power_sums[k] - y.power_sums[k]);
    if (d > best) best = d;
    d = max_abs_difference(x.moments[k], y.moments[k]);
    if (d > best) best = d;
  }
  return best;
}

}  // namespace

bool toy_preimage_excluded(const ToyImage& point) {
  const Polynomial f = from_power_sums(point.power_sums);
  return std::all_of(f.coeffs.begin() + 1, f.coeffs.end(),
                     [](const Rational& c) { return sgn(c) == 0; });
}

NonclosedImageDemo nonclosed_image_demo(std::size_t n, const Matrix& u, const Rational& eps) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "n must be positive");
  if (sgn(eps) == 0) throw Error(ErrorCode::invalid_argument, "eps must be nonzero");
  const std::size_t ru = rank(u);
  if (ru == 0) throw Error(ErrorCode::invalid_argument, "u must be nonzero");
  if (ru > 1) throw Error(ErrorCode::not_in_det1, "u must have rank one");

  std::vector<Rational> a;
  std::vector<Matrix> v;
  for (std::size_t i = 1; i <= n; ++i) {
    a.push_back(Rational(static_cast<long>(i)) * eps);
    v.push_back((1 / a.back()) * u);
  }
  NonclosedImageDemo out;
  out.image_point = toy_map(a, v);
  out.limit_point.power_sums.assign(n, Rational(0));
  out.limit_point.moments.assign(n, Matrix(u.rows(), u.cols()));
  out.limit_point.moments[0] = Rational(static_cast<long>(n)) * u;
  out.gap = toy_gap(out.image_point, out.limit_point);
  out.limit_absent = toy_preimage_excluded(out.limit_point);
  return out;
}

}  // namespace eao
