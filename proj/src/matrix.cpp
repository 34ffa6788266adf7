#include "eao/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "eao/error.hpp"

namespace eao {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::degenerate_spectrum: return "degenerate_spectrum";
    case ErrorCode::fiber_condition_violated: return "fiber_condition_violated";
    case ErrorCode::not_in_null_cone: return "not_in_null_cone";
    case ErrorCode::not_a_member: return "not_a_member";
    case ErrorCode::malformed_input: return "malformed_input";
    case ErrorCode::shape_mismatch: return "shape_mismatch";
    case ErrorCode::singular_matrix: return "singular_matrix";
    case ErrorCode::not_in_det1: return "not_in_det1";
    case ErrorCode::invalid_argument: return "invalid_argument";
  }
  return "unknown";
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::malformed_input, "empty rational");
  const auto slash = text.find('/');
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                     [](char c) { return c >= '0' && c <= '9'; });
  };
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_int(num, true) ||
      (slash != std::string_view::npos && !valid_int(den, false)))
    throw Error(ErrorCode::malformed_input, "not a rational: " + std::string(text));
  std::string numtext(num);
  if (numtext[0] == '+') numtext.erase(0, 1);
  Rational value;
  value.get_num() = mpz_class(numtext, 10);
  value.get_den() = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (value.get_den() == 0)
    throw Error(ErrorCode::malformed_input, "zero denominator: " + std::string(text));
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) { return value.get_str(10); }

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw Error(ErrorCode::shape_mismatch, "entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
  return generate(n, n, [](std::size_t i, std::size_t j) { return Rational(i == j ? 1 : 0); });
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
  const std::size_t nrows = rows.size();
  const std::size_t ncols = nrows == 0 ? 0 : rows.begin()->size();
  std::vector<Rational> entries;
  entries.reserve(nrows * ncols);
  for (const auto& r : rows) {
    if (r.size() != ncols) throw Error(ErrorCode::shape_mismatch, "ragged rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Matrix(nrows, ncols, std::move(entries));
}

Matrix Matrix::column(std::span<const Rational> values) {
  return Matrix(values.size(), 1, std::vector<Rational>(values.begin(), values.end()));
}

Matrix Matrix::row(std::span<const Rational> values) {
  return Matrix(1, values.size(), std::vector<Rational>(values.begin(), values.end()));
}

Matrix Matrix::diagonal(std::span<const Rational> values) {
  return generate(values.size(), values.size(), [&](std::size_t i, std::size_t j) {
    return i == j ? values[i] : Rational(0);
  });
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& x) { return sgn(x) == 0; });
}

Matrix Matrix::row_at(std::size_t i) const { return block(i, 0, 1, cols_); }
Matrix Matrix::col_at(std::size_t j) const { return block(0, j, rows_, 1); }

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                     std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_)
    throw Error(ErrorCode::shape_mismatch, "block out of range");
  return generate(nrows, ncols, [&](std::size_t i, std::size_t j) {
    return (*this)(row0 + i, col0 + j);
  });
}

Matrix Matrix::transpose() const {
  return generate(cols_, rows_, [&](std::size_t i, std::size_t j) { return (*this)(j, i); });
}

Rational Matrix::trace() const {
  if (!is_square()) throw Error(ErrorCode::shape_mismatch, "trace of non-square matrix");
  Rational sum = 0;
  for (std::size_t i = 0; i < rows_; ++i) sum += (*this)(i, i);
  return sum;
}

Matrix Matrix::power(std::size_t k) const {
  if (!is_square()) throw Error(ErrorCode::shape_mismatch, "power of non-square matrix");
  Matrix result = identity(rows_);
  for (std::size_t i = 0; i < k; ++i) result = result * *this;
  return result;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorCode::shape_mismatch, "sum of differently shaped matrices");
  std::vector<Rational> out(a.entries_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.entries_[i] + b.entries_[i];
  return Matrix(a.rows_, a.cols_, std::move(out));
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorCode::shape_mismatch, "difference of differently shaped matrices");
  std::vector<Rational> out(a.entries_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.entries_[i] - b.entries_[i];
  return Matrix(a.rows_, a.cols_, std::move(out));
}

Matrix operator-(const Matrix& a) {
  std::vector<Rational> out(a.entries_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -a.entries_[i];
  return Matrix(a.rows_, a.cols_, std::move(out));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw Error(ErrorCode::shape_mismatch, "product of incompatible matrices");
  std::vector<Rational> out(a.rows_ * b.cols_);
  Rational tmp;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Rational& x = a.entries_[i * a.cols_ + l];
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b.entries_[l * b.cols_ + j];
        if (sgn(y) == 0) continue;
        tmp = x * y;
        out[i * b.cols_ + j] += tmp;
      }
    }
  }
  return Matrix(a.rows_, b.cols_, std::move(out));
}

Matrix operator*(const Rational& s, const Matrix& a) {
  std::vector<Rational> out(a.entries_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * a.entries_[i];
  return Matrix(a.rows_, a.cols_, std::move(out));
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      out << (j ? ", " : "") << format_rational((*this)(i, j));
    out << ']';
  }
  out << ']';
  return out.str();
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  if (left.rows() != right.rows())
    throw Error(ErrorCode::shape_mismatch, "hstack row mismatch");
  return Matrix::generate(left.rows(), left.cols() + right.cols(),
                          [&](std::size_t i, std::size_t j) {
                            return j < left.cols() ? left(i, j) : right(i, j - left.cols());
                          });
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols())
    throw Error(ErrorCode::shape_mismatch, "vstack column mismatch");
  return Matrix::generate(top.rows() + bottom.rows(), top.cols(),
                          [&](std::size_t i, std::size_t j) {
                            return i < top.rows() ? top(i, j) : bottom(i - top.rows(), j);
                          });
}

Rational max_abs_difference(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::shape_mismatch, "max_abs_difference shape mismatch");
  Rational best = 0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    Rational d = abs(a.entries()[i] - b.entries()[i]);
    if (d > best) best = d;
  }
  return best;
}

}  // namespace eao
