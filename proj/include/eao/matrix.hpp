#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "eao/rational.hpp"

namespace eao {

/// Dense row-major matrix of exact rationals. Values are immutable once
/// constructed; every operation returns a new matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
  static Matrix column(std::span<const Rational> values);
  static Matrix row(std::span<const Rational> values);
  static Matrix diagonal(std::span<const Rational> values);

  template <class F>
  static Matrix generate(std::size_t rows, std::size_t cols, F&& f) {
    std::vector<Rational> entries;
    entries.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) entries.emplace_back(f(i, j));
    return Matrix(rows, cols, std::move(entries));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const;

  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  std::span<const Rational> entries() const noexcept { return entries_; }

  Matrix row_at(std::size_t i) const;
  Matrix col_at(std::size_t j) const;
  Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows,
               std::size_t ncols) const;
  Matrix transpose() const;
  Rational trace() const;
  Matrix power(std::size_t k) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Matrix hstack(const Matrix& left, const Matrix& right);
Matrix vstack(const Matrix& top, const Matrix& bottom);

/// Entrywise max |a_ij - b_ij|; shapes must agree.
Rational max_abs_difference(const Matrix& a, const Matrix& b);

}  // namespace eao
