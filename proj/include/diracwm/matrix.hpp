#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "diracwm/rational.hpp"

namespace diracwm {

/// Dense row-major matrix over Q. Weight blocks are small (at most a few
/// hundred rows), so dense storage with exact arithmetic is adequate.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  /// Adds `block` into this matrix with its top-left corner at (r0, c0).
  void add_block(std::size_t r0, std::size_t c0, const Matrix& block, const Rational& scale = 1);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Echelon data of a matrix: pivot columns in increasing order, found by a
/// fraction-free (Bareiss) sweep with first-nonzero pivoting.
struct Echelon {
  std::vector<std::size_t> pivots;
  Matrix reduced;  // reduced row echelon form over Q, rank rows
};

Echelon echelon(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Basis of the right kernel, as columns.
Matrix nullspace(const Matrix& a);

/// Solves a x = b for a of full column rank; nullopt when inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Inverse of a square matrix; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

/// Columns of `a` selected by index.
Matrix select_columns(const Matrix& a, const std::vector<std::size_t>& cols);

/// Horizontal concatenation; row counts must agree (or one side empty).
Matrix hstack(const Matrix& a, const Matrix& b);

/// dim(span(cols a) ∩ span(cols b)) for matrices with equal row count.
std::size_t intersection_dim(const Matrix& a, const Matrix& b);

}  // namespace diracwm
