#pragma once

#include <initializer_list>
#include <vector>

#include "grnet/rational.hpp"

namespace grnet {

/// Dense matrix of exact rationals. Zero-row matrices are legal and serve
/// as the canonical "no vectors" value (e.g. an empty nullspace basis);
/// they still carry a column count.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols);

  static Matrix identity(int n);
  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j);
  const Rational& at(int i, int j) const;

  Matrix transpose() const;
  Matrix block(int row0, int col0, int nrows, int ncols) const;
  bool is_zero() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  int rows_;
  int cols_;
  std::vector<Rational> data_;
};

/// Stacks a on top of b. Column counts must agree.
Matrix vstack(const Matrix& a, const Matrix& b);
/// Places b to the right of a. Row counts must agree.
Matrix hstack(const Matrix& a, const Matrix& b);

}  // namespace grnet
