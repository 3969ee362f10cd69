#include "grnet/matrix.hpp"

#include "grnet/errors.hpp"

namespace grnet {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
  data_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  int nrows = static_cast<int>(rows.size());
  int ncols = nrows ? static_cast<int>(rows.begin()->size()) : 0;
  Matrix m(nrows, ncols);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != ncols)
      throw Error("ragged row in matrix literal");
    int j = 0;
    for (long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

Rational& Matrix::at(int i, int j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw Error("matrix index out of range");
  return data_[static_cast<std::size_t>(i) * cols_ + j];
}

const Rational& Matrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw Error("matrix index out of range");
  return data_[static_cast<std::size_t>(i) * cols_ + j];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::block(int row0, int col0, int nrows, int ncols) const {
  if (row0 < 0 || col0 < 0 || nrows < 0 || ncols < 0 || row0 + nrows > rows_ ||
      col0 + ncols > cols_)
    throw Error("matrix block out of range");
  Matrix b(nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) b.at(i, j) = at(row0 + i, col0 + j);
  return b;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error("matrix shape mismatch in +");
  Matrix c(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k)
    c.data_[k] = a.data_[k] + b.data_[k];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error("matrix shape mismatch in -");
  Matrix c(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k)
    c.data_[k] = a.data_[k] - b.data_[k];
  return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix shape mismatch in *");
  Matrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix c(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = s * a.data_[k];
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error("column mismatch in vstack");
  Matrix c(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) c.at(a.rows() + i, j) = b.at(i, j);
  return c;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error("row mismatch in hstack");
  Matrix c(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
  }
  return c;
}

}  // namespace grnet
