#include "grnet/linalg.hpp"

#include <utility>

#include "grnet/errors.hpp"

namespace grnet {

namespace {

using ZMatrix = std::vector<std::vector<Integer>>;

// Clears denominators row by row (multiplying a row by a positive constant
// does not change the row space), so the elimination can stay in integers.
ZMatrix to_integer_rows(const Matrix& m) {
  ZMatrix z(m.rows(), std::vector<Integer>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    Integer scale = 1;
    for (int j = 0; j < m.cols(); ++j)
      scale = lcm(scale, m.at(i, j).get_den());
    for (int j = 0; j < m.cols(); ++j) {
      Rational v = m.at(i, j) * Rational(scale);
      z[i][j] = v.get_num();  // denominator is 1 by construction
    }
  }
  return z;
}

// Fraction-free Bareiss elimination. Pivot choice is first nonzero in the
// current column, so the result is deterministic. Returns pivot columns;
// on exit rows [0, pivots.size()) are an upper echelon, the rest are zero.
std::vector<int> bareiss(ZMatrix& z, int cols) {
  std::vector<int> pivots;
  int rows = static_cast<int>(z.size());
  Integer prev = 1;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int i = row; i < rows; ++i)
      if (z[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row) std::swap(z[pivot], z[row]);
    for (int i = row + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        Integer t = z[row][col] * z[i][j] - z[i][col] * z[row][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        z[i][j] = std::move(t);
      }
      z[i][col] = 0;
    }
    prev = z[row][col];
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  ZMatrix z = to_integer_rows(m);
  return static_cast<int>(bareiss(z, m.cols()).size());
}

RrefResult rref(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {m, {}};
  ZMatrix z = to_integer_rows(m);
  std::vector<int> pivots = bareiss(z, m.cols());
  int r = static_cast<int>(pivots.size());

  Matrix out(m.rows(), m.cols());
  for (int k = 0; k < r; ++k) {
    Rational lead(z[k][pivots[k]]);
    for (int j = pivots[k]; j < m.cols(); ++j)
      out.at(k, j) = Rational(z[k][j]) / lead;
  }
  // Back elimination: clear above each pivot, bottom-up.
  for (int k = r - 1; k > 0; --k)
    for (int i = 0; i < k; ++i) {
      Rational f = out.at(i, pivots[k]);
      if (f == 0) continue;
      for (int j = pivots[k]; j < m.cols(); ++j)
        out.at(i, j) -= f * out.at(k, j);
    }
  return {std::move(out), std::move(pivots)};
}

Matrix nullspace(const Matrix& m) {
  if (m.cols() == 0) return Matrix(0, 0);
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : r.pivots) is_pivot[p] = true;

  int nfree = m.cols() - static_cast<int>(r.pivots.size());
  Matrix basis(nfree, m.cols());
  int row = 0;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    basis.at(row, f) = 1;
    for (std::size_t k = 0; k < r.pivots.size(); ++k)
      basis.at(row, r.pivots[k]) = -r.mat.at(static_cast<int>(k), f);
    ++row;
  }
  return basis;
}

Matrix solve_right(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0) {
    // X * a = b with no unknown combinations: b must be zero.
    if (!b.is_zero()) throw NoSolution("inconsistent system (empty basis)");
    return Matrix(b.rows(), 0);
  }
  if (a.cols() != b.cols()) throw Error("column mismatch in solve_right");
  // X * a = b  <=>  a^T * X^T = b^T; row reduce [a^T | b^T].
  Matrix aug = hstack(a.transpose(), b.transpose());
  RrefResult r = rref(aug);
  for (int p : r.pivots)
    if (p >= a.rows()) throw NoSolution("inconsistent linear system");
  Matrix xt(a.rows(), b.rows());
  for (std::size_t k = 0; k < r.pivots.size(); ++k)
    for (int j = 0; j < b.rows(); ++j)
      xt.at(r.pivots[k], j) = r.mat.at(static_cast<int>(k), a.rows() + j);
  return xt.transpose();
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
  int n = m.rows();
  RrefResult r = rref(hstack(m, Matrix::identity(n)));
  if (static_cast<int>(r.pivots.size()) != n || r.pivots[n - 1] != n - 1)
    throw Singular("singular matrix");
  return r.mat.block(0, n, n, n);
}

bool is_invertible(const Matrix& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

}  // namespace grnet
