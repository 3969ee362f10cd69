#pragma once

#include <vector>

#include "grnet/matrix.hpp"

namespace grnet {

/// Reduced row echelon form plus the pivot column indices. Rows beyond the
/// rank are zero. Pivot entries are 1 with zeros above and below.
struct RrefResult {
  Matrix mat;
  std::vector<int> pivots;
};

RrefResult rref(const Matrix& m);

int rank(const Matrix& m);

/// Basis of {v : m * v^T = 0}, one vector per row, in RREF-derived
/// canonical form. Zero-row matrix (with cols(m) columns) when the
/// nullspace is trivial.
Matrix nullspace(const Matrix& m);

/// Solves X * a = b exactly. Free parameters (when rank(a) < rows(a)) are
/// set to zero. Throws NoSolution when the system is inconsistent.
Matrix solve_right(const Matrix& a, const Matrix& b);

/// Exact inverse. Throws Singular (no lattice location) on rank deficiency.
Matrix inverse(const Matrix& m);

bool is_invertible(const Matrix& m);

}  // namespace grnet
