#include "grnet/subspace.hpp"

#include "grnet/errors.hpp"

namespace grnet {

Subspace::Subspace(Matrix basis) : basis_(std::move(basis)) {
  if (basis_.rows() < 1) throw Error("subspace needs at least one basis row");
  if (basis_.cols() < 1) throw Error("subspace needs a positive ambient dim");
  if (rank(basis_) != basis_.rows())
    throw Error("subspace basis is rank deficient");
}

Matrix Subspace::canonical_basis() const {
  return rref(basis_).mat.block(0, 0, basis_.rows(), basis_.cols());
}

bool Subspace::contains_vector(const Matrix& row_vector) const {
  if (row_vector.rows() != 1 || row_vector.cols() != ambient_dim())
    throw AmbientMismatch("vector shape does not match ambient space");
  return rank(vstack(basis_, row_vector)) == vec_dim();
}

bool operator==(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  if (a.vec_dim() != b.vec_dim()) return false;
  return rank(vstack(a.basis_, b.basis_)) == a.vec_dim();
}

Subspace join(const std::vector<Subspace>& parts) {
  if (parts.empty()) throw Error("join of no subspaces");
  int ambient = parts[0].ambient_dim();
  Matrix stacked = parts[0].basis();
  for (std::size_t k = 1; k < parts.size(); ++k) {
    if (parts[k].ambient_dim() != ambient)
      throw AmbientMismatch("join operands live in different ambient spaces");
    stacked = vstack(stacked, parts[k].basis());
  }
  RrefResult r = rref(stacked);
  int dim = static_cast<int>(r.pivots.size());
  return Subspace(r.mat.block(0, 0, dim, ambient));
}

Subspace join(const Subspace& a, const Subspace& b) {
  return join(std::vector<Subspace>{a, b});
}

std::optional<Subspace> meet(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw AmbientMismatch("meet operands live in different ambient spaces");
  // Row vector (alpha, beta) with alpha*A + beta*B = 0 gives the
  // intersection element alpha*A; left kernel of the stack captures all
  // of them, and full row rank of A, B makes the map alpha*A injective.
  Matrix stacked = vstack(a.basis(), b.basis());
  Matrix left_kernel = nullspace(stacked.transpose());
  if (left_kernel.rows() == 0) return std::nullopt;
  Matrix alpha = left_kernel.block(0, 0, left_kernel.rows(), a.vec_dim());
  Subspace result(alpha * a.basis());
  return Subspace(result.canonical_basis());
}

bool contains(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw AmbientMismatch("contains operands live in different ambient spaces");
  return rank(vstack(u.basis(), v.basis())) == u.vec_dim();
}

Matrix AffineRep::expand() const {
  return hstack(block, Matrix::identity(r + 1));
}

AffineRep to_affine(const Subspace& s) {
  int k = s.vec_dim();
  int n = s.ambient_dim();
  if (k > n) throw Error("subspace dimension exceeds ambient");
  Matrix tail = s.basis().block(0, n - k, k, k);
  if (rank(tail) != k)
    throw NotAffine("no affine representative: trailing block singular");
  Matrix normalized = inverse(tail) * s.basis();
  return AffineRep{k - 1, n - 1, normalized.block(0, 0, k, n - k)};
}

namespace {

bool affine_normalizable(const Matrix& basis) {
  int k = basis.rows();
  return rank(basis.block(0, basis.cols() - k, k, k)) == k;
}

}  // namespace

Subspace random_subspace(int ambient_dim, int vec_dim, Rng& rng, long bound,
                         int* resamples) {
  if (vec_dim < 1 || vec_dim > ambient_dim)
    throw Error("bad subspace dimensions for sampling");
  if (bound < 1) throw Error("sampling bound must be positive");
  int attempts = 0;
  for (;;) {
    Matrix m(vec_dim, ambient_dim);
    for (int i = 0; i < vec_dim; ++i)
      for (int j = 0; j < ambient_dim; ++j)
        m.at(i, j) = rng.uniform(-bound, bound);
    if (rank(m) == vec_dim && affine_normalizable(m)) {
      if (resamples) *resamples = attempts;
      return Subspace(std::move(m));
    }
    if (++attempts > 10000)
      throw Error("sampling failed to reach general position");
  }
}

Subspace random_subspace_in(const Subspace& container, int vec_dim, Rng& rng,
                            long bound, int* resamples) {
  if (vec_dim < 1 || vec_dim > container.vec_dim())
    throw Error("bad subspace dimensions for sampling");
  if (bound < 1) throw Error("sampling bound must be positive");
  int attempts = 0;
  for (;;) {
    Matrix coeff(vec_dim, container.vec_dim());
    for (int i = 0; i < vec_dim; ++i)
      for (int j = 0; j < container.vec_dim(); ++j)
        coeff.at(i, j) = rng.uniform(-bound, bound);
    Matrix m = coeff * container.basis();
    if (rank(m) == vec_dim && affine_normalizable(m)) {
      if (resamples) *resamples = attempts;
      return Subspace(std::move(m));
    }
    if (++attempts > 10000)
      throw Error("sampling failed to reach general position");
  }
}

}  // namespace grnet
