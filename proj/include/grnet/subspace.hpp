#pragma once

#include <optional>
#include <vector>

#include "grnet/linalg.hpp"
#include "grnet/matrix.hpp"
#include "grnet/random.hpp"

namespace grnet {

/// Linear subspace of Q^n, stored as a full-row-rank basis matrix (one
/// basis vector per row). Projectively this is a (rows-1)-plane; the
/// lattice code works with r-planes stored as (r+1)-row bases in Q^(d+1).
class Subspace {
 public:
  /// basis must have at least one row and full row rank.
  explicit Subspace(Matrix basis);

  int ambient_dim() const { return basis_.cols(); }
  int vec_dim() const { return basis_.rows(); }
  int projective_dim() const { return basis_.rows() - 1; }
  const Matrix& basis() const { return basis_; }

  /// RREF rows: equal subspaces yield identical matrices.
  Matrix canonical_basis() const;

  bool contains_vector(const Matrix& row_vector) const;

  /// Span equality (basis independent).
  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) {
    return !(a == b);
  }

 private:
  Matrix basis_;
};

Subspace join(const Subspace& a, const Subspace& b);
Subspace join(const std::vector<Subspace>& parts);

/// Intersection; std::nullopt when it is the zero space (projectively
/// empty). dim(a) + dim(b) == dim(join) + dim(meet) always holds, with
/// dim(meet) = 0 for the nullopt case.
std::optional<Subspace> meet(const Subspace& a, const Subspace& b);

/// Whether u contains v as sets.
bool contains(const Subspace& u, const Subspace& v);

/// Affine-chart representative of an r-plane in Q^(d+1): the unique basis
/// of the form [block | I_{r+1}] with the identity in the last r+1 columns.
struct AffineRep {
  int r;
  int d;
  Matrix block;  // (r+1) x (d-r)

  /// The full (r+1) x (d+1) representative [block | I].
  Matrix expand() const;
};

/// Throws NotAffine when the last r+1 coordinates of the subspace are
/// degenerate (the plane meets the chart's hyperplane at infinity).
AffineRep to_affine(const Subspace& s);

/// Random vec_dim-dimensional subspace with integer basis entries in
/// [-bound, bound], resampled until it has full rank and an affine
/// representative. Optionally reports the number of resamples.
Subspace random_subspace(int ambient_dim, int vec_dim, Rng& rng, long bound,
                         int* resamples = nullptr);

/// Same, but sampled inside `container` (random combinations of its basis).
Subspace random_subspace_in(const Subspace& container, int vec_dim, Rng& rng,
                            long bound, int* resamples = nullptr);

}  // namespace grnet
