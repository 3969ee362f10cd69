#pragma once

#include "grnet/lattice.hpp"
#include "grnet/matrix.hpp"
#include "grnet/qnet.hpp"

namespace grnet {

/// Coefficients of the planar square at `base`: with affine representatives
/// the opposite corner satisfies x_ij = x + a_ij (x_i - x) + a_ji (x_j - x).
/// Both matrices are (r+1) x (r+1).
struct EdgeCoefficients {
  Matrix a_ij;
  Matrix a_ji;
};

/// Solves the square relation exactly. Throws NotAffine (chart failure at a
/// corner), UnderDetermined (the difference rows are dependent, so the
/// decomposition is ambiguous) or Inconsistent (the square is not planar).
EdgeCoefficients extract_edge_coefficients(const QNet& net,
                                           const VertexIndex& base, int i,
                                           int j);

/// Runs the extraction over every square of the region. The value at key
/// (n, i, j) multiplies (x_i - x) in the square based at n.
PlaquetteField<Matrix> extract_coefficients(const QNet& net,
                                            const Region& extents);

/// Compatibility of the coefficient family around the cube at n for axes
/// (i, j, k): a_ij(n + e_k) a_ik(n) == a_ik(n + e_j) a_ij(n).
bool coefficient_closedness_holds(const PlaquetteField<Matrix>& a,
                                  const VertexIndex& n, int i, int j, int k);

/// One-form closedness around the square at n spanned by axes j, k:
/// a_j(n + e_k) a_k(n) == a_k(n + e_j) a_j(n).
bool one_form_closed(const EdgeField<Matrix>& a, const VertexIndex& n, int j,
                     int k);

/// Integrates an invertible-matrix one-form into a potential with
/// a_j(n) = h(n + e_j) h(n)^{-1} and h(base) = h0. Closedness is verified
/// on every square of the box first (NotClosed names the offending square),
/// which makes the result path independent; a final pass over all edges
/// re-checks the factorization. One-form values must be present on every
/// box edge and invertible (Singular names the offending edge).
VertexField<Matrix> integrate_potential(const EdgeField<Matrix>& a,
                                        const Matrix& h0,
                                        const VertexIndex& base,
                                        const Region& extents);

/// Per-axis potentials of a two-index coefficient family: for each axis i
/// and level n_i < ext_i, integrates the one-form (j -> f(n, i, j)) over the
/// slice, normalized to the identity at the slice origin (all other
/// coordinates zero). The result at key (n, i) is h_i(n).
EdgeField<Matrix> integrate_axis_potentials(const PlaquetteField<Matrix>& f,
                                            const Region& extents);

/// Rotation coefficients of a potential family:
/// b_ij(n) = h_i(n + e_j)^{-1} (h_j(n + e_i) - h_j(n)), stored at (n, i, j)
/// for every square of the region.
PlaquetteField<Matrix> rotation_from_potentials(const EdgeField<Matrix>& h,
                                                const Region& extents);

/// Edge variables y_i(n) = h_i(n)^{-1} (x(n + e_i) - x(n)) on affine
/// representatives, (r+1) x (d+1), stored at (n, i).
EdgeField<Matrix> edge_variables(const QNet& net, const EdgeField<Matrix>& h,
                                 const Region& extents);

/// Linear problem for the edge variables:
/// y_i(n + e_j) == y_i(n) + b_ij(n) y_j(n).
bool linear_problem_holds(const EdgeField<Matrix>& y,
                          const PlaquetteField<Matrix>& b,
                          const VertexIndex& n, int i, int j);

}  // namespace grnet
