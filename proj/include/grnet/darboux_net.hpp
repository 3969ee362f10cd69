#pragma once

#include <map>

#include "grnet/coefficients.hpp"
#include "grnet/lattice.hpp"
#include "grnet/qnet.hpp"
#include "grnet/subspace.hpp"

namespace grnet {

/// Edge-valued net: an r-plane X_i(n) per lattice edge (n, n + e_i), with
/// the defining property that the four side planes of every elementary
/// square span at most a (2r+1)-plane.
struct EdgeNet {
  int n_axes = 0;
  int r = 0;
  int d = 0;
  std::map<EdgeKey, Subspace> edges;

  bool has(const VertexIndex& v, int axis) const {
    return edges.count(EdgeKey{v, axis}) > 0;
  }
  const Subspace& at(const VertexIndex& v, int axis) const;
  void set(VertexIndex v, int axis, Subspace value);
};

struct EdgeSquareCheck {
  int span_projective_dim = 0;
  int bound = 0;  // 2r+1
  bool within_bound = false;
};

/// Inspects the four side planes X_i(n), X_j(n), X_i(n + e_j), X_j(n + e_i)
/// of the square at `base`.
EdgeSquareCheck check_edge_square(const EdgeNet& net, const VertexIndex& base,
                                  int i, int j);

/// Transition matrix of the square at `base`: with affine representatives,
/// x_i(n + e_j) = t_ij x_i(n) + (I - t_ij) x_j(n). Throws NotAffine,
/// UnderDetermined (x_i - x_j rows dependent) or Inconsistent (the four
/// side planes do not close up).
Matrix extract_edge_rotation(const EdgeNet& net, const VertexIndex& base,
                             int i, int j);

/// Runs the extraction over every square, both orders of each axis pair.
PlaquetteField<Matrix> extract_edge_rotations(const EdgeNet& net,
                                              const Region& extents);

/// Per-axis potentials s_i with t_ij(n) = s_i(n + e_j) s_i(n)^{-1},
/// normalized to the identity at slice origins; the same integration as
/// for vertex nets' coefficient families.
EdgeField<Matrix> potentials_from_rotations(const PlaquetteField<Matrix>& t,
                                            const Region& extents);

/// Rotation coefficients of an edge net:
/// b_ij(n) = (s_i(n + e_j)^{-1} - s_i(n)^{-1}) s_j(n), stored at (n, i, j).
/// With the edge variables y_i = s_i^{-1} x_i these satisfy the same
/// linear problem y_i(n + e_j) = y_i(n) + b_ij(n) y_j(n) as vertex nets.
PlaquetteField<Matrix> rotation_from_edge_potentials(
    const EdgeField<Matrix>& s, const Region& extents);

/// Edge variables y_i(n) = s_i(n)^{-1} x_i(n) on affine representatives.
EdgeField<Matrix> edge_net_variables(const EdgeNet& net,
                                     const EdgeField<Matrix>& s,
                                     const Region& extents);

/// Cuts a vertex net by a plane of projective codimension r+1: the edge
/// value is the intersection of span(X(n), X(n + e_i)) with the plane.
/// Throws DegenerateSlice when an edge span is not a (2r+1)-plane or the
/// intersection does not have projective dimension r.
EdgeNet slice_qnet(const QNet& net, const Subspace& plane,
                   const Region& extents);

}  // namespace grnet
