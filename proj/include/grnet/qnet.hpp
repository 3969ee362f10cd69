#pragma once

#include <map>

#include "grnet/lattice.hpp"
#include "grnet/random.hpp"
#include "grnet/subspace.hpp"

namespace grnet {

/// Map from lattice vertices to r-planes (stored as (r+1)-row bases in
/// Q^(d+1)), with the defining property that the four planes of every
/// elementary square span at most a (3r+2)-plane.
struct QNet {
  int n_axes = 0;
  int r = 0;
  int d = 0;
  std::map<VertexIndex, Subspace> vertices;

  bool has(const VertexIndex& v) const { return vertices.count(v) > 0; }
  const Subspace& at(const VertexIndex& v) const;
  void set(VertexIndex v, Subspace value);
};

struct SquareCheck {
  int span_projective_dim = 0;
  int bound = 0;  // 3r+2
  bool planar = false;
};

/// Inspects the square at `base` spanned by axes i, j.
SquareCheck check_square(const QNet& net, const VertexIndex& base, int i, int j);

/// Which axis triple fills a vertex with more than three positive
/// coordinates; lets callers cross-check order independence.
enum class TripleChoice { Smallest, Largest };

/// Completes an elementary cube: given the plane at a vertex, its three
/// neighbors and the three diagonal face planes, returns the plane at the
/// opposite corner as the intersection of the three face spans
/// span(x_i, x_ij, x_ik). Needs ambient projective dimension d >= 4r+3.
///
/// In strict mode every step of the dimension ledger is enforced: input
/// faces and output faces span exactly 3r+2, the seven input planes span
/// exactly 4r+3, pairwise intersections of the face spans have projective
/// dimension 2r+1 and the triple intersection exactly r. Violations raise
/// DegenerateInput / DegenerateIntersection. In lenient mode collapsed
/// configurations are allowed as long as the triple intersection still has
/// projective dimension r (e.g. all seven inputs equal U yields U).
Subspace propagate_cube(const Subspace& x, const Subspace& x1,
                        const Subspace& x2, const Subspace& x3,
                        const Subspace& x12, const Subspace& x13,
                        const Subspace& x23, bool strict = true);

/// Fills every box vertex with at least three positive coordinates from
/// wall data (vertices with at most two positive coordinates), layer by
/// layer. Lattice errors are annotated with the base vertex and axes of
/// the offending cube.
QNet propagate_net(const QNet& initial, const Region& region,
                   TripleChoice choice = TripleChoice::Smallest);

struct ConsistencyReport {
  bool consistent = false;
  std::vector<Subspace> candidates;  // one per omitted axis, in axis order
};

/// 4D consistency check: from data on the 4-cube (plane at the origin, at
/// the 4 unit vertices and the 6 two-unit vertices) computes the four
/// candidates for the plane at (1,1,1,1) and compares them. Needs
/// d >= 5r+4 for generic data.
ConsistencyReport check_4d_consistency(const QNet& hypercube_data);

/// Random wall data on the box: independent generic planes on the axes,
/// and each two-axis vertex sampled inside the span of its three
/// predecessors, so every wall square is planar and generic.
QNet generate_initial_data(int n_axes, int r, int d, const Region& extents,
                           Rng& rng, long bound = 9);

}  // namespace grnet
