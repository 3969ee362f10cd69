#pragma once

#include "grnet/lattice.hpp"
#include "grnet/matrix.hpp"
#include "grnet/random.hpp"

namespace grnet {

/// Rotation-coefficient field: one (r+1) x (r+1) matrix per ordered axis
/// pair (i, j) per plaquette base vertex.
struct DarbouxState {
  int n_axes = 0;
  int r = 0;
  PlaquetteField<Matrix> b;
};

/// One evolution step of the coupled system:
/// b_ij(n + e_k) = (b_ij + b_ik b_kj)(I - b_jk b_kj)^{-1}, everything
/// evaluated at n. Throws SingularDenominator when I - b_jk b_kj is not
/// invertible.
Matrix darboux_map(const Matrix& b_ij, const Matrix& b_ik, const Matrix& b_kj,
                   const Matrix& b_jk);

/// Applies the map on the cube at `n` with axes {i, j, k}: computes all six
/// shifted values b_pq(n + e_s) for {p, q, s} = {i, j, k} and stores them
/// in the state. Checks the coupled face relations
/// b_ij(n+e_k) - b_ik(n+e_j) b_kj(n) = b_ij(n) and
/// -b_ij(n+e_k) b_jk(n) + b_ik(n+e_j) = b_ik(n) as an internal guard.
void step_cube(DarbouxState& state, const VertexIndex& n, int i, int j, int k);

/// Which axis to step over when several are available.
enum class AxisChoice { Smallest, Largest };

/// Evolves wall data (values at vertices whose coordinates vanish outside
/// the pair's axes) to every plaquette of the region, layer by layer.
/// Errors carry the base vertex and axes of the offending cube.
DarbouxState evolve(const DarbouxState& walls, const Region& extents,
                    AxisChoice choice = AxisChoice::Smallest);

struct MapConsistencyReport {
  bool consistent = false;
  int comparisons = 0;
};

/// Algebraic 4D consistency: from the twelve matrices b_pq at the origin of
/// a 4-axis state, evolves every pair over its two complementary axes in
/// both orders and compares. SingularDenominator propagates to the caller.
MapConsistencyReport check_map_4d_consistency(const DarbouxState& origin);

/// Random twelve-matrix origin state for a 4-axis system. Entries are
/// num/(2*scale+1) with num in [-scale, scale], so |entry| < 1/2 keeps the
/// denominators I - b_jk b_kj comfortably invertible most of the time.
DarbouxState random_origin_state(int r, Rng& rng, long scale = 6);

/// Random wall data for an n-axis system on the given region.
DarbouxState random_wall_state(int n_axes, int r, const Region& extents,
                               Rng& rng, long scale = 6);

}  // namespace grnet
