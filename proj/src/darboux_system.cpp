#include "grnet/darboux_system.hpp"

#include <algorithm>

#include "grnet/linalg.hpp"

namespace grnet {

Matrix darboux_map(const Matrix& b_ij, const Matrix& b_ik, const Matrix& b_kj,
                   const Matrix& b_jk) {
  Matrix den = Matrix::identity(b_ij.rows()) - b_jk * b_kj;
  Matrix inv;
  try {
    inv = inverse(den);
  } catch (const Singular&) {
    throw SingularDenominator("evolution denominator singular");
  }
  return (b_ij + b_ik * b_kj) * inv;
}

namespace {

Matrix map_at(const DarbouxState& s, const VertexIndex& n, int i, int j,
              int k) {
  try {
    return darboux_map(s.b.at(n, i, j), s.b.at(n, i, k), s.b.at(n, k, j),
                       s.b.at(n, j, k));
  } catch (const SingularDenominator& e) {
    throw SingularDenominator(e.detail(), n, {i, j, k});
  }
}

}  // namespace

void step_cube(DarbouxState& state, const VertexIndex& n, int i, int j,
               int k) {
  const int axes[3] = {i, j, k};
  // Six ordered pairs, each shifted along the remaining axis.
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) {
      if (p == q) continue;
      int a = axes[p], b = axes[q];
      int c = axes[3 - p - q];
      state.b.set(shifted(n, c), a, b, map_at(state, n, a, b, c));
    }
  // Face relations of the coupled system; a failure is a library bug, not
  // a data degeneracy.
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) {
      if (p == q) continue;
      int a = axes[p], b = axes[q];
      int c = axes[3 - p - q];
      const Matrix& ab_c = state.b.at(shifted(n, c), a, b);
      const Matrix& ac_b = state.b.at(shifted(n, b), a, c);
      bool first = ab_c - ac_b * state.b.at(n, c, b) == state.b.at(n, a, b);
      bool second =
          Matrix(ac_b - ab_c * state.b.at(n, b, c)) == state.b.at(n, a, c);
      if (!first || !second)
        throw Error("evolution step violates the coupled face relations");
    }
}

DarbouxState evolve(const DarbouxState& walls, const Region& extents,
                    AxisChoice choice) {
  if (static_cast<int>(extents.size()) != walls.n_axes)
    throw Error("region arity does not match state");
  int axes = walls.n_axes;
  DarbouxState state = walls;
  for (const VertexIndex& n : region_vertices_by_layer(extents)) {
    for (int i = 0; i < axes; ++i)
      for (int j = 0; j < axes; ++j) {
        if (i == j || n[i] >= extents[i] || n[j] >= extents[j]) continue;
        if (state.b.has(n, i, j)) continue;
        std::vector<int> off;
        for (int k = 0; k < axes; ++k)
          if (k != i && k != j && n[k] > 0) off.push_back(k);
        if (off.empty())
          throw MissingValue("missing wall value", n, {i, j});
        int k = choice == AxisChoice::Smallest ? off.front() : off.back();
        VertexIndex m = shifted(n, k, -1);
        state.b.set(n, i, j, map_at(state, m, i, j, k));
      }
  }
  return state;
}

MapConsistencyReport check_map_4d_consistency(const DarbouxState& origin) {
  if (origin.n_axes != 4) throw Error("4D consistency needs a 4-axis state");
  VertexIndex zero(4, 0);
  // Stage one: every pair shifted along each complementary axis.
  DarbouxState stage = origin;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      for (int k = 0; k < 4; ++k) {
        if (k == i || k == j) continue;
        stage.b.set(shifted(zero, k), i, j, map_at(origin, zero, i, j, k));
      }
    }
  // Stage two: shift along the remaining axis, both orders.
  MapConsistencyReport report{true, 0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      std::vector<int> rest;
      for (int a = 0; a < 4; ++a)
        if (a != i && a != j) rest.push_back(a);
      int k = rest[0], l = rest[1];
      Matrix via_k = map_at(stage, shifted(zero, k), i, j, l);
      Matrix via_l = map_at(stage, shifted(zero, l), i, j, k);
      ++report.comparisons;
      if (via_k != via_l) report.consistent = false;
    }
  return report;
}

namespace {

Matrix random_small_matrix(int rows, Rng& rng, long scale) {
  Matrix m(rows, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < rows; ++j)
      m.at(i, j) = frac(rng.uniform(-scale, scale), 2 * scale + 1);
  return m;
}

}  // namespace

DarbouxState random_origin_state(int r, Rng& rng, long scale) {
  DarbouxState state{4, r, {}};
  VertexIndex zero(4, 0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) state.b.set(zero, i, j, random_small_matrix(r + 1, rng, scale));
  return state;
}

DarbouxState random_wall_state(int n_axes, int r, const Region& extents,
                               Rng& rng, long scale) {
  if (static_cast<int>(extents.size()) != n_axes)
    throw Error("region arity does not match axis count");
  DarbouxState state{n_axes, r, {}};
  for (const VertexIndex& n : region_vertices(extents))
    for (int i = 0; i < n_axes; ++i)
      for (int j = 0; j < n_axes; ++j) {
        if (i == j || n[i] >= extents[i] || n[j] >= extents[j]) continue;
        bool wall = true;
        for (int k = 0; k < n_axes; ++k)
          if (k != i && k != j && n[k] != 0) wall = false;
        if (wall) state.b.set(n, i, j, random_small_matrix(r + 1, rng, scale));
      }
  return state;
}

}  // namespace grnet
