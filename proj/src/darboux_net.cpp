#include "grnet/darboux_net.hpp"

#include "grnet/linalg.hpp"

namespace grnet {

const Subspace& EdgeNet::at(const VertexIndex& v, int axis) const {
  auto it = edges.find(EdgeKey{v, axis});
  if (it == edges.end()) throw MissingEdge("missing net edge", v, {axis});
  return it->second;
}

void EdgeNet::set(VertexIndex v, int axis, Subspace value) {
  if (static_cast<int>(v.size()) != n_axes)
    throw Error("vertex arity does not match net");
  if (value.ambient_dim() != d + 1 || value.vec_dim() != r + 1)
    throw DegenerateInput("plane shape does not match net", v, {axis});
  edges.insert_or_assign(EdgeKey{std::move(v), axis}, std::move(value));
}

EdgeSquareCheck check_edge_square(const EdgeNet& net, const VertexIndex& base,
                                  int i, int j) {
  const Subspace& xi = net.at(base, i);
  const Subspace& xj = net.at(base, j);
  const Subspace& xi_j = net.at(shifted(base, j), i);
  const Subspace& xj_i = net.at(shifted(base, i), j);
  int dim = join({xi, xj, xi_j, xj_i}).projective_dim();
  int bound = 2 * net.r + 1;
  return EdgeSquareCheck{dim, bound, dim <= bound};
}

namespace {

Matrix affine_edge(const EdgeNet& net, const VertexIndex& v, int axis) {
  try {
    return to_affine(net.at(v, axis)).expand();
  } catch (const NotAffine& e) {
    throw NotAffine(e.detail(), v, {axis});
  }
}

}  // namespace

Matrix extract_edge_rotation(const EdgeNet& net, const VertexIndex& base,
                             int i, int j) {
  Matrix xi = affine_edge(net, base, i);
  Matrix xj = affine_edge(net, base, j);
  Matrix xi_j = affine_edge(net, shifted(base, j), i);
  Matrix diff = xi - xj;
  if (rank(diff) < net.r + 1)
    throw UnderDetermined("difference rows are dependent", base, {i, j});
  try {
    // x_i(n+e_j) - x_j(n) = t_ij (x_i(n) - x_j(n)).
    return solve_right(diff, xi_j - xj);
  } catch (const NoSolution&) {
    throw Inconsistent("side planes do not close up", base, {i, j});
  }
}

PlaquetteField<Matrix> extract_edge_rotations(const EdgeNet& net,
                                              const Region& extents) {
  PlaquetteField<Matrix> out;
  for (const VertexIndex& n : region_vertices(extents))
    for (int i = 0; i < net.n_axes; ++i)
      for (int j = 0; j < net.n_axes; ++j) {
        if (i == j || n[i] >= extents[i] || n[j] >= extents[j]) continue;
        out.set(n, i, j, extract_edge_rotation(net, n, i, j));
      }
  return out;
}

EdgeField<Matrix> potentials_from_rotations(const PlaquetteField<Matrix>& t,
                                            const Region& extents) {
  return integrate_axis_potentials(t, extents);
}

PlaquetteField<Matrix> rotation_from_edge_potentials(
    const EdgeField<Matrix>& s, const Region& extents) {
  int axes = static_cast<int>(extents.size());
  PlaquetteField<Matrix> b;
  for (const VertexIndex& n : region_vertices(extents))
    for (int i = 0; i < axes; ++i)
      for (int j = 0; j < axes; ++j) {
        if (i == j || n[i] >= extents[i] || n[j] >= extents[j]) continue;
        auto inverted = [&](const VertexIndex& v, int axis) {
          try {
            return inverse(s.at(v, axis));
          } catch (const Singular&) {
            throw Singular("potential value singular", v, {axis});
          }
        };
        Matrix diff = inverted(shifted(n, j), i) - inverted(n, i);
        b.set(n, i, j, diff * s.at(n, j));
      }
  return b;
}

EdgeField<Matrix> edge_net_variables(const EdgeNet& net,
                                     const EdgeField<Matrix>& s,
                                     const Region& extents) {
  EdgeField<Matrix> y;
  for (const VertexIndex& n : region_vertices(extents))
    for (int i = 0; i < net.n_axes; ++i) {
      if (n[i] >= extents[i]) continue;
      Matrix inv;
      try {
        inv = inverse(s.at(n, i));
      } catch (const Singular&) {
        throw Singular("potential value singular", n, {i});
      }
      y.set(n, i, inv * affine_edge(net, n, i));
    }
  return y;
}

EdgeNet slice_qnet(const QNet& net, const Subspace& plane,
                   const Region& extents) {
  if (plane.ambient_dim() != net.d + 1)
    throw AmbientMismatch("slicing plane lives in a different ambient space");
  if (plane.vec_dim() != net.d - net.r)
    throw Error("slicing plane must have projective codimension r+1");
  EdgeNet out{net.n_axes, net.r, net.d, {}};
  for (const VertexIndex& n : region_vertices(extents))
    for (int i = 0; i < net.n_axes; ++i) {
      if (n[i] >= extents[i]) continue;
      Subspace edge_span = join(net.at(n), net.at(shifted(n, i)));
      if (edge_span.projective_dim() != 2 * net.r + 1)
        throw DegenerateSlice("edge span is not a (2r+1)-plane", n, {i});
      std::optional<Subspace> cut = meet(edge_span, plane);
      if (!cut || cut->projective_dim() != net.r)
        throw DegenerateSlice("edge span meets the plane improperly", n, {i});
      out.set(n, i, *cut);
    }
  return out;
}

}  // namespace grnet
