#include "grnet/coefficients.hpp"

#include <algorithm>

#include "grnet/linalg.hpp"

namespace grnet {

namespace {

Matrix affine_at(const QNet& net, const VertexIndex& v) {
  try {
    return to_affine(net.at(v)).expand();
  } catch (const NotAffine& e) {
    throw NotAffine(e.detail(), v);
  }
}

}  // namespace

EdgeCoefficients extract_edge_coefficients(const QNet& net,
                                           const VertexIndex& base, int i,
                                           int j) {
  Matrix x = affine_at(net, base);
  Matrix xi = affine_at(net, shifted(base, i));
  Matrix xj = affine_at(net, shifted(base, j));
  Matrix xij = affine_at(net, shifted(shifted(base, i), j));
  int m = net.r + 1;
  Matrix diffs = vstack(xi - x, xj - x);
  if (rank(diffs) < 2 * m)
    throw UnderDetermined("difference rows are dependent", base, {i, j});
  Matrix rhs = xij - x;
  Matrix coeffs;
  try {
    coeffs = solve_right(diffs, rhs);
  } catch (const NoSolution&) {
    throw Inconsistent("square is not planar", base, {i, j});
  }
  return EdgeCoefficients{coeffs.block(0, 0, m, m), coeffs.block(0, m, m, m)};
}

PlaquetteField<Matrix> extract_coefficients(const QNet& net,
                                            const Region& extents) {
  PlaquetteField<Matrix> out;
  for (const VertexIndex& n : region_vertices(extents))
    for (int i = 0; i < net.n_axes; ++i)
      for (int j = i + 1; j < net.n_axes; ++j) {
        if (n[i] >= extents[i] || n[j] >= extents[j]) continue;
        EdgeCoefficients c = extract_edge_coefficients(net, n, i, j);
        out.set(n, i, j, std::move(c.a_ij));
        out.set(n, j, i, std::move(c.a_ji));
      }
  return out;
}

bool coefficient_closedness_holds(const PlaquetteField<Matrix>& a,
                                  const VertexIndex& n, int i, int j, int k) {
  return a.at(shifted(n, k), i, j) * a.at(n, i, k) ==
         a.at(shifted(n, j), i, k) * a.at(n, i, j);
}

bool one_form_closed(const EdgeField<Matrix>& a, const VertexIndex& n, int j,
                     int k) {
  return a.at(shifted(n, k), j) * a.at(n, k) ==
         a.at(shifted(n, j), k) * a.at(n, j);
}

VertexField<Matrix> integrate_potential(const EdgeField<Matrix>& a,
                                        const Matrix& h0,
                                        const VertexIndex& base,
                                        const Region& extents) {
  int axes = static_cast<int>(extents.size());
  if (!in_region(base, extents)) throw Error("base vertex outside region");

  auto value = [&](const VertexIndex& n, int jaxis) -> const Matrix& {
    if (!a.has(n, jaxis))
      throw MissingEdge("one-form value missing", n, {jaxis});
    return a.at(n, jaxis);
  };

  // Every edge value must be present and invertible.
  for (const VertexIndex& n : region_vertices(extents))
    for (int j = 0; j < axes; ++j) {
      if (n[j] >= extents[j]) continue;
      if (!is_invertible(value(n, j)))
        throw Singular("one-form value singular", n, {j});
    }

  // Closedness next: it is exactly what makes the walk below path
  // independent, and checking per square lets the error name one.
  for (const VertexIndex& n : region_vertices(extents))
    for (int j = 0; j < axes; ++j)
      for (int k = j + 1; k < axes; ++k) {
        if (n[j] >= extents[j] || n[k] >= extents[k]) continue;
        if (!one_form_closed(a, n, j, k))
          throw NotClosed("one-form fails closedness", n, {j, k});
      }

  auto inverted = [&](const VertexIndex& n, int jaxis) {
    try {
      return inverse(value(n, jaxis));
    } catch (const Singular&) {
      throw Singular("one-form value singular", n, {jaxis});
    }
  };

  // Walk from the base along one axis at a time (highest differing axis
  // first); layer ordering by distance is immaterial once closedness holds.
  VertexField<Matrix> h;
  h.set(base, h0);
  std::vector<VertexIndex> order = region_vertices(extents);
  std::stable_sort(order.begin(), order.end(),
                   [&](const VertexIndex& p, const VertexIndex& q) {
                     int dp = 0, dq = 0;
                     for (int k = 0; k < axes; ++k) {
                       dp += std::abs(p[k] - base[k]);
                       dq += std::abs(q[k] - base[k]);
                     }
                     return dp < dq;
                   });
  for (const VertexIndex& v : order) {
    if (h.has(v)) continue;
    int axis = -1;
    for (int k = axes - 1; k >= 0; --k)
      if (v[k] != base[k]) {
        axis = k;
        break;
      }
    if (v[axis] > base[axis]) {
      VertexIndex prev = shifted(v, axis, -1);
      h.set(v, value(prev, axis) * h.at(prev));
    } else {
      VertexIndex prev = shifted(v, axis, +1);
      h.set(v, inverted(v, axis) * h.at(prev));
    }
  }

  // Factorization guard over every edge; cannot fire once closedness holds.
  for (const VertexIndex& n : region_vertices(extents))
    for (int j = 0; j < axes; ++j) {
      if (n[j] >= extents[j]) continue;
      if (h.at(shifted(n, j)) != value(n, j) * h.at(n))
        throw NotClosed("potential fails edge factorization", n, {j});
    }
  return h;
}

EdgeField<Matrix> integrate_axis_potentials(const PlaquetteField<Matrix>& f,
                                            const Region& extents) {
  int axes = static_cast<int>(extents.size());
  EdgeField<Matrix> out;
  int rows = 0;
  for (const auto& [key, mat] : f.entries()) rows = mat.rows();
  if (rows == 0) return out;

  for (int i = 0; i < axes; ++i) {
    // Slice lattice: all axes except i.
    std::vector<int> slice_axes;
    Region slice_extents;
    for (int k = 0; k < axes; ++k)
      if (k != i) {
        slice_axes.push_back(k);
        slice_extents.push_back(extents[k]);
      }
    for (int level = 0; level < extents[i]; ++level) {
      auto embed = [&](const VertexIndex& m) {
        VertexIndex n(axes, 0);
        n[i] = level;
        for (std::size_t t = 0; t < slice_axes.size(); ++t)
          n[slice_axes[t]] = m[t];
        return n;
      };
      EdgeField<Matrix> one_form;
      for (const VertexIndex& m : region_vertices(slice_extents))
        for (std::size_t t = 0; t < slice_axes.size(); ++t) {
          if (m[t] >= slice_extents[t]) continue;
          VertexIndex n = embed(m);
          if (f.has(n, i, slice_axes[t]))
            one_form.set(m, static_cast<int>(t), f.at(n, i, slice_axes[t]));
        }
      VertexIndex slice_base(slice_axes.size(), 0);
      VertexField<Matrix> h;
      try {
        h = integrate_potential(one_form, Matrix::identity(rows), slice_base,
                                slice_extents);
      } catch (const LatticeError& e) {
        // Remap slice coordinates back into the full lattice.
        std::vector<int> at =
            e.at().empty() ? VertexIndex() : embed(e.at());
        std::vector<int> mapped_axes;
        for (int t : e.axes()) mapped_axes.push_back(slice_axes[t]);
        if (dynamic_cast<const NotClosed*>(&e))
          throw NotClosed(e.detail(), at, mapped_axes);
        if (dynamic_cast<const Singular*>(&e))
          throw Singular(e.detail(), at, mapped_axes);
        if (dynamic_cast<const MissingEdge*>(&e))
          throw MissingEdge(e.detail(), at, mapped_axes);
        throw;
      }
      for (const auto& [m, value] : h.entries()) out.set(embed(m), i, value);
    }
  }
  return out;
}

PlaquetteField<Matrix> rotation_from_potentials(const EdgeField<Matrix>& h,
                                                const Region& extents) {
  int axes = static_cast<int>(extents.size());
  PlaquetteField<Matrix> b;
  for (const VertexIndex& n : region_vertices(extents))
    for (int i = 0; i < axes; ++i)
      for (int j = 0; j < axes; ++j) {
        if (i == j || n[i] >= extents[i] || n[j] >= extents[j]) continue;
        Matrix hi_j = h.at(shifted(n, j), i);
        Matrix inv;
        try {
          inv = inverse(hi_j);
        } catch (const Singular&) {
          throw Singular("potential value singular", shifted(n, j), {i});
        }
        b.set(n, i, j, inv * (h.at(shifted(n, i), j) - h.at(n, j)));
      }
  return b;
}

EdgeField<Matrix> edge_variables(const QNet& net, const EdgeField<Matrix>& h,
                                 const Region& extents) {
  EdgeField<Matrix> y;
  for (const VertexIndex& n : region_vertices(extents))
    for (int i = 0; i < net.n_axes; ++i) {
      if (n[i] >= extents[i]) continue;
      Matrix inv;
      try {
        inv = inverse(h.at(n, i));
      } catch (const Singular&) {
        throw Singular("potential value singular", n, {i});
      }
      y.set(n, i, inv * (affine_at(net, shifted(n, i)) - affine_at(net, n)));
    }
  return y;
}

bool linear_problem_holds(const EdgeField<Matrix>& y,
                          const PlaquetteField<Matrix>& b,
                          const VertexIndex& n, int i, int j) {
  return y.at(shifted(n, j), i) == y.at(n, i) + b.at(n, i, j) * y.at(n, j);
}

}  // namespace grnet
