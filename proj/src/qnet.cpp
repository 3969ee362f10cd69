#include "grnet/qnet.hpp"

#include <algorithm>
#include <sstream>

namespace grnet {

const Subspace& QNet::at(const VertexIndex& v) const {
  auto it = vertices.find(v);
  if (it == vertices.end()) throw MissingVertex("missing net vertex", v);
  return it->second;
}

void QNet::set(VertexIndex v, Subspace value) {
  if (static_cast<int>(v.size()) != n_axes)
    throw Error("vertex arity does not match net");
  if (value.ambient_dim() != d + 1 || value.vec_dim() != r + 1)
    throw DegenerateInput("plane shape does not match net", v);
  vertices.insert_or_assign(std::move(v), std::move(value));
}

SquareCheck check_square(const QNet& net, const VertexIndex& base, int i,
                         int j) {
  const Subspace& x = net.at(base);
  const Subspace& xi = net.at(shifted(base, i));
  const Subspace& xj = net.at(shifted(base, j));
  const Subspace& xij = net.at(shifted(shifted(base, i), j));
  int dim = join({x, xi, xj, xij}).projective_dim();
  int bound = 3 * net.r + 2;
  return SquareCheck{dim, bound, dim <= bound};
}

namespace {

std::string dim_text(const char* what, int got, int expected) {
  std::ostringstream out;
  out << what << " has projective dimension " << got << ", expected "
      << expected;
  return out.str();
}

}  // namespace

Subspace propagate_cube(const Subspace& x, const Subspace& x1,
                        const Subspace& x2, const Subspace& x3,
                        const Subspace& x12, const Subspace& x13,
                        const Subspace& x23, bool strict) {
  const Subspace* all[7] = {&x, &x1, &x2, &x3, &x12, &x13, &x23};
  int r = x.projective_dim();
  for (const Subspace* s : all) {
    if (s->ambient_dim() != x.ambient_dim())
      throw AmbientMismatch("cube corners live in different ambient spaces");
    if (s->projective_dim() != r)
      throw DegenerateInput("cube corners have different plane dimensions");
  }
  int d = x.ambient_dim() - 1;
  if (d < 4 * r + 3)
    throw DegenerateInput("ambient dimension too small: need d >= 4r+3");

  if (strict) {
    int vdim = join({x, x1, x2, x3}).projective_dim();
    if (vdim != 4 * r + 3)
      throw DegenerateInput(dim_text("span of x, x1, x2, x3", vdim, 4 * r + 3));
    const Subspace* faces[3][4] = {{&x, &x1, &x2, &x12},
                                   {&x, &x1, &x3, &x13},
                                   {&x, &x2, &x3, &x23}};
    for (const auto& f : faces) {
      int fdim = join({*f[0], *f[1], *f[2], *f[3]}).projective_dim();
      if (fdim != 3 * r + 2)
        throw DegenerateInput(dim_text("input face span", fdim, 3 * r + 2));
    }
  }

  Subspace t1 = join({x1, x12, x13});
  Subspace t2 = join({x2, x12, x23});
  Subspace t3 = join({x3, x13, x23});
  if (strict) {
    for (const Subspace* t : {&t1, &t2, &t3})
      if (t->projective_dim() != 3 * r + 2)
        throw DegenerateInput(
            dim_text("output face span", t->projective_dim(), 3 * r + 2));
  }

  auto meet2 = [&](const Subspace& a, const Subspace& b) {
    std::optional<Subspace> m = meet(a, b);
    if (!m)
      throw DegenerateIntersection("face spans have empty intersection");
    return *m;
  };
  Subspace m12 = meet2(t1, t2);
  if (strict && m12.projective_dim() != 2 * r + 1)
    throw DegenerateIntersection(
        dim_text("pairwise face intersection", m12.projective_dim(), 2 * r + 1));
  Subspace result = meet2(m12, t3);
  if (result.projective_dim() != r)
    throw DegenerateIntersection(
        dim_text("triple face intersection", result.projective_dim(), r));

  if (strict) {
    Subspace m13 = meet2(t1, t3);
    Subspace m23 = meet2(t2, t3);
    if (m13.projective_dim() != 2 * r + 1 || m23.projective_dim() != 2 * r + 1)
      throw DegenerateIntersection(
          "pairwise face intersection has unexpected dimension");
    // Association order cannot matter; guard against regressions.
    if (!(meet2(m13, t2) == result) || !(meet2(m23, t1) == result))
      throw DegenerateIntersection("triple intersection is order dependent");
    for (const Subspace* t : {&t1, &t2, &t3})
      if (!contains(*t, result))
        throw DegenerateIntersection("result escapes a face span");
  }
  return result;
}

namespace {

Subspace propagate_cell(const QNet& net, const VertexIndex& target,
                        const std::vector<int>& axes, TripleChoice choice) {
  std::vector<int> triple(3);
  if (choice == TripleChoice::Smallest)
    std::copy(axes.begin(), axes.begin() + 3, triple.begin());
  else
    std::copy(axes.end() - 3, axes.end(), triple.begin());
  int i = triple[0], j = triple[1], k = triple[2];
  VertexIndex base = target;
  base[i] -= 1;
  base[j] -= 1;
  base[k] -= 1;
  const Subspace& x = net.at(base);
  const Subspace& xi = net.at(shifted(base, i));
  const Subspace& xj = net.at(shifted(base, j));
  const Subspace& xk = net.at(shifted(base, k));
  const Subspace& xij = net.at(shifted(shifted(base, i), j));
  const Subspace& xik = net.at(shifted(shifted(base, i), k));
  const Subspace& xjk = net.at(shifted(shifted(base, j), k));
  try {
    return propagate_cube(x, xi, xj, xk, xij, xik, xjk);
  } catch (const DegenerateInput& e) {
    throw DegenerateInput(e.detail(), base, {i, j, k});
  } catch (const DegenerateIntersection& e) {
    throw DegenerateIntersection(e.detail(), base, {i, j, k});
  }
}

}  // namespace

QNet propagate_net(const QNet& initial, const Region& region,
                   TripleChoice choice) {
  if (static_cast<int>(region.size()) != initial.n_axes)
    throw Error("region arity does not match net");
  QNet net = initial;
  for (const VertexIndex& v : region_vertices_by_layer(region)) {
    std::vector<int> axes = positive_axes(v);
    if (axes.size() < 3) {
      if (!net.has(v)) throw MissingVertex("missing initial data", v);
      continue;
    }
    if (net.has(v)) continue;
    net.set(v, propagate_cell(net, v, axes, choice));
  }
  return net;
}

ConsistencyReport check_4d_consistency(const QNet& data) {
  if (data.n_axes != 4) throw Error("4D consistency needs a 4-axis net");
  QNet net = data;
  VertexIndex zero(4, 0);
  // Planes at the seven three-unit vertices.
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k) {
        VertexIndex target = zero;
        target[i] = target[j] = target[k] = 1;
        net.set(target, propagate_cell(net, target, {i, j, k},
                                       TripleChoice::Smallest));
      }
  ConsistencyReport report;
  VertexIndex ones(4, 1);
  for (int omitted = 0; omitted < 4; ++omitted) {
    std::vector<int> axes;
    for (int a = 0; a < 4; ++a)
      if (a != omitted) axes.push_back(a);
    report.candidates.push_back(
        propagate_cell(net, ones, axes, TripleChoice::Smallest));
  }
  report.consistent = true;
  for (int l = 1; l < 4; ++l)
    if (!(report.candidates[l] == report.candidates[0]))
      report.consistent = false;
  return report;
}

QNet generate_initial_data(int n_axes, int r, int d, const Region& extents,
                           Rng& rng, long bound) {
  if (static_cast<int>(extents.size()) != n_axes)
    throw Error("region arity does not match axis count");
  if (d < 3 * r + 2) throw Error("ambient too small for planar squares");
  QNet net{n_axes, r, d, {}};
  for (const VertexIndex& v : region_vertices_by_layer(extents)) {
    std::vector<int> axes = positive_axes(v);
    if (axes.size() > 2) continue;
    if (axes.size() <= 1) {
      net.set(v, random_subspace(d + 1, r + 1, rng, bound));
      continue;
    }
    int i = axes[0], j = axes[1];
    VertexIndex base = v;
    base[i] -= 1;
    base[j] -= 1;
    Subspace span = join({net.at(base), net.at(shifted(base, i)),
                          net.at(shifted(base, j))});
    if (span.projective_dim() != 3 * r + 2)
      throw DegenerateInput(
          dim_text("wall square span", span.projective_dim(), 3 * r + 2), base,
          {i, j});
    net.set(v, random_subspace_in(span, r + 1, rng, bound));
  }
  return net;
}

}  // namespace grnet
