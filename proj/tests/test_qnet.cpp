#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grnet/errors.hpp"
#include "grnet/qnet.hpp"

using namespace grnet;

namespace {

struct CubeInputs {
  Subspace x, x1, x2, x3, x12, x13, x23;
};

CubeInputs random_cube(int r, int d, Rng& rng) {
  QNet walls = generate_initial_data(3, r, d, {1, 1, 1}, rng);
  return CubeInputs{walls.at({0, 0, 0}), walls.at({1, 0, 0}),
                    walls.at({0, 1, 0}), walls.at({0, 0, 1}),
                    walls.at({1, 1, 0}), walls.at({1, 0, 1}),
                    walls.at({0, 1, 1})};
}

QNet point_net_2d(std::initializer_list<std::initializer_list<long>> coords) {
  // 2x2 grid of points in the affine chart of P^2, row-major over (n0, n1).
  QNet net{2, 0, 2, {}};
  auto it = coords.begin();
  for (int n0 = 0; n0 <= 1; ++n0)
    for (int n1 = 0; n1 <= 1; ++n1, ++it) {
      Matrix row(1, 3);
      int j = 0;
      for (long c : *it) row.at(0, j++) = c;
      row.at(0, 2) = 1;
      net.set({n0, n1}, Subspace(row));
    }
  return net;
}

}  // namespace

TEST_CASE("cube propagation satisfies the dimension ledger") {
  for (int r : {0, 1, 2}) {
    int d = 4 * r + 3;
    Rng rng(1000 + r);
    CubeInputs c = random_cube(r, d, rng);

    CHECK(join({c.x, c.x1, c.x2, c.x3}).projective_dim() == 4 * r + 3);
    Subspace t1 = join({c.x1, c.x12, c.x13});
    Subspace t2 = join({c.x2, c.x12, c.x23});
    Subspace t3 = join({c.x3, c.x13, c.x23});
    CHECK(t1.projective_dim() == 3 * r + 2);
    CHECK(t2.projective_dim() == 3 * r + 2);
    CHECK(t3.projective_dim() == 3 * r + 2);
    auto m12 = meet(t1, t2);
    REQUIRE(m12.has_value());
    CHECK(m12->projective_dim() == 2 * r + 1);

    Subspace out = propagate_cube(c.x, c.x1, c.x2, c.x3, c.x12, c.x13, c.x23);
    CHECK(out.projective_dim() == r);
    CHECK(contains(t1, out));
    CHECK(contains(t2, out));
    CHECK(contains(t3, out));
    // Output faces are (3r+2)-planes again.
    CHECK(join({c.x1, c.x12, c.x13, out}).projective_dim() == 3 * r + 2);
    CHECK(join({c.x2, c.x12, c.x23, out}).projective_dim() == 3 * r + 2);
    CHECK(join({c.x3, c.x13, c.x23, out}).projective_dim() == 3 * r + 2);
  }
}

TEST_CASE("cube propagation is deterministic") {
  Rng rng(77);
  CubeInputs c = random_cube(1, 7, rng);
  Subspace a = propagate_cube(c.x, c.x1, c.x2, c.x3, c.x12, c.x13, c.x23);
  Subspace b = propagate_cube(c.x, c.x1, c.x2, c.x3, c.x12, c.x13, c.x23);
  CHECK(a.basis() == b.basis());
}

TEST_CASE("collapsed cube is rejected strictly, allowed leniently") {
  Rng rng(5);
  Subspace u = random_subspace(8, 2, rng, 9);
  CHECK_THROWS_AS(propagate_cube(u, u, u, u, u, u, u), DegenerateInput);
  Subspace out = propagate_cube(u, u, u, u, u, u, u, false);
  CHECK(out == u);
}

TEST_CASE("ambient dimension below 4r+3 is rejected") {
  Rng rng(6);
  // r = 1 planes in P^6 < P^7.
  std::vector<Subspace> s;
  for (int k = 0; k < 7; ++k) s.push_back(random_subspace(7, 2, rng, 9));
  CHECK_THROWS_AS(
      propagate_cube(s[0], s[1], s[2], s[3], s[4], s[5], s[6]),
      DegenerateInput);
}

TEST_CASE("mismatched corners are rejected") {
  Rng rng(7);
  Subspace a = random_subspace(8, 2, rng, 9);
  Subspace p = random_subspace(8, 1, rng, 9);
  CHECK_THROWS_AS(propagate_cube(a, a, a, a, a, a, p), DegenerateInput);
  Subspace other = random_subspace(9, 2, rng, 9);
  CHECK_THROWS_AS(propagate_cube(a, a, a, a, a, a, other), AmbientMismatch);
}

TEST_CASE("square planarity check") {
  QNet flat = point_net_2d({{0, 0}, {0, 1}, {1, 0}, {2, 3}});
  SquareCheck ok = check_square(flat, {0, 0}, 0, 1);
  CHECK(ok.planar);
  CHECK(ok.bound == 2);
  CHECK(ok.span_projective_dim == 2);

  QNet bent{2, 0, 3, {}};
  auto set_point = [&](VertexIndex v, long x, long y, long z) {
    bent.set(std::move(v),
             Subspace(Matrix::from_rows({{x, y, z, 1}})));
  };
  set_point({0, 0}, 0, 0, 0);
  set_point({1, 0}, 1, 0, 0);
  set_point({0, 1}, 0, 1, 0);
  set_point({1, 1}, 0, 0, 1);
  SquareCheck bad = check_square(bent, {0, 0}, 0, 1);
  CHECK_FALSE(bad.planar);
  CHECK(bad.span_projective_dim == 3);

  CHECK_THROWS_AS(check_square(bent, {1, 0}, 0, 1), MissingVertex);
}

TEST_CASE("net propagation fills the box and keeps squares planar") {
  for (int r : {0, 1}) {
    int d = 4 * r + 3;
    Rng rng(300 + r);
    QNet walls = generate_initial_data(3, r, d, {2, 2, 2}, rng);
    QNet net = propagate_net(walls, {2, 2, 2});
    int count = 0;
    for (const VertexIndex& v : region_vertices({2, 2, 2})) {
      CHECK(net.has(v));
      ++count;
    }
    CHECK(count == 27);
    for (const VertexIndex& n : region_vertices({2, 2, 2}))
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          if (n[i] >= 2 || n[j] >= 2) continue;
          CHECK(check_square(net, n, i, j).planar);
        }
  }
}

TEST_CASE("net propagation reports missing initial data") {
  Rng rng(11);
  QNet walls = generate_initial_data(3, 0, 3, {2, 2, 2}, rng);
  QNet gap = walls;
  gap.vertices.erase({0, 2, 1});
  try {
    propagate_net(gap, {2, 2, 2});
    FAIL("expected MissingVertex");
  } catch (const MissingVertex& e) {
    CHECK(e.at() == VertexIndex{0, 2, 1});
  }
  CHECK_THROWS_AS(propagate_net(walls, {2, 2}), Error);
}

TEST_CASE("degenerate interior data is reported with its cube") {
  Rng rng(12);
  QNet walls = generate_initial_data(3, 0, 3, {1, 1, 1}, rng);
  // Two equal corners collapse the span of x, x1, x2, x3.
  walls.set({0, 0, 1}, walls.at({0, 0, 0}));
  try {
    propagate_net(walls, {1, 1, 1});
    FAIL("expected DegenerateInput");
  } catch (const DegenerateInput& e) {
    CHECK(e.at() == VertexIndex{0, 0, 0});
    CHECK(e.axes() == std::vector<int>{0, 1, 2});
  }
}

TEST_CASE("four dimensional consistency for generic data") {
  for (int r : {0, 1}) {
    int d = 5 * r + 4;
    Rng rng(900 + r);
    QNet data = generate_initial_data(4, r, d, {1, 1, 1, 1}, rng);
    ConsistencyReport report = check_4d_consistency(data);
    CHECK(report.consistent);
    REQUIRE(report.candidates.size() == 4);
    for (int l = 1; l < 4; ++l)
      CHECK(report.candidates[l] == report.candidates[0]);
  }
}

TEST_CASE("triple choice does not change the propagated net") {
  Rng rng(31);
  QNet data = generate_initial_data(4, 0, 4, {1, 1, 1, 1}, rng);
  QNet a = propagate_net(data, {1, 1, 1, 1}, TripleChoice::Smallest);
  QNet b = propagate_net(data, {1, 1, 1, 1}, TripleChoice::Largest);
  for (const VertexIndex& v : region_vertices({1, 1, 1, 1}))
    CHECK(a.at(v) == b.at(v));
}

TEST_CASE("repeated corner in 4D data either collapses or stays consistent") {
  Rng rng(13);
  QNet data = generate_initial_data(4, 0, 4, {1, 1, 1, 1}, rng);
  data.set({0, 0, 0, 1}, data.at({0, 0, 0, 0}));
  try {
    ConsistencyReport report = check_4d_consistency(data);
    CHECK(report.consistent);
  } catch (const DegenerateInput&) {
    // A collapsed configuration is a legal outcome too.
  }
}
