#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grnet/errors.hpp"
#include "grnet/subspace.hpp"

using namespace grnet;

namespace {

Subspace span_rows(std::initializer_list<std::initializer_list<long>> rows) {
  return Subspace(Matrix::from_rows(rows));
}

}  // namespace

TEST_CASE("construction validates the basis") {
  CHECK_THROWS_AS(Subspace(Matrix::from_rows({{1, 2}, {2, 4}})), Error);
  CHECK_THROWS_AS(Subspace(Matrix(0, 3)), Error);
  Subspace s = span_rows({{1, 2, 3}});
  CHECK(s.ambient_dim() == 3);
  CHECK(s.vec_dim() == 1);
  CHECK(s.projective_dim() == 0);
}

TEST_CASE("equality ignores the choice of basis") {
  Subspace a = span_rows({{1, 0, 0}, {0, 1, 0}});
  Subspace b = span_rows({{1, 1, 0}, {1, -1, 0}});
  Subspace c = span_rows({{1, 0, 0}, {0, 0, 1}});
  CHECK(a == b);
  CHECK(a != c);
  CHECK(a.canonical_basis() == b.canonical_basis());
  Subspace d = span_rows({{1, 0}});
  CHECK(a != d);  // different ambient
}

TEST_CASE("join oracles") {
  // Three points in general position span a plane (projective dim 2).
  Subspace p1 = span_rows({{1, 0, 0, 1}});
  Subspace p2 = span_rows({{0, 1, 0, 1}});
  Subspace p3 = span_rows({{0, 0, 1, 1}});
  Subspace j = join({p1, p2, p3});
  CHECK(j.vec_dim() == 3);
  CHECK(j.projective_dim() == 2);
  CHECK(contains(j, p1));
  CHECK(contains(j, p2));
  CHECK(contains(j, p3));
  // Joining a contained subspace changes nothing.
  CHECK(join(j, p2) == j);
  CHECK_THROWS_AS(join(p1, span_rows({{1, 0}})), AmbientMismatch);
}

TEST_CASE("meet oracles") {
  // Two generic 6-dim subspaces of Q^8 intersect in dimension 4.
  Rng rng(42);
  Subspace u = random_subspace(8, 6, rng, 7);
  Subspace v = random_subspace(8, 6, rng, 7);
  REQUIRE(join(u, v).vec_dim() == 8);
  auto m = meet(u, v);
  REQUIRE(m.has_value());
  CHECK(m->vec_dim() == 4);
  CHECK(m->projective_dim() == 3);
  CHECK(contains(u, *m));
  CHECK(contains(v, *m));

  // Two generic 2-dim subspaces of Q^4 only share the origin.
  Subspace a = span_rows({{1, 0, 0, 0}, {0, 1, 0, 0}});
  Subspace b = span_rows({{0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK_FALSE(meet(a, b).has_value());
  CHECK_THROWS_AS(meet(a, span_rows({{1, 0}})), AmbientMismatch);
}

TEST_CASE("grassmann dimension identity on random pairs") {
  Rng rng(987654);
  for (int trial = 0; trial < 40; ++trial) {
    int ambient = static_cast<int>(rng.uniform(2, 9));
    int du = static_cast<int>(rng.uniform(1, ambient));
    int dv = static_cast<int>(rng.uniform(1, ambient));
    Subspace u = random_subspace(ambient, du, rng, 5);
    Subspace v = random_subspace(ambient, dv, rng, 5);
    auto m = meet(u, v);
    int meet_dim = m ? m->vec_dim() : 0;
    CHECK(u.vec_dim() + v.vec_dim() == join(u, v).vec_dim() + meet_dim);
    if (m) {
      CHECK(contains(u, *m));
      CHECK(contains(v, *m));
    }
    CHECK(contains(join(u, v), u));
  }
}

TEST_CASE("four lines in Q^8 whose last member lies in the span") {
  Rng rng(2718);
  Subspace l1 = random_subspace(8, 2, rng, 7);
  Subspace l2 = random_subspace(8, 2, rng, 7);
  Subspace l3 = random_subspace(8, 2, rng, 7);
  Subspace three = join({l1, l2, l3});
  REQUIRE(three.vec_dim() == 6);
  Subspace l4 = random_subspace_in(three, 2, rng, 7);
  CHECK(join({l1, l2, l3, l4}).vec_dim() == 6);
}

TEST_CASE("affine representative oracle") {
  Subspace s = span_rows({{2, 4, 2}});
  AffineRep rep = to_affine(s);
  CHECK(rep.r == 0);
  CHECK(rep.d == 2);
  CHECK(rep.block == Matrix::from_rows({{1, 2}}));
  CHECK(rep.expand() == Matrix::from_rows({{1, 2, 1}}));

  Subspace plane = span_rows({{1, 2, 3, 4}, {5, 6, 7, 8}});
  AffineRep p = to_affine(plane);
  Matrix expanded = p.expand();
  CHECK(expanded.block(0, 2, 2, 2) == Matrix::identity(2));
  CHECK(Subspace(expanded) == plane);

  // A direction at infinity for the chart has no representative.
  CHECK_THROWS_AS(to_affine(span_rows({{1, 0}})), NotAffine);
}

TEST_CASE("random subspaces are reproducible and normalized") {
  Rng a(7), b(7);
  Subspace s1 = random_subspace(6, 3, a, 9);
  Subspace s2 = random_subspace(6, 3, b, 9);
  CHECK(s1.basis() == s2.basis());
  CHECK_NOTHROW(to_affine(s1));

  Rng c(8);
  int resamples = -1;
  Subspace t = random_subspace(6, 2, c, 9, &resamples);
  CHECK(resamples >= 0);
  Subspace inner = random_subspace_in(t, 1, c, 9);
  CHECK(contains(t, inner));
  CHECK_NOTHROW(to_affine(inner));

  CHECK_THROWS_AS(random_subspace(3, 4, c, 9), Error);
  CHECK_THROWS_AS(random_subspace(3, 2, c, 0), Error);
}

TEST_CASE("contains_vector") {
  Subspace s = span_rows({{1, 0, 0}, {0, 1, 0}});
  CHECK(s.contains_vector(Matrix::from_rows({{3, -2, 0}})));
  CHECK_FALSE(s.contains_vector(Matrix::from_rows({{0, 0, 1}})));
  CHECK_THROWS_AS(s.contains_vector(Matrix::from_rows({{1, 0}})),
                  AmbientMismatch);
}
