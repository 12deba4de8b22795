#include <catch2/catch_amalgamated.hpp>

#include "liework/mat.hpp"
#include "liework/sampling.hpp"
#include "liework/subspace.hpp"

using namespace liework;

namespace {

Mat random_mat(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = Rat(draw_int(rng, -4, 4), draw_int(rng, 1, 3));
  return m;
}

Subspace random_subspace(std::size_t ambient, std::mt19937_64& rng) {
  return Subspace::from_span(ambient, random_mat(draw(rng, ambient + 1), ambient, rng));
}

}  // namespace

TEST_CASE("rref canonical forms") {
  SECTION("identity is its own reduced form") {
    auto r = rref(Mat::identity(3));
    CHECK(r.m == Mat::identity(3));
    CHECK(r.rank == 3);
  }
  SECTION("zero matrix has rank zero") {
    auto r = rref(Mat::zero(2, 4));
    CHECK(r.m == Mat::zero(2, 4));
    CHECK(r.rank == 0);
  }
  SECTION("dependent rows collapse") {
    auto r = rref(Mat{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}});
    CHECK(r.m == Mat{{Rat(1), Rat(2)}, {Rat(0), Rat(0)}});
    CHECK(r.rank == 1);
  }
  SECTION("row space is preserved") {
    auto rng = seeded_rng("rref-rowspace");
    for (int iter = 0; iter < 30; ++iter) {
      const Mat m = random_mat(3, 5, rng);
      const auto r = rref(m);
      CHECK(Subspace::from_span(5, m) == Subspace::from_span(5, r.m));
    }
  }
}

TEST_CASE("determinant and inverse") {
  CHECK(determinant(Mat::identity(4)) == Rat(1));
  CHECK(determinant(Mat{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == Rat(0));
  CHECK(determinant(Mat{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}) == Rat(-1));
  CHECK_FALSE(inverse(Mat{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}).has_value());

  auto rng = seeded_rng("inverse");
  for (int iter = 0; iter < 20; ++iter) {
    const Mat t = random_invertible(4, rng);
    const auto tinv = inverse(t);
    REQUIRE(tinv.has_value());
    CHECK(t * *tinv == Mat::identity(4));
    CHECK(*tinv * t == Mat::identity(4));
    CHECK(determinant(t) * determinant(*tinv) == Rat(1));
  }
}

TEST_CASE("kernel basics") {
  CHECK(kernel(Mat::identity(3)).dim() == 0);
  CHECK(kernel(Mat::zero(1, 3)) == Subspace::full(3));

  const Subspace k = kernel(Mat{{Rat(1), Rat(1), Rat(0)}});
  CHECK(k.dim() == 2);
  CHECK(k.contains({Rat(1), Rat(-1), Rat(0)}));
  CHECK(k.contains({Rat(0), Rat(0), Rat(1)}));
  CHECK_FALSE(k.contains({Rat(1), Rat(0), Rat(0)}));
}

TEST_CASE("rank-nullity on random matrices") {
  auto rng = seeded_rng("rank-nullity");
  for (int iter = 0; iter < 50; ++iter) {
    const std::size_t rows = 1 + draw(rng, 5), cols = 1 + draw(rng, 5);
    const Mat m = random_mat(rows, cols, rng);
    CHECK(kernel(m).dim() + rref(m).rank == cols);
  }
}

TEST_CASE("subspace lattice on fixed examples") {
  const Subspace line = Subspace::from_span(3, {Vec{Rat(1), Rat(2), Rat(3)}});
  CHECK(subspace_sum(line, line) == line);

  const Subspace xy = Subspace::from_span(3, {unit_vec(3, 0), unit_vec(3, 1)});
  const Subspace yz = Subspace::from_span(3, {unit_vec(3, 1), unit_vec(3, 2)});
  const Subspace y_axis = Subspace::from_span(3, {unit_vec(3, 1)});
  CHECK(subspace_intersect(xy, yz) == y_axis);
  CHECK(subspace_sum(xy, yz) == Subspace::full(3));

  CHECK(Subspace::full(3).contains({Rat(7, 3), Rat(-1), Rat(0)}));
  CHECK_FALSE(Subspace::zero(3).contains({Rat(1), Rat(0), Rat(0)}));
  CHECK(Subspace::zero(3).contains({Rat(0), Rat(0), Rat(0)}));

  CHECK_THROWS_AS(subspace_sum(Subspace::full(2), Subspace::full(3)), DimensionMismatch);
  CHECK_THROWS_AS(subspace_intersect(Subspace::full(2), Subspace::full(3)), DimensionMismatch);
}

TEST_CASE("subspace equality is canonical and matches mutual containment") {
  auto rng = seeded_rng("subspace-equality");
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = 2 + draw(rng, 4);
    const Subspace a = random_subspace(n, rng);

    // remix the rows of a by invertible elementary operations: same span,
    // different presentation
    std::vector<Vec> mixed;
    for (std::size_t i = 0; i < a.dim(); ++i) mixed.push_back(a.basis().row(i));
    for (int op = 0; op < 6 && a.dim() > 0; ++op) {
      const std::size_t i = draw(rng, a.dim());
      const Rat scale(draw_int(rng, 1, 3), draw_int(rng, 1, 2));
      for (auto& x : mixed[i]) x *= scale;
      if (a.dim() > 1) {
        std::size_t j = draw(rng, a.dim() - 1);
        if (j >= i) ++j;
        add_scaled(mixed[i], Rat(draw_int(rng, -3, 3)), mixed[j]);
      }
    }
    const Subspace remat = Subspace::from_span(n, mixed);
    CHECK(subspace_equal(a, remat));
    CHECK(a.basis() == remat.basis());  // bit-identical representation

    const Subspace b = random_subspace(n, rng);
    const bool mutual = subspace_contains(a, b) && subspace_contains(b, a);
    CHECK(subspace_equal(a, b) == mutual);
    CHECK(subspace_equal(a, b) == subspace_equal(b, a));
    CHECK(subspace_equal(a, a));
  }
}

TEST_CASE("modular dimension law") {
  auto rng = seeded_rng("modular-law");
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = 2 + draw(rng, 5);
    const Subspace a = random_subspace(n, rng);
    const Subspace b = random_subspace(n, rng);
    const Subspace sum = subspace_sum(a, b);
    const Subspace meet = subspace_intersect(a, b);
    CHECK(a.dim() + b.dim() == sum.dim() + meet.dim());
    CHECK(subspace_contains(a, meet));
    CHECK(subspace_contains(b, meet));
    CHECK(subspace_contains(sum, a));
    CHECK(subspace_contains(sum, b));
  }
}

TEST_CASE("coords and residual agree with membership") {
  auto rng = seeded_rng("coords");
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t n = 2 + draw(rng, 4);
    const Subspace s = random_subspace(n, rng);
    // a vector assembled from the basis must come back with its coefficients
    Vec v(n, Rat(0));
    Vec expect;
    for (std::size_t i = 0; i < s.dim(); ++i) {
      const Rat c(draw_int(rng, -3, 3), draw_int(rng, 1, 2));
      add_scaled(v, c, s.basis().row(i));
      expect.push_back(c);
    }
    const auto c = s.coords(v);
    REQUIRE(c.has_value());
    CHECK(*c == expect);
    CHECK(s.contains(v));
  }
}

TEST_CASE("residual matrix kernel recovers the subspace") {
  auto rng = seeded_rng("residual-matrix");
  for (int iter = 0; iter < 30; ++iter) {
    const std::size_t n = 2 + draw(rng, 4);
    const Subspace s = random_subspace(n, rng);
    CHECK(kernel(s.residual_matrix()) == s);
  }
}

TEST_CASE("degenerate shapes") {
  CHECK(Subspace::zero(0).dim() == 0);
  CHECK(rref(Mat(0, 0)).rank == 0);
  CHECK(kernel(Mat(0, 3)) == Subspace::full(3));
  CHECK(Subspace::from_span(3, std::vector<Vec>{}) == Subspace::zero(3));
}
