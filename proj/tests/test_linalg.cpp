#include <doctest.h>

#include "scring/subspace.hpp"
#include "support.hpp"

using namespace scring;

namespace {

Matrix mat(const Field& f, std::size_t r, std::size_t c,
           const std::vector<std::vector<std::int64_t>>& data) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f->from_int(data[i][j]);
  return m;
}

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = test::random_scalar(f, rng, 5);
  return m;
}

}  // namespace

TEST_CASE("rref examples") {
  Field q = FieldSpec::rationals();
  SUBCASE("identity is its own rref") {
    auto rr = rref(Matrix::identity(q, 2));
    CHECK(rr.mat == Matrix::identity(q, 2));
    CHECK(rr.pivots == std::vector<std::size_t>{0, 1});
    CHECK(rr.rank == 2);
  }
  SUBCASE("zero matrix over GF(3)") {
    Field f3 = FieldSpec::prime(3);
    auto rr = rref(Matrix(f3, 3, 3));
    CHECK(rr.mat.is_zero());
    CHECK(rr.pivots.empty());
    CHECK(rr.rank == 0);
  }
  SUBCASE("rank-1 reduction by hand") {
    auto rr = rref(mat(q, 2, 2, {{2, 4}, {1, 2}}));
    CHECK(rr.mat == mat(q, 2, 2, {{1, 2}, {0, 0}}));
    CHECK(rr.rank == 1);
  }
}

TEST_CASE("rref is idempotent on random matrices") {
  std::mt19937_64 rng(3);
  for (const Field& f : {FieldSpec::rationals(), FieldSpec::prime(5), FieldSpec::galois(3, 2)}) {
    for (int i = 0; i < 30; ++i) {
      Matrix m = random_matrix(f, 1 + rng() % 5, 1 + rng() % 5, rng);
      Matrix r = rref(m).mat;
      CHECK(rref(r).mat == r);
    }
  }
}

TEST_CASE("kernel examples") {
  Field q = FieldSpec::rationals();
  SUBCASE("identity has zero kernel") {
    CHECK(kernel_basis(Matrix::identity(q, 3)).rows() == 0);
  }
  SUBCASE("zero map has full kernel") {
    CHECK(kernel_basis(Matrix(q, 2, 4)).rows() == 4);
  }
  SUBCASE("[[1,1]] has kernel span{(1,-1)}") {
    Matrix k = kernel_basis(mat(q, 1, 2, {{1, 1}}));
    CHECK(k == mat(q, 1, 2, {{1, -1}}));
  }
}

TEST_CASE("kernel vectors solve m v = 0 and dimensions add up") {
  std::mt19937_64 rng(5);
  for (const Field& f : {FieldSpec::rationals(), FieldSpec::prime(3)}) {
    for (int i = 0; i < 40; ++i) {
      Matrix m = random_matrix(f, 1 + rng() % 4, 1 + rng() % 5, rng);
      Matrix k = kernel_basis(m);
      CHECK(k.rows() + rank(m) == m.cols());
      for (std::size_t r = 0; r < k.rows(); ++r) CHECK(vec_is_zero(m.apply(k.row(r))));
    }
  }
}

TEST_CASE("solve examples") {
  Field q = FieldSpec::rationals();
  Vec b{q->from_int(3)};
  SUBCASE("identity solves to b") {
    Vec rhs{q->from_int(4), q->from_int(-1)};
    auto x = solve(Matrix::identity(q, 2), rhs);
    REQUIRE(x);
    CHECK(*x == rhs);
  }
  SUBCASE("zero matrix with non-zero rhs has no solution") {
    CHECK(!solve(Matrix(q, 1, 2), b));
  }
  SUBCASE("2x = 3 over Q") {
    auto x = solve(mat(q, 1, 1, {{2}}), b);
    REQUIRE(x);
    CHECK((*x)[0] == q->from_rat(3, 2));
  }
}

TEST_CASE("solutions returned by solve satisfy the system exactly") {
  std::mt19937_64 rng(9);
  Field f = FieldSpec::prime(7);
  for (int i = 0; i < 50; ++i) {
    Matrix m = random_matrix(f, 1 + rng() % 4, 1 + rng() % 4, rng);
    Vec b = test::random_vec(f, m.rows(), rng);
    if (auto x = solve(m, b)) CHECK(m.apply(*x) == b);
  }
}

TEST_CASE("subspace arithmetic examples") {
  Field q = FieldSpec::rationals();
  Subspace u = Subspace::span(q, 2, {{q->from_int(1), q->from_int(0)}});
  Subspace v = Subspace::span(q, 2, {{q->from_int(1), q->from_int(1)}});
  Subspace zero = Subspace::zero(q, 2);

  CHECK(u.sum(zero) == u);
  CHECK(u.intersect(u) == u);
  CHECK(u.intersect(v) == zero);
  CHECK(u.sum(v) == Subspace::full(q, 2));
  CHECK(u.contains(Vec{q->from_int(5), q->zero()}));
  CHECK(!u.contains(Vec{q->from_int(5), q->one()}));

  Subspace w = Subspace::span(q, 2, {{q->from_int(2), q->from_int(0)}});
  CHECK(u == w);  // canonical form identifies equal spans

  CHECK_THROWS_AS(u.sum(Subspace::zero(q, 3)), error);
}

TEST_CASE("subspace sum and intersection against membership, randomized") {
  std::mt19937_64 rng(21);
  Field f = FieldSpec::prime(3);
  for (int round = 0; round < 25; ++round) {
    std::size_t n = 4;
    Subspace u = Subspace::from_rows(random_matrix(f, 2, n, rng));
    Subspace v = Subspace::from_rows(random_matrix(f, 2, n, rng));
    Subspace s = u.sum(v);
    Subspace i = u.intersect(v);
    CHECK(s.contains(u));
    CHECK(s.contains(v));
    CHECK(u.contains(i));
    CHECK(v.contains(i));
    CHECK(s.dim() + i.dim() == u.dim() + v.dim());
    // every enumerated vector in both spans is in the intersection
    Algebra ambient(f, {"a", "b", "c", "d"}, {});
    for (const Vec& x : test::all_elements(ambient))
      CHECK((u.contains(x) && v.contains(x)) == i.contains(x));
  }
}

TEST_CASE("matrix inverse round trip") {
  std::mt19937_64 rng(33);
  Field f = FieldSpec::prime(11);
  for (int i = 0; i < 30; ++i) {
    Matrix m = random_matrix(f, 3, 3, rng);
    auto inv = inverse(m);
    if (inv) CHECK(m * *inv == Matrix::identity(f, 3));
  }
}
