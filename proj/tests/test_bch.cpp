#include <doctest.h>

#include "scring/automorphisms.hpp"
#include "scring/bch.hpp"
#include "support.hpp"

using namespace scring;

TEST_CASE("group construction preconditions") {
  Field q = FieldSpec::rationals();
  CHECK_THROWS_AS(BchGroup(truncated_poly(q, 2).algebra), error);        // not Lie
  CHECK_THROWS_AS(BchGroup(two_dim_lie(q).algebra), error);              // not 2-step
  CHECK_THROWS_AS(BchGroup(heisenberg(FieldSpec::prime(2), 1).algebra), error);  // char 2
  CHECK_NOTHROW(BchGroup(heisenberg(q, 1).algebra));
  CHECK_NOTHROW(BchGroup(trivial_mult(q, 2).algebra));  // abelian is fine
}

TEST_CASE("star examples") {
  Field q = FieldSpec::rationals();
  BchGroup g(heisenberg(q, 1).algebra);
  const Algebra& h = g.algebra();
  Element x = basis_element(h, 0), y = basis_element(h, 1), z = basis_element(h, 2);
  SUBCASE("0 is the identity") {
    std::mt19937_64 rng(1);
    Element a = test::random_element(h, rng);
    CHECK(g.star(a, zero_element(h)) == a);
    CHECK(g.star(zero_element(h), a) == a);
  }
  SUBCASE("p1 * q1 = p1 + q1 + z/2") {
    Element expect = x + y + z.scaled(q->from_rat(1, 2));
    CHECK(g.star(x, y) == expect);
  }
  SUBCASE("-x inverts x") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 50; ++i) {
      Element a = test::random_element(h, rng);
      CHECK(g.star(a, -a).is_zero());
      CHECK(g.star(-a, a).is_zero());
    }
  }
}

TEST_CASE("group commutator equals the Lie bracket") {
  for (const Field& f : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
    BchGroup g(semidirect_double(heisenberg(f, 1).algebra).algebra);
    const Algebra& L = g.algebra();
    std::mt19937_64 rng(3);
    for (std::size_t i = 0; i < L.dim(); ++i)
      for (std::size_t j = 0; j < L.dim(); ++j) {
        Element x = basis_element(L, i), y = basis_element(L, j);
        CHECK(g.group_commutator(x, y) == x * y);
      }
    for (int i = 0; i < 500; ++i) {
      Element x = test::random_element(L, rng, 4);
      Element y = test::random_element(L, rng, 4);
      CHECK(g.group_commutator(x, y) == x * y);
      if (g.group_commutator(x, y).is_zero()) continue;
    }
    // central elements commute
    Element central = basis_element(L, 2);
    std::mt19937_64 rng2(4);
    Element other = test::random_element(L, rng2);
    CHECK(g.group_commutator(central, other).is_zero());
  }
}

TEST_CASE("Lie ring recovery") {
  SUBCASE("abelian ring: star is addition") {
    Field q = FieldSpec::rationals();
    BchGroup g(trivial_mult(q, 2).algebra);
    std::mt19937_64 rng(5);
    Element a = test::random_element(g.algebra(), rng);
    Element b = test::random_element(g.algebra(), rng);
    CHECK(g.star(a, b) == a + b);
    CHECK(g.recovered_add(a, b) == a + b);
  }
  SUBCASE("recovered operations agree with the originals") {
    for (const Field& f : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
      BchGroup g(heisenberg(f, 1).algebra);
      std::mt19937_64 rng(6);
      for (int i = 0; i < 200; ++i) {
        Element a = test::random_element(g.algebra(), rng, 4);
        Element b = test::random_element(g.algebra(), rng, 4);
        CHECK(g.recovered_add(a, b) == a + b);
        CHECK(g.recovered_bracket(a, b) == a * b);
      }
    }
  }
  SUBCASE("round trip is the identity on structure constants") {
    for (const Algebra& L : {heisenberg(FieldSpec::rationals(), 1).algebra,
                             heisenberg(FieldSpec::prime(5), 2).algebra,
                             semidirect_double(heisenberg(FieldSpec::prime(3), 1)).algebra}) {
      BchGroup g(L);
      CHECK(g.recovered_algebra() == L);
    }
  }
}

TEST_CASE("exhaustive group axioms over GF(3)") {
  BchGroup g(heisenberg(FieldSpec::prime(3), 1).algebra);
  GroupCheckReport rep = check_group(g, true);
  CHECK(rep.ok);
  CHECK(rep.elements == 27);
  CHECK(rep.triples_checked == 19683);
  CHECK(rep.associative);
  CHECK(rep.identity_ok);
  CHECK(rep.inverses_ok);
  CHECK(rep.power_ok);
  CHECK(rep.center_matches);
  CHECK(rep.commutator_matches);
}

TEST_CASE("randomized group axioms over Q") {
  BchGroup g(heisenberg(FieldSpec::rationals(), 1).algebra);
  GroupCheckReport rep = check_group(g, false, 0, 1000);
  CHECK(rep.ok);
  CHECK(rep.triples_checked == 1000);
}

TEST_CASE("p-fold star over GF(p) collapses to zero") {
  Field f5 = FieldSpec::prime(5);
  BchGroup g(heisenberg(f5, 1).algebra);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    Element x = test::random_element(g.algebra(), rng);
    Element acc = x;
    for (int k = 1; k < 5; ++k) acc = g.star(acc, x);
    CHECK(acc.is_zero());
  }
}

TEST_CASE("fast exhaustive path agrees with the generic star") {
  Field f5 = FieldSpec::prime(5);
  BchGroup g(heisenberg(f5, 1).algebra);
  // property cross-check: random triples through the generic element path
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    Element x = test::random_element(g.algebra(), rng);
    Element y = test::random_element(g.algebra(), rng);
    Element z = test::random_element(g.algebra(), rng);
    CHECK(g.star(g.star(x, y), z) == g.star(x, g.star(y, z)));
  }
}

TEST_CASE("ring automorphisms transfer to the group") {
  Field f5 = FieldSpec::prime(5);
  Construction dbl = semidirect_double(heisenberg(f5, 1).algebra);
  BchGroup g(dbl.algebra);
  // a derivation-lifted automorphism: D(p1) = q1, D(q1) = 0, D(z) = 0
  Matrix d(f5, 3, 3);
  d.at(1, 0) = f5->one();
  AdditiveMap sigma = lift_aut_triangular(dbl, AdditiveMatrix::linear(d));
  REQUIRE(verify_automorphism(sigma));
  std::mt19937_64 rng(9);
  for (int i = 0; i < 500; ++i) {
    Element x = test::random_element(g.algebra(), rng);
    Element y = test::random_element(g.algebra(), rng);
    CHECK(sigma.apply(g.star(x, y)) == g.star(sigma.apply(x), sigma.apply(y)));
  }
}
