#include <doctest.h>

#include "scring/constructions.hpp"
#include "scring/local_rings.hpp"
#include "support.hpp"

using namespace scring;

TEST_CASE("triangular ring basics") {
  Field q = FieldSpec::rationals();
  SUBCASE("Lambda(Q, Q+) is the dual numbers, by explicit isomorphism") {
    Construction lam = triangular(BilinearAction::scalar(trivial_mult(q, 1).algebra));
    Algebra dual = truncated_poly(q, 2).algebra;
    // (r, m) -> r + m x
    AdditiveMap iso(lam.algebra, dual, Matrix::identity(q, 2));
    CHECK(verify_homomorphism(iso));
    CHECK(inverse(iso.lin()).has_value());
  }
  SUBCASE("Lambda(R, 0)-style restriction is R itself") {
    Algebra r = truncated_poly(q, 3).algebra;
    BilinearAction act;
    act.ring = r;
    act.module = trivial_mult(q, 1).algebra;
    act.left.assign(3, Matrix(q, 1, 1));
    act.right.assign(3, Matrix(q, 1, 1));
    Construction lam = triangular(act);
    Algebra rpart = lam.r_algebra();
    CHECK(rpart.dim() == r.dim());
    for (std::size_t i = 0; i < r.dim(); ++i)
      for (std::size_t j = 0; j < r.dim(); ++j)
        CHECK(rpart.basis_product(i, j) == r.basis_product(i, j));
  }
  SUBCASE("{0} x M is an ideal and the R restriction embeds") {
    Construction lam = semidirect_double(heisenberg(q, 1).algebra);
    CHECK(is_ideal(lam.algebra, lam.m_ideal()));
    // products of R-part vectors stay in the R part
    for (std::size_t i = 0; i < lam.r_dim(); ++i)
      for (std::size_t j = 0; j < lam.r_dim(); ++j)
        CHECK(lam.r_part().contains(
            lam.algebra.basis_product(i, j)));
  }
  SUBCASE("unital scalar action gives zero annihilator") {
    Construction lam = triangular(BilinearAction::scalar(trivial_mult(q, 2).algebra));
    CHECK(annihilator(lam.algebra).dim() == 0);
  }
}

TEST_CASE("semidirect double") {
  Field q = FieldSpec::rationals();
  SUBCASE("abelian input gives an abelian double") {
    Construction d = semidirect_double(trivial_mult(q, 2).algebra);
    CHECK(d.algebra.dim() == 4);
    CHECK(d.algebra.tensor().empty());
  }
  SUBCASE("bracket formula on Heisenberg") {
    Construction g = heisenberg(q, 1);
    Construction d = semidirect_double(g.algebra);
    // [(p1,0),(0,q1)] = (0, [p1,q1]) = (0, z)
    Vec a = d.embed_r(g.algebra.basis_vec(0));
    Vec b = d.embed_m(g.algebra.basis_vec(1));
    CHECK(d.algebra.multiply(a, b) == d.embed_m(g.algebra.basis_vec(2)));
    CHECK(check_axioms(d.algebra).lie);
    CHECK(check_axioms(d.algebra).two_step_nilpotent);
  }
  SUBCASE("center of the double is z(g) x z(g), brute-forced") {
    Construction d = semidirect_double(heisenberg(FieldSpec::prime(3), 1).algebra);
    Subspace z = center_lie(d.algebra);
    CHECK(z == test::brute_center_lie(d.algebra));
    CHECK(z.dim() == 2);
    Field f3 = FieldSpec::prime(3);
    CHECK(z == Subspace::span(f3, 6, {vec_unit(f3, 6, 2), vec_unit(f3, 6, 5)}));
  }
  SUBCASE("non-Lie input is rejected") {
    CHECK_THROWS_AS(semidirect_double(truncated_poly(q, 2).algebra), error);
  }
  SUBCASE("the double passes the Lie report whenever the input does") {
    for (const Algebra& g : {two_dim_lie(q).algebra, heisenberg(q, 2).algebra,
                             matrix_lie(FieldSpec::prime(5), 2).algebra}) {
      REQUIRE(check_axioms(g).lie);
      CHECK(check_axioms(semidirect_double(g).algebra).lie);
    }
  }
}

TEST_CASE("general semidirect sum") {
  Field q = FieldSpec::rationals();
  SUBCASE("zero action on an abelian summand is the direct sum") {
    Algebra g1 = heisenberg(q, 1).algebra;
    Algebra g2 = trivial_mult(q, 2).algebra;
    std::vector<Matrix> rho(3, Matrix(q, 2, 2));
    Construction s = semidirect_rho(g1, g2, rho);
    CHECK(check_axioms(s.algebra).lie);
    CHECK(s.algebra.tensor().size() == g1.tensor().size());
  }
  SUBCASE("aff(k) = k x|_id k") {
    Algebra one = trivial_mult(q, 1).algebra;
    Construction aff = semidirect_rho(one, one, {Matrix::identity(q, 1)});
    CHECK(aff.algebra.dim() == 2);
    // [(1,0),(0,1)] = (0,1)
    Vec a = aff.embed_r({q->one()});
    Vec b = aff.embed_m({q->one()});
    CHECK(aff.algebra.multiply(a, b) == aff.embed_m({q->one()}));
    CHECK(check_axioms(aff.algebra).lie);
  }
  SUBCASE("adjoint action reproduces the semidirect double") {
    Algebra g = heisenberg(q, 1).algebra;
    std::vector<Matrix> ad;
    for (std::size_t i = 0; i < 3; ++i) ad.push_back(g.left_mult_matrix(g.basis_vec(i)));
    Construction s = semidirect_rho(g, erase_multiplication(g), ad);
    Construction d = semidirect_double(g);
    CHECK(s.algebra.tensor().size() == d.algebra.tensor().size());
    for (std::size_t t = 0; t < s.algebra.tensor().size(); ++t) {
      CHECK(s.algebra.tensor()[t].i == d.algebra.tensor()[t].i);
      CHECK(s.algebra.tensor()[t].c == d.algebra.tensor()[t].c);
    }
  }
  SUBCASE("non-derivation action is rejected") {
    Algebra g1 = trivial_mult(q, 1).algebra;
    Algebra g2 = heisenberg(q, 1).algebra;
    Matrix bad(q, 3, 3);
    bad.at(2, 0) = q->one();
    bad.at(0, 2) = q->one();  // swaps p1 and z: not a derivation
    CHECK_THROWS_AS(semidirect_rho(g1, g2, {bad}), error);
  }
}

TEST_CASE("Heisenberg algebras") {
  Field q = FieldSpec::rationals();
  SUBCASE("structure constants match the matrix-unit commutators") {
    for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
      Construction h = heisenberg(q, n);
      REQUIRE(h.tag.embedding);
      const auto& emb = *h.tag.embedding;
      for (std::size_t i = 0; i < h.algebra.dim(); ++i)
        for (std::size_t j = 0; j < h.algebra.dim(); ++j) {
          Matrix lhs = emb.embed(h.algebra.basis_product(i, j));
          Matrix rhs = emb.images[i] * emb.images[j] - emb.images[j] * emb.images[i];
          CHECK(lhs == rhs);
        }
    }
  }
  SUBCASE("h3 is 2-step nilpotent with center z, brute-forced") {
    Construction h = heisenberg(FieldSpec::prime(3), 1);
    AxiomReport rep = check_axioms(h.algebra);
    CHECK(rep.lie);
    CHECK(rep.two_step_nilpotent);
    Subspace z = center_lie(h.algebra);
    CHECK(z == test::brute_center_lie(h.algebra));
    CHECK(z.dim() == 1);
    CHECK(z.contains(h.algebra.basis_vec(2)));
  }
  SUBCASE("h5 has dimension 5 and a 1-dimensional center") {
    Construction h = heisenberg(q, 2);
    CHECK(h.algebra.dim() == 5);
    CHECK(center_lie(h.algebra).dim() == 1);
  }
}

TEST_CASE("two-dimensional non-abelian Lie algebra") {
  Field q = FieldSpec::rationals();
  Construction g = two_dim_lie(q);
  Element x = basis_element(g.algebra, 0), y = basis_element(g.algebra, 1);
  CHECK(x * y == x);
  CHECK(y * x == -x);
  CHECK(check_axioms(g.algebra).lie);
  // derived subalgebra = span{x}
  CHECK(power_ideal(g.algebra, 2) ==
        Subspace::span(q, 2, {g.algebra.basis_vec(0)}));
  CHECK(center_lie(g.algebra).dim() == 0);
}

TEST_CASE("stock algebras") {
  SUBCASE("truncated polynomials") {
    Field q = FieldSpec::rationals();
    Algebra t2 = truncated_poly(q, 2).algebra;
    CHECK(vec_is_zero(t2.basis_product(1, 1)));  // x^2 = 0
    CHECK(*check_axioms(t2).unit == t2.basis_vec(0));
  }
  SUBCASE("null quadratic ring has m = ann(m)") {
    Construction r = null_quadratic(3, 2);
    // maximal ideal = span{y1, y2}, m^2 = 0
    Field f3 = r.algebra.field();
    Subspace m = Subspace::span(f3, 3, {r.algebra.basis_vec(1), r.algebra.basis_vec(2)});
    CHECK(is_ideal(r.algebra, m));
    CHECK(subspace_power(r.algebra, m, 2).dim() == 0);
    Algebra msub = subalgebra(r.algebra, m);
    CHECK(annihilator(msub).dim() == 2);
  }
  SUBCASE("gl_2 commutators") {
    Field q = FieldSpec::rationals();
    Algebra gl2 = matrix_lie(q, 2).algebra;
    // [e11, e12] = e12
    CHECK(gl2.basis_product(0, 1) == gl2.basis_vec(1));
  }
}

TEST_CASE("S(h) construction") {
  Field q = FieldSpec::rationals();
  Construction h = heisenberg(q, 1);
  Construction s = s_of(h);
  SUBCASE("product formula") {
    // (p1,0).(0,q1) = (0,[p1,q1]) = (0,z)
    Vec a = s.embed_r(h.algebra.basis_vec(0));
    Vec b = s.embed_m(h.algebra.basis_vec(1));
    CHECK(s.algebra.multiply(a, b) == s.embed_m(h.algebra.basis_vec(2)));
  }
  SUBCASE("commutative and associative, exhaustively on basis tuples") {
    AxiomReport rep = check_axioms(s.algebra);
    CHECK(rep.commutative);
    CHECK(rep.associative);
    CHECK(!rep.unit);
  }
  SUBCASE("triple products vanish") {
    CHECK(power_ideal(s.algebra, 3).dim() == 0);
  }
  SUBCASE("annihilator is z(h) x z(h)") {
    Subspace ann = annihilator(s.algebra);
    CHECK(ann.dim() == 2);
    CHECK(ann.contains(s.embed_r(h.algebra.basis_vec(2))));
    CHECK(ann.contains(s.embed_m(h.algebra.basis_vec(2))));
  }
  SUBCASE("3-step nilpotent input fails associativity and is rejected") {
    // free 3-step nilpotent on two generators, truncated:
    // [x,y] = c, [x,c] = d1, [y,c] = d2, d's central
    Field f = q;
    std::vector<TensorEntry> tensor{
        {0, 1, 2, f->one()},  {1, 0, 2, -f->one()},
        {0, 2, 3, f->one()},  {2, 0, 3, -f->one()},
        {1, 2, 4, f->one()},  {2, 1, 4, -f->one()},
    };
    Algebra free3(f, {"x", "y", "c", "d1", "d2"}, tensor);
    REQUIRE(check_axioms(free3).lie);
    REQUIRE(!check_axioms(free3).two_step_nilpotent);
    CHECK_THROWS_AS(s_of(free3), error);
    Algebra raw = s_of_raw(free3);
    CHECK(!check_axioms(raw).associative);
    CHECK(check_axioms(raw).commutative);
  }
}

TEST_CASE("local sum") {
  Field f3 = FieldSpec::prime(3);
  SUBCASE("Lambda(GF(3), m) rebuilds GF(3)[x]/(x^3)") {
    Algebra t3 = truncated_poly(f3, 3).algebra;
    Algebra m = subalgebra(t3, Subspace::span(f3, 3, {t3.basis_vec(1), t3.basis_vec(2)}));
    Construction r = local_sum(f3, m);
    CHECK(r.algebra.dim() == 3);
    // (0,x).(0,x) = (0,x^2), (1,0) is the unit
    AdditiveMap iso(r.algebra, t3, Matrix::identity(f3, 3));
    CHECK(verify_homomorphism(iso));
    REQUIRE(check_axioms(r.algebra).unit);
    CHECK(*check_axioms(r.algebra).unit == r.algebra.basis_vec(0));
  }
  SUBCASE("Lambda(GF(3), S(h3 x| h3+)) is 13-dimensional and local") {
    Construction g = semidirect_double(heisenberg(f3, 1).algebra);
    Construction s = s_of(g);
    Construction r = local_sum(f3, s);
    CHECK(r.algebra.dim() == 13);
    LocalReport rep = is_local(r.algebra, r.m_ideal());
    CHECK(rep.local);
  }
  SUBCASE("everything outside the maximal ideal is a unit") {
    Algebra t2 = truncated_poly(f3, 2).algebra;
    Algebra m = subalgebra(t2, Subspace::span(f3, 2, {t2.basis_vec(1)}));
    Construction r = local_sum(f3, m);
    AxiomReport ax = check_axioms(r.algebra);
    REQUIRE(ax.unit);
    std::vector<Vec> nonunits = test::brute_nonunits(r.algebra, *ax.unit);
    Subspace mi = r.m_ideal();
    for (const Vec& v : nonunits) CHECK(mi.contains(v));
    CHECK(nonunits.size() == 3);  // |m| = 3
  }
  SUBCASE("non-nilpotent m is rejected") {
    CHECK_THROWS_AS(local_sum(f3, truncated_poly(f3, 2).algebra), error);
  }
}

TEST_CASE("restrict_scalars") {
  Field f9 = FieldSpec::galois(3, 2);
  Algebra t2 = truncated_poly(f9, 2).algebra;
  Algebra small = restrict_scalars(t2);
  CHECK(small.dim() == 4);
  CHECK(small.field()->p() == 3);
  CHECK(small.field()->kind() == FieldKind::prime);
  // the product transports: (g.1).(g.1) = g^2.1 = -1 = 2.1
  Vec g1 = small.basis_vec(1);  // 1.g
  Vec prod = small.multiply(g1, g1);
  Vec expect = vec_scale(small.basis_vec(0), small.field()->from_int(2));
  CHECK(prod == expect);
  CHECK(check_axioms(small).commutative);
  CHECK(check_axioms(small).associative);
  REQUIRE(check_axioms(small).unit);
}

TEST_CASE("matrix embedding of the double") {
  Field q = FieldSpec::rationals();
  Construction d = semidirect_double(heisenberg(q, 1));
  REQUIRE(d.tag.embedding);
  const auto& emb = *d.tag.embedding;
  CHECK(emb.n == 6);
  // embedded brackets match the doubled structure constants
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      Matrix lhs = emb.embed(d.algebra.basis_product(i, j));
      Matrix rhs = emb.images[i] * emb.images[j] - emb.images[j] * emb.images[i];
      CHECK(lhs == rhs);
    }
}
