#ifndef SCRING_CONSTRUCTIONS_HPP
#define SCRING_CONSTRUCTIONS_HPP

#include "scring/maps.hpp"

namespace scring {

enum class ConstructionKind {
  plain,
  triangular,
  semidirect_double,
  semidirect_rho,
  heisenberg,
  two_dim_lie,
  trivial_mult,
  truncated_poly,
  null_quadratic,
  matrix_assoc,
  matrix_lie,
  s_of,
  local_sum,
};

/// A linear embedding of an algebra into n x n matrices: one image per basis
/// vector. Elements embed by linearity.
struct MatrixEmbedding {
  std::size_t n = 0;
  std::vector<Matrix> images;

  Matrix embed(const Vec& coords) const;
};

/// Provenance of a constructed algebra: which factory produced it, how its
/// coordinates split into an R part (first left_dim) and an M part, an
/// optional matrix embedding, and the tag of the ingredient it was built from.
struct ConstructionTag {
  ConstructionKind kind = ConstructionKind::plain;
  std::size_t left_dim = 0, right_dim = 0;
  std::optional<MatrixEmbedding> embedding;
  std::shared_ptr<const ConstructionTag> inner;

  bool is_triangular() const {
    return kind == ConstructionKind::triangular || kind == ConstructionKind::semidirect_double ||
           kind == ConstructionKind::semidirect_rho || kind == ConstructionKind::s_of ||
           kind == ConstructionKind::local_sum;
  }
};

std::string kind_name(ConstructionKind k);

/// An algebra together with its construction tag. Distinguished subspaces
/// ({0} x M, R x {0}) come from the split recorded in the tag.
struct Construction {
  Algebra algebra;
  ConstructionTag tag;

  bool is_triangular() const { return tag.is_triangular(); }
  std::size_t r_dim() const { return tag.left_dim; }
  std::size_t m_dim() const { return tag.right_dim; }

  /// {0} x M, the tagged ideal (the maximal ideal for local_sum).
  Subspace m_ideal() const;
  /// R x {0}.
  Subspace r_part() const;

  Vec embed_r(const Vec& r) const;
  Vec embed_m(const Vec& m) const;
  Vec project_r(const Vec& x) const;
  Vec project_m(const Vec& x) const;

  /// The R part as an algebra on the first left_dim coordinates.
  Algebra r_algebra() const;
  /// The M part as an algebra on the last right_dim coordinates.
  Algebra m_algebra() const;

  /// b_i^R . m in M coordinates / m . b_i^R likewise (the module action).
  Matrix left_action(std::size_t r_index) const;
  Matrix right_action(std::size_t r_index) const;
};

/// Left and right bilinear actions of R on M, one matrix per R basis vector.
struct BilinearAction {
  Algebra ring, module;
  std::vector<Matrix> left;   // left[i]: m -> b_i . m
  std::vector<Matrix> right;  // right[i]: m -> m . b_i

  /// R = the scalar field as a one-dimensional algebra acting by scalars.
  static BilinearAction scalar(const Algebra& module);
  /// R = a Lie algebra acting on its additive copy by the bracket.
  static BilinearAction adjoint(const Algebra& lie);
};

/// The scalar field as a one-dimensional unital algebra.
Algebra field_as_algebra(const Field& f);
/// The same additive group with the tensor erased.
Algebra erase_multiplication(const Algebra& a);

/// The ring on R x M with product (r1 r2, r1.m2 + m1.r2 + m1 m2).
Construction triangular(const BilinearAction& act);

/// g acting on its additive copy by the bracket: bracket
/// ((a,x),(b,y)) = ([a,b], [a,y] + [x,b]). Requires g to pass the Lie check.
Construction semidirect_double(const Construction& g);
Construction semidirect_double(const Algebra& g);

/// General semidirect sum with respect to rho: g1 -> Der(g2); each rho[i]
/// must be a derivation of g2.
Construction semidirect_rho(const Algebra& g1, const Algebra& g2,
                            const std::vector<Matrix>& rho);

/// (2n+1)-dimensional Heisenberg algebra, basis p1..pn, q1..qn, z with
/// [p_i, q_i] = z, embedded into (n+2) x (n+2) matrix units.
Construction heisenberg(const Field& f, std::size_t n);

/// dim 2 with [x,y] = x.
Construction two_dim_lie(const Field& f);

Construction trivial_mult(const Field& f, std::size_t n);
/// F[x]/(x^n): basis 1, x, ..., x^(n-1).
Construction truncated_poly(const Field& f, std::size_t n);
/// GF(p)[y_1..y_m]/(y_i y_j): basis 1, y1..ym.
Construction null_quadratic(std::int64_t p, std::size_t m);
/// Full n x n associative matrix algebra, with the identity embedding.
Construction matrix_algebra(const Field& f, std::size_t n);
/// gl_n: the same space under the commutator bracket.
Construction matrix_lie(const Field& f, std::size_t n);

/// The commutative associative ring on h x h with product
/// (a1,a2).(b1,b2) = (0, [a1,b2] + [b1,a2]); requires h 2-step nilpotent Lie.
Construction s_of(const Construction& h);
Construction s_of(const Algebra& h);
/// Same product without the precondition (the axiom failures are then visible
/// to check_axioms).
Algebra s_of_raw(const Algebra& h);

/// The unital local ring k + m for a nilpotent commutative associative m,
/// with the scalar action; tags the maximal ideal {0} x m.
Construction local_sum(const Field& f, const Construction& m);
Construction local_sum(const Field& f, const Algebra& m);

/// View a GF(p^k)-algebra as a GF(p)-algebra of dimension k.dim.
Algebra restrict_scalars(const Algebra& a);

Construction plain(Algebra a);

}  // namespace scring

#endif
