#ifndef SCRING_ALGEBRA_HPP
#define SCRING_ALGEBRA_HPP

#include <array>
#include <string>

#include "scring/subspace.hpp"

namespace scring {

/// One sparse structure-constant entry: b_i . b_j contains c . b_k.
struct TensorEntry {
  std::size_t i, j, k;
  Scalar c;
};

/// A finite-dimensional non-associative ring over a field, given by a named
/// basis and a sparse structure-constant tensor. Multiplication is bilinear
/// by construction, so distributivity always holds. Immutable; handles share
/// the underlying data and may be copied freely across threads.
class Algebra {
 public:
  Algebra() = default;
  Algebra(Field field, std::vector<std::string> basis_names, std::vector<TensorEntry> tensor);

  const Field& field() const { return data_->field; }
  std::size_t dim() const { return data_->names.size(); }
  const std::vector<std::string>& basis_names() const { return data_->names; }
  const std::vector<TensorEntry>& tensor() const { return data_->tensor; }

  /// Coordinates of b_i . b_j.
  const Vec& basis_product(std::size_t i, std::size_t j) const {
    return data_->table[i * dim() + j];
  }
  /// Entrywise derivative of the coordinates of b_i . b_j (zero unless the
  /// scalar field carries d/dt and the tensor has non-constant entries).
  Vec basis_product_derived(std::size_t i, std::size_t j) const;

  Vec multiply(const Vec& a, const Vec& b) const;

  /// Matrix of x -> a.x on coordinates.
  Matrix left_mult_matrix(const Vec& a) const;
  /// Matrix of x -> x.a on coordinates.
  Matrix right_mult_matrix(const Vec& a) const;

  bool operator==(const Algebra& o) const;
  bool operator!=(const Algebra& o) const { return !(*this == o); }

  Vec zero_vec() const { return vec_zero(field(), dim()); }
  Vec basis_vec(std::size_t i) const { return vec_unit(field(), dim(), i); }

 private:
  struct Data {
    Field field;
    std::vector<std::string> names;
    std::vector<TensorEntry> tensor;  // sorted by (i,j,k), unique, non-zero c
    std::vector<Vec> table;           // dense basis products
  };
  std::shared_ptr<const Data> data_;
};

/// A coordinate vector in a specific algebra's basis.
struct Element {
  Algebra algebra;
  Vec coords;

  bool operator==(const Element& o) const {
    return algebra == o.algebra && coords == o.coords;
  }
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;  // ring product
  Element operator-() const;
  Element scaled(const Scalar& c) const;
  bool is_zero() const { return vec_is_zero(coords); }
  std::string str() const;
};

Element make_element(const Algebra& a, Vec coords);
Element basis_element(const Algebra& a, std::size_t i);
Element zero_element(const Algebra& a);

struct AxiomReport {
  bool commutative = false;
  bool associative = false;
  bool lie = false;  // alternating + Jacobi
  bool two_step_nilpotent = false;
  std::optional<Vec> unit;
  std::optional<std::size_t> nilpotency_index;
  // first witnesses of failure, for diagnostics
  std::optional<std::array<std::size_t, 2>> commutative_violation;
  std::optional<std::array<std::size_t, 3>> associative_violation;
  std::optional<std::array<std::size_t, 3>> jacobi_violation;
  std::optional<std::size_t> alternating_violation;
};

/// Verifies each flag exhaustively over basis tuples; bilinearity reduces the
/// element quantifiers to basis quantifiers. The unit is found by a linear
/// solve, so detection works over infinite fields too.
AxiomReport check_axioms(const Algebra& a);

/// True iff A.S and S.A land in S, checked on basis generators.
bool is_ideal(const Algebra& a, const Subspace& s);

/// Quotient by an ideal. The quotient basis consists of the standard
/// coordinates away from the pivot columns of the ideal's RREF basis; the
/// second component is the projection, a surjective homomorphism with kernel I.
struct QuotientResult {
  Algebra quotient;
  Matrix projection;                 // quotient-dim x dim
  std::vector<std::size_t> section;  // quotient basis index -> ambient coordinate
};
QuotientResult quotient(const Algebra& a, const Subspace& ideal);

Algebra direct_product(const Algebra& a, const Algebra& b);

/// The subspace must be closed under multiplication; basis = RREF rows.
Algebra subalgebra(const Algebra& a, const Subspace& s);

}  // namespace scring

#endif
