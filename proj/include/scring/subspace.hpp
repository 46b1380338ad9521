#ifndef SCRING_SUBSPACE_HPP
#define SCRING_SUBSPACE_HPP

#include "scring/matrix.hpp"

namespace scring {

/// A linear subspace in canonical form: basis rows in RREF, pivot columns
/// strictly increasing, no zero rows. Two Subspace values are equal iff they
/// span the same set.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(const Field& f, std::size_t ambient);
  static Subspace full(const Field& f, std::size_t ambient);
  static Subspace from_rows(const Matrix& rows);
  static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vec>& vectors);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const Field& field() const { return basis_.field(); }
  Vec basis_row(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  /// Coordinates of v with respect to the RREF basis, if v lies in the span.
  /// The basis being reduced makes these the entries of v at pivot columns.
  std::optional<Vec> coordinates(const Vec& v) const;

  /// Rows spanning {x : x . u = 0 for all u in this} (formal dot product);
  /// the span of this equals the kernel of the returned matrix.
  Matrix annihilator_matrix() const;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;  // RREF, dim x ambient
  std::vector<std::size_t> pivots_;
};

}  // namespace scring

#endif
