#include "scring/subspace.hpp"

namespace scring {

Subspace Subspace::zero(const Field& f, std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(f, 0, ambient);
  return s;
}

Subspace Subspace::full(const Field& f, std::size_t ambient) {
  return from_rows(Matrix::identity(f, ambient));
}

Subspace Subspace::from_rows(const Matrix& rows) {
  RrefResult rr = rref(rows);
  Subspace s;
  s.ambient_ = rows.cols();
  Matrix b(rows.field(), rr.rank, rows.cols());
  for (std::size_t i = 0; i < rr.rank; ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) b.at(i, j) = rr.mat.at(i, j);
  s.basis_ = std::move(b);
  s.pivots_ = rr.pivots;
  return s;
}

Subspace Subspace::span(const Field& f, std::size_t ambient, const std::vector<Vec>& vectors) {
  if (vectors.empty()) return zero(f, ambient);
  for (const auto& v : vectors)
    if (v.size() != ambient) throw error("ambient dimension mismatch");
  return from_rows(Matrix::from_rows(f, vectors));
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw error("ambient dimension mismatch");
  // reduce v against the RREF basis
  Vec w = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    const Scalar& c = w[pivots_[r]];
    if (c.is_zero()) continue;
    Scalar f = c;
    for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_.at(r, j);
  }
  return vec_is_zero(w);
}

bool Subspace::contains(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw error("ambient dimension mismatch");
  for (std::size_t i = 0; i < o.dim(); ++i)
    if (!contains(o.basis_row(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw error("ambient dimension mismatch");
  if (!same_field(field(), o.field())) throw error("field mismatch");
  return from_rows(Matrix::vstack(basis_, o.basis_));
}

Matrix Subspace::annihilator_matrix() const {
  return kernel_basis(basis_);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw error("ambient dimension mismatch");
  if (!same_field(field(), o.field())) throw error("field mismatch");
  // kernel of the stacked annihilator systems of both spans
  Matrix stacked = Matrix::vstack(annihilator_matrix(), o.annihilator_matrix());
  if (stacked.rows() == 0) return full(field(), ambient_);
  return from_rows(kernel_basis(stacked));
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c;
  c.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) c.push_back(v[pivots_[r]]);
  return c;
}

}  // namespace scring
