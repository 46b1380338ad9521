#ifndef SCRING_MATRIX_HPP
#define SCRING_MATRIX_HPP

#include <optional>
#include <vector>

#include "scring/field.hpp"

namespace scring {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f, const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

  Vec apply(const Vec& v) const;

  /// Entrywise derivation (zero matrix unless the field carries d/dt).
  Matrix derived() const;

  /// Rows stacked on top of each other.
  static Matrix vstack(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

struct RrefResult {
  Matrix mat;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Unique reduced row-echelon form.
RrefResult rref(const Matrix& m);

/// Basis of {v : m v = 0} as rows, RREF-normalized.
Matrix kernel_basis(const Matrix& m);

/// One exact solution of m x = b, if any.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

std::optional<Matrix> inverse(const Matrix& m);

std::size_t rank(const Matrix& m);

// vector helpers (length-checked elsewhere)
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Scalar& c);
Vec vec_zero(const Field& f, std::size_t n);
Vec vec_unit(const Field& f, std::size_t n, std::size_t i);
bool vec_is_zero(const Vec& a);

}  // namespace scring

#endif
