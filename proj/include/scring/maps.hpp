#ifndef SCRING_MAPS_HPP
#define SCRING_MAPS_HPP

#include "scring/algebra.hpp"

namespace scring {

/// An additive coordinate map x -> lin.x + der.x', where x' applies the
/// field derivation coordinatewise. A missing der part means a plain linear
/// map; a non-zero der part only makes sense over k(t). Maps built from
/// scalar derivations (and the automorphisms lifted from them) are additive
/// but not linear, which is exactly what the der part captures.
struct AdditiveMatrix {
  Matrix lin;
  std::optional<Matrix> der;

  std::size_t rows() const { return lin.rows(); }
  std::size_t cols() const { return lin.cols(); }

  Vec apply(const Vec& x) const;
  bool has_der() const { return der && !der->is_zero(); }
  AdditiveMatrix operator+(const AdditiveMatrix& o) const;
  bool operator==(const AdditiveMatrix& o) const;

  static AdditiveMatrix linear(Matrix m) { return {std::move(m), std::nullopt}; }
  static AdditiveMatrix identity(const Field& f, std::size_t n) {
    return {Matrix::identity(f, n), std::nullopt};
  }
};

/// An additive map between algebras, with multiplicativity checks.
class AdditiveMap {
 public:
  AdditiveMap() = default;
  AdditiveMap(Algebra dom, Algebra cod, AdditiveMatrix m);
  AdditiveMap(Algebra dom, Algebra cod, Matrix lin)
      : AdditiveMap(std::move(dom), std::move(cod), AdditiveMatrix::linear(std::move(lin))) {}

  static AdditiveMap identity(const Algebra& a);

  const Algebra& domain() const { return dom_; }
  const Algebra& codomain() const { return cod_; }
  const AdditiveMatrix& matrix() const { return m_; }
  const Matrix& lin() const { return m_.lin; }
  bool has_der() const { return m_.has_der(); }

  Vec apply(const Vec& x) const { return m_.apply(x); }
  Element apply(const Element& x) const;

  bool is_endomorphism() const { return dom_ == cod_; }
  AdditiveMap operator+(const AdditiveMap& o) const;
  bool operator==(const AdditiveMap& o) const;

 private:
  Algebra dom_, cod_;
  AdditiveMatrix m_;
};

struct HomCheck {
  bool ok = false;
  std::string failure;  // empty when ok
};

/// Exact multiplicativity test. For linear maps this is the classical
/// basis-pair check f(b_i b_j) = f(b_i) f(b_j), which suffices by bilinearity
/// and additivity. A map with derivation part B is multiplicative on all
/// elements iff for every basis pair, writing c for the domain tensor and m
/// for the codomain product:
///   (1) A.c(i,j) + B.c'(i,j) = m(A e_i, A e_j)
///   (2) B.c(i,j) = m(B e_i, A e_j)
///   (3) B.c(i,j) = m(A e_i, B e_j)
///   (4) m(B e_i, B e_j) = 0
/// (expand f(xy) = f(x)f(y) over x = sum g_i e_i, y = sum h_j e_j and match
/// the coefficients of g h, g' h, g h', g' h').
HomCheck check_homomorphism(const AdditiveMap& f);
bool verify_homomorphism(const AdditiveMap& f);

/// Composition f . g; absent when the derivation parts collide (a second
/// derivative would appear).
std::optional<AdditiveMap> compose(const AdditiveMap& f, const AdditiveMap& g);

/// Two-sided inverse within the same family, verified by composition.
std::optional<AdditiveMap> try_inverse(const AdditiveMap& f);

struct AutCheck {
  bool ok = false;
  std::string failure;
};
AutCheck check_automorphism(const AdditiveMap& f);
bool verify_automorphism(const AdditiveMap& f);

}  // namespace scring

#endif
