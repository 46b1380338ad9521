#include "scring/maps.hpp"

namespace scring {

Vec AdditiveMatrix::apply(const Vec& x) const {
  Vec r = lin.apply(x);
  if (der) {
    Vec dx = x;
    const Field& f = lin.field();
    for (auto& c : dx) c = f->derive(c);
    r = vec_add(r, der->apply(dx));
  }
  return r;
}

AdditiveMatrix AdditiveMatrix::operator+(const AdditiveMatrix& o) const {
  AdditiveMatrix r{lin + o.lin, std::nullopt};
  if (der && o.der)
    r.der = *der + *o.der;
  else if (der)
    r.der = der;
  else if (o.der)
    r.der = o.der;
  return r;
}

bool AdditiveMatrix::operator==(const AdditiveMatrix& o) const {
  if (lin != o.lin) return false;
  const Field& f = lin.field();
  Matrix zd = Matrix(f, lin.rows(), lin.cols());
  const Matrix& a = der ? *der : zd;
  const Matrix& b = o.der ? *o.der : zd;
  return a == b;
}

AdditiveMap::AdditiveMap(Algebra dom, Algebra cod, AdditiveMatrix m)
    : dom_(std::move(dom)), cod_(std::move(cod)), m_(std::move(m)) {
  if (m_.lin.rows() != cod_.dim() || m_.lin.cols() != dom_.dim())
    throw error("map shape does not match the algebras");
  if (m_.der && (m_.der->rows() != cod_.dim() || m_.der->cols() != dom_.dim()))
    throw error("derivation part shape mismatch");
  if (m_.der && !dom_.field()->has_derivation())
    throw error("derivation part over a field without derivation");
  if (!same_field(dom_.field(), cod_.field())) throw error("field mismatch");
}

AdditiveMap AdditiveMap::identity(const Algebra& a) {
  return AdditiveMap(a, a, AdditiveMatrix::identity(a.field(), a.dim()));
}

Element AdditiveMap::apply(const Element& x) const {
  if (x.algebra != dom_) throw error("element not in the map's domain");
  return {cod_, m_.apply(x.coords)};
}

AdditiveMap AdditiveMap::operator+(const AdditiveMap& o) const {
  if (dom_ != o.dom_ || cod_ != o.cod_) throw error("map domain/codomain mismatch");
  return AdditiveMap(dom_, cod_, m_ + o.m_);
}

bool AdditiveMap::operator==(const AdditiveMap& o) const {
  return dom_ == o.dom_ && cod_ == o.cod_ && m_ == o.m_;
}

HomCheck check_homomorphism(const AdditiveMap& f) {
  const Algebra& dom = f.domain();
  const Algebra& cod = f.codomain();
  std::size_t n = dom.dim();
  const Matrix& A = f.lin();

  std::vector<Vec> Acols(n), Bcols(n);
  for (std::size_t i = 0; i < n; ++i) Acols[i] = A.col(i);
  bool has_b = f.has_der();
  if (has_b)
    for (std::size_t i = 0; i < n; ++i) Bcols[i] = f.matrix().der->col(i);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec c = dom.basis_product(i, j);
      Vec lhs = A.apply(c);
      if (has_b) lhs = vec_add(lhs, f.matrix().der->apply(dom.basis_product_derived(i, j)));
      if (lhs != cod.multiply(Acols[i], Acols[j]))
        return {false, "f(b_i b_j) != f(b_i) f(b_j) at basis pair (" + std::to_string(i) +
                           "," + std::to_string(j) + ")"};
      if (!has_b) continue;
      Vec bc = f.matrix().der->apply(c);
      if (bc != cod.multiply(Bcols[i], Acols[j]))
        return {false, "derivation-part identity B c = m(B e_i, A e_j) fails at (" +
                           std::to_string(i) + "," + std::to_string(j) + ")"};
      if (bc != cod.multiply(Acols[i], Bcols[j]))
        return {false, "derivation-part identity B c = m(A e_i, B e_j) fails at (" +
                           std::to_string(i) + "," + std::to_string(j) + ")"};
      if (!vec_is_zero(cod.multiply(Bcols[i], Bcols[j])))
        return {false, "derivation-part identity m(B e_i, B e_j) = 0 fails at (" +
                           std::to_string(i) + "," + std::to_string(j) + ")"};
    }
  return {true, ""};
}

bool verify_homomorphism(const AdditiveMap& f) { return check_homomorphism(f).ok; }

std::optional<AdditiveMap> compose(const AdditiveMap& f, const AdditiveMap& g) {
  if (g.codomain() != f.domain()) return std::nullopt;
  const Matrix& A1 = f.lin();
  const Matrix& A2 = g.lin();
  const Field& k = A1.field();
  Matrix zero_f(k, f.lin().rows(), f.lin().cols());
  Matrix zero_g(k, g.lin().rows(), g.lin().cols());
  const Matrix& B1 = f.matrix().der ? *f.matrix().der : zero_f;
  const Matrix& B2 = g.matrix().der ? *g.matrix().der : zero_g;
  if (!(B1 * B2).is_zero()) return std::nullopt;  // would need a second derivative
  // (A1 + B1 d)(A2 + B2 d) x = (A1 A2 + B1 A2') x + (A1 B2 + B1 A2 + B1 B2') x'
  Matrix lin = A1 * A2 + B1 * A2.derived();
  Matrix der = A1 * B2 + B1 * A2 + B1 * B2.derived();
  AdditiveMatrix m{std::move(lin), std::nullopt};
  if (!der.is_zero()) m.der = std::move(der);
  return AdditiveMap(g.domain(), f.codomain(), std::move(m));
}

std::optional<AdditiveMap> try_inverse(const AdditiveMap& f) {
  if (!f.is_endomorphism() && f.domain().dim() != f.codomain().dim()) return std::nullopt;
  auto Ainv = inverse(f.lin());
  if (!Ainv) return std::nullopt;
  AdditiveMatrix m{*Ainv, std::nullopt};
  if (f.has_der()) {
    Matrix y = (Ainv->scaled(-f.domain().field()->one())) * (*f.matrix().der) * (*Ainv);
    if (!y.is_zero()) m.der = std::move(y);
  }
  AdditiveMap cand(f.codomain(), f.domain(), std::move(m));
  auto fg = compose(f, cand);
  auto gf = compose(cand, f);
  if (!fg || !gf) return std::nullopt;
  AdditiveMap id_cod = AdditiveMap::identity(f.codomain());
  AdditiveMap id_dom = AdditiveMap::identity(f.domain());
  if (!(*fg == id_cod) || !(*gf == id_dom)) return std::nullopt;
  return cand;
}

AutCheck check_automorphism(const AdditiveMap& f) {
  if (!f.is_endomorphism()) return {false, "domain and codomain differ"};
  HomCheck h = check_homomorphism(f);
  if (!h.ok) return {false, h.failure};
  if (!try_inverse(f)) return {false, "map is not invertible"};
  return {true, ""};
}

bool verify_automorphism(const AdditiveMap& f) { return check_automorphism(f).ok; }

}  // namespace scring
