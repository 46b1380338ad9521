#include "scring/derivations.hpp"

#include "scring/invariants.hpp"

namespace scring {

Matrix unflatten(const Field& f, const Vec& flat, std::size_t n) {
  if (flat.size() != n * n) throw error("flattened length mismatch");
  Matrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = flat[r * n + c];
  return m;
}

Vec flatten(const Matrix& m) {
  Vec out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c));
  return out;
}

Subspace derivation_space(const Algebra& a) {
  const Field& f = a.field();
  std::size_t n = a.dim();
  // unknowns D_{r,c} flattened row-major; one equation per (i,j,k)
  Matrix sys(f, n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& cij = a.basis_product(i, j);
      std::size_t base = (i * n + j) * n;
      for (std::size_t k = 0; k < n; ++k) {
        // D(b_i b_j)_k = sum_c cij[c] D_{k,c}
        for (std::size_t c = 0; c < n; ++c)
          if (!cij[c].is_zero()) sys.at(base + k, k * n + c) += cij[c];
        // (b_i D(b_j))_k = sum_r D_{r,j} c(i,r)[k]
        for (std::size_t r = 0; r < n; ++r) {
          const Scalar& ci = a.basis_product(i, r)[k];
          if (!ci.is_zero()) sys.at(base + k, r * n + j) -= ci;
          const Scalar& cj = a.basis_product(r, j)[k];
          if (!cj.is_zero()) sys.at(base + k, r * n + i) -= cj;
        }
      }
    }
  return Subspace::from_rows(kernel_basis(sys));
}

Subspace derivations_vanishing_on(const Algebra& a, const std::vector<Element>& elems) {
  Subspace der = derivation_space(a);
  const Field& f = a.field();
  std::size_t n = a.dim();
  if (elems.empty()) return der;
  // intersect with {D : D s = 0}
  Matrix sys(f, elems.size() * n, n * n);
  for (std::size_t e = 0; e < elems.size(); ++e) {
    if (elems[e].algebra != a) throw error("element not in the algebra");
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) sys.at(e * n + r, r * n + c) = elems[e].coords[c];
  }
  return der.intersect(Subspace::from_rows(kernel_basis(sys)));
}

HatLift hat_lift(const Construction& g, const Vec& coords) {
  if (!g.tag.embedding) throw error("algebra carries no matrix embedding");
  const MatrixEmbedding& emb = *g.tag.embedding;
  const Field& f = g.algebra.field();
  if (!f->has_derivation()) throw error("scalar field carries no derivation");
  Matrix image = emb.embed(coords);
  Matrix raw = image.derived();
  // try to express the result in the embedded basis
  std::size_t ne = emb.n * emb.n;
  Matrix sys(f, ne, g.algebra.dim());
  for (std::size_t b = 0; b < g.algebra.dim(); ++b) {
    Vec fb = flatten(emb.images[b]);
    for (std::size_t r = 0; r < ne; ++r) sys.at(r, b) = fb[r];
  }
  HatLift out;
  out.raw = raw;
  if (auto sol = solve(sys, flatten(raw))) {
    out.in_algebra = true;
    out.coords = *sol;
  }
  return out;
}

HatLift hat_lift(const Construction& g, const Element& a) {
  if (a.algebra != g.algebra) throw error("element not in the algebra");
  return hat_lift(g, a.coords);
}

std::optional<AdditiveMatrix> hat_lift_map(const Construction& g) {
  if (!g.tag.embedding) throw error("algebra carries no matrix embedding");
  const Field& f = g.algebra.field();
  if (!f->has_derivation()) throw error("scalar field carries no derivation");
  for (const Matrix& img : g.tag.embedding->images)
    if (!img.derived().is_zero()) return std::nullopt;
  // constant basis coefficients: the lift is the coordinatewise derivative
  std::size_t n = g.algebra.dim();
  AdditiveMatrix m{Matrix(f, n, n), Matrix::identity(f, n)};
  return m;
}

AdditiveMatrix scalar_to_delta(const Construction& lambda, const Vec& x0_in_m) {
  if (!lambda.is_triangular() || lambda.r_dim() != 1)
    throw error("scalar_to_delta expects a triangular ring with scalar R part");
  const Field& f = lambda.algebra.field();
  if (!f->has_derivation()) throw error("scalar field carries no derivation");
  if (x0_in_m.size() != lambda.m_dim()) throw error("x0 length mismatch");
  Algebra M = lambda.m_algebra();
  if (!annihilator(M).contains(x0_in_m)) throw error("x0 is not in ann(M)");
  if (vec_is_zero(x0_in_m)) throw error("x0 must be non-zero");
  Matrix der(f, lambda.m_dim(), 1);
  for (std::size_t k = 0; k < lambda.m_dim(); ++k) der.at(k, 0) = x0_in_m[k];
  return AdditiveMatrix{Matrix(f, lambda.m_dim(), 1), std::move(der)};
}

}  // namespace scring
