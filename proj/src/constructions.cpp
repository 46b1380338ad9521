#include "scring/constructions.hpp"

namespace scring {

Matrix MatrixEmbedding::embed(const Vec& coords) const {
  if (coords.size() != images.size()) throw error("coordinate length mismatch");
  Matrix out(images[0].field(), n, n);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    out = out + images[i].scaled(coords[i]);
  }
  return out;
}

std::string kind_name(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::plain: return "plain";
    case ConstructionKind::triangular: return "triangular";
    case ConstructionKind::semidirect_double: return "semidirect_double";
    case ConstructionKind::semidirect_rho: return "semidirect_rho";
    case ConstructionKind::heisenberg: return "heisenberg";
    case ConstructionKind::two_dim_lie: return "two_dim_lie";
    case ConstructionKind::trivial_mult: return "trivial_mult";
    case ConstructionKind::truncated_poly: return "truncated_poly";
    case ConstructionKind::null_quadratic: return "null_quadratic";
    case ConstructionKind::matrix_assoc: return "matrix_assoc";
    case ConstructionKind::matrix_lie: return "matrix_lie";
    case ConstructionKind::s_of: return "s_of";
    case ConstructionKind::local_sum: return "local_sum";
  }
  return "?";
}

Subspace Construction::m_ideal() const {
  if (!is_triangular()) throw error("algebra is not triangular-tagged");
  const Field& f = algebra.field();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < m_dim(); ++i)
    rows.push_back(vec_unit(f, algebra.dim(), r_dim() + i));
  return Subspace::span(f, algebra.dim(), rows);
}

Subspace Construction::r_part() const {
  if (!is_triangular()) throw error("algebra is not triangular-tagged");
  const Field& f = algebra.field();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < r_dim(); ++i) rows.push_back(vec_unit(f, algebra.dim(), i));
  return Subspace::span(f, algebra.dim(), rows);
}

Vec Construction::embed_r(const Vec& r) const {
  if (r.size() != r_dim()) throw error("R-part length mismatch");
  Vec x = algebra.zero_vec();
  for (std::size_t i = 0; i < r.size(); ++i) x[i] = r[i];
  return x;
}

Vec Construction::embed_m(const Vec& m) const {
  if (m.size() != m_dim()) throw error("M-part length mismatch");
  Vec x = algebra.zero_vec();
  for (std::size_t i = 0; i < m.size(); ++i) x[r_dim() + i] = m[i];
  return x;
}

Vec Construction::project_r(const Vec& x) const {
  return Vec(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(r_dim()));
}

Vec Construction::project_m(const Vec& x) const {
  return Vec(x.begin() + static_cast<std::ptrdiff_t>(r_dim()), x.end());
}

Algebra Construction::r_algebra() const { return subalgebra(algebra, r_part()); }
Algebra Construction::m_algebra() const { return subalgebra(algebra, m_ideal()); }

Matrix Construction::left_action(std::size_t r_index) const {
  const Field& f = algebra.field();
  Matrix m(f, m_dim(), m_dim());
  for (std::size_t j = 0; j < m_dim(); ++j) {
    Vec prod = algebra.basis_product(r_index, r_dim() + j);
    for (std::size_t k = 0; k < m_dim(); ++k) m.at(k, j) = prod[r_dim() + k];
  }
  return m;
}

Matrix Construction::right_action(std::size_t r_index) const {
  const Field& f = algebra.field();
  Matrix m(f, m_dim(), m_dim());
  for (std::size_t j = 0; j < m_dim(); ++j) {
    Vec prod = algebra.basis_product(r_dim() + j, r_index);
    for (std::size_t k = 0; k < m_dim(); ++k) m.at(k, j) = prod[r_dim() + k];
  }
  return m;
}

// --- actions -----------------------------------------------------------------

BilinearAction BilinearAction::scalar(const Algebra& module) {
  BilinearAction act;
  act.ring = field_as_algebra(module.field());
  act.module = module;
  act.left = {Matrix::identity(module.field(), module.dim())};
  act.right = act.left;
  return act;
}

BilinearAction BilinearAction::adjoint(const Algebra& lie) {
  BilinearAction act;
  act.ring = lie;
  act.module = erase_multiplication(lie);
  for (std::size_t i = 0; i < lie.dim(); ++i) {
    act.left.push_back(lie.left_mult_matrix(lie.basis_vec(i)));
    act.right.push_back(lie.right_mult_matrix(lie.basis_vec(i)));
  }
  return act;
}

Algebra field_as_algebra(const Field& f) {
  return Algebra(f, {"1"}, {{0, 0, 0, f->one()}});
}

Algebra erase_multiplication(const Algebra& a) {
  return Algebra(a.field(), a.basis_names(), {});
}

// --- factories ---------------------------------------------------------------

Construction triangular(const BilinearAction& act) {
  const Algebra& R = act.ring;
  const Algebra& M = act.module;
  if (!same_field(R.field(), M.field())) throw error("field mismatch");
  if (act.left.size() != R.dim() || act.right.size() != R.dim())
    throw error("action has one matrix per R basis vector");
  for (const auto& m : act.left)
    if (m.rows() != M.dim() || m.cols() != M.dim()) throw error("action shape mismatch");
  for (const auto& m : act.right)
    if (m.rows() != M.dim() || m.cols() != M.dim()) throw error("action shape mismatch");

  const Field& f = R.field();
  std::size_t nr = R.dim(), nm = M.dim();
  std::vector<std::string> names;
  for (const auto& s : R.basis_names()) names.push_back("r." + s);
  for (const auto& s : M.basis_names()) names.push_back("m." + s);

  std::vector<TensorEntry> tensor = R.tensor();  // R x R -> R block
  for (const auto& e : M.tensor()) tensor.push_back({nr + e.i, nr + e.j, nr + e.k, e.c});
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nm; ++j) {
      for (std::size_t k = 0; k < nm; ++k) {
        const Scalar& l = act.left[i].at(k, j);
        if (!l.is_zero()) tensor.push_back({i, nr + j, nr + k, l});
        const Scalar& r = act.right[i].at(k, j);
        if (!r.is_zero()) tensor.push_back({nr + j, i, nr + k, r});
      }
    }
  ConstructionTag tag;
  tag.kind = ConstructionKind::triangular;
  tag.left_dim = nr;
  tag.right_dim = nm;
  return {Algebra(f, std::move(names), std::move(tensor)), std::move(tag)};
}

Construction semidirect_double(const Construction& g) {
  AxiomReport rep = check_axioms(g.algebra);
  if (!rep.lie) throw error("semidirect_double requires a Lie algebra");
  Construction out = triangular(BilinearAction::adjoint(g.algebra));
  out.tag.kind = ConstructionKind::semidirect_double;
  out.tag.inner = std::make_shared<ConstructionTag>(g.tag);
  if (g.tag.embedding) {
    // (a,x) -> [[a, x], [0, a]]
    const MatrixEmbedding& e = *g.tag.embedding;
    MatrixEmbedding doubled;
    doubled.n = 2 * e.n;
    const Field& f = g.algebra.field();
    auto place = [&](const Matrix& m, bool diag, bool corner) {
      Matrix big(f, doubled.n, doubled.n);
      for (std::size_t i = 0; i < e.n; ++i)
        for (std::size_t j = 0; j < e.n; ++j) {
          if (diag) {
            big.at(i, j) = m.at(i, j);
            big.at(e.n + i, e.n + j) = m.at(i, j);
          }
          if (corner) big.at(i, e.n + j) = m.at(i, j);
        }
      return big;
    };
    for (const auto& m : e.images) doubled.images.push_back(place(m, true, false));
    for (const auto& m : e.images) doubled.images.push_back(place(m, false, true));
    out.tag.embedding = std::move(doubled);
  }
  return out;
}

Construction semidirect_double(const Algebra& g) { return semidirect_double(plain(g)); }

namespace {

bool is_derivation_of(const Matrix& d, const Algebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec lhs = d.apply(a.basis_product(i, j));
      Vec rhs = vec_add(a.multiply(d.col(i), a.basis_vec(j)),
                        a.multiply(a.basis_vec(i), d.col(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace

Construction semidirect_rho(const Algebra& g1, const Algebra& g2,
                            const std::vector<Matrix>& rho) {
  if (!check_axioms(g1).lie || !check_axioms(g2).lie)
    throw error("semidirect_rho requires Lie algebras");
  if (rho.size() != g1.dim()) throw error("rho has one matrix per g1 basis vector");
  for (const auto& d : rho)
    if (!is_derivation_of(d, g2)) throw error("rho image is not a derivation of g2");
  BilinearAction act;
  act.ring = g1;
  act.module = g2;
  act.left = rho;
  for (const auto& d : rho) act.right.push_back(d.scaled(-g2.field()->one()));
  Construction out = triangular(act);
  out.tag.kind = ConstructionKind::semidirect_rho;
  return out;
}

Construction heisenberg(const Field& f, std::size_t n) {
  if (n < 1) throw error("heisenberg requires n >= 1");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("p" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("q" + std::to_string(i));
  names.push_back("z");
  std::vector<TensorEntry> tensor;
  for (std::size_t i = 0; i < n; ++i) {
    tensor.push_back({i, n + i, 2 * n, f->one()});
    tensor.push_back({n + i, i, 2 * n, -f->one()});
  }
  MatrixEmbedding emb;
  emb.n = n + 2;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(f, emb.n, emb.n);
    m.at(0, i + 1) = f->one();  // p_i = e_{1,i+1}
    emb.images.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(f, emb.n, emb.n);
    m.at(i + 1, n + 1) = f->one();  // q_i = e_{i+1,n+2}
    emb.images.push_back(std::move(m));
  }
  {
    Matrix m(f, emb.n, emb.n);
    m.at(0, n + 1) = f->one();  // z = e_{1,n+2}
    emb.images.push_back(std::move(m));
  }
  ConstructionTag tag;
  tag.kind = ConstructionKind::heisenberg;
  tag.embedding = std::move(emb);
  return {Algebra(f, std::move(names), std::move(tensor)), std::move(tag)};
}

Construction two_dim_lie(const Field& f) {
  std::vector<TensorEntry> tensor{{0, 1, 0, f->one()}, {1, 0, 0, -f->one()}};
  ConstructionTag tag;
  tag.kind = ConstructionKind::two_dim_lie;
  return {Algebra(f, {"x", "y"}, std::move(tensor)), std::move(tag)};
}

Construction trivial_mult(const Field& f, std::size_t n) {
  if (n < 1) throw error("trivial_mult requires n >= 1");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  ConstructionTag tag;
  tag.kind = ConstructionKind::trivial_mult;
  return {Algebra(f, std::move(names), {}), std::move(tag)};
}

Construction truncated_poly(const Field& f, std::size_t n) {
  if (n < 1) throw error("truncated_poly requires n >= 1");
  std::vector<std::string> names{"1"};
  for (std::size_t i = 1; i < n; ++i)
    names.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
  std::vector<TensorEntry> tensor;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) tensor.push_back({i, j, i + j, f->one()});
  ConstructionTag tag;
  tag.kind = ConstructionKind::truncated_poly;
  return {Algebra(f, std::move(names), std::move(tensor)), std::move(tag)};
}

Construction null_quadratic(std::int64_t p, std::size_t m) {
  if (m < 1) throw error("null_quadratic requires m >= 1");
  Field f = FieldSpec::prime(p);
  std::vector<std::string> names{"1"};
  for (std::size_t i = 1; i <= m; ++i) names.push_back("y" + std::to_string(i));
  std::vector<TensorEntry> tensor;
  for (std::size_t i = 0; i <= m; ++i) {
    tensor.push_back({0, i, i, f->one()});
    if (i > 0) tensor.push_back({i, 0, i, f->one()});
  }
  ConstructionTag tag;
  tag.kind = ConstructionKind::null_quadratic;
  return {Algebra(f, std::move(names), std::move(tensor)), std::move(tag)};
}

namespace {

Construction matrix_space(const Field& f, std::size_t n, bool lie) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      names.push_back("e" + std::to_string(i) + std::to_string(j));
  auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
  // e_ij e_kl = [j=k] e_il; Lie variant uses the commutator, whose two terms
  // can land on the same basis vector, so accumulate per pair
  std::vector<Vec> table(n * n * n * n);
  for (auto& v : table) v = vec_zero(f, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Vec& cell = table[idx(i, j) * n * n + idx(k, l)];
          if (j == k) cell[idx(i, l)] += f->one();
          if (lie && l == i) cell[idx(k, j)] -= f->one();
        }
  std::vector<TensorEntry> tensor;
  for (std::size_t a = 0; a < n * n; ++a)
    for (std::size_t b = 0; b < n * n; ++b)
      for (std::size_t k = 0; k < n * n; ++k)
        if (!table[a * n * n + b][k].is_zero())
          tensor.push_back({a, b, k, table[a * n * n + b][k]});
  MatrixEmbedding emb;
  emb.n = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix m(f, n, n);
      m.at(i, j) = f->one();
      emb.images.push_back(std::move(m));
    }
  ConstructionTag tag;
  tag.kind = lie ? ConstructionKind::matrix_lie : ConstructionKind::matrix_assoc;
  tag.embedding = std::move(emb);
  return {Algebra(f, std::move(names), std::move(tensor)), std::move(tag)};
}

}  // namespace

Construction matrix_algebra(const Field& f, std::size_t n) { return matrix_space(f, n, false); }
Construction matrix_lie(const Field& f, std::size_t n) { return matrix_space(f, n, true); }

Algebra s_of_raw(const Algebra& h) {
  const Field& f = h.field();
  std::size_t d = h.dim();
  std::vector<std::string> names;
  for (const auto& s : h.basis_names()) names.push_back("a." + s);
  for (const auto& s : h.basis_names()) names.push_back("b." + s);
  std::vector<TensorEntry> tensor;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vec& br = h.basis_product(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        if (br[k].is_zero()) continue;
        tensor.push_back({i, d + j, d + k, br[k]});      // (a1,0).(0,b2) = (0,[a1,b2])
        tensor.push_back({d + j, i, d + k, br[k]});      // (0,a2).(b1,0) = (0,[b1,a2])
      }
    }
  return Algebra(f, std::move(names), std::move(tensor));
}

Construction s_of(const Construction& h) {
  AxiomReport rep = check_axioms(h.algebra);
  if (!rep.lie || !rep.two_step_nilpotent)
    throw error("s_of requires a 2-step nilpotent Lie algebra");
  ConstructionTag tag;
  tag.kind = ConstructionKind::s_of;
  tag.left_dim = h.algebra.dim();
  tag.right_dim = h.algebra.dim();
  tag.inner = std::make_shared<ConstructionTag>(h.tag);
  return {s_of_raw(h.algebra), std::move(tag)};
}

Construction s_of(const Algebra& h) { return s_of(plain(h)); }

Construction local_sum(const Field& f, const Construction& m) {
  if (!same_field(f, m.algebra.field())) throw error("field mismatch");
  AxiomReport rep = check_axioms(m.algebra);
  if (!rep.commutative || !rep.associative)
    throw error("local_sum requires a commutative associative m");
  if (!rep.nilpotency_index) throw error("local_sum requires a nilpotent m");
  Construction out = triangular(BilinearAction::scalar(m.algebra));
  out.tag.kind = ConstructionKind::local_sum;
  out.tag.inner = std::make_shared<ConstructionTag>(m.tag);
  return out;
}

Construction local_sum(const Field& f, const Algebra& m) { return local_sum(f, plain(m)); }

Algebra restrict_scalars(const Algebra& a) {
  const Field& big = a.field();
  if (big->kind() != FieldKind::galois) throw error("restrict_scalars expects a GF(p^k) algebra");
  Field small = FieldSpec::prime(big->p());
  int k = big->degree();
  std::size_t n = a.dim();
  Scalar g = big->generator();

  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (int c = 0; c < k; ++c)
      names.push_back(c == 0 ? a.basis_names()[i]
                             : a.basis_names()[i] + ".g" + (c == 1 ? "" : std::to_string(c)));

  auto coeffs = [&](const Scalar& s) {
    std::vector<std::int64_t> out(k, 0);
    const auto& e = std::get<GFElem>(s.payload());
    for (std::size_t c = 0; c < e.c.size(); ++c) out[c] = e.c[c];
    return out;
  };

  std::vector<Scalar> gpow{big->one()};
  for (int c = 1; c < 2 * k; ++c) gpow.push_back(gpow.back() * g);

  std::vector<TensorEntry> tensor;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& prod = a.basis_product(i, j);
      for (int ci = 0; ci < k; ++ci)
        for (int cj = 0; cj < k; ++cj)
          for (std::size_t t = 0; t < n; ++t) {
            if (prod[t].is_zero()) continue;
            Scalar coef = gpow[ci + cj] * prod[t];
            auto digits = coeffs(coef);
            for (int ct = 0; ct < k; ++ct)
              if (digits[ct] != 0)
                tensor.push_back({i * k + ci, j * k + cj, t * k + static_cast<std::size_t>(ct),
                                  small->from_int(digits[ct])});
          }
    }
  return Algebra(small, std::move(names), std::move(tensor));
}

Construction plain(Algebra a) { return {std::move(a), ConstructionTag{}}; }

}  // namespace scring
