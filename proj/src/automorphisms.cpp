#include "scring/automorphisms.hpp"

#include "scring/invariants.hpp"

namespace scring {

namespace {

// column space of [lin | der]
Subspace map_image(const AdditiveMatrix& m) {
  const Field& f = m.lin.field();
  std::vector<Vec> rows;
  for (std::size_t c = 0; c < m.lin.cols(); ++c) rows.push_back(m.lin.col(c));
  if (m.der)
    for (std::size_t c = 0; c < m.der->cols(); ++c) rows.push_back(m.der->col(c));
  return Subspace::span(f, m.lin.rows(), rows);
}

}  // namespace

AdditiveMap lift_aut_triangular(const Construction& lambda, const AdditiveMatrix& delta) {
  if (!lambda.is_triangular()) throw error("algebra is not triangular-tagged");
  const Field& f = lambda.algebra.field();
  std::size_t nr = lambda.r_dim(), nm = lambda.m_dim(), n = lambda.algebra.dim();
  if (delta.lin.rows() != nm || delta.lin.cols() != nr)
    throw error("delta must map the R part into M coordinates");

  Algebra M = lambda.m_algebra();
  Subspace ann_m = annihilator(M);
  if (!ann_m.contains(map_image(delta)))
    throw error("image of delta is not contained in ann(M)");

  // delta(r r') = r.delta(r') + delta(r).r' on R basis pairs; with a
  // derivation part B the expansion over non-constant coordinates adds
  //   B c = act_l(i) B e_j   and   B c = act_r(j) B e_i
  Algebra R = lambda.r_algebra();
  const Field& k = f;
  Matrix zero_d(k, nm, nr);
  const Matrix& A = delta.lin;
  const Matrix& B = delta.der ? *delta.der : zero_d;
  bool has_b = delta.der && !delta.der->is_zero();
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nr; ++j) {
      Vec c = R.basis_product(i, j);
      Matrix act_l = lambda.left_action(i);
      Matrix act_r = lambda.right_action(j);
      Vec lhs = A.apply(c);
      if (has_b) lhs = vec_add(lhs, B.apply(R.basis_product_derived(i, j)));
      Vec rhs = vec_add(act_l.apply(A.col(j)), act_r.apply(A.col(i)));
      if (lhs != rhs)
        throw error("delta violates the Leibniz identity at R basis pair (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
      if (!has_b) continue;
      Vec bc = B.apply(c);
      if (bc != act_l.apply(B.col(j)))
        throw error("delta derivation part violates B c = r.B e_j at (" + std::to_string(i) +
                    "," + std::to_string(j) + ")");
      if (bc != act_r.apply(B.col(i)))
        throw error("delta derivation part violates B c = B e_i.r' at (" + std::to_string(i) +
                    "," + std::to_string(j) + ")");
    }

  // sigma = identity + the (M,R) block of delta
  Matrix lin = Matrix::identity(f, n);
  for (std::size_t r = 0; r < nm; ++r)
    for (std::size_t c = 0; c < nr; ++c) lin.at(nr + r, c) += A.at(r, c);
  AdditiveMatrix sigma{std::move(lin), std::nullopt};
  if (has_b) {
    Matrix der(f, n, n);
    for (std::size_t r = 0; r < nm; ++r)
      for (std::size_t c = 0; c < nr; ++c) der.at(nr + r, c) = B.at(r, c);
    sigma.der = std::move(der);
  }
  return AdditiveMap(lambda.algebra, lambda.algebra, std::move(sigma));
}

namespace {

// common scaffolding for the local-ring lifts
struct LocalParts {
  Algebra m;
  Subspace ann_m;   // ambient m_dim
  Subspace m_sq;    // ambient m_dim
};

LocalParts local_parts(const Construction& r) {
  if (r.tag.kind != ConstructionKind::local_sum)
    throw error("expected a local-sum tagged ring");
  LocalParts p;
  p.m = r.m_algebra();
  p.ann_m = annihilator(p.m);
  p.m_sq = power_ideal(p.m, 2);
  return p;
}

AdditiveMap assemble_local(const Construction& r, const Matrix& g) {
  const Field& f = r.algebra.field();
  std::size_t nm = r.m_dim(), n = r.algebra.dim();
  Matrix lin = Matrix::identity(f, n);
  for (std::size_t i = 0; i < nm; ++i)
    for (std::size_t j = 0; j < nm; ++j) lin.at(1 + i, 1 + j) = g.at(i, j);
  return AdditiveMap(r.algebra, r.algebra, std::move(lin));
}

}  // namespace

AdditiveMap lift_aut_local_g(const Construction& r, const Matrix& g_on_m) {
  LocalParts p = local_parts(r);
  std::size_t nm = r.m_dim();
  if (g_on_m.rows() != nm || g_on_m.cols() != nm) throw error("g must act on m coordinates");
  if (!inverse(g_on_m)) throw error("g is not bijective");
  Matrix diff = g_on_m - Matrix::identity(r.algebra.field(), nm);
  for (std::size_t c = 0; c < nm; ++c)
    if (!p.ann_m.contains(diff.col(c)))
      throw error("g - id does not map m into ann(m) (column " + std::to_string(c) + ")");
  for (std::size_t i = 0; i < p.m_sq.dim(); ++i) {
    Vec v = p.m_sq.basis_row(i);
    if (g_on_m.apply(v) != v) throw error("g is not the identity on m^2");
  }
  return assemble_local(r, g_on_m);
}

AdditiveMap lift_aut_local_f(const Construction& r, const Matrix& f_on_m) {
  LocalParts p = local_parts(r);
  std::size_t nm = r.m_dim();
  if (f_on_m.rows() != nm || f_on_m.cols() != nm) throw error("f must act on m coordinates");
  for (std::size_t i = 0; i < p.ann_m.dim(); ++i)
    if (!vec_is_zero(f_on_m.apply(p.ann_m.basis_row(i))))
      throw error("f is not well-defined on m/ann(m): it does not kill ann(m)");
  for (std::size_t c = 0; c < nm; ++c)
    if (!p.ann_m.contains(f_on_m.col(c)))
      throw error("image of f is not contained in ann(m)");
  Subspace msq_plus_ann = p.m_sq.sum(p.ann_m);
  for (std::size_t i = 0; i < msq_plus_ann.dim(); ++i)
    if (!vec_is_zero(f_on_m.apply(msq_plus_ann.basis_row(i))))
      throw error("f does not vanish on (m^2 + ann(m))/ann(m)");
  Matrix g = Matrix::identity(r.algebra.field(), nm) + f_on_m;
  return lift_aut_local_g(r, g);
}

std::optional<AdditiveMap> build_fixing_automorphism(
    const Construction& r, const std::vector<Vec>& fixed,
    const std::vector<std::pair<Vec, Vec>>& pairs) {
  LocalParts p = local_parts(r);
  const Field& f = r.algebra.field();
  std::size_t nm = r.m_dim();

  // every difference must lie in {0} x ann(m)
  std::vector<std::pair<Vec, Vec>> mpairs;
  for (const auto& [b, bp] : pairs) {
    if (b.size() != r.algebra.dim() || bp.size() != r.algebra.dim())
      throw error("pair element length mismatch");
    Vec diff = vec_sub(b, bp);
    if (!vec_is_zero(r.project_r(diff)) || !p.ann_m.contains(r.project_m(diff)))
      throw error("pair difference b - b' is not in ann(m)");
    mpairs.emplace_back(r.project_m(b), r.project_m(bp));
  }

  std::vector<Vec> w_rows;
  for (std::size_t i = 0; i < p.m_sq.dim(); ++i) w_rows.push_back(p.m_sq.basis_row(i));
  for (const auto& x : fixed) {
    if (x.size() != r.algebra.dim()) throw error("fixed element length mismatch");
    w_rows.push_back(r.project_m(x));
  }
  Subspace w = Subspace::span(f, nm, w_rows);

  // maximal subfamily of sources independent over W; dependent sources have
  // forced images, which must agree with the requested ones
  std::vector<Vec> b_src, b_dst;
  for (const auto& [bm, bpm] : mpairs) {
    Subspace cur = w;
    std::vector<Vec> ext = w_rows;
    for (const auto& s : b_src) ext.push_back(s);
    cur = Subspace::span(f, nm, ext);
    if (!cur.contains(bm)) {
      b_src.push_back(bm);
      b_dst.push_back(bpm);
      continue;
    }
    // bm = w + sum xi_i b_i: solve for the combination
    Matrix sys(f, nm, ext.size());
    for (std::size_t c = 0; c < ext.size(); ++c)
      for (std::size_t row = 0; row < nm; ++row) sys.at(row, c) = ext[c][row];
    auto sol = solve(sys, bm);
    if (!sol) return std::nullopt;
    // g(bm) = w-part + sum xi_i b'_i = bm + sum xi_i (b'_i - b_i)
    Vec forced = bm;
    for (std::size_t i = 0; i < b_src.size(); ++i) {
      const Scalar& xi = (*sol)[w_rows.size() + i];
      if (!xi.is_zero())
        forced = vec_add(forced, vec_scale(vec_sub(b_dst[i], b_src[i]), xi));
    }
    if (forced != bpm) return std::nullopt;  // inconsistent assignment
  }

  // targets must be independent over W as well
  {
    std::vector<Vec> ext = w_rows;
    for (const auto& d : b_dst) ext.push_back(d);
    if (Subspace::span(f, nm, ext).dim() != w.dim() + b_dst.size()) return std::nullopt;
  }

  auto greedy_extend = [&](std::vector<Vec>& basis_rows, const std::vector<Vec>& candidates) {
    std::vector<Vec> added;
    for (const auto& v : candidates) {
      std::vector<Vec> trial = basis_rows;
      trial.push_back(v);
      if (Subspace::span(f, nm, trial).dim() > Subspace::span(f, nm, basis_rows).dim()) {
        basis_rows.push_back(v);
        added.push_back(v);
      }
    }
    return added;
  };

  // differences span
  std::vector<Vec> d_rows;
  for (std::size_t i = 0; i < b_src.size(); ++i) d_rows.push_back(vec_sub(b_src[i], b_dst[i]));
  Subspace diffs = Subspace::span(f, nm, d_rows);
  std::vector<Vec> diff_basis;
  for (std::size_t i = 0; i < diffs.dim(); ++i) diff_basis.push_back(diffs.basis_row(i));

  // c over <W, b>, c' over <W, b'>
  std::vector<Vec> span_b = w_rows;
  for (const auto& s : b_src) span_b.push_back(s);
  std::vector<Vec> c_basis = greedy_extend(span_b, diff_basis);
  std::vector<Vec> span_bp = w_rows;
  for (const auto& d : b_dst) span_bp.push_back(d);
  std::vector<Vec> cp_basis = greedy_extend(span_bp, diff_basis);
  if (c_basis.size() != cp_basis.size()) return std::nullopt;

  // ann(m)-basis over <W, b, b', c>, then a complement basis of m
  std::vector<Vec> span_all = w_rows;
  for (const auto& s : b_src) span_all.push_back(s);
  for (const auto& d : b_dst) span_all.push_back(d);
  for (const auto& c : c_basis) span_all.push_back(c);
  std::vector<Vec> ann_rows;
  for (std::size_t i = 0; i < p.ann_m.dim(); ++i) ann_rows.push_back(p.ann_m.basis_row(i));
  std::vector<Vec> d_ext = greedy_extend(span_all, ann_rows);
  std::vector<Vec> unit_rows;
  for (std::size_t i = 0; i < nm; ++i) unit_rows.push_back(vec_unit(f, nm, i));
  std::vector<Vec> e_ext = greedy_extend(span_all, unit_rows);

  // assemble both bases and read g off the correspondence
  std::vector<Vec> x_rows = w_rows, xp_rows = w_rows;
  for (std::size_t i = 0; i < b_src.size(); ++i) {
    x_rows.push_back(b_src[i]);
    xp_rows.push_back(b_dst[i]);
  }
  for (std::size_t i = 0; i < c_basis.size(); ++i) {
    x_rows.push_back(c_basis[i]);
    xp_rows.push_back(cp_basis[i]);
  }
  for (const auto& v : d_ext) {
    x_rows.push_back(v);
    xp_rows.push_back(v);
  }
  for (const auto& v : e_ext) {
    x_rows.push_back(v);
    xp_rows.push_back(v);
  }
  if (Subspace::span(f, nm, x_rows).dim() != nm) return std::nullopt;
  if (Subspace::span(f, nm, xp_rows).dim() != nm) return std::nullopt;

  // g . X = X' with X, X' as columns
  Matrix x_cols(f, nm, x_rows.size()), xp_cols(f, nm, x_rows.size());
  for (std::size_t c = 0; c < x_rows.size(); ++c)
    for (std::size_t row = 0; row < nm; ++row) {
      x_cols.at(row, c) = x_rows[c][row];
      xp_cols.at(row, c) = xp_rows[c][row];
    }
  // x_rows may be overcomplete (w_rows plus extensions are independent by
  // construction, so sizes match nm exactly here)
  auto xinv = inverse(x_cols);
  if (!xinv) return std::nullopt;
  Matrix g = xp_cols * (*xinv);
  return lift_aut_local_g(r, g);
}

OrbitReport orbit(const AdditiveMap& sigma, const Element& a, const Subspace& modulo,
                  std::size_t n) {
  if (!verify_automorphism(sigma)) throw error("sigma is not a verified automorphism");
  if (modulo.ambient() != a.coords.size()) throw error("ambient dimension mismatch");
  OrbitReport rep{a, modulo, {}, 0, std::nullopt};
  rep.iterates.push_back(a);
  for (std::size_t i = 1; i <= n; ++i)
    rep.iterates.push_back(sigma.apply(rep.iterates.back()));
  auto congruent = [&](const Element& x, const Element& y) {
    return modulo.contains(vec_sub(x.coords, y.coords));
  };
  for (std::size_t i = 0; i <= n; ++i) {
    bool fresh = true;
    for (std::size_t j = 0; j < i && fresh; ++j)
      if (congruent(rep.iterates[i], rep.iterates[j])) fresh = false;
    if (fresh) ++rep.distinct_cosets;
  }
  for (std::size_t pth = 1; pth <= n; ++pth)
    if (congruent(rep.iterates[pth], rep.iterates[0])) {
      rep.period = pth;
      break;
    }
  return rep;
}

// --- witnesses -----------------------------------------------------------------

namespace {

// the proofs pick parameters first and a derivation vanishing on them; over
// k(t) the implementable version requires constant coordinates, for which
// d/dt vanishes automatically
void enforce_constant_params(const Field& kt, const std::vector<Vec>& params,
                             std::size_t r_dim) {
  for (const Vec& p : params) {
    for (std::size_t i = 0; i < std::min(r_dim, p.size()); ++i)
      if (!kt->derive(p[i]).is_zero())
        throw error("witness parameters must have derivation-constant R coordinates");
  }
}

bool sigma_fixes(const AdditiveMap& sigma, const std::vector<Vec>& params) {
  for (const Vec& p : params)
    if (sigma.apply(p) != p) return false;
  return true;
}

}  // namespace

WitnessReport witness_vector(const Field& kt, std::size_t dim_v, std::size_t n,
                             const std::vector<Vec>& params) {
  if (!kt->has_derivation()) throw error("witness requires a rational-function field");
  WitnessReport rep;
  rep.kind = WitnessKind::vector;
  rep.field_name = kt->name();
  rep.requested_n = n;

  Construction v = trivial_mult(kt, dim_v);
  Construction lambda = triangular(BilinearAction::scalar(v.algebra));
  enforce_constant_params(kt, params, lambda.r_dim());
  AdditiveMatrix delta = scalar_to_delta(lambda, vec_unit(kt, dim_v, 0));
  AdditiveMap sigma = lift_aut_triangular(lambda, delta);
  rep.detail.push_back("automorphism lifted from alpha -> derive(alpha).v1");
  if (!params.empty()) {
    if (!sigma_fixes(sigma, params)) {
      rep.pass = false;
      rep.detail.push_back("a fixed parameter moved");
      return rep;
    }
    rep.detail.push_back(std::to_string(params.size()) + " parameters fixed pointwise");
  }

  Vec start = lambda.algebra.zero_vec();
  start[0] = kt->generator();  // (t, 0)
  Subspace ann = annihilator(lambda.algebra);
  OrbitReport orb = orbit(sigma, make_element(lambda.algebra, start), ann, n);
  rep.distinct = orb.distinct_cosets;
  rep.period = orb.period;

  std::int64_t p = kt->characteristic();
  if (p == 0) {
    rep.pass = rep.distinct == n + 1 && !rep.period;
  } else {
    rep.expected_max = static_cast<std::size_t>(p);
    rep.pass = rep.period && *rep.period == static_cast<std::size_t>(p) &&
               rep.distinct == std::min(n + 1, static_cast<std::size_t>(p));
  }
  rep.detail.push_back("orbit of (t,0) modulo ann: " + std::to_string(rep.distinct) +
                       " distinct cosets of " + std::to_string(n + 1));
  if (rep.period) rep.detail.push_back("period " + std::to_string(*rep.period));
  return rep;
}

WitnessReport witness_lie(const Field& kt, std::size_t heis_n, std::size_t n,
                          const std::vector<Vec>& params) {
  if (!kt->has_derivation()) throw error("witness requires a rational-function field");
  WitnessReport rep;
  rep.kind = WitnessKind::lie;
  rep.field_name = kt->name();
  rep.requested_n = n;

  Construction g = heisenberg(kt, heis_n);
  enforce_constant_params(kt, params, 2 * g.algebra.dim());
  auto hat = hat_lift_map(g);
  if (!hat) throw error("hat lift does not close into the algebra");
  Subspace zg = center_lie(g.algebra);

  // Claim-1 scan: basis vectors, pairwise sums, then t-multiples of basis vectors
  std::vector<Vec> candidates;
  std::size_t d = g.algebra.dim();
  for (std::size_t i = 0; i < d; ++i) candidates.push_back(g.algebra.basis_vec(i));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      candidates.push_back(vec_add(g.algebra.basis_vec(i), g.algebra.basis_vec(j)));
  for (std::size_t i = 0; i < d; ++i)
    candidates.push_back(vec_scale(g.algebra.basis_vec(i), kt->generator()));

  std::optional<Vec> found;
  for (const auto& c : candidates) {
    Vec image = hat->apply(c);
    if (!zg.contains(image)) {
      found = c;
      break;
    }
  }
  if (!found) {
    rep.pass = false;
    rep.detail.push_back("no element with hat-derivative outside z(g) found (abelian input?)");
    return rep;
  }
  Vec hat_b = hat->apply(*found);
  rep.detail.push_back("claim-1 element b with hat(b) outside z(g) found");

  // k . hat(b) stays outside the center for k = 1..n in characteristic 0;
  // in characteristic p it dies at k = p
  std::int64_t p = kt->characteristic();
  std::size_t first_central = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    Vec scaled = vec_scale(hat_b, kt->from_int(static_cast<std::int64_t>(k)));
    if (zg.contains(scaled)) {
      first_central = k;
      break;
    }
  }

  Construction lam = semidirect_double(g);
  AdditiveMap sigma = lift_aut_triangular(lam, *hat);
  if (!params.empty()) {
    if (!sigma_fixes(sigma, params)) {
      rep.pass = false;
      rep.detail.push_back("a fixed parameter moved");
      return rep;
    }
    rep.detail.push_back(std::to_string(params.size()) + " parameters fixed pointwise");
  }
  Subspace center = center_lie(lam.algebra);
  Vec start = lam.embed_r(*found);
  OrbitReport orb = orbit(sigma, make_element(lam.algebra, start), center, n);
  rep.distinct = orb.distinct_cosets;
  rep.period = orb.period;

  if (p == 0) {
    rep.pass = first_central == 0 && rep.distinct == n + 1 && !rep.period;
    rep.detail.push_back("k.hat(b) outside z(g) for k = 1.." + std::to_string(n));
  } else {
    rep.expected_max = static_cast<std::size_t>(p);
    rep.pass = first_central == static_cast<std::size_t>(p) && rep.period &&
               *rep.period == static_cast<std::size_t>(p);
    rep.detail.push_back("k.hat(b) first lands in z(g) at k = " + std::to_string(first_central));
  }
  rep.detail.push_back("orbit of (b,0) modulo z: " + std::to_string(rep.distinct) +
                       " distinct cosets");
  if (rep.period) rep.detail.push_back("period " + std::to_string(*rep.period));
  return rep;
}

WitnessReport witness_s_ring(std::int64_t q, std::size_t heis_n, std::size_t n) {
  WitnessReport rep;
  rep.kind = WitnessKind::s_ring;
  rep.requested_n = n;

  Field fq = FieldSpec::prime(q);
  rep.field_name = fq->name();
  Construction b = heisenberg(fq, heis_n);
  Construction g = semidirect_double(b);
  Construction s = s_of(g);
  Construction lam = local_sum(fq, s);
  Subspace ann_s = annihilator(s.algebra);

  // e ranges over the degree-one part of B; derivations with D(a) = e and the
  // diagonal automorphisms they induce on S move ((a,0), 0) by ((0,e), 0)
  std::size_t nb = b.algebra.dim();
  std::size_t grade1 = 2 * heis_n;  // p's and q's
  Subspace ders = derivation_space(b.algebra);
  Vec a_elem = b.algebra.basis_vec(0);  // p1

  std::uint64_t family = 1;
  for (std::size_t i = 0; i < grade1; ++i) family *= static_cast<std::uint64_t>(q);
  rep.expected_max = static_cast<std::size_t>(family);
  std::size_t want = std::min<std::size_t>(n + 1, static_cast<std::size_t>(family));

  std::vector<Vec> images;  // tau_e((a,0)) in S coordinates
  std::uint64_t idx = 0;
  while (images.size() < want && idx < family) {
    // e from base-q digits over the degree-one basis
    Vec e = vec_zero(fq, nb);
    std::uint64_t t = idx++;
    for (std::size_t i = 0; i < grade1; ++i) {
      e[i] = fq->from_int(static_cast<std::int64_t>(t % q));
      t /= static_cast<std::uint64_t>(q);
    }
    // find a derivation D of B with D(a) = e inside the derivation space
    Matrix sys(fq, nb, ders.dim());
    for (std::size_t c = 0; c < ders.dim(); ++c) {
      Matrix dmat = unflatten(fq, ders.basis_row(c), nb);
      Vec da = dmat.apply(a_elem);
      for (std::size_t row = 0; row < nb; ++row) sys.at(row, c) = da[row];
    }
    auto sol = solve(sys, e);
    if (!sol) continue;
    Matrix d(fq, nb, nb);
    for (std::size_t c = 0; c < ders.dim(); ++c) {
      if ((*sol)[c].is_zero()) continue;
      d = d + unflatten(fq, ders.basis_row(c), nb).scaled((*sol)[c]);
    }
    AdditiveMap sigma_e = lift_aut_triangular(g, AdditiveMatrix::linear(d));
    // tau_e acts diagonally on S = g x g; image of ((a,0),(0,0))
    Vec x = s.algebra.zero_vec();
    Vec ga = sigma_e.apply(g.embed_r(a_elem));
    for (std::size_t i = 0; i < g.algebra.dim(); ++i) x[i] = ga[i];
    images.push_back(std::move(x));
  }

  rep.distinct = 0;
  bool all_fresh = true;
  for (std::size_t i = 0; i < images.size(); ++i) {
    bool fresh = true;
    for (std::size_t j = 0; j < i && fresh; ++j)
      if (ann_s.contains(vec_sub(images[i], images[j]))) fresh = false;
    if (fresh)
      ++rep.distinct;
    else
      all_fresh = false;
  }
  rep.pass = all_fresh && rep.distinct == want;
  rep.detail.push_back("family of " + std::to_string(images.size()) +
                       " diagonal automorphisms, " + std::to_string(rep.distinct) +
                       " distinct images of ((a,0),0) modulo ann(S)");
  rep.detail.push_back("finite ceiling |degree-1 part| = " + std::to_string(family));
  return rep;
}

}  // namespace scring
