#include "scring/invariants.hpp"

namespace scring {

namespace {

// rows of the stacked system whose kernel is the two-sided annihilator of
// the given elements inside A
Matrix annihilator_system(const Algebra& a, const std::vector<Vec>& elems) {
  const Field& f = a.field();
  std::size_t n = a.dim();
  Matrix sys(f, 2 * n * elems.size(), n);
  for (std::size_t e = 0; e < elems.size(); ++e) {
    // r -> r.s and r -> s.r, columns over the basis of A
    for (std::size_t i = 0; i < n; ++i) {
      Vec left = a.multiply(a.basis_vec(i), elems[e]);
      Vec right = a.multiply(elems[e], a.basis_vec(i));
      for (std::size_t k = 0; k < n; ++k) {
        sys.at(2 * n * e + k, i) = left[k];
        sys.at(2 * n * e + n + k, i) = right[k];
      }
    }
  }
  return sys;
}

}  // namespace

Subspace annihilator(const Algebra& a, const Subspace& s) {
  if (s.ambient() != a.dim()) throw error("ambient dimension mismatch");
  std::vector<Vec> elems;
  for (std::size_t i = 0; i < s.dim(); ++i) elems.push_back(s.basis_row(i));
  if (elems.empty()) return Subspace::full(a.field(), a.dim());
  return Subspace::from_rows(kernel_basis(annihilator_system(a, elems)));
}

Subspace annihilator(const Algebra& a) {
  return annihilator(a, Subspace::full(a.field(), a.dim()));
}

CrossAnnihilators cross_annihilators(const Construction& lambda) {
  if (!lambda.is_triangular()) throw error("algebra is not triangular-tagged");
  const Algebra& L = lambda.algebra;
  const Field& f = L.field();
  std::size_t nr = lambda.r_dim(), nm = lambda.m_dim();

  Algebra R = lambda.r_algebra();
  Algebra M = lambda.m_algebra();

  CrossAnnihilators out;
  out.ann_r = annihilator(R);
  out.ann_m = annihilator(M);

  // ann_R(M): r with r.m = 0 = m.r inside Lambda for every M basis vector
  {
    Matrix sys(f, 2 * nm * nm, nr);
    for (std::size_t j = 0; j < nm; ++j)
      for (std::size_t i = 0; i < nr; ++i) {
        Vec left = L.basis_product(i, nr + j);
        Vec right = L.basis_product(nr + j, i);
        for (std::size_t k = 0; k < nm; ++k) {
          sys.at(2 * nm * j + k, i) = left[nr + k];
          sys.at(2 * nm * j + nm + k, i) = right[nr + k];
        }
      }
    out.ann_r_of_m = Subspace::from_rows(kernel_basis(sys));
  }

  // ann_M(R): m with r.m = 0 = m.r for every R basis vector
  {
    Matrix sys(f, 2 * nr * nm, nm);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nm; ++j) {
        Vec left = L.basis_product(i, nr + j);
        Vec right = L.basis_product(nr + j, i);
        for (std::size_t k = 0; k < nm; ++k) {
          sys.at(2 * nm * i + k, j) = left[nr + k];
          sys.at(2 * nm * i + nm + k, j) = right[nr + k];
        }
      }
    out.ann_m_of_r = Subspace::from_rows(kernel_basis(sys));
  }

  // ann_R(ann(M)): r killing the embedded basis of ann(M) inside Lambda
  {
    std::size_t na = out.ann_m.dim();
    if (na == 0) {
      out.ann_r_of_ann_m = Subspace::full(f, nr);
    } else {
      Matrix sys(f, 2 * nm * na, nr);
      for (std::size_t e = 0; e < na; ++e) {
        Vec x = lambda.embed_m(out.ann_m.basis_row(e));
        for (std::size_t i = 0; i < nr; ++i) {
          Vec left = L.multiply(L.basis_vec(i), x);
          Vec right = L.multiply(x, L.basis_vec(i));
          for (std::size_t k = 0; k < nm; ++k) {
            sys.at(2 * nm * e + k, i) = left[nr + k];
            sys.at(2 * nm * e + nm + k, i) = right[nr + k];
          }
        }
      }
      out.ann_r_of_ann_m = Subspace::from_rows(kernel_basis(sys));
    }
  }
  return out;
}

TriangularAnnReport check_triangular_annihilator(const Construction& lambda) {
  TriangularAnnReport rep;
  rep.cross = cross_annihilators(lambda);
  rep.hypothesis_holds = rep.cross.ann_r == rep.cross.ann_r_of_m &&
                         rep.cross.ann_r == rep.cross.ann_r_of_ann_m;

  const Field& f = lambda.algebra.field();
  std::size_t dim = lambda.algebra.dim();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < rep.cross.ann_r.dim(); ++i)
    rows.push_back(lambda.embed_r(rep.cross.ann_r.basis_row(i)));
  Subspace m_inter = rep.cross.ann_m.intersect(rep.cross.ann_m_of_r);
  for (std::size_t i = 0; i < m_inter.dim(); ++i)
    rows.push_back(lambda.embed_m(m_inter.basis_row(i)));
  rep.formula_side = Subspace::span(f, dim, rows);
  rep.brute_side = annihilator(lambda.algebra);
  rep.sides_equal = rep.formula_side == rep.brute_side;
  return rep;
}

Subspace subspace_power(const Algebra& a, const Subspace& s, std::size_t k) {
  if (k == 0) throw error("power index must be positive");
  Subspace power = s;
  for (std::size_t step = 2; step <= k; ++step) {
    std::vector<Vec> products;
    for (std::size_t r = 0; r < power.dim(); ++r)
      for (std::size_t j = 0; j < s.dim(); ++j)
        products.push_back(a.multiply(power.basis_row(r), s.basis_row(j)));
    power = Subspace::span(a.field(), a.dim(), products);
  }
  return power;
}

Subspace power_ideal(const Algebra& a, std::size_t k) {
  return subspace_power(a, Subspace::full(a.field(), a.dim()), k);
}

namespace {

Subspace bracket_span(const Algebra& g, const Subspace& u, const Subspace& v) {
  std::vector<Vec> products;
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j)
      products.push_back(g.multiply(u.basis_row(i), v.basis_row(j)));
  return Subspace::span(g.field(), g.dim(), products);
}

}  // namespace

std::vector<Subspace> derived_series(const Algebra& g) {
  std::vector<Subspace> out{Subspace::full(g.field(), g.dim())};
  while (true) {
    Subspace next = bracket_span(g, out.back(), out.back());
    if (next == out.back()) break;
    out.push_back(next);
    if (next.dim() == 0) break;
  }
  return out;
}

std::vector<Subspace> lower_central_series(const Algebra& g) {
  Subspace full = Subspace::full(g.field(), g.dim());
  std::vector<Subspace> out{full};
  while (true) {
    Subspace next = bracket_span(g, out.back(), full);
    if (next == out.back()) break;
    out.push_back(next);
    if (next.dim() == 0) break;
  }
  return out;
}

Subspace center_lie(const Algebra& g) {
  const Field& f = g.field();
  std::size_t n = g.dim();
  Matrix sys(f, n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      Vec br = g.basis_product(i, j);  // [e_i, e_j]
      for (std::size_t k = 0; k < n; ++k) sys.at(n * j + k, i) = br[k];
    }
  return Subspace::from_rows(kernel_basis(sys));
}

namespace {

struct StackedImages {
  Subspace kernel;
  Subspace image_sum;
  bool images_contained;  // every single image inside the given subspace
};

// f = stacked (left mult, right mult) by the given elements, restricted to
// `domain`; kernel reported inside the full ambient space
StackedImages stacked_mult(const Algebra& a, const std::vector<Vec>& elems,
                           const Subspace& domain, const Subspace& image_bound) {
  const Field& f = a.field();
  std::size_t n = a.dim();
  std::size_t d = domain.dim();
  // columns indexed by domain basis
  Matrix sys(f, 2 * n * elems.size(), d);
  StackedImages out{Subspace::zero(f, n), Subspace::zero(f, n), true};
  std::vector<Vec> image_rows;
  for (std::size_t e = 0; e < elems.size(); ++e) {
    std::vector<Vec> left_rows, right_rows;
    for (std::size_t c = 0; c < d; ++c) {
      Vec v = domain.basis_row(c);
      Vec left = a.multiply(v, elems[e]);   // rho: x -> x . b
      Vec right = a.multiply(elems[e], v);  // ell: x -> b . x
      for (std::size_t k = 0; k < n; ++k) {
        sys.at(2 * n * e + k, c) = left[k];
        sys.at(2 * n * e + n + k, c) = right[k];
      }
      left_rows.push_back(std::move(left));
      right_rows.push_back(std::move(right));
    }
    Subspace im_left = Subspace::span(f, n, left_rows);
    Subspace im_right = Subspace::span(f, n, right_rows);
    if (!image_bound.contains(im_left) || !image_bound.contains(im_right))
      out.images_contained = false;
    for (auto& r : left_rows) image_rows.push_back(std::move(r));
    for (auto& r : right_rows) image_rows.push_back(std::move(r));
  }
  // kernel in domain coordinates -> ambient
  Matrix ker = kernel_basis(sys);
  std::vector<Vec> ambient_rows;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Vec x = vec_zero(f, n);
    for (std::size_t c = 0; c < d; ++c)
      x = vec_add(x, vec_scale(domain.basis_row(c), ker.at(r, c)));
    ambient_rows.push_back(std::move(x));
  }
  out.kernel = Subspace::span(f, n, ambient_rows);
  out.image_sum = Subspace::span(f, n, image_rows);
  return out;
}

}  // namespace

ChainReport analysis_chain(const Construction& lambda) {
  if (!lambda.is_triangular()) throw error("algebra is not triangular-tagged");
  const Algebra& L = lambda.algebra;
  const Field& f = L.field();
  std::size_t n = L.dim();
  std::size_t nr = lambda.r_dim();

  ChainReport rep;
  Subspace full = Subspace::full(f, n);
  Subspace m_ideal = lambda.m_ideal();

  CrossAnnihilators cross = cross_annihilators(lambda);
  rep.hypothesis_holds =
      cross.ann_r == cross.ann_r_of_m && cross.ann_r == cross.ann_r_of_ann_m;

  // f1: multiplication by the embedded basis of ann(M), in RREF order
  std::vector<Vec> b_elems;
  for (std::size_t i = 0; i < cross.ann_m.dim(); ++i)
    b_elems.push_back(lambda.embed_m(cross.ann_m.basis_row(i)));
  Subspace ann_m_embedded = Subspace::span(f, n, b_elems);

  if (b_elems.empty()) {
    rep.lambda1 = full;
    rep.images1_in_m = true;
    rep.image1_sum = Subspace::zero(f, n);
    rep.kernel1_matches = true;
  } else {
    StackedImages s1 = stacked_mult(L, b_elems, full, m_ideal);
    rep.lambda1 = s1.kernel;
    rep.images1_in_m = s1.images_contained;
    rep.image1_sum = s1.image_sum;
    rep.kernel1_matches = rep.lambda1 == annihilator(L, ann_m_embedded);
  }

  // Lambda_1 should be ann_R(ann(M)) x M; equal to ann(R) x M under the hypothesis
  {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < cross.ann_r_of_ann_m.dim(); ++i)
      rows.push_back(lambda.embed_r(cross.ann_r_of_ann_m.basis_row(i)));
    for (std::size_t i = 0; i < lambda.m_dim(); ++i)
      rows.push_back(vec_unit(f, n, nr + i));
    rep.lambda1_product_shape = rep.lambda1 == Subspace::span(f, n, rows);

    std::vector<Vec> rows2;
    for (std::size_t i = 0; i < cross.ann_r.dim(); ++i)
      rows2.push_back(lambda.embed_r(cross.ann_r.basis_row(i)));
    for (std::size_t i = 0; i < lambda.m_dim(); ++i)
      rows2.push_back(vec_unit(f, n, nr + i));
    rep.lambda1_is_annr_times_m = rep.lambda1 == Subspace::span(f, n, rows2);
  }

  // f2: multiplication by every basis vector, restricted to Lambda_1
  {
    std::vector<Vec> a_elems;
    for (std::size_t i = 0; i < n; ++i) a_elems.push_back(L.basis_vec(i));
    StackedImages s2 = stacked_mult(L, a_elems, rep.lambda1, m_ideal);
    rep.ann_lambda = s2.kernel;
    rep.images2_in_m = s2.images_contained;
    rep.image2_sum = s2.image_sum;
    rep.kernel2_matches = rep.ann_lambda == annihilator(L);
  }

  // S(h) with h = B x| B+: rebuild the chain from the basis of B placed in
  // the four coordinate blocks, as the refined analysis does
  if (lambda.tag.kind == ConstructionKind::s_of && lambda.tag.inner &&
      lambda.tag.inner->kind == ConstructionKind::semidirect_double) {
    std::size_t nh = lambda.r_dim();          // dim h
    std::size_t nb = lambda.tag.inner->left_dim;  // dim B
    ChainReport::SCase sc;

    // recover the bracket of h from the action block of S = Lambda(h+, h+)
    Algebra h = [&] {
      std::vector<TensorEntry> tensor;
      for (std::size_t i = 0; i < nh; ++i) {
        Matrix ad = lambda.left_action(i);
        for (std::size_t j = 0; j < nh; ++j)
          for (std::size_t k = 0; k < nh; ++k)
            if (!ad.at(k, j).is_zero()) tensor.push_back({i, j, k, ad.at(k, j)});
      }
      std::vector<std::string> names(lambda.algebra.basis_names().begin(),
                                     lambda.algebra.basis_names().begin() + nh);
      return Algebra(f, names, tensor);
    }();

    // B = first nb coordinates of h
    std::vector<Vec> b_rows;
    for (std::size_t i = 0; i < nb; ++i) b_rows.push_back(vec_unit(f, nh, i));
    Algebra B = subalgebra(h, Subspace::span(f, nh, b_rows));
    sc.center_b = center_lie(B);

    auto block_unit = [&](std::size_t block, std::size_t i) {
      return vec_unit(f, n, block * nb + i);
    };
    // chain elements: b_l = ((0,z_l),(0,0)), d_l = ((0,0),(0,z_l)),
    //                 a_l = ((z_l,0),(0,0)), c_l = ((0,0),(z_l,0))
    std::vector<Vec> bd_elems, ac_elems;
    for (std::size_t l = 0; l < nb; ++l) {
      bd_elems.push_back(block_unit(1, l));
      bd_elems.push_back(block_unit(3, l));
      ac_elems.push_back(block_unit(0, l));
      ac_elems.push_back(block_unit(2, l));
    }
    StackedImages st1 = stacked_mult(L, bd_elems, full, m_ideal);
    sc.s1 = st1.kernel;
    StackedImages st2 = stacked_mult(L, ac_elems, sc.s1, m_ideal);
    sc.s2 = st2.kernel;

    // expected shapes from z(B)
    auto blockify = [&](bool z0, bool z1, bool z2, bool z3) {
      std::vector<Vec> rows;
      std::array<bool, 4> restricted{z0, z1, z2, z3};
      for (std::size_t blk = 0; blk < 4; ++blk) {
        if (restricted[blk]) {
          for (std::size_t r = 0; r < sc.center_b.dim(); ++r) {
            Vec row = vec_zero(f, n);
            Vec zb = sc.center_b.basis_row(r);
            for (std::size_t c = 0; c < nb; ++c) row[blk * nb + c] = zb[c];
            rows.push_back(std::move(row));
          }
        } else {
          for (std::size_t c = 0; c < nb; ++c) rows.push_back(block_unit(blk, c));
        }
      }
      return Subspace::span(f, n, rows);
    };
    sc.s1_shape = sc.s1 == blockify(true, false, true, false);
    sc.s2_is_ann = sc.s2 == annihilator(L);

    // sum of the f1 images against the bottom central block {0}^3 x z(B)
    {
      std::vector<Vec> rows;
      for (std::size_t r = 0; r < sc.center_b.dim(); ++r) {
        Vec row = vec_zero(f, n);
        Vec zb = sc.center_b.basis_row(r);
        for (std::size_t c = 0; c < nb; ++c) row[3 * nb + c] = zb[c];
        rows.push_back(std::move(row));
      }
      sc.image_is_center_block = st1.image_sum == Subspace::span(f, n, rows);
    }

    // rank-style properties of the first non-central basis vector of B
    for (std::size_t l = 0; l < nb && !sc.z_found; ++l) {
      Vec z = vec_unit(f, nb, l);
      if (sc.center_b.contains(z)) continue;
      sc.z_found = true;
      std::vector<Vec> brackets;
      for (std::size_t j = 0; j < nb; ++j)
        brackets.push_back(B.multiply(z, B.basis_vec(j)));
      sc.bracket_property = Subspace::span(f, nb, brackets) == sc.center_b;
      Matrix ad = B.right_mult_matrix(z);  // x -> [x, z]
      sc.centralizer_property = Subspace::from_rows(kernel_basis(ad)) == sc.center_b;
    }
    rep.s_case = std::move(sc);
  }

  return rep;
}

}  // namespace scring
