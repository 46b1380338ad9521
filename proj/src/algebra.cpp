#include "scring/algebra.hpp"

#include <algorithm>

namespace scring {

Algebra::Algebra(Field field, std::vector<std::string> basis_names,
                 std::vector<TensorEntry> tensor) {
  auto d = std::make_shared<Data>();
  if (!field) throw error("null field");
  d->field = std::move(field);
  d->names = std::move(basis_names);
  std::size_t n = d->names.size();
  for (auto& e : tensor) {
    if (e.i >= n || e.j >= n || e.k >= n)
      throw error("tensor index out of range at (" + std::to_string(e.i) + "," +
                  std::to_string(e.j) + "," + std::to_string(e.k) + ")");
    if (!same_field(e.c.field(), d->field)) throw error("tensor entry from a different field");
    if (e.c.is_zero())
      throw error("zero tensor coefficient at (" + std::to_string(e.i) + "," +
                  std::to_string(e.j) + "," + std::to_string(e.k) + ")");
  }
  std::sort(tensor.begin(), tensor.end(), [](const TensorEntry& a, const TensorEntry& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
  });
  for (std::size_t t = 1; t < tensor.size(); ++t)
    if (tensor[t - 1].i == tensor[t].i && tensor[t - 1].j == tensor[t].j &&
        tensor[t - 1].k == tensor[t].k)
      throw error("duplicate tensor entry at (" + std::to_string(tensor[t].i) + "," +
                  std::to_string(tensor[t].j) + "," + std::to_string(tensor[t].k) + ")");
  d->tensor = std::move(tensor);
  d->table.assign(n * n, vec_zero(d->field, n));
  for (const auto& e : d->tensor) d->table[e.i * n + e.j][e.k] = e.c;
  data_ = std::move(d);
}

Vec Algebra::basis_product_derived(std::size_t i, std::size_t j) const {
  Vec v = basis_product(i, j);
  for (auto& c : v) c = field()->derive(c);
  return v;
}

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
  std::size_t n = dim();
  if (a.size() != n || b.size() != n) throw error("coordinate length mismatch");
  Vec r = zero_vec();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      const Vec& prod = basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!prod[k].is_zero()) r[k] += c * prod[k];
    }
  }
  return r;
}

Matrix Algebra::left_mult_matrix(const Vec& a) const {
  std::size_t n = dim();
  Matrix m(field(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec col = multiply(a, basis_vec(j));
    for (std::size_t k = 0; k < n; ++k) m.at(k, j) = col[k];
  }
  return m;
}

Matrix Algebra::right_mult_matrix(const Vec& a) const {
  std::size_t n = dim();
  Matrix m(field(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec col = multiply(basis_vec(j), a);
    for (std::size_t k = 0; k < n; ++k) m.at(k, j) = col[k];
  }
  return m;
}

bool Algebra::operator==(const Algebra& o) const {
  if (data_ == o.data_) return true;
  if (!data_ || !o.data_) return false;
  if (!same_field(field(), o.field())) return false;
  if (data_->names != o.data_->names) return false;
  if (data_->tensor.size() != o.data_->tensor.size()) return false;
  for (std::size_t t = 0; t < data_->tensor.size(); ++t) {
    const auto& x = data_->tensor[t];
    const auto& y = o.data_->tensor[t];
    if (x.i != y.i || x.j != y.j || x.k != y.k || x.c != y.c) return false;
  }
  return true;
}

Element make_element(const Algebra& a, Vec coords) {
  if (coords.size() != a.dim()) throw error("coordinate length mismatch");
  return Element{a, std::move(coords)};
}

Element basis_element(const Algebra& a, std::size_t i) { return {a, a.basis_vec(i)}; }
Element zero_element(const Algebra& a) { return {a, a.zero_vec()}; }

Element Element::operator+(const Element& o) const {
  if (algebra != o.algebra) throw error("elements of different algebras");
  return {algebra, vec_add(coords, o.coords)};
}
Element Element::operator-(const Element& o) const {
  if (algebra != o.algebra) throw error("elements of different algebras");
  return {algebra, vec_sub(coords, o.coords)};
}
Element Element::operator*(const Element& o) const {
  if (algebra != o.algebra) throw error("elements of different algebras");
  return {algebra, algebra.multiply(coords, o.coords)};
}
Element Element::operator-() const {
  return {algebra, vec_scale(coords, -algebra.field()->one())};
}
Element Element::scaled(const Scalar& c) const { return {algebra, vec_scale(coords, c)}; }

std::string Element::str() const {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += coords[i].str();
  }
  return out;
}

namespace {

// least k with span(all left-normed k-fold products) = 0, up to dim+1
std::optional<std::size_t> nilpotency_index(const Algebra& a) {
  if (a.dim() == 0) return 1;
  Subspace power = Subspace::full(a.field(), a.dim());
  for (std::size_t k = 2; k <= a.dim() + 1; ++k) {
    std::vector<Vec> products;
    for (std::size_t r = 0; r < power.dim(); ++r)
      for (std::size_t j = 0; j < a.dim(); ++j)
        products.push_back(a.multiply(power.basis_row(r), a.basis_vec(j)));
    Subspace next = Subspace::span(a.field(), a.dim(), products);
    if (next.dim() == 0) return k;
    if (next == power) return std::nullopt;  // chain stabilized above zero
    power = next;
  }
  return std::nullopt;
}

}  // namespace

AxiomReport check_axioms(const Algebra& a) {
  AxiomReport rep;
  std::size_t n = a.dim();
  const Field& f = a.field();

  rep.commutative = true;
  for (std::size_t i = 0; i < n && rep.commutative; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a.basis_product(i, j) != a.basis_product(j, i)) {
        rep.commutative = false;
        rep.commutative_violation = {{i, j}};
        break;
      }

  rep.associative = true;
  rep.two_step_nilpotent = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& ij = a.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec left = a.multiply(ij, a.basis_vec(k));
        Vec right = a.multiply(a.basis_vec(i), a.basis_product(j, k));
        if (rep.associative && left != right) {
          rep.associative = false;
          rep.associative_violation = {{i, j, k}};
        }
        if (rep.two_step_nilpotent && (!vec_is_zero(left) || !vec_is_zero(right)))
          rep.two_step_nilpotent = false;
      }
    }

  // lie: b_i b_i = 0, b_i b_j = -b_j b_i, Jacobi on all basis triples
  rep.lie = true;
  for (std::size_t i = 0; i < n && rep.lie; ++i) {
    if (!vec_is_zero(a.basis_product(i, i))) {
      rep.lie = false;
      rep.alternating_violation = i;
    }
    for (std::size_t j = 0; j < n && rep.lie; ++j)
      if (!vec_is_zero(vec_add(a.basis_product(i, j), a.basis_product(j, i)))) {
        rep.lie = false;
        rep.alternating_violation = i;
      }
  }
  for (std::size_t i = 0; i < n && rep.lie; ++i)
    for (std::size_t j = 0; j < n && rep.lie; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec s = a.multiply(a.basis_vec(i), a.basis_product(j, k));
        s = vec_add(s, a.multiply(a.basis_vec(j), a.basis_product(k, i)));
        s = vec_add(s, a.multiply(a.basis_vec(k), a.basis_product(i, j)));
        if (!vec_is_zero(s)) {
          rep.lie = false;
          rep.jacobi_violation = {{i, j, k}};
          break;
        }
      }

  // unit: solve u.b_i = b_i = b_i.u as a linear system in u
  {
    Matrix sys(f, 2 * n * n, n);
    Vec rhs(2 * n * n, f->zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t u = 0; u < n; ++u) {
          sys.at(i * n + k, u) = a.basis_product(u, i)[k];
          sys.at(n * n + i * n + k, u) = a.basis_product(i, u)[k];
        }
        Scalar d = (i == k) ? f->one() : f->zero();
        rhs[i * n + k] = d;
        rhs[n * n + i * n + k] = d;
      }
    if (auto u = solve(sys, rhs)) rep.unit = *u;
  }

  rep.nilpotency_index = nilpotency_index(a);
  return rep;
}

bool is_ideal(const Algebra& a, const Subspace& s) {
  if (s.ambient() != a.dim()) throw error("ambient dimension mismatch");
  for (std::size_t r = 0; r < s.dim(); ++r) {
    Vec v = s.basis_row(r);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (!s.contains(a.multiply(a.basis_vec(i), v))) return false;
      if (!s.contains(a.multiply(v, a.basis_vec(i)))) return false;
    }
  }
  return true;
}

QuotientResult quotient(const Algebra& a, const Subspace& ideal) {
  if (!is_ideal(a, ideal)) throw error("subspace is not an ideal");
  const Field& f = a.field();
  std::size_t n = a.dim();

  std::vector<bool> is_pivot(n, false);
  {
    RrefResult rr = rref(ideal.basis());
    for (auto p : rr.pivots) is_pivot[p] = true;
  }
  std::vector<std::size_t> section;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) section.push_back(c);
  std::size_t q = section.size();

  // projection: reduce modulo the ideal's RREF rows, keep non-pivot coordinates
  Matrix proj(f, q, n);
  for (std::size_t c = 0; c < n; ++c) {
    Vec img = a.basis_vec(c);
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
      // pivot columns of RREF rows have coefficient 1
      Vec row = ideal.basis_row(r);
      std::size_t piv = 0;
      while (row[piv].is_zero()) ++piv;
      Scalar coef = img[piv];
      if (!coef.is_zero()) img = vec_sub(img, vec_scale(row, coef));
    }
    for (std::size_t t = 0; t < q; ++t) proj.at(t, c) = img[section[t]];
  }

  std::vector<std::string> names;
  names.reserve(q);
  for (auto c : section) names.push_back(a.basis_names()[c]);

  std::vector<TensorEntry> tensor;
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      Vec prod = proj.apply(a.basis_product(section[i], section[j]));
      for (std::size_t k = 0; k < q; ++k)
        if (!prod[k].is_zero()) tensor.push_back({i, j, k, prod[k]});
    }
  return {Algebra(f, std::move(names), std::move(tensor)), std::move(proj), std::move(section)};
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
  if (!same_field(a.field(), b.field())) throw error("field mismatch");
  std::size_t na = a.dim();
  std::vector<std::string> names;
  for (const auto& s : a.basis_names()) names.push_back("l." + s);
  for (const auto& s : b.basis_names()) names.push_back("r." + s);
  std::vector<TensorEntry> tensor = a.tensor();
  for (const auto& e : b.tensor()) tensor.push_back({e.i + na, e.j + na, e.k + na, e.c});
  return Algebra(a.field(), std::move(names), std::move(tensor));
}

Algebra subalgebra(const Algebra& a, const Subspace& s) {
  if (s.ambient() != a.dim()) throw error("ambient dimension mismatch");
  std::size_t q = s.dim();
  std::vector<TensorEntry> tensor;
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      Vec prod = a.multiply(s.basis_row(i), s.basis_row(j));
      auto coords = s.coordinates(prod);
      if (!coords) throw error("subspace is not closed under multiplication");
      for (std::size_t k = 0; k < q; ++k)
        if (!(*coords)[k].is_zero()) tensor.push_back({i, j, k, (*coords)[k]});
    }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < q; ++i) names.push_back("s" + std::to_string(i + 1));
  return Algebra(a.field(), std::move(names), std::move(tensor));
}

}  // namespace scring
