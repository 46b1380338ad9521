#ifndef SCRING_TESTS_SUPPORT_HPP
#define SCRING_TESTS_SUPPORT_HPP

#include <random>

#include "scring/algebra.hpp"
#include "scring/invariants.hpp"

namespace scring::test {

inline Scalar random_scalar(const Field& f, std::mt19937_64& rng, int magnitude = 9) {
  switch (f->kind()) {
    case FieldKind::rationals: {
      std::int64_t num = static_cast<std::int64_t>(rng() % (2 * magnitude + 1)) - magnitude;
      std::int64_t den = 1 + static_cast<std::int64_t>(rng() % magnitude);
      return f->from_rat(num, den);
    }
    case FieldKind::prime:
    case FieldKind::galois:
      return f->element_at(rng() % f->size());
    case FieldKind::rational_functions: {
      // random polynomial fraction of small degree
      auto poly = [&](int deg, bool nonzero) {
        Scalar t = f->generator();
        Scalar acc = f->zero();
        Scalar tp = f->one();
        for (int i = 0; i <= deg; ++i) {
          std::int64_t c = static_cast<std::int64_t>(rng() % 7) - 3;
          acc = acc + tp * f->from_int(c);
          tp = tp * t;
        }
        if (nonzero && acc.is_zero()) acc = f->one() + t;
        return acc;
      };
      Scalar num = poly(2, false);
      Scalar den = poly(1, true);
      return num / den;
    }
  }
  throw error("bad field kind");
}

inline Vec random_vec(const Field& f, std::size_t n, std::mt19937_64& rng, int magnitude = 9) {
  Vec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(f, rng, magnitude));
  return v;
}

inline Element random_element(const Algebra& a, std::mt19937_64& rng, int magnitude = 9) {
  return {a, random_vec(a.field(), a.dim(), rng, magnitude)};
}

// --- exhaustive element-level oracles (finite fields, small algebras) ---------

inline std::vector<Vec> all_elements(const Algebra& a, std::uint64_t bound = 1 << 16) {
  const Field& f = a.field();
  if (!f->finite()) throw error("enumeration requires a finite field");
  std::uint64_t q = f->size();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < a.dim(); ++i) count *= q;
  if (count > bound) throw error("algebra too large to enumerate");
  std::vector<Vec> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Vec v;
    std::uint64_t t = idx;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      v.push_back(f->element_at(t % q));
      t /= q;
    }
    out.push_back(std::move(v));
  }
  return out;
}

inline Subspace brute_annihilator(const Algebra& a, const std::vector<Vec>& against) {
  std::vector<Vec> found;
  for (const Vec& v : all_elements(a)) {
    bool kills = true;
    for (const Vec& x : against) {
      if (!vec_is_zero(a.multiply(v, x)) || !vec_is_zero(a.multiply(x, v))) {
        kills = false;
        break;
      }
    }
    if (kills) found.push_back(v);
  }
  return Subspace::span(a.field(), a.dim(), found);
}

inline Subspace brute_annihilator(const Algebra& a) {
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < a.dim(); ++i) basis.push_back(a.basis_vec(i));
  return brute_annihilator(a, basis);
}

inline Subspace brute_center_lie(const Algebra& a) {
  std::vector<Vec> found;
  std::vector<Vec> elems = all_elements(a);
  for (const Vec& v : elems) {
    bool central = true;
    for (const Vec& x : elems)
      if (!vec_is_zero(a.multiply(v, x))) {
        central = false;
        break;
      }
    if (central) found.push_back(v);
  }
  return Subspace::span(a.field(), a.dim(), found);
}

struct BruteAxioms {
  bool commutative = true;
  bool associative = true;
  bool lie = true;
};

inline BruteAxioms brute_axioms(const Algebra& a) {
  BruteAxioms out;
  std::vector<Vec> elems = all_elements(a, 1 << 7);
  for (const Vec& x : elems) {
    if (!vec_is_zero(a.multiply(x, x))) out.lie = false;
    for (const Vec& y : elems) {
      if (a.multiply(x, y) != a.multiply(y, x)) out.commutative = false;
      for (const Vec& z : elems) {
        Vec left = a.multiply(a.multiply(x, y), z);
        Vec right = a.multiply(x, a.multiply(y, z));
        if (left != right) out.associative = false;
        Vec jac = a.multiply(x, a.multiply(y, z));
        jac = vec_add(jac, a.multiply(y, a.multiply(z, x)));
        jac = vec_add(jac, a.multiply(z, a.multiply(x, y)));
        if (!vec_is_zero(jac)) out.lie = false;
      }
    }
  }
  return out;
}

// non-units of a finite unital commutative algebra, by enumeration
inline std::vector<Vec> brute_nonunits(const Algebra& a, const Vec& unit) {
  std::vector<Vec> out;
  std::vector<Vec> elems = all_elements(a);
  for (const Vec& v : elems) {
    bool invertible = false;
    for (const Vec& w : elems)
      if (a.multiply(v, w) == unit) {
        invertible = true;
        break;
      }
    if (!invertible) out.push_back(v);
  }
  return out;
}

}  // namespace scring::test

#endif
