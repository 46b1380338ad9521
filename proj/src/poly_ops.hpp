#ifndef SCRING_POLY_OPS_HPP
#define SCRING_POLY_OPS_HPP

// Dense univariate polynomial arithmetic over an abstract coefficient field,
// shared by the GF(p^k) modulus machinery and the rational-function kinds.
// Polynomials are little-endian coefficient vectors with no trailing zeros.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "scring/field.hpp"

namespace scring::detail {

// Coefficient field: rationals.
struct QOps {
  using value_type = Rat;
  Rat zero() const { return Rat(0); }
  Rat one() const { return Rat(1); }
  Rat add(const Rat& a, const Rat& b) const { return a + b; }
  Rat sub(const Rat& a, const Rat& b) const { return a - b; }
  Rat mul(const Rat& a, const Rat& b) const { return a * b; }
  Rat neg(const Rat& a) const { return -a; }
  Rat inv(const Rat& a) const { return Rat(1) / a; }
  Rat from_int(std::int64_t n) const { return Rat(static_cast<long>(n)); }
  bool is_zero(const Rat& a) const { return a == 0; }
  bool eq(const Rat& a, const Rat& b) const { return a == b; }
  std::string str(const Rat& a) const { return a.get_str(); }
};

// Coefficient field: GF(p), residues stored in [0, p).
struct POps {
  std::int64_t p;
  using value_type = std::int64_t;
  std::int64_t zero() const { return 0; }
  std::int64_t one() const { return p == 1 ? 0 : 1; }
  std::int64_t add(std::int64_t a, std::int64_t b) const { return (a + b) % p; }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return ((a - b) % p + p) % p; }
  std::int64_t mul(std::int64_t a, std::int64_t b) const {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
  }
  std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p - a; }
  std::int64_t inv(std::int64_t a) const;
  std::int64_t from_int(std::int64_t n) const { return ((n % p) + p) % p; }
  bool is_zero(std::int64_t a) const { return a == 0; }
  bool eq(std::int64_t a, std::int64_t b) const { return a == b; }
  std::string str(std::int64_t a) const { return std::to_string(a); }
};

inline std::int64_t POps::inv(std::int64_t a) const {
  // extended Euclid
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw error("not invertible mod " + std::to_string(p));
  return ((t % p) + p) % p;
}

template <class Ops>
using PV = std::vector<typename Ops::value_type>;

template <class Ops>
void poly_trim(const Ops& F, PV<Ops>& a) {
  while (!a.empty() && F.is_zero(a.back())) a.pop_back();
}

template <class Ops>
bool poly_is_zero(const PV<Ops>& a) {
  return a.empty();
}

template <class Ops>
int poly_deg(const PV<Ops>& a) {
  return static_cast<int>(a.size()) - 1;  // deg(0) = -1
}

template <class Ops>
PV<Ops> poly_add(const Ops& F, const PV<Ops>& a, const PV<Ops>& b) {
  PV<Ops> r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  poly_trim(F, r);
  return r;
}

template <class Ops>
PV<Ops> poly_sub(const Ops& F, const PV<Ops>& a, const PV<Ops>& b) {
  PV<Ops> r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  poly_trim(F, r);
  return r;
}

template <class Ops>
PV<Ops> poly_neg(const Ops& F, const PV<Ops>& a) {
  PV<Ops> r = a;
  for (auto& c : r) c = F.neg(c);
  return r;
}

template <class Ops>
PV<Ops> poly_mul(const Ops& F, const PV<Ops>& a, const PV<Ops>& b) {
  if (a.empty() || b.empty()) return {};
  PV<Ops> r(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  poly_trim(F, r);
  return r;
}

template <class Ops>
PV<Ops> poly_scale(const Ops& F, const PV<Ops>& a, const typename Ops::value_type& c) {
  PV<Ops> r = a;
  for (auto& x : r) x = F.mul(x, c);
  poly_trim(F, r);
  return r;
}

// quotient and remainder by a non-zero divisor
template <class Ops>
std::pair<PV<Ops>, PV<Ops>> poly_divmod(const Ops& F, PV<Ops> a, const PV<Ops>& b) {
  if (b.empty()) throw error("polynomial division by zero");
  PV<Ops> q;
  auto lcinv = F.inv(b.back());
  while (a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    auto c = F.mul(a.back(), lcinv);
    if (q.size() < shift + 1) q.resize(shift + 1, F.zero());
    q[shift] = F.add(q[shift], c);
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    poly_trim(F, a);
  }
  poly_trim(F, q);
  return {q, a};
}

template <class Ops>
PV<Ops> poly_monic(const Ops& F, const PV<Ops>& a) {
  if (a.empty()) return a;
  return poly_scale(F, a, F.inv(a.back()));
}

template <class Ops>
PV<Ops> poly_gcd(const Ops& F, PV<Ops> a, PV<Ops> b) {
  while (!b.empty()) {
    auto r = poly_divmod(F, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  return poly_monic(F, a);
}

template <class Ops>
PV<Ops> poly_derivative(const Ops& F, const PV<Ops>& a) {
  if (a.size() <= 1) return {};
  PV<Ops> r(a.size() - 1, F.zero());
  for (std::size_t i = 1; i < a.size(); ++i)
    r[i - 1] = F.mul(a[i], F.from_int(static_cast<std::int64_t>(i)));
  poly_trim(F, r);
  return r;
}

template <class Ops>
bool poly_eq(const Ops& F, const PV<Ops>& a, const PV<Ops>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!F.eq(a[i], b[i])) return false;
  return true;
}

template <class Ops>
PV<Ops> poly_powmod(const Ops& F, PV<Ops> base, std::uint64_t e, const PV<Ops>& mod) {
  PV<Ops> r{F.one()};
  base = poly_divmod(F, base, mod).second;
  while (e) {
    if (e & 1) r = poly_divmod(F, poly_mul(F, r, base), mod).second;
    base = poly_divmod(F, poly_mul(F, base, base), mod).second;
    e >>= 1;
  }
  return r;
}

// --- printing / parsing -----------------------------------------------------

// Terms from highest degree down; "1*" and "^1" elided, e.g. "g^2+2*g+1".
template <class Ops>
std::string poly_str(const Ops& F, const PV<Ops>& a, const std::string& var) {
  if (a.empty()) return "0";
  std::string out;
  for (std::size_t idx = a.size(); idx-- > 0;) {
    if (F.is_zero(a[idx])) continue;
    std::string cs = F.str(a[idx]);
    bool neg = !cs.empty() && cs[0] == '-';
    std::string mag = neg ? cs.substr(1) : cs;
    std::string term;
    if (idx == 0) {
      term = mag;
    } else {
      term = (mag == "1") ? "" : mag + "*";
      term += var;
      if (idx > 1) term += "^" + std::to_string(idx);
    }
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? "-" : "+") + term;
  }
  return out.empty() ? "0" : out;
}

// Splits at top-level +/-; a sign is term-internal right after one of "*^/".
std::vector<std::string> split_poly_terms(const std::string& s);

// Parses one term "[coef][*]var[^exp]" | "coef" given a coefficient parser.
template <class Ops, class CoefParse>
void poly_parse_term(const Ops& F, const std::string& term, const std::string& var,
                     const CoefParse& parse_coef, PV<Ops>& acc) {
  std::string t = term;
  bool neg = false;
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
    neg = t[0] == '-';
    t = t.substr(1);
  }
  if (t.empty()) throw error("empty polynomial term");
  std::size_t vpos = t.find(var);
  typename Ops::value_type coef = F.one();
  std::size_t exp = 0;
  if (vpos == std::string::npos) {
    coef = parse_coef(t);
  } else {
    std::string cs = t.substr(0, vpos);
    if (!cs.empty() && cs.back() == '*') cs.pop_back();
    if (!cs.empty()) coef = parse_coef(cs);
    std::string rest = t.substr(vpos + var.size());
    if (rest.empty()) {
      exp = 1;
    } else if (rest[0] == '^') {
      exp = std::stoul(rest.substr(1));
    } else {
      throw error("malformed term '" + term + "'");
    }
  }
  if (neg) coef = F.neg(coef);
  if (acc.size() < exp + 1) acc.resize(exp + 1, F.zero());
  acc[exp] = F.add(acc[exp], coef);
}

template <class Ops, class CoefParse>
PV<Ops> poly_parse(const Ops& F, const std::string& s, const std::string& var,
                   const CoefParse& parse_coef) {
  PV<Ops> acc;
  for (const auto& term : split_poly_terms(s))
    poly_parse_term(F, term, var, parse_coef, acc);
  poly_trim(F, acc);
  return acc;
}

}  // namespace scring::detail

#endif
