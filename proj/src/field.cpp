#include "scring/field.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "poly_ops.hpp"

namespace scring {

using detail::POps;
using detail::QOps;

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string strip_ws(const std::string& s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  return out;
}

// Little-endian base-p encoding of a monic degree-k polynomial's lower coefficients.
PolyP poly_from_index(std::uint64_t idx, std::int64_t p, int k) {
  PolyP c(k + 1, 0);
  for (int i = 0; i < k; ++i) {
    c[i] = static_cast<std::int64_t>(idx % p);
    idx /= p;
  }
  c[k] = 1;
  return c;
}

bool is_irreducible(const PolyP& f, std::int64_t p) {
  POps F{p};
  int k = detail::poly_deg<POps>(f);
  if (k <= 0) return false;
  if (k == 1) return true;
  // trial division by all monic polynomials of degree <= k/2 when that
  // search space is small, else the x^(p^d) = x criterion
  double candidates = 0;
  for (int d = 1; 2 * d <= k; ++d) candidates += std::pow(static_cast<double>(p), d);
  if (candidates <= 100000.0) {
    for (int d = 1; 2 * d <= k; ++d) {
      std::uint64_t count = 1;
      for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        PolyP g = poly_from_index(idx, p, d);
        if (detail::poly_divmod(F, f, g).second.empty()) return false;
      }
    }
    return true;
  }
  // f irreducible of degree k iff x^(p^k) = x mod f and gcd(x^(p^(k/q)) - x, f) = 1
  // for every prime divisor q of k
  PolyP x{0, 1};
  auto frob_pow = [&](int d) {
    PolyP r = x;
    for (int i = 0; i < d; ++i)
      r = detail::poly_powmod(F, r, static_cast<std::uint64_t>(p), f);
    return r;
  };
  PolyP xk = frob_pow(k);
  if (!detail::poly_eq(F, xk, detail::poly_divmod(F, x, f).second)) return false;
  for (int q = 2; q <= k; ++q) {
    if (k % q != 0 || !is_prime(q)) continue;
    PolyP h = detail::poly_sub(F, frob_pow(k / q), x);
    if (!detail::poly_gcd(F, h, f).empty() &&
        detail::poly_deg<POps>(detail::poly_gcd(F, h, f)) > 0)
      return false;
  }
  return true;
}

PolyP reduce_mod(const PolyP& a, const PolyP& modulus, std::int64_t p) {
  POps F{p};
  return detail::poly_divmod(F, a, modulus).second;
}

bool poly_is_one_q(const PolyQ& p) { return p.size() == 1 && p[0] == 1; }

RatFuncQ normalize_q(PolyQ num, PolyQ den) {
  QOps F;
  if (detail::poly_is_zero<QOps>(den)) throw error("zero denominator");
  if (detail::poly_is_zero<QOps>(num)) return {{}, {Rat(1)}};
  if (poly_is_one_q(den)) return {std::move(num), std::move(den)};
  PolyQ g = detail::poly_gcd(F, num, den);
  if (detail::poly_deg<QOps>(g) > 0) {
    num = detail::poly_divmod(F, num, g).first;
    den = detail::poly_divmod(F, den, g).first;
  }
  Rat lc = den.back();
  if (lc != 1) {
    num = detail::poly_scale(F, num, Rat(1) / lc);
    den = detail::poly_scale(F, den, Rat(1) / lc);
  }
  return {std::move(num), std::move(den)};
}

RatFuncP normalize_p(PolyP num, PolyP den, std::int64_t p) {
  POps F{p};
  if (detail::poly_is_zero<POps>(den)) throw error("zero denominator");
  if (detail::poly_is_zero<POps>(num)) return {{}, {1}};
  if (den.size() == 1 && den[0] == 1) return {std::move(num), std::move(den)};
  PolyP g = detail::poly_gcd(F, num, den);
  if (detail::poly_deg<POps>(g) > 0) {
    num = detail::poly_divmod(F, num, g).first;
    den = detail::poly_divmod(F, den, g).first;
  }
  std::int64_t lc = den.back();
  if (lc != 1) {
    auto li = F.inv(lc);
    num = detail::poly_scale(F, num, li);
    den = detail::poly_scale(F, den, li);
  }
  return {std::move(num), std::move(den)};
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw error("empty rational literal");
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
          (c == '-' && i == 0)))
      throw error("bad rational literal '" + s + "'");
  }
  Rat r(s);
  r.canonicalize();
  return r;
}

}  // namespace

namespace detail {

std::vector<std::string> split_poly_terms(const std::string& s) {
  std::vector<std::string> terms;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if ((c == '+' || c == '-') && i > 0) {
      char prev = s[i - 1];
      if (prev != '*' && prev != '^' && prev != '/') {
        terms.push_back(cur);
        cur.clear();
      }
    }
    cur += c;
  }
  if (!cur.empty()) terms.push_back(cur);
  if (terms.empty()) throw error("empty polynomial literal");
  return terms;
}

}  // namespace detail

// --- FieldSpec construction -------------------------------------------------

Field FieldSpec::rationals() {
  auto f = std::shared_ptr<FieldSpec>(new FieldSpec());
  f->kind_ = FieldKind::rationals;
  return f;
}

Field FieldSpec::prime(std::int64_t p) {
  if (!is_prime(p)) throw error("p = " + std::to_string(p) + " is not prime");
  if (p >= (std::int64_t{1} << 31)) throw error("prime too large");
  auto f = std::shared_ptr<FieldSpec>(new FieldSpec());
  f->kind_ = FieldKind::prime;
  f->p_ = p;
  return f;
}

Field FieldSpec::galois(std::int64_t p, int k) {
  if (!is_prime(p)) throw error("p = " + std::to_string(p) + " is not prime");
  if (k < 2 || k > 8) throw error("GF(p^k) supports 2 <= k <= 8");
  std::uint64_t count = 1;
  for (int i = 0; i < k; ++i) count *= static_cast<std::uint64_t>(p);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    PolyP f = poly_from_index(idx, p, k);
    if (is_irreducible(f, p)) return galois(p, k, f);
  }
  throw error("no irreducible polynomial found");  // unreachable
}

Field FieldSpec::galois(std::int64_t p, int k, std::vector<std::int64_t> modulus) {
  if (!is_prime(p)) throw error("p = " + std::to_string(p) + " is not prime");
  if (k < 2 || k > 8) throw error("GF(p^k) supports 2 <= k <= 8");
  POps F{p};
  for (auto& c : modulus) c = F.from_int(c);
  detail::poly_trim(F, modulus);
  if (detail::poly_deg<POps>(modulus) != k || modulus.back() != 1)
    throw error("modulus must be monic of degree k");
  if (!is_irreducible(modulus, p))
    throw error("modulus is reducible over GF(" + std::to_string(p) + ")");
  auto f = std::shared_ptr<FieldSpec>(new FieldSpec());
  f->kind_ = FieldKind::galois;
  f->p_ = p;
  f->k_ = k;
  f->modulus_ = std::move(modulus);
  return f;
}

Field FieldSpec::rational_functions(const Field& base) {
  if (!base) throw error("null base field");
  if (base->kind() != FieldKind::rationals && base->kind() != FieldKind::prime)
    throw error("rational functions require base Q or GF(p)");
  auto f = std::shared_ptr<FieldSpec>(new FieldSpec());
  f->kind_ = FieldKind::rational_functions;
  f->p_ = base->kind() == FieldKind::prime ? base->p() : 0;
  f->base_ = base;
  return f;
}

Field FieldSpec::parse_name(const std::string& raw) {
  std::string s = strip_ws(raw);
  bool ratfunc = false;
  if (s.size() >= 3 && s.substr(s.size() - 3) == "(t)") {
    ratfunc = true;
    s = s.substr(0, s.size() - 3);
  }
  Field base;
  if (s == "Q") {
    base = rationals();
  } else if (s.rfind("GF(", 0) == 0 && s.back() == ')') {
    std::string inner = s.substr(3, s.size() - 4);
    std::size_t caret = inner.find('^');
    if (caret != std::string::npos) {
      std::int64_t p = std::stoll(inner.substr(0, caret));
      int k = std::stoi(inner.substr(caret + 1));
      base = k == 1 ? prime(p) : galois(p, k);
    } else {
      std::int64_t n = std::stoll(inner);
      if (is_prime(n)) {
        base = prime(n);
      } else {
        std::int64_t p = 2;
        while (n % p != 0) ++p;
        int k = 0;
        std::int64_t m = n;
        while (m > 1) {
          if (m % p != 0) throw error("GF(n): n must be a prime power");
          m /= p;
          ++k;
        }
        base = galois(p, k);
      }
    }
  } else {
    throw error("unknown field name '" + raw + "'");
  }
  return ratfunc ? rational_functions(base) : base;
}

Field FieldSpec::base() const {
  if (kind_ != FieldKind::rational_functions) throw error("not a rational-function field");
  return base_;
}

std::int64_t FieldSpec::characteristic() const { return p_; }

std::uint64_t FieldSpec::size() const {
  if (!finite()) throw error("infinite field");
  std::uint64_t n = 1;
  for (int i = 0; i < k_; ++i) n *= static_cast<std::uint64_t>(p_);
  return n;
}

Scalar FieldSpec::element_at(std::uint64_t idx) const {
  if (kind_ == FieldKind::prime)
    return Scalar(shared_from_this(), static_cast<std::int64_t>(idx % p_));
  if (kind_ == FieldKind::galois) {
    GFElem e;
    for (int i = 0; i < k_; ++i) {
      e.c.push_back(static_cast<std::int64_t>(idx % p_));
      idx /= static_cast<std::uint64_t>(p_);
    }
    while (!e.c.empty() && e.c.back() == 0) e.c.pop_back();
    return Scalar(shared_from_this(), std::move(e));
  }
  throw error("infinite field");
}

std::uint64_t FieldSpec::index_of(const Scalar& a) const {
  check_scalar(a);
  if (kind_ == FieldKind::prime)
    return static_cast<std::uint64_t>(std::get<std::int64_t>(a.payload()));
  if (kind_ == FieldKind::galois) {
    const auto& e = std::get<GFElem>(a.payload());
    std::uint64_t idx = 0;
    for (std::size_t i = e.c.size(); i-- > 0;)
      idx = idx * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(e.c[i]);
    return idx;
  }
  throw error("infinite field");
}

Scalar pow(const Scalar& a, std::uint64_t e) {
  Scalar r = a.field()->one();
  Scalar base = a;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool FieldSpec::same(const FieldSpec& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case FieldKind::rationals:
      return true;
    case FieldKind::prime:
      return p_ == o.p_;
    case FieldKind::galois:
      return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
    case FieldKind::rational_functions:
      return base_->same(*o.base_);
  }
  return false;
}

bool same_field(const Field& a, const Field& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same(*b);
}

std::string FieldSpec::name() const {
  switch (kind_) {
    case FieldKind::rationals:
      return "Q";
    case FieldKind::prime:
      return "GF(" + std::to_string(p_) + ")";
    case FieldKind::galois:
      return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
    case FieldKind::rational_functions:
      return base_->name() + "(t)";
  }
  return "?";
}

// --- element construction ---------------------------------------------------

Scalar FieldSpec::zero() const {
  switch (kind_) {
    case FieldKind::rationals:
      return Scalar(shared_from_this(), Rat(0));
    case FieldKind::prime:
      return Scalar(shared_from_this(), std::int64_t{0});
    case FieldKind::galois:
      return Scalar(shared_from_this(), GFElem{});
    case FieldKind::rational_functions:
      if (p_ == 0) return Scalar(shared_from_this(), RatFuncQ{{}, {Rat(1)}});
      return Scalar(shared_from_this(), RatFuncP{{}, {1}});
  }
  throw error("bad field kind");
}

Scalar FieldSpec::one() const { return from_int(1); }

Scalar FieldSpec::from_int(std::int64_t n) const {
  switch (kind_) {
    case FieldKind::rationals:
      return Scalar(shared_from_this(), Rat(static_cast<long>(n)));
    case FieldKind::prime:
      return Scalar(shared_from_this(), POps{p_}.from_int(n));
    case FieldKind::galois: {
      GFElem e;
      auto r = POps{p_}.from_int(n);
      if (r != 0) e.c.push_back(r);
      return Scalar(shared_from_this(), std::move(e));
    }
    case FieldKind::rational_functions:
      if (p_ == 0) {
        auto num = n == 0 ? PolyQ{} : PolyQ{Rat(static_cast<long>(n))};
        return Scalar(shared_from_this(), RatFuncQ{std::move(num), {Rat(1)}});
      } else {
        auto r = POps{p_}.from_int(n);
        auto num = r == 0 ? PolyP{} : PolyP{r};
        return Scalar(shared_from_this(), RatFuncP{std::move(num), {1}});
      }
  }
  throw error("bad field kind");
}

Scalar FieldSpec::from_rat(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw error("zero denominator");
  switch (kind_) {
    case FieldKind::rationals: {
      Rat r(static_cast<long>(num), static_cast<long>(den));
      r.canonicalize();
      return Scalar(shared_from_this(), std::move(r));
    }
    default:
      return mul(from_int(num), inv(from_int(den)));
  }
}

Scalar FieldSpec::generator() const {
  if (kind_ == FieldKind::galois) return Scalar(shared_from_this(), GFElem{{0, 1}});
  if (kind_ == FieldKind::rational_functions) {
    if (p_ == 0) return Scalar(shared_from_this(), RatFuncQ{{Rat(0), Rat(1)}, {Rat(1)}});
    return Scalar(shared_from_this(), RatFuncP{{0, 1}, {1}});
  }
  throw error("field has no generator element");
}

// --- arithmetic ---------------------------------------------------------------

Field FieldSpec::check_scalar(const Scalar& a) const {
  if (!a.field() || !a.field()->same(*this)) throw error("scalar from a different field");
  return shared_from_this();
}

Scalar FieldSpec::add(const Scalar& a, const Scalar& b) const {
  auto self = check_scalar(a);
  check_scalar(b);
  switch (kind_) {
    case FieldKind::rationals:
      return Scalar(self, std::get<Rat>(a.payload()) + std::get<Rat>(b.payload()));
    case FieldKind::prime:
      return Scalar(self, POps{p_}.add(std::get<std::int64_t>(a.payload()),
                                       std::get<std::int64_t>(b.payload())));
    case FieldKind::galois: {
      POps F{p_};
      return Scalar(self, GFElem{detail::poly_add(F, std::get<GFElem>(a.payload()).c,
                                                  std::get<GFElem>(b.payload()).c)});
    }
    case FieldKind::rational_functions:
      if (p_ == 0) {
        QOps F;
        const auto& x = std::get<RatFuncQ>(a.payload());
        const auto& y = std::get<RatFuncQ>(b.payload());
        if (poly_is_one_q(x.den) && poly_is_one_q(y.den))
          return Scalar(self, RatFuncQ{detail::poly_add(F, x.num, y.num), {Rat(1)}});
        PolyQ num = detail::poly_add(F, detail::poly_mul(F, x.num, y.den),
                                     detail::poly_mul(F, y.num, x.den));
        return Scalar(self, normalize_q(std::move(num), detail::poly_mul(F, x.den, y.den)));
      } else {
        POps F{p_};
        const auto& x = std::get<RatFuncP>(a.payload());
        const auto& y = std::get<RatFuncP>(b.payload());
        if (x.den.size() == 1 && x.den[0] == 1 && y.den.size() == 1 && y.den[0] == 1)
          return Scalar(self, RatFuncP{detail::poly_add(F, x.num, y.num), {1}});
        PolyP num = detail::poly_add(F, detail::poly_mul(F, x.num, y.den),
                                     detail::poly_mul(F, y.num, x.den));
        return Scalar(self,
                      normalize_p(std::move(num), detail::poly_mul(F, x.den, y.den), p_));
      }
  }
  throw error("bad field kind");
}

Scalar FieldSpec::neg(const Scalar& a) const {
  auto self = check_scalar(a);
  switch (kind_) {
    case FieldKind::rationals:
      return Scalar(self, -std::get<Rat>(a.payload()));
    case FieldKind::prime:
      return Scalar(self, POps{p_}.neg(std::get<std::int64_t>(a.payload())));
    case FieldKind::galois:
      return Scalar(self, GFElem{detail::poly_neg(POps{p_}, std::get<GFElem>(a.payload()).c)});
    case FieldKind::rational_functions:
      if (p_ == 0) {
        const auto& x = std::get<RatFuncQ>(a.payload());
        return Scalar(self, RatFuncQ{detail::poly_neg(QOps{}, x.num), x.den});
      } else {
        const auto& x = std::get<RatFuncP>(a.payload());
        return Scalar(self, RatFuncP{detail::poly_neg(POps{p_}, x.num), x.den});
      }
  }
  throw error("bad field kind");
}

Scalar FieldSpec::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar FieldSpec::mul(const Scalar& a, const Scalar& b) const {
  auto self = check_scalar(a);
  check_scalar(b);
  switch (kind_) {
    case FieldKind::rationals:
      return Scalar(self, std::get<Rat>(a.payload()) * std::get<Rat>(b.payload()));
    case FieldKind::prime:
      return Scalar(self, POps{p_}.mul(std::get<std::int64_t>(a.payload()),
                                       std::get<std::int64_t>(b.payload())));
    case FieldKind::galois: {
      POps F{p_};
      PolyP prod = detail::poly_mul(F, std::get<GFElem>(a.payload()).c,
                                    std::get<GFElem>(b.payload()).c);
      return Scalar(self, GFElem{reduce_mod(prod, modulus_, p_)});
    }
    case FieldKind::rational_functions:
      if (p_ == 0) {
        QOps F;
        const auto& x = std::get<RatFuncQ>(a.payload());
        const auto& y = std::get<RatFuncQ>(b.payload());
        if (poly_is_one_q(x.den) && poly_is_one_q(y.den))
          return Scalar(self, RatFuncQ{detail::poly_mul(F, x.num, y.num), {Rat(1)}});
        return Scalar(self, normalize_q(detail::poly_mul(F, x.num, y.num),
                                        detail::poly_mul(F, x.den, y.den)));
      } else {
        POps F{p_};
        const auto& x = std::get<RatFuncP>(a.payload());
        const auto& y = std::get<RatFuncP>(b.payload());
        if (x.den.size() == 1 && x.den[0] == 1 && y.den.size() == 1 && y.den[0] == 1)
          return Scalar(self, RatFuncP{detail::poly_mul(F, x.num, y.num), {1}});
        return Scalar(self, normalize_p(detail::poly_mul(F, x.num, y.num),
                                        detail::poly_mul(F, x.den, y.den), p_));
      }
  }
  throw error("bad field kind");
}

Scalar FieldSpec::inv(const Scalar& a) const {
  auto self = check_scalar(a);
  if (is_zero(a)) throw error("division by zero");
  switch (kind_) {
    case FieldKind::rationals:
      return Scalar(self, Rat(1) / std::get<Rat>(a.payload()));
    case FieldKind::prime:
      return Scalar(self, POps{p_}.inv(std::get<std::int64_t>(a.payload())));
    case FieldKind::galois: {
      // extended Euclid in GF(p)[x] against the modulus
      POps F{p_};
      PolyP r = modulus_, nr = std::get<GFElem>(a.payload()).c;
      PolyP t{}, nt{1};
      while (!nr.empty()) {
        auto [q, rem] = detail::poly_divmod(F, r, nr);
        PolyP ntmp = detail::poly_sub(F, t, detail::poly_mul(F, q, nt));
        t = std::move(nt);
        nt = std::move(ntmp);
        r = std::move(nr);
        nr = std::move(rem);
      }
      if (detail::poly_deg<POps>(r) != 0) throw error("non-invertible Galois element");
      PolyP out = detail::poly_scale(F, t, F.inv(r[0]));
      return Scalar(self, GFElem{reduce_mod(out, modulus_, p_)});
    }
    case FieldKind::rational_functions:
      if (p_ == 0) {
        const auto& x = std::get<RatFuncQ>(a.payload());
        return Scalar(self, normalize_q(x.den, x.num));
      } else {
        const auto& x = std::get<RatFuncP>(a.payload());
        return Scalar(self, normalize_p(x.den, x.num, p_));
      }
  }
  throw error("bad field kind");
}

bool FieldSpec::is_zero(const Scalar& a) const {
  check_scalar(a);
  switch (kind_) {
    case FieldKind::rationals:
      return std::get<Rat>(a.payload()) == 0;
    case FieldKind::prime:
      return std::get<std::int64_t>(a.payload()) == 0;
    case FieldKind::galois:
      return std::get<GFElem>(a.payload()).c.empty();
    case FieldKind::rational_functions:
      if (p_ == 0) return std::get<RatFuncQ>(a.payload()).num.empty();
      return std::get<RatFuncP>(a.payload()).num.empty();
  }
  throw error("bad field kind");
}

Scalar FieldSpec::derive(const Scalar& a) const {
  auto self = check_scalar(a);
  if (kind_ != FieldKind::rational_functions) return zero();
  // (n/d)' = (n'd - nd') / d^2
  if (p_ == 0) {
    QOps F;
    const auto& x = std::get<RatFuncQ>(a.payload());
    PolyQ num = detail::poly_sub(F, detail::poly_mul(F, detail::poly_derivative(F, x.num), x.den),
                                 detail::poly_mul(F, x.num, detail::poly_derivative(F, x.den)));
    return Scalar(self, normalize_q(std::move(num), detail::poly_mul(F, x.den, x.den)));
  }
  POps F{p_};
  const auto& x = std::get<RatFuncP>(a.payload());
  PolyP num = detail::poly_sub(F, detail::poly_mul(F, detail::poly_derivative(F, x.num), x.den),
                               detail::poly_mul(F, x.num, detail::poly_derivative(F, x.den)));
  return Scalar(self, normalize_p(std::move(num), detail::poly_mul(F, x.den, x.den), p_));
}

// --- printing / parsing -------------------------------------------------------

std::string FieldSpec::to_string(const Scalar& a) const {
  check_scalar(a);
  switch (kind_) {
    case FieldKind::rationals:
      return std::get<Rat>(a.payload()).get_str();
    case FieldKind::prime:
      return std::to_string(std::get<std::int64_t>(a.payload()));
    case FieldKind::galois:
      return detail::poly_str(POps{p_}, std::get<GFElem>(a.payload()).c, "g");
    case FieldKind::rational_functions: {
      auto render = [&](const auto& rf, const auto& F) -> std::string {
        std::string num = detail::poly_str(F, rf.num, "t");
        bool den_is_one = rf.den.size() == 1 && F.eq(rf.den[0], F.one());
        if (den_is_one) return num;
        return "(" + num + ")/(" + detail::poly_str(F, rf.den, "t") + ")";
      };
      if (p_ == 0) return render(std::get<RatFuncQ>(a.payload()), QOps{});
      return render(std::get<RatFuncP>(a.payload()), POps{p_});
    }
  }
  throw error("bad field kind");
}

Scalar FieldSpec::parse(const std::string& raw) const {
  std::string s = strip_ws(raw);
  if (s.empty()) throw error("empty scalar literal");
  switch (kind_) {
    case FieldKind::rationals:
      return Scalar(shared_from_this(), parse_rat(s));
    case FieldKind::prime:
      return from_int(std::stoll(s));
    case FieldKind::galois: {
      POps F{p_};
      auto coef = [&](const std::string& t) { return F.from_int(std::stoll(t)); };
      PolyP c = detail::poly_parse(F, s, "g", coef);
      return Scalar(shared_from_this(), GFElem{reduce_mod(c, modulus_, p_)});
    }
    case FieldKind::rational_functions: {
      std::string snum = s, sden;
      std::size_t split = s.find(")/(");
      if (!s.empty() && s.front() == '(' && split != std::string::npos && s.back() == ')') {
        snum = s.substr(1, split - 1);
        sden = s.substr(split + 3, s.size() - split - 4);
      }
      if (p_ == 0) {
        QOps F;
        auto coef = [&](const std::string& t) { return parse_rat(t); };
        PolyQ num = detail::poly_parse(F, snum, "t", coef);
        PolyQ den = sden.empty() ? PolyQ{Rat(1)} : detail::poly_parse(F, sden, "t", coef);
        return Scalar(shared_from_this(), normalize_q(std::move(num), std::move(den)));
      }
      POps F{p_};
      auto coef = [&](const std::string& t) { return F.from_int(std::stoll(t)); };
      PolyP num = detail::poly_parse(F, snum, "t", coef);
      PolyP den = sden.empty() ? PolyP{1} : detail::poly_parse(F, sden, "t", coef);
      return Scalar(shared_from_this(), normalize_p(std::move(num), std::move(den), p_));
    }
  }
  throw error("bad field kind");
}

// --- Scalar forwarding --------------------------------------------------------

bool Scalar::is_zero() const { return field_->is_zero(*this); }

bool Scalar::operator==(const Scalar& o) const {
  if (!field_ || !o.field_) return field_ == o.field_;
  if (!field_->same(*o.field_)) return false;
  return v_ == o.v_;
}

Scalar Scalar::operator+(const Scalar& o) const { return field_->add(*this, o); }
Scalar Scalar::operator-(const Scalar& o) const { return field_->sub(*this, o); }
Scalar Scalar::operator*(const Scalar& o) const { return field_->mul(*this, o); }
Scalar Scalar::operator/(const Scalar& o) const { return field_->mul(*this, field_->inv(o)); }
Scalar Scalar::operator-() const { return field_->neg(*this); }
Scalar Scalar::inv() const { return field_->inv(*this); }
std::string Scalar::str() const { return field_->to_string(*this); }

}  // namespace scring
