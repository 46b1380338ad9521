#ifndef SCRING_FIELD_HPP
#define SCRING_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace scring {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class FieldSpec;
class Scalar;

/// Shared immutable handle to a field description.
using Field = std::shared_ptr<const FieldSpec>;

enum class FieldKind {
  rationals,           // Q
  prime,               // GF(p)
  galois,              // GF(p^k), k >= 2, explicit monic irreducible modulus
  rational_functions,  // Q(t) or GF(p)(t), carries the derivation d/dt
};

using Rat = mpq_class;

/// Dense little-endian coefficient vectors, trimmed (no trailing zeros; empty = 0).
using PolyQ = std::vector<Rat>;
using PolyP = std::vector<std::int64_t>;

/// GF(p^k) element: polynomial residue in the generator g, length < k after reduction.
struct GFElem {
  std::vector<std::int64_t> c;
  bool operator==(const GFElem&) const = default;
};

/// Reduced rational function over Q: gcd(num,den) = 1, den monic, zero = 0/1.
struct RatFuncQ {
  PolyQ num, den;
  bool operator==(const RatFuncQ&) const = default;
};

/// Same canonical form with GF(p) coefficients.
struct RatFuncP {
  PolyP num, den;
  bool operator==(const RatFuncP&) const = default;
};

/// An exact field element. Canonical form is unique, so equality is structural.
class Scalar {
 public:
  using Payload = std::variant<Rat, std::int64_t, GFElem, RatFuncQ, RatFuncP>;

  Scalar() = default;
  Scalar(Field f, Payload v) : field_(std::move(f)), v_(std::move(v)) {}

  const Field& field() const { return field_; }
  const Payload& payload() const { return v_; }

  bool is_zero() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inv() const;
  std::string str() const;

 private:
  Field field_;
  Payload v_;
};

class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
 public:
  static Field rationals();
  static Field prime(std::int64_t p);
  /// Modulus defaults to the monic irreducible of degree k with least
  /// little-endian base-p encoding sum(c_i p^i).
  static Field galois(std::int64_t p, int k);
  static Field galois(std::int64_t p, int k, std::vector<std::int64_t> modulus);
  static Field rational_functions(const Field& base);

  /// Parses "Q", "GF(p)", "GF(p^k)", "Q(t)", "GF(p)(t)".
  static Field parse_name(const std::string& s);

  FieldKind kind() const { return kind_; }
  std::int64_t p() const { return p_; }
  int degree() const { return k_; }
  const std::vector<std::int64_t>& modulus() const { return modulus_; }
  /// Base field of a rational-function field.
  Field base() const;

  /// 0 for Q and Q(t), p otherwise.
  std::int64_t characteristic() const;
  bool finite() const { return kind_ == FieldKind::prime || kind_ == FieldKind::galois; }
  /// Number of elements of a finite field.
  std::uint64_t size() const;
  /// Enumeration of a finite field, idx in [0, size()).
  Scalar element_at(std::uint64_t idx) const;
  /// Inverse of element_at.
  std::uint64_t index_of(const Scalar& a) const;
  /// Whether the built-in derivation is non-zero (true only for k(t)).
  bool has_derivation() const { return kind_ == FieldKind::rational_functions; }

  bool same(const FieldSpec& o) const;
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  Scalar from_rat(std::int64_t num, std::int64_t den) const;
  /// g for GF(p^k), t for k(t); error otherwise.
  Scalar generator() const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  bool is_zero(const Scalar& a) const;

  /// The built-in derivation: d/dt on k(t), zero on every other kind.
  /// Additive and Leibniz: derive(xy) = x derive(y) + derive(x) y.
  Scalar derive(const Scalar& a) const;

  std::string to_string(const Scalar& a) const;
  /// Parses the scalar literal grammar: "a/b" or "a" over Q; polynomial
  /// strings in g over GF(p^k); "poly" or "(poly)/(poly)" in t over k(t).
  Scalar parse(const std::string& s) const;

 private:
  FieldSpec() = default;
  Field check_scalar(const Scalar& a) const;

  FieldKind kind_ = FieldKind::rationals;
  std::int64_t p_ = 0;
  int k_ = 1;
  std::vector<std::int64_t> modulus_;  // little-endian, length k_+1, monic
  Field base_;                         // for rational_functions
};

bool same_field(const Field& a, const Field& b);

Scalar pow(const Scalar& a, std::uint64_t e);

}  // namespace scring

#endif
