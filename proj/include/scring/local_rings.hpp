#ifndef SCRING_LOCAL_RINGS_HPP
#define SCRING_LOCAL_RINGS_HPP

#include <functional>
#include <map>

#include "scring/invariants.hpp"

namespace scring {

/// Enumerated finite commutative unital ring, the substrate of the
/// Teichmuller / idempotent computations. Elements are indices in [0, size).
class FiniteRing {
 public:
  virtual ~FiniteRing() = default;
  virtual std::uint64_t size() const = 0;
  virtual std::uint64_t add(std::uint64_t a, std::uint64_t b) const = 0;
  virtual std::uint64_t mul(std::uint64_t a, std::uint64_t b) const = 0;
  virtual std::uint64_t neg(std::uint64_t a) const = 0;
  virtual std::uint64_t one() const = 0;
  virtual std::string str(std::uint64_t a) const = 0;

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }
  std::uint64_t power(std::uint64_t a, std::uint64_t e) const;
  /// Additive order of 1.
  std::uint64_t characteristic() const;
};

/// Z/n. Z/p^s is not an algebra over GF(p) (its additive group is not a
/// vector space), so table rings carry these examples.
class ZmodRing : public FiniteRing {
 public:
  explicit ZmodRing(std::uint64_t n);
  std::uint64_t size() const override { return n_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const override { return (a + b) % n_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const override { return a * b % n_; }
  std::uint64_t neg(std::uint64_t a) const override { return (n_ - a) % n_; }
  std::uint64_t one() const override { return 1 % n_; }
  std::string str(std::uint64_t a) const override { return std::to_string(a); }

 private:
  std::uint64_t n_;
};

/// A structure-constant algebra over a finite field, enumerated by
/// mixed-radix coordinates.
class AlgebraRing : public FiniteRing {
 public:
  explicit AlgebraRing(Algebra a);
  std::uint64_t size() const override { return count_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const override;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const override;
  std::uint64_t neg(std::uint64_t a) const override;
  std::uint64_t one() const override;
  std::string str(std::uint64_t a) const override;

  const Algebra& algebra() const { return a_; }
  Vec decode(std::uint64_t idx) const;
  std::uint64_t encode(const Vec& v) const;

 private:
  Algebra a_;
  std::uint64_t q_, count_;
  std::uint64_t one_;
};

// --- predicates and reports ---------------------------------------------------

struct LocalReport {
  bool commutative = false;
  bool unital = false;
  bool ideal = false;
  bool nilpotent = false;
  std::optional<std::size_t> nilpotency_k;  // least k with m^k = 0
  bool residue_field = false;
  bool local = false;
  std::string residue_desc;
  std::vector<std::string> failures;
};

/// Checks that m is a nilpotent ideal with R/m a field. The finite case
/// verifies invertibility of every non-zero residue class by enumeration;
/// over infinite scalar fields the quotient must be one-dimensional with an
/// invertible generator.
LocalReport is_local(const Algebra& r, const Subspace& m);

/// Additive order of the unit: the scalar field characteristic for algebras,
/// n for Z/n.
std::int64_t characteristic(const Algebra& r);

struct TeichmullerReport {
  std::vector<std::uint64_t> reps;  // X = { a : a = b^(p^n) }, sorted
  std::size_t classes = 0;
  bool unique_per_class = false;
  bool mult_closed = false;
  bool power_compatible = false;   // every a in X is a p^k-th power for k <= n
  bool map_multiplicative = false; // rep(xy) = rep(x) rep(y) on classes
  bool ok = false;
  std::string failure;
};

/// Multiplicative representatives of a finite local ring with m^n = 0 and
/// residue characteristic p. in_m decides membership of the maximal ideal.
TeichmullerReport mult_representatives(const FiniteRing& r,
                                       const std::function<bool(std::uint64_t)>& in_m,
                                       std::int64_t p, std::size_t n);

struct IdempotentDecomposition {
  std::vector<std::uint64_t> idempotents;  // all of them
  std::vector<std::uint64_t> primitive;    // the atoms u_i
  std::vector<std::vector<std::uint64_t>> factors;  // R.u_i, sorted element lists
  bool orthogonal = false;
  bool sum_is_one = false;
  bool reassembly_bijective = false;
  bool reassembly_multiplicative = false;
  bool ok = false;
};

/// Primitive orthogonal idempotents summing to 1 by enumeration (|R| <= 2^16)
/// and the factor decomposition R = prod R.u_i, verified elementwise.
IdempotentDecomposition idempotent_decomposition(const FiniteRing& r);

struct CohenReport {
  bool subring = false;
  bool contains_one = false;
  bool inverses_closed = false;
  bool meets_m_trivially = false;
  bool spans_with_m = false;
  bool residue_iso = false;
  bool ok = false;
  std::string failure;
  /// On success: R rewritten on the basis k + m with the triangular product,
  /// verified equal to R's multiplication via the change-of-basis map.
  std::optional<Construction> retagged;
};

/// Checks that k is a subfield splitting R as k + m.
CohenReport cohen_split_check(const Algebra& r, const Subspace& m, const Subspace& k);

/// Subfield candidates of Z/n for the residue Z/p: additive subgroups of
/// order p. Returns per-candidate failure descriptions (there is exactly one
/// such subgroup; it contains 1 only when n = p).
struct ZnCohenReport {
  bool any_subfield = false;
  std::vector<std::string> candidates;  // description + verdict per candidate
};
ZnCohenReport zn_subfield_check(std::uint64_t n);

struct InterpFieldReport {
  Construction ring;       // Lambda(GF(p), m) for m the maximal ideal of F[x]/(x^3)
  Subspace ann_m;          // inside m coordinates
  bool shape_ok = false;   // h = mult-by-x: surjective onto ann(m), kernel ann(m)
  bool well_defined = false;   // product independent of preimage choices, exhaustive
  bool field_axioms = false;   // (ann(m), +, o) is a field
  bool iso_to_f = false;       // alpha x^2 -> alpha is an isomorphism onto F
  bool cyclic = false;         // multiplicative group cyclic
  std::size_t mult_order = 0;
  bool ok = false;
};

/// The interpreted field on ann(m) with a o b = a'.b' for h(a') = a,
/// h(b') = b, built from F = GF(p^k).
InterpFieldReport interp_field(std::int64_t p, int k);

struct AsmReport {
  Subspace ann_m;          // m coordinates
  Subspace m2_plus_ann;    // m coordinates
  bool m_equals_ann = false;
  std::size_t codim = 0;   // codimension of m^2 + ann(m) in m
};

/// The algebraic criterion m = ann(m) for a local-sum tagged ring, together
/// with the quantities m^2 + ann(m) driving the automorphism family.
AsmReport asm_criterion(const Construction& r);

}  // namespace scring

#endif
