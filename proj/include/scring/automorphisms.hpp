#ifndef SCRING_AUTOMORPHISMS_HPP
#define SCRING_AUTOMORPHISMS_HPP

#include "scring/derivations.hpp"

namespace scring {

/// sigma(r, m) = (r, m + delta(r)) for an additive delta: R -> ann(M) with
/// delta(r r') = r.delta(r') + delta(r).r'. Both hypotheses are checked;
/// violations name the failing basis pair. The result fixes {0} x M
/// pointwise and fixes 1 when the ring is unital.
AdditiveMap lift_aut_triangular(const Construction& lambda, const AdditiveMatrix& delta);

/// sigma(alpha + a) = alpha + g(a) for a bijective linear g on the maximal
/// ideal with (g - id)(m) in ann(m) and g identity on m^2.
AdditiveMap lift_aut_local_g(const Construction& r, const Matrix& g_on_m);

/// sigma = alpha + a + f(a + ann(m)) for a linear f: m/ann(m) -> ann(m)
/// vanishing on (m^2 + ann(m))/ann(m); f is given on m coordinates and must
/// kill ann(m). Reduces to lift_aut_local_g with g = id + f.
AdditiveMap lift_aut_local_f(const Construction& r, const Matrix& f_on_m);

/// Extends pairwise assignments b_i -> b'_i (with b_i - b'_i in ann(m)) and a
/// pointwise-fixed set to an automorphism by the basis-extension procedure:
/// a basis of the span of the differences over <m^2, fixed>, then an
/// ann(m)-basis, then a complement basis, all mapped compatibly. Absent when
/// the independence preconditions fail or the assignments are inconsistent.
std::optional<AdditiveMap> build_fixing_automorphism(const Construction& r,
                                                     const std::vector<Vec>& fixed,
                                                     const std::vector<std::pair<Vec, Vec>>& pairs);

struct OrbitReport {
  Element base;
  Subspace modulo;
  std::vector<Element> iterates;  // sigma^0(a) .. sigma^N(a)
  std::size_t distinct_cosets = 0;
  std::optional<std::size_t> period;  // least p with sigma^p(a) = a mod the subspace
};
OrbitReport orbit(const AdditiveMap& sigma, const Element& a, const Subspace& modulo,
                  std::size_t n);

enum class WitnessKind { vector, lie, s_ring };

struct WitnessReport {
  WitnessKind kind{};
  std::string field_name;
  std::size_t requested_n = 0;
  std::size_t distinct = 0;
  std::optional<std::size_t> period;
  std::optional<std::size_t> expected_max;  // finite ceiling, when applicable
  bool pass = false;
  std::vector<std::string> detail;
};

/// Lambda(k, V) with the derivation-built automorphism; orbit of (t, 0)
/// modulo ann(Lambda). Any fixed parameters must have derivation-constant
/// coordinates (d/dt kills them); the lifted map then fixes them, which the
/// report verifies.
WitnessReport witness_vector(const Field& kt, std::size_t dim_v, std::size_t n,
                             const std::vector<Vec>& params = {});

/// h x| h+ over k(t) with the hat-lifted derivation: locates b with
/// hat(b) outside z(g) by scanning basis vectors, their pairwise sums, then
/// t-multiples; verifies k.hat(b) stays outside z(g) for k = 1..n and runs
/// the orbit of (b, 0) modulo the center. Fixed parameters as above.
WitnessReport witness_lie(const Field& kt, std::size_t heis_n, std::size_t n,
                          const std::vector<Vec>& params = {});

/// Lambda(F_q, S(B x| B+)) with the diagonal automorphisms induced from
/// derivation-lifted automorphisms of B x| B+; pairwise distinctness of the
/// images of ((a,0),0) modulo ann(S).
WitnessReport witness_s_ring(std::int64_t q, std::size_t heis_n, std::size_t n);

}  // namespace scring

#endif
