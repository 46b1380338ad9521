#ifndef SCRING_DERIVATIONS_HPP
#define SCRING_DERIVATIONS_HPP

#include "scring/constructions.hpp"

namespace scring {

/// Solution space of D(b_i b_j) = b_i D(b_j) + D(b_i) b_j over matrix
/// unknowns, as a subspace of End(A) with ambient dim^2 (row-major
/// flattening). The system has dim^3 equations; fine for dim <= 15.
Subspace derivation_space(const Algebra& a);

/// Derivations D with D(s) = 0 for each given element.
Subspace derivations_vanishing_on(const Algebra& a, const std::vector<Element>& elems);

Matrix unflatten(const Field& f, const Vec& flat, std::size_t n);
Vec flatten(const Matrix& m);

/// Entrywise d/dt of the embedded image of a. If it lies back in the span of
/// the embedded basis, coords holds the algebra coordinates.
struct HatLift {
  bool in_algebra = false;
  std::optional<Vec> coords;
  Matrix raw;
};
HatLift hat_lift(const Construction& g, const Element& a);
HatLift hat_lift(const Construction& g, const Vec& coords);

/// The hat-lift as a whole map on coordinates. Present exactly when d/dt
/// kills every embedding entry of every basis vector, in which case the lift
/// is the coordinatewise derivative: lin = 0, der = identity.
std::optional<AdditiveMatrix> hat_lift_map(const Construction& g);

/// delta: R -> M, alpha -> derive(alpha) . x0, for a triangular ring whose R
/// part is the scalar field. x0 must lie in ann(M).
AdditiveMatrix scalar_to_delta(const Construction& lambda, const Vec& x0_in_m);

}  // namespace scring

#endif
