#ifndef SCRING_BCH_HPP
#define SCRING_BCH_HPP

#include "scring/maps.hpp"

namespace scring {

/// The group G(L) on a 2-step nilpotent Lie ring L over a field of
/// characteristic != 2, with x * y = x + y + (1/2)[x,y]. Identity is 0 and
/// the inverse of x is -x.
class BchGroup {
 public:
  explicit BchGroup(Algebra lie);

  const Algebra& algebra() const { return lie_; }
  const Scalar& half() const { return half_; }

  Element star(const Element& x, const Element& y) const;
  Element inverse(const Element& x) const { return -x; }
  /// x * y * (-x) * (-y); equals the Lie bracket.
  Element group_commutator(const Element& x, const Element& y) const;

  /// x + y recovered from the group as x * y * (-(1/2)[x,y]_G).
  Element recovered_add(const Element& x, const Element& y) const;
  Element recovered_bracket(const Element& x, const Element& y) const {
    return group_commutator(x, y);
  }
  /// The Lie ring rebuilt from the recovered operations on the basis; the
  /// round trip is the identity on structure constants.
  Algebra recovered_algebra() const;

 private:
  Algebra lie_;
  Scalar half_;
};

struct GroupCheckReport {
  bool exhaustive = false;
  std::uint64_t elements = 0;
  std::uint64_t triples_checked = 0;
  bool associative = false;
  bool identity_ok = false;
  bool inverses_ok = false;
  bool power_ok = false;          // n-fold star = n-fold sum for n <= 10
  bool center_matches = false;    // center of G = center of L (finite only)
  bool commutator_matches = false;  // group commutator = bracket on sampled pairs
  bool ok = false;
  std::string failure;
};

/// Exhaustive mode enumerates all of L (finite field, |L| <= 20000) and runs
/// every triple through associativity; random mode samples.
GroupCheckReport check_group(const BchGroup& g, bool exhaustive, std::uint64_t seed = 0,
                             std::size_t samples = 1000);

}  // namespace scring

#endif
