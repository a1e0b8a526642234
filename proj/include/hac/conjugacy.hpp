#ifndef HAC_CONJUGACY_HPP
#define HAC_CONJUGACY_HPP

#include <string>
#include <vector>

#include "hac/dynamics.hpp"
#include "hac/lazy_homeo.hpp"

namespace hac {

/// One token of the left-to-right fixed-structure description of a map:
/// isolated fixed point, fixed interval, or an orbital of either parity.
enum class SigToken { FixedPoint, FixedInterval, PosOrbital, NegOrbital };

struct OrbitalSignature {
  std::vector<SigToken> tokens;

  friend bool operator==(const OrbitalSignature& a, const OrbitalSignature& b) {
    return a.tokens == b.tokens;
  }
  std::string to_string() const;
};

/// Deterministic token sequence for an endpoint-fixing PL map. Two maps are
/// pasteably conjugate by this module iff their signatures are equal.
OrbitalSignature orbital_signature(const PLHomeo& f);

/// Conjugator between single-orbital maps ("bumps"): f on [a,b] fixing
/// exactly {a,b} and g on [c,d] fixing exactly {c,d}, same parity. h0 is a
/// PL bijection between the fundamental domains at x0 and y0 (positive
/// parity: [x0, f(x0)] -> [y0, g(y0)]; mirrored for negative parity); it is
/// extended along orbits: h(x) = g^n(h0(f^{-n}(x))). Then h f = g h exactly
/// wherever both sides evaluate.
LazyHomeo bump_conjugator(const PLHomeo& f, const PLHomeo& g, const Rational& x0,
                          const Rational& y0, const PLHomeo& h0);

/// Same with the default choices: base points at the orbital midpoints and
/// the affine h0.
LazyHomeo bump_conjugator(const PLHomeo& f, const PLHomeo& g);

/// Conjugator between endpoint-fixing PL maps with equal signatures: affine
/// on fixed intervals, an orbit extension on each orbital, fixed points to
/// fixed points. Throws Error{OrbitalMismatch} when signatures differ.
LazyHomeo global_conjugator(const PLHomeo& f, const PLHomeo& g);

}  // namespace hac

#endif
