#ifndef HAC_CONSTRUCTIONS_HPP
#define HAC_CONSTRUCTIONS_HPP

#include <optional>
#include <vector>

#include "hac/lazy_homeo.hpp"
#include "hac/pl_map.hpp"

namespace hac {

/// The sawtooth family on [0,1]: the PL map through {(i/n, i/n)} and
/// {(i/n + 1/n^2, (i+1)/n - 1/n^2)}. Fixes every i/n and has
/// rho(f_n, id) = 2 - 4/n; n = 2 degenerates to the identity.
PLHomeo sawtooth(long n);

/// The 5-point wobble on [a,b]: (a,a), ((3a+b)/4, (2a+b)/3),
/// ((a+b)/2, (3a+2b)/5), ((a+3b)/4, (a+4b)/5), (b,b). Crosses the diagonal
/// with sign pattern (+, -, +), so any uniformly-close map still has interior
/// fixed points.
PLHomeo wobble(const Rational& a, const Rational& b);

/// One blow-up site: the closed block [site_lo, site_hi] (possibly
/// degenerate) around a fixed point of the map.
struct BlowUpSite {
  Rational lo;
  Rational fixed_point;
  Rational hi;
};

struct BlowUpSpec {
  PLHomeo map;  // endpoint-fixing on its interval
  std::vector<BlowUpSite> sites;
};

struct BlowUpResult {
  PLHomeo psi;
  Rational bound;  // certified: rho(map, psi) <= bound
};

/// Replaces each fixed point by a pointwise-fixed block, rescaling the map
/// affinely between consecutive blocks. The returned bound is
/// sum |a_i - phi(a_i)| + |phi(b_i) - b_i| + (b_i - a_i) + (phi(b_i) - phi(a_i)).
BlowUpResult blow_up(const BlowUpSpec& spec);

/// Stage-k middle-thirds staircase approximant: slope (3/2)^k on the 2^k kept
/// intervals, slope 0 on the removed middle thirds. Increasing but not a
/// homeomorphism for k >= 1.
PLMap cantor_stair(long k);

/// x -> (cantor_stair(k)(x) + x) / 2: a PL homeomorphism family that is
/// uniformly Cauchy with rho-gap 1/3, witnessing that the rho topology is
/// strictly finer than uniform convergence.
PLHomeo mix(long k);

struct GeneratorPairSpec {
  PLHomeo f;
  PLHomeo g;
  Rational delta;
  Rational alpha;
  Rational x0;
  std::vector<PLHomeo> phis;  // endomorphisms of [g_tilde^{-1}(x0), x0]
  std::optional<PLHomeo> interpolant;  // [x0, alpha] -> [x0, f(alpha)]; default built if absent
};

struct GeneratorPair {
  LazyHomeo f_tilde;
  PLHomeo g_tilde;
  PLHomeo interpolant;  // the PL piece of f_tilde on [x0, alpha]
  PLHomeo f_upper;      // f restricted to [alpha, 1]
  std::vector<PLHomeo> phis;
  Rational alpha;
  Rational y0;
  Rational x0;
  Rational delta;
  Rational rho_g_bound;  // 2 g(alpha), certified >= rho(g, g_tilde)
  Rational rho_f_bound;  // 2 f(alpha), certified >= rho(f, f_tilde)

  /// x_n = g_tilde^{-n}(x0), strictly decreasing to 0.
  Rational x(std::size_t n) const;
};

/// Largest convenient dyadic alpha with f(alpha) < threshold and
/// g(alpha) < threshold, found by exact bisection on the PL data.
Rational pick_alpha(const PLHomeo& f, const PLHomeo& g, const Rational& threshold);

/// Resolves defaults (alpha, x0, phis, interpolant) for a delta-perturbation
/// of (f, g); f and g must fix the endpoints of [0,1] and share no interior
/// fixed point.
GeneratorPairSpec make_generator_pair_spec(const PLHomeo& f, const PLHomeo& g,
                                           const Rational& delta, std::size_t num_phis = 2);

/// Builds the perturbed pair: g_tilde is PL, agrees with g on [alpha, 1] and
/// follows (0,0), (y0/3, 2y0/3), (y0, y0), (alpha, g(alpha)) below; f_tilde
/// agrees with f on [alpha, 1], with the interpolant on [x0, alpha] and the
/// conjugated phi-tiles below x0. Validates that f_tilde and g_tilde share no
/// fixed point in (0,1) on the PL part; use verify_no_shared_fixed_points for
/// the tile-by-tile check.
GeneratorPair generator_pair(const GeneratorPairSpec& spec);

/// Exact shared-fixed-point check on [x(depth+1), 1]: the PL data on [x0, 1]
/// plus each conjugated tile map up to the given depth. Throws
/// Error{SharedFixedPoint} on failure.
void verify_no_shared_fixed_points(const GeneratorPair& pair, std::size_t depth);

}  // namespace hac

#endif
