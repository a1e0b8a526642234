#ifndef HAC_SAMPLE_HPP
#define HAC_SAMPLE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "hac/conjugacy.hpp"
#include "hac/pl_map.hpp"

namespace hac {

/// Deterministic 64-bit PRNG (splitmix64). The seed fully determines every
/// generated instance, independent of platform or standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Uniform in [lo, hi].
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

/// Random endpoint-fixing PL map on [0,1] with the given number of interior
/// breakpoints, slopes within [1/2, 3/2].
PLHomeo random_endpoint_fixing(SplitMix64& rng, std::size_t interior = 4);

/// Same, but one interior breakpoint sits on the diagonal; returns the map
/// and that fixed point.
std::pair<PLHomeo, Rational> random_with_interior_fixed_point(SplitMix64& rng,
                                                              std::size_t interior = 4);

/// Single-orbital 3-point bump on the span, of the given parity, with both
/// segment slopes bounded away from 1.
PLHomeo random_bump(SplitMix64& rng, const Interval& span, int parity);

/// Fixed-structure pattern: alternating fixed blocks and orbitals, starting
/// and ending with a fixed block.
std::vector<SigToken> random_signature_pattern(SplitMix64& rng, bool allow_intervals);

/// Endpoint-fixing map realizing the pattern with random block widths and
/// random bumps.
PLHomeo random_from_signature(SplitMix64& rng, const std::vector<SigToken>& pattern);

/// Two independent realizations of one random pattern (hence conjugate by
/// this library's pasting).
std::pair<PLHomeo, PLHomeo> random_matched_pair(SplitMix64& rng, bool allow_intervals);

/// Random interior rational of the interval on the grid lo + k (len/denom).
Rational random_rational(SplitMix64& rng, const Interval& iv, long denom = 1024);

/// Random pair of endpoint-fixing maps sharing no fixed point in (0,1)
/// (rejection-sampled), suitable input for generator_pair.
std::pair<PLHomeo, PLHomeo> random_disjoint_fix_pair(SplitMix64& rng, std::size_t interior = 4);

}  // namespace hac

#endif
