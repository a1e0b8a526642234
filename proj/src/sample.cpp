#include "hac/sample.hpp"

namespace hac {

PLHomeo random_endpoint_fixing(SplitMix64& rng, std::size_t interior) {
  std::vector<Breakpoint> pts;
  pts.push_back({Rational(0), Rational(0)});
  Rational step = make_rational(1, static_cast<long>(interior + 1));
  for (std::size_t i = 1; i <= interior; ++i) {
    Rational x = Rational(static_cast<long>(i)) * step;
    Rational jitter = make_rational(rng.range(-8, 8), 32) * step;
    pts.push_back({x, x + jitter});
  }
  pts.push_back({Rational(1), Rational(1)});
  return PLHomeo::from_points(std::move(pts));
}

std::pair<PLHomeo, Rational> random_with_interior_fixed_point(SplitMix64& rng,
                                                              std::size_t interior) {
  std::size_t which = 1 + rng.below(interior);
  std::vector<Breakpoint> pts;
  pts.push_back({Rational(0), Rational(0)});
  Rational step = make_rational(1, static_cast<long>(interior + 1));
  Rational fixed;
  for (std::size_t i = 1; i <= interior; ++i) {
    Rational x = Rational(static_cast<long>(i)) * step;
    if (i == which) {
      pts.push_back({x, x});
      fixed = x;
    } else {
      Rational jitter = make_rational(rng.range(-8, 8), 32) * step;
      pts.push_back({x, x + jitter});
    }
  }
  pts.push_back({Rational(1), Rational(1)});
  return {PLHomeo::from_points(std::move(pts)), std::move(fixed)};
}

PLHomeo random_bump(SplitMix64& rng, const Interval& span, int parity) {
  require(parity == 1 || parity == -1, ErrorKind::BadParameter, "parity must be +1 or -1");
  // knot heights keep both segment slopes in [5/8, 11/8], away from 1
  static const long kUp[] = {20, 21, 22};    // /32, above 1/2
  static const long kDown[] = {10, 11, 12};  // /32, below 1/2
  long q32 = parity > 0 ? kUp[rng.below(3)] : kDown[rng.below(3)];
  PLHomeo proto = PLHomeo::from_points({{Rational(0), Rational(0)},
                                        {make_rational(1, 2), make_rational(q32, 32)},
                                        {Rational(1), Rational(1)}});
  return affine_conjugate(proto, span);
}

std::vector<SigToken> random_signature_pattern(SplitMix64& rng, bool allow_intervals) {
  std::size_t orbital_count = 1 + rng.below(3);
  std::vector<SigToken> pattern;
  for (std::size_t i = 0; i <= orbital_count; ++i) {
    bool interval = allow_intervals && rng.below(4) == 0;
    pattern.push_back(interval ? SigToken::FixedInterval : SigToken::FixedPoint);
    if (i < orbital_count)
      pattern.push_back(rng.below(2) == 0 ? SigToken::PosOrbital : SigToken::NegOrbital);
  }
  return pattern;
}

PLHomeo random_from_signature(SplitMix64& rng, const std::vector<SigToken>& pattern) {
  require(!pattern.empty() && pattern.front() != SigToken::PosOrbital &&
              pattern.front() != SigToken::NegOrbital,
          ErrorKind::BadParameter, "pattern must start with a fixed block");
  // widths in integer units, then normalized
  std::vector<long> units(pattern.size());
  long total = 0;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    switch (pattern[i]) {
      case SigToken::FixedPoint: units[i] = 0; break;
      case SigToken::FixedInterval: units[i] = rng.range(1, 4); break;
      default: units[i] = rng.range(2, 9); break;
    }
    total += units[i];
  }
  require(total > 0, ErrorKind::BadParameter, "pattern has no width");

  std::vector<Breakpoint> pts;
  pts.push_back({Rational(0), Rational(0)});
  Rational cursor(0);
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (units[i] == 0) continue;
    Rational next = cursor + make_rational(units[i], total);
    if (pattern[i] == SigToken::PosOrbital || pattern[i] == SigToken::NegOrbital) {
      PLHomeo bump = random_bump(rng, Interval(cursor, next),
                                 pattern[i] == SigToken::PosOrbital ? +1 : -1);
      for (const auto& p : bump.points())
        if (p.x > cursor && p.x < next) pts.push_back(p);
    }
    // fixed intervals contribute identity; their endpoints arrive for free
    pts.push_back({next, next});
    cursor = next;
  }
  if (pts.back().x != 1) pts.push_back({Rational(1), Rational(1)});
  return PLHomeo::from_points(std::move(pts));
}

std::pair<PLHomeo, PLHomeo> random_matched_pair(SplitMix64& rng, bool allow_intervals) {
  std::vector<SigToken> pattern = random_signature_pattern(rng, allow_intervals);
  PLHomeo f = random_from_signature(rng, pattern);
  PLHomeo g = random_from_signature(rng, pattern);
  return {std::move(f), std::move(g)};
}

Rational random_rational(SplitMix64& rng, const Interval& iv, long denom) {
  long k = rng.range(1, denom - 1);
  return iv.lo + iv.length() * make_rational(k, denom);
}

std::pair<PLHomeo, PLHomeo> random_disjoint_fix_pair(SplitMix64& rng, std::size_t interior) {
  for (int attempt = 0; attempt < 1024; ++attempt) {
    PLHomeo f = random_endpoint_fixing(rng, interior);
    PLHomeo g = random_endpoint_fixing(rng, interior);
    FixedSet shared = intersect(fixed_set(f), fixed_set(g));
    bool interior_free = shared.intervals.empty();
    for (const auto& p : shared.points)
      if (p > 0 && p < 1) interior_free = false;
    if (interior_free) return {std::move(f), std::move(g)};
  }
  fail(ErrorKind::BadParameter, "could not sample a fixed-point-disjoint pair");
}

}  // namespace hac
