#include "hac/constructions.hpp"

#include <algorithm>

#include "hac/dynamics.hpp"

namespace hac {

PLHomeo sawtooth(long n) {
  require(n >= 2, ErrorKind::BadParameter, "sawtooth needs n >= 2");
  Rational nn(n);
  Rational n2 = nn * nn;
  std::vector<Breakpoint> pts;
  pts.reserve(static_cast<std::size_t>(2 * n + 1));
  for (long i = 0; i < n; ++i) {
    Rational base = Rational(i) / nn;
    pts.push_back({base, base});
    pts.push_back({base + 1 / n2, Rational(i + 1) / nn - 1 / n2});
  }
  pts.push_back({Rational(1), Rational(1)});
  return PLHomeo::from_points(std::move(pts));
}

PLHomeo wobble(const Rational& a, const Rational& b) {
  require(a < b, ErrorKind::BadParameter, "wobble needs a < b");
  return PLHomeo::from_points({
      {a, a},
      {(3 * a + b) / 4, (2 * a + b) / 3},
      {(a + b) / 2, (3 * a + 2 * b) / 5},
      {(a + 3 * b) / 4, (a + 4 * b) / 5},
      {b, b},
  });
}

BlowUpResult blow_up(const BlowUpSpec& spec) {
  const PLHomeo& phi = spec.map;
  require(phi.is_endomorphism(), ErrorKind::DomainMismatch,
          "blow_up needs an endpoint-fixing map");
  const Rational lo = phi.domain_lo(), hi = phi.domain_hi();
  require(!spec.sites.empty(), ErrorKind::BadParameter, "blow_up needs at least one site");

  Rational prev_hi = lo - 1;
  for (const auto& s : spec.sites) {
    require(s.lo <= s.fixed_point && s.fixed_point <= s.hi, ErrorKind::BadParameter,
            "site must contain its fixed point");
    require(s.lo >= lo && s.hi <= hi, ErrorKind::BadParameter, "site outside the interval");
    require(phi.eval(s.fixed_point) == s.fixed_point, ErrorKind::NotAFixedPoint,
            to_fraction_string(s.fixed_point) + " is not fixed by the map");
    require(s.lo > prev_hi, ErrorKind::OverlappingSites, "sites must be disjoint and ordered");
    prev_hi = s.hi;
  }

  // anchors: gap boundaries lo, b_0, a_1, b_1, ..., hi; psi is the identity on
  // blocks and an affine post-scaling of phi on each gap
  std::vector<Breakpoint> pts;
  Rational bound(0);

  auto emit_gap = [&phi, &pts](const Rational& L, const Rational& R) {
    if (L >= R) return;
    Rational phiL = phi.eval(L), phiR = phi.eval(R);
    Rational scale = (R - L) / (phiR - phiL);
    pts.push_back({L, L});
    for (const auto& p : phi.points())
      if (p.x > L && p.x < R) pts.push_back({p.x, L + scale * (p.y - phiL)});
    pts.push_back({R, R});
  };

  Rational cursor = lo;
  for (const auto& s : spec.sites) {
    emit_gap(cursor, s.lo);
    pts.push_back({s.lo, s.lo});
    pts.push_back({s.hi, s.hi});
    cursor = s.hi;

    Rational phi_lo = phi.eval(s.lo), phi_hi = phi.eval(s.hi);
    bound += rat_abs(s.lo - phi_lo) + rat_abs(phi_hi - s.hi) + (s.hi - s.lo) + (phi_hi - phi_lo);
  }
  emit_gap(cursor, hi);

  // dedupe exact duplicates from degenerate blocks and touching anchors
  std::sort(pts.begin(), pts.end(),
            [](const Breakpoint& a, const Breakpoint& b) { return a.x < b.x; });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Breakpoint& a, const Breakpoint& b) { return a.x == b.x; }),
            pts.end());

  return {PLHomeo::from_points(std::move(pts)), std::move(bound)};
}

PLMap cantor_stair(long k) {
  require(k >= 0, ErrorKind::BadParameter, "cantor_stair needs k >= 0");
  // kept intervals at stage k, with staircase value j * 2^{-k} entering the
  // j-th one
  std::vector<std::pair<Rational, Rational>> kept = {{Rational(0), Rational(1)}};
  for (long stage = 0; stage < k; ++stage) {
    std::vector<std::pair<Rational, Rational>> next;
    next.reserve(kept.size() * 2);
    for (const auto& [l, r] : kept) {
      Rational third = (r - l) / 3;
      next.push_back({l, l + third});
      next.push_back({r - third, r});
    }
    kept = std::move(next);
  }
  Rational step = pow2(-k);
  std::vector<Breakpoint> pts;
  pts.reserve(kept.size() * 2);
  for (std::size_t j = 0; j < kept.size(); ++j) {
    pts.push_back({kept[j].first, Rational(static_cast<long>(j)) * step});
    pts.push_back({kept[j].second, Rational(static_cast<long>(j + 1)) * step});
  }
  return PLMap::from_points(std::move(pts));
}

PLHomeo mix(long k) {
  PLMap stair = cantor_stair(k);
  std::vector<Breakpoint> pts;
  pts.reserve(stair.breakpoint_count());
  for (const auto& p : stair.points()) pts.push_back({p.x, (p.y + p.x) / 2});
  return PLHomeo::from_points(std::move(pts));
}

Rational pick_alpha(const PLHomeo& f, const PLHomeo& g, const Rational& threshold) {
  require(threshold > 0, ErrorKind::BadParameter, "threshold must be positive");
  // exact crossing point: sup { x : max(f(x), g(x)) < threshold }
  Rational cross = std::min(f.value_hi() >= threshold ? f.eval_inverse(threshold) : f.domain_hi(),
                            g.value_hi() >= threshold ? g.eval_inverse(threshold) : g.domain_hi());
  require(cross > f.domain_lo(), ErrorKind::BadParameter,
          "no room below the threshold near the left endpoint");
  // largest dyadic strictly below the crossing, at the coarsest scale that
  // lands in (cross/2, cross)
  const Rational lo = f.domain_lo();
  Rational span = cross - lo;
  for (long j = 1; j <= 512; ++j) {
    Rational step = pow2(-j);
    // largest multiple of step strictly below cross
    Rational q = cross / step;
    Integer m = rat_floor(q);
    Rational candidate = Rational(m) * step;
    if (candidate == cross) candidate -= step;
    if (candidate > lo && candidate - lo > span / 2) return candidate;
  }
  fail(ErrorKind::BadParameter, "could not find a dyadic alpha below the threshold");
}

GeneratorPairSpec make_generator_pair_spec(const PLHomeo& f, const PLHomeo& g,
                                           const Rational& delta, std::size_t num_phis) {
  require(delta > 0, ErrorKind::BadParameter, "delta must be positive");
  require(num_phis >= 1, ErrorKind::BadParameter, "need at least one phi");
  require(f.domain() == unit_interval() && f.is_endomorphism() &&
              g.domain() == unit_interval() && g.is_endomorphism(),
          ErrorKind::DomainMismatch, "f and g must fix the endpoints of [0,1]");

  GeneratorPairSpec spec{f, g, delta, Rational(0), Rational(0), {}, std::nullopt};
  spec.alpha = pick_alpha(f, g, delta / 2);
  Rational y0 = std::min(spec.alpha, std::min(g.eval(spec.alpha), f.eval(spec.alpha))) / 2;
  spec.x0 = y0 / 2;

  // default phi family: opposite-parity 3-point bumps, conjugated onto the
  // base tile [g_tilde^{-1}(x0), x0]; with x0 = y0/2 the base tile is
  // [y0/4, y0/2] because g_tilde doubles below y0/3
  Interval base(y0 / 4, y0 / 2);
  PLHomeo bump_up = PLHomeo::from_points({{Rational(0), Rational(0)},
                                          {make_rational(1, 2), make_rational(3, 4)},
                                          {Rational(1), Rational(1)}});
  PLHomeo bump_down = PLHomeo::from_points({{Rational(0), Rational(0)},
                                            {make_rational(1, 2), make_rational(1, 4)},
                                            {Rational(1), Rational(1)}});
  for (std::size_t i = 0; i < num_phis; ++i)
    spec.phis.push_back(affine_conjugate(i % 2 == 0 ? bump_up : bump_down, base));
  return spec;
}

namespace {

// 3-point interpolant (x0,x0) -> (alpha, f(alpha)) staying strictly off the
// diagonal on (x0, alpha) (above when f(alpha) >= alpha, below otherwise),
// with the knot nudged off g_tilde's graph
PLHomeo default_interpolant(const Rational& x0, const Rational& alpha, const Rational& f_alpha,
                            const PLHomeo& g_tilde) {
  Rational mid = (x0 + alpha) / 2;
  Rational knot;
  if (f_alpha > alpha) {
    knot = (alpha + f_alpha) / 2;
    if (g_tilde.eval(mid) == knot) knot = (knot + f_alpha) / 2;
  } else if (f_alpha < alpha) {
    knot = (x0 + f_alpha) / 2;
    if (g_tilde.eval(mid) == knot) knot = (x0 + knot) / 2;
  } else {
    knot = mid + (alpha - x0) / 4;
    if (g_tilde.eval(mid) == knot) knot = (knot + alpha) / 2;
  }
  return PLHomeo::from_points({{x0, x0}, {mid, knot}, {alpha, f_alpha}});
}

}  // namespace

GeneratorPair generator_pair(const GeneratorPairSpec& spec) {
  const PLHomeo& f = spec.f;
  const PLHomeo& g = spec.g;
  require(f.domain() == unit_interval() && f.is_endomorphism() &&
              g.domain() == unit_interval() && g.is_endomorphism(),
          ErrorKind::DomainMismatch, "f and g must fix the endpoints of [0,1]");
  const Rational& alpha = spec.alpha;
  require(alpha > 0 && alpha < 1, ErrorKind::BadParameter, "alpha must be interior");
  Rational f_alpha = f.eval(alpha);
  Rational g_alpha = g.eval(alpha);
  require(2 * f_alpha < spec.delta && 2 * g_alpha < spec.delta, ErrorKind::BadParameter,
          "alpha too large: need f(alpha), g(alpha) < delta/2");
  Rational y0 = std::min(alpha, std::min(g_alpha, f_alpha)) / 2;
  require(spec.x0 > 0 && spec.x0 < y0, ErrorKind::BadParameter, "x0 must lie in (0, y0)");
  const Rational& x0 = spec.x0;

  // g_tilde: (0,0), (y0/3, 2y0/3), (y0, y0), (alpha, g(alpha)), then g
  std::vector<Breakpoint> gpts = {{Rational(0), Rational(0)},
                                  {y0 / 3, 2 * y0 / 3},
                                  {y0, y0},
                                  {alpha, g_alpha}};
  for (const auto& p : g.points())
    if (p.x > alpha) gpts.push_back(p);
  PLHomeo g_tilde = PLHomeo::from_points(std::move(gpts));

  Rational x1 = g_tilde.eval_inverse(x0);
  Interval base(x1, x0);
  require(!spec.phis.empty(), ErrorKind::BadParameter, "need at least one phi");
  for (const auto& phi : spec.phis)
    require(phi.domain() == base && phi.codomain() == base, ErrorKind::DomainMismatch,
            "phis must be endomorphisms of [g_tilde^{-1}(x0), x0]");

  PLHomeo interp = spec.interpolant ? *spec.interpolant
                                    : default_interpolant(x0, alpha, f_alpha, g_tilde);
  require(interp.domain() == Interval(x0, alpha) && interp.value_lo() == x0 &&
              interp.value_hi() == f_alpha,
          ErrorKind::DomainMismatch, "interpolant must map [x0, alpha] to [x0, f(alpha)]");

  // the interpolant may not share a fixed point with g_tilde on [x0, alpha]
  {
    FixedSet shared = intersect(diagonal_intersection(interp),
                                diagonal_intersection(g_tilde.restrict(x0, alpha)));
    require(shared.empty(), ErrorKind::SharedFixedPoint,
            "interpolant shares a fixed point with g_tilde on [x0, alpha]");
  }

  // f and g may not share fixed points on [alpha, 1) (they agree with
  // f_tilde and g_tilde there)
  {
    FixedSet shared = intersect(fixed_set(f), fixed_set(g));
    for (const auto& p : shared.points)
      require(p < alpha || p == 1, ErrorKind::SharedFixedPoint,
              "f and g share the interior fixed point " + to_fraction_string(p));
    for (const auto& iv : shared.intervals)
      require(iv.hi < alpha || iv.lo >= 1, ErrorKind::SharedFixedPoint,
              "f and g share fixed intervals in (0,1)");
  }

  PLHomeo f_upper = f.restrict(alpha, Rational(1));
  LazyHomeo f_tilde = LazyHomeo::piecewise({
      LazyHomeo::tiled(g_tilde, spec.phis, x0),
      LazyHomeo::atom(interp),
      LazyHomeo::atom(f_upper),
  });

  return GeneratorPair{std::move(f_tilde),
                       std::move(g_tilde),
                       std::move(interp),
                       std::move(f_upper),
                       spec.phis,
                       alpha,
                       y0,
                       x0,
                       spec.delta,
                       2 * g_alpha,
                       2 * f_alpha};
}

Rational GeneratorPair::x(std::size_t n) const {
  Rational v = x0;
  for (std::size_t i = 0; i < n; ++i) v = g_tilde.eval_inverse(v);
  return v;
}

namespace {

void require_no_shared_inside(const FixedSet& shared, const std::string& where) {
  for (const auto& p : shared.points)
    require(p <= 0 || p >= 1, ErrorKind::SharedFixedPoint,
            "f_tilde and g_tilde share the fixed point " + to_fraction_string(p) + " " + where);
  for (const auto& iv : shared.intervals)
    require(iv.hi <= 0 || iv.lo >= 1, ErrorKind::SharedFixedPoint,
            "f_tilde and g_tilde share fixed intervals " + where);
}

}  // namespace

void verify_no_shared_fixed_points(const GeneratorPair& pair, std::size_t depth) {
  // PL part [x0, 1]: f_tilde there is the interpolant followed by f|[alpha,1]
  std::vector<Breakpoint> upper_pts = pair.interpolant.points();
  for (const auto& p : pair.f_upper.points())
    if (p.x > pair.alpha) upper_pts.push_back(p);
  PLHomeo upper = PLHomeo::from_points(std::move(upper_pts));
  require_no_shared_inside(
      intersect(fixed_set(upper), diagonal_intersection(pair.g_tilde.restrict(pair.x0, 1))),
      "on [x0, 1]");

  // tiles [x_{m+1}, x_m] for m <= depth: the conjugated tile maps are PL, so
  // the check stays exact
  Rational xm = pair.x0;
  for (std::size_t m = 0; m <= depth; ++m) {
    Rational xm1 = pair.g_tilde.eval_inverse(xm);
    PLHomeo chain = PLHomeo::identity(Interval(xm1, xm));
    for (std::size_t j = 0; j < m; ++j)
      chain = compose(pair.g_tilde.restrict(chain.codomain().lo, chain.codomain().hi), chain);
    const PLHomeo& phi = pair.phis[m % pair.phis.size()];
    PLHomeo tile_map = compose(chain.inverse(), compose(phi, chain));
    require_no_shared_inside(
        intersect(fixed_set(tile_map),
                  diagonal_intersection(pair.g_tilde.restrict(xm1, xm))),
        "on tile " + std::to_string(m));
    xm = xm1;
  }
}

}  // namespace hac
