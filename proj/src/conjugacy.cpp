#include "hac/conjugacy.hpp"

#include <algorithm>

namespace hac {

namespace {

// sorted fixed structure as (lo, hi, is_interval) blocks
struct Block {
  Rational lo, hi;
  bool is_interval;
};

std::vector<Block> blocks_of(const FixedSet& fs) {
  std::vector<Block> blocks;
  for (const auto& p : fs.points) blocks.push_back({p, p, false});
  for (const auto& iv : fs.intervals) blocks.push_back({iv.lo, iv.hi, true});
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.lo < b.lo; });
  return blocks;
}

}  // namespace

std::string OrbitalSignature::to_string() const {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ",";
    switch (t) {
      case SigToken::FixedPoint: out += "pt"; break;
      case SigToken::FixedInterval: out += "iv"; break;
      case SigToken::PosOrbital: out += "+1"; break;
      case SigToken::NegOrbital: out += "-1"; break;
    }
  }
  return out;
}

OrbitalSignature orbital_signature(const PLHomeo& f) {
  require(f.is_endomorphism(), ErrorKind::DomainMismatch,
          "orbital_signature needs an endpoint-fixing map");
  OrbitalSignature sig;
  std::vector<Block> blocks = blocks_of(fixed_set(f));
  Rational cursor = f.domain_lo();
  bool first = true;
  for (const auto& b : blocks) {
    if (!first || b.lo > cursor) {
      // an orbital sits between the previous block and this one
      Rational mid = (cursor + b.lo) / 2;
      sig.tokens.push_back(f.eval(mid) > mid ? SigToken::PosOrbital : SigToken::NegOrbital);
    }
    sig.tokens.push_back(b.is_interval ? SigToken::FixedInterval : SigToken::FixedPoint);
    cursor = b.hi;
    first = false;
  }
  // endpoint-fixing maps always end on a fixed block, so no trailing orbital
  return sig;
}

LazyHomeo bump_conjugator(const PLHomeo& f, const PLHomeo& g, const Rational& x0,
                          const Rational& y0, const PLHomeo& h0) {
  require(f.is_endomorphism() && g.is_endomorphism(), ErrorKind::DomainMismatch,
          "bump_conjugator needs endpoint-fixing maps");
  FixedSet ff = fixed_set(f), gf = fixed_set(g);
  require(ff.intervals.empty() && ff.points.size() == 2, ErrorKind::HasInteriorFixedPoint,
          "f must fix exactly its endpoints");
  require(gf.intervals.empty() && gf.points.size() == 2, ErrorKind::HasInteriorFixedPoint,
          "g must fix exactly its endpoints");
  require(f.domain().lo < x0 && x0 < f.domain().hi, ErrorKind::BadParameter,
          "x0 must be interior");
  require(g.domain().lo < y0 && y0 < g.domain().hi, ErrorKind::BadParameter,
          "y0 must be interior");
  int pf = f.eval(x0) > x0 ? +1 : -1;
  int pg = g.eval(y0) > y0 ? +1 : -1;
  require(pf == pg, ErrorKind::ParityMismatch, "f and g must have equal parity");
  return LazyHomeo::orbit_extension(f, g, h0, x0, y0);
}

LazyHomeo bump_conjugator(const PLHomeo& f, const PLHomeo& g) {
  Rational x0 = (f.domain_lo() + f.domain_hi()) / 2;
  Rational y0 = (g.domain_lo() + g.domain_hi()) / 2;
  Rational fx0 = f.eval(x0), gy0 = g.eval(y0);
  Interval fd = fx0 > x0 ? Interval(x0, fx0) : Interval(fx0, x0);
  Interval gd = gy0 > y0 ? Interval(y0, gy0) : Interval(gy0, y0);
  return bump_conjugator(f, g, x0, y0, affine_map(fd, gd));
}

LazyHomeo global_conjugator(const PLHomeo& f, const PLHomeo& g) {
  require(orbital_signature(f) == orbital_signature(g), ErrorKind::OrbitalMismatch,
          "orbital signatures differ");

  std::vector<Block> fb = blocks_of(fixed_set(f));
  std::vector<Block> gb = blocks_of(fixed_set(g));

  std::vector<LazyHomeo> pieces;
  auto add_orbital_piece = [&pieces, &f, &g](const Rational& fa, const Rational& fbnd,
                                             const Rational& ga, const Rational& gbnd) {
    PLHomeo fr = f.restrict(fa, fbnd);
    PLHomeo gr = g.restrict(ga, gbnd);
    Rational x0 = (fa + fbnd) / 2;
    Rational y0 = (ga + gbnd) / 2;
    Rational fx0 = fr.eval(x0), gy0 = gr.eval(y0);
    Interval fd = fx0 > x0 ? Interval(x0, fx0) : Interval(fx0, x0);
    Interval gd = gy0 > y0 ? Interval(y0, gy0) : Interval(gy0, y0);
    pieces.push_back(LazyHomeo::orbit_extension(fr, gr, affine_map(fd, gd), x0, y0));
  };

  Rational fcursor = f.domain_lo(), gcursor = g.domain_lo();
  bool first = true;
  for (std::size_t i = 0; i < fb.size(); ++i) {
    if (!first || fb[i].lo > fcursor)
      add_orbital_piece(fcursor, fb[i].lo, gcursor, gb[i].lo);
    if (fb[i].is_interval)
      pieces.push_back(LazyHomeo::atom(
          affine_map(Interval(fb[i].lo, fb[i].hi), Interval(gb[i].lo, gb[i].hi))));
    fcursor = fb[i].hi;
    gcursor = gb[i].hi;
    first = false;
  }
  return LazyHomeo::piecewise(std::move(pieces));
}

}  // namespace hac
