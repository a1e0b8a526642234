#include "hac/lazy_homeo.hpp"

#include <algorithm>

#include "hac/dynamics.hpp"

namespace hac {

namespace {

using Node = LazyHomeo::Node;
using NodePtr = LazyHomeo::NodePtr;
using Kind = LazyHomeo::Kind;

struct EvalContext {
  std::size_t cap;
  std::size_t count = 0;

  void tick(std::size_t n = 1) {
    count += n;
    require(count <= cap, ErrorKind::IterationCapExceeded,
            "evaluation exceeded the iteration cap of " + std::to_string(cap));
  }
};

Rational eval_node(const Node& node, Rational x, EvalContext& ctx);
Rational eval_node_inverse(const Node& node, Rational y, EvalContext& ctx);

// index m and pulled-back value z = scaler^m(x) in [x_1, x_0] for the tile
// [x_{m+1}, x_m] containing x; boundaries themselves take the lower tile.
Rational eval_tiled(const Node& node, const Rational& x, EvalContext& ctx, bool inverse_phi) {
  const PLHomeo& scaler = node.pl[0];
  const Rational& x0 = *node.x0;
  if (x == node.domain.lo || x == x0) return x;  // the base point and tile boundaries are fixed

  Rational upper = x0;
  std::size_t m = 0;
  Rational lower;
  for (;;) {
    ctx.tick();
    lower = scaler.eval_inverse(upper);
    if (x >= lower) break;
    upper = lower;
    ++m;
  }
  // x in [lower, upper] = [x_{m+1}, x_m]; conjugate into the base tile
  Rational z = x;
  for (std::size_t i = 0; i < m; ++i) {
    ctx.tick();
    z = scaler.eval(z);
  }
  const PLHomeo& phi = node.pl[1 + m % (node.pl.size() - 1)];
  ctx.tick();
  z = inverse_phi ? phi.eval_inverse(z) : phi.eval(z);
  for (std::size_t i = 0; i < m; ++i) {
    ctx.tick();
    z = scaler.eval_inverse(z);
  }
  return z;
}

// h(x) = g^n(h0(f^{-n}(x))) with f^{-n}(x) in the fundamental domain.
Rational eval_orbit_ext(const PLHomeo& f, const PLHomeo& g, const PLHomeo& h0,
                        const Rational& x0, int parity, const Rational& x, EvalContext& ctx) {
  const Rational a = f.domain_lo(), b = f.domain_hi();
  if (x == a) return g.domain_lo();
  if (x == b) return g.domain_hi();

  const Rational fx0 = h0.domain().lo == x0 ? h0.domain().hi : h0.domain().lo;
  long n = 0;
  Rational z = x;
  if (parity > 0) {
    // fundamental domain [x0, f(x0))
    while (z >= fx0) {
      ctx.tick();
      z = f.eval_inverse(z);
      ++n;
    }
    while (z < x0) {
      ctx.tick();
      z = f.eval(z);
      --n;
    }
  } else {
    // fundamental domain [f(x0), x0)
    while (z >= x0) {
      ctx.tick();
      z = f.eval(z);
      --n;
    }
    while (z < fx0) {
      ctx.tick();
      z = f.eval_inverse(z);
      ++n;
    }
  }
  ctx.tick();
  Rational y = h0.eval(z);
  for (long i = 0; i < (n >= 0 ? n : -n); ++i) {
    ctx.tick();
    y = n >= 0 ? g.eval(y) : g.eval_inverse(y);
  }
  return y;
}

Rational eval_node(const Node& node, Rational x, EvalContext& ctx) {
  require(node.domain.contains(x), ErrorKind::OutOfDomain,
          "x = " + to_fraction_string(x) + " outside domain");
  switch (node.kind) {
    case Kind::Atom:
      ctx.tick();
      return node.atom->eval(x);
    case Kind::Compose:
      return eval_node(*node.children[0], eval_node(*node.children[1], std::move(x), ctx), ctx);
    case Kind::Inverse:
      return eval_node_inverse(*node.children[0], std::move(x), ctx);
    case Kind::Power: {
      long k = node.exponent >= 0 ? node.exponent : -node.exponent;
      for (long i = 0; i < k; ++i)
        x = node.exponent >= 0 ? eval_node(*node.children[0], std::move(x), ctx)
                               : eval_node_inverse(*node.children[0], std::move(x), ctx);
      return x;
    }
    case Kind::Piecewise: {
      for (const auto& piece : node.children)
        if (piece->domain.contains(x)) return eval_node(*piece, std::move(x), ctx);
      fail(ErrorKind::OutOfDomain, "no piece contains x");
    }
    case Kind::Tiled:
      return eval_tiled(node, x, ctx, /*inverse_phi=*/false);
    case Kind::OrbitExt:
      return eval_orbit_ext(node.pl[0], node.pl[1], node.pl[2], *node.x0, node.parity, x, ctx);
  }
  fail(ErrorKind::OracleEvaluationFailure, "corrupt node");
}

Rational eval_node_inverse(const Node& node, Rational y, EvalContext& ctx) {
  require(node.codomain.contains(y), ErrorKind::OutOfDomain,
          "y = " + to_fraction_string(y) + " outside codomain");
  switch (node.kind) {
    case Kind::Atom:
      ctx.tick();
      return node.atom->eval_inverse(y);
    case Kind::Compose:
      return eval_node_inverse(*node.children[1],
                               eval_node_inverse(*node.children[0], std::move(y), ctx), ctx);
    case Kind::Inverse:
      return eval_node(*node.children[0], std::move(y), ctx);
    case Kind::Power: {
      long k = node.exponent >= 0 ? node.exponent : -node.exponent;
      for (long i = 0; i < k; ++i)
        y = node.exponent >= 0 ? eval_node_inverse(*node.children[0], std::move(y), ctx)
                               : eval_node(*node.children[0], std::move(y), ctx);
      return y;
    }
    case Kind::Piecewise: {
      for (const auto& piece : node.children)
        if (piece->codomain.contains(y)) return eval_node_inverse(*piece, std::move(y), ctx);
      fail(ErrorKind::OutOfDomain, "no piece codomain contains y");
    }
    case Kind::Tiled:
      // tiles map to themselves, so the tile of y is the tile of its preimage
      return eval_tiled(node, y, ctx, /*inverse_phi=*/true);
    case Kind::OrbitExt:
      // h^{-1} is the orbit extension with the roles of f and g swapped
      return eval_orbit_ext(node.pl[1], node.pl[0], node.pl[2].inverse(), *node.y0, node.parity,
                            y, ctx);
  }
  fail(ErrorKind::OracleEvaluationFailure, "corrupt node");
}

}  // namespace

LazyHomeo LazyHomeo::atom(PLHomeo f) {
  auto node = std::make_shared<Node>(Kind::Atom, f.domain(), f.codomain());
  node->atom = std::move(f);
  return LazyHomeo(std::move(node));
}

LazyHomeo LazyHomeo::compose(const LazyHomeo& f, const LazyHomeo& g) {
  require(g.codomain() == f.domain(), ErrorKind::DomainMismatch,
          "compose: inner codomain must equal outer domain");
  auto node = std::make_shared<Node>(Kind::Compose, g.domain(), f.codomain());
  node->children = {f.root_, g.root_};
  return LazyHomeo(std::move(node));
}

LazyHomeo LazyHomeo::inverse(const LazyHomeo& h) {
  auto node = std::make_shared<Node>(Kind::Inverse, h.codomain(), h.domain());
  node->children = {h.root_};
  return LazyHomeo(std::move(node));
}

LazyHomeo LazyHomeo::power(const LazyHomeo& h, long n) {
  require(h.is_endomorphism(), ErrorKind::DomainMismatch, "power needs an endomorphism");
  auto node = std::make_shared<Node>(Kind::Power, h.domain(), h.domain());
  node->children = {h.root_};
  node->exponent = n;
  return LazyHomeo(std::move(node));
}

LazyHomeo LazyHomeo::piecewise(std::vector<LazyHomeo> pieces) {
  require(!pieces.empty(), ErrorKind::BadParameter, "piecewise needs pieces");
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    require(pieces[i - 1].domain().hi == pieces[i].domain().lo &&
                pieces[i - 1].codomain().hi == pieces[i].codomain().lo,
            ErrorKind::DomainMismatch, "piecewise pieces must be contiguous");
  }
  Interval dom(pieces.front().domain().lo, pieces.back().domain().hi);
  Interval cod(pieces.front().codomain().lo, pieces.back().codomain().hi);
  auto node = std::make_shared<Node>(Kind::Piecewise, std::move(dom), std::move(cod));
  for (auto& p : pieces) node->children.push_back(p.root_);
  return LazyHomeo(std::move(node));
}

LazyHomeo LazyHomeo::tiled(PLHomeo scaler, std::vector<PLHomeo> phis, const Rational& x0) {
  require(!phis.empty(), ErrorKind::BadParameter, "tiled needs at least one phi");
  require(scaler.is_endomorphism(), ErrorKind::DomainMismatch,
          "tiled scaler must be an endomorphism");
  const Rational lo = scaler.domain_lo();
  require(scaler.domain().contains(x0) && x0 > lo, ErrorKind::BadParameter,
          "x0 must lie in the scaler's interval, above its left endpoint");
  // scaler must move (lo, x0) strictly upward so the tiles shrink to lo
  FixedSet fs = fixed_set(scaler);
  for (const auto& p : fs.points)
    require(p <= lo || p >= x0, ErrorKind::BadParameter,
            "scaler has a fixed point inside (lo, x0)");
  for (const auto& iv : fs.intervals)
    require(iv.hi <= lo || iv.lo >= x0, ErrorKind::BadParameter,
            "scaler has fixed points inside (lo, x0)");
  Rational x1 = scaler.eval_inverse(x0);
  require(x1 < x0, ErrorKind::BadParameter, "scaler must satisfy scaler(x) > x below x0");
  Interval base(x1, x0);
  for (const auto& phi : phis)
    require(phi.domain() == base && phi.codomain() == base, ErrorKind::DomainMismatch,
            "each phi must be an endomorphism of [scaler^{-1}(x0), x0]");
  Interval span(lo, x0);
  auto node = std::make_shared<Node>(Kind::Tiled, span, span);
  node->pl.push_back(std::move(scaler));
  for (auto& phi : phis) node->pl.push_back(std::move(phi));
  node->x0 = x0;
  return LazyHomeo(std::move(node));
}

LazyHomeo LazyHomeo::orbit_extension(PLHomeo f, PLHomeo g, PLHomeo h0, const Rational& x0,
                                     const Rational& y0) {
  require(f.is_endomorphism() && g.is_endomorphism(), ErrorKind::DomainMismatch,
          "orbit_extension needs endpoint-fixing bumps");
  require(f.domain().lo < x0 && x0 < f.domain().hi, ErrorKind::BadParameter,
          "x0 must be interior to f's interval");
  require(g.domain().lo < y0 && y0 < g.domain().hi, ErrorKind::BadParameter,
          "y0 must be interior to g's interval");
  Rational fx0 = f.eval(x0);
  Rational gy0 = g.eval(y0);
  require(fx0 != x0 && gy0 != y0, ErrorKind::BadParameter,
          "x0 and y0 must not be fixed points");
  int parity = fx0 > x0 ? +1 : -1;
  int gparity = gy0 > y0 ? +1 : -1;
  require(parity == gparity, ErrorKind::ParityMismatch,
          "f and g must move their base points to the same side");
  Interval fd = parity > 0 ? Interval(x0, fx0) : Interval(fx0, x0);
  Interval gd = parity > 0 ? Interval(y0, gy0) : Interval(gy0, y0);
  require(h0.domain() == fd && h0.codomain() == gd, ErrorKind::DomainMismatch,
          "h0 must map the fundamental domain of (f, x0) onto that of (g, y0)");
  auto node = std::make_shared<Node>(Kind::OrbitExt, f.domain(), g.domain());
  node->pl = {std::move(f), std::move(g), std::move(h0)};
  node->x0 = x0;
  node->y0 = y0;
  node->parity = parity;
  return LazyHomeo(std::move(node));
}

Rational lazy_eval(const LazyHomeo& h, const Rational& x, std::size_t iteration_cap,
                   EvalStats* stats) {
  EvalContext ctx{iteration_cap};
  Rational result = eval_node(*h.root(), x, ctx);
  if (stats) stats->pl_applications = ctx.count;
  return result;
}

Rational lazy_eval_inverse(const LazyHomeo& h, const Rational& y, std::size_t iteration_cap,
                           EvalStats* stats) {
  EvalContext ctx{iteration_cap};
  Rational result = eval_node_inverse(*h.root(), y, ctx);
  if (stats) stats->pl_applications = ctx.count;
  return result;
}

EvalOracle lazy_oracle(const LazyHomeo& h, std::size_t iteration_cap) {
  return [h, iteration_cap](const Rational& x) { return lazy_eval(h, x, iteration_cap); };
}

}  // namespace hac
