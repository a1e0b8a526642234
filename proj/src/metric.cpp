#include "hac/metric.hpp"

#include <algorithm>

namespace hac {

Partition::Partition(std::vector<Rational> points) : points_(std::move(points)) {
  require(points_.size() >= 2, ErrorKind::TooFewPoints, "partition needs >= 2 points");
  for (std::size_t i = 1; i < points_.size(); ++i)
    require(points_[i - 1] < points_[i], ErrorKind::NonMonotone,
            "partition points must be strictly increasing");
}

Partition Partition::uniform(const Interval& iv, std::size_t cells) {
  require(cells >= 1, ErrorKind::BadParameter, "need >= 1 cell");
  std::vector<Rational> pts;
  pts.reserve(cells + 1);
  Rational step = iv.length() / Rational(static_cast<long>(cells));
  for (std::size_t i = 0; i <= cells; ++i)
    pts.push_back(iv.lo + Rational(static_cast<long>(i)) * step);
  return Partition(std::move(pts));
}

Partition Partition::uniform_with(const Interval& iv, std::size_t cells,
                                  const std::vector<Rational>& extra) {
  Partition base = uniform(iv, cells);
  std::vector<Rational> pts = base.points_;
  for (const auto& x : extra)
    if (iv.contains(x)) pts.push_back(x);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return Partition(std::move(pts));
}

Partition Partition::refine() const {
  std::vector<Rational> pts;
  pts.reserve(points_.size() * 2 - 1);
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    pts.push_back(points_[i]);
    pts.push_back((points_[i] + points_[i + 1]) / 2);
  }
  pts.push_back(points_.back());
  return Partition(std::move(pts));
}

namespace {

// merged breakpoint x-coordinates of f and g inside [a, b], with a and b
std::vector<Rational> merged_cuts(const PLMap& f, const PLMap& g, const Rational& a,
                                  const Rational& b) {
  std::vector<Rational> xs;
  xs.push_back(a);
  for (const auto& p : f.points())
    if (p.x > a && p.x < b) xs.push_back(p.x);
  for (const auto& p : g.points())
    if (p.x > a && p.x < b) xs.push_back(p.x);
  xs.push_back(b);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

void check_span(const PLMap& f, const PLMap& g, const Rational& a, const Rational& b) {
  require(a < b, ErrorKind::BadParameter, "need a < b");
  require(f.domain().contains(Interval(a, b)) && g.domain().contains(Interval(a, b)),
          ErrorKind::DomainMismatch, "[a,b] must lie in both domains");
}

}  // namespace

Rational rho_exact(const PLMap& f, const PLMap& g, const Rational& a, const Rational& b) {
  check_span(f, g, a, b);
  std::vector<Rational> xs = merged_cuts(f, g, a, b);
  Rational total(0);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const Rational& lo = xs[i];
    const Rational& hi = xs[i + 1];
    // piecewise-constant derivative difference on (lo, hi)
    Rational df = (f.eval(hi) - f.eval(lo)) / (hi - lo);
    Rational dg = (g.eval(hi) - g.eval(lo)) / (hi - lo);
    total += rat_abs(df - dg) * (hi - lo);
  }
  return total;
}

Rational rho_exact(const PLMap& f, const PLMap& g) {
  require(f.domain() == g.domain(), ErrorKind::DomainMismatch, "domains must match");
  return rho_exact(f, g, f.domain_lo(), f.domain_hi());
}

Rational rho_upper_bound(const PLMap& f, const PLMap& g, const Rational& a, const Rational& b) {
  check_span(f, g, a, b);
  return f.eval(b) - f.eval(a) + g.eval(b) - g.eval(a);
}

Rational rho_sampled_lower(const EvalOracle& f, const EvalOracle& g, const Partition& partition) {
  const auto& ts = partition.points();
  Rational total(0);
  Rational prev = f(ts[0]) - g(ts[0]);
  for (std::size_t i = 1; i < ts.size(); ++i) {
    Rational cur = f(ts[i]) - g(ts[i]);
    total += rat_abs(cur - prev);
    prev = cur;
  }
  return total;
}

Rational uniform_dist(const PLMap& f, const PLMap& g) {
  require(f.domain() == g.domain(), ErrorKind::DomainMismatch, "domains must match");
  std::vector<Rational> xs = merged_cuts(f, g, f.domain_lo(), f.domain_hi());
  Rational best(0);
  for (const auto& x : xs) {
    Rational d = rat_abs(f.eval(x) - g.eval(x));
    if (d > best) best = d;
  }
  return best;
}

Rational singular_mass(const EvalOracle& h, const Interval& iv, const Rational& mesh,
                       const Rational& slope_threshold) {
  require(mesh > 0, ErrorKind::BadParameter, "mesh must be positive");
  Rational ratio = iv.length() / mesh;
  require(ratio.get_den() == 1, ErrorKind::BadParameter, "mesh must divide the interval evenly");
  require(ratio.get_num().fits_slong_p(), ErrorKind::BadParameter, "mesh produces too many cells");
  long cells = ratio.get_num().get_si();
  Rational cutoff = slope_threshold * mesh;
  Rational total(0);
  Rational x = iv.lo;
  Rational prev = h(x);
  for (long i = 1; i <= cells; ++i) {
    Rational next_x = (i == cells) ? iv.hi : iv.lo + Rational(i) * mesh;
    Rational cur = h(next_x);
    Rational rise = cur - prev;
    if (rise > cutoff) total += rise;
    prev = cur;
  }
  return total;
}

Rational singular_mass(const PLMap& h, const Rational& mesh, const Rational& slope_threshold) {
  return singular_mass([&h](const Rational& x) { return h.eval(x); }, h.domain(), mesh,
                       slope_threshold);
}

}  // namespace hac
