#include "hac/pl_map.hpp"

#include <algorithm>

namespace hac {

namespace {

// drops interior breakpoints lying on the segment through their neighbours
std::vector<Breakpoint> canonicalize(std::vector<Breakpoint> pts) {
  std::vector<Breakpoint> out;
  out.reserve(pts.size());
  for (auto& p : pts) {
    while (out.size() >= 2) {
      const Breakpoint& a = out[out.size() - 2];
      const Breakpoint& b = out.back();
      // collinear iff (b-a) and (p-b) have equal slope
      if ((b.y - a.y) * (p.x - b.x) == (p.y - b.y) * (b.x - a.x))
        out.pop_back();
      else
        break;
    }
    out.push_back(std::move(p));
  }
  return out;
}

void check_points(const std::vector<Breakpoint>& pts, bool strict_y) {
  require(pts.size() >= 2, ErrorKind::TooFewPoints, "need at least 2 breakpoints");
  for (std::size_t i = 1; i < pts.size(); ++i) {
    require(pts[i - 1].x < pts[i].x, ErrorKind::NonMonotone,
            "x coordinates must be strictly increasing");
    if (strict_y)
      require(pts[i - 1].y < pts[i].y, ErrorKind::NonMonotone,
              "y coordinates must be strictly increasing");
    else
      require(pts[i - 1].y <= pts[i].y, ErrorKind::NonMonotone,
              "y coordinates must be nondecreasing");
  }
}

}  // namespace

PLMap PLMap::from_points(std::vector<Breakpoint> points) {
  check_points(points, /*strict_y=*/false);
  return PLMap(canonicalize(std::move(points)));
}

std::size_t PLMap::segment_index(const Rational& x) const {
  require(x >= points_.front().x && x <= points_.back().x, ErrorKind::OutOfDomain,
          "x = " + to_fraction_string(x) + " outside domain");
  // last index i with points_[i].x <= x, clamped to a segment start
  std::size_t lo = 0, hi = points_.size() - 1;
  while (lo + 1 < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (points_[mid].x <= x)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

Rational PLMap::eval(const Rational& x) const {
  std::size_t i = segment_index(x);
  const Breakpoint& a = points_[i];
  const Breakpoint& b = points_[i + 1];
  if (x == a.x) return a.y;
  if (x == b.x) return b.y;
  return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

Rational PLMap::slope(std::size_t i) const {
  const Breakpoint& a = points_[i];
  const Breakpoint& b = points_[i + 1];
  return (b.y - a.y) / (b.x - a.x);
}

PLHomeo PLHomeo::from_points(std::vector<Breakpoint> points) {
  check_points(points, /*strict_y=*/true);
  return PLHomeo(canonicalize(std::move(points)));
}

PLHomeo PLHomeo::identity(const Interval& iv) {
  return PLHomeo({{iv.lo, iv.lo}, {iv.hi, iv.hi}});
}

bool PLHomeo::is_identity() const {
  return points_.size() == 2 && points_[0].x == points_[0].y && points_[1].x == points_[1].y;
}

Rational PLHomeo::eval_inverse(const Rational& y) const {
  require(y >= points_.front().y && y <= points_.back().y, ErrorKind::OutOfDomain,
          "y = " + to_fraction_string(y) + " outside codomain");
  std::size_t lo = 0, hi = points_.size() - 1;
  while (lo + 1 < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (points_[mid].y <= y)
      lo = mid;
    else
      hi = mid;
  }
  const Breakpoint& a = points_[lo];
  const Breakpoint& b = points_[lo + 1];
  if (y == a.y) return a.x;
  if (y == b.y) return b.x;
  return a.x + (b.x - a.x) * (y - a.y) / (b.y - a.y);
}

PLHomeo PLHomeo::inverse() const {
  std::vector<Breakpoint> swapped;
  swapped.reserve(points_.size());
  for (const auto& p : points_) swapped.push_back({p.y, p.x});
  return PLHomeo(std::move(swapped));  // collinearity is preserved by the swap
}

PLHomeo PLHomeo::restrict(const Rational& a, const Rational& b) const {
  require(a < b, ErrorKind::BadParameter, "restriction needs a < b");
  require(a >= domain_lo() && b <= domain_hi(), ErrorKind::OutOfDomain,
          "restriction outside domain");
  std::vector<Breakpoint> pts;
  pts.push_back({a, eval(a)});
  for (const auto& p : points_)
    if (p.x > a && p.x < b) pts.push_back(p);
  pts.push_back({b, eval(b)});
  return PLHomeo::from_points(std::move(pts));
}

PLHomeo compose(const PLHomeo& f, const PLHomeo& g) {
  require(g.codomain() == f.domain(), ErrorKind::DomainMismatch,
          "compose: g.codomain must equal f.domain");
  std::vector<Rational> xs;
  xs.reserve(f.breakpoint_count() + g.breakpoint_count());
  for (const auto& p : g.points()) xs.push_back(p.x);
  for (const auto& p : f.points()) xs.push_back(g.eval_inverse(p.x));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Breakpoint> pts;
  pts.reserve(xs.size());
  for (const auto& x : xs) pts.push_back({x, f.eval(g.eval(x))});
  return PLHomeo::from_points(std::move(pts));
}

PLHomeo power(const PLHomeo& f, long n, std::size_t breakpoint_budget) {
  require(f.domain() == f.codomain(), ErrorKind::DomainMismatch,
          "power needs domain == codomain");
  if (n == 0) return PLHomeo::identity(f.domain());
  PLHomeo base = n > 0 ? f : f.inverse();
  long k = n > 0 ? n : -n;
  PLHomeo acc = base;
  for (long i = 1; i < k; ++i) {
    acc = compose(acc, base);
    require(acc.breakpoint_count() <= breakpoint_budget, ErrorKind::BreakpointBudgetExceeded,
            "power(" + std::to_string(n) + ") exceeds breakpoint budget");
  }
  return acc;
}

PLHomeo affine_map(const Interval& from, const Interval& to) {
  return PLHomeo::from_points({{from.lo, to.lo}, {from.hi, to.hi}});
}

PLHomeo affine_conjugate(const PLHomeo& f, const Interval& target) {
  require(f.domain() == f.codomain(), ErrorKind::DomainMismatch,
          "affine_conjugate needs domain == codomain");
  const Interval src = f.domain();
  const Rational scale = target.length() / src.length();
  std::vector<Breakpoint> pts;
  pts.reserve(f.breakpoint_count());
  for (const auto& p : f.points())
    pts.push_back({target.lo + scale * (p.x - src.lo), target.lo + scale * (p.y - src.lo)});
  return PLHomeo::from_points(std::move(pts));
}

}  // namespace hac
