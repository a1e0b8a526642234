#ifndef HAC_PL_MAP_HPP
#define HAC_PL_MAP_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "hac/interval.hpp"
#include "hac/rational.hpp"

namespace hac {

struct Breakpoint {
  Rational x;
  Rational y;
  friend bool operator==(const Breakpoint& a, const Breakpoint& b) {
    return a.x == b.x && a.y == b.y;
  }
};

/// Piecewise-linear nondecreasing map given by breakpoints with strictly
/// increasing x coordinates. Canonical form merges collinear neighbours,
/// so structural equality decides functional equality.
class PLMap {
 public:
  /// >= 2 pairs, x strictly increasing, y nondecreasing.
  static PLMap from_points(std::vector<Breakpoint> points);

  const std::vector<Breakpoint>& points() const { return points_; }
  std::size_t breakpoint_count() const { return points_.size(); }

  Interval domain() const { return Interval(points_.front().x, points_.back().x); }
  Rational domain_lo() const { return points_.front().x; }
  Rational domain_hi() const { return points_.back().x; }
  Rational value_lo() const { return points_.front().y; }
  Rational value_hi() const { return points_.back().y; }

  /// Exact value of the interpolant; x must lie in the domain.
  Rational eval(const Rational& x) const;

  /// Slope on the open segment (points_[i].x, points_[i+1].x).
  Rational slope(std::size_t i) const;

  friend bool operator==(const PLMap& a, const PLMap& b) { return a.points_ == b.points_; }
  friend bool operator!=(const PLMap& a, const PLMap& b) { return !(a == b); }

 protected:
  PLMap() = default;
  explicit PLMap(std::vector<Breakpoint> canonical) : points_(std::move(canonical)) {}

  /// Index of the segment containing x (last segment for x == domain_hi).
  std::size_t segment_index(const Rational& x) const;

  std::vector<Breakpoint> points_;
};

/// Strictly increasing PL bijection between rational intervals: the dense
/// exact carrier used for everything group-theoretic.
class PLHomeo : public PLMap {
 public:
  /// >= 2 pairs, both coordinates strictly increasing.
  static PLHomeo from_points(std::vector<Breakpoint> points);

  static PLHomeo identity(const Interval& iv);

  Interval codomain() const { return Interval(points_.front().y, points_.back().y); }
  bool is_endomorphism() const { return value_lo() == domain_lo() && value_hi() == domain_hi(); }
  bool is_identity() const;

  /// Exact preimage; y must lie in the codomain.
  Rational eval_inverse(const Rational& y) const;

  PLHomeo inverse() const;

  /// Restriction to [a, b] subset of the domain, as a map [a,b] -> [f(a), f(b)].
  PLHomeo restrict(const Rational& a, const Rational& b) const;

 private:
  explicit PLHomeo(std::vector<Breakpoint> canonical) : PLMap(std::move(canonical)) {}
};

/// f o g. Requires g.codomain == f.domain. Breakpoint x-set is g's
/// breakpoints merged with g-preimages of f's breakpoints.
PLHomeo compose(const PLHomeo& f, const PLHomeo& g);

inline constexpr std::size_t kDefaultBreakpointBudget = 1000000;

/// n-fold composition (inverse powers for n < 0); power(f, 0) = identity.
/// Iterated composition can grow breakpoints geometrically, hence the cap.
PLHomeo power(const PLHomeo& f, long n, std::size_t breakpoint_budget = kDefaultBreakpointBudget);

/// A f A^{-1} where A is the increasing affine bijection f.domain -> target.
PLHomeo affine_conjugate(const PLHomeo& f, const Interval& target);

/// The increasing affine bijection between two intervals, as a PLHomeo.
PLHomeo affine_map(const Interval& from, const Interval& to);

}  // namespace hac

#endif
