#ifndef HAC_METRIC_HPP
#define HAC_METRIC_HPP

#include <functional>
#include <vector>

#include "hac/pl_map.hpp"

namespace hac {

/// Evaluation oracle: exact rational values of an increasing map. Must throw
/// Error{OracleEvaluationFailure} or Error{IterationCapExceeded} on failure.
using EvalOracle = std::function<Rational(const Rational&)>;

/// Sorted sample points covering [a, b], both ends included.
class Partition {
 public:
  explicit Partition(std::vector<Rational> points);

  /// a + i (b-a)/cells for i = 0..cells.
  static Partition uniform(const Interval& iv, std::size_t cells);

  /// Uniform partition merged with extra points (clipped to the interval).
  static Partition uniform_with(const Interval& iv, std::size_t cells,
                                const std::vector<Rational>& extra);

  const std::vector<Rational>& points() const { return points_; }
  Interval span() const { return Interval(points_.front(), points_.back()); }

  /// Inserts midpoints of every cell.
  Partition refine() const;

 private:
  std::vector<Rational> points_;
};

inline constexpr std::size_t kDefaultPartitionCells = 4096;  // 2^12

/// Exact rho_a^b(f, g) = integral of |f' - g'|: the integrand is piecewise
/// constant on the common breakpoint refinement, so the integral is a finite
/// sum. Requires [a, b] inside both domains.
Rational rho_exact(const PLMap& f, const PLMap& g, const Rational& a, const Rational& b);

/// Whole-domain rho for maps on equal domains.
Rational rho_exact(const PLMap& f, const PLMap& g);

/// f(b) - f(a) + g(b) - g(a); always >= rho_exact for increasing f, g.
Rational rho_upper_bound(const PLMap& f, const PLMap& g, const Rational& a, const Rational& b);

/// Sampled total variation of f - g over the partition: a certified lower
/// bound for rho on absolutely continuous maps, nondecreasing under
/// refinement, and equal to rho_exact once the partition refines all
/// breakpoints of two PL maps.
Rational rho_sampled_lower(const EvalOracle& f, const EvalOracle& g, const Partition& partition);

/// max |f - g| over the merged breakpoints (exact: f - g is PL).
Rational uniform_dist(const PLMap& f, const PLMap& g);

/// Rise of h captured by mesh cells steeper than the threshold:
/// sum of h(x_{i+1}) - h(x_i) over cells where the difference exceeds
/// slope_threshold * mesh. A heuristic witness for singular mass: 0 for any
/// PL map once the threshold clears its maximal slope, but bounded away from
/// 0 along singular-limit families. Not a decision procedure for absolute
/// continuity.
Rational singular_mass(const EvalOracle& h, const Interval& iv, const Rational& mesh,
                       const Rational& slope_threshold);

Rational singular_mass(const PLMap& h, const Rational& mesh, const Rational& slope_threshold);

}  // namespace hac

#endif
