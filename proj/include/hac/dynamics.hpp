#ifndef HAC_DYNAMICS_HPP
#define HAC_DYNAMICS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hac/pl_map.hpp"

namespace hac {

/// Exact description of Fix(f) for a PL map: finitely many isolated points
/// and closed intervals, mutually disjoint and sorted.
struct FixedSet {
  std::vector<Rational> points;
  std::vector<Interval> intervals;

  bool contains(const Rational& x) const;
  bool empty() const { return points.empty() && intervals.empty(); }

  /// Total Lebesgue measure (sum of interval lengths).
  Rational measure() const;

  /// Smallest element >= x, if any.
  std::optional<Rational> min_element_at_least(const Rational& x) const;

  friend bool operator==(const FixedSet& a, const FixedSet& b) {
    return a.points == b.points && a.intervals == b.intervals;
  }
};

/// Intersection of two fixed sets (again a finite union of points/intervals).
FixedSet intersect(const FixedSet& a, const FixedSet& b);

struct Orbital {
  Interval span;
  int parity;  // +1 above the diagonal, -1 below

  friend bool operator==(const Orbital& a, const Orbital& b) {
    return a.span == b.span && a.parity == b.parity;
  }
};

/// Exact solution set of m(x) = x for any PL map (domain and codomain may
/// differ): per segment, an interval when the segment lies on the diagonal,
/// a point when it crosses it.
FixedSet diagonal_intersection(const PLMap& m);

/// Exact Fix(f) via per-segment linear solves. Requires domain == codomain.
FixedSet fixed_set(const PLHomeo& f);

/// Maximal components of the complement of Fix(f), left to right, with
/// parity = sign of f - id there.
std::vector<Orbital> orbitals(const PLHomeo& f);

/// Parity of the point x under f: +1, -1, or 0 when fixed.
int parity_at(const PLHomeo& f, const Rational& x);

struct BetweenReport {
  bool vacuous = false;     // q, r fixed or in the same orbital
  bool satisfied = false;   // vacuous, or both parities occur strictly between
  std::optional<Rational> positive_witness;
  std::optional<Rational> negative_witness;
};

/// Checks whether the orbitals strictly between the orbitals of q and r
/// contain at least one of each nonzero parity.
BetweenReport check_between(const PLHomeo& f, const Rational& q, const Rational& r);

struct GenericityReport {
  bool is_cantor = false;   // (i) Fix(f) perfect and totally disconnected
  bool mixing = false;      // (ii) both parities between any two nonzero orbitals
  bool null_fixed = false;  // (iii) Fix(f) has measure zero
  Rational fixed_measure;
  std::vector<std::string> witnesses;
};

/// Exact checkers for the three genericity properties on PL data. A PL fixed
/// set is a finite union of points and intervals, so (i) never holds for a
/// non-degenerate PL map; the report records why.
GenericityReport genericity_report(const PLHomeo& f);

struct PushStep {
  std::size_t generator;
  int direction;  // +1 forward, -1 inverse
};

struct PushOutcome {
  bool success = false;
  Rational reached;
  std::vector<PushStep> word;  // leftmost applied first
  std::size_t steps = 0;
  // on failure: smallest common fixed point >= reached, and the generators
  // fixing it (all of them, by definition of a common fixed point)
  std::optional<Rational> barrier;
  std::vector<std::size_t> barrier_fixers;
};

/// Greedy single-generator ascent from start until the point exceeds target:
/// each step applies the generator move (forward or inverse) maximizing the
/// image, ties broken by generator index then inverse-before-forward.
PushOutcome push_sup(std::span<const PLHomeo> generators, const Rational& start,
                     const Rational& target, std::size_t budget);

/// Replays a recorded push word exactly.
Rational replay_push_word(std::span<const PLHomeo> generators,
                          const std::vector<PushStep>& word, const Rational& start);

}  // namespace hac

#endif
