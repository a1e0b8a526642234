#ifndef HAC_INTERVAL_HPP
#define HAC_INTERVAL_HPP

#include "hac/error.hpp"
#include "hac/rational.hpp"

namespace hac {

/// Non-degenerate closed interval [lo, hi], lo < hi.
struct Interval {
  Rational lo;
  Rational hi;

  Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    require(lo < hi, ErrorKind::BadParameter,
            "degenerate interval [" + to_fraction_string(lo) + ", " +
                to_fraction_string(hi) + "]");
  }

  Rational length() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
  friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }
};

inline Interval unit_interval() { return Interval(Rational(0), Rational(1)); }

}  // namespace hac

#endif
