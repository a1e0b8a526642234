#ifndef HAC_TEST_UTIL_HPP
#define HAC_TEST_UTIL_HPP

#include <doctest.h>

#include "hac/json_io.hpp"
#include "hac/pl_map.hpp"
#include "hac/rational.hpp"
#include "hac/sample.hpp"

namespace hac::test {

inline Rational Q(const char* text) { return parse_rational(text); }

inline PLHomeo pl(std::initializer_list<std::pair<const char*, const char*>> pairs) {
  std::vector<Breakpoint> pts;
  for (const auto& [x, y] : pairs) pts.push_back({Q(x), Q(y)});
  return PLHomeo::from_points(std::move(pts));
}

inline PLHomeo unit_identity() { return PLHomeo::identity(unit_interval()); }

}  // namespace hac::test

// doctest stringification for rationals
namespace doctest {
template <>
struct StringMaker<mpq_class> {
  static String convert(const mpq_class& value) {
    return String(hac::to_fraction_string(value).c_str());
  }
};
}  // namespace doctest

#endif
