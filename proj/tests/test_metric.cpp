#include <doctest.h>

#include "hac/constructions.hpp"
#include "hac/metric.hpp"
#include "hac/sample.hpp"
#include "test_util.hpp"

using namespace hac;
using namespace hac::test;

namespace {

EvalOracle pl_oracle(const PLMap& m) {
  return [&m](const Rational& x) { return m.eval(x); };
}

// partition refining every breakpoint of both maps
Partition refining_partition(const PLMap& f, const PLMap& g, std::size_t cells = 8) {
  std::vector<Rational> extra;
  for (const auto& p : f.points()) extra.push_back(p.x);
  for (const auto& p : g.points()) extra.push_back(p.x);
  return Partition::uniform_with(f.domain(), cells, extra);
}

}  // namespace

TEST_CASE("rho_exact on the sawtooth family") {
  PLHomeo id = unit_identity();
  CHECK(rho_exact(id, id, Q("0"), Q("1")) == 0);
  CHECK(rho_exact(sawtooth(4), id) == 1);       // 2 - 4/4
  CHECK(rho_exact(sawtooth(2), id) == 0);       // degenerates to the identity
  CHECK(rho_exact(sawtooth(64), id) == Q("2") - Q("1/16"));
}

TEST_CASE("rho_upper_bound") {
  PLHomeo id = unit_identity();
  CHECK(rho_upper_bound(id, id, Q("0"), Q("1")) == 2);
  SplitMix64 rng(31);
  for (int i = 0; i < 200; ++i) {
    PLHomeo f = random_endpoint_fixing(rng);
    PLHomeo g = random_endpoint_fixing(rng);
    // endpoint-fixing pairs always give bound 2 on the whole interval
    CHECK(rho_upper_bound(f, g, Q("0"), Q("1")) == 2);
    CHECK(rho_exact(f, g) <= 2);
    Rational a = random_rational(rng, unit_interval());
    Rational b = random_rational(rng, unit_interval());
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    CHECK(rho_exact(f, g, a, b) <= rho_upper_bound(f, g, a, b));
  }
}

TEST_CASE("rho_sampled_lower equals rho_exact on refining partitions") {
  PLHomeo id = unit_identity();
  PLHomeo s4 = sawtooth(4);
  Partition p16 = Partition::uniform(unit_interval(), 16);
  CHECK(rho_sampled_lower(pl_oracle(id), pl_oracle(id), p16) == 0);
  // {i/16} hits every breakpoint of sawtooth(4)
  CHECK(rho_sampled_lower(pl_oracle(s4), pl_oracle(id), p16) == 1);

  SplitMix64 rng(37);
  for (int i = 0; i < 100; ++i) {
    PLHomeo f = random_endpoint_fixing(rng);
    PLHomeo g = random_endpoint_fixing(rng);
    Rational exact = rho_exact(f, g);
    CHECK(rho_sampled_lower(pl_oracle(f), pl_oracle(g), refining_partition(f, g)) == exact);
    Partition coarse = Partition::uniform(unit_interval(), 4);
    Partition finer = coarse.refine();
    Rational lo = rho_sampled_lower(pl_oracle(f), pl_oracle(g), coarse);
    Rational hi = rho_sampled_lower(pl_oracle(f), pl_oracle(g), finer);
    CHECK(lo <= hi);
    CHECK(hi <= exact);
  }
}

TEST_CASE("uniform_dist") {
  PLHomeo id = unit_identity();
  PLHomeo f = pl({{"0", "0"}, {"1/2", "3/4"}, {"1", "1"}});
  CHECK(uniform_dist(f, f) == 0);
  CHECK(uniform_dist(sawtooth(4), id) == Q("1/8"));

  SplitMix64 rng(41);
  for (int i = 0; i < 100; ++i) {
    PLHomeo a = random_endpoint_fixing(rng);
    PLHomeo b = random_endpoint_fixing(rng);
    CHECK(2 * uniform_dist(a, b) <= rho_exact(a, b));
  }
}

TEST_CASE("metric axioms hold exactly") {
  SplitMix64 rng(43);
  for (int i = 0; i < 100; ++i) {
    PLHomeo f = random_endpoint_fixing(rng);
    PLHomeo g = random_endpoint_fixing(rng);
    PLHomeo h = random_endpoint_fixing(rng);
    Rational fg = rho_exact(f, g);
    CHECK((fg == 0) == (f == g));
    CHECK(fg == rho_exact(g, f));
    CHECK(fg <= rho_exact(f, h) + rho_exact(h, g));
  }
}

TEST_CASE("additivity in the endpoint") {
  SplitMix64 rng(47);
  for (int i = 0; i < 100; ++i) {
    PLHomeo f = random_endpoint_fixing(rng);
    PLHomeo g = random_endpoint_fixing(rng);
    Rational mid = random_rational(rng, unit_interval());
    CHECK(rho_exact(f, g, Q("0"), Q("1")) ==
          rho_exact(f, g, Q("0"), mid) + rho_exact(f, g, mid, Q("1")));
  }
}

TEST_CASE("right-invariance") {
  SplitMix64 rng(53);
  for (int i = 0; i < 100; ++i) {
    PLHomeo f = random_endpoint_fixing(rng);
    PLHomeo g = random_endpoint_fixing(rng);
    PLHomeo h = random_endpoint_fixing(rng);
    CHECK(rho_exact(compose(f, h), compose(g, h)) == rho_exact(f, g));
  }
}

TEST_CASE("singular_mass") {
  PLHomeo id = unit_identity();
  CHECK(singular_mass(id, Q("1/64"), Q("2")) == 0);

  // all rise of the stage-k staircase sits on cells of slope (3/2)^k
  {
    long k = 11;  // (3/2)^11 > 64
    Rational mesh = rat_pow(Q("1/3"), static_cast<unsigned long>(k));
    CHECK(singular_mass(cantor_stair(k), mesh, Q("64")) == 1);
  }
  // threshold above the staircase slope: nothing is steep
  CHECK(singular_mass(cantor_stair(3), Q("1/27"), Q("4")) == 0);

  SplitMix64 rng(59);
  for (int i = 0; i < 50; ++i) {
    PLHomeo f = random_endpoint_fixing(rng);
    // any threshold above the maximal slope kills the mass
    CHECK(singular_mass(f, Q("1/64"), Q("2")) == 0);
  }
  CHECK_THROWS_AS(singular_mass(id, Q("2/7"), Q("2")), Error);  // mesh must tile evenly
}
