#include <doctest.h>

#include "hac/constructions.hpp"
#include "hac/dynamics.hpp"
#include "hac/sample.hpp"
#include "test_util.hpp"

using namespace hac;
using namespace hac::test;

TEST_CASE("fixed_set") {
  FixedSet id_fix = fixed_set(unit_identity());
  CHECK(id_fix.points.empty());
  REQUIRE(id_fix.intervals.size() == 1);
  CHECK(id_fix.intervals[0] == unit_interval());

  FixedSet saw = fixed_set(sawtooth(4));
  CHECK(saw.intervals.empty());
  CHECK(saw.points == std::vector<Rational>{Q("0"), Q("1/4"), Q("1/2"), Q("3/4"), Q("1")});

  // the two interior diagonal crossings of the wobble, solved by hand
  FixedSet wob = fixed_set(wobble(Q("0"), Q("1")));
  CHECK(wob.intervals.empty());
  CHECK(wob.points == std::vector<Rational>{Q("0"), Q("4/11"), Q("2/3"), Q("1")});

  // maps with a flat-on-diagonal stretch
  PLHomeo partial = pl({{"0", "0"}, {"1/4", "1/8"}, {"1/2", "1/2"}, {"3/4", "3/4"}, {"1", "1"}});
  FixedSet pf = fixed_set(partial);
  CHECK(pf.points == std::vector<Rational>{Q("0")});
  REQUIRE(pf.intervals.size() == 1);
  CHECK(pf.intervals[0] == Interval(Q("1/2"), Q("1")));
}

TEST_CASE("fixed_set symmetry and conjugation covariance") {
  SplitMix64 rng(61);
  for (int i = 0; i < 50; ++i) {
    PLHomeo f = random_endpoint_fixing(rng);
    CHECK(fixed_set(f) == fixed_set(f.inverse()));

    PLHomeo h = random_endpoint_fixing(rng);
    PLHomeo conj = compose(h, compose(f, h.inverse()));
    FixedSet fs = fixed_set(f);
    FixedSet expected;
    for (const auto& p : fs.points) expected.points.push_back(h.eval(p));
    for (const auto& iv : fs.intervals)
      expected.intervals.emplace_back(h.eval(iv.lo), h.eval(iv.hi));
    CHECK(fixed_set(conj) == expected);
  }
}

TEST_CASE("orbitals") {
  CHECK(orbitals(unit_identity()).empty());

  std::vector<Orbital> wob = orbitals(wobble(Q("0"), Q("1")));
  REQUIRE(wob.size() == 3);
  CHECK(wob[0] == Orbital{Interval(Q("0"), Q("4/11")), +1});
  CHECK(wob[1] == Orbital{Interval(Q("4/11"), Q("2/3")), -1});
  CHECK(wob[2] == Orbital{Interval(Q("2/3"), Q("1")), +1});

  // parity is constant across each orbital
  SplitMix64 rng(67);
  for (int i = 0; i < 20; ++i) {
    PLHomeo f = random_endpoint_fixing(rng, 6);
    for (const auto& orb : orbitals(f)) {
      for (int k = 0; k < 10; ++k) {
        Rational x = random_rational(rng, orb.span);
        CHECK(parity_at(f, x) == orb.parity);
      }
    }
  }
}

TEST_CASE("orbital parities are conjugation-invariant") {
  SplitMix64 rng(71);
  for (int i = 0; i < 30; ++i) {
    PLHomeo f = random_endpoint_fixing(rng);
    PLHomeo h = random_endpoint_fixing(rng);
    PLHomeo conj = compose(h, compose(f, h.inverse()));
    auto orig = orbitals(f);
    auto moved = orbitals(conj);
    REQUIRE(orig.size() == moved.size());
    for (std::size_t k = 0; k < orig.size(); ++k) {
      CHECK(moved[k].parity == orig[k].parity);
      CHECK(moved[k].span == Interval(h.eval(orig[k].span.lo), h.eval(orig[k].span.hi)));
    }
  }
}

TEST_CASE("check_between") {
  PLHomeo w = wobble(Q("0"), Q("1"));
  BetweenReport vac = check_between(unit_identity(), Q("1/3"), Q("2/3"));
  CHECK(vac.vacuous);
  CHECK(vac.satisfied);

  // only the negative orbital (4/11, 2/3) separates these two
  BetweenReport r = check_between(w, Q("1/5"), Q("5/6"));
  CHECK_FALSE(r.vacuous);
  CHECK_FALSE(r.satisfied);
  CHECK(r.negative_witness.has_value());
  CHECK_FALSE(r.positive_witness.has_value());

  // same orbital: vacuous
  BetweenReport same = check_between(w, Q("1/10"), Q("1/5"));
  CHECK(same.vacuous);
  CHECK(same.satisfied);
}

TEST_CASE("genericity_report") {
  GenericityReport id_rep = genericity_report(unit_identity());
  CHECK_FALSE(id_rep.is_cantor);
  CHECK(id_rep.fixed_measure == 1);
  CHECK_FALSE(id_rep.null_fixed);
  CHECK(id_rep.mixing);  // vacuous: no orbitals at all

  GenericityReport saw = genericity_report(sawtooth(4));
  CHECK_FALSE(saw.is_cantor);
  CHECK(saw.null_fixed);
  CHECK(saw.fixed_measure == 0);
  CHECK_FALSE(saw.mixing);  // adjacent positive orbitals with nothing between

  // a PL fixed set is never a Cantor set
  SplitMix64 rng(73);
  for (int i = 0; i < 50; ++i)
    CHECK_FALSE(genericity_report(random_endpoint_fixing(rng)).is_cantor);
}

TEST_CASE("push_sup on the wobble") {
  std::vector<PLHomeo> gens = {wobble(Q("0"), Q("1"))};

  // the negative orbital (4/11, 2/3) ascends under the inverse
  PushOutcome up = push_sup(gens, Q("1/2"), Q("3/5"), 64);
  CHECK(up.success);
  CHECK(up.reached > Q("3/5"));
  CHECK(replay_push_word(gens, up.word, Q("1/2")) == up.reached);

  // sup of the orbit is the fixed point 2/3: the budget runs out below it
  PushOutcome stuck = push_sup(gens, Q("1/2"), Q("9/10"), 64);
  CHECK_FALSE(stuck.success);
  CHECK(stuck.reached < Q("2/3"));
  REQUIRE(stuck.barrier.has_value());
  CHECK(*stuck.barrier == Q("2/3"));
  CHECK(stuck.barrier_fixers == std::vector<std::size_t>{0});

  // already past the target: immediate success with the empty word
  PushOutcome done = push_sup(gens, Q("7/10"), Q("3/5"), 64);
  CHECK(done.success);
  CHECK(done.reached == Q("7/10"));
  CHECK(done.word.empty());
}

TEST_CASE("push_sup with two generators escapes single-generator barriers") {
  // wobble stalls at 2/3; a second map moving (1/2, 1) upward gets past it
  std::vector<PLHomeo> gens = {wobble(Q("0"), Q("1")),
                               pl({{"0", "0"}, {"1/2", "1/2"}, {"3/4", "7/8"}, {"1", "1"}})};
  PushOutcome out = push_sup(gens, Q("1/2"), Q("95/100"), 256);
  CHECK(out.success);
  CHECK(replay_push_word(gens, out.word, Q("1/2")) == out.reached);
}
