// Acceptance suite: one exact criterion per section, one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <vector>

#include "hac/conjugacy.hpp"
#include "hac/constructions.hpp"
#include "hac/json_io.hpp"
#include "hac/metric.hpp"
#include "hac/sample.hpp"
#include "hac/word_search.hpp"

using namespace hac;

namespace {

int failures = 0;

void criterion(int index, const std::string& name, const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (exception: ") + e.what() + ")";
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << index << ": " << name << " [" << ms
            << " ms]" << note << "\n";
  if (!ok) ++failures;
}

Rational Q(const char* s) { return parse_rational(s); }

PLHomeo unit_id() { return PLHomeo::identity(unit_interval()); }

EvalOracle pl_oracle(const PLMap& m) {
  return [&m](const Rational& x) { return m.eval(x); };
}

}  // namespace

int main() {
  // 1. Sawtooth exactness: rho(sawtooth(n), id) = 2 - 4/n, exact, n = 2..64.
  criterion(1, "sawtooth rho equals 2 - 4/n exactly for n in 2..64", [] {
    PLHomeo id = unit_id();
    for (long n = 2; n <= 64; ++n)
      if (rho_exact(sawtooth(n), id) != Q("2") - make_rational(4, n)) return false;
    return true;
  });

  // 2. Diameter: rho <= 2 on 500 random endpoint-fixing pairs; sawtooth(64)
  //    reaches 2 - 1/16.
  criterion(2, "rho bounded by the diameter 2; sawtooth(64) attains 2 - 1/16", [] {
    SplitMix64 rng(20250801);
    for (int i = 0; i < 500; ++i) {
      PLHomeo f = random_endpoint_fixing(rng);
      PLHomeo g = random_endpoint_fixing(rng);
      if (rho_exact(f, g) > 2) return false;
    }
    return rho_exact(sawtooth(64), unit_id()) == Q("2") - Q("1/16");
  });

  // 3. Metric laws on 200 seeded triples: symmetry, triangle, additivity at a
  //    random midpoint, right-invariance, 2*uniform <= rho. All exact.
  criterion(3, "metric laws (symmetry, triangle, additivity, right-invariance, 2*unif <= rho)",
            [] {
    SplitMix64 rng(20250802);
    for (int i = 0; i < 200; ++i) {
      PLHomeo f = random_endpoint_fixing(rng);
      PLHomeo g = random_endpoint_fixing(rng);
      PLHomeo h = random_endpoint_fixing(rng);
      Rational fg = rho_exact(f, g);
      if (fg != rho_exact(g, f)) return false;
      if (fg > rho_exact(f, h) + rho_exact(h, g)) return false;
      Rational mid = random_rational(rng, unit_interval());
      if (fg != rho_exact(f, g, Q("0"), mid) + rho_exact(f, g, mid, Q("1"))) return false;
      if (rho_exact(compose(f, h), compose(g, h)) != fg) return false;
      if (2 * uniform_dist(f, g) > fg) return false;
    }
    return true;
  });

  // 4. Blow-up bound: rho(phi, psi) <= bound exactly on 100 seeded instances;
  //    bound decreases monotonically below 1/10 along radii 1/8, 1/32, 1/128.
  criterion(4, "blow-up bound holds exactly and shrinks below 1/10 with the site", [] {
    SplitMix64 rng(20250803);
    for (int i = 0; i < 100; ++i) {
      auto [phi, fixed] = random_with_interior_fixed_point(rng);
      Rational prev(-1);
      for (Rational radius : {Q("1/8"), Q("1/32"), Q("1/128")}) {
        Rational lo = fixed - radius, hi = fixed + radius;
        if (lo < 0 || hi > 1) {
          lo = std::max(Q("0"), lo);
          hi = std::min(Q("1"), hi);
        }
        BlowUpResult r = blow_up({phi, {{lo, fixed, hi}}});
        if (rho_exact(phi, r.psi) > r.bound) return false;
        if (prev >= 0 && r.bound >= prev) return false;
        prev = r.bound;
      }
      if (prev >= Q("1/10")) return false;
    }
    return true;
  });

  // 5. Sampled-TV oracle: equality on breakpoint-refining partitions; coarser
  //    dyadic partitions are <= and nondecreasing under refinement.
  criterion(5, "sampled TV equals exact rho on refining partitions, monotone otherwise", [] {
    SplitMix64 rng(20250804);
    for (int i = 0; i < 100; ++i) {
      PLHomeo f = random_endpoint_fixing(rng);
      PLHomeo g = random_endpoint_fixing(rng);
      Rational exact = rho_exact(f, g);
      std::vector<Rational> cuts;
      for (const auto& p : f.points()) cuts.push_back(p.x);
      for (const auto& p : g.points()) cuts.push_back(p.x);
      Partition refining = Partition::uniform_with(unit_interval(), 4, cuts);
      if (rho_sampled_lower(pl_oracle(f), pl_oracle(g), refining) != exact) return false;
      Partition coarse = Partition::uniform(unit_interval(), 8);
      Partition fine = coarse.refine();
      Rational lo = rho_sampled_lower(pl_oracle(f), pl_oracle(g), coarse);
      Rational hi = rho_sampled_lower(pl_oracle(f), pl_oracle(g), fine);
      if (!(lo <= hi && hi <= exact)) return false;
    }
    return true;
  });

  // 6. Conjugacy identities: bump and global conjugators satisfy h f = g h
  //    exactly at 100 random rationals each, 50 seeded instances; endpoints map
  //    exactly.
  criterion(6, "conjugators satisfy h(f(x)) = g(h(x)) exactly (50 instances x 100 points)", [] {
    SplitMix64 rng(20250805);
    for (int i = 0; i < 50; ++i) {
      bool bump_case = i % 2 == 0;
      if (bump_case) {
        int parity = rng.below(2) == 0 ? +1 : -1;
        PLHomeo f = random_bump(rng, unit_interval(), parity);
        PLHomeo g = random_bump(rng, unit_interval(), parity);
        LazyHomeo h = bump_conjugator(f, g);
        if (lazy_eval(h, Q("0")) != 0 || lazy_eval(h, Q("1")) != 1) return false;
        for (int k = 0; k < 100; ++k) {
          Rational x = random_rational(rng, unit_interval());
          if (lazy_eval(h, f.eval(x)) != g.eval(lazy_eval(h, x))) return false;
        }
      } else {
        auto [f, g] = random_matched_pair(rng, /*allow_intervals=*/true);
        LazyHomeo h = global_conjugator(f, g);
        if (lazy_eval(h, Q("0")) != 0 || lazy_eval(h, Q("1")) != 1) return false;
        for (int k = 0; k < 100; ++k) {
          Rational x = random_rational(rng, unit_interval());
          if (lazy_eval(h, f.eval(x)) != g.eval(lazy_eval(h, x))) return false;
        }
      }
    }
    return true;
  });

  // 7. AC evidence: conjugators between finite-fixed-set maps have singular
  //    mass <= 1/100 at mesh 2^-16, threshold 64; the staircase keeps mass 1
  //    whenever (3/2)^k > 64.
  criterion(7, "singular mass: conjugators below 1/100 at k=16; staircase mass 1", [] {
    SplitMix64 rng(20250806);
    for (int i = 0; i < 3; ++i) {
      auto [f, g] = random_matched_pair(rng, /*allow_intervals=*/false);
      LazyHomeo h = global_conjugator(f, g);
      Rational mass = singular_mass(lazy_oracle(h), unit_interval(), pow2(-16), Q("64"));
      if (mass > Q("1/100")) return false;
    }
    for (long k : {11L, 12L, 13L}) {  // (3/2)^k > 64 from k = 11 on
      Rational mesh = rat_pow(Q("1/3"), static_cast<unsigned long>(k));
      if (singular_mass(cantor_stair(k), mesh, Q("64")) != 1) return false;
    }
    return true;
  });

  // 8. Finer-topology witness: rho(mix(k), mix(k+1)) = 1/3 exactly (confirmed
  //    first by the sampled segment-sum oracle) and uniform <= 2^-k, k <= 8.
  criterion(8, "mix family: rho gap exactly 1/3 with uniform distance <= 2^-k", [] {
    for (long k = 0; k <= 8; ++k) {
      PLHomeo a = mix(k);
      PLHomeo b = mix(k + 1);
      std::vector<Rational> cuts;
      for (const auto& p : a.points()) cuts.push_back(p.x);
      for (const auto& p : b.points()) cuts.push_back(p.x);
      Partition refining = Partition::uniform_with(unit_interval(), 2, cuts);
      Rational sampled = rho_sampled_lower(pl_oracle(a), pl_oracle(b), refining);
      if (sampled != Q("1/3")) return false;            // independent oracle route
      if (rho_exact(a, b) != Q("1/3")) return false;    // slope-sum route
      if (uniform_dist(a, b) > pow2(-k)) return false;
    }
    return true;
  });

  // 9. Generator construction: certified perturbation bounds below delta and
  //    no shared fixed point up to tile depth 20.
  criterion(9, "generator pair: rho bounds below delta = 1/10; no shared fixed points", [] {
    SplitMix64 rng(20250807);
    Rational delta = Q("1/10");
    for (int i = 0; i < 5; ++i) {
      auto [f, g] = random_disjoint_fix_pair(rng);
      GeneratorPair pair = generator_pair(make_generator_pair_spec(f, g, delta));
      Rational rho_g = rho_exact(g, pair.g_tilde);
      if (!(rho_g <= pair.rho_g_bound && pair.rho_g_bound == 2 * g.eval(pair.alpha) &&
            pair.rho_g_bound < delta))
        return false;
      if (!(pair.rho_f_bound == 2 * f.eval(pair.alpha) && pair.rho_f_bound < delta))
        return false;
      verify_no_shared_fixed_points(pair, 20);  // throws on failure
    }
    return true;
  });

  // 10. Density probe: nonincreasing traces for 3 seeded targets; identity
  //     target closes with the empty word and zero certified terms; nontrivial
  //     targets keep the certified outer budget under eps/3 when steps 1-3
  //     succeed.
  criterion(10, "density probe: traces nonincreasing; proof-guided budgets certified", [] {
    SplitMix64 rng(20250808);
    auto [f, g] = random_disjoint_fix_pair(rng);
    GeneratorPair pair = generator_pair(make_generator_pair_spec(f, g, Q("1/10")));
    LazyHomeo G = LazyHomeo::atom(pair.g_tilde);
    Partition partition = Partition::uniform(unit_interval(), 32);

    std::vector<PLHomeo> targets = {wobble(Q("0"), Q("1")), random_endpoint_fixing(rng),
                                    random_endpoint_fixing(rng)};
    for (const auto& target : targets) {
      SearchReport report = best_approx(pair.f_tilde, G, target, 8, partition);
      for (std::size_t i = 1; i < report.trace.size(); ++i)
        if (report.trace[i].second > report.trace[i - 1].second) return false;
    }

    ProofGuidedReport trivial = proof_guided_approx(pair, unit_id(), Q("1/2"));
    if (!(trivial.status == ProofGuidedStatus::Ok && trivial.inner.best_word.empty() &&
          trivial.outer_budget == 0 && trivial.blowup_bound == 0 &&
          trivial.middle_estimate == 0))
      return false;

    ProofGuidedParams params;
    params.inner_max_len = 3;
    params.inner_cells = 16;
    Rational epsilon = Q("1/2");
    ProofGuidedReport report = proof_guided_approx(pair, wobble(Q("0"), Q("1")), epsilon, params);
    if (report.status == ProofGuidedStatus::PushFailed ||
        report.status == ProofGuidedStatus::NoEscape)
      return false;  // steps 1-3 must succeed on this seeded instance
    return report.outer_budget < epsilon / 3 && report.blowup_bound < epsilon / 3 &&
           report.a < report.gamma && report.b > 1 - report.gamma;
  });

  // 11. Genericity checkers: identity fails (iii) with measure 1; sawtooth
  //     fails (i) and passes (iii); no random PL map passes (i).
  criterion(11, "genericity checkers match the PL theory", [] {
    GenericityReport id_rep = genericity_report(unit_id());
    if (id_rep.null_fixed || id_rep.fixed_measure != 1 || id_rep.is_cantor) return false;
    for (long n : {3L, 4L, 8L, 16L}) {
      GenericityReport saw = genericity_report(sawtooth(n));
      if (saw.is_cantor || !saw.null_fixed) return false;
    }
    SplitMix64 rng(20250809);
    for (int i = 0; i < 100; ++i)
      if (genericity_report(random_endpoint_fixing(rng)).is_cantor) return false;
    return true;
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
            << "\n";
  return failures;
}
