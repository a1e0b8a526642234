#include <doctest.h>

#include "hac/constructions.hpp"
#include "hac/sample.hpp"
#include "hac/word_search.hpp"
#include "test_util.hpp"

using namespace hac;
using namespace hac::test;

TEST_CASE("word reduction and order") {
  CHECK(Word::from_string("Ff").empty());
  CHECK(Word::from_string("FgGf").empty());
  CHECK(Word::from_string("FGg").to_string() == "F");
  CHECK(Word::from_string("FG").inverse().to_string() == "gf");
  CHECK(concat(Word::from_string("FG"), Word::from_string("gF")).to_string() == "FF");

  CHECK(Word::from_string("F") < Word::from_string("G"));
  CHECK(Word::from_string("G") < Word::from_string("FF"));
}

TEST_CASE("enumerate_words counts 4 * 3^(L-1) per length") {
  std::vector<Word> words = enumerate_words(0);
  CHECK(words.size() == 1);
  CHECK(words[0].empty());

  words = enumerate_words(3);
  std::size_t by_len[4] = {0, 0, 0, 0};
  for (const auto& w : words) ++by_len[w.length()];
  CHECK(by_len[0] == 1);
  CHECK(by_len[1] == 4);
  CHECK(by_len[2] == 12);
  CHECK(by_len[3] == 36);

  // length-then-lexicographic order
  for (std::size_t i = 1; i < words.size(); ++i) CHECK(words[i - 1] < words[i]);
}

TEST_CASE("apply_word matches letterwise evaluation") {
  SplitMix64 rng(167);
  LazyHomeo F = LazyHomeo::atom(random_endpoint_fixing(rng));
  LazyHomeo G = LazyHomeo::atom(random_endpoint_fixing(rng));

  CHECK(lazy_eval(apply_word(Word{}, F, G), Q("1/3")) == Q("1/3"));

  Word fg = Word::from_string("FG");
  Rational x = Q("2/7");
  CHECK(lazy_eval(apply_word(fg, F, G), x) == lazy_eval(F, lazy_eval(G, x)));

  // a word and its free reduction evaluate identically
  for (int i = 0; i < 10; ++i) {
    std::vector<Letter> raw;
    for (int k = 0; k < 6; ++k) raw.push_back(static_cast<Letter>(rng.below(4)));
    Word reduced = Word::reduced(raw);
    Rational t = random_rational(rng, unit_interval());
    Rational via_raw = t;
    for (std::size_t k = raw.size(); k-- > 0;) {
      switch (raw[k]) {
        case Letter::F: via_raw = lazy_eval(F, via_raw); break;
        case Letter::Finv: via_raw = lazy_eval_inverse(F, via_raw); break;
        case Letter::G: via_raw = lazy_eval(G, via_raw); break;
        case Letter::Ginv: via_raw = lazy_eval_inverse(G, via_raw); break;
      }
    }
    CHECK(eval_word(reduced, F, G, t) == via_raw);
  }
}

TEST_CASE("best_approx finds the identity immediately") {
  SplitMix64 rng(173);
  LazyHomeo F = LazyHomeo::atom(random_endpoint_fixing(rng));
  LazyHomeo G = LazyHomeo::atom(random_endpoint_fixing(rng));
  Partition partition = Partition::uniform(unit_interval(), 16);
  SearchReport report = best_approx(F, G, unit_identity(), 3, partition);
  CHECK(report.best_word.empty());
  CHECK(report.lower == 0);
  CHECK(report.uniform == 0);
}

TEST_CASE("best_approx trace is nonincreasing and exact words win") {
  SplitMix64 rng(179);
  PLHomeo fpl = random_endpoint_fixing(rng);
  PLHomeo gpl = random_endpoint_fixing(rng);
  LazyHomeo F = LazyHomeo::atom(fpl);
  LazyHomeo G = LazyHomeo::atom(gpl);
  Partition partition = Partition::uniform(unit_interval(), 32);

  // target = F G: the exact word is within reach at length 2
  PLHomeo target = compose(fpl, gpl);
  SearchReport report = best_approx(F, G, target, 3, partition);
  CHECK(report.best_word.to_string() == "FG");
  CHECK(report.lower == 0);
  for (std::size_t i = 1; i < report.trace.size(); ++i)
    CHECK(report.trace[i].second <= report.trace[i - 1].second);
  CHECK(report.evaluations == 1 + 4 + 12 + 36);
}

TEST_CASE("best_approx against the tiled generators") {
  SplitMix64 rng(181);
  auto [f, g] = random_disjoint_fix_pair(rng);
  GeneratorPair pair = generator_pair(make_generator_pair_spec(f, g, Q("1/10")));
  LazyHomeo G = LazyHomeo::atom(pair.g_tilde);
  Partition partition = Partition::uniform(unit_interval(), 16);
  SearchReport shallow = best_approx(pair.f_tilde, G, wobble(Q("0"), Q("1")), 2, partition);
  SearchReport deeper = best_approx(pair.f_tilde, G, wobble(Q("0"), Q("1")), 4, partition);
  CHECK(deeper.lower <= shallow.lower);
  for (std::size_t i = 1; i < deeper.trace.size(); ++i)
    CHECK(deeper.trace[i].second <= deeper.trace[i - 1].second);
}

TEST_CASE("best_approx is deterministic") {
  SplitMix64 rng(199);
  auto [f, g] = random_disjoint_fix_pair(rng);
  GeneratorPair pair = generator_pair(make_generator_pair_spec(f, g, Q("1/10")));
  LazyHomeo G = LazyHomeo::atom(pair.g_tilde);
  Partition partition = Partition::uniform(unit_interval(), 8);
  PLHomeo target = wobble(Q("0"), Q("1"));
  SearchReport a = best_approx(pair.f_tilde, G, target, 3, partition);
  SearchReport b = best_approx(pair.f_tilde, G, target, 3, partition);
  CHECK(a.best_word == b.best_word);
  CHECK(a.lower == b.lower);
  CHECK(a.evaluations == b.evaluations);
  CHECK(a.trace == b.trace);
}

TEST_CASE("proof_guided_approx on the identity target") {
  SplitMix64 rng(191);
  auto [f, g] = random_disjoint_fix_pair(rng);
  GeneratorPair pair = generator_pair(make_generator_pair_spec(f, g, Q("1/10")));
  ProofGuidedReport report = proof_guided_approx(pair, unit_identity(), Q("1/2"));
  CHECK(report.status == ProofGuidedStatus::Ok);
  CHECK(report.inner.best_word.empty());
  CHECK(report.outer_budget == 0);
  CHECK(report.blowup_bound == 0);
  CHECK(report.middle_estimate == 0);
}

TEST_CASE("proof_guided_approx on a nontrivial target") {
  SplitMix64 rng(193);
  auto [f, g] = random_disjoint_fix_pair(rng);
  GeneratorPair pair = generator_pair(make_generator_pair_spec(f, g, Q("1/10")));
  PLHomeo target = wobble(Q("0"), Q("1"));
  Rational epsilon = Q("1/2");

  ProofGuidedParams params;
  params.inner_max_len = 2;
  params.inner_cells = 16;
  ProofGuidedReport report = proof_guided_approx(pair, target, epsilon, params);

  REQUIRE((report.status == ProofGuidedStatus::Ok ||
           report.status == ProofGuidedStatus::InnerSearchShortfall));

  // steps 1-3 succeeded: the certified chain from the construction
  CHECK(report.gamma < std::min(make_rational(1, 2), Rational(epsilon / 12)));
  CHECK(report.a < report.gamma);
  CHECK(report.b > 1 - report.gamma);
  CHECK(report.outer_budget == 2 * (report.a + (1 - report.b)));
  CHECK(report.outer_budget < 4 * report.gamma);
  CHECK(report.outer_budget < epsilon / 3);
  CHECK(report.blowup_bound < epsilon / 3);

  // h really pushes y0 past 1 - gamma, replayed independently
  {
    Rational p = pair.y0;
    for (const auto& s : report.h_word) {
      if (s.generator == 0)
        p = s.direction > 0 ? lazy_eval(pair.f_tilde, p) : lazy_eval_inverse(pair.f_tilde, p);
      else
        p = s.direction > 0 ? pair.g_tilde.eval(p) : pair.g_tilde.eval_inverse(p);
    }
    CHECK(p == report.h_y0);
    CHECK(p > 1 - report.gamma);
  }

  // Phi fixes h(x_{n+1}): a is exactly that value, and the expanded word
  // evaluates back to it
  LazyHomeo G = LazyHomeo::atom(pair.g_tilde);
  Word phi_word;
  {
    // Phi = G^{-(n+1)} F^m G^{n+1}, conjugated by h
    Word h_w;
    for (auto it = report.h_word.rbegin(); it != report.h_word.rend(); ++it)
      h_w.letters.push_back(it->generator == 0 ? (it->direction > 0 ? Letter::F : Letter::Finv)
                                               : (it->direction > 0 ? Letter::G : Letter::Ginv));
    Word core;
    for (long i = 0; i <= report.n; ++i) core.letters.push_back(Letter::Ginv);
    for (long i = 0; i < (report.m >= 0 ? report.m : -report.m); ++i)
      core.letters.push_back(report.m >= 0 ? Letter::F : Letter::Finv);
    for (long i = 0; i <= report.n; ++i) core.letters.push_back(Letter::G);
    phi_word = concat(concat(h_w, core), h_w.inverse());
  }
  CHECK(eval_word(phi_word, pair.f_tilde, G, report.a) == report.a);

  // the reported middle estimate is reproduced by the expanded best word
  if (!report.inner.best_word.empty()) {
    Rational x = report.a + (report.b - report.a) / 3;
    Rational lhs = eval_word(report.inner.best_word, pair.f_tilde, G, x);
    CHECK(lhs > report.a);
    CHECK(lhs < report.b);
  }
  CHECK(eval_word(report.inner.best_word, pair.f_tilde, G, report.a) == report.a);
  CHECK(eval_word(report.inner.best_word, pair.f_tilde, G, report.b) == report.b);
}
