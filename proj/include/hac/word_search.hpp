#ifndef HAC_WORD_SEARCH_HPP
#define HAC_WORD_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hac/constructions.hpp"
#include "hac/dynamics.hpp"
#include "hac/lazy_homeo.hpp"
#include "hac/metric.hpp"

namespace hac {

/// Letters of the free group on {F, G}; lowercase denotes the inverse in the
/// string form ("FgF" = F g^{-1} F). Order F < F^{-1} < G < G^{-1}.
enum class Letter : std::uint8_t { F = 0, Finv = 1, G = 2, Ginv = 3 };

Letter letter_inverse(Letter l);
char letter_char(Letter l);

/// Freely reduced word; letters[0] is the outermost factor, so "FG" acts as
/// x -> F(G(x)).
struct Word {
  std::vector<Letter> letters;

  static Word from_string(const std::string& text);
  static Word reduced(std::vector<Letter> letters);

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Word inverse() const;
  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
  friend bool operator<(const Word& a, const Word& b);  // length, then lexicographic
};

/// Concatenation with free reduction at the seam.
Word concat(const Word& a, const Word& b);

/// All reduced words of length <= max_len in length-then-lexicographic
/// order; 4 * 3^(L-1) words at each length L >= 1.
std::vector<Word> enumerate_words(std::size_t max_len);

/// The expression-tree composition w(F, G); the empty word gives the
/// identity atom.
LazyHomeo apply_word(const Word& w, const LazyHomeo& F, const LazyHomeo& G);

/// Evaluates w(F, G) at x letter by letter (no tree built).
Rational eval_word(const Word& w, const LazyHomeo& F, const LazyHomeo& G, const Rational& x,
                   std::size_t iteration_cap = kDefaultIterationCap);

struct SearchReport {
  Word best_word;
  Rational lower;    // sampled TV distance of the best word: a certified
                     // rho lower bound for absolutely continuous maps
  Rational uniform;  // max |w(F,G) - target| over the partition points
  std::vector<std::pair<std::size_t, Rational>> trace;  // best distance by length (cumulative)
  std::size_t evaluations = 0;
  std::size_t skipped = 0;  // words pruned by the iteration cap
};

/// Brute-force density probe: minimizes the sampled TV distance to the
/// target over all reduced words of length <= max_len, deterministic
/// tie-break (shortest, then lexicographic). Unevaluable subtrees (iteration
/// cap) are pruned and counted.
SearchReport best_approx(const LazyHomeo& F, const LazyHomeo& G, const PLHomeo& target,
                         std::size_t max_len, const Partition& partition,
                         std::size_t iteration_cap = kDefaultIterationCap);

struct ProofGuidedParams {
  std::size_t push_budget = 1024;
  std::size_t escape_cap = 1024;
  std::size_t n_cap = 4096;
  std::size_t inner_max_len = 4;
  std::size_t inner_cells = 32;
  std::size_t iteration_cap = kDefaultIterationCap;
};

enum class ProofGuidedStatus { Ok, InnerSearchShortfall, PushFailed, NoEscape };

const char* proof_guided_status_name(ProofGuidedStatus status);

struct ProofGuidedReport {
  ProofGuidedStatus status = ProofGuidedStatus::Ok;
  Rational epsilon;
  Rational gamma;
  std::vector<PushStep> h_word;  // greedy ascent word: generator 0 = f~, 1 = g~
  Rational h_y0;                 // h(y0) > 1 - gamma on success
  long n = 0;
  long m = 0;
  Rational a;
  Rational b;
  Rational blowup_bound;     // certified: rho(target, psi) <= this < eps/3
  Rational outer_budget;     // certified: rho_0^a + rho_b^1 <= 2(a + (1-b)) < 4 gamma
  Rational middle_estimate;  // sampled estimate of rho_a^b(W, psi)
  SearchReport inner;        // best_word holds W expanded over {F, G}
};

/// Executes the constructive reduction behind the two-generator density
/// theorem: shrink the target's support by a blow-up at [0,a] and [b,1],
/// push y0 past 1 - gamma with a greedy word h, conjugate the tile
/// generators up to [a,b] with Phi = G^{-(n+1)} F^m G^{n+1}, and brute-force
/// the middle piece. Outer terms are certified exact rationals; the middle
/// term is a sampled estimate.
ProofGuidedReport proof_guided_approx(const GeneratorPair& pair, const PLHomeo& target,
                                      const Rational& epsilon,
                                      const ProofGuidedParams& params = {});

}  // namespace hac

#endif
