#include "hac/word_search.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace hac {

Letter letter_inverse(Letter l) {
  switch (l) {
    case Letter::F: return Letter::Finv;
    case Letter::Finv: return Letter::F;
    case Letter::G: return Letter::Ginv;
    case Letter::Ginv: return Letter::G;
  }
  fail(ErrorKind::BadParameter, "bad letter");
}

char letter_char(Letter l) {
  switch (l) {
    case Letter::F: return 'F';
    case Letter::Finv: return 'f';
    case Letter::G: return 'G';
    case Letter::Ginv: return 'g';
  }
  fail(ErrorKind::BadParameter, "bad letter");
}

Word Word::from_string(const std::string& text) {
  std::vector<Letter> letters;
  for (char c : text) {
    switch (c) {
      case 'F': letters.push_back(Letter::F); break;
      case 'f': letters.push_back(Letter::Finv); break;
      case 'G': letters.push_back(Letter::G); break;
      case 'g': letters.push_back(Letter::Ginv); break;
      case ' ': break;
      default: fail(ErrorKind::ParseError, std::string("bad word letter '") + c + "'");
    }
  }
  return reduced(std::move(letters));
}

Word Word::reduced(std::vector<Letter> letters) {
  Word w;
  for (Letter l : letters) {
    if (!w.letters.empty() && w.letters.back() == letter_inverse(l))
      w.letters.pop_back();
    else
      w.letters.push_back(l);
  }
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w.letters.push_back(letter_inverse(*it));
  return w;
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(letters.size());
  for (Letter l : letters) s.push_back(letter_char(l));
  return s;
}

bool operator<(const Word& a, const Word& b) {
  if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
  return a.letters < b.letters;
}

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> letters = a.letters;
  letters.insert(letters.end(), b.letters.begin(), b.letters.end());
  return Word::reduced(std::move(letters));
}

std::vector<Word> enumerate_words(std::size_t max_len) {
  std::vector<Word> all;
  all.push_back(Word{});
  std::vector<Word> level = {Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    next.reserve(level.size() * 3 + 1);
    for (const auto& w : level) {
      for (int i = 0; i < 4; ++i) {
        Letter l = static_cast<Letter>(i);
        if (!w.letters.empty() && l == letter_inverse(w.letters.back())) continue;
        Word child = w;
        child.letters.push_back(l);
        next.push_back(std::move(child));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return all;
}

namespace {

LazyHomeo letter_map(Letter l, const LazyHomeo& F, const LazyHomeo& G) {
  switch (l) {
    case Letter::F: return F;
    case Letter::Finv: return LazyHomeo::inverse(F);
    case Letter::G: return G;
    case Letter::Ginv: return LazyHomeo::inverse(G);
  }
  fail(ErrorKind::BadParameter, "bad letter");
}

}  // namespace

LazyHomeo apply_word(const Word& w, const LazyHomeo& F, const LazyHomeo& G) {
  require(F.is_endomorphism() && G.is_endomorphism() && F.domain() == G.domain(),
          ErrorKind::DomainMismatch, "F and G must act on one interval");
  if (w.empty()) return LazyHomeo::identity(F.domain());
  LazyHomeo acc = letter_map(w.letters.back(), F, G);
  for (std::size_t i = w.letters.size() - 1; i-- > 0;)
    acc = LazyHomeo::compose(letter_map(w.letters[i], F, G), acc);
  return acc;
}

Rational eval_word(const Word& w, const LazyHomeo& F, const LazyHomeo& G, const Rational& x,
                   std::size_t iteration_cap) {
  Rational v = x;
  for (std::size_t i = w.letters.size(); i-- > 0;) {
    switch (w.letters[i]) {
      case Letter::F: v = lazy_eval(F, v, iteration_cap); break;
      case Letter::Finv: v = lazy_eval_inverse(F, v, iteration_cap); break;
      case Letter::G: v = lazy_eval(G, v, iteration_cap); break;
      case Letter::Ginv: v = lazy_eval_inverse(G, v, iteration_cap); break;
    }
  }
  return v;
}

namespace {

// letters of the generic reduced-word DFS: (generator, sign), ordered
// forward-before-inverse within a generator
struct GenLetter {
  std::size_t gen;
  int sign;
  friend bool operator==(const GenLetter& a, const GenLetter& b) {
    return a.gen == b.gen && a.sign == b.sign;
  }
  friend bool operator<(const GenLetter& a, const GenLetter& b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    return a.sign > b.sign;
  }
};

bool gen_word_less(const std::vector<GenLetter>& a, const std::vector<GenLetter>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct DfsResult {
  bool found = false;
  std::vector<GenLetter> best_word;  // outermost letter first
  Rational best_dist;
  std::vector<Rational> best_wrapped;  // W-space images of the best word
  std::vector<std::optional<Rational>> best_by_len;
  std::size_t evaluations = 0;
  std::size_t skipped = 0;
};

/// DFS over freely reduced words of length <= max_len over num_gens
/// generators. Words grow by one outermost letter per step, so child images
/// cost one `apply` per partition point. `wrap` lifts stored images into the
/// space where distances are measured. Iteration-cap failures prune the
/// subtree and are counted.
DfsResult word_dfs(std::size_t num_gens, std::size_t max_len,
                   const std::vector<Rational>& start_images,
                   const std::vector<Rational>& target_vals,
                   const std::function<Rational(const GenLetter&, const Rational&)>& apply,
                   const std::function<Rational(const Rational&)>& wrap) {
  DfsResult res;
  res.best_by_len.assign(max_len + 1, std::nullopt);

  auto dist_of = [&target_vals](const std::vector<Rational>& wrapped) {
    Rational total(0);
    for (std::size_t i = 1; i < wrapped.size(); ++i)
      total += rat_abs((wrapped[i] - target_vals[i]) - (wrapped[i - 1] - target_vals[i - 1]));
    return total;
  };

  std::vector<GenLetter> path;  // extension history; word = reversed path

  auto consider = [&](const std::vector<Rational>& images) {
    std::vector<Rational> wrapped;
    wrapped.reserve(images.size());
    try {
      for (const auto& v : images) wrapped.push_back(wrap(v));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::IterationCapExceeded) throw;
      ++res.skipped;  // unscoreable node; its images remain usable below
      return;
    }
    Rational d = dist_of(wrapped);
    ++res.evaluations;
    auto& slot = res.best_by_len[path.size()];
    if (!slot || d < *slot) slot = d;
    std::vector<GenLetter> word(path.rbegin(), path.rend());
    if (!res.found || d < res.best_dist ||
        (d == res.best_dist && gen_word_less(word, res.best_word))) {
      res.found = true;
      res.best_dist = d;
      res.best_word = std::move(word);
      res.best_wrapped = std::move(wrapped);
    }
  };

  std::function<void(const std::vector<Rational>&)> recurse =
      [&](const std::vector<Rational>& images) {
        if (path.size() >= max_len) return;
        for (std::size_t gen = 0; gen < num_gens; ++gen) {
          for (int sign : {+1, -1}) {
            GenLetter letter{gen, sign};
            if (!path.empty() && path.back().gen == gen && path.back().sign == -sign)
              continue;  // would cancel
            std::vector<Rational> child;
            child.reserve(images.size());
            bool ok = true;
            try {
              for (const auto& v : images) child.push_back(apply(letter, v));
            } catch (const Error& e) {
              if (e.kind() != ErrorKind::IterationCapExceeded) throw;
              ++res.skipped;
              ok = false;
            }
            if (!ok) continue;
            path.push_back(letter);
            consider(child);
            recurse(child);
            path.pop_back();
          }
        }
      };

  consider(start_images);
  recurse(start_images);
  require(res.found, ErrorKind::IterationCapExceeded, "no word could be scored under the cap");
  return res;
}

// cumulative best-by-length trace (nonincreasing)
std::vector<std::pair<std::size_t, Rational>> cumulative_trace(
    const std::vector<std::optional<Rational>>& by_len) {
  std::vector<std::pair<std::size_t, Rational>> trace;
  std::optional<Rational> best;
  for (std::size_t len = 0; len < by_len.size(); ++len) {
    if (by_len[len] && (!best || *by_len[len] < *best)) best = by_len[len];
    if (best) trace.emplace_back(len, *best);
  }
  return trace;
}

Word two_gen_word(const std::vector<GenLetter>& letters) {
  Word w;
  for (const auto& l : letters) {
    if (l.gen == 0)
      w.letters.push_back(l.sign > 0 ? Letter::F : Letter::Finv);
    else
      w.letters.push_back(l.sign > 0 ? Letter::G : Letter::Ginv);
  }
  return w;
}

}  // namespace

SearchReport best_approx(const LazyHomeo& F, const LazyHomeo& G, const PLHomeo& target,
                         std::size_t max_len, const Partition& partition,
                         std::size_t iteration_cap) {
  require(F.is_endomorphism() && G.is_endomorphism() && F.domain() == G.domain(),
          ErrorKind::DomainMismatch, "F and G must act on one interval");
  require(F.domain().contains(partition.span()), ErrorKind::DomainMismatch,
          "partition must lie in the generators' interval");
  const auto& ts = partition.points();
  std::vector<Rational> target_vals;
  target_vals.reserve(ts.size());
  for (const auto& t : ts) target_vals.push_back(target.eval(t));

  auto apply = [&](const GenLetter& l, const Rational& v) {
    if (l.gen == 0)
      return l.sign > 0 ? lazy_eval(F, v, iteration_cap) : lazy_eval_inverse(F, v, iteration_cap);
    return l.sign > 0 ? lazy_eval(G, v, iteration_cap) : lazy_eval_inverse(G, v, iteration_cap);
  };
  auto wrap = [](const Rational& v) { return v; };

  DfsResult res = word_dfs(2, max_len, ts, target_vals, apply, wrap);

  SearchReport report;
  report.best_word = two_gen_word(res.best_word);
  report.lower = res.best_dist;
  Rational uni(0);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    Rational d = rat_abs(res.best_wrapped[i] - target_vals[i]);
    if (d > uni) uni = d;
  }
  report.uniform = uni;
  report.trace = cumulative_trace(res.best_by_len);
  report.evaluations = res.evaluations;
  report.skipped = res.skipped;
  return report;
}

const char* proof_guided_status_name(ProofGuidedStatus status) {
  switch (status) {
    case ProofGuidedStatus::Ok: return "ok";
    case ProofGuidedStatus::InnerSearchShortfall: return "inner-search-shortfall";
    case ProofGuidedStatus::PushFailed: return "push-failed";
    case ProofGuidedStatus::NoEscape: return "no-escape";
  }
  return "unknown";
}

ProofGuidedReport proof_guided_approx(const GeneratorPair& pair, const PLHomeo& target,
                                      const Rational& epsilon, const ProofGuidedParams& params) {
  require(epsilon > 0, ErrorKind::BadParameter, "epsilon must be positive");
  require(target.domain() == unit_interval() && target.is_endomorphism(),
          ErrorKind::DomainMismatch, "target must fix the endpoints of [0,1]");

  ProofGuidedReport report;
  report.epsilon = epsilon;

  if (target.is_identity()) {
    // the empty word already matches: every term is zero
    report.gamma = 0;
    report.h_y0 = pair.y0;
    report.a = 0;
    report.b = 1;
    report.blowup_bound = 0;
    report.outer_budget = 0;
    report.middle_estimate = 0;
    report.inner.lower = 0;
    report.inner.uniform = 0;
    report.inner.trace = {{0, Rational(0)}};
    report.inner.evaluations = 1;
    return report;
  }

  const LazyHomeo& F = pair.f_tilde;
  const PLHomeo& gt = pair.g_tilde;
  const std::size_t cap = params.iteration_cap;

  auto f_eval = [&](const Rational& x) { return lazy_eval(F, x, cap); };
  auto f_inv = [&](const Rational& y) { return lazy_eval_inverse(F, y, cap); };

  // step 1: gamma with a certified blow-up budget. For sites [0,a], [b,1]
  // the blow-up bound is 2 max(a, t(a)) + 2 max(1-b, 1-t(b)), monotone in a
  // and 1-b, so the value at gamma dominates all admissible (a, b).
  Rational limit = std::min(make_rational(1, 2), Rational(epsilon / 12));
  Rational third = epsilon / 3;
  std::optional<Rational> gamma;
  for (long j = 1; j <= 4096; ++j) {
    Rational cand = pow2(-j);
    if (cand >= limit) continue;
    Rational right_tail = 1 - target.eval(1 - cand);
    Rational budget = 2 * std::max(cand, target.eval(cand)) + 2 * std::max(cand, right_tail);
    if (budget < third) {
      gamma = cand;
      break;
    }
  }
  require(gamma.has_value(), ErrorKind::BadParameter, "no dyadic gamma fits epsilon");
  report.gamma = *gamma;

  // step 2: greedy ascent pushing y0 past 1 - gamma
  Rational goal = 1 - *gamma;
  Rational p = pair.y0;
  while (p <= goal && report.h_word.size() < params.push_budget) {
    Rational best = p;
    std::size_t best_gen = 0;
    int best_dir = 0;
    auto try_move = [&](std::size_t gen, int dir, const Rational& value) {
      if (value > best) {
        best = value;
        best_gen = gen;
        best_dir = dir;
      }
    };
    try_move(0, -1, f_inv(p));
    try_move(0, +1, f_eval(p));
    try_move(1, -1, gt.eval_inverse(p));
    try_move(1, +1, gt.eval(p));
    if (best_dir == 0) break;
    p = best;
    report.h_word.push_back({best_gen, best_dir});
  }
  report.h_y0 = p;
  if (p <= goal) {
    report.status = ProofGuidedStatus::PushFailed;
    return report;
  }

  auto h_apply = [&](Rational x) {
    for (const auto& s : report.h_word)
      x = s.generator == 0 ? (s.direction > 0 ? f_eval(x) : f_inv(x))
                           : (s.direction > 0 ? gt.eval(x) : gt.eval_inverse(x));
    return x;
  };
  auto h_unapply = [&](Rational y) {
    for (auto it = report.h_word.rbegin(); it != report.h_word.rend(); ++it)
      y = it->generator == 0 ? (it->direction > 0 ? f_inv(y) : f_eval(y))
                             : (it->direction > 0 ? gt.eval_inverse(y) : gt.eval(y));
    return y;
  };

  // step 3: n with h(x_{n+1}) < gamma
  Rational x_n = pair.x0;
  Rational x_n1 = pair.x0;
  {
    bool found = false;
    Rational cur = pair.x0;
    for (std::size_t k = 0; k < params.n_cap; ++k) {
      Rational next = gt.eval_inverse(cur);
      Rational image = h_apply(next);
      if (image < *gamma) {
        report.n = static_cast<long>(k);
        report.a = image;
        x_n = cur;
        x_n1 = next;
        found = true;
        break;
      }
      cur = next;
    }
    require(found, ErrorKind::IterationCapExceeded,
            "h(x_{n+1}) still >= gamma after n = " + std::to_string(params.n_cap) +
                " pull-backs");
  }

  // step 4: m with f~^m(g~(x0)) > y0; f~ has no fixed point on (x0, y0], so
  // the iterates escape in whichever direction ascends
  Rational t0 = gt.eval(pair.x0);
  Rational z = t0;
  {
    Rational probe = f_eval(t0);
    if (probe == t0) {
      report.status = ProofGuidedStatus::NoEscape;
      return report;
    }
    bool forward = probe > t0;
    std::size_t count = 0;
    while (z <= pair.y0 && count < params.escape_cap) {
      z = forward ? f_eval(z) : f_inv(z);
      ++count;
    }
    if (z <= pair.y0) {
      report.status = ProofGuidedStatus::NoEscape;
      return report;
    }
    report.m = forward ? static_cast<long>(count) : -static_cast<long>(count);
  }

  // step 5: b = Phi(h(x_n)) = h(g~^{-(n+1)}(f~^m(g~(x0)))); the escape point
  // z stays above the g~-fixed point y0 under g~^{-1}
  {
    Rational w = z;
    for (long i = 0; i <= report.n; ++i) w = gt.eval_inverse(w);
    require(w > pair.y0, ErrorKind::OracleEvaluationFailure, "internal: w <= y0");
    report.b = h_apply(w);
  }
  require(report.a < *gamma && report.b > goal, ErrorKind::OracleEvaluationFailure,
          "internal: a, b out of range");

  // step 6: blow-up of the target at [0,a] and [b,1]
  BlowUpResult blown = blow_up(BlowUpSpec{
      target, {{Rational(0), Rational(0), report.a}, {report.b, Rational(1), Rational(1)}}});
  report.blowup_bound = blown.bound;
  require(report.blowup_bound < third, ErrorKind::OracleEvaluationFailure,
          "internal: blow-up bound above epsilon/3");

  report.outer_budget = 2 * (report.a + (1 - report.b));
  require(report.outer_budget < 4 * *gamma && 4 * *gamma < third,
          ErrorKind::OracleEvaluationFailure, "internal: outer budget above 4 gamma");

  // step 7: brute-force the middle piece over the conjugated tile letters.
  // Working coordinates: W = (h phat) V (h phat)^{-1} with
  // phat = g~^{-(n+1)} f~^m g~^{n+1} and V a word over A_i = g~^i f~ g~^{-i},
  // so images live on the base tile [x_{n+1}, x_n] and only scoring pays the
  // conjugation cost.
  const long n = report.n;
  const long m = report.m;
  auto phat = [&](Rational v) {
    for (long i = 0; i <= n; ++i) v = gt.eval(v);
    for (long i = 0; i < (m >= 0 ? m : -m); ++i) v = m >= 0 ? f_eval(v) : f_inv(v);
    for (long i = 0; i <= n; ++i) v = gt.eval_inverse(v);
    return v;
  };
  auto phat_inv = [&](Rational v) {
    for (long i = 0; i <= n; ++i) v = gt.eval(v);
    for (long i = 0; i < (m >= 0 ? m : -m); ++i) v = m >= 0 ? f_inv(v) : f_eval(v);
    for (long i = 0; i <= n; ++i) v = gt.eval_inverse(v);
    return v;
  };

  std::vector<Rational> psi_cuts;
  for (const auto& bp : blown.psi.points()) psi_cuts.push_back(bp.x);
  Partition partition =
      Partition::uniform_with(Interval(report.a, report.b), params.inner_cells, psi_cuts);
  const auto& ts = partition.points();
  std::vector<Rational> target_vals;
  std::vector<Rational> start_images;
  target_vals.reserve(ts.size());
  start_images.reserve(ts.size());
  for (const auto& t : ts) {
    target_vals.push_back(blown.psi.eval(t));
    start_images.push_back(phat_inv(h_unapply(t)));
  }
  require(start_images.front() == x_n1 && start_images.back() == x_n,
          ErrorKind::OracleEvaluationFailure, "internal: tile pull-back mismatch");

  auto apply = [&](const GenLetter& l, const Rational& v) {
    // A_i^{sign} = g~^i f~^{sign} g~^{-i}
    Rational w = v;
    for (std::size_t i = 0; i < l.gen; ++i) w = gt.eval_inverse(w);
    w = l.sign > 0 ? f_eval(w) : f_inv(w);
    for (std::size_t i = 0; i < l.gen; ++i) w = gt.eval(w);
    return w;
  };
  auto wrap = [&](const Rational& v) { return h_apply(phat(v)); };

  DfsResult res = word_dfs(pair.phis.size(), params.inner_max_len, start_images, target_vals,
                           apply, wrap);

  report.middle_estimate = res.best_dist;
  report.inner.lower = res.best_dist;
  Rational uni(0);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    Rational d = rat_abs(res.best_wrapped[i] - target_vals[i]);
    if (d > uni) uni = d;
  }
  report.inner.uniform = uni;
  report.inner.trace = cumulative_trace(res.best_by_len);
  report.inner.evaluations = res.evaluations;
  report.inner.skipped = res.skipped;

  // expand the winner to a word over {F, G}: W = h phat V phat^{-1} h^{-1}
  {
    // h applies its first recorded step first, so the outermost letter is the
    // last step
    Word h_w;
    for (auto it = report.h_word.rbegin(); it != report.h_word.rend(); ++it)
      h_w.letters.push_back(it->generator == 0 ? (it->direction > 0 ? Letter::F : Letter::Finv)
                                               : (it->direction > 0 ? Letter::G : Letter::Ginv));
    Word phat_w;
    for (long i = 0; i <= n; ++i) phat_w.letters.push_back(Letter::Ginv);
    for (long i = 0; i < (m >= 0 ? m : -m); ++i)
      phat_w.letters.push_back(m >= 0 ? Letter::F : Letter::Finv);
    for (long i = 0; i <= n; ++i) phat_w.letters.push_back(Letter::G);

    Word v_w;
    for (const auto& l : res.best_word) {
      for (std::size_t i = 0; i < l.gen; ++i) v_w.letters.push_back(Letter::G);
      v_w.letters.push_back(l.sign > 0 ? Letter::F : Letter::Finv);
      for (std::size_t i = 0; i < l.gen; ++i) v_w.letters.push_back(Letter::Ginv);
    }

    Word full = concat(concat(concat(concat(h_w, phat_w), v_w), phat_w.inverse()), h_w.inverse());
    report.inner.best_word = std::move(full);
  }

  report.status = report.middle_estimate > third ? ProofGuidedStatus::InnerSearchShortfall
                                                 : ProofGuidedStatus::Ok;
  return report;
}

}  // namespace hac
