#include "hac/dynamics.hpp"

#include <algorithm>

namespace hac {

bool FixedSet::contains(const Rational& x) const {
  for (const auto& p : points)
    if (p == x) return true;
  for (const auto& iv : intervals)
    if (iv.contains(x)) return true;
  return false;
}

Rational FixedSet::measure() const {
  Rational total(0);
  for (const auto& iv : intervals) total += iv.length();
  return total;
}

std::optional<Rational> FixedSet::min_element_at_least(const Rational& x) const {
  std::optional<Rational> best;
  auto consider = [&best, &x](const Rational& candidate) {
    if (candidate >= x && (!best || candidate < *best)) best = candidate;
  };
  for (const auto& p : points) consider(p);
  for (const auto& iv : intervals) {
    consider(iv.lo);
    if (iv.lo <= x && x <= iv.hi) consider(x);
  }
  return best;
}

namespace {

// sorted elementary pieces (degenerate = point) merged into a FixedSet
struct Piece {
  Rational lo, hi;  // lo <= hi; lo == hi means a point
};

FixedSet assemble(std::vector<Piece> pieces) {
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
  std::vector<Piece> merged;
  for (auto& p : pieces) {
    if (!merged.empty() && p.lo <= merged.back().hi) {
      if (p.hi > merged.back().hi) merged.back().hi = p.hi;
    } else {
      merged.push_back(p);
    }
  }
  FixedSet out;
  for (auto& p : merged) {
    if (p.lo == p.hi)
      out.points.push_back(p.lo);
    else
      out.intervals.emplace_back(p.lo, p.hi);
  }
  return out;
}

}  // namespace

FixedSet intersect(const FixedSet& a, const FixedSet& b) {
  std::vector<Piece> pieces;
  for (const auto& p : a.points)
    if (b.contains(p)) pieces.push_back({p, p});
  for (const auto& p : b.points)
    if (a.contains(p)) pieces.push_back({p, p});
  for (const auto& ia : a.intervals)
    for (const auto& ib : b.intervals) {
      Rational lo = std::max(ia.lo, ib.lo);
      Rational hi = std::min(ia.hi, ib.hi);
      if (lo <= hi) pieces.push_back({lo, hi});
    }
  return assemble(std::move(pieces));
}

FixedSet diagonal_intersection(const PLMap& m) {
  std::vector<Piece> pieces;
  const auto& pts = m.points();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Breakpoint& a = pts[i];
    const Breakpoint& b = pts[i + 1];
    // f(x) - x on [a.x, b.x] is linear; solve it hitting zero
    Rational da = a.y - a.x;
    Rational db = b.y - b.x;
    if (da == 0 && db == 0) {
      pieces.push_back({a.x, b.x});  // segment on the diagonal
    } else if (da == 0) {
      pieces.push_back({a.x, a.x});
    } else if (db == 0) {
      pieces.push_back({b.x, b.x});
    } else if ((da < 0) != (db < 0)) {
      // strict sign change: unique interior crossing
      Rational x = a.x + (b.x - a.x) * da / (da - db);
      pieces.push_back({x, x});
    }
  }
  return assemble(std::move(pieces));
}

FixedSet fixed_set(const PLHomeo& f) {
  require(f.domain() == f.codomain(), ErrorKind::DomainMismatch,
          "fixed_set needs domain == codomain");
  return diagonal_intersection(f);
}

std::vector<Orbital> orbitals(const PLHomeo& f) {
  FixedSet fs = fixed_set(f);
  // walk the fixed structure left to right; gaps are orbitals
  std::vector<Piece> blocks;
  for (const auto& p : fs.points) blocks.push_back({p, p});
  for (const auto& iv : fs.intervals) blocks.push_back({iv.lo, iv.hi});
  std::sort(blocks.begin(), blocks.end(),
            [](const Piece& a, const Piece& b) { return a.lo < b.lo; });

  std::vector<Orbital> out;
  Rational cursor = f.domain_lo();
  auto emit = [&f, &out](const Rational& lo, const Rational& hi) {
    if (lo >= hi) return;
    Rational mid = (lo + hi) / 2;
    int parity = f.eval(mid) > mid ? +1 : -1;
    out.push_back({Interval(lo, hi), parity});
  };
  for (const auto& b : blocks) {
    emit(cursor, b.lo);
    cursor = b.hi;
  }
  emit(cursor, f.domain_hi());
  return out;
}

int parity_at(const PLHomeo& f, const Rational& x) {
  Rational y = f.eval(x);
  if (y == x) return 0;
  return y > x ? +1 : -1;
}

BetweenReport check_between(const PLHomeo& f, const Rational& q, const Rational& r) {
  require(q < r, ErrorKind::DomainMismatch, "check_between needs q < r");
  require(f.domain().contains(q) && f.domain().contains(r), ErrorKind::DomainMismatch,
          "q, r must lie in the domain");
  BetweenReport report;
  if (parity_at(f, q) == 0 || parity_at(f, r) == 0) {
    report.vacuous = true;
    report.satisfied = true;
    return report;
  }
  std::vector<Orbital> orbs = orbitals(f);
  auto span_of = [&orbs](const Rational& x) {
    for (std::size_t i = 0; i < orbs.size(); ++i)
      if (orbs[i].span.lo < x && x < orbs[i].span.hi) return i;
    return orbs.size();
  };
  std::size_t iq = span_of(q), ir = span_of(r);
  if (iq == ir) {
    report.vacuous = true;
    report.satisfied = true;
    return report;
  }
  const Rational left_end = orbs[iq].span.hi;
  const Rational right_end = orbs[ir].span.lo;
  for (const auto& orb : orbs) {
    if (orb.span.lo >= left_end && orb.span.hi <= right_end) {
      Rational witness = (orb.span.lo + orb.span.hi) / 2;
      if (orb.parity > 0 && !report.positive_witness) report.positive_witness = witness;
      if (orb.parity < 0 && !report.negative_witness) report.negative_witness = witness;
    }
  }
  report.satisfied = report.positive_witness.has_value() && report.negative_witness.has_value();
  return report;
}

GenericityReport genericity_report(const PLHomeo& f) {
  require(f.domain() == f.codomain(), ErrorKind::DomainMismatch,
          "genericity_report needs domain == codomain");
  require(f.is_endomorphism(), ErrorKind::DomainMismatch,
          "genericity_report needs an endpoint-fixing map");

  GenericityReport report;
  FixedSet fs = fixed_set(f);
  report.fixed_measure = fs.measure();
  report.null_fixed = report.fixed_measure == 0;
  if (!report.null_fixed)
    report.witnesses.push_back("fixed set has measure " + to_fraction_string(report.fixed_measure));

  // (i) Cantor = nonempty + perfect + totally disconnected. A PL fixed set is
  // a finite union of points and intervals: intervals kill total
  // disconnectedness, isolated points kill perfection.
  if (!fs.intervals.empty()) {
    report.is_cantor = false;
    report.witnesses.push_back("fixed interval [" + to_fraction_string(fs.intervals[0].lo) + ", " +
                               to_fraction_string(fs.intervals[0].hi) +
                               "] is a connected component");
  } else if (!fs.points.empty()) {
    report.is_cantor = false;
    report.witnesses.push_back("isolated fixed point at " + to_fraction_string(fs.points[0]));
  } else {
    report.is_cantor = false;
    report.witnesses.push_back("fixed set is empty");
  }

  // (ii) over the finite orbital list: every pair of nonzero orbitals needs
  // both parities strictly between them.
  std::vector<Orbital> orbs = orbitals(f);
  report.mixing = true;
  for (std::size_t i = 0; i < orbs.size() && report.mixing; ++i) {
    for (std::size_t j = i + 1; j < orbs.size() && report.mixing; ++j) {
      bool pos = false, neg = false;
      for (std::size_t k = i + 1; k < j; ++k) {
        if (orbs[k].parity > 0) pos = true;
        if (orbs[k].parity < 0) neg = true;
      }
      if (!pos || !neg) {
        report.mixing = false;
        report.witnesses.push_back(
            "orbitals (" + to_fraction_string(orbs[i].span.lo) + "," +
            to_fraction_string(orbs[i].span.hi) + ") and (" + to_fraction_string(orbs[j].span.lo) +
            "," + to_fraction_string(orbs[j].span.hi) + ") lack a " +
            (pos ? "negative" : "positive") + "-parity orbital between them");
      }
    }
  }
  return report;
}

PushOutcome push_sup(std::span<const PLHomeo> generators, const Rational& start,
                     const Rational& target, std::size_t budget) {
  require(!generators.empty(), ErrorKind::BadParameter, "need at least one generator");
  const Interval dom = generators[0].domain();
  for (const auto& g : generators) {
    require(g.domain() == dom && g.codomain() == dom, ErrorKind::DomainMismatch,
            "generators must share one interval");
  }
  require(dom.contains(start) && dom.contains(target), ErrorKind::OutOfDomain,
          "start and target must lie in the generators' interval");

  PushOutcome out;
  Rational current = start;
  while (current <= target && out.steps < budget) {
    // best single move; inverse preferred over forward on ties, then lower index
    Rational best = current;
    std::size_t best_gen = 0;
    int best_dir = 0;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      Rational inv = generators[i].eval_inverse(current);
      if (inv > best) {
        best = inv;
        best_gen = i;
        best_dir = -1;
      }
      Rational fwd = generators[i].eval(current);
      if (fwd > best) {
        best = fwd;
        best_gen = i;
        best_dir = +1;
      }
    }
    if (best_dir == 0) break;  // no strictly increasing move: common fixed point
    current = best;
    out.word.push_back({best_gen, best_dir});
    ++out.steps;
  }

  out.reached = current;
  if (current > target) {
    out.success = true;
    return out;
  }

  // stalled or budget out: locate the smallest common fixed point >= current
  FixedSet common = fixed_set(generators[0]);
  for (std::size_t i = 1; i < generators.size(); ++i)
    common = intersect(common, fixed_set(generators[i]));
  out.barrier = common.min_element_at_least(current);
  if (out.barrier) {
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (generators[i].eval(*out.barrier) == *out.barrier) out.barrier_fixers.push_back(i);
  }
  return out;
}

Rational replay_push_word(std::span<const PLHomeo> generators,
                          const std::vector<PushStep>& word, const Rational& start) {
  Rational x = start;
  for (const auto& step : word) {
    require(step.generator < generators.size(), ErrorKind::BadParameter,
            "push word references unknown generator");
    x = step.direction >= 0 ? generators[step.generator].eval(x)
                            : generators[step.generator].eval_inverse(x);
  }
  return x;
}

}  // namespace hac
