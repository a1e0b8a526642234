#include "hac/rational.hpp"

#include <cctype>

#include "hac/error.hpp"

namespace hac {

Rational parse_rational(const std::string& text) {
  if (text.empty()) fail(ErrorKind::ParseError, "empty rational literal");
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Integer n(text);
      return Rational(n);
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty())
      fail(ErrorKind::ParseError, "malformed rational '" + text + "'");
    Integer p(num), q(den);
    if (q == 0) fail(ErrorKind::ParseError, "zero denominator in '" + text + "'");
    return make_rational(p, q);
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::ParseError, "malformed rational '" + text + "'");
  }
}

std::string to_fraction_string(const Rational& q) { return q.get_str(); }

namespace {

constexpr int kSigDigits = 12;

// round-half-even of p/q (q > 0) to the nearest integer
Integer round_half_even(const Integer& p, const Integer& q) {
  Integer quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  Integer twice = rem * 2;
  int cmp = mpz_cmp(twice.get_mpz_t(), q.get_mpz_t());
  if (cmp > 0) return quot + 1;
  if (cmp < 0) return quot;
  return mpz_even_p(quot.get_mpz_t()) ? quot : Integer(quot + 1);
}

}  // namespace

std::string to_decimal_string(const Rational& q) {
  if (q == 0) return "0";
  bool negative = q < 0;
  Rational a = rat_abs(q);
  Integer num = a.get_num(), den = a.get_den();

  // exponent e with 10^(e-1) <= a < 10^e
  long e = 0;
  Integer lo = num, hi = den;  // compare a against 10^e by cross-multiplying
  while (lo >= hi * 10) {
    hi *= 10;
    ++e;
  }
  while (lo < hi) {
    lo *= 10;
    --e;
  }
  ++e;  // now 10^(e-1) <= a < 10^e

  // digits = round(a * 10^(sig - e)) with half-even tie breaking
  Integer scaled_num = num, scaled_den = den;
  long shift = kSigDigits - e;
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift >= 0 ? shift : -shift));
  if (shift >= 0)
    scaled_num *= ten_pow;
  else
    scaled_den *= ten_pow;
  Integer digits = round_half_even(scaled_num, scaled_den);

  std::string ds = digits.get_str();
  if (static_cast<int>(ds.size()) > kSigDigits) {  // rounding carried over
    ds = ds.substr(0, kSigDigits);
    ++e;
  }

  std::string out;
  if (e >= 1 && e <= kSigDigits) {
    out = ds.substr(0, static_cast<std::size_t>(e));
    std::string frac = ds.substr(static_cast<std::size_t>(e));
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  } else if (e <= 0 && e > -4) {
    std::string frac(static_cast<std::size_t>(-e), '0');
    frac += ds;
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out = "0." + frac;
  } else {
    std::string mant = ds.substr(0, 1);
    std::string rest = ds.substr(1);
    while (!rest.empty() && rest.back() == '0') rest.pop_back();
    if (!rest.empty()) mant += "." + rest;
    out = mant + "e" + std::to_string(e - 1);
  }
  return negative ? "-" + out : out;
}

Integer rat_floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Rational pow2(long k) {
  Rational r;
  if (k >= 0) {
    Integer n;
    mpz_ui_pow_ui(n.get_mpz_t(), 2, static_cast<unsigned long>(k));
    r = Rational(n);
  } else {
    Integer n;
    mpz_ui_pow_ui(n.get_mpz_t(), 2, static_cast<unsigned long>(-k));
    r = make_rational(Integer(1), n);
  }
  return r;
}

Rational rat_pow(const Rational& b, unsigned long k) {
  Rational acc(1);
  Rational base = b;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonMonotone: return "NonMonotone";
    case ErrorKind::TooFewPoints: return "TooFewPoints";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::BreakpointBudgetExceeded: return "BreakpointBudgetExceeded";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::NotAFixedPoint: return "NotAFixedPoint";
    case ErrorKind::OverlappingSites: return "OverlappingSites";
    case ErrorKind::SharedFixedPoint: return "SharedFixedPoint";
    case ErrorKind::ParityMismatch: return "ParityMismatch";
    case ErrorKind::HasInteriorFixedPoint: return "HasInteriorFixedPoint";
    case ErrorKind::IterationCapExceeded: return "IterationCapExceeded";
    case ErrorKind::OracleEvaluationFailure: return "OracleEvaluationFailure";
    case ErrorKind::OrbitalMismatch: return "OrbitalMismatch";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::PushFailed: return "PushFailed";
    case ErrorKind::NoEscape: return "NoEscape";
  }
  return "UnknownError";
}

int error_kind_exit_code(ErrorKind kind) {
  return 10 + static_cast<int>(kind);
}

}  // namespace hac
