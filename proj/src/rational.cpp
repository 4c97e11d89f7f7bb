#include "schemeforge/rational.hpp"

#include <cctype>

#include "schemeforge/errors.hpp"

namespace schemeforge {

const char* to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::kNonnegative: return "nonnegative";
    case Hypothesis::kDoublyStochastic: return "lambda-doubly stochastic";
    case Hypothesis::kIrreducible: return "irreducible";
    case Hypothesis::kNormal: return "normal";
    case Hypothesis::kNonzeroLambda: return "of nonzero line sum";
  }
  return "?";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

namespace {

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool parse_signed_integer(std::string_view s, Integer& out) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty() || !all_digits(s)) return false;
  out = Integer(std::string(s), 10);
  if (negative) out = -out;
  return true;
}

}  // namespace

bool try_parse_rational(std::string_view token, Rational& out) {
  if (token.empty()) return false;

  if (auto slash = token.find('/'); slash != std::string_view::npos) {
    Integer num;
    Integer den;
    std::string_view den_text = token.substr(slash + 1);
    if (!parse_signed_integer(token.substr(0, slash), num)) return false;
    if (den_text.empty() || !all_digits(den_text)) return false;
    den = Integer(std::string(den_text), 10);
    if (den == 0) return false;
    out = make_rational(num, den);
    return true;
  }

  std::string_view body = token;
  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto dot = body.find('.');
  std::string_view whole = body.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  if (whole.empty() && frac.empty()) return false;
  if (!all_digits(whole) || !all_digits(frac)) return false;

  std::string digits(whole);
  digits.append(frac);
  Integer num(digits.empty() ? std::string("0") : digits, 10);
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  if (negative) num = -num;
  out = make_rational(num, den);
  return true;
}

Rational parse_rational(std::string_view token) {
  Rational r;
  if (!try_parse_rational(token, r)) {
    throw PreconditionError("not an exact number: '" + std::string(token) + "'");
  }
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace schemeforge
