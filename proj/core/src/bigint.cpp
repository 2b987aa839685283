#include "toric/bigint.hpp"

#include <cctype>

#include "toric/errors.hpp"

namespace toric {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIndeterminateFloor: return "IndeterminateFloor";
    case ErrorKind::kIndeterminateComparison: return "IndeterminateComparison";
    case ErrorKind::kNonPositiveState: return "NonPositiveState";
    case ErrorKind::kEmptyInput: return "EmptyInput";
    case ErrorKind::kNonPositiveEntry: return "NonPositiveEntry";
    case ErrorKind::kDepthExceeded: return "DepthExceeded";
    case ErrorKind::kRankMismatch: return "RankMismatch";
    case ErrorKind::kNotUnimodular: return "NotUnimodular";
    case ErrorKind::kNonInvertibleLeadingEntry: return "NonInvertibleLeadingEntry";
    case ErrorKind::kFrameMismatch: return "FrameMismatch";
    case ErrorKind::kFieldMismatch: return "FieldMismatch";
    case ErrorKind::kInvalidGenus: return "InvalidGenus";
    case ErrorKind::kNoCommonTail: return "NoCommonTail";
    case ErrorKind::kNonPositiveImage: return "NonPositiveImage";
    case ErrorKind::kUnknownGenerator: return "UnknownGenerator";
    case ErrorKind::kDivisionByZero: return "DivisionByZero";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kParseError: return "ParseError";
  }
  return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::kDivisionByZero, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil_of(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational abs_of(const Rational& x) { return x < 0 ? Rational(-x) : x; }

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer integer_gcd(std::span<const Integer> values) {
  Integer g = 0;
  for (const auto& v : values) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  return g;
}

Rational rational_gcd(std::span<const Rational> values) {
  Integer num = 0;
  Integer den = 1;
  for (const auto& v : values) {
    if (v == 0) continue;
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  }
  if (num == 0) return Rational(0);
  return make_rational(num, den);
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& text, int* decimals) {
  if (decimals) *decimals = 0;
  auto fail = [&]() -> Rational {
    throw Error(ErrorKind::kParseError, "not a rational number: '" + text + "'");
  };
  if (text.empty()) return fail();
  std::size_t slash = text.find('/');
  std::size_t dot = text.find('.');
  auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  auto strip_plus = [](std::string s) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return s;
  };
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) return fail();
    return make_rational(Integer(strip_plus(num), 10), Integer(den, 10));
  }
  if (dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    std::string digits = whole;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.erase(0, 1);
    if (digits.empty()) digits = "0";
    if (!valid_int(digits, false) || (!frac.empty() && !valid_int(frac, false))) return fail();
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer num(digits + frac, 10);
    if (negative) num = -num;
    if (decimals) *decimals = static_cast<int>(frac.size());
    return make_rational(num, scale);
  }
  if (!valid_int(text, true)) return fail();
  return Rational(Integer(strip_plus(text), 10));
}

}  // namespace toric
