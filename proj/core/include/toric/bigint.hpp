#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form (den > 0, gcd 1). Throws on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

Integer floor_of(const Rational& x);
Integer ceil_of(const Rational& x);
Rational abs_of(const Rational& x);

bool is_integer(const Rational& x);

/// gcd of rationals: the largest positive c with every x_i / c an integer.
/// Returns 0 when all inputs are 0.
Rational rational_gcd(std::span<const Rational> values);

Integer integer_gcd(std::span<const Integer> values);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

/// Parses "p", "p/q" or a decimal "12.345" (optionally signed) exactly.
/// Returns the number of fractional decimal digits through `decimals`
/// (0 for integers and fractions).
Rational parse_rational(const std::string& text, int* decimals = nullptr);

}  // namespace toric
