#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "toric/number_field.hpp"

namespace toric {

enum class Ordering { kLess, kEqual, kGreater, kIndeterminate };

std::string_view ordering_name(Ordering o);

/// A real number in one of three representations:
///  - Rational: exact fraction;
///  - Algebraic: exact element of a real number field;
///  - Interval: certified rational bounds without a refinement oracle.
///
/// Algebraic values that collapse to a rational are stored as Rational.
class Scalar {
 public:
  enum class Kind { kRational, kAlgebraic, kInterval };

  Scalar() : value_(Rational(0)) {}
  Scalar(const Rational& r) : value_(r) {}
  Scalar(const Integer& z) : value_(Rational(z)) {}
  Scalar(long v) : value_(Rational(v)) {}
  Scalar(int v) : value_(Rational(v)) {}
  explicit Scalar(const FieldElement& e);
  static Scalar interval(const Rational& lo, const Rational& hi);

  Kind kind() const { return static_cast<Kind>(value_.index()); }
  bool is_exact() const { return kind() != Kind::kInterval; }

  const Rational* rational() const { return std::get_if<Rational>(&value_); }
  const FieldElement* algebraic() const { return std::get_if<FieldElement>(&value_); }
  const RationalInterval* interval() const { return std::get_if<RationalInterval>(&value_); }

  /// Current certified bounds (a point for rationals).
  RationalInterval enclosure() const;
  double to_double() const;
  std::string to_string() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  /// Throws DivisionByZero for exact zero; IndeterminateComparison for an
  /// interval divisor containing zero.
  friend Scalar operator/(const Scalar& a, const Scalar& b);

 private:
  std::variant<Rational, FieldElement, RationalInterval> value_;
};

using ScalarVector = std::vector<Scalar>;

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// floor(x). Algebraic inputs are refined until the floor is certain;
/// Interval inputs throw IndeterminateFloor when they straddle an integer.
Integer floor_exact(const Scalar& x, int budget = kDefaultRefinementBudget);

/// Exact ordering for Rational/Algebraic pairs (including different number
/// fields); Indeterminate only when an Interval is involved and overlaps.
Ordering compare(const Scalar& x, const Scalar& y, int budget = kDefaultRefinementBudget);

/// Sign of x; throws IndeterminateComparison when it cannot be decided.
int sign(const Scalar& x, int budget = kDefaultRefinementBudget);
bool is_zero(const Scalar& x);

/// Exact equality; throws IndeterminateComparison for undecidable intervals.
bool exactly_equal(const Scalar& x, const Scalar& y);

struct RefineResult {
  Scalar value;
  bool no_op = false;
};

/// Returns x with an isolating interval of width <= eps. Rationals come
/// back unchanged; Intervals come back unchanged and flagged no-op.
RefineResult refine(const Scalar& x, const Rational& eps);

bool all_positive(const ScalarVector& v);
bool all_exact(const ScalarVector& v);

/// Exact test that b = c*a for some c > 0 (a, b of equal length).
bool projectively_equal(const ScalarVector& a, const ScalarVector& b);

/// Divides every entry by the first one.
ScalarVector normalize_leading(const ScalarVector& v);

}  // namespace toric
