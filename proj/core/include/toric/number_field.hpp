#pragma once

#include <memory>
#include <mutex>
#include <optional>

#include "toric/poly.hpp"

namespace toric {

/// Default number of bisection steps a single sign or floor decision may
/// spend refining an isolating interval.
inline constexpr int kDefaultRefinementBudget = 256;

/// Q(alpha) for a real root alpha of a square-free integer polynomial,
/// pinned down by an isolating interval. The polynomial need not be
/// irreducible: zero tests split it on demand (gcd with the element).
///
/// Instances are shared between elements and never change observable
/// state. A mutex-guarded cache remembers the tightest enclosure of alpha
/// found so far so repeated sign decisions do not redo the bisection.
class NumberField {
 public:
  /// Validates square-freeness and that exactly one root lies in the
  /// interval; a degenerate interval [r, r] is accepted if p(r) = 0.
  static std::shared_ptr<const NumberField> make(const Poly& defining,
                                                 const RationalInterval& isolating);

  const Poly& defining() const { return defining_; }
  const RationalInterval& isolating() const { return isolating_; }
  int degree() const { return defining_.degree(); }

  /// Tightest known enclosure of the generator.
  RationalInterval enclosure() const;
  /// Halves the cached enclosure `steps` times (stops early at an exact root).
  RationalInterval refine(int steps) const;
  /// Refines until the enclosure is no wider than `width`.
  RationalInterval refine_to_width(const Rational& width) const;

  /// Exact value of the generator when bisection has landed on a rational root.
  std::optional<Rational> exact_generator() const;

  /// Same polynomial and same root (not just equal pointers).
  bool same_generator(const NumberField& other) const;

  /// True when the polynomial g, a divisor of the defining polynomial,
  /// vanishes at the generator.
  bool generator_is_root_of(const Poly& g) const;

 private:
  NumberField(Poly defining, RationalInterval isolating, int lo_sign);

  Poly defining_;
  RationalInterval isolating_;
  int lo_sign_;
  mutable std::mutex mu_;
  mutable RationalInterval cache_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// r(alpha) with deg r < deg p.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Poly rep);
  static FieldElement generator(FieldPtr field);
  static FieldElement from_rational(FieldPtr field, const Rational& c);

  const FieldPtr& field() const { return field_; }
  const Poly& rep() const { return rep_; }

  /// The value is rational when the representative is constant.
  std::optional<Rational> as_rational() const;

  bool is_zero() const;
  /// Exact sign; refines the generator as needed. Throws
  /// IndeterminateComparison when the budget runs out first.
  int sign(int budget = kDefaultRefinementBudget) const;
  RationalInterval enclosure() const;
  /// Enclosure of the value of width at most `width`.
  RationalInterval enclosure(const Rational& width, int budget = kDefaultRefinementBudget) const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  FieldElement inverse() const;
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

  /// Square-free integer polynomial having this value as a root, together
  /// with an interval isolating that root among the polynomial's roots.
  std::pair<Poly, RationalInterval> defining_root(int budget = kDefaultRefinementBudget) const;

 private:
  FieldPtr field_;
  Poly rep_;
};

/// Throws FieldMismatch unless both elements live over the same generator.
const FieldPtr& common_field(const FieldElement& a, const FieldElement& b);

}  // namespace toric
