#pragma once

#include <utility>
#include <vector>

#include "toric/bigint.hpp"

namespace toric {

/// Closed rational interval [lo, hi].
struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool is_point() const { return lo == hi; }
  bool operator==(const RationalInterval&) const = default;
};

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator-(const RationalInterval& a);
/// Throws DivisionByZero when b contains 0.
RationalInterval operator/(const RationalInterval& a, const RationalInterval& b);
RationalInterval hull(const RationalInterval& a, const RationalInterval& b);

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first. The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  Poly derivative() const;
  Poly monic() const;
  /// Scales to integer coefficients with content 1 and positive leading term.
  Poly primitive() const;

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const;
  RationalInterval eval(const RationalInterval& x) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);

/// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);

/// s with s*a = g (mod m), g = gcd(a, m) monic.
struct InverseResult {
  Poly gcd;
  Poly cofactor;
};
InverseResult half_extended_gcd(const Poly& a, const Poly& m);

Poly square_free_part(const Poly& p);
bool is_square_free(const Poly& p);

/// Sturm chain of p (p, p', -rem, ...).
std::vector<Poly> sturm_chain(const Poly& p);
/// Number of distinct real roots in the half-open interval (lo, hi].
int count_roots(const std::vector<Poly>& chain, const Rational& lo, const Rational& hi);

/// Characteristic polynomial det(xI - M) of a square rational matrix
/// given in row-major order.
Poly characteristic_polynomial(const std::vector<std::vector<Rational>>& m);

}  // namespace toric
