#include "toric/number_field.hpp"

#include <algorithm>

#include "toric/errors.hpp"

namespace toric {

namespace {

// Distinct roots of p in the closed interval [lo, hi].
int count_closed(const Poly& p, const Rational& lo, const Rational& hi) {
  if (lo > hi) return 0;
  if (lo == hi) return p.sign_at(lo) == 0 ? 1 : 0;
  auto chain = sturm_chain(p);
  return count_roots(chain, lo, hi) + (p.sign_at(lo) == 0 ? 1 : 0);
}

}  // namespace

NumberField::NumberField(Poly defining, RationalInterval isolating, int lo_sign)
    : defining_(std::move(defining)),
      isolating_(std::move(isolating)),
      lo_sign_(lo_sign),
      cache_(isolating_) {}

FieldPtr NumberField::make(const Poly& defining, const RationalInterval& isolating) {
  if (defining.degree() < 1) {
    throw Error(ErrorKind::kInvalidArgument, "defining polynomial must have degree >= 1");
  }
  if (isolating.lo > isolating.hi) {
    throw Error(ErrorKind::kInvalidArgument, "isolating interval has lo > hi");
  }
  Poly p = defining.primitive();
  if (!is_square_free(p)) {
    throw Error(ErrorKind::kInvalidArgument, "defining polynomial is not square-free");
  }
  if (count_closed(p, isolating.lo, isolating.hi) != 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "interval does not isolate exactly one root of the defining polynomial");
  }
  RationalInterval iso = isolating;
  // A root sitting on an endpoint collapses the interval to that point.
  if (p.sign_at(iso.lo) == 0) {
    iso.hi = iso.lo;
  } else if (p.sign_at(iso.hi) == 0) {
    iso.lo = iso.hi;
  }
  int lo_sign = iso.is_point() ? 0 : p.sign_at(iso.lo);
  return FieldPtr(new NumberField(std::move(p), iso, lo_sign));
}

RationalInterval NumberField::enclosure() const {
  std::lock_guard<std::mutex> lock(mu_);
  return cache_;
}

RationalInterval NumberField::refine(int steps) const {
  std::lock_guard<std::mutex> lock(mu_);
  for (int i = 0; i < steps && !cache_.is_point(); ++i) {
    Rational mid = cache_.midpoint();
    int s = defining_.sign_at(mid);
    if (s == 0) {
      cache_ = {mid, mid};
    } else if (s == lo_sign_) {
      cache_.lo = mid;
    } else {
      cache_.hi = mid;
    }
  }
  return cache_;
}

RationalInterval NumberField::refine_to_width(const Rational& width) const {
  RationalInterval enc = enclosure();
  while (enc.width() > width) enc = refine(4);
  return enc;
}

std::optional<Rational> NumberField::exact_generator() const {
  RationalInterval enc = enclosure();
  if (enc.is_point()) return enc.lo;
  return std::nullopt;
}

bool NumberField::same_generator(const NumberField& other) const {
  if (this == &other) return true;
  if (!(defining_ == other.defining_)) return false;
  Rational lo = std::max(isolating_.lo, other.isolating_.lo);
  Rational hi = std::min(isolating_.hi, other.isolating_.hi);
  return count_closed(defining_, lo, hi) == 1;
}

bool NumberField::generator_is_root_of(const Poly& g) const {
  if (g.degree() < 1) return g.is_zero();
  if (isolating_.is_point()) return g.sign_at(isolating_.lo) == 0;
  if (auto exact = exact_generator()) return g.sign_at(*exact) == 0;
  // g divides the defining polynomial, so it has at most one simple root in
  // the isolating interval and none at its endpoints.
  return g.sign_at(isolating_.lo) * g.sign_at(isolating_.hi) < 0;
}

FieldElement::FieldElement(FieldPtr field, Poly rep) : field_(std::move(field)) {
  rep_ = rep.degree() >= field_->degree() ? rep % field_->defining() : std::move(rep);
}

FieldElement FieldElement::generator(FieldPtr field) {
  Poly x = Poly::monomial(1, 1);
  return FieldElement(std::move(field), std::move(x));
}

FieldElement FieldElement::from_rational(FieldPtr field, const Rational& c) {
  return FieldElement(std::move(field), Poly::constant(c));
}

std::optional<Rational> FieldElement::as_rational() const {
  if (rep_.is_zero()) return Rational(0);
  if (rep_.is_constant()) return rep_.leading();
  if (auto exact = field_->exact_generator()) return rep_.eval(*exact);
  return std::nullopt;
}

bool FieldElement::is_zero() const {
  if (auto r = as_rational()) return *r == 0;
  Poly g = gcd(rep_, field_->defining());
  if (g.degree() < 1) return false;
  return field_->generator_is_root_of(g);
}

RationalInterval FieldElement::enclosure() const {
  if (auto r = as_rational()) return {*r, *r};
  return rep_.eval(field_->enclosure());
}

int FieldElement::sign(int budget) const {
  if (auto r = as_rational()) return sgn(*r);
  if (is_zero()) return 0;
  int spent = 0;
  while (true) {
    RationalInterval enc = rep_.eval(field_->enclosure());
    if (enc.lo > 0) return 1;
    if (enc.hi < 0) return -1;
    if (enc.is_point()) return sgn(enc.lo);
    if (spent >= budget) {
      throw Error(ErrorKind::kIndeterminateComparison,
                  "refinement budget exhausted while deciding an algebraic sign");
    }
    field_->refine(2);
    spent += 2;
  }
}

RationalInterval FieldElement::enclosure(const Rational& width, int budget) const {
  if (auto r = as_rational()) return {*r, *r};
  int spent = 0;
  while (true) {
    RationalInterval enc = rep_.eval(field_->enclosure());
    if (enc.width() <= width) return enc;
    if (spent >= budget) {
      throw Error(ErrorKind::kIndeterminateComparison,
                  "refinement budget exhausted while tightening an enclosure");
    }
    field_->refine(2);
    spent += 2;
  }
}

const FieldPtr& common_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() == b.field() || a.field()->same_generator(*b.field())) return a.field();
  throw Error(ErrorKind::kFieldMismatch, "algebraic values live in different number fields");
}

FieldElement FieldElement::operator-() const { return FieldElement(field_, -rep_); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return FieldElement(common_field(a, b), a.rep_ + b.rep_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return FieldElement(common_field(a, b), a.rep_ - b.rep_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return FieldElement(common_field(a, b), a.rep_ * b.rep_);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::kDivisionByZero, "inverse of zero");
  if (rep_.is_constant()) return FieldElement(field_, Poly::constant(1 / rep_.leading()));
  const Poly& p = field_->defining();
  Poly g = gcd(rep_, p);
  // When g is non-trivial the generator is a root of p/g (is_zero ruled out g).
  Poly modulus = g.degree() >= 1 ? p / g : p;
  InverseResult inv = half_extended_gcd(rep_ % modulus, modulus);
  return FieldElement(field_, inv.cofactor);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const FieldPtr& f = common_field(a, b);
  return FieldElement(f, a.rep_) * b.inverse();
}

std::pair<Poly, RationalInterval> FieldElement::defining_root(int budget) const {
  if (auto r = as_rational()) {
    Poly linear(std::vector<Rational>{-*r, Rational(1)});
    return {linear.primitive(), RationalInterval{*r, *r}};
  }
  const Poly& p = field_->defining();
  const int d = p.degree();
  // Multiplication-by-rep matrix on the power basis.
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(d),
                                       std::vector<Rational>(static_cast<std::size_t>(d), Rational(0)));
  Poly column = rep_;
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = column.coeff(i);
    column = (column * Poly::monomial(1, 1)) % p;
  }
  Poly q = square_free_part(characteristic_polynomial(m)).primitive();
  auto chain = sturm_chain(q);
  int spent = 0;
  while (true) {
    RationalInterval enc = enclosure();
    if (q.sign_at(enc.lo) != 0 && q.sign_at(enc.hi) != 0 &&
        count_roots(chain, enc.lo, enc.hi) == 1) {
      return {q, enc};
    }
    if (enc.is_point()) return {q, enc};
    if (spent >= budget * 4) {
      throw Error(ErrorKind::kIndeterminateComparison, "could not isolate algebraic value");
    }
    field_->refine(2);
    spent += 2;
  }
}

}  // namespace toric
