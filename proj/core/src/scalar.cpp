#include "toric/scalar.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

namespace {

const Rational& tiny_width() {
  static const Rational w = [] {
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, 64);
    return Rational(Integer(1), den);
  }();
  return w;
}

// Distinct roots of p in the closed interval [lo, hi].
int roots_in_closed(const Poly& p, const RationalInterval& iv) {
  if (iv.is_point()) return p.sign_at(iv.lo) == 0 ? 1 : 0;
  auto chain = sturm_chain(p);
  return count_roots(chain, iv.lo, iv.hi) + (p.sign_at(iv.lo) == 0 ? 1 : 0);
}

RationalInterval tight_enclosure(const Scalar& s) {
  if (const auto* e = s.algebraic()) return e->enclosure(tiny_width());
  return s.enclosure();
}

Ordering order_intervals(const RationalInterval& a, const RationalInterval& b) {
  if (a.hi < b.lo) return Ordering::kLess;
  if (a.lo > b.hi) return Ordering::kGreater;
  if (a.is_point() && b.is_point() && a.lo == b.lo) return Ordering::kEqual;
  return Ordering::kIndeterminate;
}

Ordering from_sign(int s) {
  return s < 0 ? Ordering::kLess : (s > 0 ? Ordering::kGreater : Ordering::kEqual);
}

// Ordering of algebraic values drawn from unrelated fields.
Ordering compare_roots(const FieldElement& a, const FieldElement& b, int budget) {
  auto [qa, ia] = a.defining_root(budget);
  auto [qb, ib] = b.defining_root(budget);
  Poly g = gcd(qa, qb);
  const bool a_on_g = g.degree() >= 1 && roots_in_closed(g, ia) == 1;
  const bool b_on_g = g.degree() >= 1 && roots_in_closed(g, ib) == 1;
  int spent = 0;
  while (true) {
    RationalInterval ea = a.enclosure();
    RationalInterval eb = b.enclosure();
    Ordering o = order_intervals(ea, eb);
    if (o != Ordering::kIndeterminate) return o;
    if (a_on_g && b_on_g && roots_in_closed(g, hull(ea, eb)) == 1) return Ordering::kEqual;
    if (spent >= budget * 4) {
      throw Error(ErrorKind::kIndeterminateComparison, "could not separate algebraic values");
    }
    a.field()->refine(2);
    b.field()->refine(2);
    spent += 2;
  }
}

FieldElement lift(const Scalar& s, const FieldPtr& field) {
  if (const auto* r = s.rational()) return FieldElement::from_rational(field, *r);
  return *s.algebraic();
}

template <typename ExactOp, typename IntervalOp>
Scalar combine(const Scalar& a, const Scalar& b, ExactOp exact_op, IntervalOp interval_op) {
  using K = Scalar::Kind;
  if (a.kind() == K::kInterval || b.kind() == K::kInterval) {
    return [&] {
      RationalInterval r = interval_op(tight_enclosure(a), tight_enclosure(b));
      return Scalar::interval(r.lo, r.hi);
    }();
  }
  if (a.kind() == K::kRational && b.kind() == K::kRational) {
    Rational r = exact_op(*a.rational(), *b.rational());
    return Scalar(r);
  }
  const FieldPtr& field = a.algebraic() ? a.algebraic()->field() : b.algebraic()->field();
  FieldElement e = exact_op(lift(a, field), lift(b, field));
  return Scalar(e);
}

}  // namespace

std::string_view ordering_name(Ordering o) {
  switch (o) {
    case Ordering::kLess: return "LT";
    case Ordering::kEqual: return "EQ";
    case Ordering::kGreater: return "GT";
    case Ordering::kIndeterminate: return "INDETERMINATE";
  }
  return "?";
}

Scalar::Scalar(const FieldElement& e) {
  if (auto r = e.as_rational()) {
    value_ = *r;
  } else {
    value_ = e;
  }
}

Scalar Scalar::interval(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw Error(ErrorKind::kInvalidArgument, "interval with lo > hi");
  Scalar s;
  s.value_ = RationalInterval{lo, hi};
  return s;
}

RationalInterval Scalar::enclosure() const {
  switch (kind()) {
    case Kind::kRational: return {*rational(), *rational()};
    case Kind::kAlgebraic: return algebraic()->enclosure();
    case Kind::kInterval: return *interval();
  }
  return {};
}

double Scalar::to_double() const { return tight_enclosure(*this).midpoint().get_d(); }

std::string Scalar::to_string() const {
  std::ostringstream os;
  switch (kind()) {
    case Kind::kRational:
      os << rational()->get_str();
      break;
    case Kind::kAlgebraic:
      os << "alg~" << std::setprecision(15) << to_double();
      break;
    case Kind::kInterval:
      os << "[" << interval()->lo.get_str() << ", " << interval()->hi.get_str() << "]";
      break;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar Scalar::operator-() const {
  switch (kind()) {
    case Kind::kRational: return Scalar(Rational(-*rational()));
    case Kind::kAlgebraic: return Scalar(-*algebraic());
    case Kind::kInterval: return interval(-interval()->hi, -interval()->lo);
  }
  return {};
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(
      a, b, [](const auto& x, const auto& y) { return x + y; },
      [](const RationalInterval& x, const RationalInterval& y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(
      a, b, [](const auto& x, const auto& y) { return x - y; },
      [](const RationalInterval& x, const RationalInterval& y) { return x - y; });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(
      a, b, [](const auto& x, const auto& y) { return x * y; },
      [](const RationalInterval& x, const RationalInterval& y) { return x * y; });
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_exact() && is_zero(b)) throw Error(ErrorKind::kDivisionByZero, "division by zero");
  if (!b.is_exact()) {
    const auto& iv = *b.interval();
    if (iv.lo <= 0 && iv.hi >= 0) {
      throw Error(ErrorKind::kIndeterminateComparison, "interval divisor straddles zero");
    }
  }
  return combine(
      a, b,
      [](const auto& x, const auto& y) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return Rational(x / y);
        } else {
          return x / y;
        }
      },
      [](const RationalInterval& x, const RationalInterval& y) { return x / y; });
}

Integer floor_exact(const Scalar& x, int budget) {
  switch (x.kind()) {
    case Scalar::Kind::kRational:
      return floor_of(*x.rational());
    case Scalar::Kind::kInterval: {
      const auto& iv = *x.interval();
      Integer lo = floor_of(iv.lo);
      if (lo == floor_of(iv.hi)) return lo;
      throw Error(ErrorKind::kIndeterminateFloor,
                  "interval [" + iv.lo.get_str() + ", " + iv.hi.get_str() + "] straddles an integer");
    }
    case Scalar::Kind::kAlgebraic: {
      const FieldElement& e = *x.algebraic();
      try {
        RationalInterval enc = e.enclosure(Rational(1, 2), budget);
        Integer candidate = ceil_of(enc.lo);
        if (candidate > enc.hi) return floor_of(enc.lo);
        // Exactly one integer inside the enclosure: decide x >= candidate.
        FieldElement diff = e - FieldElement::from_rational(e.field(), Rational(candidate));
        return diff.sign(budget) >= 0 ? candidate : Integer(candidate - 1);
      } catch (const Error& err) {
        if (err.kind() == ErrorKind::kIndeterminateComparison) {
          throw Error(ErrorKind::kIndeterminateFloor, err.what());
        }
        throw;
      }
    }
  }
  return 0;
}

int sign(const Scalar& x, int budget) {
  switch (x.kind()) {
    case Scalar::Kind::kRational: return sgn(*x.rational());
    case Scalar::Kind::kAlgebraic: return x.algebraic()->sign(budget);
    case Scalar::Kind::kInterval: {
      const auto& iv = *x.interval();
      if (iv.lo > 0) return 1;
      if (iv.hi < 0) return -1;
      if (iv.lo == 0 && iv.hi == 0) return 0;
      throw Error(ErrorKind::kIndeterminateComparison, "interval contains zero");
    }
  }
  return 0;
}

bool is_zero(const Scalar& x) {
  switch (x.kind()) {
    case Scalar::Kind::kRational: return *x.rational() == 0;
    case Scalar::Kind::kAlgebraic: return x.algebraic()->is_zero();
    case Scalar::Kind::kInterval: return sign(x) == 0;
  }
  return false;
}

Ordering compare(const Scalar& x, const Scalar& y, int budget) {
  using K = Scalar::Kind;
  if (x.kind() == K::kInterval || y.kind() == K::kInterval) {
    Ordering o = order_intervals(x.enclosure(), y.enclosure());
    if (o != Ordering::kIndeterminate) return o;
    // An exact operand may still separate after refinement.
    if (x.kind() == K::kAlgebraic || y.kind() == K::kAlgebraic) {
      try {
        o = order_intervals(tight_enclosure(x), tight_enclosure(y));
      } catch (const Error&) {
        return Ordering::kIndeterminate;
      }
    }
    return o;
  }
  if (x.kind() == K::kRational && y.kind() == K::kRational) {
    int c = cmp(*x.rational(), *y.rational());
    return from_sign(c);
  }
  if (x.algebraic() && y.algebraic() &&
      !(x.algebraic()->field() == y.algebraic()->field() ||
        x.algebraic()->field()->same_generator(*y.algebraic()->field()))) {
    return compare_roots(*x.algebraic(), *y.algebraic(), budget);
  }
  return from_sign(sign(x - y, budget));
}

bool exactly_equal(const Scalar& x, const Scalar& y) {
  Ordering o = compare(x, y);
  if (o == Ordering::kIndeterminate) {
    throw Error(ErrorKind::kIndeterminateComparison, "equality of overlapping intervals");
  }
  return o == Ordering::kEqual;
}

RefineResult refine(const Scalar& x, const Rational& eps) {
  if (eps <= 0) throw Error(ErrorKind::kInvalidArgument, "refinement width must be positive");
  switch (x.kind()) {
    case Scalar::Kind::kRational:
      return {x, false};
    case Scalar::Kind::kInterval:
      return {x, x.interval()->width() > eps};
    case Scalar::Kind::kAlgebraic: {
      const FieldElement& e = *x.algebraic();
      const FieldPtr& f = e.field();
      while (e.enclosure().width() > eps) f->refine(4);
      FieldPtr narrowed = NumberField::make(f->defining(), f->enclosure());
      return {Scalar(FieldElement(narrowed, e.rep())), false};
    }
  }
  return {x, true};
}

bool all_positive(const ScalarVector& v) {
  for (const auto& s : v) {
    if (sign(s) <= 0) return false;
  }
  return true;
}

bool all_exact(const ScalarVector& v) {
  for (const auto& s : v) {
    if (!s.is_exact()) return false;
  }
  return true;
}

bool projectively_equal(const ScalarVector& a, const ScalarVector& b) {
  if (a.size() != b.size() || a.empty()) return false;
  std::size_t k = 0;
  while (k < a.size() && is_zero(a[k])) ++k;
  if (k == a.size() || is_zero(b[k])) return false;
  Scalar c = b[k] / a[k];
  if (sign(c) <= 0) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!exactly_equal(b[i], c * a[i])) return false;
  }
  return true;
}

ScalarVector normalize_leading(const ScalarVector& v) {
  if (v.empty()) throw Error(ErrorKind::kEmptyInput, "empty vector");
  ScalarVector out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s / v.front());
  return out;
}

}  // namespace toric
