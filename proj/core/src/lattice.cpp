#include "toric/lattice.hpp"

#include <algorithm>
#include <set>

#include "toric/errors.hpp"

namespace toric {

// ---------------------------------------------------------------------------
// Frames

CoordinateFrame CoordinateFrame::formal(std::vector<std::string> symbols,
                                        std::optional<ScalarVector> values) {
  if (symbols.empty()) throw Error(ErrorKind::kInvalidArgument, "frame needs at least one symbol");
  if (std::set<std::string>(symbols.begin(), symbols.end()).size() != symbols.size()) {
    throw Error(ErrorKind::kInvalidArgument, "frame symbols must be distinct");
  }
  if (values && values->size() != symbols.size()) {
    throw Error(ErrorKind::kInvalidArgument, "frame values must match the symbols");
  }
  CoordinateFrame f;
  f.symbols_ = std::move(symbols);
  f.values_ = std::move(values);
  return f;
}

CoordinateFrame CoordinateFrame::number_field(FieldPtr field, std::vector<std::string> symbols) {
  if (!field) throw Error(ErrorKind::kInvalidArgument, "null number field");
  const auto d = static_cast<std::size_t>(field->degree());
  if (symbols.empty()) {
    symbols.emplace_back("1");
    if (d > 1) symbols.emplace_back("a");
    for (std::size_t i = 2; i < d; ++i) symbols.push_back("a^" + std::to_string(i));
  }
  if (symbols.size() != d) {
    throw Error(ErrorKind::kInvalidArgument, "number-field frame needs one symbol per power");
  }
  CoordinateFrame f = formal(std::move(symbols));
  f.field_ = std::move(field);
  return f;
}

bool operator==(const CoordinateFrame& a, const CoordinateFrame& b) {
  if (a.symbols_ != b.symbols_) return false;
  if (a.is_number_field() != b.is_number_field()) return false;
  if (!a.is_number_field()) return true;
  return a.field_ == b.field_ || a.field_->same_generator(*b.field_);
}

std::optional<Scalar> CoordinateFrame::evaluate(const RationalVector& coords) const {
  if (coords.size() != dimension()) {
    throw Error(ErrorKind::kFrameMismatch, "coordinate vector length differs from the frame");
  }
  if (field_) return Scalar(FieldElement(field_, Poly(coords)));
  if (!values_) return std::nullopt;
  Scalar sum(0);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0) sum = sum + Scalar(coords[i]) * (*values_)[i];
  }
  return sum;
}

RationalVector CoordinateFrame::coordinates(const Scalar& x) const {
  RationalVector out(dimension(), Rational(0));
  if (const Rational* r = x.rational()) {
    out[0] = *r;
    return out;
  }
  const FieldElement* e = x.algebraic();
  if (!e || !field_) {
    throw Error(ErrorKind::kFrameMismatch, "value has no coordinates in this frame");
  }
  if (!(e->field() == field_ || e->field()->same_generator(*field_))) {
    throw Error(ErrorKind::kFieldMismatch, "value lives in a different number field");
  }
  const auto& c = e->rep().coeffs();
  std::copy(c.begin(), c.end(), out.begin());
  return out;
}

// ---------------------------------------------------------------------------
// Lattices

PseudoLattice::PseudoLattice(CoordinateFrame frame, RationalMatrix vectors)
    : frame_(std::move(frame)), vectors_(std::move(vectors)) {
  if (vectors_.empty()) throw Error(ErrorKind::kEmptyInput, "pseudo-lattice needs at least one vector");
  for (const auto& v : vectors_) {
    if (v.size() != frame_.dimension()) {
      throw Error(ErrorKind::kFrameMismatch, "coordinate vector length differs from the frame");
    }
  }
  if (std::all_of(vectors_[0].begin(), vectors_[0].end(), [](const Rational& c) { return c == 0; })) {
    throw Error(ErrorKind::kInvalidArgument, "lambda_1 must be non-zero");
  }
}

PseudoLattice PseudoLattice::from_scalars(const ScalarVector& values) {
  if (values.empty()) throw Error(ErrorKind::kEmptyInput, "empty vector");
  FieldPtr field;
  for (const auto& v : values) {
    if (!v.is_exact()) throw Error(ErrorKind::kInvalidArgument, "pseudo-lattices need exact entries");
    if (v.algebraic() && !field) field = v.algebraic()->field();
  }
  CoordinateFrame frame = field ? CoordinateFrame::number_field(field)
                                : CoordinateFrame::formal({"1"}, ScalarVector{Scalar(1)});
  RationalMatrix rows;
  rows.reserve(values.size());
  for (const auto& v : values) rows.push_back(frame.coordinates(v));
  return PseudoLattice(std::move(frame), std::move(rows));
}

bool PseudoLattice::is_independent() const {
  return hermite_form(vectors_).h.size() == vectors_.size();
}

namespace {

std::optional<ScalarVector> evaluate_all(const CoordinateFrame& frame, const RationalMatrix& rows) {
  ScalarVector out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    auto v = frame.evaluate(r);
    if (!v) return std::nullopt;
    out.push_back(std::move(*v));
  }
  return out;
}

}  // namespace

std::optional<ScalarVector> PseudoLattice::values() const { return evaluate_all(frame_, vectors_); }

std::optional<bool> PseudoLattice::is_positive() const {
  auto v = values();
  if (!v) return std::nullopt;
  return all_positive(*v);
}

ProjectivePseudoLattice::ProjectivePseudoLattice(CoordinateFrame frame, RationalMatrix vectors)
    : frame_(std::move(frame)), vectors_(std::move(vectors)) {
  if (vectors_.empty()) throw Error(ErrorKind::kEmptyInput, "empty projective pseudo-lattice");
  for (const auto& v : vectors_) {
    if (v.size() != frame_.dimension()) {
      throw Error(ErrorKind::kFrameMismatch, "coordinate vector length differs from the frame");
    }
  }
  RationalVector unit(frame_.dimension(), Rational(0));
  unit[0] = 1;
  if (vectors_[0] != unit) throw Error(ErrorKind::kInvalidArgument, "first entry must be exactly 1");
}

std::optional<ScalarVector> ProjectivePseudoLattice::values() const {
  return evaluate_all(frame_, vectors_);
}

PseudoLattice act(const IntMatrix& a, const PseudoLattice& pl) {
  const std::size_t n = pl.rank();
  if (a.rows() != n || a.cols() != n) throw Error(ErrorKind::kRankMismatch, "matrix size differs from the rank");
  if (!a.is_unimodular()) throw Error(ErrorKind::kNotUnimodular, "matrix is not in GL_n(Z)");
  const std::size_t d = pl.frame().dimension();
  RationalMatrix out(n, RationalVector(d, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (a(i, j) == 0) continue;
      const Rational c(a(i, j));
      for (std::size_t t = 0; t < d; ++t) out[j][t] += c * pl.vectors()[i][t];
    }
  }
  return PseudoLattice(pl.frame(), std::move(out));
}

PseudoLattice scale(const Rational& c, const PseudoLattice& pl) {
  RationalMatrix out = pl.vectors();
  for (auto& row : out) {
    for (auto& x : row) x *= c;
  }
  return PseudoLattice(pl.frame(), std::move(out));
}

ProjectivePseudoLattice project(const PseudoLattice& pl) {
  const CoordinateFrame& frame = pl.frame();
  const RationalVector& lead = pl.vectors()[0];
  RationalMatrix out;
  out.reserve(pl.rank());
  if (frame.is_number_field()) {
    Scalar l1 = *frame.evaluate(lead);
    if (sign(l1) <= 0) {
      throw Error(ErrorKind::kNonInvertibleLeadingEntry, "lambda_1 must be positive");
    }
    for (const auto& v : pl.vectors()) out.push_back(frame.coordinates(*frame.evaluate(v) / l1));
    return ProjectivePseudoLattice(frame, std::move(out));
  }
  const bool unit_multiple =
      std::all_of(lead.begin() + 1, lead.end(), [](const Rational& c) { return c == 0; });
  if (!unit_multiple || lead[0] <= 0) {
    throw Error(ErrorKind::kNonInvertibleLeadingEntry,
                "lambda_1 must be a positive rational multiple of the unit symbol");
  }
  const Rational inv = 1 / lead[0];
  for (const auto& v : pl.vectors()) {
    RationalVector row = v;
    for (auto& x : row) x *= inv;
    out.push_back(std::move(row));
  }
  return ProjectivePseudoLattice(frame, std::move(out));
}

// ---------------------------------------------------------------------------
// Hermite normal form

HermiteForm hermite_form(const RationalMatrix& rows) {
  const std::size_t n = rows.size();
  const std::size_t d = n == 0 ? 0 : rows[0].size();
  Integer den = 1;
  for (const auto& r : rows) {
    for (const auto& x : r) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  IntMatrix a(n, d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Rational scaled = rows[i][j] * den;
      a(i, j) = scaled.get_num();
    }
  }
  IntMatrix u = IntMatrix::identity(n);
  auto combine_rows = [&](IntMatrix& m, std::size_t r1, std::size_t r2, const Integer& x,
                          const Integer& y, const Integer& z, const Integer& w) {
    // (row r1, row r2) <- (x r1 + y r2, z r1 + w r2)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Integer v1 = x * m(r1, c) + y * m(r2, c);
      Integer v2 = z * m(r1, c) + w * m(r2, c);
      m(r1, c) = std::move(v1);
      m(r2, c) = std::move(v2);
    }
  };
  HermiteForm out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < d && row < n; ++col) {
    for (std::size_t i = row + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      Integer g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a(row, col).get_mpz_t(), a(i, col).get_mpz_t());
      Integer z = -a(i, col) / g;
      Integer w = a(row, col) / g;
      combine_rows(a, row, i, x, y, z, w);
      combine_rows(u, row, i, x, y, z, w);
    }
    if (a(row, col) == 0) continue;
    if (a(row, col) < 0) {
      for (std::size_t c = 0; c < d; ++c) a(row, c) = -a(row, c);
      for (std::size_t c = 0; c < n; ++c) u(row, c) = -u(row, c);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(), a(row, col).get_mpz_t());
      if (q == 0) continue;
      for (std::size_t c = 0; c < d; ++c) a(i, c) -= q * a(row, c);
      for (std::size_t c = 0; c < n; ++c) u(i, c) -= q * u(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  for (std::size_t i = 0; i < row; ++i) {
    RationalVector r(d);
    for (std::size_t j = 0; j < d; ++j) r[j] = make_rational(a(i, j), den);
    out.h.push_back(std::move(r));
  }
  out.transform = std::move(u);
  return out;
}

std::string_view isomorphism_name(Isomorphism v) {
  switch (v) {
    case Isomorphism::kNo: return "no";
    case Isomorphism::kYes: return "yes";
    case Isomorphism::kInconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

void require_same_frame(const CoordinateFrame& a, const CoordinateFrame& b) {
  if (!(a == b)) throw Error(ErrorKind::kFrameMismatch, "pseudo-lattices use different frames");
}

// T with rows(q) = T^T rows(p), given U_p p = U_q q = [h; 0].
IntMatrix witness_from(const HermiteForm& hp, const HermiteForm& hq) {
  return (hq.transform.inverse() * hp.transform).transpose();
}

RationalMatrix scaled(const RationalMatrix& m, const Rational& c) {
  RationalMatrix out = m;
  for (auto& row : out) {
    for (auto& x : row) x *= c;
  }
  return out;
}

}  // namespace

PlIsomorphism pl_isomorphic(const PseudoLattice& p, const PseudoLattice& q) {
  require_same_frame(p.frame(), q.frame());
  if (p.rank() != q.rank()) throw Error(ErrorKind::kRankMismatch, "pseudo-lattices of different rank");
  HermiteForm hp = hermite_form(p.vectors());
  HermiteForm hq = hermite_form(q.vectors());
  PlIsomorphism out;
  if (hp.h != hq.h) return out;
  out.verdict = Isomorphism::kYes;
  out.witness = witness_from(hp, hq);
  return out;
}

bool contains(const PseudoLattice& p, const PseudoLattice& q) {
  require_same_frame(p.frame(), q.frame());
  HermiteForm hp = hermite_form(p.vectors());
  for (RationalVector v : q.vectors()) {
    for (std::size_t r = 0; r < hp.h.size(); ++r) {
      const std::size_t col = hp.pivots[r];
      Rational coef = v[col] / hp.h[r][col];
      if (!is_integer(coef)) return false;
      if (coef == 0) continue;
      for (std::size_t c = 0; c < v.size(); ++c) v[c] -= coef * hp.h[r][c];
    }
    if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return x != 0; })) return false;
  }
  return true;
}

PplIsomorphism ppl_isomorphic(const ProjectivePseudoLattice& p, const ProjectivePseudoLattice& q) {
  require_same_frame(p.frame(), q.frame());
  if (p.rank() != q.rank()) throw Error(ErrorKind::kRankMismatch, "projective pseudo-lattices of different rank");
  HermiteForm hp = hermite_form(p.vectors());
  HermiteForm hq = hermite_form(q.vectors());
  PplIsomorphism out;
  if (!hp.h.empty() && hp.pivots == hq.pivots) {
    const std::size_t col = hp.pivots[0];
    const Rational c = hq.h[0][col] / hp.h[0][col];
    if (scaled(hp.h, c) == hq.h) {
      out.verdict = Isomorphism::kYes;
      out.scale = Scalar(c);
      out.witness = witness_from(hermite_form(scaled(p.vectors(), c)), hq);
      return out;
    }
  }
  if (!p.frame().is_number_field()) return out;

  // c^(-1) lies in the module of p: try small integer combinations.
  const CoordinateFrame& frame = p.frame();
  const std::size_t n = p.rank();
  const std::size_t d = frame.dimension();
  std::vector<long> k(n, -2);
  ScalarVector lambdas = *p.values();
  auto advance = [&]() {
    for (std::size_t i = 0; i < n; ++i) {
      if (++k[i] <= 2) return true;
      k[i] = -2;
    }
    return false;
  };
  do {
    RationalVector combo(d, Rational(0));
    bool zero = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (k[i] == 0) continue;
      zero = false;
      for (std::size_t t = 0; t < d; ++t) combo[t] += Rational(k[i]) * p.vectors()[i][t];
    }
    if (zero) continue;
    Scalar s = *frame.evaluate(combo);
    if (s.rational()) continue;  // rational c was settled above
    if (sign(s) <= 0) continue;
    Scalar c = Scalar(1) / s;
    RationalMatrix rows;
    rows.reserve(n);
    for (const auto& l : lambdas) rows.push_back(frame.coordinates(c * l));
    HermiteForm hc = hermite_form(rows);
    if (hc.h == hq.h) {
      out.verdict = Isomorphism::kYes;
      out.scale = c;
      out.witness = witness_from(hc, hq);
      return out;
    }
  } while (advance());
  out.verdict = Isomorphism::kInconclusive;
  return out;
}

long genus_rank(long g) {
  if (g < 1) throw Error(ErrorKind::kInvalidGenus, "genus must be at least 1, got " + std::to_string(g));
  return g == 1 ? 2 : 6 * g - 6;
}

}  // namespace toric
