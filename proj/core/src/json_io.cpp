#include "toric/json_io.hpp"

#include <cmath>

#include "toric/errors.hpp"

namespace toric {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw Error(ErrorKind::kParseError, message + " at " + (path.empty() ? std::string("/") : path));
}

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::size_t size_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Rational pow10(int e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return Rational(p);
}

}  // namespace

Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()), 10);
    return Integer(std::to_string(j.get<long long>()), 10);
  }
  if (j.is_string()) {
    Integer z;
    const std::string& s = j.get_ref<const std::string&>();
    std::string digits = !s.empty() && s[0] == '+' ? s.substr(1) : s;
    if (digits.empty() || z.set_str(digits, 10) != 0) fail(path, "invalid integer \"" + s + "\"");
    return z;
  }
  fail(path, "expected an integer");
}

Json rational_to_json(const Rational& q) {
  return Json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_array()) {
    if (j.size() != 2) fail(path, "expected [numerator, denominator]");
    Integer num = integer_from_json(j[0], at(path, std::size_t{0}));
    Integer den = integer_from_json(j[1], at(path, std::size_t{1}));
    if (den == 0) fail(path, "zero denominator");
    return make_rational(num, den);
  }
  if (j.is_number_integer()) return Rational(integer_from_json(j, path));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected a rational");
}

// ---------------------------------------------------------------------------
// Scalars

FieldPtr ScalarReader::field(const Json& alg, const std::string& path) {
  const Json& poly_j = array_at(member(alg, "poly", path), at(path, "poly"));
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < poly_j.size(); ++i) coeffs.push_back(rational_from_json(poly_j[i], at(at(path, "poly"), i)));
  const Rational lo = rational_from_json(member(alg, "lo", path), at(path, "lo"));
  const Rational hi = rational_from_json(member(alg, "hi", path), at(path, "hi"));
  std::string key;
  for (const auto& c : coeffs) key += c.get_str() + ",";
  key += "|" + lo.get_str() + "|" + hi.get_str();
  auto it = fields_.find(key);
  if (it != fields_.end()) return it->second;
  if (lo > hi) fail(path, "isolating interval has lo > hi");
  FieldPtr f;
  try {
    f = NumberField::make(Poly(coeffs), RationalInterval{lo, hi});
  } catch (const Error& e) {
    fail(path, e.what());
  }
  fields_.emplace(key, f);
  return f;
}

Scalar ScalarReader::scalar(const Json& j, const std::string& path) {
  std::string tag;
  const Json* body = nullptr;
  if (j.is_object() && j.size() == 1) {
    tag = j.begin().key();
    body = &j.begin().value();
  } else if (j.is_array() && j.size() == 2 && j[0].is_string()) {
    tag = j[0].get<std::string>();
    body = &j[1];
  } else if (j.is_number_integer()) {
    return Scalar(integer_from_json(j, path));
  } else if (j.is_number_float()) {
    if (!options_.decimals_as_intervals) fail(path, "floating-point numbers are inexact; quote them as strings");
    const double x = j.get<double>();
    if (!std::isfinite(x)) fail(path, "non-finite number");
    const Rational v(x);
    const Rational h = abs_of(v) * Rational(1, 1UL << 52) + Rational(1, 1UL << 60);
    return Scalar::interval(v - h, v + h);
  } else if (j.is_string()) {
    int decimals = 0;
    Rational v;
    try {
      v = parse_rational(j.get<std::string>(), &decimals);
    } catch (const Error& e) {
      fail(path, e.what());
    }
    if (decimals > 0 && options_.decimals_as_intervals) {
      const Rational h = 1 / (2 * pow10(decimals));
      return Scalar::interval(v - h, v + h);
    }
    return Scalar(v);
  } else {
    fail(path, "expected a scalar");
  }
  const std::string inner = at(path, tag);
  if (tag == "rat") return Scalar(rational_from_json(*body, inner));
  if (tag == "alg") {
    if (!options_.allow_algebraic) fail(path, "algebraic values are not accepted in this mode");
    FieldPtr f = field(*body, inner);
    if (body->contains("coeffs")) {
      const Json& cj = array_at((*body)["coeffs"], at(inner, "coeffs"));
      std::vector<Rational> coeffs;
      for (std::size_t i = 0; i < cj.size(); ++i) coeffs.push_back(rational_from_json(cj[i], at(at(inner, "coeffs"), i)));
      return Scalar(FieldElement(f, Poly(coeffs)));
    }
    return Scalar(FieldElement::generator(f));
  }
  if (tag == "ivl") {
    if (!options_.allow_interval) fail(path, "interval values are not accepted in this mode");
    const Rational lo = rational_from_json(member(*body, "lo", inner), at(inner, "lo"));
    const Rational hi = rational_from_json(member(*body, "hi", inner), at(inner, "hi"));
    if (lo > hi) fail(inner, "interval has lo > hi");
    return Scalar::interval(lo, hi);
  }
  fail(path, "unknown scalar tag \"" + tag + "\"");
}

ScalarVector ScalarReader::vector(const Json& j, const std::string& path) {
  array_at(j, path);
  ScalarVector out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(scalar(j[i], at(path, i)));
  return out;
}

Json field_to_json(const NumberField& f) {
  Json poly = Json::array();
  for (const auto& c : f.defining().coeffs()) {
    poly.push_back(is_integer(c) ? integer_to_json(c.get_num()) : rational_to_json(c));
  }
  return Json{{"poly", poly}, {"lo", rational_to_json(f.isolating().lo)}, {"hi", rational_to_json(f.isolating().hi)}};
}

Json scalar_to_json(const Scalar& s) {
  switch (s.kind()) {
    case Scalar::Kind::kRational:
      return Json{{"rat", rational_to_json(*s.rational())}};
    case Scalar::Kind::kAlgebraic: {
      const FieldElement& e = *s.algebraic();
      Json body = field_to_json(*e.field());
      if (!(e.rep() == Poly({Rational(0), Rational(1)}))) {
        Json coeffs = Json::array();
        for (const auto& c : e.rep().coeffs()) coeffs.push_back(rational_to_json(c));
        body["coeffs"] = coeffs;
      }
      return Json{{"alg", body}};
    }
    case Scalar::Kind::kInterval:
      return Json{{"ivl", {{"lo", rational_to_json(s.interval()->lo)}, {"hi", rational_to_json(s.interval()->hi)}}}};
  }
  return Json();
}

Json vector_to_json(const ScalarVector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

// ---------------------------------------------------------------------------
// Matrices and expansions

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

IntMatrix matrix_from_json(const Json& j, const std::string& path) {
  array_at(j, path);
  std::vector<std::vector<Integer>> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const Json& row = array_at(j[r], at(path, r));
    if (row.size() != j.size()) fail(at(path, r), "matrix must be square");
    std::vector<Integer> vals;
    for (std::size_t c = 0; c < row.size(); ++c) vals.push_back(integer_from_json(row[c], at(at(path, r), c)));
    rows.push_back(std::move(vals));
  }
  if (rows.empty()) fail(path, "empty matrix");
  return IntMatrix(rows);
}

namespace {

Json blocks_to_json(const std::vector<DigitVector>& blocks) {
  Json out = Json::array();
  for (const auto& b : blocks) {
    Json row = Json::array();
    for (const auto& d : b.digits()) row.push_back(integer_to_json(d));
    out.push_back(row);
  }
  return out;
}

std::vector<DigitVector> blocks_from_json(const Json& j, std::size_t rank, const std::string& path) {
  array_at(j, path);
  std::vector<DigitVector> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const Json& row = array_at(j[k], at(path, k));
    if (row.size() + 1 != rank) fail(at(path, k), "digit block length must be rank - 1");
    std::vector<Integer> digits;
    for (std::size_t i = 0; i < row.size(); ++i) {
      Integer d = integer_from_json(row[i], at(at(path, k), i));
      if (d < 0) fail(at(at(path, k), i), "digits must be non-negative");
      digits.push_back(std::move(d));
    }
    out.emplace_back(std::move(digits));
  }
  return out;
}

}  // namespace

Json expansion_to_json(const JpaExpansion& e) {
  Json tail{{"kind", std::string(tail_kind_name(e.tail()))}};
  if (e.tail() == TailKind::kPeriodic) {
    tail["preperiod"] = e.preperiod();
    tail["period"] = blocks_to_json(e.period());
  }
  Json out{{"rank", e.rank()}, {"blocks", blocks_to_json(e.blocks())}, {"tail", tail}};
  if (e.source()) out["theta"] = vector_to_json(*e.source());
  if (e.terminal_scale()) out["terminal_scale"] = rational_to_json(*e.terminal_scale());
  return out;
}

JpaExpansion expansion_from_json(const Json& j, ScalarReader& reader, const std::string& path) {
  const std::size_t rank = size_from_json(member(j, "rank", path), at(path, "rank"));
  if (rank < 2) fail(at(path, "rank"), "rank must be at least 2");
  std::vector<DigitVector> blocks = blocks_from_json(member(j, "blocks", path), rank, at(path, "blocks"));
  std::string kind = "truncated";
  const Json* tail = nullptr;
  if (j.contains("tail")) {
    tail = &j["tail"];
    kind = member(*tail, "kind", at(path, "tail")).get<std::string>();
  }
  std::optional<JpaExpansion> exp;
  try {
    if (kind == "truncated") {
      exp = JpaExpansion::truncated(rank, std::move(blocks));
    } else if (kind == "terminated") {
      exp = JpaExpansion::terminated(rank, std::move(blocks));
    } else if (kind == "periodic") {
      const std::string tp = at(path, "tail");
      const std::size_t pre = size_from_json(member(*tail, "preperiod", tp), at(tp, "preperiod"));
      auto period = blocks_from_json(member(*tail, "period", tp), rank, at(tp, "period"));
      exp = JpaExpansion::periodic(rank, std::move(blocks), pre, std::move(period));
    } else {
      fail(at(at(path, "tail"), "kind"), "unknown tail kind \"" + kind + "\"");
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParseError) throw;
    fail(at(path, "tail"), e.what());
  }
  if (j.contains("theta")) {
    ScalarVector theta = reader.vector(j["theta"], at(path, "theta"));
    if (theta.size() != rank) fail(at(path, "theta"), "theta length must equal the rank");
    exp->set_source(normalize_leading(theta));
  }
  if (j.contains("terminal_scale")) {
    exp->set_terminal_scale(rational_from_json(j["terminal_scale"], at(path, "terminal_scale")));
  }
  return std::move(*exp);
}

Json diagram_to_json(const BratteliDiagram& d) {
  Json out = expansion_to_json(d.source());
  Json mult = Json::array();
  for (const auto& m : d.multiplicities()) mult.push_back(matrix_to_json(m));
  out["diagram"] = Json{{"levels", d.depth()}, {"vertex_levels", d.vertex_levels()}, {"multiplicities", mult}};
  return out;
}

BratteliDiagram diagram_from_json(const Json& j, ScalarReader& reader) {
  JpaExpansion exp = expansion_from_json(j, reader);
  std::size_t levels = exp.depth();
  if (j.contains("diagram")) {
    const Json& d = j["diagram"];
    if (d.contains("levels")) levels = size_from_json(d["levels"], "/diagram/levels");
    if (levels > exp.available_depth()) fail("/diagram/levels", "more levels than digit blocks");
    BratteliDiagram diag = build_diagram(exp, levels);
    if (d.contains("multiplicities")) {
      const Json& mj = array_at(d["multiplicities"], "/diagram/multiplicities");
      bool same = mj.size() == diag.depth();
      for (std::size_t k = 0; same && k < mj.size(); ++k) {
        same = matrix_from_json(mj[k], at("/diagram/multiplicities", k)) == diag.multiplicity(k);
      }
      if (!same) fail("/diagram/multiplicities", "multiplicities disagree with the digit blocks");
    }
    return diag;
  }
  return build_diagram(exp, levels);
}

Json tail_decision_to_json(const TailDecision& d) {
  Json out{{"verdict", std::string(tail_verdict_name(d.verdict))}, {"depth", d.depth}};
  if (d.has_offsets) out["offsets"] = Json::array({d.p, d.q});
  if (!d.note.empty()) out["note"] = d.note;
  return out;
}

Json stationarity_to_json(const StationarityReport& r) {
  Json out{{"stationary", r.stationary}, {"from_first_level", r.from_first_level}};
  if (r.stationary) {
    out["preperiod"] = r.preperiod;
    out["period"] = blocks_to_json(r.period);
  }
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

// ---------------------------------------------------------------------------
// Lattices

Json lattice_to_json(const PseudoLattice& pl) {
  Json vectors = Json::array();
  for (const auto& v : pl.vectors()) {
    Json row = Json::array();
    for (const auto& c : v) row.push_back(rational_to_json(c));
    vectors.push_back(row);
  }
  Json out{{"frame", pl.frame().symbols()}, {"vectors", vectors}};
  if (pl.frame().is_number_field()) out["field"] = field_to_json(*pl.frame().field());
  if (pl.frame().values()) out["values"] = vector_to_json(*pl.frame().values());
  return out;
}

PseudoLattice lattice_from_json(const Json& j, ScalarReader& reader) {
  const Json& fj = array_at(member(j, "frame", ""), "/frame");
  std::vector<std::string> symbols;
  for (std::size_t i = 0; i < fj.size(); ++i) {
    if (!fj[i].is_string()) fail(at("/frame", i), "frame symbols are strings");
    symbols.push_back(fj[i].get<std::string>());
  }
  std::optional<CoordinateFrame> frame;
  try {
    if (j.contains("field")) {
      frame = CoordinateFrame::number_field(reader.field(j["field"], "/field"), symbols);
    } else if (j.contains("values")) {
      frame = CoordinateFrame::formal(symbols, reader.vector(j["values"], "/values"));
    } else {
      frame = CoordinateFrame::formal(symbols);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParseError) throw;
    fail("/frame", e.what());
  }
  const Json& vj = array_at(member(j, "vectors", ""), "/vectors");
  RationalMatrix vectors;
  for (std::size_t i = 0; i < vj.size(); ++i) {
    const Json& row = array_at(vj[i], at("/vectors", i));
    RationalVector coords;
    for (std::size_t k = 0; k < row.size(); ++k) coords.push_back(rational_from_json(row[k], at(at("/vectors", i), k)));
    vectors.push_back(std::move(coords));
  }
  return PseudoLattice(std::move(*frame), std::move(vectors));
}

// ---------------------------------------------------------------------------
// Representations

Json word_to_json(const Word& w) {
  Json out = Json::array();
  for (const auto& [name, e] : w) out.push_back(Json::array({name, e}));
  return out;
}

Word word_from_json(const Json& j, const std::string& path) {
  array_at(j, path);
  Word w;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& letter = j[i];
    if (!letter.is_array() || letter.size() != 2 || !letter[0].is_string() || !letter[1].is_number_integer()) {
      fail(at(path, i), "expected [generator, exponent]");
    }
    w.emplace_back(letter[0].get<std::string>(), letter[1].get<long>());
  }
  return w;
}

GroupActionInput group_action_from_json(const Json& j, ScalarReader& reader) {
  GroupActionInput in;
  in.theta = reader.vector(member(j, "theta", ""), "/theta");
  if (j.contains("rank") && size_from_json(j["rank"], "/rank") != in.theta.size()) {
    fail("/rank", "rank differs from the length of theta");
  }
  const Json& gens = array_at(member(j, "generators", ""), "/generators");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string path = at("/generators", i);
    const Json& g = gens[i];
    const Json& name = member(g, "name", path);
    if (!name.is_string()) fail(at(path, "name"), "generator names are strings");
    if (g.contains("matrix")) {
      in.generators.push_back(GeneratorAction::from_matrix(name.get<std::string>(),
                                                           matrix_from_json(g["matrix"], at(path, "matrix"))));
    } else if (g.contains("expansion")) {
      in.generators.push_back(GeneratorAction::from_expansion(
          name.get<std::string>(), expansion_from_json(g["expansion"], reader, at(path, "expansion"))));
    } else {
      fail(path, "generator needs \"matrix\" or \"expansion\"");
    }
  }
  if (j.contains("relations")) {
    const Json& rel = array_at(j["relations"], "/relations");
    for (std::size_t i = 0; i < rel.size(); ++i) in.relations.push_back(word_from_json(rel[i], at("/relations", i)));
  }
  return in;
}

Json report_to_json(const VerificationReport& r) {
  Json relations = Json::array();
  for (const auto& c : r.relations) {
    relations.push_back(Json{{"word", word_to_json(c.word)}, {"holds", c.holds}, {"value", matrix_to_json(c.value)}});
  }
  Json fixed = Json::array();
  for (const auto& f : r.fixed_points) {
    fixed.push_back(Json{{"generator", f.generator}, {"identity", f.identity}, {"fixes_theta", f.fixes_theta}});
  }
  return Json{{"relations", relations},
              {"homomorphism", r.homomorphism_ok},
              {"reconstruction", r.reconstruction_ok},
              {"theta_max_period", std::string(period_verdict_name(r.theta_max_period))},
              {"in_w_aper", r.in_w_aper},
              {"fixed_points", fixed},
              {"free_action_violations", r.free_action_violations},
              {"faithfulness_guaranteed", r.faithfulness_guaranteed},
              {"findings", r.findings}};
}

Json representation_to_json(const Representation& rep) {
  Json gens = Json::object();
  for (const auto& g : rep.generators) {
    Json entry{{"matrix", matrix_to_json(g.a)}, {"offset", g.offset}};
    if (g.image) entry["image"] = vector_to_json(*g.image);
    gens[g.name] = entry;
  }
  Json alignment{{"offsets", rep.alignment.offsets},
                 {"certification", std::string(certification_name(rep.alignment.level))},
                 {"compared_depth", rep.alignment.compared_depth}};
  return Json{{"rank", rep.rank},
              {"theta", vector_to_json(rep.theta)},
              {"theta_max", vector_to_json(rep.theta_max)},
              {"base_offset", rep.base_offset},
              {"alignment", alignment},
              {"generators", gens},
              {"report", report_to_json(rep.report)}};
}

}  // namespace toric
