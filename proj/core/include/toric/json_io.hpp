#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "toric/bratteli.hpp"
#include "toric/lattice.hpp"
#include "toric/representation.hpp"

namespace toric {

using Json = nlohmann::json;

/// Reads scalars so that algebraic entries naming the same polynomial and
/// isolating interval share one NumberField.
///
/// Accepted encodings: {"rat":[n,d]}, {"alg":{"poly":[c0,...],"lo":[n,d],
/// "hi":[n,d]}}, {"ivl":{"lo":[n,d],"hi":[n,d]}}, the same as two-element
/// arrays ["rat",[n,d]], plain integers, and strings "p", "p/q" or
/// decimals. An "alg" object may carry "coeffs":[[n,d],...] to denote a
/// polynomial in the root instead of the root itself.
class ScalarReader {
 public:
  struct Options {
    bool allow_algebraic = true;
    bool allow_interval = true;
    /// Decimal strings become intervals of half a unit in the last place.
    bool decimals_as_intervals = false;
  };

  ScalarReader() = default;
  explicit ScalarReader(Options options) : options_(options) {}

  Scalar scalar(const Json& j, const std::string& path = "");
  ScalarVector vector(const Json& j, const std::string& path = "");
  FieldPtr field(const Json& alg, const std::string& path = "");

 private:
  Options options_;
  std::map<std::string, FieldPtr> fields_;
};

Json integer_to_json(const Integer& z);
Integer integer_from_json(const Json& j, const std::string& path = "");
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& path = "");

Json scalar_to_json(const Scalar& s);
Json vector_to_json(const ScalarVector& v);
Json field_to_json(const NumberField& f);

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j, const std::string& path = "");

Json expansion_to_json(const JpaExpansion& e);
JpaExpansion expansion_from_json(const Json& j, ScalarReader& reader, const std::string& path = "");

Json diagram_to_json(const BratteliDiagram& d);
BratteliDiagram diagram_from_json(const Json& j, ScalarReader& reader);

Json tail_decision_to_json(const TailDecision& d);
Json stationarity_to_json(const StationarityReport& r);

Json lattice_to_json(const PseudoLattice& pl);
PseudoLattice lattice_from_json(const Json& j, ScalarReader& reader);

Json word_to_json(const Word& w);
Word word_from_json(const Json& j, const std::string& path = "");

struct GroupActionInput {
  ScalarVector theta;
  std::vector<GeneratorAction> generators;
  std::vector<Word> relations;
};

GroupActionInput group_action_from_json(const Json& j, ScalarReader& reader);

Json report_to_json(const VerificationReport& r);
Json representation_to_json(const Representation& rep);

}  // namespace toric
