#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toric/jpa.hpp"

namespace toric {

/// A group generator acting on theta, either by a unimodular matrix on the
/// pseudo-lattice (lambda' = a^T lambda) or by the digit stream of its image.
struct GeneratorAction {
  std::string name;
  std::optional<IntMatrix> matrix;
  std::optional<JpaExpansion> expansion;

  static GeneratorAction from_matrix(std::string name, IntMatrix a);
  static GeneratorAction from_expansion(std::string name, JpaExpansion e);
};

enum class Certification { kExact, kDepthBounded };

std::string_view certification_name(Certification c);

struct TailOptions {
  /// Largest prefix removed from any stream (non-periodic inputs).
  std::size_t depth_budget = 64;
  /// Aligned blocks required before truncated streams count as matching.
  std::size_t min_overlap = 8;
  /// Budgets for certified period detection of the expansions.
  std::size_t max_preperiod = 8;
  std::size_t max_period = 8;
  /// Depth of each expansion.
  std::size_t expansion_depth = 256;
};

struct TailAlignment {
  /// Blocks removed from each input.
  std::vector<std::size_t> offsets;
  std::size_t max_offset = 0;
  /// Stream of the shared tail (suffix of the first input).
  std::optional<JpaExpansion> tail;
  Certification level = Certification::kDepthBounded;
  /// Aligned blocks compared (every block for exact periodic tails).
  std::size_t compared_depth = 0;
};

/// Maximal common tail: least total offset, ties broken by the
/// lexicographically least offset vector. Periodic inputs are decided
/// exactly; otherwise alignments must agree on min_overlap blocks (or to
/// the common end of terminated streams) and are certified Exact only
/// when exact source states at the offsets coincide. Throws NoCommonTail.
TailAlignment common_tail(std::span<const JpaExpansion> expansions, const TailOptions& options = {});

/// B(b^(1)) ... B(b^(len)). Throws DepthExceeded.
IntMatrix prefix_matrix(const JpaExpansion& exp, std::size_t len);

struct Generator {
  std::string name;
  /// rho(gamma) = P_i P_0^(-1), mapping (1, theta) to a multiple of (1, theta_i).
  IntMatrix a;
  /// Matrix acting on lambda when the action was given that way.
  std::optional<IntMatrix> action;
  /// Exact image theta_i when known.
  std::optional<ScalarVector> image;
  JpaExpansion expansion;
  std::size_t offset = 0;
};

using Word = std::vector<std::pair<std::string, long>>;

struct RelationCheck {
  Word word;
  IntMatrix value;
  bool holds = false;
};

struct FixedPointCheck {
  std::string generator;
  bool identity = false;
  /// A (1, theta) is proportional to (1, theta) for rho(gamma) or the action matrix.
  bool fixes_theta = false;
};

struct VerificationReport {
  std::vector<RelationCheck> relations;
  bool homomorphism_ok = true;
  /// A_i (1, theta) proportional to (1, theta_i) for every exact image.
  bool reconstruction_ok = true;
  PeriodVerdict theta_max_period = PeriodVerdict::kAperiodicUpToBound;
  /// False when theta_max is certified periodic (the stream is stationary).
  bool in_w_aper = true;
  std::vector<FixedPointCheck> fixed_points;
  std::vector<std::string> free_action_violations;
  /// Every checked hypothesis holds; still conditional on the budgets.
  bool faithfulness_guaranteed = false;
  std::vector<std::string> findings;
};

struct Representation {
  std::size_t rank = 0;
  /// Normalized (1, theta) the actions are applied to.
  ScalarVector theta;
  /// State of theta at the common tail offset.
  ScalarVector theta_max;
  std::size_t base_offset = 0;
  std::optional<JpaExpansion> theta_expansion;
  std::vector<Generator> generators;
  TailAlignment alignment;
  VerificationReport report;

  const Generator& generator(const std::string& name) const;
};

/// Computes theta_i for every generator, expands everything, aligns the
/// tails and sets A_i from prefix products. Throws NoCommonTail,
/// NonPositiveImage, NotUnimodular.
Representation build_representation(const ScalarVector& theta, std::span<const GeneratorAction> actions,
                                    const TailOptions& options = {});

/// Ordered product of powers. Throws UnknownGenerator.
IntMatrix evaluate_word(const Representation& rep, const Word& word);

VerificationReport verify(const Representation& rep, std::span<const Word> relations,
                          std::size_t max_preperiod = 8, std::size_t max_period = 8);

}  // namespace toric
