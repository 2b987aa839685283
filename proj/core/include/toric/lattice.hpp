#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/matrix.hpp"
#include "toric/scalar.hpp"

namespace toric {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Basis in which real numbers are written as rational coordinates.
///
/// A formal frame is a list of symbols the caller declares Q-linearly
/// independent; the first symbol stands for the real number 1. Optional
/// numeric values of the symbols enable positivity checks. A number-field
/// frame is the power basis 1, a, ..., a^(d-1) of Q(a).
class CoordinateFrame {
 public:
  static CoordinateFrame formal(std::vector<std::string> symbols,
                                std::optional<ScalarVector> values = {});
  static CoordinateFrame number_field(FieldPtr field, std::vector<std::string> symbols = {});

  std::size_t dimension() const { return symbols_.size(); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  const std::optional<ScalarVector>& values() const { return values_; }
  const FieldPtr& field() const { return field_; }
  bool is_number_field() const { return field_ != nullptr; }

  /// Real value of a coordinate vector, when the frame knows its symbols.
  std::optional<Scalar> evaluate(const RationalVector& coords) const;
  /// Coordinates of an exact scalar in this frame.
  RationalVector coordinates(const Scalar& x) const;

  friend bool operator==(const CoordinateFrame& a, const CoordinateFrame& b);

 private:
  std::vector<std::string> symbols_;
  std::optional<ScalarVector> values_;
  FieldPtr field_;
};

/// (lambda_1, ..., lambda_n), each lambda_i a coordinate vector.
class PseudoLattice {
 public:
  PseudoLattice(CoordinateFrame frame, RationalMatrix vectors);
  /// The pseudo-lattice of an exact vector: a number-field frame when any
  /// entry is algebraic, otherwise the one-symbol frame {"1"}.
  static PseudoLattice from_scalars(const ScalarVector& values);

  std::size_t rank() const { return vectors_.size(); }
  const CoordinateFrame& frame() const { return frame_; }
  const RationalMatrix& vectors() const { return vectors_; }

  /// Q-linear independence of the coordinate vectors.
  bool is_independent() const;
  /// Real values of the lambda_i when the frame can evaluate them.
  std::optional<ScalarVector> values() const;
  /// Every lambda_i > 0; empty when the frame carries no values.
  std::optional<bool> is_positive() const;

  friend bool operator==(const PseudoLattice& a, const PseudoLattice& b) = default;

 private:
  CoordinateFrame frame_;
  RationalMatrix vectors_;
};

/// (1, theta_1, ..., theta_{n-1}) over a frame.
class ProjectivePseudoLattice {
 public:
  ProjectivePseudoLattice(CoordinateFrame frame, RationalMatrix vectors);

  std::size_t rank() const { return vectors_.size(); }
  const CoordinateFrame& frame() const { return frame_; }
  const RationalMatrix& vectors() const { return vectors_; }
  std::optional<ScalarVector> values() const;

  friend bool operator==(const ProjectivePseudoLattice& a, const ProjectivePseudoLattice& b) = default;

 private:
  CoordinateFrame frame_;
  RationalMatrix vectors_;
};

/// lambda'_j = sum_i a(i, j) lambda_i. Throws NotUnimodular.
PseudoLattice act(const IntMatrix& a, const PseudoLattice& pl);

/// c * lambda for rational c.
PseudoLattice scale(const Rational& c, const PseudoLattice& pl);

/// (1, lambda_2/lambda_1, ..., lambda_n/lambda_1). A formal frame needs
/// lambda_1 to be a positive rational multiple of its unit symbol; a
/// number-field frame needs lambda_1 > 0. Throws NonInvertibleLeadingEntry.
ProjectivePseudoLattice project(const PseudoLattice& pl);

struct HermiteForm {
  /// Canonical row-style Hermite normal form of the rational row module;
  /// zero rows are dropped.
  RationalMatrix h;
  /// Unimodular U with U * M = [h; 0].
  IntMatrix transform;
  std::vector<std::size_t> pivots;
};

HermiteForm hermite_form(const RationalMatrix& rows);

enum class Isomorphism { kNo, kYes, kInconclusive };

std::string_view isomorphism_name(Isomorphism v);

struct PlIsomorphism {
  Isomorphism verdict = Isomorphism::kNo;
  /// q = act(witness, p).
  std::optional<IntMatrix> witness;
};

/// Equality of the Z-modules spanned by the lambdas. Throws FrameMismatch.
PlIsomorphism pl_isomorphic(const PseudoLattice& p, const PseudoLattice& q);

/// Z-module of q contained in that of p. Throws FrameMismatch.
bool contains(const PseudoLattice& p, const PseudoLattice& q);

struct PplIsomorphism {
  Isomorphism verdict = Isomorphism::kNo;
  /// q = scale * act(witness, p) coordinatewise.
  std::optional<Scalar> scale;
  std::optional<IntMatrix> witness;
};

/// Positive c and T in GL_n(Z) with q = c * act(T, p). Formal frames allow
/// rational c only and are decided exactly. Number-field frames also try
/// c^(-1) = sum k_i lambda_i with |k_i| <= 2 and answer Inconclusive when
/// nothing is found.
PplIsomorphism ppl_isomorphic(const ProjectivePseudoLattice& p, const ProjectivePseudoLattice& q);

/// 2 for g = 1, 6g - 6 for g >= 2. Throws InvalidGenus for g < 1.
long genus_rank(long g);

}  // namespace toric
