#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toric/matrix.hpp"
#include "toric/scalar.hpp"

namespace toric {

/// One Jacobi-Perron digit block (b_1, ..., b_{n-1}) of a rank-n expansion.
class DigitVector {
 public:
  DigitVector() = default;
  explicit DigitVector(std::vector<Integer> digits);
  DigitVector(std::initializer_list<long> digits);

  std::size_t rank() const { return digits_.size() + 1; }
  std::size_t size() const { return digits_.size(); }
  const Integer& operator[](std::size_t i) const { return digits_[i]; }
  const std::vector<Integer>& digits() const { return digits_; }

  friend bool operator==(const DigitVector& a, const DigitVector& b) = default;
  friend auto operator<=>(const DigitVector& a, const DigitVector& b) {
    return a.digits_ <=> b.digits_;
  }

 private:
  std::vector<Integer> digits_;
};

std::string to_string(const DigitVector& b);

enum class TailKind { kTerminated, kTruncated, kPeriodic };

std::string_view tail_kind_name(TailKind kind);

/// A finite or eventually periodic stream of digit blocks.
///
/// `blocks()` holds the explicitly computed prefix. For a periodic tail
/// the stream continues past it as blocks[0..preperiod) followed by the
/// period repeated forever; the stored blocks always agree with that rule.
/// Periodic tails are kept canonical: the period is primitive and the
/// preperiod is as short as possible.
class JpaExpansion {
 public:
  static JpaExpansion truncated(std::size_t rank, std::vector<DigitVector> blocks);
  static JpaExpansion terminated(std::size_t rank, std::vector<DigitVector> blocks,
                                 ScalarVector residual = {});
  static JpaExpansion periodic(std::size_t rank, std::vector<DigitVector> blocks,
                               std::size_t preperiod, std::vector<DigitVector> period);

  std::size_t rank() const { return rank_; }
  TailKind tail() const { return tail_; }
  const std::vector<DigitVector>& blocks() const { return blocks_; }
  std::size_t depth() const { return blocks_.size(); }
  std::size_t preperiod() const { return preperiod_; }
  const std::vector<DigitVector>& period() const { return period_; }
  bool is_infinite() const { return tail_ == TailKind::kPeriodic; }

  /// Number of blocks that can be read; unbounded for periodic tails.
  std::size_t available_depth() const;
  /// Block k (0-based); throws DepthExceeded past the available depth.
  const DigitVector& block(std::size_t k) const;
  /// The first `count` blocks, unrolling a periodic tail as needed.
  std::vector<DigitVector> prefix(std::size_t count) const;

  /// Fractional parts left when a rational-dependent input terminated.
  const ScalarVector& residual() const { return residual_; }

  const std::optional<ScalarVector>& source() const { return source_; }
  void set_source(ScalarVector theta) { source_ = std::move(theta); }

  /// Relative content for exact terminated rational inputs: the largest
  /// c with (1, theta)/c an integer vector. Set by jpa_expand.
  const std::optional<Rational>& terminal_scale() const { return terminal_scale_; }
  void set_terminal_scale(Rational s) { terminal_scale_ = std::move(s); }

  /// Same stream with `prefix` prepended. The source vector is dropped.
  JpaExpansion with_prefix(std::span<const DigitVector> prefix) const;
  /// Stream from block `offset` on.
  JpaExpansion suffix(std::size_t offset) const;

  /// Digit-level equality (source and scale ignored).
  bool same_stream(const JpaExpansion& other) const;

 private:
  JpaExpansion() = default;
  void validate() const;

  std::size_t rank_ = 2;
  std::vector<DigitVector> blocks_;
  TailKind tail_ = TailKind::kTruncated;
  std::size_t preperiod_ = 0;
  std::vector<DigitVector> period_;
  ScalarVector residual_;
  std::optional<ScalarVector> source_;
  std::optional<Rational> terminal_scale_;
};

/// The n x n matrix with first row e_n and row i+1 equal to e_i + b_i e_n.
IntMatrix step_matrix(const DigitVector& b);

/// Ordered product B(b^(1)) ... B(b^(k)) of the first k blocks.
IntMatrix partial_product(const JpaExpansion& exp, std::size_t k);

struct EuclidResult {
  Integer gcd;
  /// Quotients b_1..b_k of the remainder chain (two-entry inputs only).
  std::vector<Integer> quotients;
};

/// gcd of positive integers. Two entries use the remainder chain; longer
/// inputs use the integer Jacobi-Perron map until the first coordinate
/// divides the rest, then recurse on the terminal residue.
EuclidResult euclid_gcd(std::span<const Integer> values);

/// Regular continued fraction digits of x > 0 (a rank-2 expansion).
JpaExpansion regular_cf(const Scalar& x, std::size_t max_depth);

struct StepResult {
  DigitVector digits;
  /// Fractional parts f_i = x_i - b_i.
  ScalarVector fractional;
  /// Next state (1, f_2/f_1, ..., f_{n-1}/f_1, 1/f_1); empty when f_1 = 0.
  std::optional<ScalarVector> next;
};

/// One Jacobi-Perron step on a state (1, x_1, ..., x_{n-1}) with x_i >= 0.
StepResult jpa_step(const ScalarVector& state);

/// Expands (1, theta); the input is normalized by its first entry, which
/// must be positive along with every other entry.
JpaExpansion jpa_expand(const ScalarVector& theta, std::size_t max_depth);

/// The JPA state after `steps` steps (steps <= termination depth).
ScalarVector jpa_state(const ScalarVector& theta, std::size_t steps);

enum class PeriodVerdict { kPeriodic, kTerminated, kAperiodicUpToBound };

struct PeriodReport {
  PeriodVerdict verdict = PeriodVerdict::kAperiodicUpToBound;
  std::size_t preperiod = 0;
  std::vector<DigitVector> period;
  /// True when an exact state recurrence proves the period.
  bool certified = false;
  /// Number of JPA steps (or blocks) examined.
  std::size_t examined = 0;
  /// Expansion carrying everything that was computed.
  std::optional<JpaExpansion> expansion;
};

std::string_view period_verdict_name(PeriodVerdict v);

/// Certified periodicity by exact state recurrence: the state at step k
/// equal to the state at step j <= max_preperiod with k - j <= max_period.
PeriodReport detect_period(const ScalarVector& theta, std::size_t max_preperiod,
                           std::size_t max_period);

/// Periodicity of an existing expansion. Periodic and terminated tails are
/// reported as recorded; an exact source vector is re-run with state
/// recurrence; otherwise the digits alone give an uncertified guess.
PeriodReport detect_period(const JpaExpansion& exp, std::size_t max_preperiod,
                           std::size_t max_period);

/// jpa_expand with certified period detection folded in; the result has a
/// periodic tail when a recurrence is found within the budgets.
JpaExpansion expand_with_period(const ScalarVector& theta, std::size_t max_depth,
                                std::size_t max_preperiod, std::size_t max_period);

struct Convergent {
  /// P_k (0, ..., 0, 1)^T.
  std::vector<Integer> vector;
  /// Upper bound on the sup-norm distance between the normalized
  /// convergent and (1, theta), when the source vector is known.
  std::optional<Rational> error_bound;
};

Convergent convergent(const JpaExpansion& exp, std::size_t k);

enum class ConvergenceVerdict { kContracting, kNonContracting, kInconclusive };

std::string_view convergence_verdict_name(ConvergenceVerdict v);

inline constexpr double kDefaultContractionThreshold = 1e-8;

struct ConvergenceReport {
  std::size_t depth = 0;
  /// Hilbert projective diameter of the columns of P_k, k = 1..depth;
  /// +infinity while some column pair has different support.
  std::vector<double> diameters;
  ConvergenceVerdict verdict = ConvergenceVerdict::kInconclusive;
};

/// Numerical convergence proxy on the explicit blocks of `exp`.
ConvergenceReport convergence_diagnostic(const JpaExpansion& exp,
                                         double threshold = kDefaultContractionThreshold);

/// Hilbert projective distance between two non-negative vectors.
double hilbert_distance(const std::vector<Integer>& u, const std::vector<Integer>& v);

}  // namespace toric
