#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/jpa.hpp"

namespace toric {

/// Bratteli diagram read off a digit stream.
///
/// With K digit blocks the diagram has a root, then vertex levels 1..K+1
/// of n vertices each. The root has one edge to every level-1 vertex;
/// the edges from level k to level k+1 are given by M = step_matrix(b^(k)),
/// M(r, s) edges from vertex r to vertex s.
class BratteliDiagram {
 public:
  BratteliDiagram(JpaExpansion source, std::size_t depth);

  std::size_t rank() const { return source_.rank(); }
  /// Number of digit blocks used (K).
  std::size_t depth() const { return multiplicities_.size(); }
  /// Number of vertex levels below the root.
  std::size_t vertex_levels() const { return depth() == 0 ? 0 : depth() + 1; }
  TailKind tail() const { return source_.tail(); }
  const JpaExpansion& source() const { return source_; }
  /// Multiplicity matrix between levels k+1 and k+2 (0-based k < depth()).
  const IntMatrix& multiplicity(std::size_t k) const { return multiplicities_.at(k); }
  const std::vector<IntMatrix>& multiplicities() const { return multiplicities_; }

  friend bool operator==(const BratteliDiagram& a, const BratteliDiagram& b) {
    return a.rank() == b.rank() && a.tail() == b.tail() && a.multiplicities_ == b.multiplicities_;
  }

 private:
  JpaExpansion source_;
  std::vector<IntMatrix> multiplicities_;
};

/// Diagram over the first `depth` blocks (default: the explicit blocks).
BratteliDiagram build_diagram(const JpaExpansion& exp, std::optional<std::size_t> depth = {});

/// d^(1), ..., d^(k) with d^(1) = (1, ..., 1) and d^(j+1) = M_j^T d^(j).
/// Throws DepthExceeded when k > depth + 1.
std::vector<std::vector<Integer>> dimension_vectors(const BratteliDiagram& diag, std::size_t k);

enum class TailVerdict { kEquivalent, kNotEquivalent, kInconclusiveAtDepth };

std::string_view tail_verdict_name(TailVerdict v);

struct TailDecision {
  TailVerdict verdict = TailVerdict::kInconclusiveAtDepth;
  /// Blocks removed from each stream (Equivalent), or the best offsets
  /// seen for an inconclusive comparison.
  std::size_t p = 0;
  std::size_t q = 0;
  bool has_offsets = false;
  /// Number of aligned blocks actually compared.
  std::size_t depth = 0;
  std::string note;
};

/// Tail equivalence of two digit streams (stable isomorphism of the
/// associated AF-algebras). Periodic and terminated pairs are decided
/// exactly with the smallest offsets (least p + q, then least p). Any
/// truncated input yields InconclusiveAtDepth, carrying a witness
/// alignment when one agrees over every compared block.
TailDecision tail_equivalent(const JpaExpansion& e1, const JpaExpansion& e2,
                             std::size_t depth_budget = 64);

struct StationarityReport {
  bool stationary = false;
  /// Periodic from the first level on (preperiod 0).
  bool from_first_level = false;
  std::size_t preperiod = 0;
  std::vector<DigitVector> period;
  std::string note;
};

/// Stationary means eventually periodic. Truncated streams are only
/// called stationary when an exact source certifies the period.
StationarityReport is_stationary(const JpaExpansion& exp, std::size_t max_preperiod = 16,
                                 std::size_t max_period = 16);

/// Graphviz text: levels left to right, level edges labeled with their
/// multiplicity.
std::string export_dot(const BratteliDiagram& diag);

}  // namespace toric
