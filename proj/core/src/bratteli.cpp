#include "toric/bratteli.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

BratteliDiagram::BratteliDiagram(JpaExpansion source, std::size_t depth)
    : source_(std::move(source)) {
  multiplicities_.reserve(depth);
  for (std::size_t k = 0; k < depth; ++k) multiplicities_.push_back(step_matrix(source_.block(k)));
}

BratteliDiagram build_diagram(const JpaExpansion& exp, std::optional<std::size_t> depth) {
  const std::size_t k = depth.value_or(exp.depth());
  if (k > exp.available_depth()) {
    throw Error(ErrorKind::kDepthExceeded, "diagram depth " + std::to_string(k) +
                                               " beyond expansion depth " + std::to_string(exp.depth()));
  }
  return BratteliDiagram(exp, k);
}

std::vector<std::vector<Integer>> dimension_vectors(const BratteliDiagram& diag, std::size_t k) {
  if (k > diag.depth() + 1) {
    throw Error(ErrorKind::kDepthExceeded, "dimension vector index beyond the diagram");
  }
  std::vector<std::vector<Integer>> out;
  if (k == 0) return out;
  out.emplace_back(diag.rank(), Integer(1));
  for (std::size_t j = 1; j < k; ++j) out.push_back(diag.multiplicity(j - 1).transpose() * out.back());
  return out;
}

std::string_view tail_verdict_name(TailVerdict v) {
  switch (v) {
    case TailVerdict::kEquivalent: return "equivalent";
    case TailVerdict::kNotEquivalent: return "not-equivalent";
    case TailVerdict::kInconclusiveAtDepth: return "inconclusive";
  }
  return "?";
}

namespace {

bool aligned(const JpaExpansion& a, std::size_t p, const JpaExpansion& b, std::size_t q,
             std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    if (!(a.block(p + k) == b.block(q + k))) return false;
  }
  return true;
}

bool is_rotation(const std::vector<DigitVector>& a, const std::vector<DigitVector>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t r = 0; r < a.size(); ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) ok = a[(i + r) % a.size()] == b[i];
    if (ok) return true;
  }
  return false;
}

TailDecision periodic_pair(const JpaExpansion& e1, const JpaExpansion& e2) {
  TailDecision d;
  if (!is_rotation(e1.period(), e2.period())) {
    d.verdict = TailVerdict::kNotEquivalent;
    d.note = "primitive periods differ under every rotation";
    return d;
  }
  const std::size_t len = e1.period().size();
  const std::size_t span1 = e1.preperiod() + len;
  const std::size_t span2 = e2.preperiod() + len;
  const std::size_t window = std::max(e1.preperiod(), e2.preperiod()) + len;
  for (std::size_t total = 0; total + 1 < span1 + span2; ++total) {
    for (std::size_t p = 0; p <= std::min(total, span1 - 1); ++p) {
      const std::size_t q = total - p;
      if (q >= span2) continue;
      if (aligned(e1, p, e2, q, window)) {
        d.verdict = TailVerdict::kEquivalent;
        d.p = p;
        d.q = q;
        d.has_offsets = true;
        d.depth = window;
        return d;
      }
    }
  }
  // Unreachable for rotated periods; kept as a guard.
  d.verdict = TailVerdict::kNotEquivalent;
  d.note = "periods agree but no alignment was found";
  return d;
}

TailDecision terminated_pair(const JpaExpansion& e1, const JpaExpansion& e2) {
  TailDecision d;
  const std::size_t d1 = e1.depth();
  const std::size_t d2 = e2.depth();
  for (std::size_t p = d1 > d2 ? d1 - d2 : 0; p <= d1; ++p) {
    const std::size_t q = d2 - (d1 - p);
    if (aligned(e1, p, e2, q, d1 - p)) {
      d.verdict = TailVerdict::kEquivalent;
      d.p = p;
      d.q = q;
      d.has_offsets = true;
      d.depth = d1 - p;
      if (p == d1) d.note = "finite streams agree only after both end";
      return d;
    }
  }
  return d;
}

TailDecision truncated_pair(const JpaExpansion& e1, const JpaExpansion& e2, std::size_t budget) {
  TailDecision d;
  const std::size_t a1 = e1.available_depth();
  const std::size_t a2 = e2.available_depth();
  for (std::size_t total = 0; total <= 2 * budget; ++total) {
    for (std::size_t p = total > budget ? total - budget : 0; p <= std::min(total, budget); ++p) {
      const std::size_t q = total - p;
      if (p >= a1 || q >= a2) continue;
      const std::size_t overlap = std::min({a1 - p, a2 - q, budget});
      if (aligned(e1, p, e2, q, overlap)) {
        d.p = p;
        d.q = q;
        d.has_offsets = true;
        d.depth = overlap;
        d.note = "streams agree on " + std::to_string(overlap) +
                 " aligned blocks; finite data cannot decide tail equivalence";
        return d;
      }
    }
  }
  d.depth = budget;
  d.note = "no alignment agrees within the offset budget";
  return d;
}

}  // namespace

TailDecision tail_equivalent(const JpaExpansion& e1, const JpaExpansion& e2, std::size_t depth_budget) {
  if (e1.rank() != e2.rank()) throw Error(ErrorKind::kRankMismatch, "tail comparison needs equal ranks");
  const TailKind t1 = e1.tail();
  const TailKind t2 = e2.tail();
  if (t1 == TailKind::kPeriodic && t2 == TailKind::kPeriodic) return periodic_pair(e1, e2);
  if (t1 == TailKind::kTerminated && t2 == TailKind::kTerminated) return terminated_pair(e1, e2);
  if ((t1 == TailKind::kTerminated && t2 == TailKind::kPeriodic) ||
      (t1 == TailKind::kPeriodic && t2 == TailKind::kTerminated)) {
    TailDecision d;
    d.verdict = TailVerdict::kNotEquivalent;
    d.note = "a finite stream is never tail equivalent to an infinite one";
    return d;
  }
  return truncated_pair(e1, e2, depth_budget);
}

StationarityReport is_stationary(const JpaExpansion& exp, std::size_t max_preperiod,
                                 std::size_t max_period) {
  StationarityReport rep;
  auto take_period = [&](std::size_t pre, std::vector<DigitVector> period) {
    rep.stationary = true;
    rep.preperiod = pre;
    rep.from_first_level = pre == 0;
    rep.period = std::move(period);
  };
  switch (exp.tail()) {
    case TailKind::kPeriodic:
      take_period(exp.preperiod(), exp.period());
      break;
    case TailKind::kTerminated:
      rep.note = "terminated: the diagram is finite";
      break;
    case TailKind::kTruncated: {
      PeriodReport pr = detect_period(exp, max_preperiod, max_period);
      if (pr.verdict == PeriodVerdict::kPeriodic && pr.certified) {
        take_period(pr.preperiod, pr.period);
      } else if (pr.verdict == PeriodVerdict::kTerminated) {
        rep.note = "terminated: the diagram is finite";
      } else if (pr.verdict == PeriodVerdict::kPeriodic) {
        rep.note = "digits repeat up to depth " + std::to_string(exp.depth()) + " but no exact state certifies it";
      } else {
        rep.note = "no period found up to depth " + std::to_string(pr.examined);
      }
      break;
    }
  }
  return rep;
}

std::string export_dot(const BratteliDiagram& diag) {
  std::ostringstream os;
  const std::size_t n = diag.rank();
  os << "digraph bratteli {\n";
  os << "  rankdir=LR;\n";
  os << "  root [shape=point];\n";
  for (std::size_t level = 1; level <= diag.vertex_levels(); ++level) {
    for (std::size_t i = 1; i <= n; ++i) {
      os << "  v" << level << '_' << i << " [label=\"" << i << "\"];\n";
    }
  }
  if (diag.vertex_levels() > 0) {
    for (std::size_t i = 1; i <= n; ++i) os << "  root -> v1_" << i << ";\n";
  }
  for (std::size_t k = 0; k < diag.depth(); ++k) {
    const IntMatrix& m = diag.multiplicity(k);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t s = 0; s < n; ++s) {
        if (m(r, s) == 0) continue;
        os << "  v" << k + 1 << '_' << r + 1 << " -> v" << k + 2 << '_' << s + 1
           << " [label=\"" << m(r, s).get_str() << "\"];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace toric
