#include "toric/representation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "toric/errors.hpp"
#include "toric/lattice.hpp"

namespace toric {

GeneratorAction GeneratorAction::from_matrix(std::string name, IntMatrix a) {
  GeneratorAction g;
  g.name = std::move(name);
  g.matrix = std::move(a);
  return g;
}

GeneratorAction GeneratorAction::from_expansion(std::string name, JpaExpansion e) {
  GeneratorAction g;
  g.name = std::move(name);
  g.expansion = std::move(e);
  return g;
}

std::string_view certification_name(Certification c) {
  return c == Certification::kExact ? "exact" : "depth-bounded";
}

IntMatrix prefix_matrix(const JpaExpansion& exp, std::size_t len) {
  if (len > exp.available_depth()) {
    throw Error(ErrorKind::kDepthExceeded, "prefix length " + std::to_string(len) +
                                               " beyond depth " + std::to_string(exp.depth()));
  }
  return partial_product(exp, len);
}

namespace {

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

bool aligned(const JpaExpansion& a, std::size_t p, const JpaExpansion& b, std::size_t q, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    if (!(a.block(p + k) == b.block(q + k))) return false;
  }
  return true;
}

// Blocks to compare for two periodic streams to agree forever.
std::size_t periodic_window(const JpaExpansion& a, const JpaExpansion& b) {
  return std::max(a.preperiod(), b.preperiod()) + std::lcm(a.period().size(), b.period().size());
}

// Number of aligned blocks that match, or nullopt when the streams differ.
std::optional<std::size_t> match(const JpaExpansion& a, std::size_t p, const JpaExpansion& b, std::size_t q,
                                 std::size_t min_overlap) {
  const std::size_t ra = a.available_depth() == kUnbounded ? kUnbounded : a.depth() - p;
  const std::size_t rb = b.available_depth() == kUnbounded ? kUnbounded : b.depth() - q;
  if (ra == kUnbounded && rb == kUnbounded) {
    const std::size_t w = periodic_window(a, b);
    if (aligned(a, p, b, q, w)) return w;
    return std::nullopt;
  }
  if (a.tail() == TailKind::kTerminated && b.tail() == TailKind::kTerminated) {
    if (ra != rb || ra == 0 || !aligned(a, p, b, q, ra)) return std::nullopt;
    return ra;
  }
  if ((a.tail() == TailKind::kTerminated && rb == kUnbounded) ||
      (b.tail() == TailKind::kTerminated && ra == kUnbounded)) {
    return std::nullopt;
  }
  const std::size_t overlap = std::min(ra, rb);
  if (overlap < min_overlap || !aligned(a, p, b, q, overlap)) return std::nullopt;
  return overlap;
}

bool better(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  const auto ta = std::accumulate(a.begin(), a.end(), std::size_t{0});
  const auto tb = std::accumulate(b.begin(), b.end(), std::size_t{0});
  return ta != tb ? ta < tb : a < b;
}

bool vectors_equal(const ScalarVector& a, const ScalarVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!exactly_equal(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace

TailAlignment common_tail(std::span<const JpaExpansion> expansions, const TailOptions& options) {
  if (expansions.empty()) throw Error(ErrorKind::kEmptyInput, "common tail of no expansions");
  const std::size_t m = expansions.size();
  for (const auto& e : expansions) {
    if (e.rank() != expansions[0].rank()) throw Error(ErrorKind::kRankMismatch, "expansions differ in rank");
  }
  const bool all_periodic = std::all_of(expansions.begin(), expansions.end(),
                                        [](const JpaExpansion& e) { return e.tail() == TailKind::kPeriodic; });
  auto span_of = [&](const JpaExpansion& e) {
    if (all_periodic) return e.preperiod() + e.period().size();
    return std::min(options.depth_budget + 1,
                    e.available_depth() == kUnbounded ? options.depth_budget + 1 : e.depth() + 1);
  };
  const JpaExpansion& first = expansions[0];
  std::optional<std::vector<std::size_t>> best;
  std::size_t best_depth = 0;
  for (std::size_t p0 = 0; p0 < span_of(first); ++p0) {
    if (best && p0 > std::accumulate(best->begin(), best->end(), std::size_t{0})) break;
    std::vector<std::size_t> offsets{p0};
    std::size_t depth = kUnbounded;
    for (std::size_t i = 1; i < m && offsets.size() == i; ++i) {
      for (std::size_t q = 0; q < span_of(expansions[i]); ++q) {
        if (auto overlap = match(first, p0, expansions[i], q, options.min_overlap)) {
          offsets.push_back(q);
          depth = std::min(depth, *overlap);
          break;
        }
      }
    }
    if (offsets.size() != m) continue;
    if (m == 1) {
      depth = first.available_depth() == kUnbounded ? periodic_window(first, first) : first.depth();
    }
    if (!best || better(offsets, *best)) {
      best = offsets;
      best_depth = depth;
    }
  }
  if (!best) {
    throw Error(ErrorKind::kNoCommonTail, all_periodic ? "periodic tails have different primitive periods"
                                                       : "no common tail within the depth budget");
  }
  TailAlignment out;
  out.offsets = *best;
  out.max_offset = *std::max_element(best->begin(), best->end());
  out.tail = first.suffix((*best)[0]);
  out.compared_depth = best_depth;
  if (all_periodic) {
    out.level = Certification::kExact;
  } else if (std::all_of(expansions.begin(), expansions.end(), [](const JpaExpansion& e) {
               return e.source() && all_exact(*e.source());
             })) {
    const ScalarVector s0 = jpa_state(*first.source(), out.offsets[0]);
    bool same = true;
    for (std::size_t i = 1; i < m && same; ++i) {
      same = vectors_equal(s0, jpa_state(*expansions[i].source(), out.offsets[i]));
    }
    if (same) out.level = Certification::kExact;
  }
  return out;
}

const Generator& Representation::generator(const std::string& name) const {
  for (const auto& g : generators) {
    if (g.name == name) return g;
  }
  throw Error(ErrorKind::kUnknownGenerator, "unknown generator '" + name + "'");
}

namespace {

ScalarVector image_under(const IntMatrix& a, const ScalarVector& theta) {
  PseudoLattice moved = act(a, PseudoLattice::from_scalars(theta));
  ScalarVector values = *moved.values();
  if (!all_positive(values)) {
    throw Error(ErrorKind::kNonPositiveImage, "action leaves the positive cone");
  }
  return *project(moved).values();
}

}  // namespace

Representation build_representation(const ScalarVector& theta, std::span<const GeneratorAction> actions,
                                    const TailOptions& options) {
  if (theta.size() < 2) throw Error(ErrorKind::kInvalidArgument, "theta needs rank at least 2");
  if (!all_exact(theta)) throw Error(ErrorKind::kInvalidArgument, "representations need exact theta");
  if (!all_positive(theta)) throw Error(ErrorKind::kNonPositiveState, "theta must be positive");
  const std::size_t n = theta.size();
  Representation rep;
  rep.rank = n;
  rep.theta = normalize_leading(theta);

  std::set<std::string> names;
  std::vector<JpaExpansion> streams;
  streams.push_back(expand_with_period(rep.theta, options.expansion_depth, options.max_preperiod,
                                       options.max_period));
  for (const auto& action : actions) {
    if (!names.insert(action.name).second) {
      throw Error(ErrorKind::kInvalidArgument, "duplicate generator '" + action.name + "'");
    }
    std::optional<ScalarVector> image;
    if (action.matrix) {
      if (action.matrix->rows() != n || action.matrix->cols() != n) {
        throw Error(ErrorKind::kRankMismatch, "generator '" + action.name + "' has the wrong size");
      }
      image = image_under(*action.matrix, rep.theta);
      streams.push_back(expand_with_period(*image, options.expansion_depth, options.max_preperiod,
                                           options.max_period));
    } else if (action.expansion) {
      if (action.expansion->rank() != n) {
        throw Error(ErrorKind::kRankMismatch, "generator '" + action.name + "' has the wrong rank");
      }
      if (action.expansion->source() && all_exact(*action.expansion->source())) {
        image = normalize_leading(*action.expansion->source());
      }
      streams.push_back(*action.expansion);
    } else {
      throw Error(ErrorKind::kInvalidArgument, "generator '" + action.name + "' has no action");
    }
    Generator g{action.name, IntMatrix::identity(n), action.matrix, image, streams.back(), 0};
    rep.generators.push_back(std::move(g));
  }

  rep.alignment = common_tail(streams, options);
  rep.base_offset = rep.alignment.offsets[0];
  rep.theta_expansion = streams[0];
  rep.theta_max = rep.base_offset == 0 ? rep.theta : jpa_state(rep.theta, rep.base_offset);
  const IntMatrix base_inverse = prefix_matrix(streams[0], rep.base_offset).inverse();
  for (std::size_t i = 0; i < rep.generators.size(); ++i) {
    Generator& g = rep.generators[i];
    g.offset = rep.alignment.offsets[i + 1];
    g.a = prefix_matrix(streams[i + 1], g.offset) * base_inverse;
  }
  rep.report = verify(rep, {}, options.max_preperiod, options.max_period);
  return rep;
}

IntMatrix evaluate_word(const Representation& rep, const Word& word) {
  IntMatrix out = IntMatrix::identity(rep.rank);
  for (const auto& [name, exponent] : word) {
    if (exponent == 0) {
      rep.generator(name);
      continue;
    }
    out = out * rep.generator(name).a.pow(exponent);
  }
  return out;
}

VerificationReport verify(const Representation& rep, std::span<const Word> relations,
                          std::size_t max_preperiod, std::size_t max_period) {
  VerificationReport report;
  for (std::size_t k = 0; k < relations.size(); ++k) {
    RelationCheck check{relations[k], evaluate_word(rep, relations[k]), false};
    check.holds = check.value.is_identity();
    if (!check.holds) {
      report.homomorphism_ok = false;
      report.findings.push_back("relation " + std::to_string(k) + " does not evaluate to the identity");
    }
    report.relations.push_back(std::move(check));
  }

  PeriodReport period = detect_period(rep.theta_max, max_preperiod, max_period);
  report.theta_max_period = period.verdict;
  report.in_w_aper = period.verdict == PeriodVerdict::kAperiodicUpToBound;
  if (period.verdict == PeriodVerdict::kPeriodic) {
    report.findings.push_back("stationary: not in W_aper (period " + std::to_string(period.period.size()) +
                              " after " + std::to_string(period.preperiod) + " blocks)");
  } else if (period.verdict == PeriodVerdict::kTerminated) {
    report.findings.push_back("theta_max is rationally dependent: its expansion terminates");
  }

  for (const auto& g : rep.generators) {
    FixedPointCheck fp{g.name, g.a.is_identity(), false};
    if (!fp.identity && projectively_equal(g.a * rep.theta, rep.theta)) fp.fixes_theta = true;
    const bool action_identity = !g.action || g.action->is_identity();
    if (!action_identity && projectively_equal(g.action->transpose() * rep.theta, rep.theta)) {
      fp.fixes_theta = true;
    }
    if (fp.fixes_theta) {
      report.findings.push_back("generator " + g.name + " is not the identity but fixes theta projectively");
      if (report.in_w_aper) {
        report.findings.push_back("internal inconsistency: a fixed point exists although no period was found");
      }
    }
    if (g.image) {
      if (!projectively_equal(g.a * rep.theta, *g.image)) {
        report.reconstruction_ok = false;
        report.findings.push_back("generator " + g.name + ": A theta is not proportional to its image");
      }
      if ((!fp.identity || !action_identity) && projectively_equal(*g.image, rep.theta)) {
        report.free_action_violations.push_back(g.name);
        report.findings.push_back("generator " + g.name + " maps theta to itself: the action is not free");
      }
    }
    report.fixed_points.push_back(std::move(fp));
  }

  const bool no_fixed = std::none_of(report.fixed_points.begin(), report.fixed_points.end(),
                                     [](const FixedPointCheck& f) { return f.fixes_theta; });
  report.faithfulness_guaranteed = report.homomorphism_ok && report.reconstruction_ok && report.in_w_aper &&
                                   no_fixed && report.free_action_violations.empty() &&
                                   rep.alignment.level == Certification::kExact;
  if (!report.faithfulness_guaranteed) report.findings.push_back("faithfulness not guaranteed");
  return report;
}

}  // namespace toric
