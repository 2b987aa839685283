#include "toric/jpa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "toric/errors.hpp"

namespace toric {

DigitVector::DigitVector(std::vector<Integer> digits) : digits_(std::move(digits)) {
  if (digits_.empty()) throw Error(ErrorKind::kInvalidArgument, "digit block must be non-empty");
  for (const auto& d : digits_) {
    if (d < 0) throw Error(ErrorKind::kInvalidArgument, "digits must be non-negative");
  }
}

DigitVector::DigitVector(std::initializer_list<long> digits)
    : DigitVector(std::vector<Integer>(digits.begin(), digits.end())) {}

std::string to_string(const DigitVector& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) s += ",";
    s += b[i].get_str();
  }
  return s + ")";
}

std::string_view tail_kind_name(TailKind kind) {
  switch (kind) {
    case TailKind::kTerminated: return "terminated";
    case TailKind::kTruncated: return "truncated";
    case TailKind::kPeriodic: return "periodic";
  }
  return "?";
}

std::string_view period_verdict_name(PeriodVerdict v) {
  switch (v) {
    case PeriodVerdict::kPeriodic: return "periodic";
    case PeriodVerdict::kTerminated: return "terminated";
    case PeriodVerdict::kAperiodicUpToBound: return "aperiodic-up-to-bound";
  }
  return "?";
}

std::string_view convergence_verdict_name(ConvergenceVerdict v) {
  switch (v) {
    case ConvergenceVerdict::kContracting: return "contracting";
    case ConvergenceVerdict::kNonContracting: return "non-contracting";
    case ConvergenceVerdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// JpaExpansion

namespace {

std::vector<DigitVector> primitive_root(std::vector<DigitVector> period) {
  const std::size_t len = period.size();
  for (std::size_t d = 1; d < len; ++d) {
    if (len % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < len && repeats; ++i) repeats = period[i] == period[i % d];
    if (repeats) {
      period.resize(d);
      break;
    }
  }
  return period;
}

}  // namespace

void JpaExpansion::validate() const {
  if (rank_ < 2) throw Error(ErrorKind::kInvalidArgument, "rank must be at least 2");
  auto check = [&](const DigitVector& b) {
    if (b.rank() != rank_) throw Error(ErrorKind::kRankMismatch, "digit block has the wrong length");
  };
  for (const auto& b : blocks_) check(b);
  for (const auto& b : period_) check(b);
}

JpaExpansion JpaExpansion::truncated(std::size_t rank, std::vector<DigitVector> blocks) {
  JpaExpansion e;
  e.rank_ = rank;
  e.blocks_ = std::move(blocks);
  e.tail_ = TailKind::kTruncated;
  e.validate();
  return e;
}

JpaExpansion JpaExpansion::terminated(std::size_t rank, std::vector<DigitVector> blocks,
                                      ScalarVector residual) {
  JpaExpansion e;
  e.rank_ = rank;
  e.blocks_ = std::move(blocks);
  e.tail_ = TailKind::kTerminated;
  e.residual_ = std::move(residual);
  e.validate();
  return e;
}

JpaExpansion JpaExpansion::periodic(std::size_t rank, std::vector<DigitVector> blocks,
                                    std::size_t preperiod, std::vector<DigitVector> period) {
  if (period.empty()) throw Error(ErrorKind::kInvalidArgument, "period must be non-empty");
  if (blocks.size() < preperiod) {
    throw Error(ErrorKind::kInvalidArgument, "explicit blocks must cover the preperiod");
  }
  JpaExpansion e;
  e.rank_ = rank;
  e.tail_ = TailKind::kPeriodic;
  e.blocks_ = std::move(blocks);
  e.period_ = primitive_root(std::move(period));
  e.preperiod_ = preperiod;
  e.validate();
  const std::size_t len = e.period_.size();
  for (std::size_t k = e.preperiod_; k < e.blocks_.size(); ++k) {
    if (!(e.blocks_[k] == e.period_[(k - e.preperiod_) % len])) {
      throw Error(ErrorKind::kInvalidArgument, "explicit blocks disagree with the period");
    }
  }
  while (e.preperiod_ > 0 && e.blocks_[e.preperiod_ - 1] == e.period_.back()) {
    std::rotate(e.period_.rbegin(), e.period_.rbegin() + 1, e.period_.rend());
    --e.preperiod_;
  }
  return e;
}

std::size_t JpaExpansion::available_depth() const {
  return tail_ == TailKind::kPeriodic ? std::numeric_limits<std::size_t>::max() : blocks_.size();
}

const DigitVector& JpaExpansion::block(std::size_t k) const {
  if (k < blocks_.size()) return blocks_[k];
  if (tail_ != TailKind::kPeriodic) {
    throw Error(ErrorKind::kDepthExceeded, "block index " + std::to_string(k) +
                                               " beyond depth " + std::to_string(blocks_.size()));
  }
  return period_[(k - preperiod_) % period_.size()];
}

std::vector<DigitVector> JpaExpansion::prefix(std::size_t count) const {
  if (count > available_depth()) {
    throw Error(ErrorKind::kDepthExceeded, "requested " + std::to_string(count) +
                                               " blocks from an expansion of depth " +
                                               std::to_string(blocks_.size()));
  }
  std::vector<DigitVector> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(block(k));
  return out;
}

JpaExpansion JpaExpansion::with_prefix(std::span<const DigitVector> prefix) const {
  std::vector<DigitVector> blocks(prefix.begin(), prefix.end());
  blocks.insert(blocks.end(), blocks_.begin(), blocks_.end());
  switch (tail_) {
    case TailKind::kTruncated: return truncated(rank_, std::move(blocks));
    case TailKind::kTerminated: return terminated(rank_, std::move(blocks), residual_);
    case TailKind::kPeriodic:
      return periodic(rank_, std::move(blocks), preperiod_ + prefix.size(), period_);
  }
  return *this;
}

JpaExpansion JpaExpansion::suffix(std::size_t offset) const {
  if (tail_ != TailKind::kPeriodic) {
    if (offset > blocks_.size()) {
      throw Error(ErrorKind::kDepthExceeded, "suffix offset beyond depth");
    }
    std::vector<DigitVector> rest(blocks_.begin() + static_cast<std::ptrdiff_t>(offset), blocks_.end());
    return tail_ == TailKind::kTruncated ? truncated(rank_, std::move(rest))
                                         : terminated(rank_, std::move(rest), residual_);
  }
  std::vector<DigitVector> rest;
  for (std::size_t k = offset; k < blocks_.size(); ++k) rest.push_back(blocks_[k]);
  const std::size_t pre = preperiod_ > offset ? preperiod_ - offset : 0;
  std::vector<DigitVector> period;
  for (std::size_t i = 0; i < period_.size(); ++i) period.push_back(block(offset + pre + i));
  return periodic(rank_, std::move(rest), pre, std::move(period));
}

bool JpaExpansion::same_stream(const JpaExpansion& other) const {
  if (rank_ != other.rank_ || tail_ != other.tail_) return false;
  if (tail_ != TailKind::kPeriodic) return blocks_ == other.blocks_;
  if (preperiod_ != other.preperiod_ || !(period_ == other.period_)) return false;
  for (std::size_t k = 0; k < preperiod_; ++k) {
    if (!(blocks_[k] == other.blocks_[k])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Matrices

IntMatrix step_matrix(const DigitVector& b) {
  const std::size_t n = b.rank();
  IntMatrix m(n, n);
  m(0, n - 1) = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m(i + 1, i) = 1;
    m(i + 1, n - 1) += b[i];
  }
  return m;
}

IntMatrix partial_product(const JpaExpansion& exp, std::size_t k) {
  IntMatrix p = IntMatrix::identity(exp.rank());
  for (std::size_t i = 0; i < k; ++i) p = p * step_matrix(exp.block(i));
  return p;
}

// ---------------------------------------------------------------------------
// Euclid and regular continued fractions

namespace {

EuclidResult remainder_chain(Integer a, Integer b) {
  EuclidResult out;
  while (b != 0) {
    Integer q;
    Integer r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    out.quotients.push_back(q);
    a = std::move(b);
    b = std::move(r);
  }
  out.gcd = a;
  return out;
}

// v[0] > 0, v[i] >= 0.
Integer jpa_integer_gcd(std::vector<Integer> v) {
  while (true) {
    if (v.size() == 1) return v[0];
    if (v.size() == 2) return remainder_chain(v[0], v[1]).gcd;
    const std::size_t n = v.size();
    std::vector<Integer> rem(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) mpz_fdiv_r(rem[i].get_mpz_t(), v[i + 1].get_mpz_t(), v[0].get_mpz_t());
    if (rem[0] == 0) {
      // v[0] divides v[1]; the gcd lives in v[0] and the other residues.
      std::vector<Integer> next{v[0]};
      for (std::size_t i = 1; i < rem.size(); ++i) {
        if (rem[i] != 0) next.push_back(rem[i]);
      }
      v = std::move(next);
      continue;
    }
    std::vector<Integer> next(rem.begin(), rem.end());
    next.push_back(v[0]);
    v = std::move(next);
  }
}

}  // namespace

EuclidResult euclid_gcd(std::span<const Integer> values) {
  if (values.size() < 2) throw Error(ErrorKind::kEmptyInput, "gcd needs at least two entries");
  for (const auto& v : values) {
    if (v <= 0) throw Error(ErrorKind::kNonPositiveEntry, "gcd entries must be positive");
  }
  if (values.size() == 2) return remainder_chain(values[0], values[1]);
  return EuclidResult{jpa_integer_gcd(std::vector<Integer>(values.begin(), values.end())), {}};
}

JpaExpansion regular_cf(const Scalar& x, std::size_t max_depth) {
  if (sign(x) <= 0) throw Error(ErrorKind::kNonPositiveState, "regular_cf needs x > 0");
  std::vector<DigitVector> digits;
  auto finish = [&](bool done) {
    JpaExpansion e = done ? JpaExpansion::terminated(2, std::move(digits))
                          : JpaExpansion::truncated(2, std::move(digits));
    e.set_source({Scalar(1), x});
    if (done && x.rational()) e.set_terminal_scale(Rational(1, x.rational()->get_den()));
    return e;
  };
  if (const Rational* r = x.rational()) {
    Integer a = r->get_num();
    Integer b = r->get_den();
    while (digits.size() < max_depth) {
      Integer q;
      Integer rem;
      mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      digits.push_back(DigitVector(std::vector<Integer>{q}));
      if (rem == 0) return finish(true);
      a = std::move(b);
      b = std::move(rem);
    }
    return finish(false);
  }
  Scalar value = x;
  while (digits.size() < max_depth) {
    Integer q = floor_exact(value);
    digits.push_back(DigitVector(std::vector<Integer>{q}));
    Scalar frac = value - Scalar(q);
    if (is_zero(frac)) return finish(true);
    value = Scalar(1) / frac;
  }
  return finish(false);
}

// ---------------------------------------------------------------------------
// Jacobi-Perron steps

namespace {

bool zero_fraction(const Scalar& f) {
  try {
    return is_zero(f);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kIndeterminateComparison) {
      throw Error(ErrorKind::kIndeterminateFloor, "cannot decide whether a fractional part vanishes");
    }
    throw;
  }
}

ScalarVector checked_normalized(const ScalarVector& theta) {
  if (theta.size() < 2) throw Error(ErrorKind::kInvalidArgument, "vector rank must be at least 2");
  for (const auto& s : theta) {
    if (sign(s) <= 0) throw Error(ErrorKind::kNonPositiveState, "every entry must be positive");
  }
  return normalize_leading(theta);
}

// Cheap rejection by enclosures before the exact comparison.
bool states_equal(const ScalarVector& a, const ScalarVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    RationalInterval ea = a[i].enclosure();
    RationalInterval eb = b[i].enclosure();
    if (ea.hi < eb.lo || eb.hi < ea.lo) return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!exactly_equal(a[i], b[i])) return false;
  }
  return true;
}

struct RecurrenceRun {
  std::vector<DigitVector> blocks;
  std::optional<std::pair<std::size_t, std::size_t>> cycle;  // (j, k): state_k == state_j
  bool terminated = false;
  ScalarVector residual;
  std::optional<Rational> scale;
};

// Iterates the JPA for at most max_steps steps; when `recur` is set, looks
// for state_k == state_j with j <= max_preperiod and k - j <= max_period.
RecurrenceRun run_jpa(const ScalarVector& normalized, std::size_t max_steps, bool recur,
                      std::size_t max_preperiod, std::size_t max_period) {
  RecurrenceRun run;
  std::vector<ScalarVector> states;
  ScalarVector state = normalized;
  bool rational = true;
  for (const auto& s : normalized) rational = rational && s.rational() != nullptr;
  Rational scale = 1;
  for (std::size_t k = 0;; ++k) {
    if (recur) {
      const std::size_t lo = k > max_period ? k - max_period : 0;
      const std::size_t hi = std::min(k, max_preperiod + 1);
      for (std::size_t j = lo; j < hi; ++j) {
        if (states_equal(states[j], state)) {
          run.cycle = {j, k};
          return run;
        }
      }
      if (k <= max_preperiod) states.push_back(state);
      if (k >= max_preperiod + max_period) recur = false;
    }
    if (k >= max_steps) return run;
    StepResult step = jpa_step(state);
    run.blocks.push_back(step.digits);
    if (!step.next) {
      run.terminated = true;
      run.residual = step.fractional;
      if (rational) {
        std::vector<Rational> parts{Rational(1)};
        for (std::size_t i = 1; i < step.fractional.size(); ++i) parts.push_back(*step.fractional[i].rational());
        run.scale = scale * rational_gcd(parts);
      }
      return run;
    }
    if (rational) scale *= *step.fractional[0].rational();
    state = std::move(*step.next);
  }
}

}  // namespace

StepResult jpa_step(const ScalarVector& state) {
  if (state.size() < 2) throw Error(ErrorKind::kInvalidArgument, "state rank must be at least 2");
  if (!exactly_equal(state[0], Scalar(1))) {
    throw Error(ErrorKind::kNonPositiveState, "state must be normalized to a leading 1");
  }
  StepResult out;
  std::vector<Integer> digits;
  digits.reserve(state.size() - 1);
  for (std::size_t i = 1; i < state.size(); ++i) {
    if (sign(state[i]) < 0) throw Error(ErrorKind::kNonPositiveState, "state entries must be non-negative");
    Integer b = floor_exact(state[i]);
    out.fractional.push_back(state[i] - Scalar(b));
    digits.push_back(std::move(b));
  }
  out.digits = DigitVector(std::move(digits));
  if (zero_fraction(out.fractional[0])) return out;
  const Scalar& f1 = out.fractional[0];
  ScalarVector next;
  next.reserve(state.size());
  next.emplace_back(1);
  for (std::size_t i = 1; i < out.fractional.size(); ++i) next.push_back(out.fractional[i] / f1);
  next.push_back(Scalar(1) / f1);
  out.next = std::move(next);
  return out;
}

JpaExpansion jpa_expand(const ScalarVector& theta, std::size_t max_depth) {
  ScalarVector normalized = checked_normalized(theta);
  RecurrenceRun run = run_jpa(normalized, max_depth, false, 0, 0);
  const std::size_t rank = normalized.size();
  JpaExpansion exp = run.terminated
                         ? JpaExpansion::terminated(rank, std::move(run.blocks), std::move(run.residual))
                         : JpaExpansion::truncated(rank, std::move(run.blocks));
  if (run.scale) exp.set_terminal_scale(*run.scale);
  exp.set_source(std::move(normalized));
  return exp;
}

ScalarVector jpa_state(const ScalarVector& theta, std::size_t steps) {
  ScalarVector state = checked_normalized(theta);
  for (std::size_t k = 0; k < steps; ++k) {
    StepResult step = jpa_step(state);
    if (!step.next) throw Error(ErrorKind::kDepthExceeded, "expansion terminated before the requested step");
    state = std::move(*step.next);
  }
  return state;
}

// ---------------------------------------------------------------------------
// Periodicity

namespace {

PeriodReport report_from_run(RecurrenceRun run, std::size_t rank, const ScalarVector& normalized) {
  PeriodReport rep;
  rep.examined = run.blocks.size();
  if (run.cycle) {
    auto [j, k] = *run.cycle;
    std::vector<DigitVector> period(run.blocks.begin() + static_cast<std::ptrdiff_t>(j),
                                    run.blocks.begin() + static_cast<std::ptrdiff_t>(k));
    JpaExpansion exp = JpaExpansion::periodic(rank, std::move(run.blocks), j, std::move(period));
    exp.set_source(normalized);
    rep.verdict = PeriodVerdict::kPeriodic;
    rep.certified = true;
    rep.preperiod = exp.preperiod();
    rep.period = exp.period();
    rep.expansion = std::move(exp);
  } else if (run.terminated) {
    JpaExpansion exp = JpaExpansion::terminated(rank, std::move(run.blocks), std::move(run.residual));
    if (run.scale) exp.set_terminal_scale(*run.scale);
    exp.set_source(normalized);
    rep.verdict = PeriodVerdict::kTerminated;
    rep.certified = true;
    rep.expansion = std::move(exp);
  } else {
    JpaExpansion exp = JpaExpansion::truncated(rank, std::move(run.blocks));
    exp.set_source(normalized);
    rep.verdict = PeriodVerdict::kAperiodicUpToBound;
    rep.expansion = std::move(exp);
  }
  return rep;
}

// Smallest (preperiod + period) explaining the finite digits with at least
// three full repetitions of the period.
std::optional<std::pair<std::size_t, std::size_t>> digit_period_guess(
    const std::vector<DigitVector>& blocks, std::size_t max_preperiod, std::size_t max_period) {
  const std::size_t depth = blocks.size();
  for (std::size_t total = 1; total <= max_preperiod + max_period; ++total) {
    for (std::size_t len = 1; len <= std::min(total, max_period); ++len) {
      const std::size_t pre = total - len;
      if (pre > max_preperiod || pre + 3 * len > depth) continue;
      bool ok = true;
      for (std::size_t k = pre + len; k < depth && ok; ++k) ok = blocks[k] == blocks[k - len];
      if (ok) return std::make_pair(pre, len);
    }
  }
  return std::nullopt;
}

}  // namespace

PeriodReport detect_period(const ScalarVector& theta, std::size_t max_preperiod,
                           std::size_t max_period) {
  ScalarVector normalized = checked_normalized(theta);
  if (!all_exact(normalized)) {
    // Intervals carry no decidable equality: only the digits are available.
    JpaExpansion exp = jpa_expand(theta, max_preperiod + 3 * max_period);
    return detect_period(exp, max_preperiod, max_period);
  }
  const std::size_t steps = max_preperiod + max_period;
  RecurrenceRun run = run_jpa(normalized, steps, true, max_preperiod, max_period);
  return report_from_run(std::move(run), normalized.size(), normalized);
}

PeriodReport detect_period(const JpaExpansion& exp, std::size_t max_preperiod,
                           std::size_t max_period) {
  if (exp.source() && all_exact(*exp.source()) && exp.tail() != TailKind::kTerminated) {
    return detect_period(*exp.source(), max_preperiod, max_period);
  }
  PeriodReport rep;
  rep.examined = exp.depth();
  switch (exp.tail()) {
    case TailKind::kPeriodic:
      rep.verdict = PeriodVerdict::kPeriodic;
      rep.preperiod = exp.preperiod();
      rep.period = exp.period();
      break;
    case TailKind::kTerminated:
      rep.verdict = PeriodVerdict::kTerminated;
      rep.certified = true;
      break;
    case TailKind::kTruncated:
      if (auto guess = digit_period_guess(exp.blocks(), max_preperiod, max_period)) {
        rep.verdict = PeriodVerdict::kPeriodic;
        rep.preperiod = guess->first;
        rep.period.assign(exp.blocks().begin() + static_cast<std::ptrdiff_t>(guess->first),
                          exp.blocks().begin() + static_cast<std::ptrdiff_t>(guess->first + guess->second));
      }
      break;
  }
  rep.expansion = exp;
  return rep;
}

JpaExpansion expand_with_period(const ScalarVector& theta, std::size_t max_depth,
                                std::size_t max_preperiod, std::size_t max_period) {
  ScalarVector normalized = checked_normalized(theta);
  if (!all_exact(normalized)) return jpa_expand(theta, max_depth);
  RecurrenceRun run = run_jpa(normalized, max_depth, true, max_preperiod, max_period);
  PeriodReport rep = report_from_run(std::move(run), normalized.size(), normalized);
  return std::move(*rep.expansion);
}

// ---------------------------------------------------------------------------
// Convergents and contraction

Convergent convergent(const JpaExpansion& exp, std::size_t k) {
  if (k > exp.available_depth()) {
    throw Error(ErrorKind::kDepthExceeded, "convergent index " + std::to_string(k) +
                                               " beyond depth " + std::to_string(exp.depth()));
  }
  IntMatrix p = partial_product(exp, k);
  Convergent out;
  out.vector = p.column(exp.rank() - 1);
  if (exp.source() && out.vector[0] != 0) {
    const ScalarVector& theta = *exp.source();
    Rational bound = 0;
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, 96);
    const Rational width(Integer(1), den);
    for (std::size_t i = 0; i < theta.size(); ++i) {
      Scalar diff = Scalar(make_rational(out.vector[i], out.vector[0])) - theta[i];
      RationalInterval enc = diff.algebraic() ? diff.algebraic()->enclosure(width) : diff.enclosure();
      bound = std::max({bound, abs_of(enc.lo), abs_of(enc.hi)});
    }
    out.error_bound = bound;
  }
  return out;
}

namespace {

double log_of_ratio(const Rational& q) {
  // q >= 1
  Rational excess = q - 1;
  if (excess < Rational(1, 2)) return std::log1p(excess.get_d());
  long exp_num = 0;
  long exp_den = 0;
  double mn = mpz_get_d_2exp(&exp_num, q.get_num_mpz_t());
  double md = mpz_get_d_2exp(&exp_den, q.get_den_mpz_t());
  return std::log(mn / md) + static_cast<double>(exp_num - exp_den) * std::log(2.0);
}

}  // namespace

double hilbert_distance(const std::vector<Integer>& u, const std::vector<Integer>& v) {
  const double inf = std::numeric_limits<double>::infinity();
  if (u.size() != v.size() || u.empty()) return inf;
  std::optional<Rational> hi;
  std::optional<Rational> lo;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const bool zu = u[i] == 0;
    const bool zv = v[i] == 0;
    if (zu != zv) return inf;
    if (zu) continue;
    Rational r = make_rational(u[i], v[i]);
    if (!hi || r > *hi) hi = r;
    if (!lo || r < *lo) lo = r;
  }
  if (!hi) return inf;
  return log_of_ratio(*hi / *lo);
}

ConvergenceReport convergence_diagnostic(const JpaExpansion& exp, double threshold) {
  ConvergenceReport rep;
  std::size_t depth = exp.depth();
  if (exp.tail() == TailKind::kPeriodic) depth = std::max<std::size_t>(depth, exp.preperiod() + 64);
  rep.depth = depth;
  if (depth == 0) return rep;
  const std::size_t n = exp.rank();
  IntMatrix p = IntMatrix::identity(n);
  bool ever_finite = false;
  for (std::size_t k = 0; k < depth; ++k) {
    p = p * step_matrix(exp.block(k));
    double diameter = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        diameter = std::max(diameter, hilbert_distance(p.column(i), p.column(j)));
      }
    }
    ever_finite = ever_finite || std::isfinite(diameter);
    rep.diameters.push_back(diameter);
  }
  if (rep.diameters.back() < threshold) {
    rep.verdict = ConvergenceVerdict::kContracting;
  } else if (!ever_finite && depth >= n) {
    rep.verdict = ConvergenceVerdict::kNonContracting;
  }
  return rep;
}

}  // namespace toric
