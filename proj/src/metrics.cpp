#include "boardcheck/metrics.hpp"

namespace boardcheck {

namespace {

struct DiceParts {
  int matches = 0;
  int denominator = 0;  // |y| + |yhat|
};

DiceParts dice_parts(const BoardState& y, const BoardState& yhat) {
  DiceParts d;
  const auto& a = y.cells();
  const auto& b = yhat.cells();
  for (int j = 0; j < 64; ++j) {
    bool ya = !is_empty(a[j]);
    bool yb = !is_empty(b[j]);
    d.denominator += ya + yb;
    d.matches += ya && a[j] == b[j];
  }
  return d;
}

// Exact sum of Dice values: integer numerators bucketed by denominator, so
// the total does not depend on the order pairs were added in.
class DiceSum {
 public:
  void add(DiceParts d) {
    if (d.denominator == 0) {
      ++buckets_[0];
    } else {
      buckets_[d.denominator] += 2 * d.matches;
    }
  }
  double value() const { return value_of(buckets_); }

  static double value_of(const std::array<std::int64_t, 129>& buckets) {
    double total = static_cast<double>(buckets[0]);
    for (int d = 1; d <= 128; ++d)
      if (buckets[d]) total += static_cast<double>(buckets[d]) / d;
    return total;
  }

 private:
  std::array<std::int64_t, 129> buckets_{};
};

void require_nonempty(const EvalSet& set) {
  if (set.n() == 0) throw MetricsError(MetricsErrorKind::EmptySet, "evaluation set is empty");
}

double pct(std::int64_t k, std::int64_t n) { return 100.0 * static_cast<double>(k) / static_cast<double>(n); }
double frac(std::int64_t k, std::int64_t n) { return static_cast<double>(k) / static_cast<double>(n); }

}  // namespace

EvalSet::EvalSet(const std::vector<BoardState>& truth, const std::vector<BoardState>& predictions) {
  if (truth.size() != predictions.size()) {
    throw MetricsError(MetricsErrorKind::LengthMismatch, "ground truth has " + std::to_string(truth.size()) +
                                                             " boards but predictions have " +
                                                             std::to_string(predictions.size()));
  }
  pairs.reserve(truth.size());
  for (std::size_t i = 0; i < truth.size(); ++i) pairs.emplace_back(truth[i], predictions[i]);
}

double pair_f1(const BoardState& truth, const BoardState& prediction) {
  DiceParts d = dice_parts(truth, prediction);
  if (d.denominator == 0) return 1.0;
  return 2.0 * d.matches / d.denominator;
}

double exact_match(const EvalSet& set) {
  require_nonempty(set);
  std::int64_t k = 0;
  for (const auto& [y, yhat] : set.pairs) k += y == yhat;
  return pct(k, static_cast<std::int64_t>(set.n()));
}

double f1(const EvalSet& set) {
  require_nonempty(set);
  DiceSum sum;
  for (const auto& [y, yhat] : set.pairs) sum.add(dice_parts(y, yhat));
  return sum.value() / static_cast<double>(set.n());
}

double contradiction_pct(const EvalSet& set) {
  require_nonempty(set);
  std::int64_t k = 0;
  for (const auto& pair : set.pairs) k += !check(pair.second).sane();
  return pct(k, static_cast<std::int64_t>(set.n()));
}

double sane_f1(const EvalSet& set) {
  require_nonempty(set);
  DiceSum sum;
  for (const auto& [y, yhat] : set.pairs)
    if (check(yhat).sane()) sum.add(dice_parts(y, yhat));
  return sum.value() / static_cast<double>(set.n());
}

double mean_violations(const EvalSet& set) {
  require_nonempty(set);
  std::int64_t k = 0;
  for (const auto& pair : set.pairs) k += check(pair.second).violation_count();
  return frac(k, static_cast<std::int64_t>(set.n()));
}

PerRule<double> per_rule_frequency(const EvalSet& set) {
  require_nonempty(set);
  PerRule<std::int64_t> counts{};
  for (const auto& pair : set.pairs) {
    ViolationReport r = check(pair.second);
    for (int i = 0; i < kRuleCount; ++i) counts[i] += (r.mask() >> i) & 1U;
  }
  PerRule<double> out{};
  for (int i = 0; i < kRuleCount; ++i) out[i] = frac(counts[i], static_cast<std::int64_t>(set.n()));
  return out;
}

AdjustedLikelihood adjusted_likelihood(const PerRule<double>& f_model, const PerRule<double>& f_random) {
  AdjustedLikelihood out;
  double sums[2] = {0.0, 0.0};
  int sizes[2] = {0, 0};
  for (int i = 0; i < kRuleCount; ++i) {
    if (!(f_random[i] > 0.0)) {
      throw MetricsError(MetricsErrorKind::ZeroBaseline,
                         "random-guesser frequency for rule " + to_string(kAllRules[i]) + " is zero");
    }
    out.per_rule[i] = f_model[i] / f_random[i];
    int c = static_cast<int>(category_of(kAllRules[i]));
    sums[c] += out.per_rule[i];
    ++sizes[c];
  }
  out.per_category.counting = sums[0] / sizes[0];
  out.per_category.localizing = sums[1] / sizes[1];
  return out;
}

CategoryPrevalence category_prevalence(const EvalSet& set) {
  require_nonempty(set);
  EvalAccumulator acc;
  for (const auto& [y, yhat] : set.pairs) acc.add(y, yhat);
  return acc.report().prevalence;
}

void EvalAccumulator::add(const BoardState& truth, const BoardState& prediction) {
  ++n_;
  exact_ += truth == prediction;
  if (!check(truth).sane()) ++insane_truth_;

  const ViolationReport r = check(prediction);
  const DiceParts d = dice_parts(truth, prediction);
  const std::int64_t value = d.denominator == 0 ? 1 : 2 * d.matches;
  f1_num_[d.denominator] += value;
  if (r.sane()) {
    sf1_num_[d.denominator] += value;
    return;
  }
  ++insane_;
  violations_ += r.violation_count();
  counting_violators_ += r.any_in(RuleCategory::Counting);
  localizing_violators_ += r.any_in(RuleCategory::Localizing);
  for (int i = 0; i < kRuleCount; ++i) per_rule_[i] += (r.mask() >> i) & 1U;
}

void EvalAccumulator::merge(const EvalAccumulator& o) {
  n_ += o.n_;
  exact_ += o.exact_;
  insane_ += o.insane_;
  violations_ += o.violations_;
  counting_violators_ += o.counting_violators_;
  localizing_violators_ += o.localizing_violators_;
  insane_truth_ += o.insane_truth_;
  for (int i = 0; i < kRuleCount; ++i) per_rule_[i] += o.per_rule_[i];
  for (std::size_t d = 0; d < f1_num_.size(); ++d) {
    f1_num_[d] += o.f1_num_[d];
    sf1_num_[d] += o.sf1_num_[d];
  }
}

EvalReport EvalAccumulator::report(const std::optional<PerRule<double>>& f_random) const {
  if (n_ == 0) throw MetricsError(MetricsErrorKind::EmptySet, "evaluation set is empty");
  EvalReport r;
  r.n = n_;
  r.em_pct = pct(exact_, n_);
  r.f1 = DiceSum::value_of(f1_num_) / static_cast<double>(n_);
  r.c_pct = pct(insane_, n_);
  r.sf1 = DiceSum::value_of(sf1_num_) / static_cast<double>(n_);
  r.gap = r.f1 - r.sf1;
  r.mu_c = frac(violations_, n_);
  r.per_rule_count = per_rule_;
  for (int i = 0; i < kRuleCount; ++i) r.per_rule_freq[i] = frac(per_rule_[i], n_);
  r.prevalence.predictions = n_;
  r.prevalence.violators = insane_;
  r.prevalence.over_all = {frac(counting_violators_, n_), frac(localizing_violators_, n_)};
  if (insane_ > 0) {
    r.prevalence.over_violators = CategoryValues{frac(counting_violators_, insane_), frac(localizing_violators_, insane_)};
  }
  if (f_random) r.adjusted = adjusted_likelihood(r.per_rule_freq, *f_random);
  r.insane_truth = insane_truth_;
  return r;
}

EvalReport evaluate(const EvalSet& set, const std::optional<PerRule<double>>& f_random) {
  EvalAccumulator acc;
  for (const auto& [y, yhat] : set.pairs) acc.add(y, yhat);
  return acc.report(f_random);
}

}  // namespace boardcheck
