#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "boardcheck/board.hpp"
#include "boardcheck/rules.hpp"

namespace boardcheck {

enum class MetricsErrorKind { EmptySet, LengthMismatch, ZeroBaseline };

class MetricsError : public std::runtime_error {
 public:
  MetricsError(MetricsErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  MetricsErrorKind kind() const { return kind_; }

 private:
  MetricsErrorKind kind_;
};

/// Index-aligned ground truth / prediction pairs.
struct EvalSet {
  std::vector<std::pair<BoardState, BoardState>> pairs;

  EvalSet() = default;
  /// Throws MetricsError(LengthMismatch) if the lists differ in length.
  EvalSet(const std::vector<BoardState>& truth, const std::vector<BoardState>& predictions);

  std::size_t n() const { return pairs.size(); }
  void add(BoardState truth, BoardState prediction) { pairs.emplace_back(std::move(truth), std::move(prediction)); }
};

/// Dice overlap of agreeing non-empty cells: 2 * matches / (|y| + |yhat|).
/// Defined as 1 when both boards are empty.
double pair_f1(const BoardState& truth, const BoardState& prediction);

// Set-level metrics. All throw MetricsError(EmptySet) when set.n() == 0.
double exact_match(const EvalSet& set);        // percent
double f1(const EvalSet& set);                 // fraction
double contradiction_pct(const EvalSet& set);  // percent of predictions outside the sane set
double sane_f1(const EvalSet& set);            // insane predictions score 0 but stay in the mean
double mean_violations(const EvalSet& set);    // per-instance count over the 15 rules

PerRule<double> per_rule_frequency(const EvalSet& set);

struct CategoryValues {
  double counting = 0.0;
  double localizing = 0.0;
};

struct AdjustedLikelihood {
  PerRule<double> per_rule{};
  /// Mean ratio over each category's rules.
  CategoryValues per_category;
};

/// f_model / f_random, rule by rule. Throws MetricsError(ZeroBaseline) if any
/// f_random entry is zero.
AdjustedLikelihood adjusted_likelihood(const PerRule<double>& f_model, const PerRule<double>& f_random);

struct CategoryPrevalence {
  std::int64_t predictions = 0;
  std::int64_t violators = 0;
  /// Share of violating predictions that break at least one rule of the
  /// category. Absent when nothing was violated.
  std::optional<CategoryValues> over_violators;
  /// Same numerators over all predictions.
  CategoryValues over_all;
};

CategoryPrevalence category_prevalence(const EvalSet& set);

struct EvalReport {
  std::int64_t n = 0;
  double em_pct = 0.0;
  double f1 = 0.0;
  double c_pct = 0.0;
  double sf1 = 0.0;
  double gap = 0.0;
  double mu_c = 0.0;
  PerRule<double> per_rule_freq{};
  PerRule<std::int64_t> per_rule_count{};
  CategoryPrevalence prevalence;
  std::optional<AdjustedLikelihood> adjusted;
  /// Ground-truth boards that are themselves insane (diagnostic only).
  std::int64_t insane_truth = 0;
};

/// Streaming evaluator with exact integer tallies. Partial accumulators can be
/// merged in any order and give bit-identical reports.
class EvalAccumulator {
 public:
  void add(const BoardState& truth, const BoardState& prediction);
  void merge(const EvalAccumulator& other);
  std::int64_t n() const { return n_; }

  /// Throws MetricsError(EmptySet) when nothing was added, and propagates
  /// ZeroBaseline from adjusted_likelihood when a baseline is given.
  EvalReport report(const std::optional<PerRule<double>>& f_random = std::nullopt) const;

 private:
  std::int64_t n_ = 0;
  std::int64_t exact_ = 0;
  std::int64_t insane_ = 0;
  std::int64_t violations_ = 0;
  std::int64_t counting_violators_ = 0;
  std::int64_t localizing_violators_ = 0;
  std::int64_t insane_truth_ = 0;
  PerRule<std::int64_t> per_rule_{};
  // Numerators of pair_f1 (2 * matches) bucketed by denominator |y| + |yhat|.
  // Bucket 0 holds pairs of two empty boards, each worth exactly 1.
  std::array<std::int64_t, 129> f1_num_{};
  std::array<std::int64_t, 129> sf1_num_{};
};

EvalReport evaluate(const EvalSet& set, const std::optional<PerRule<double>>& f_random = std::nullopt);

}  // namespace boardcheck
