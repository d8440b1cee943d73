#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boardcheck/board.hpp"

namespace boardcheck {

// Sanity rules that every position reachable from the initial position obeys.
// Families i..viii; every family except ii is instantiated once per color,
// giving 15 rules in total. Counts |x| below refer to the rule's color.
//
//   i    |k| = 1
//   ii   the two colors' kings are not on adjacent squares
//   iii  |p|+|n|+|b|+|r|+|q| <= 15
//   iv   |p| <= 8
//   v    no pawn on rank 1 or rank 8
//   vi   |p| = 8  =>  |q| <= 1, |b| <= 2, |n| <= 2, |r| <= 2
//   vii  |p| < 8  =>  excess queens/bishops/knights/rooks <= 8 - |p|
//   viii |p| = 8 and |b| = 2  =>  bishops on opposite-colored squares
enum class RuleFamily : std::uint8_t { I = 1, II, III, IV, V, VI, VII, VIII };

enum class RuleColor : std::uint8_t { Black, White, Both };

enum class RuleCategory : std::uint8_t { Counting, Localizing };

struct RuleId {
  RuleFamily family = RuleFamily::I;
  RuleColor color = RuleColor::Black;

  friend constexpr bool operator==(RuleId, RuleId) = default;
};

inline constexpr int kRuleCount = 15;

/// Canonical rule order; also the order of every per-rule table.
inline constexpr std::array<RuleId, kRuleCount> kAllRules = {{
    {RuleFamily::I, RuleColor::Black},    {RuleFamily::I, RuleColor::White},
    {RuleFamily::II, RuleColor::Both},
    {RuleFamily::III, RuleColor::Black},  {RuleFamily::III, RuleColor::White},
    {RuleFamily::IV, RuleColor::Black},   {RuleFamily::IV, RuleColor::White},
    {RuleFamily::V, RuleColor::Black},    {RuleFamily::V, RuleColor::White},
    {RuleFamily::VI, RuleColor::Black},   {RuleFamily::VI, RuleColor::White},
    {RuleFamily::VII, RuleColor::Black},  {RuleFamily::VII, RuleColor::White},
    {RuleFamily::VIII, RuleColor::Black}, {RuleFamily::VIII, RuleColor::White},
}};

/// Version tag for persisted artifacts that depend on the rule definitions.
inline constexpr std::string_view kRuleSetVersion = "sanity-rules-15-v1";

template <class T>
using PerRule = std::array<T, kRuleCount>;

/// Position of `rule` in kAllRules.
int rule_index(RuleId rule);

/// "i.b", "i.w", "ii", "iii.b", ... "viii.w".
std::string to_string(RuleId rule);
std::optional<RuleId> parse_rule_id(std::string_view text);

RuleCategory category_of(RuleId rule);
std::string_view to_string(RuleCategory category);

/// Bit i set <=> kAllRules[i] violated.
using RuleMask = std::uint16_t;

class ViolationReport {
 public:
  ViolationReport() = default;
  explicit ViolationReport(RuleMask mask) : mask_(mask) {}

  bool sane() const { return mask_ == 0; }
  int violation_count() const;
  bool violated(RuleId rule) const { return (mask_ >> rule_index(rule)) & 1U; }
  bool any_in(RuleCategory category) const;
  /// Violated rules in canonical order.
  std::vector<RuleId> violations() const;
  RuleMask mask() const { return mask_; }

  friend bool operator==(const ViolationReport&, const ViolationReport&) = default;

 private:
  RuleMask mask_ = 0;
};

/// True when the rule is satisfied.
bool check_rule(const BoardState& board, RuleId rule);

/// Evaluates all 15 rules in a single pass over the cells.
ViolationReport check(const BoardState& board);

inline bool is_sane(const BoardState& board) { return check(board).sane(); }

}  // namespace boardcheck
