#pragma once

#include <string_view>

#include "json.hpp"

#include "boardcheck/baseline.hpp"
#include "boardcheck/metrics.hpp"
#include "boardcheck/rules.hpp"

namespace boardcheck {

inline constexpr std::string_view kReportVersion = "1";
/// How mu_c and per-rule tallies count: each of the 15 color-instantiated
/// rules contributes at most one violation per board.
inline constexpr std::string_view kCountingConvention = "per-instance-15-rules";

nlohmann::ordered_json to_json(const EvalReport& report);
nlohmann::ordered_json to_json(const ViolationReport& report);
nlohmann::ordered_json to_json(const BaselineEstimate& estimate);

}  // namespace boardcheck
