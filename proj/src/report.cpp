#include "boardcheck/report.hpp"

namespace boardcheck {

nlohmann::ordered_json to_json(const EvalReport& r) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["report_version"] = kReportVersion;
  doc["convention"] = kCountingConvention;
  doc["rule_set_version"] = kRuleSetVersion;
  doc["n"] = r.n;
  doc["units"] = {{"em_pct", "percent"}, {"c_pct", "percent"}, {"f1", "fraction"},
                  {"sf1", "fraction"},   {"gap", "fraction"},  {"mu_c", "violations per prediction"}};
  doc["em_pct"] = r.em_pct;
  doc["f1"] = r.f1;
  doc["c_pct"] = r.c_pct;
  doc["sf1"] = r.sf1;
  doc["gap"] = r.gap;
  doc["mu_c"] = r.mu_c;

  ordered_json per_rule = ordered_json::object();
  for (int i = 0; i < kRuleCount; ++i) {
    ordered_json entry = {{"category", to_string(category_of(kAllRules[i]))},
                          {"count", r.per_rule_count[i]},
                          {"frequency", r.per_rule_freq[i]}};
    if (r.adjusted) entry["adjusted_likelihood"] = r.adjusted->per_rule[i];
    per_rule[to_string(kAllRules[i])] = entry;
  }
  doc["per_rule"] = per_rule;

  ordered_json per_category = ordered_json::object();
  for (RuleCategory c : {RuleCategory::Counting, RuleCategory::Localizing}) {
    auto pick = [c](const CategoryValues& v) { return c == RuleCategory::Counting ? v.counting : v.localizing; };
    ordered_json entry;
    entry["prevalence_over_violators"] =
        r.prevalence.over_violators ? ordered_json(pick(*r.prevalence.over_violators)) : ordered_json(nullptr);
    entry["prevalence_over_all"] = pick(r.prevalence.over_all);
    if (r.adjusted) entry["adjusted_likelihood_mean"] = pick(r.adjusted->per_category);
    per_category[std::string(to_string(c))] = entry;
  }
  doc["per_category"] = per_category;
  doc["prevalence_denominators"] = {{"over_violators", "predictions with at least one violation"},
                                    {"over_all", "all predictions"}};
  doc["violators"] = r.prevalence.violators;
  doc["insane_ground_truth"] = r.insane_truth;
  return doc;
}

nlohmann::ordered_json to_json(const ViolationReport& report) {
  nlohmann::ordered_json ids = nlohmann::ordered_json::array();
  for (RuleId id : report.violations()) ids.push_back(to_string(id));
  return {{"sane", report.sane()}, {"violation_count", report.violation_count()}, {"violations", ids}};
}

nlohmann::ordered_json to_json(const BaselineEstimate& est) {
  nlohmann::ordered_json doc;
  doc["rule_set_version"] = kRuleSetVersion;
  doc["seed"] = est.seed;
  doc["samples"] = est.samples;
  nlohmann::ordered_json rules = nlohmann::ordered_json::object();
  for (int i = 0; i < kRuleCount; ++i) {
    rules[to_string(kAllRules[i])] = {
        {"frequency", est.frequency(i)}, {"stderr", est.stderr_of(i)}, {"violations", est.violations[i]}};
  }
  doc["per_rule"] = rules;
  return doc;
}

}  // namespace boardcheck
