#include "boardcheck/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "boardcheck/report.hpp"

namespace boardcheck {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double binomial_pmf(int n, int k, double p) {
  double log_choose = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
  return std::exp(log_choose + k * std::log(p) + (n - k) * std::log1p(-p));
}

double binomial_upper_tail(int n, int above, double p) {
  double total = 0.0;
  for (int k = n; k > above; --k) total += binomial_pmf(n, k, p);
  return total;
}

PerRule<std::uint64_t> tally_range(std::uint64_t seed, std::uint64_t begin, std::uint64_t end) {
  PerRule<std::uint64_t> counts{};
  for (std::uint64_t i = begin; i < end; ++i) {
    RuleMask m = check(sample_uniform_board(seed, i)).mask();
    for (int r = 0; r < kRuleCount; ++r) counts[r] += (m >> r) & 1U;
  }
  return counts;
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t index) : state_(mix64(seed ^ mix64(index + kGolden))) {}

std::uint64_t CounterRng::next() { return mix64(state_ += kGolden); }

std::uint32_t CounterRng::below(std::uint32_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return static_cast<std::uint32_t>(x % bound);
}

double CounterRng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

BoardState sample_uniform_board(CounterRng& rng) {
  BoardState b;
  for (int i = 0; i < 64; ++i) b.set(Square::from_index(i), piece_from_code(static_cast<int>(rng.below(kPieceClasses))));
  return b;
}

double BaselineEstimate::stderr_of(int rule) const {
  double f = frequency(rule);
  return std::sqrt(f * (1.0 - f) / static_cast<double>(samples));
}

PerRule<double> BaselineEstimate::frequencies() const {
  PerRule<double> out{};
  for (int i = 0; i < kRuleCount; ++i) out[i] = frequency(i);
  return out;
}

BaselineEstimate estimate_random_frequencies(std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  if (samples == 0) throw std::invalid_argument("baseline needs at least one sample");
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, samples));

  std::vector<PerRule<std::uint64_t>> partial(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    std::uint64_t begin = samples * t / threads;
    std::uint64_t end = samples * (t + 1) / threads;
    workers.emplace_back([&, t, begin, end] { partial[t] = tally_range(seed, begin, end); });
  }
  for (auto& w : workers) w.join();

  BaselineEstimate est;
  est.samples = samples;
  est.seed = seed;
  for (const auto& p : partial)
    for (int r = 0; r < kRuleCount; ++r) est.violations[r] += p[r];
  return est;
}

std::optional<double> analytic_frequency(RuleId rule) {
  constexpr double kOne = 1.0 / kPieceClasses;
  switch (rule.family) {
    case RuleFamily::I:
      return 1.0 - binomial_pmf(64, 1, kOne);
    case RuleFamily::III:
      // Five of the 13 classes are that color's non-king pieces.
      return binomial_upper_tail(64, 15, 5.0 * kOne);
    case RuleFamily::IV:
      return binomial_upper_tail(64, 8, kOne);
    case RuleFamily::V:
      return 1.0 - std::pow(1.0 - kOne, 16);
    default:
      return std::nullopt;
  }
}

void save_baseline(const std::filesystem::path& path, const BaselineEstimate& est) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write baseline cache " + path.string());
  out << to_json(est).dump(2) << '\n';
}

std::optional<BaselineEstimate> load_baseline(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    auto doc = nlohmann::json::parse(in);
    if (doc.at("rule_set_version").get<std::string>() != kRuleSetVersion) return std::nullopt;
    BaselineEstimate est;
    est.seed = doc.at("seed").get<std::uint64_t>();
    est.samples = doc.at("samples").get<std::uint64_t>();
    if (est.samples == 0) return std::nullopt;
    const auto& rules = doc.at("per_rule");
    for (int i = 0; i < kRuleCount; ++i) est.violations[i] = rules.at(to_string(kAllRules[i])).at("violations").get<std::uint64_t>();
    return est;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

}  // namespace boardcheck
