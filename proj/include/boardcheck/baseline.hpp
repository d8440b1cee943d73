#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>

#include "boardcheck/board.hpp"
#include "boardcheck/rules.hpp"

namespace boardcheck {

/// SplitMix64 stream. Each board gets its own stream keyed by (seed, index),
/// so any partition of the index range reproduces the serial draws exactly.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next();
  /// Uniform on [0, bound) without modulo bias.
  std::uint32_t below(std::uint32_t bound);
  /// Uniform on [0, 1) with 53 bits of resolution.
  double unit();

 private:
  std::uint64_t state_;
};

/// Every cell i.i.d. uniform over the 13 classes.
BoardState sample_uniform_board(CounterRng& rng);
inline BoardState sample_uniform_board(std::uint64_t seed, std::uint64_t index) {
  CounterRng rng(seed, index);
  return sample_uniform_board(rng);
}

struct BaselineEstimate {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  PerRule<std::uint64_t> violations{};

  double frequency(int rule) const { return static_cast<double>(violations[rule]) / static_cast<double>(samples); }
  double stderr_of(int rule) const;
  PerRule<double> frequencies() const;

  friend bool operator==(const BaselineEstimate&, const BaselineEstimate&) = default;
};

inline constexpr std::uint64_t kDefaultBaselineSamples = 1'000'000;
inline constexpr std::uint64_t kDefaultSeed = 20240201;

/// Monte-Carlo violation frequencies of the uniform guesser over boards
/// 0..samples-1 of `seed`. `threads` = 0 picks the hardware concurrency; the
/// result is identical for every thread count. Throws std::invalid_argument
/// when samples == 0.
BaselineEstimate estimate_random_frequencies(std::uint64_t samples, std::uint64_t seed, unsigned threads = 0);

/// Exact violation probability under the uniform model for families i, iii,
/// iv and v; nullopt for the rest.
std::optional<double> analytic_frequency(RuleId rule);

// Cache file: JSON with seed, samples, rule_set_version and per-rule
// frequency/stderr/violations.
void save_baseline(const std::filesystem::path& path, const BaselineEstimate& estimate);
/// nullopt when the file is missing, unreadable, or from another rule-set version.
std::optional<BaselineEstimate> load_baseline(const std::filesystem::path& path);

}  // namespace boardcheck
