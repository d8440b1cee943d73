#pragma once

#include <cstdint>

#include "boardcheck/board.hpp"

namespace boardcheck {

/// Synthetic noisy predictor: each cell is independently replaced, with
/// probability `epsilon`, by a class drawn uniformly from all 13.
struct CorruptionSpec {
  double epsilon = 0.0;
  std::uint64_t seed = 0;
};

/// Deterministic in (spec, index); `index` is the board's position in its corpus.
/// Throws std::invalid_argument unless 0 <= epsilon <= 1.
BoardState corrupt(const BoardState& board, const CorruptionSpec& spec, std::uint64_t index);

}  // namespace boardcheck
