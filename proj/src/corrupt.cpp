#include "boardcheck/corrupt.hpp"

#include <stdexcept>

#include "boardcheck/baseline.hpp"

namespace boardcheck {

namespace {
// Keeps corruption draws independent of baseline draws under the same seed.
constexpr std::uint64_t kCorruptionSalt = 0xC0FFEE5EED5A17ULL;
}  // namespace

BoardState corrupt(const BoardState& board, const CorruptionSpec& spec, std::uint64_t index) {
  if (!(spec.epsilon >= 0.0 && spec.epsilon <= 1.0)) throw std::invalid_argument("epsilon must lie in [0,1]");
  if (spec.epsilon == 0.0) return board;
  CounterRng rng(spec.seed ^ kCorruptionSalt, index);
  BoardState out = board;
  for (int i = 0; i < 64; ++i) {
    if (rng.unit() < spec.epsilon) out.set(Square::from_index(i), piece_from_code(static_cast<int>(rng.below(kPieceClasses))));
  }
  return out;
}

}  // namespace boardcheck
