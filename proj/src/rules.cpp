#include "boardcheck/rules.hpp"

#include <algorithm>
#include <bit>

namespace boardcheck {

namespace {

constexpr std::array<std::string_view, 8> kFamilyNames = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii"};

// Everything the rules need, gathered in one pass over the 64 cells.
struct BoardFacts {
  std::array<int, kPieceClasses> counts{};
  std::array<std::uint64_t, 2> kings{};     // bitboards by Color
  std::array<bool, 2> back_rank_pawn{};     // pawn on rank 1 or 8
  std::array<int, 2> dark_bishops{};

  explicit BoardFacts(const BoardState& board) {
    const auto& cells = board.cells();
    for (int i = 0; i < 64; ++i) {
      Piece p = cells[i];
      ++counts[code_of(p)];
      if (is_empty(p)) continue;
      auto c = static_cast<int>(color_of(p));
      switch (type_of(p)) {
        case PieceType::King:
          kings[c] |= std::uint64_t{1} << i;
          break;
        case PieceType::Pawn:
          if (i < 8 || i >= 56) back_rank_pawn[c] = true;
          break;
        case PieceType::Bishop:
          if (Square::from_index(i).is_dark()) ++dark_bishops[c];
          break;
        default:
          break;
      }
    }
  }

  int n(Color c, PieceType t) const { return counts[code_of(make_piece(c, t))]; }
};

std::uint64_t king_neighbourhood(std::uint64_t b) {
  constexpr std::uint64_t kNotFileA = 0xfefefefefefefefeULL;
  constexpr std::uint64_t kNotFileH = 0x7f7f7f7f7f7f7f7fULL;
  std::uint64_t row = b | ((b << 1) & kNotFileA) | ((b >> 1) & kNotFileH);
  return row | (row << 8) | (row >> 8);
}

bool holds(const BoardFacts& f, RuleId rule) {
  if (rule.family == RuleFamily::II) {
    // Vacuous when either side has no king; rule i reports that case.
    return (king_neighbourhood(f.kings[static_cast<int>(Color::White)]) &
            f.kings[static_cast<int>(Color::Black)]) == 0;
  }
  Color c = rule.color == RuleColor::White ? Color::White : Color::Black;
  int pawns = f.n(c, PieceType::Pawn);
  int knights = f.n(c, PieceType::Knight);
  int bishops = f.n(c, PieceType::Bishop);
  int rooks = f.n(c, PieceType::Rook);
  int queens = f.n(c, PieceType::Queen);
  switch (rule.family) {
    case RuleFamily::I:
      return f.n(c, PieceType::King) == 1;
    case RuleFamily::III:
      return pawns + knights + bishops + rooks + queens <= 15;
    case RuleFamily::IV:
      return pawns <= 8;
    case RuleFamily::V:
      return !f.back_rank_pawn[static_cast<int>(c)];
    case RuleFamily::VI:
      return pawns != 8 || (queens <= 1 && bishops <= 2 && knights <= 2 && rooks <= 2);
    case RuleFamily::VII: {
      if (pawns >= 8) return true;
      int excess = std::max(0, queens - 1) + std::max(0, bishops - 2) + std::max(0, knights - 2) +
                   std::max(0, rooks - 2);
      return excess <= 8 - pawns;
    }
    case RuleFamily::VIII:
      return !(pawns == 8 && bishops == 2) || f.dark_bishops[static_cast<int>(c)] == 1;
    case RuleFamily::II:
      break;
  }
  return true;
}

}  // namespace

int rule_index(RuleId rule) {
  int f = static_cast<int>(rule.family);
  if (f == 1) return rule.color == RuleColor::White ? 1 : 0;
  if (f == 2) return 2;
  return 3 + (f - 3) * 2 + (rule.color == RuleColor::White ? 1 : 0);
}

std::string to_string(RuleId rule) {
  std::string out(kFamilyNames[static_cast<int>(rule.family) - 1]);
  if (rule.family != RuleFamily::II) out += rule.color == RuleColor::White ? ".w" : ".b";
  return out;
}

std::optional<RuleId> parse_rule_id(std::string_view text) {
  for (RuleId r : kAllRules)
    if (to_string(r) == text) return r;
  return std::nullopt;
}

RuleCategory category_of(RuleId rule) {
  switch (rule.family) {
    case RuleFamily::II:
    case RuleFamily::V:
    case RuleFamily::VIII:
      return RuleCategory::Localizing;
    default:
      return RuleCategory::Counting;
  }
}

std::string_view to_string(RuleCategory category) {
  return category == RuleCategory::Counting ? "counting" : "localizing";
}

int ViolationReport::violation_count() const { return std::popcount(mask_); }

bool ViolationReport::any_in(RuleCategory category) const {
  for (int i = 0; i < kRuleCount; ++i)
    if (((mask_ >> i) & 1U) && category_of(kAllRules[i]) == category) return true;
  return false;
}

std::vector<RuleId> ViolationReport::violations() const {
  std::vector<RuleId> out;
  for (int i = 0; i < kRuleCount; ++i)
    if ((mask_ >> i) & 1U) out.push_back(kAllRules[i]);
  return out;
}

bool check_rule(const BoardState& board, RuleId rule) { return holds(BoardFacts(board), rule); }

ViolationReport check(const BoardState& board) {
  BoardFacts facts(board);
  RuleMask mask = 0;
  for (int i = 0; i < kRuleCount; ++i)
    if (!holds(facts, kAllRules[i])) mask |= static_cast<RuleMask>(1U << i);
  return ViolationReport(mask);
}

}  // namespace boardcheck
