#include "boardcheck/board.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace boardcheck {

namespace {

constexpr std::string_view kPieceChars = "xpnbrqkPNBRQK";

constexpr int fen_order_to_index(int k) { return (7 - k / 8) * 8 + k % 8; }

}  // namespace

char to_char(Piece p) { return kPieceChars[code_of(p)]; }

std::optional<Piece> piece_from_char(char c) {
  auto pos = kPieceChars.find(c);
  if (pos == std::string_view::npos || pos == 0) return std::nullopt;
  return piece_from_code(static_cast<int>(pos));
}

std::string Square::name() const {
  return {static_cast<char>('a' + file), static_cast<char>('1' + rank)};
}

std::optional<Square> Square::parse(std::string_view name) {
  if (name.size() != 2) return std::nullopt;
  char f = static_cast<char>(name[0] | 0x20);
  char r = name[1];
  if (f < 'a' || f > 'h' || r < '1' || r > '8') return std::nullopt;
  return Square(f - 'a', r - '1');
}

BoardState BoardState::starting() { return parse_fen("rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR"); }

int BoardState::occupied() const {
  return static_cast<int>(std::count_if(cells_.begin(), cells_.end(), [](Piece p) { return !is_empty(p); }));
}

BoardState BoardState::mirrored() const {
  BoardState out;
  for (int i = 0; i < 64; ++i) {
    Square s = Square::from_index(i);
    Piece p = cells_[i];
    if (!is_empty(p)) p = make_piece(opposite(color_of(p)), type_of(p));
    out.set(Square(s.file, 7 - s.rank), p);
  }
  return out;
}

int PieceCount::total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

PieceCount piece_count(const BoardState& board) {
  PieceCount pc;
  for (Piece p : board.cells()) ++pc.counts_[code_of(p)];
  return pc;
}

BoardState parse_fen(std::string_view text) {
  auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) begin = text.size();
  text.remove_prefix(begin);
  text = text.substr(0, text.find_first_of(" \t\r\n"));

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool ok = c == '/' || (c >= '1' && c <= '8') || piece_from_char(c).has_value();
    if (!ok) {
      throw FenError(FenErrorKind::IllegalCharacter,
                     "illegal character '" + std::string(1, c) + "' at offset " + std::to_string(i));
    }
  }
  auto groups = std::count(text.begin(), text.end(), '/') + 1;
  if (groups != 8) {
    throw FenError(FenErrorKind::BadRankCount, "expected 8 rank groups, found " + std::to_string(groups));
  }

  BoardState board;
  int rank = 7;
  int file = 0;
  auto finish_rank = [&] {
    if (file != 8) {
      throw FenError(FenErrorKind::BadRankWidth,
                     "rank " + std::to_string(rank + 1) + " has width " + std::to_string(file));
    }
  };
  for (char c : text) {
    if (c == '/') {
      finish_rank();
      --rank;
      file = 0;
      continue;
    }
    int width = (c >= '1' && c <= '8') ? c - '0' : 1;
    if (file + width > 8) {
      throw FenError(FenErrorKind::BadRankWidth, "rank " + std::to_string(rank + 1) + " is wider than 8");
    }
    if (width == 1 && !(c >= '1' && c <= '8')) board.set(Square(file, rank), *piece_from_char(c));
    file += width;
  }
  finish_rank();
  return board;
}

std::string to_fen(const BoardState& board) {
  std::string out;
  out.reserve(71);
  for (int rank = 7; rank >= 0; --rank) {
    int run = 0;
    for (int file = 0; file < 8; ++file) {
      Piece p = board.at(Square(file, rank));
      if (is_empty(p)) {
        ++run;
        continue;
      }
      if (run) out.push_back(static_cast<char>('0' + run));
      run = 0;
      out.push_back(to_char(p));
    }
    if (run) out.push_back(static_cast<char>('0' + run));
    if (rank) out.push_back('/');
  }
  return out;
}

std::vector<Square> locate(const BoardState& board, Piece piece) {
  if (is_empty(piece)) throw std::invalid_argument("locate: the empty class has no locations");
  std::vector<Square> out;
  for (int file = 0; file < 8; ++file)
    for (int rank = 0; rank < 8; ++rank)
      if (board.at(Square(file, rank)) == piece) out.emplace_back(file, rank);
  return out;
}

std::array<std::uint8_t, 64> to_codes(const BoardState& board) {
  std::array<std::uint8_t, 64> out{};
  for (int k = 0; k < 64; ++k) out[k] = static_cast<std::uint8_t>(code_of(board.cells()[fen_order_to_index(k)]));
  return out;
}

BoardState from_codes(std::span<const int> codes) {
  if (codes.size() != 64) {
    throw ArrayFormError(ArrayFormErrorKind::BadLength, "expected 64 codes, got " + std::to_string(codes.size()));
  }
  BoardState board;
  for (int k = 0; k < 64; ++k) {
    int c = codes[k];
    if (c < 0 || c >= kPieceClasses) {
      throw ArrayFormError(ArrayFormErrorKind::BadCode,
                           "code " + std::to_string(c) + " at position " + std::to_string(k) + " is outside [0,12]");
    }
    board.set(Square::from_index(fen_order_to_index(k)), piece_from_code(c));
  }
  return board;
}

BoardState parse_array_line(std::string_view line) {
  std::vector<int> codes;
  codes.reserve(64);
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == ' ' || c == '\t' || c == ',' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc()) {
      throw ArrayFormError(ArrayFormErrorKind::BadCode, "non-integer token at offset " + std::to_string(i));
    }
    codes.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return from_codes(codes);
}

std::string to_array_line(const BoardState& board) {
  std::string out;
  auto codes = to_codes(board);
  for (int k = 0; k < 64; ++k) {
    if (k) out.push_back(' ');
    out += std::to_string(codes[k]);
  }
  return out;
}

}  // namespace boardcheck
