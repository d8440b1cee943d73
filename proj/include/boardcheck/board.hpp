#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boardcheck {

enum class Color : std::uint8_t { Black, White };

constexpr Color opposite(Color c) { return c == Color::Black ? Color::White : Color::Black; }

enum class PieceType : std::uint8_t { Pawn, Knight, Bishop, Rook, Queen, King };

inline constexpr std::array<PieceType, 6> kPieceTypes = {
    PieceType::Pawn, PieceType::Knight, PieceType::Bishop,
    PieceType::Rook, PieceType::Queen,  PieceType::King};

// The underlying values double as the array-form class codes:
// x p n b r q k P N B R Q K -> 0..12.
enum class Piece : std::uint8_t {
  Empty = 0,
  BlackPawn, BlackKnight, BlackBishop, BlackRook, BlackQueen, BlackKing,
  WhitePawn, WhiteKnight, WhiteBishop, WhiteRook, WhiteQueen, WhiteKing,
};

inline constexpr int kPieceClasses = 13;

constexpr Piece make_piece(Color c, PieceType t) {
  return static_cast<Piece>(1 + static_cast<int>(t) + (c == Color::White ? 6 : 0));
}
constexpr bool is_empty(Piece p) { return p == Piece::Empty; }
/// Undefined for Piece::Empty.
constexpr Color color_of(Piece p) {
  return static_cast<int>(p) >= 7 ? Color::White : Color::Black;
}
/// Undefined for Piece::Empty.
constexpr PieceType type_of(Piece p) {
  return static_cast<PieceType>((static_cast<int>(p) - 1) % 6);
}
constexpr int code_of(Piece p) { return static_cast<int>(p); }
constexpr Piece piece_from_code(int code) { return static_cast<Piece>(code); }

/// FEN letter for a piece; 'x' for the empty class.
char to_char(Piece p);
std::optional<Piece> piece_from_char(char c);

struct Square {
  std::int8_t file = 0;  // 0 = file A
  std::int8_t rank = 0;  // 0 = rank 1

  constexpr Square() = default;
  constexpr Square(int f, int r) : file(static_cast<std::int8_t>(f)), rank(static_cast<std::int8_t>(r)) {}

  static constexpr bool valid(int f, int r) { return f >= 0 && f < 8 && r >= 0 && r < 8; }
  static constexpr Square from_index(int i) { return Square(i % 8, i / 8); }

  /// rank * 8 + file, so a1 = 0 and h8 = 63.
  constexpr int index() const { return rank * 8 + file; }
  /// a1 is dark.
  constexpr bool is_dark() const { return (file + rank) % 2 == 0; }

  /// Algebraic name such as "e4".
  std::string name() const;
  static std::optional<Square> parse(std::string_view name);

  friend constexpr bool operator==(Square, Square) = default;
};

enum class FenErrorKind { IllegalCharacter, BadRankCount, BadRankWidth };

class FenError : public std::runtime_error {
 public:
  FenError(FenErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  FenErrorKind kind() const { return kind_; }

 private:
  FenErrorKind kind_;
};

enum class ArrayFormErrorKind { BadLength, BadCode };

class ArrayFormError : public std::runtime_error {
 public:
  ArrayFormError(ArrayFormErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ArrayFormErrorKind kind() const { return kind_; }

 private:
  ArrayFormErrorKind kind_;
};

/// An arbitrary assignment of the 13 classes to the 64 squares. No validity is
/// implied: multiple kings, pawns on the back rank etc. are all representable.
class BoardState {
 public:
  BoardState() { cells_.fill(Piece::Empty); }

  static BoardState empty() { return {}; }
  static BoardState starting();

  Piece at(Square s) const { return cells_[s.index()]; }
  Piece operator[](Square s) const { return at(s); }
  void set(Square s, Piece p) { cells_[s.index()] = p; }

  /// Cells indexed by Square::index().
  const std::array<Piece, 64>& cells() const { return cells_; }

  /// Number of non-empty cells.
  int occupied() const;

  /// Colors swapped and ranks flipped.
  BoardState mirrored() const;

  friend bool operator==(const BoardState&, const BoardState&) = default;

 private:
  std::array<Piece, 64> cells_;
};

class PieceCount {
 public:
  int operator[](Piece p) const { return counts_[code_of(p)]; }
  int of(Color c, PieceType t) const { return counts_[code_of(make_piece(c, t))]; }
  int non_empty() const { return 64 - counts_[0]; }
  int total() const;

  friend PieceCount piece_count(const BoardState& board);

 private:
  std::array<int, kPieceClasses> counts_{};
};

/// Accepts a bare placement field or a full FEN record (only the first field
/// is read). Digit runs need not be maximal.
BoardState parse_fen(std::string_view text);

/// Canonical placement string, ranks 8 to 1, maximal digit runs.
std::string to_fen(const BoardState& board);

PieceCount piece_count(const BoardState& board);

/// Squares holding `piece`, ordered by file and then by rank.
/// Throws std::invalid_argument for Piece::Empty.
std::vector<Square> locate(const BoardState& board, Piece piece);

// Array form: 64 class codes in FEN cell order (rank 8 to rank 1, file A to H).
std::array<std::uint8_t, 64> to_codes(const BoardState& board);
BoardState from_codes(std::span<const int> codes);
/// One board per line: 64 integers separated by whitespace and/or commas.
BoardState parse_array_line(std::string_view line);
std::string to_array_line(const BoardState& board);

}  // namespace boardcheck
