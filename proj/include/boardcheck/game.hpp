#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "boardcheck/board.hpp"

namespace boardcheck {

struct CastlingRights {
  bool white_king_side = false;
  bool white_queen_side = false;
  bool black_king_side = false;
  bool black_queen_side = false;

  friend bool operator==(const CastlingRights&, const CastlingRights&) = default;
};

/// A position plus the context needed to apply moves legally.
struct GameState {
  BoardState board;
  Color side_to_move = Color::White;
  CastlingRights castling;
  /// Square passed over by the last double pawn push (rank 3 or 6).
  std::optional<Square> en_passant_target;
  int ply_index = 0;

  static GameState initial();

  friend bool operator==(const GameState&, const GameState&) = default;
};

enum class MoveKind : std::uint8_t { Normal, DoublePush, EnPassant, CastleKingSide, CastleQueenSide };

struct Move {
  Square from;
  Square to;
  MoveKind kind = MoveKind::Normal;
  std::optional<PieceType> promotion;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Whether any piece of `by` attacks `target`.
bool is_attacked(const BoardState& board, Square target, Color by);
bool in_check(const GameState& state);

/// Fully legal moves for the side to move.
std::vector<Move> legal_moves(const GameState& state);

/// Applies a move assumed legal in `state`.
GameState apply_move(const GameState& state, const Move& move);

enum class SanErrorKind { IllegalMove, AmbiguousMove, MalformedSan };

class SanError : public std::runtime_error {
 public:
  SanError(SanErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  SanErrorKind kind() const { return kind_; }

 private:
  SanErrorKind kind_;
};

/// Resolves a SAN token against the legal moves of `state`. Check, mate and
/// annotation suffixes are ignored; "0-0" is accepted for "O-O".
Move resolve_san(const GameState& state, std::string_view san);
GameState apply_san(const GameState& state, std::string_view san);

/// Minimal SAN for a legal move, with +/# suffix.
std::string to_san(const GameState& state, const Move& move);

struct GameRecord {
  std::vector<std::pair<std::string, std::string>> tags;
  std::vector<std::string> san_moves;
  std::string result = "*";

  /// Value of the first tag named `key`, if any.
  std::optional<std::string> tag(std::string_view key) const;
};

enum class ReplayErrorKind { San, UnsupportedStart };

class ReplayError : public std::runtime_error {
 public:
  ReplayError(ReplayErrorKind kind, int ply, std::optional<SanErrorKind> san_kind, const std::string& what)
      : std::runtime_error(what), kind_(kind), ply_(ply), san_kind_(san_kind) {}
  ReplayErrorKind kind() const { return kind_; }
  /// 1-based ply of the offending move; 0 for start-position errors.
  int ply() const { return ply_; }
  std::optional<SanErrorKind> san_kind() const { return san_kind_; }

 private:
  ReplayErrorKind kind_;
  int ply_;
  std::optional<SanErrorKind> san_kind_;
};

/// Board after every ply of the mainline, starting from the standard
/// initial position. Records declaring a custom start (SetUp/FEN tags) or a
/// non-standard Variant are rejected.
std::vector<BoardState> replay(const GameRecord& record);

}  // namespace boardcheck
