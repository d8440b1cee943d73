#include "boardcheck/game.hpp"

#include <algorithm>
#include <array>

namespace boardcheck {

namespace {

struct Offset {
  int df;
  int dr;
};

constexpr std::array<Offset, 8> kKnightSteps = {{{1, 2}, {2, 1}, {2, -1}, {1, -2}, {-1, -2}, {-2, -1}, {-2, 1}, {-1, 2}}};
constexpr std::array<Offset, 8> kKingSteps = {{{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}}};
constexpr std::array<Offset, 4> kRookRays = {{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
constexpr std::array<Offset, 4> kBishopRays = {{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
constexpr std::array<PieceType, 4> kPromotions = {PieceType::Queen, PieceType::Rook, PieceType::Bishop,
                                                  PieceType::Knight};

int forward(Color c) { return c == Color::White ? 1 : -1; }
int home_rank(Color c) { return c == Color::White ? 0 : 7; }

bool holds_piece(const BoardState& b, int f, int r, Piece p) { return Square::valid(f, r) && b.at(Square(f, r)) == p; }

bool ray_hits(const BoardState& b, Square from, Offset d, Piece a, Piece q) {
  int f = from.file + d.df;
  int r = from.rank + d.dr;
  while (Square::valid(f, r)) {
    Piece p = b.at(Square(f, r));
    if (!is_empty(p)) return p == a || p == q;
    f += d.df;
    r += d.dr;
  }
  return false;
}

void add_pawn_moves(const GameState& s, Square from, std::vector<Move>& out) {
  const Color us = s.side_to_move;
  const int dir = forward(us);
  const int last = home_rank(opposite(us));
  auto push = [&](Square to, MoveKind kind) {
    if (to.rank == last) {
      for (PieceType t : kPromotions) out.push_back({from, to, kind, t});
    } else {
      out.push_back({from, to, kind, std::nullopt});
    }
  };
  int r1 = from.rank + dir;
  if (!Square::valid(from.file, r1)) return;
  Square one(from.file, r1);
  if (is_empty(s.board.at(one))) {
    push(one, MoveKind::Normal);
    int start = us == Color::White ? 1 : 6;
    Square two(from.file, from.rank + 2 * dir);
    if (from.rank == start && is_empty(s.board.at(two))) out.push_back({from, two, MoveKind::DoublePush, std::nullopt});
  }
  for (int df : {-1, 1}) {
    int f = from.file + df;
    if (!Square::valid(f, r1)) continue;
    Square to(f, r1);
    Piece target = s.board.at(to);
    if (!is_empty(target) && color_of(target) != us) {
      push(to, MoveKind::Normal);
    } else if (is_empty(target) && s.en_passant_target == to) {
      Piece victim = s.board.at(Square(f, from.rank));
      if (victim == make_piece(opposite(us), PieceType::Pawn)) out.push_back({from, to, MoveKind::EnPassant, std::nullopt});
    }
  }
}

template <std::size_t N>
void add_steps(const GameState& s, Square from, const std::array<Offset, N>& steps, bool slide, std::vector<Move>& out) {
  for (Offset d : steps) {
    int f = from.file + d.df;
    int r = from.rank + d.dr;
    while (Square::valid(f, r)) {
      Piece p = s.board.at(Square(f, r));
      if (!is_empty(p) && color_of(p) == s.side_to_move) break;
      out.push_back({from, Square(f, r), MoveKind::Normal, std::nullopt});
      if (!is_empty(p) || !slide) break;
      f += d.df;
      r += d.dr;
    }
  }
}

void add_castling(const GameState& s, std::vector<Move>& out) {
  const Color us = s.side_to_move;
  const Color them = opposite(us);
  const int r = home_rank(us);
  const Piece king = make_piece(us, PieceType::King);
  const Piece rook = make_piece(us, PieceType::Rook);
  if (s.board.at(Square(4, r)) != king) return;
  bool king_side = us == Color::White ? s.castling.white_king_side : s.castling.black_king_side;
  bool queen_side = us == Color::White ? s.castling.white_queen_side : s.castling.black_queen_side;
  auto empty = [&](int f) { return is_empty(s.board.at(Square(f, r))); };
  auto safe = [&](int f) { return !is_attacked(s.board, Square(f, r), them); };
  if (!safe(4)) return;
  if (king_side && s.board.at(Square(7, r)) == rook && empty(5) && empty(6) && safe(5) && safe(6)) {
    out.push_back({Square(4, r), Square(6, r), MoveKind::CastleKingSide, std::nullopt});
  }
  if (queen_side && s.board.at(Square(0, r)) == rook && empty(1) && empty(2) && empty(3) && safe(3) && safe(2)) {
    out.push_back({Square(4, r), Square(2, r), MoveKind::CastleQueenSide, std::nullopt});
  }
}

void clear_rights_for(CastlingRights& c, Square s) {
  if (s == Square(4, 0)) c.white_king_side = c.white_queen_side = false;
  if (s == Square(7, 0)) c.white_king_side = false;
  if (s == Square(0, 0)) c.white_queen_side = false;
  if (s == Square(4, 7)) c.black_king_side = c.black_queen_side = false;
  if (s == Square(7, 7)) c.black_king_side = false;
  if (s == Square(0, 7)) c.black_queen_side = false;
}

bool king_exposed(const BoardState& board, Color side) {
  const Piece king = make_piece(side, PieceType::King);
  for (int i = 0; i < 64; ++i) {
    if (board.cells()[i] == king && is_attacked(board, Square::from_index(i), opposite(side))) return true;
  }
  return false;
}

std::optional<PieceType> piece_letter(char c) {
  switch (c) {
    case 'N': return PieceType::Knight;
    case 'B': return PieceType::Bishop;
    case 'R': return PieceType::Rook;
    case 'Q': return PieceType::Queen;
    case 'K': return PieceType::King;
    default: return std::nullopt;
  }
}

char letter_of(PieceType t) { return "PNBRQK"[static_cast<int>(t)]; }

bool is_capture(const GameState& s, const Move& m) {
  return m.kind == MoveKind::EnPassant || !is_empty(s.board.at(m.to));
}

}  // namespace

GameState GameState::initial() {
  GameState s;
  s.board = BoardState::starting();
  s.castling = {true, true, true, true};
  return s;
}

bool is_attacked(const BoardState& b, Square t, Color by) {
  // Pawns of `by` attack diagonally forward, so look one rank behind the target.
  const int pr = t.rank - forward(by);
  const Piece pawn = make_piece(by, PieceType::Pawn);
  if (holds_piece(b, t.file - 1, pr, pawn) || holds_piece(b, t.file + 1, pr, pawn)) return true;
  const Piece knight = make_piece(by, PieceType::Knight);
  for (Offset d : kKnightSteps)
    if (holds_piece(b, t.file + d.df, t.rank + d.dr, knight)) return true;
  const Piece king = make_piece(by, PieceType::King);
  for (Offset d : kKingSteps)
    if (holds_piece(b, t.file + d.df, t.rank + d.dr, king)) return true;
  const Piece queen = make_piece(by, PieceType::Queen);
  const Piece rook = make_piece(by, PieceType::Rook);
  const Piece bishop = make_piece(by, PieceType::Bishop);
  for (Offset d : kRookRays)
    if (ray_hits(b, t, d, rook, queen)) return true;
  for (Offset d : kBishopRays)
    if (ray_hits(b, t, d, bishop, queen)) return true;
  return false;
}

bool in_check(const GameState& state) { return king_exposed(state.board, state.side_to_move); }

std::vector<Move> legal_moves(const GameState& state) {
  std::vector<Move> pseudo;
  pseudo.reserve(64);
  for (int i = 0; i < 64; ++i) {
    Piece p = state.board.cells()[i];
    if (is_empty(p) || color_of(p) != state.side_to_move) continue;
    Square from = Square::from_index(i);
    switch (type_of(p)) {
      case PieceType::Pawn: add_pawn_moves(state, from, pseudo); break;
      case PieceType::Knight: add_steps(state, from, kKnightSteps, false, pseudo); break;
      case PieceType::Bishop: add_steps(state, from, kBishopRays, true, pseudo); break;
      case PieceType::Rook: add_steps(state, from, kRookRays, true, pseudo); break;
      case PieceType::Queen:
        add_steps(state, from, kRookRays, true, pseudo);
        add_steps(state, from, kBishopRays, true, pseudo);
        break;
      case PieceType::King: add_steps(state, from, kKingSteps, false, pseudo); break;
    }
  }
  add_castling(state, pseudo);

  std::vector<Move> legal;
  legal.reserve(pseudo.size());
  for (const Move& m : pseudo)
    if (!king_exposed(apply_move(state, m).board, state.side_to_move)) legal.push_back(m);
  return legal;
}

GameState apply_move(const GameState& state, const Move& move) {
  GameState next = state;
  BoardState& b = next.board;
  const Piece moving = b.at(move.from);
  const Color us = state.side_to_move;
  b.set(move.from, Piece::Empty);
  b.set(move.to, move.promotion ? make_piece(us, *move.promotion) : moving);
  switch (move.kind) {
    case MoveKind::EnPassant:
      b.set(Square(move.to.file, move.from.rank), Piece::Empty);
      break;
    case MoveKind::CastleKingSide:
      b.set(Square(7, move.from.rank), Piece::Empty);
      b.set(Square(5, move.from.rank), make_piece(us, PieceType::Rook));
      break;
    case MoveKind::CastleQueenSide:
      b.set(Square(0, move.from.rank), Piece::Empty);
      b.set(Square(3, move.from.rank), make_piece(us, PieceType::Rook));
      break;
    default:
      break;
  }
  clear_rights_for(next.castling, move.from);
  clear_rights_for(next.castling, move.to);
  next.en_passant_target.reset();
  if (move.kind == MoveKind::DoublePush) next.en_passant_target = Square(move.from.file, (move.from.rank + move.to.rank) / 2);
  next.side_to_move = opposite(us);
  ++next.ply_index;
  return next;
}

Move resolve_san(const GameState& state, std::string_view san) {
  const std::string token(san);
  auto malformed = [&](const char* why) { return SanError(SanErrorKind::MalformedSan, "malformed SAN '" + token + "': " + why); };

  while (!san.empty() && std::string_view("+#!?").find(san.back()) != std::string_view::npos) san.remove_suffix(1);
  if (san.empty()) throw malformed("empty");

  std::vector<Move> moves = legal_moves(state);
  auto pick = [&](auto&& matches) -> Move {
    std::vector<Move> found;
    for (const Move& m : moves)
      if (matches(m)) found.push_back(m);
    if (found.empty()) {
      throw SanError(SanErrorKind::IllegalMove, "no legal move matches '" + token + "' at ply " +
                                                    std::to_string(state.ply_index + 1));
    }
    if (found.size() > 1) {
      throw SanError(SanErrorKind::AmbiguousMove, "'" + token + "' matches " + std::to_string(found.size()) +
                                                      " legal moves at ply " + std::to_string(state.ply_index + 1));
    }
    return found.front();
  };

  if (san == "O-O" || san == "0-0") return pick([](const Move& m) { return m.kind == MoveKind::CastleKingSide; });
  if (san == "O-O-O" || san == "0-0-0") return pick([](const Move& m) { return m.kind == MoveKind::CastleQueenSide; });

  PieceType type = PieceType::Pawn;
  if (auto t = piece_letter(san.front())) {
    type = *t;
    san.remove_prefix(1);
  }

  std::optional<PieceType> promotion;
  if (auto eq = san.find('='); eq != std::string_view::npos) {
    if (eq + 2 != san.size()) throw malformed("bad promotion suffix");
    promotion = piece_letter(san[eq + 1]);
    if (!promotion || *promotion == PieceType::King) throw malformed("bad promotion piece");
    san = san.substr(0, eq);
  } else if (type == PieceType::Pawn && san.size() >= 3) {
    if (auto t = piece_letter(san.back()); t && *t != PieceType::King) {
      promotion = t;
      san.remove_suffix(1);
    }
  }
  if (promotion && type != PieceType::Pawn) throw malformed("only pawns promote");

  std::string body;
  for (char c : san)
    if (c != 'x' && c != ':' && c != '-') body.push_back(c);
  if (body.size() < 2 || body.size() > 4) throw malformed("bad length");
  auto dest = Square::parse(std::string_view(body).substr(body.size() - 2));
  if (!dest) throw malformed("bad destination square");

  std::optional<int> from_file;
  std::optional<int> from_rank;
  for (char c : std::string_view(body).substr(0, body.size() - 2)) {
    if (c >= 'a' && c <= 'h' && !from_file) {
      from_file = c - 'a';
    } else if (c >= '1' && c <= '8' && !from_rank) {
      from_rank = c - '1';
    } else {
      throw malformed("bad disambiguation");
    }
  }
  if (type == PieceType::Pawn && !from_file) from_file = dest->file;

  const Piece wanted = make_piece(state.side_to_move, type);
  return pick([&](const Move& m) {
    if (m.kind == MoveKind::CastleKingSide || m.kind == MoveKind::CastleQueenSide) return false;
    return state.board.at(m.from) == wanted && m.to == *dest && m.promotion == promotion &&
           (!from_file || m.from.file == *from_file) && (!from_rank || m.from.rank == *from_rank);
  });
}

GameState apply_san(const GameState& state, std::string_view san) { return apply_move(state, resolve_san(state, san)); }

std::string to_san(const GameState& state, const Move& move) {
  std::string out;
  if (move.kind == MoveKind::CastleKingSide) {
    out = "O-O";
  } else if (move.kind == MoveKind::CastleQueenSide) {
    out = "O-O-O";
  } else {
    const Piece moving = state.board.at(move.from);
    const PieceType type = type_of(moving);
    const bool capture = is_capture(state, move);
    if (type == PieceType::Pawn) {
      if (capture) {
        out.push_back(static_cast<char>('a' + move.from.file));
        out.push_back('x');
      }
      out += move.to.name();
      if (move.promotion) {
        out.push_back('=');
        out.push_back(letter_of(*move.promotion));
      }
    } else {
      out.push_back(letter_of(type));
      bool clash = false;
      bool same_file = false;
      bool same_rank = false;
      for (const Move& other : legal_moves(state)) {
        if (other.to != move.to || other.from == move.from || state.board.at(other.from) != moving) continue;
        clash = true;
        same_file |= other.from.file == move.from.file;
        same_rank |= other.from.rank == move.from.rank;
      }
      if (clash) {
        if (!same_file) {
          out.push_back(static_cast<char>('a' + move.from.file));
        } else if (!same_rank) {
          out.push_back(static_cast<char>('1' + move.from.rank));
        } else {
          out += move.from.name();
        }
      }
      if (capture) out.push_back('x');
      out += move.to.name();
    }
  }
  GameState next = apply_move(state, move);
  if (in_check(next)) out.push_back(legal_moves(next).empty() ? '#' : '+');
  return out;
}

std::optional<std::string> GameRecord::tag(std::string_view key) const {
  for (const auto& [k, v] : tags)
    if (k == key) return v;
  return std::nullopt;
}

std::vector<BoardState> replay(const GameRecord& record) {
  if (auto variant = record.tag("Variant")) {
    std::string v = *variant;
    std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (!v.empty() && v != "standard" && v != "chess") {
      throw ReplayError(ReplayErrorKind::UnsupportedStart, 0, std::nullopt, "unsupported variant '" + *variant + "'");
    }
  }
  if (auto fen = record.tag("FEN")) {
    bool standard = false;
    try {
      standard = parse_fen(*fen) == BoardState::starting();
    } catch (const FenError&) {
    }
    if (!standard) throw ReplayError(ReplayErrorKind::UnsupportedStart, 0, std::nullopt, "custom start position '" + *fen + "'");
  }

  std::vector<BoardState> states;
  states.reserve(record.san_moves.size());
  GameState state = GameState::initial();
  for (std::size_t i = 0; i < record.san_moves.size(); ++i) {
    const int ply = static_cast<int>(i) + 1;
    try {
      state = apply_san(state, record.san_moves[i]);
    } catch (const SanError& e) {
      throw ReplayError(ReplayErrorKind::San, ply, e.kind(), "ply " + std::to_string(ply) + ": " + e.what());
    }
    states.push_back(state.board);
  }
  return states;
}

}  // namespace boardcheck
