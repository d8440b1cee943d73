#include "boardcheck/pgn.hpp"

#include <cctype>
#include <sstream>

namespace boardcheck {

namespace {

bool is_space(int c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

bool ends_symbol(int c) {
  return c == std::char_traits<char>::eof() || is_space(c) || std::string_view("{}()[];$*\"").find(static_cast<char>(c)) != std::string_view::npos;
}

bool is_result(std::string_view s) { return s == "1-0" || s == "0-1" || s == "1/2-1/2" || s == "*"; }

// Move-quality and evaluation glyphs written as separate tokens.
bool is_annotation(std::string_view s) {
  if (s.find_first_not_of("!?") == std::string_view::npos) return true;
  return s == "+-" || s == "-+" || s == "+/-" || s == "-/+" || s == "+=" || s == "=+" || s == "=";
}

}  // namespace

int PgnReader::get() {
  if (!bom_checked_) peek();
  int c = in_.get();
  if (c == '\n') {
    ++line_;
    at_line_start_ = true;
  } else if (c != std::char_traits<char>::eof()) {
    at_line_start_ = false;
  }
  return c;
}

int PgnReader::peek() {
  if (!bom_checked_) {
    bom_checked_ = true;
    if (in_.peek() == 0xEF) {
      in_.get();
      if (in_.peek() == 0xBB) in_.get();
      if (in_.peek() == 0xBF) in_.get();
    }
  }
  return in_.peek();
}

void PgnReader::skip_rest_of_line() {
  for (int c = get(); c != '\n' && c != std::char_traits<char>::eof(); c = get()) {
  }
}

void PgnReader::skip_brace_comment() {
  const int opened_at = line_;
  get();
  for (int c = get(); c != '}'; c = get()) {
    if (c == std::char_traits<char>::eof()) {
      throw PgnError(PgnErrorKind::UnterminatedComment, opened_at,
                     "comment opened on line " + std::to_string(opened_at) + " is never closed");
    }
  }
}

void PgnReader::read_tag(GameRecord& game) {
  const int at = line_;
  auto bad = [&](const std::string& why) {
    return PgnError(PgnErrorKind::MalformedHeader, at, "malformed tag pair on line " + std::to_string(at) + ": " + why);
  };
  get();  // '['
  while (is_space(peek()) && peek() != '\n') get();
  std::string key;
  while (std::isalnum(peek()) || peek() == '_' || peek() == '+' || peek() == '#' || peek() == '=' || peek() == ':' || peek() == '-') {
    key.push_back(static_cast<char>(get()));
  }
  if (key.empty()) throw bad("missing tag name");
  while (is_space(peek()) && peek() != '\n') get();
  if (peek() != '"') throw bad("expected quoted value after '" + key + "'");
  get();
  std::string value;
  for (;;) {
    int c = get();
    if (c == std::char_traits<char>::eof() || c == '\n') throw bad("unterminated string");
    if (c == '"') break;
    if (c == '\\') {
      int n = get();
      if (n == std::char_traits<char>::eof() || n == '\n') throw bad("unterminated string");
      c = n;
    }
    value.push_back(static_cast<char>(c));
  }
  while (is_space(peek()) && peek() != '\n') get();
  if (peek() != ']') throw bad("expected ']'");
  get();
  game.tags.emplace_back(std::move(key), std::move(value));
}

std::string PgnReader::read_symbol() {
  std::string s;
  while (!ends_symbol(peek())) s.push_back(static_cast<char>(get()));
  return s;
}

std::optional<GameRecord> PgnReader::next() {
  GameRecord game;
  bool started = false;
  int depth = 0;
  for (;;) {
    const int c = peek();
    if (c == std::char_traits<char>::eof()) break;
    if (is_space(c)) {
      get();
    } else if (c == '%' && at_line_start_) {
      skip_rest_of_line();
    } else if (c == ';') {
      skip_rest_of_line();
    } else if (c == '{') {
      skip_brace_comment();
    } else if (c == '(') {
      get();
      ++depth;
    } else if (c == ')') {
      get();
      if (depth > 0) --depth;
    } else if (c == '[') {
      if (depth > 0) {
        get();
        continue;
      }
      // Tags after movetext start the next game; this one had no result.
      if (!game.san_moves.empty()) return game;
      read_tag(game);
      started = true;
    } else if (c == '$') {
      get();
      while (std::isdigit(peek())) get();
    } else if (c == '*') {
      get();
      if (depth == 0) {
        game.result = "*";
        return game;
      }
    } else {
      std::string sym = read_symbol();
      if (sym.empty()) {
        get();
        continue;
      }
      if (depth > 0) continue;
      if (is_result(sym)) {
        game.result = sym;
        return game;
      }
      if (is_annotation(sym)) continue;
      std::size_t i = 0;
      while (i < sym.size() && std::isdigit(static_cast<unsigned char>(sym[i]))) ++i;
      if (i == sym.size()) continue;  // bare move number
      std::size_t j = i;
      while (j < sym.size() && sym[j] == '.') ++j;
      if (j > i) sym.erase(0, j);
      if (sym.empty()) continue;
      game.san_moves.push_back(std::move(sym));
      started = true;
    }
  }
  if (started) return game;
  return std::nullopt;
}

std::vector<GameRecord> parse_pgn(std::string_view text) {
  std::istringstream in{std::string(text)};
  PgnReader reader(in);
  std::vector<GameRecord> games;
  while (auto g = reader.next()) games.push_back(std::move(*g));
  if (games.empty()) throw PgnError(PgnErrorKind::EmptyInput, reader.line(), "no games found");
  return games;
}

}  // namespace boardcheck
