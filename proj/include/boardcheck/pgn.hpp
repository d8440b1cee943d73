#pragma once

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "boardcheck/game.hpp"

namespace boardcheck {

enum class PgnErrorKind { MalformedHeader, UnterminatedComment, EmptyInput };

class PgnError : public std::runtime_error {
 public:
  PgnError(PgnErrorKind kind, int line, const std::string& what)
      : std::runtime_error(what), kind_(kind), line_(line) {}
  PgnErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  PgnErrorKind kind_;
  int line_;
};

/// Reads PGN export text one game at a time. Only the mainline is kept:
/// comments, NAGs, variations and move numbers are dropped.
class PgnReader {
 public:
  explicit PgnReader(std::istream& in) : in_(in) {}

  /// The next game, or nullopt at end of input.
  std::optional<GameRecord> next();

  /// 1-based line of the reader's current position.
  int line() const { return line_; }

 private:
  int get();
  int peek();
  void skip_rest_of_line();
  void skip_brace_comment();
  void read_tag(GameRecord& game);
  std::string read_symbol();

  std::istream& in_;
  int line_ = 1;
  bool at_line_start_ = true;
  bool bom_checked_ = false;
};

/// Every game in `text`. Throws PgnError(EmptyInput) if there are none.
std::vector<GameRecord> parse_pgn(std::string_view text);

}  // namespace boardcheck
