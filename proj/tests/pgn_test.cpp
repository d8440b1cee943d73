#include "boardcheck/pgn.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "test_support.hpp"

namespace boardcheck {
namespace {

using Moves = std::vector<std::string>;

PgnErrorKind pgn_error(const std::string& text) {
  try {
    parse_pgn(text);
  } catch (const PgnError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "parsed: " << text;
  return PgnErrorKind::EmptyInput;
}

TEST(ParsePgn, MovetextOnly) {
  auto games = parse_pgn("1. e4 e5 1/2-1/2");
  ASSERT_EQ(games.size(), 1U);
  EXPECT_EQ(games[0].san_moves, (Moves{"e4", "e5"}));
  EXPECT_EQ(games[0].result, "1/2-1/2");
  EXPECT_TRUE(games[0].tags.empty());
}

TEST(ParsePgn, TwoGamesInOrder) {
  auto games = parse_pgn(
      "[Event \"A\"]\n[White \"x\"]\n\n1. d4 d5 1-0\n\n"
      "[Event \"B\"]\n\n1. c4 0-1\n");
  ASSERT_EQ(games.size(), 2U);
  EXPECT_EQ(games[0].tag("Event"), "A");
  EXPECT_EQ(games[0].tag("White"), "x");
  EXPECT_EQ(games[0].san_moves, (Moves{"d4", "d5"}));
  EXPECT_EQ(games[0].result, "1-0");
  EXPECT_EQ(games[1].tag("Event"), "B");
  EXPECT_EQ(games[1].san_moves, Moves{"c4"});
  EXPECT_EQ(games[1].result, "0-1");
  EXPECT_FALSE(games[1].tag("White").has_value());
}

TEST(ParsePgn, CommentsAndVariationsSkipped) {
  auto games = parse_pgn("1. e4 {comment} (1... c5 2. Nf3 (2. c3)) 1... e5 2. Nf3 *");
  ASSERT_EQ(games.size(), 1U);
  EXPECT_EQ(games[0].san_moves, (Moves{"e4", "e5", "Nf3"}));
  EXPECT_EQ(games[0].result, "*");
}

TEST(ParsePgn, NagsGlyphsAndLineComments) {
  auto games = parse_pgn(
      "% escape line\n"
      "[Event \"x\"]\n"
      "1. e4 $1 e5 !? 2. Nf3 ; rest of line Nc3\n"
      "2... Nc6 +- 3.Bb5 a6 { multi\nline } 1-0");
  ASSERT_EQ(games.size(), 1U);
  EXPECT_EQ(games[0].san_moves, (Moves{"e4", "e5", "Nf3", "Nc6", "Bb5", "a6"}));
}

TEST(ParsePgn, MissingResultEndsAtNextHeader) {
  auto games = parse_pgn("[Event \"a\"]\n1. e4\n[Event \"b\"]\n1. d4 *");
  ASSERT_EQ(games.size(), 2U);
  EXPECT_EQ(games[0].san_moves, Moves{"e4"});
  EXPECT_EQ(games[0].result, "*");
  EXPECT_EQ(games[1].san_moves, Moves{"d4"});
}

TEST(ParsePgn, TagEscapesAndBom) {
  auto games = parse_pgn("\xEF\xBB\xBF[White \"A \\\"B\\\" C\"]\n1. e4 *");
  ASSERT_EQ(games.size(), 1U);
  EXPECT_EQ(games[0].tag("White"), "A \"B\" C");
}

TEST(ParsePgn, Errors) {
  EXPECT_EQ(pgn_error("[Event x]\n1. e4 *"), PgnErrorKind::MalformedHeader);
  EXPECT_EQ(pgn_error("[Event \"x\"\n1. e4 *"), PgnErrorKind::MalformedHeader);
  EXPECT_EQ(pgn_error("[\"x\"]\n1. e4 *"), PgnErrorKind::MalformedHeader);
  EXPECT_EQ(pgn_error("1. e4 { never closed"), PgnErrorKind::UnterminatedComment);
  EXPECT_EQ(pgn_error(""), PgnErrorKind::EmptyInput);
  EXPECT_EQ(pgn_error("  \n; only a comment\n"), PgnErrorKind::EmptyInput);
}

TEST(ParsePgn, ErrorCarriesLine) {
  try {
    parse_pgn("[Event \"a\"]\n\n1. e4 *\n\n[Bad tag]\n");
    FAIL();
  } catch (const PgnError& e) {
    EXPECT_EQ(e.line(), 5);
  }
}

TEST(PgnReader, StreamsGames) {
  std::istringstream in("1. e4 *\n1. d4 *\n1. c4 *\n");
  PgnReader reader(in);
  int n = 0;
  while (auto g = reader.next()) {
    ++n;
    EXPECT_EQ(g->san_moves.size(), 1U);
  }
  EXPECT_EQ(n, 3);
}

TEST(ParsePgn, RecordedGamesReplay) {
  auto games = testing::load_games("kasparov-deep-blue-1997.pgn");
  ASSERT_EQ(games.size(), 6U);
  EXPECT_EQ(games[0].tag("White"), "Garry Kasparov");
  EXPECT_EQ(games[0].result, "1-0");
  EXPECT_EQ(games[0].san_moves.size(), 89U);
  for (const auto& g : games) EXPECT_NO_THROW(replay(g));
}

}  // namespace
}  // namespace boardcheck
