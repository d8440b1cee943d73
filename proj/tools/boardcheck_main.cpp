// boardcheck: sanity checks, coherence metrics and corpus tooling for chess
// board-state predictions.
//
//   boardcheck check    [INPUT]            per-board sanity report (JSON lines)
//   boardcheck eval     --truth --pred     aggregate metrics report (JSON)
//   boardcheck replay   PGN                one placement per ply
//   boardcheck corrupt  --truth --epsilon  synthetic noisy predictions
//   boardcheck baseline --samples --seed   random-guesser violation frequencies

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "boardcheck/baseline.hpp"
#include "boardcheck/board.hpp"
#include "boardcheck/corrupt.hpp"
#include "boardcheck/game.hpp"
#include "boardcheck/metrics.hpp"
#include "boardcheck/pgn.hpp"
#include "boardcheck/report.hpp"
#include "boardcheck/rules.hpp"

namespace bc = boardcheck;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFlagged = 1;
constexpr int kExitError = 2;

enum class Format { Fen, Array };

struct Input {
  std::unique_ptr<std::ifstream> file;
  std::istream* stream = &std::cin;
  std::string name = "<stdin>";
};

Input open_input(const std::string& path) {
  Input in;
  if (path.empty() || path == "-") return in;
  in.file = std::make_unique<std::ifstream>(path);
  if (!*in.file) throw std::runtime_error("cannot open " + path);
  in.stream = in.file.get();
  in.name = path;
  return in;
}

struct Output {
  std::unique_ptr<std::ofstream> file;
  std::ostream* stream = &std::cout;
};

Output open_output(const std::string& path) {
  Output out;
  if (path.empty() || path == "-") return out;
  out.file = std::make_unique<std::ofstream>(path);
  if (!*out.file) throw std::runtime_error("cannot write " + path);
  out.stream = out.file.get();
  return out;
}

bool blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

bc::BoardState parse_board(const std::string& line, Format format) {
  return format == Format::Fen ? bc::parse_fen(line) : bc::parse_array_line(line);
}

std::string format_board(const bc::BoardState& board, Format format) {
  return format == Format::Fen ? bc::to_fen(board) : bc::to_array_line(board);
}

/// Reads the next non-blank line; returns false at end of input.
bool next_record(std::istream& in, std::string& line, long& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!blank(line)) return true;
  }
  return false;
}

int cmd_check(const std::string& input, const std::string& output, Format format) {
  Input in = open_input(input);
  Output out = open_output(output);
  std::string line;
  long line_no = 0;
  std::int64_t boards = 0, insane = 0, violations = 0, errors = 0;
  while (next_record(*in.stream, line, line_no)) {
    nlohmann::ordered_json rec;
    rec["line"] = line_no;
    try {
      bc::ViolationReport report = bc::check(parse_board(line, format));
      ++boards;
      insane += !report.sane();
      violations += report.violation_count();
      rec.update(bc::to_json(report));
    } catch (const std::exception& e) {
      ++errors;
      std::cerr << in.name << ":" << line_no << ": " << e.what() << '\n';
      rec["error"] = e.what();
    }
    *out.stream << rec.dump() << '\n';
  }
  nlohmann::ordered_json summary;
  summary["boards"] = boards;
  summary["parse_errors"] = errors;
  summary["insane"] = insane;
  summary["c_pct"] = boards ? 100.0 * static_cast<double>(insane) / static_cast<double>(boards) : 0.0;
  summary["mu_c"] = boards ? static_cast<double>(violations) / static_cast<double>(boards) : 0.0;
  summary["convention"] = bc::kCountingConvention;
  *out.stream << nlohmann::ordered_json{{"summary", summary}}.dump() << '\n';
  if (errors) return kExitError;
  return insane ? kExitFlagged : kExitOk;
}

std::optional<bc::PerRule<double>> obtain_baseline(const std::string& cache, std::uint64_t samples,
                                                   std::uint64_t seed) {
  if (cache.empty()) return std::nullopt;
  if (auto est = bc::load_baseline(cache)) return est->frequencies();
  std::cerr << "baseline cache " << cache << " missing or stale; estimating with " << samples << " samples\n";
  bc::BaselineEstimate est = bc::estimate_random_frequencies(samples, seed);
  bc::save_baseline(cache, est);
  return est.frequencies();
}

int cmd_eval(const std::string& truth_path, const std::string& pred_path, const std::string& cache,
             std::uint64_t samples, std::uint64_t seed, const std::string& output, Format format) {
  Input truth = open_input(truth_path);
  Input pred = open_input(pred_path);
  bc::EvalAccumulator acc;
  std::string tline, pline;
  long tno = 0, pno = 0;
  bool parse_failed = false;
  for (;;) {
    bool has_t = next_record(*truth.stream, tline, tno);
    bool has_p = next_record(*pred.stream, pline, pno);
    if (!has_t && !has_p) break;
    if (has_t != has_p) {
      std::cerr << "LengthMismatch: " << (has_t ? truth.name : pred.name) << " has more boards than "
                << (has_t ? pred.name : truth.name) << '\n';
      return kExitError;
    }
    std::optional<bc::BoardState> y, yhat;
    try {
      y = parse_board(tline, format);
    } catch (const std::exception& e) {
      std::cerr << truth.name << ":" << tno << ": " << e.what() << '\n';
      parse_failed = true;
    }
    try {
      yhat = parse_board(pline, format);
    } catch (const std::exception& e) {
      std::cerr << pred.name << ":" << pno << ": " << e.what() << '\n';
      parse_failed = true;
    }
    if (y && yhat) acc.add(*y, *yhat);
  }
  if (parse_failed) return kExitError;

  bc::EvalReport report = acc.report(obtain_baseline(cache, samples, seed));
  if (report.insane_truth > 0) {
    std::cerr << "warning: " << report.insane_truth << " ground-truth board(s) violate the sanity rules\n";
  }
  Output out = open_output(output);
  *out.stream << bc::to_json(report).dump(2) << '\n';
  return kExitOk;
}

int cmd_replay(const std::string& pgn_path, const std::string& output, Format format) {
  Input in = open_input(pgn_path);
  Output out = open_output(output);
  bc::PgnReader reader(*in.stream);
  int game_index = 0;
  int failed = 0;
  std::int64_t plies = 0;
  while (auto game = reader.next()) {
    ++game_index;
    try {
      for (const bc::BoardState& b : bc::replay(*game)) {
        *out.stream << format_board(b, format) << '\n';
        ++plies;
      }
    } catch (const bc::ReplayError& e) {
      ++failed;
      std::cerr << "game " << game_index << ": " << e.what() << " (skipped)\n";
    }
  }
  std::cerr << "replayed " << game_index - failed << " of " << game_index << " games, " << plies << " states\n";
  return failed ? kExitFlagged : kExitOk;
}

int cmd_corrupt(const std::string& truth_path, double epsilon, std::uint64_t seed, const std::string& output,
                Format format) {
  Input in = open_input(truth_path);
  Output out = open_output(output);
  const bc::CorruptionSpec spec{epsilon, seed};
  std::string line;
  long line_no = 0;
  std::uint64_t index = 0;
  bool failed = false;
  while (next_record(*in.stream, line, line_no)) {
    try {
      *out.stream << format_board(bc::corrupt(parse_board(line, format), spec, index), format) << '\n';
    } catch (const std::exception& e) {
      std::cerr << in.name << ":" << line_no << ": " << e.what() << '\n';
      failed = true;
    }
    ++index;
  }
  return failed ? kExitError : kExitOk;
}

int cmd_baseline(std::uint64_t samples, std::uint64_t seed, unsigned threads, const std::string& output) {
  bc::BaselineEstimate est = bc::estimate_random_frequencies(samples, seed, threads);
  if (output.empty() || output == "-") {
    std::cout << bc::to_json(est).dump(2) << '\n';
  } else {
    bc::save_baseline(output, est);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sanity rules, coherence metrics and corpus tools for chess board-state predictions"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"fen", Format::Fen}, {"array", Format::Array}};
  Format format = Format::Fen;
  std::string input, output, truth, pred, cache;
  std::uint64_t samples = bc::kDefaultBaselineSamples;
  std::uint64_t seed = bc::kDefaultSeed;
  double epsilon = 0.0;
  unsigned threads = 0;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Board encoding: fen placement or 64 class codes")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  auto* check = app.add_subcommand("check", "Check each board (one per line) against the sanity rules");
  check->add_option("input", input, "Input file ('-' or omitted for stdin)");
  check->add_option("--output", output, "Write the report here instead of stdout");
  add_format(check);

  auto* eval = app.add_subcommand("eval", "Score predictions against ground truth");
  eval->add_option("--truth", truth, "Ground-truth boards")->required();
  eval->add_option("--pred", pred, "Predicted boards, line-aligned with --truth")->required();
  eval->add_option("--baseline-cache", cache, "Random-guesser cache; enables adjusted likelihoods");
  eval->add_option("--samples", samples, "Samples when the baseline cache must be (re)built");
  eval->add_option("--seed", seed, "Seed when the baseline cache must be (re)built");
  eval->add_option("--output", output, "Write the report here instead of stdout");
  add_format(eval);

  auto* replay = app.add_subcommand("replay", "Convert PGN games to one board state per ply");
  replay->add_option("pgn", input, "PGN file ('-' for stdin)")->required();
  replay->add_option("--output", output, "Write states here instead of stdout");
  add_format(replay);

  auto* corrupt = app.add_subcommand("corrupt", "Synthesize noisy predictions from ground truth");
  corrupt->add_option("--truth", truth, "Ground-truth boards")->required();
  corrupt->add_option("--epsilon", epsilon, "Per-cell replacement probability")->required()->check(CLI::Range(0.0, 1.0));
  corrupt->add_option("--seed", seed, "Random seed");
  corrupt->add_option("--output", output, "Write predictions here instead of stdout");
  add_format(corrupt);

  auto* baseline = app.add_subcommand("baseline", "Estimate the uniform random guesser's rule-violation frequencies");
  baseline->add_option("--samples", samples, "Number of uniform boards")->check(CLI::PositiveNumber);
  baseline->add_option("--seed", seed, "Random seed");
  baseline->add_option("--threads", threads, "Worker threads (0 = all cores)");
  baseline->add_option("--output", output, "Cache file to write (stdout if omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return cmd_check(input, output, format);
    if (*eval) return cmd_eval(truth, pred, cache, samples, seed, output, format);
    if (*replay) return cmd_replay(input, output, format);
    if (*corrupt) return cmd_corrupt(truth, epsilon, seed, output, format);
    if (*baseline) return cmd_baseline(samples, seed, threads, output);
  } catch (const bc::PgnError& e) {
    std::cerr << "PGN error (line " << e.line() << "): " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitError;
}
