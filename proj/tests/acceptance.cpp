// Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "boardcheck/baseline.hpp"
#include "boardcheck/board.hpp"
#include "boardcheck/corrupt.hpp"
#include "boardcheck/game.hpp"
#include "boardcheck/metrics.hpp"
#include "boardcheck/pgn.hpp"
#include "boardcheck/rules.hpp"

namespace bc = boardcheck;

namespace {

constexpr std::size_t kMinGames = 1000;
constexpr int kRoundTripBoards = 100'000;
constexpr std::uint64_t kBaselineSamples = 100'000;
constexpr double kBaselineSigmas = 3.0;
constexpr int kCorruptedCorpora = 1000;
constexpr std::size_t kCorruptedCorpusSize = 100;
constexpr std::size_t kMonotonicityCorpus = 1000;
constexpr std::uint64_t kThroughputBoards = 1'000'000;
constexpr double kDoublingLow = 2.0 * 0.75;
constexpr double kDoublingHigh = 2.0 * 1.25;
constexpr int kTimingRepeats = 9;

const char* const kCorpusFiles[] = {"lichess_2025-05_excerpt.pgn", "twic1599_excerpt.pgn"};

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Corpus {
  std::size_t games = 0;
  std::size_t rejected = 0;
  std::vector<bc::BoardState> states;
  std::string error;
};

Corpus load_corpus() {
  Corpus c;
  for (const char* name : kCorpusFiles) {
    std::string path = std::string(BOARDCHECK_TEST_DATA) + "/" + name;
    std::vector<bc::GameRecord> games;
    try {
      games = bc::parse_pgn(read_file(path));
    } catch (const std::exception& e) {
      c.error = path + ": " + e.what();
      return c;
    }
    for (const auto& g : games) {
      try {
        auto states = bc::replay(g);
        c.states.insert(c.states.end(), states.begin(), states.end());
        ++c.games;
      } catch (const bc::ReplayError&) {
        ++c.rejected;
      }
    }
  }
  return c;
}

Outcome replay_sanity(const Corpus& c) {
  if (!c.error.empty()) return {false, c.error};
  std::size_t insane = 0;
  for (const auto& b : c.states) insane += !bc::is_sane(b);
  bool ok = c.games >= kMinGames && insane == 0;
  return {ok, fmt("games=%zu (need >= %zu, %zu rejected as non-standard or illegal) states=%zu insane=%zu", c.games,
                  kMinGames, c.rejected, c.states.size(), insane)};
}

Outcome fen_roundtrip(const Corpus& c) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  std::uniform_int_distribution<int> cls(1, 12);
  int board_failures = 0;
  for (int i = 0; i < kRoundTripBoards; ++i) {
    bc::BoardState b;
    if (i % 2 == 0) {
      b = bc::sample_uniform_board(2024, i);
    } else {
      double d = density(rng);
      for (int s = 0; s < 64; ++s)
        if (std::bernoulli_distribution(d)(rng)) b.set(bc::Square::from_index(s), bc::piece_from_code(cls(rng)));
    }
    board_failures += bc::parse_fen(bc::to_fen(b)) != b;
  }
  std::size_t string_failures = 0;
  for (const auto& b : c.states) {
    std::string fen = bc::to_fen(b);
    string_failures += bc::to_fen(bc::parse_fen(fen)) != fen;
  }
  bool ok = board_failures == 0 && string_failures == 0 && !c.states.empty();
  return {ok, fmt("random boards=%d failures=%d; corpus fens=%zu failures=%zu", kRoundTripBoards, board_failures,
                  c.states.size(), string_failures)};
}

Outcome baseline_agreement() {
  bc::BaselineEstimate est = bc::estimate_random_frequencies(kBaselineSamples, bc::kDefaultSeed);
  bool ok = true;
  double worst = 0.0;
  std::string notes;
  for (int i = 0; i < bc::kRuleCount; ++i) {
    auto exact = bc::analytic_frequency(bc::kAllRules[i]);
    if (!exact) continue;
    double se = std::sqrt(*exact * (1.0 - *exact) / static_cast<double>(kBaselineSamples));
    double z = std::abs(est.frequency(i) - *exact) / se;
    worst = std::max(worst, z);
    ok = ok && z <= kBaselineSigmas;
    if (bc::kAllRules[i].color == bc::RuleColor::Black)
      notes += fmt(" %s=%.4f/%.4f", bc::to_string(bc::kAllRules[i]).c_str(), est.frequency(i), *exact);
  }
  return {ok, fmt("samples=%llu max|z|=%.2f (limit %.1f); mc/exact:", static_cast<unsigned long long>(kBaselineSamples),
                  worst, kBaselineSigmas) +
                  notes};
}

Outcome metric_identities(const Corpus& c) {
  if (c.states.size() < kCorruptedCorpusSize * kCorruptedCorpora) return {false, "corpus too small"};
  bc::EvalAccumulator same;
  for (const auto& b : c.states) same.add(b, b);
  bc::EvalReport id = same.report();
  bool identity = id.em_pct == 100.0 && id.f1 == 1.0 && id.c_pct == 0.0 && id.sf1 == 1.0 && id.mu_c == 0.0;

  const double grid[] = {0.0, 0.0005, 0.001, 0.002, 0.005, 0.01, 0.05, 0.1, 0.3, 1.0};
  int order_failures = 0, iff_failures = 0, clean = 0;
  for (int k = 0; k < kCorruptedCorpora; ++k) {
    bc::EvalAccumulator acc;
    double eps = grid[k % std::size(grid)];
    for (std::size_t j = 0; j < kCorruptedCorpusSize; ++j) {
      std::size_t idx = k * kCorruptedCorpusSize + j;
      acc.add(c.states[idx], bc::corrupt(c.states[idx], {eps, static_cast<std::uint64_t>(k)}, idx));
    }
    bc::EvalReport r = acc.report();
    order_failures += !(r.sf1 <= r.f1);
    iff_failures += (r.c_pct == 0.0) != (r.mu_c == 0.0);
    clean += r.c_pct == 0.0;
  }
  bool ok = identity && order_failures == 0 && iff_failures == 0;
  return {ok, fmt("identity on %zu states: EM=%.1f F1=%.1f C=%.1f sF1=%.1f muC=%.1f; %d corrupted corpora: "
                  "sF1>F1 in %d, C=0 xor muC=0 in %d (%d corpora with C=0)",
                  c.states.size(), id.em_pct, id.f1, id.c_pct, id.sf1, id.mu_c, kCorruptedCorpora, order_failures,
                  iff_failures, clean)};
}

Outcome corruption_monotonicity(const Corpus& c) {
  if (c.states.size() < kMonotonicityCorpus) return {false, "corpus too small"};
  const double grid[] = {0.0, 0.01, 0.05, 0.1, 0.3};
  std::vector<double> em, cp;
  for (double eps : grid) {
    bc::EvalAccumulator acc;
    for (std::size_t i = 0; i < kMonotonicityCorpus; ++i) acc.add(c.states[i], bc::corrupt(c.states[i], {eps, 7}, i));
    bc::EvalReport r = acc.report();
    em.push_back(r.em_pct);
    cp.push_back(r.c_pct);
  }
  bool ok = true;
  for (std::size_t i = 1; i < em.size(); ++i) ok = ok && em[i] < em[i - 1] && cp[i] > cp[i - 1];
  std::string detail = fmt("states=%zu eps{0,.01,.05,.1,.3} EM=", kMonotonicityCorpus);
  for (double v : em) detail += fmt("%.1f ", v);
  detail += "C=";
  for (double v : cp) detail += fmt("%.1f ", v);
  return {ok, detail};
}

std::vector<std::string> violation_ids(const bc::BoardState& b) {
  std::vector<std::string> out;
  for (bc::RuleId r : bc::check(b).violations()) out.push_back(bc::to_string(r));
  return out;
}

Outcome fixtures() {
  const bool midgame_sane = bc::is_sane(bc::parse_fen("r1bqk2r/ppppbN1p/2n2np1/4p3/2B1P3/3P4/PPP2PPP/RNBQK2R"));
  const bool endgame_sane = bc::is_sane(bc::parse_fen("8/8/2k3P1/8/5K2/6R1/5r2/8"));

  // Smallest-footprint board for each black rule; white ones are mirrored.
  // Rule iii has no isolated fixture: 16+ non-king pieces always break iv, vi or vii too.
  struct Fixture {
    const char* rule;
    const char* fen;
  };
  const Fixture black[] = {
      {"i.b", "8/8/8/8/8/8/8/7K"},
      {"iii.b", "k7/nnnnnnnn/nnnnnnnn/8/8/8/8/7K"},
      {"iv.b", "k7/pppppppp/p7/8/8/8/8/7K"},
      {"v.b", "k7/8/8/8/8/8/8/p6K"},
      {"vi.b", "k7/pppppppp/8/8/8/8/8/qq5K"},
      {"vii.b", "k7/nnnnnnnn/nnn5/8/8/8/8/7K"},
      {"viii.b", "k7/pppppppp/8/8/8/8/8/b1b4K"},
  };
  int exact = 1;  // rule ii
  std::string misses;
  if (violation_ids(bc::parse_fen("8/8/8/3kK3/8/8/8/8")) != std::vector<std::string>{"ii"}) {
    exact = 0;
    misses += " ii";
  }
  for (const Fixture& f : black) {
    bc::BoardState b = bc::parse_fen(f.fen);
    std::string white = f.rule;
    white.back() = 'w';
    for (auto [board, id] : {std::pair{b, std::string(f.rule)}, std::pair{b.mirrored(), white}}) {
      auto got = violation_ids(board);
      if (got == std::vector<std::string>{id}) {
        ++exact;
      } else {
        misses += " " + id + "->{";
        for (std::size_t i = 0; i < got.size(); ++i) misses += (i ? "," : "") + got[i];
        misses += "}";
      }
    }
  }
  bool ok = midgame_sane && endgame_sane && exact == bc::kRuleCount;
  std::string detail = fmt("reference boards sane: %s/%s; isolated single-rule fixtures %d/%d", midgame_sane ? "yes" : "no",
                           endgame_sane ? "yes" : "no", exact, bc::kRuleCount);
  if (!misses.empty()) detail += "; not isolable:" + misses + " (iii implies iv, vi or vii)";
  return {ok, detail};
}

Outcome throughput() {
  std::vector<bc::BoardState> boards(kThroughputBoards);
  for (std::uint64_t i = 0; i < kThroughputBoards; ++i) boards[i] = bc::sample_uniform_board(99, i);

  auto time_once = [&](std::size_t n) {
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += bc::check(boards[i]).mask();
    auto t1 = std::chrono::steady_clock::now();
    volatile std::uint64_t sink = acc;
    (void)sink;
    return std::chrono::duration<double>(t1 - t0).count();
  };
  // Sizes are interleaved within each repeat so background load hits all of them alike.
  const std::size_t sizes[] = {kThroughputBoards / 4, kThroughputBoards / 2, kThroughputBoards};
  double t[3] = {1e300, 1e300, 1e300};
  for (int rep = 0; rep < kTimingRepeats; ++rep)
    for (int i = 0; i < 3; ++i) t[i] = std::min(t[i], time_once(sizes[i]));
  double r1 = t[1] / t[0], r2 = t[2] / t[1];
  bool ok = r1 >= kDoublingLow && r1 <= kDoublingHigh && r2 >= kDoublingLow && r2 <= kDoublingHigh;
  return {ok, fmt("n=%zu/%zu/%zu t=%.3fs/%.3fs/%.3fs ratios=%.2f,%.2f (allowed %.2f..%.2f)", sizes[0], sizes[1],
                  sizes[2], t[0], t[1], t[2], r1, r2, kDoublingLow, kDoublingHigh)};
}

}  // namespace

int main() {
  Corpus corpus = load_corpus();
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"replay-sanity", [&] { return replay_sanity(corpus); }},
      {"fen-roundtrip", [&] { return fen_roundtrip(corpus); }},
      {"baseline-oracle-agreement", baseline_agreement},
      {"metric-identities", [&] { return metric_identities(corpus); }},
      {"corruption-monotonicity", [&] { return corruption_monotonicity(corpus); }},
      {"hand-checked-fixtures", fixtures},
      {"throughput-linear", throughput},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %-26s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed ? 1 : 0;
}
