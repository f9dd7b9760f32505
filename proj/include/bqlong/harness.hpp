#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bqlong/longitude.hpp"
#include "bqlong/moves.hpp"

namespace bqlong {

struct HarnessOptions {
  std::uint64_t seed = 0;
  unsigned trials = 100;
  /// Insertions are skipped once a code has this many crossings.
  std::size_t max_crossings = 6;
  bool include_r3 = true;
  TokenRule rule = TokenRule::Standard;
  ParallelOptions parallel;
  /// Called after every trial with (trials done, trials total).
  std::function<void(unsigned, unsigned)> progress;
};

struct HarnessStep {
  std::string move;
  std::string before;
  std::string after;
  bool passed = true;
  std::string detail;  // first mismatch, when failed
};

struct HarnessReport {
  std::vector<HarnessStep> steps;
  std::size_t failures = 0;

  bool ok() const noexcept { return failures == 0; }
};

namespace detail {

// Everything the harness compares, per initial color.
struct InvariantSnapshot {
  std::vector<std::uint64_t> counts;
  std::vector<std::vector<LongitudeMap>> families;
};

inline InvariantSnapshot snapshot(const LongGaussCode& code, const FiniteBiquandle& B,
                                  const HarnessOptions& options) {
  InvariantSnapshot s;
  for (Element p = 0; p < B.size(); ++p) {
    s.families.push_back(invariant_family(code, B, p, options.parallel, options.rule));
    s.counts.push_back(s.families.back().size());
  }
  return s;
}

inline std::string compare_snapshots(const InvariantSnapshot& a, const InvariantSnapshot& b,
                                     const FiniteBiquandle& B) {
  for (Element p = 0; p < B.size(); ++p) {
    if (a.counts[p] != b.counts[p]) {
      return "count_fixed differs for p=" + B.name(p) + ": " + std::to_string(a.counts[p]) +
             " vs " + std::to_string(b.counts[p]);
    }
    if (a.families[p] != b.families[p]) return "longitude family differs for p=" + B.name(p);
  }
  return {};
}

// mt19937_64 output is fixed by the standard; reducing by modulo keeps the
// stream identical on every platform (uniform_int_distribution is not).
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace detail

/// Random walk of `trials` first/second Reidemeister moves starting at
/// `start`, plus every third-move fixture. Each move is checked by comparing
/// count_fixed and the longitude family for every initial color on both
/// sides. Deterministic for a given seed.
inline HarnessReport run_move_harness(const LongGaussCode& start, const FiniteBiquandle& B,
                                      const HarnessOptions& options) {
  HarnessReport report;
  detail::Draw draw(options.seed);
  CrossingId next_id = start.max_crossing_id() + 1;

  auto record = [&](std::string move, const LongGaussCode& before,
                    const detail::InvariantSnapshot& before_inv, const LongGaussCode& after,
                    const detail::InvariantSnapshot& after_inv) {
    HarnessStep step{std::move(move), to_string(before), to_string(after), true, {}};
    step.detail = detail::compare_snapshots(before_inv, after_inv, B);
    step.passed = step.detail.empty();
    if (!step.passed) ++report.failures;
    report.steps.push_back(std::move(step));
  };

  LongGaussCode current = start;
  auto current_inv = detail::snapshot(current, B, options);
  for (unsigned trial = 0; trial < options.trials; ++trial) {
    const auto r1 = r1_sites(current);
    const auto r2 = r2_sites(current);
    enum Move { R1Insert, R2Insert, R1Delete, R2Delete };
    std::vector<Move> moves;
    if (current.crossing_count() + 1 <= options.max_crossings) moves.push_back(R1Insert);
    if (current.crossing_count() + 2 <= options.max_crossings) moves.push_back(R2Insert);
    if (!r1.empty()) moves.push_back(R1Delete);
    if (!r2.empty()) moves.push_back(R2Delete);
    if (moves.empty()) break;

    LongGaussCode next;
    std::string label;
    switch (moves[draw.below(moves.size())]) {
      case R1Insert: {
        const std::size_t pos = draw.below(current.size() + 1);
        const KinkKind kind = all_kink_kinds[draw.below(4)];
        next = r1_insert(current, pos, kind, next_id++);
        label = "r1_insert(" + std::to_string(pos) + ", " + to_string(kind) + ")";
        break;
      }
      case R2Insert: {
        std::size_t a = draw.below(current.size() + 1);
        std::size_t b = draw.below(current.size() + 1);
        if (a > b) std::swap(a, b);
        R2Variant v;
        v.first_role = draw.below(2) ? Role::Over : Role::Under;
        v.parallel = draw.below(2) == 1;
        v.first_sign = draw.below(2) ? Sign::Positive : Sign::Negative;
        const CrossingId c1 = next_id++;
        const CrossingId c2 = next_id++;
        next = r2_insert(current, a, b, v, std::pair{c1, c2});
        label = "r2_insert(" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                role_char(v.first_role) + (v.parallel ? ", parallel" : ", antiparallel") +
                sign_char(v.first_sign) + ")";
        break;
      }
      case R1Delete: {
        const std::size_t pos = r1[draw.below(r1.size())];
        next = r1_delete(current, pos);
        label = "r1_delete(" + std::to_string(pos) + ")";
        break;
      }
      case R2Delete: {
        const auto [a, b] = r2[draw.below(r2.size())];
        next = r2_delete(current, a, b);
        label = "r2_delete(" + std::to_string(a) + ", " + std::to_string(b) + ")";
        break;
      }
    }
    auto next_inv = detail::snapshot(next, B, options);
    record(std::move(label), current, current_inv, next, next_inv);
    current = std::move(next);
    current_inv = std::move(next_inv);
    if (options.progress) options.progress(trial + 1, options.trials);
  }

  if (options.include_r3) {
    for (const R3Fixture& f : r3_fixture_pairs()) {
      record("r3 " + f.name, f.before, detail::snapshot(f.before, B, options), f.after,
             detail::snapshot(f.after, B, options));
    }
  }
  return report;
}

}  // namespace bqlong
