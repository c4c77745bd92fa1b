#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wap/rational.hpp"
#include "wap/words.hpp"

// Prefix-based analyzers. They are semi-decisions: a witness is a fact about
// the scanned prefix, and an empty result only means "none within budget".

namespace wap {

struct FrequencyCheckpoint {
  std::size_t length = 0;
  ParikhVector counts;
  std::vector<Rational> ratios;
};

struct FrequencyReport {
  std::size_t length = 0;
  ParikhVector counts;
  std::vector<Rational> ratios;  // one per letter, summing to 1
  std::vector<FrequencyCheckpoint> checkpoints;
};

/// Letter counts and exact ratios of pref_N, plus the same at each checkpoint
/// (checkpoints beyond the scanned length are dropped).
FrequencyReport prefix_frequency(const WordStream& w, std::size_t n,
                                 std::span<const std::size_t> checkpoints = {});

struct OscillationReport {
  std::size_t length = 0;
  std::size_t window_begin = 0;  // rho_a(pref_n) is sampled for n in [begin, N]
  std::vector<Rational> low;     // per letter
  std::vector<Rational> high;    // per letter
};

/// Extremes of rho_a(pref_n) over the tail window n in [N/2, N].
OscillationReport frequency_oscillation(const WordStream& w, std::size_t n);

struct BalanceRow {
  std::size_t window = 0;
  std::array<std::int64_t, kMaxAlphabet> min{};
  std::array<std::int64_t, kMaxAlphabet> max{};
};

struct BalanceReport {
  std::size_t length = 0;
  std::size_t max_window = 0;
  std::vector<BalanceRow> rows;  // windows 1..L
  /// max over windows and letters of (max - min); the prefix is
  /// C-balanced for exactly this C at window lengths <= L.
  std::int64_t constant = 0;
  std::size_t constant_window = 0;  // first window length reaching it
};

BalanceReport balance_profile(const FiniteWord& u, std::size_t max_window);
BalanceReport balance_profile(const WordStream& w, std::size_t n,
                              std::size_t max_window);

enum class WitnessTag { witness, bounded_witness, none_in_budget };
std::string to_string(WitnessTag tag);

struct WitnessOptions {
  std::size_t prefix = 100000;
  std::int64_t max_denominator = 8;
  std::size_t min_hits = 50;
  /// Bounded-witness threshold; defaults to 10 * q for frequency vectors with
  /// denominator q.
  std::optional<std::size_t> max_gap;
  /// Span filter: a line must be hit within the first quarter and within the
  /// final quarter of the prefix. Rejects lines that are met only inside one
  /// long block and then abandoned.
  bool recency = true;
  /// Binary words only: restrict the search to this frequency of letter 0.
  std::optional<Rational> slope;
};

/// A line of the graphic met at least min_hits times. For an alphabet of
/// size sigma the line is given by the frequency vector (one Rational per
/// letter, common denominator q) and sigma - 1 levels, one per letter
/// 0..sigma-2: level_a = rho_a * q * n - q * #a(pref_n).
struct WitnessReport {
  std::vector<Rational> frequencies;
  std::vector<std::int64_t> levels;
  std::int64_t denominator = 1;
  std::size_t hits = 0;
  std::size_t first_hit = 0;
  std::size_t last_hit = 0;
  std::size_t max_gap = 0;
  WitnessTag tag = WitnessTag::witness;

  /// Binary shorthand: frequency of letter 0 and the single level.
  [[nodiscard]] const Rational& slope() const { return frequencies.front(); }
  [[nodiscard]] std::int64_t level() const { return levels.front(); }
};

struct WitnessSearchResult {
  WitnessOptions budget;
  std::size_t scanned = 0;
  int alphabet_size = 2;
  /// Ranked by hit count, ties broken by (q, numerators, |level|, level).
  std::vector<WitnessReport> witnesses;

  [[nodiscard]] WitnessTag tag() const;
};

/// Frequency vectors with common denominator q <= Q over an alphabet of the
/// given size, in (q, numerators) order. For binary alphabets these are the
/// Farey fractions p/q as (p/q, (q-p)/q).
std::vector<std::vector<std::int64_t>> frequency_vectors(int alphabet_size,
                                                         std::int64_t max_denominator);

WitnessSearchResult wap_witness_search(const FiniteWord& u,
                                       const WitnessOptions& options);
WitnessSearchResult wap_witness_search(const WordStream& w,
                                       const WitnessOptions& options);

struct AbelianPeriodReport {
  std::size_t period = 0;
  std::size_t offset = 0;
  std::size_t blocks = 0;  // complete blocks verified
  ParikhVector parikh;     // shared by every block
};

/// Smallest (period, offset) in lexicographic order, period <= P and
/// offset <= S, such that all complete blocks w[s+ip+1 .. s+(i+1)p] inside
/// the prefix are abelian equivalent. Requires S + 2P <= N.
std::optional<AbelianPeriodReport> abelian_period_search(const FiniteWord& u,
                                                         std::size_t max_period,
                                                         std::size_t max_offset);
std::optional<AbelianPeriodReport> abelian_period_search(const WordStream& w,
                                                         std::size_t n,
                                                         std::size_t max_period,
                                                         std::size_t max_offset);

}  // namespace wap
