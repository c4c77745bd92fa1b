#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wap/rational.hpp"
#include "wap/words.hpp"

namespace wap {

struct OccurrenceIndex {
  FiniteWord factor;
  std::size_t scanned = 0;
  std::vector<std::size_t> positions;  // 1-based starts, ascending, exhaustive
};

/// All occurrences of u inside the word (KMP, linear time).
OccurrenceIndex occurrences(const FiniteWord& w, const FiniteWord& u);
OccurrenceIndex occurrences(const WordStream& w, const FiniteWord& u, std::size_t n);

/// w = leading . v^1 . v^2 ... v^r . tail where v^i = w[n_i .. n_{i+1} - 1]
/// are the returns to u and tail = w[n_last .. N] is the unfinished one.
struct ReturnFactorization {
  FiniteWord factor;
  FiniteWord leading;
  std::vector<FiniteWord> returns;
  std::vector<std::size_t> starts;  // n_i for each return
  FiniteWord tail;

  [[nodiscard]] FiniteWord reconstruct() const;
};

/// Throws BudgetError if u occurs fewer than twice in the prefix.
ReturnFactorization return_factorization(const FiniteWord& w, const FiniteWord& u);
ReturnFactorization return_factorization(const WordStream& w, const FiniteWord& u,
                                         std::size_t n);

enum class Relation { at_least, at_most };
std::string to_string(Relation r);

struct OrbitLevel {
  FiniteWord word;
  std::size_t position = 0;  // an occurrence of word in w (1-based)
  ParikhVector parikh;
  Rational frequency;        // rho_0(word)
  Relation relation = Relation::at_least;
  std::size_t returns_spanned = 0;  // 0 for the seed
};

enum class OrbitStatus { complete, budget_exhausted };
std::string to_string(OrbitStatus s);

struct OrbitBuilderState {
  Rational target;
  std::vector<OrbitLevel> levels;  // u_1, u_2, ...
  Relation next_relation = Relation::at_least;
  std::size_t depth_reached = 0;
  std::size_t budget = 0;
  std::size_t work = 0;  // candidate factors examined
  OrbitStatus status = OrbitStatus::complete;
};

struct OrbitResult {
  FiniteWord constructed;  // u_m, the deepest level reached
  OrbitBuilderState state;
  std::int64_t level = 0;  // most frequently hit level of D at the target slope
  std::vector<std::size_t> hits;
};

struct OrbitOptions {
  std::size_t depth = 5;
  std::size_t budget = 100000;  // prefix of w that is scanned
  std::size_t max_work = 50'000'000;
};

/// Builds nested factors u_1 < u_2 < ... < u_m of w whose letter-0
/// frequencies alternate around the target, so that the limit word's
/// discrepancy at the target slope keeps returning to the same levels.
///
/// Seeds u_1 are tried in a fixed order: the shortest prefix lying exactly on
/// the target line (D = 0) when it recurs in the scanned prefix, then the
/// letter 0 (u_2 at least the target), then the letter 1 (u_2 at most the
/// target). u_{i+1} is the earliest factor that starts at the second or a
/// later occurrence of u_i, spans whole returns to u_i, is strictly longer
/// than u_i and satisfies the next inequality; single returns are preferred
/// over concatenations of several. The run reaching the greatest depth wins,
/// then the one whose final word hits a single level most often; earlier
/// seeds win ties. The work budget is shared by all runs.
OrbitResult build_wap_orbit_point(const WordStream& w, const Rational& target,
                                  const OrbitOptions& options);

struct FrequencyBoundRow {
  std::size_t window = 0;
  Rational min;
  Rational max;
};

struct FrequencyBounds {
  Letter letter = 0;
  std::size_t length = 0;
  std::vector<FrequencyBoundRow> rows;  // windows 1..L
  Rational lower_estimate;              // at window L
  Rational upper_estimate;
};

FrequencyBounds uniform_frequency_bounds(const FiniteWord& w, std::size_t max_window,
                                         Letter letter = 0);
FrequencyBounds uniform_frequency_bounds(const WordStream& w, std::size_t n,
                                         std::size_t max_window, Letter letter = 0);

}  // namespace wap
