#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wap/rational.hpp"
#include "wap/words.hpp"

// Exact decision procedures for fixed points of binary k-uniform morphisms.

namespace wap {

/// Counts (a b; c d) of a binary uniform morphism: a = |phi(0)|_0,
/// b = |phi(0)|_1, c = |phi(1)|_0, d = |phi(1)|_1, a + b = c + d = k.
struct MorphismMatrix {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;

  static MorphismMatrix of(const Morphism& m);

  [[nodiscard]] std::int64_t k() const noexcept { return a + b; }
  /// Frequency of 0 in the fixed point, c / (b + c); 1/1 when b = c = 0.
  [[nodiscard]] Rational frequency0() const;

  friend bool operator==(const MorphismMatrix&, const MorphismMatrix&) = default;
};

enum class WapCondition { zero_crossing, endpoint, formula };
std::string to_string(WapCondition c);

/// Which criterion settled WAP of a fixed point, with every quantity it
/// used. The quantities refer to the analysed morphism: the input itself for
/// start 0, its letter-swap conjugate for start 1.
struct WapCertificate {
  bool wap = false;
  WapCondition condition = WapCondition::zero_crossing;
  Letter start = 0;
  bool conjugated = false;
  Morphism analysed{{FiniteWord::parse("01"), FiniteWord::parse("10")}};
  MorphismMatrix matrix;
  /// g_{phi(0)}(0..k) with step vectors (1,-b), (1,c).
  std::vector<std::int64_t> graphic;
  std::int64_t delta = 0;  // g_{phi(0)}(k) = -b (a - c)
  /// First abscissa x in (0, k] at which g_{phi(0)} vanishes: an integer
  /// point, or the left end of a sign change between x and x + 1.
  std::optional<std::size_t> zero_at;
  bool zero_is_exact = false;
  std::optional<std::int64_t> A;  // max g_{phi(0)}(i) over letters 1 of phi(0)
  std::optional<std::int64_t> t;  // max g_{phi(1)}(i) over letters 1 of phi(1)
  std::optional<std::size_t> j;   // first position of phi(1) attaining t
  /// Delta (A - c) / (-b) + t, evaluated as (a - c)(A - c) + t.
  std::optional<std::int64_t> lhs;
};

/// Decides whether the fixed point of a binary uniform morphism starting
/// with `start` is weak abelian periodic. Conditions are tried in order:
/// zero crossing of g_{phi(0)} in (0, k], then g_{phi(0)}(k) >= -b, then the
/// formula. Throws PreconditionError for non-binary, non-uniform, k < 2 or
/// non-prolongeable input.
WapCertificate decide_wap(const Morphism& m, Letter start);

enum class BoundedWapReason { abelian_equivalent_images, alternating_form, none };
std::string to_string(BoundedWapReason r);

/// Bounded WAP, abelian periodicity and the image condition coincide for the
/// fixed points; `bounded_wap` reports all three. `primitive` records whether
/// both images use both letters in their powers (b >= 1 and c >= 1); the
/// equivalence is stated for that setting.
struct BoundedWapVerdict {
  bool bounded_wap = false;
  BoundedWapReason reason = BoundedWapReason::none;
  bool primitive = false;

  [[nodiscard]] bool abelian_periodic() const noexcept { return bounded_wap; }
};

BoundedWapVerdict decide_bounded_wap(const Morphism& m);

/// Largest hit count of any horizontal level of the fixed point's graphic at
/// slope c/(b+c) over the first n letters.
std::size_t horizontal_hits(const Morphism& m, Letter start, std::size_t n);

struct DecayCheck {
  bool holds = true;
  std::size_t levels_checked = 0;   // number of intervals (k^e, k^{e+1}]
  std::optional<std::size_t> violation_exponent;
  std::optional<std::int64_t> violation_value;
};

/// For a NotWAP certificate: the running maximum of the fixed point's
/// graphic over (k^e, k^{e+1}] is at most A - e for every e >= 1, the last
/// interval cut at n (and over the letters 1 of (1, k] for e = 0).
DecayCheck notwap_decay_check(const WapCertificate& cert, std::size_t n);

struct CensusOptions {
  std::size_t k = 2;
  /// Prefix length of the empirical cross-check; 0 disables it.
  std::size_t prefix = 0;
  /// Prefix length of the decay check for NotWAP verdicts; 0 means `prefix`.
  std::size_t decay_prefix = 0;
  std::size_t min_hits = 50;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct CensusRow {
  FiniteWord phi0;
  FiniteWord phi1;
  MorphismMatrix matrix;
  WapCertificate from0;
  std::optional<WapCertificate> from1;  // when prolongeable on 1
  BoundedWapVerdict bounded;
  std::optional<std::size_t> empirical_hits;
  std::optional<bool> agree;
};

/// All pairs (phi(0), phi(1)) of length k with phi(0) starting with 0, in
/// lexicographic order. k must lie in [2, 6].
std::vector<CensusRow> enumerate_census(const CensusOptions& options);

void write_census_csv(std::ostream& os, const std::vector<CensusRow>& rows);

}  // namespace wap
