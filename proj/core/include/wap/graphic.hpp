#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "wap/rational.hpp"
#include "wap/words.hpp"

namespace wap {

struct StepVector {
  std::int64_t x = 1;
  std::int64_t y = 0;
};

/// One drawing step per letter. For binary words the two vectors must be
/// non-collinear.
class StepVectors {
 public:
  explicit StepVectors(std::vector<StepVector> steps);

  /// v0 = (1, -1), v1 = (1, 1).
  static StepVectors standard();
  /// v0 = (1, -b), v1 = (1, c): the horizontal form for frequency c/(b+c).
  static StepVectors canonical(std::int64_t b, std::int64_t c);

  [[nodiscard]] const StepVector& operator[](Letter a) const;
  [[nodiscard]] std::size_t size() const noexcept { return steps_.size(); }

 private:
  std::vector<StepVector> steps_;
};

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Points (0,0), p_1, ..., p_N with p_n = p_{n-1} + v_{w_n}.
using GraphicPath = std::vector<LatticePoint>;

GraphicPath graphic_points(const FiniteWord& u, const StepVectors& v);

/// O(1)-memory running discrepancy D_n = p*n - q*#a(pref_n).
class DiscrepancyCursor {
 public:
  explicit DiscrepancyCursor(Rational slope, Letter focus = 0);

  std::int64_t push(Letter x) {
    value_ += x == focus_ ? step_focus_ : step_other_;
    ++length_;
    return value_;
  }
  [[nodiscard]] std::int64_t value() const noexcept { return value_; }
  [[nodiscard]] std::size_t length() const noexcept { return length_; }

 private:
  Letter focus_;
  std::int64_t step_focus_;
  std::int64_t step_other_;
  std::int64_t value_ = 0;
  std::size_t length_ = 0;
};

/// Exact values D_0..D_N of D_n = p*n - q*#a(pref_n) for a reduced slope
/// p/q in [0, 1]. Level sets of D are the integer points of the graphic on
/// lines of slope p/q; D has zero drift exactly when letter a has frequency
/// p/q.
class DiscrepancyProfile {
 public:
  static DiscrepancyProfile compute(const WordStream& w, const Rational& slope,
                                    std::size_t n, Letter focus = 0);
  static DiscrepancyProfile compute(const FiniteWord& u, const Rational& slope,
                                    Letter focus = 0);

  [[nodiscard]] const Rational& slope() const noexcept { return slope_; }
  [[nodiscard]] Letter focus() const noexcept { return focus_; }
  /// N (number of letters scanned); values() has N + 1 entries.
  [[nodiscard]] std::size_t length() const noexcept { return values_.size() - 1; }
  [[nodiscard]] std::int64_t operator[](std::size_t n) const { return values_[n]; }
  [[nodiscard]] const std::vector<std::int64_t>& values() const noexcept {
    return values_;
  }
  [[nodiscard]] std::int64_t min() const noexcept { return min_; }
  [[nodiscard]] std::int64_t max() const noexcept { return max_; }

 private:
  DiscrepancyProfile(Rational slope, Letter focus)
      : slope_(slope), focus_(focus) {}
  void push(std::int64_t v);

  Rational slope_;
  Letter focus_ = 0;
  std::vector<std::int64_t> values_{0};
  std::int64_t min_ = 0;
  std::int64_t max_ = 0;
};

struct LineHits {
  std::int64_t level = 0;
  std::vector<std::size_t> positions;  // n >= 1 with D_n = level, ascending
  std::size_t max_gap = 0;             // between consecutive hits
  std::optional<std::size_t> last_hit;

  [[nodiscard]] std::size_t count() const noexcept { return positions.size(); }
};

LineHits line_hits(const DiscrepancyProfile& d, std::int64_t level);

struct WidthEstimate {
  Rational slope;
  std::int64_t min = 0;
  std::int64_t max = 0;
  [[nodiscard]] std::int64_t width() const noexcept { return max - min; }
};

WidthEstimate width(const DiscrepancyProfile& d);

/// Largest hit count over all levels of d (n >= 1).
std::size_t max_level_hits(const DiscrepancyProfile& d);

/// ceil(N / (W + 1)): some level of a profile of width W over N letters is
/// hit at least this often.
std::size_t pigeonhole_bound(std::size_t n, std::int64_t width);

}  // namespace wap
