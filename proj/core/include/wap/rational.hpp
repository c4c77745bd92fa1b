#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace wap {

/// Exact reduced fraction with a positive denominator. Arithmetic is checked:
/// results that do not fit in 64 bits throw std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);  // NOLINT(runtime/explicit)

  /// Accepts "p/q" or "p", optional leading minus. Throws InputError.
  static Rational parse(std::string_view text);

  [[nodiscard]] std::int64_t num() const noexcept { return num_; }
  [[nodiscard]] std::int64_t den() const noexcept { return den_; }

  /// Always "p/q", also for integers ("1/1", "0/1").
  [[nodiscard]] std::string str() const;
  [[nodiscard]] double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& lhs,
                                          const Rational& rhs) noexcept;

  friend Rational operator+(const Rational& lhs, const Rational& rhs);
  friend Rational operator-(const Rational& lhs, const Rational& rhs);
  friend Rational operator*(const Rational& lhs, const Rational& rhs);
  friend Rational operator/(const Rational& lhs, const Rational& rhs);
  Rational operator-() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Reduced fractions p/q in [0, 1] with q <= order, ascending by value.
std::vector<Rational> farey_sequence(std::int64_t order);

}  // namespace wap
