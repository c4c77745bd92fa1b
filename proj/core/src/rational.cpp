#include "wap/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "wap/error.hpp"

namespace wap {

namespace {

__extension__ using Wide = __int128;

std::int64_t narrow(Wide v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(v);
}

Rational make(Wide num, Wide den) {
  if (den == 0) throw std::domain_error("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide a = num < 0 ? -num : num;
  Wide b = den;
  while (b != 0) {
    Wide r = a % b;
    a = b;
    b = r;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num), narrow(den));
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw InputError("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("rational with zero denominator");
  if (den < 0) {
    if (num == INT64_MIN || den == INT64_MIN) {
      throw std::overflow_error("rational arithmetic overflow");
    }
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)),
                  parse_int(text.substr(slash + 1)));
}

std::string Rational::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& lhs,
                                 const Rational& rhs) noexcept {
  const Wide l = static_cast<Wide>(lhs.num_) * rhs.den_;
  const Wide r = static_cast<Wide>(rhs.num_) * lhs.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational operator+(const Rational& lhs, const Rational& rhs) {
  return make(static_cast<Wide>(lhs.num_) * rhs.den_ +
                  static_cast<Wide>(rhs.num_) * lhs.den_,
              static_cast<Wide>(lhs.den_) * rhs.den_);
}

Rational operator-(const Rational& lhs, const Rational& rhs) {
  return lhs + (-rhs);
}

Rational operator*(const Rational& lhs, const Rational& rhs) {
  return make(static_cast<Wide>(lhs.num_) * rhs.num_,
              static_cast<Wide>(lhs.den_) * rhs.den_);
}

Rational operator/(const Rational& lhs, const Rational& rhs) {
  return make(static_cast<Wide>(lhs.num_) * rhs.den_,
              static_cast<Wide>(lhs.den_) * rhs.num_);
}

Rational Rational::operator-() const {
  if (num_ == INT64_MIN) throw std::overflow_error("rational negation");
  return Rational(-num_, den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

std::vector<Rational> farey_sequence(std::int64_t order) {
  if (order < 1) throw InputError("Farey order must be >= 1");
  // Successor rule: given neighbours a/b < c/d, the next term is
  // (k*c - a)/(k*d - b) with k = (order + b) / d.
  std::vector<Rational> out;
  std::int64_t a = 0, b = 1, c = 1, d = order;
  out.emplace_back(a, b);
  while (c <= order) {
    out.emplace_back(c, d);
    if (c == 1 && d == 1) break;
    const std::int64_t k = (order + b) / d;
    const std::int64_t next_c = k * c - a;
    const std::int64_t next_d = k * d - b;
    a = c;
    b = d;
    c = next_c;
    d = next_d;
  }
  return out;
}

}  // namespace wap
