#include "wap/words.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "wap/error.hpp"

namespace wap {

namespace {

void check_alphabet_size(int sigma) {
  if (sigma < 1 || sigma > kMaxAlphabet) {
    throw InputError("alphabet size must be between 1 and 3, got " +
                     std::to_string(sigma));
  }
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw DomainError("exponent overflow");
  }
  return out;
}

}  // namespace

FiniteWord::FiniteWord(std::vector<Letter> letters, int alphabet_size)
    : letters_(std::move(letters)), sigma_(alphabet_size) {
  check_alphabet_size(sigma_);
  for (const Letter a : letters_) {
    if (a >= sigma_) {
      throw DomainError("letter " + std::to_string(a) +
                        " outside alphabet of size " + std::to_string(sigma_));
    }
  }
}

FiniteWord FiniteWord::parse(std::string_view text, int alphabet_size) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  int max_letter = 0;
  for (const char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch < '0' || ch > '2') {
      throw InputError(std::string("invalid letter '") + ch +
                       "' (expected 0, 1 or 2)");
    }
    const int a = ch - '0';
    max_letter = std::max(max_letter, a);
    letters.push_back(static_cast<Letter>(a));
  }
  if (alphabet_size == 0) alphabet_size = std::max(2, max_letter + 1);
  if (max_letter >= alphabet_size) {
    throw InputError("letter " + std::to_string(max_letter) +
                     " outside alphabet of size " +
                     std::to_string(alphabet_size));
  }
  return FiniteWord(std::move(letters), alphabet_size);
}

std::size_t FiniteWord::count(Letter a) const noexcept {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), a));
}

std::string FiniteWord::str() const {
  std::string out(letters_.size(), '0');
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    out[i] = static_cast<char>('0' + letters_[i]);
  }
  return out;
}

FiniteWord FiniteWord::factor(std::size_t first, std::size_t last) const {
  if (first < 1 || last > letters_.size() || first > last + 1) {
    throw DomainError("factor [" + std::to_string(first) + ", " +
                      std::to_string(last) + "] outside word of length " +
                      std::to_string(letters_.size()));
  }
  FiniteWord out;
  out.sigma_ = sigma_;
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(first - 1),
                      letters_.begin() + static_cast<std::ptrdiff_t>(last));
  return out;
}

FiniteWord FiniteWord::prefix(std::size_t n) const {
  return factor(1, std::min(n, letters_.size()));
}

bool FiniteWord::starts_with(const FiniteWord& u) const noexcept {
  return u.size() <= size() &&
         std::equal(u.letters_.begin(), u.letters_.end(), letters_.begin());
}

void FiniteWord::push_back(Letter a) {
  if (a >= sigma_) {
    throw DomainError("letter " + std::to_string(a) +
                      " outside alphabet of size " + std::to_string(sigma_));
  }
  letters_.push_back(a);
}

void FiniteWord::append(const FiniteWord& u) {
  if (u.sigma_ > sigma_) {
    for (const Letter a : u.letters_) push_back(a);
    return;
  }
  letters_.insert(letters_.end(), u.letters_.begin(), u.letters_.end());
}

std::ostream& operator<<(std::ostream& os, const FiniteWord& w) {
  return os << w.str();
}

std::int64_t ParikhVector::total() const noexcept {
  std::int64_t sum = 0;
  for (int a = 0; a < alphabet_size; ++a) sum += counts[a];
  return sum;
}

std::string ParikhVector::str() const {
  std::string out = "(";
  for (int a = 0; a < alphabet_size; ++a) {
    if (a > 0) out += ",";
    out += std::to_string(counts[a]);
  }
  return out + ")";
}

ParikhVector parikh(const FiniteWord& u) {
  ParikhVector p;
  p.alphabet_size = u.alphabet_size();
  for (const Letter a : u.letters()) ++p.counts[a];
  return p;
}

bool abelian_equivalent(const FiniteWord& u, const FiniteWord& v) {
  return parikh(u).counts == parikh(v).counts;
}

// ---------------------------------------------------------------------------

Morphism::Morphism(std::vector<FiniteWord> images) : images_(std::move(images)) {
  const int sigma = static_cast<int>(images_.size());
  check_alphabet_size(sigma);
  if (sigma < 2) throw InputError("a morphism needs at least two letters");
  for (auto& img : images_) {
    if (img.empty()) throw InputError("morphism images must be non-empty");
    for (const Letter a : img.letters()) {
      if (a >= sigma) {
        throw DomainError("image letter " + std::to_string(a) +
                          " outside alphabet of size " + std::to_string(sigma));
      }
    }
    img = FiniteWord(std::vector<Letter>(img.letters().begin(), img.letters().end()),
                     sigma);
  }
  const std::size_t k = images_.front().size();
  const bool uniform = std::all_of(images_.begin(), images_.end(),
                                   [k](const FiniteWord& w) { return w.size() == k; });
  uniform_length_ = uniform ? k : 0;
}

Morphism Morphism::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  while (true) {
    const auto slash = text.find('/', begin);
    parts.push_back(text.substr(begin, slash == std::string_view::npos
                                           ? std::string_view::npos
                                           : slash - begin));
    if (slash == std::string_view::npos) break;
    begin = slash + 1;
  }
  if (parts.size() < 2 || parts.size() > kMaxAlphabet) {
    throw InputError("morphism needs 2 or 3 images separated by '/': '" +
                     std::string(text) + "'");
  }
  std::vector<FiniteWord> images;
  for (const auto part : parts) {
    images.push_back(FiniteWord::parse(part, kMaxAlphabet));
  }
  return Morphism(std::move(images));
}

const FiniteWord& Morphism::image(Letter a) const {
  if (a >= images_.size()) {
    throw DomainError("letter " + std::to_string(a) +
                      " outside the morphism's domain");
  }
  return images_[a];
}

bool Morphism::prolongeable_on(Letter a) const {
  const FiniteWord& img = image(a);
  return img.size() >= 2 && img[0] == a;
}

std::array<std::array<std::int64_t, kMaxAlphabet>, kMaxAlphabet>
Morphism::incidence() const {
  std::array<std::array<std::int64_t, kMaxAlphabet>, kMaxAlphabet> m{};
  for (std::size_t x = 0; x < images_.size(); ++x) {
    for (const Letter y : images_[x].letters()) ++m[x][y];
  }
  return m;
}

Morphism Morphism::swapped() const {
  if (alphabet_size() != 2) {
    throw PreconditionError("letter swap is defined for binary morphisms");
  }
  auto swap_word = [](const FiniteWord& w) {
    std::vector<Letter> out(w.letters().begin(), w.letters().end());
    for (auto& a : out) a = static_cast<Letter>(1 - a);
    return FiniteWord(std::move(out), 2);
  };
  return Morphism({swap_word(images_[1]), swap_word(images_[0])});
}

std::string Morphism::str() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i > 0) out += "/";
    out += images_[i].str();
  }
  return out;
}

FiniteWord apply_morphism(const Morphism& m, const FiniteWord& u) {
  std::size_t total = 0;
  for (const Letter a : u.letters()) total += m.image(a).size();
  FiniteWord out(std::vector<Letter>{}, m.alphabet_size());
  out.reserve(total);
  for (const Letter a : u.letters()) out.append(m.image(a));
  return out;
}

// ---------------------------------------------------------------------------

ToeplitzPattern::ToeplitzPattern(std::vector<int> symbols, int alphabet_size)
    : symbols_(std::move(symbols)), sigma_(alphabet_size) {
  check_alphabet_size(sigma_);
  if (symbols_.empty()) throw InputError("empty Toeplitz pattern");
  if (symbols_.front() == kHole) {
    throw InputError("Toeplitz pattern must start with a letter, not a hole");
  }
  for (const int s : symbols_) {
    if (s == kHole) {
      ++holes_;
    } else if (s < 0 || s >= sigma_) {
      throw InputError("Toeplitz symbol outside alphabet");
    }
  }
}

ToeplitzPattern ToeplitzPattern::parse(std::string_view text) {
  std::vector<int> symbols;
  int max_letter = 0;
  for (const char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '?') {
      symbols.push_back(kHole);
    } else if (ch >= '0' && ch <= '2') {
      symbols.push_back(ch - '0');
      max_letter = std::max(max_letter, ch - '0');
    } else {
      throw InputError(std::string("invalid Toeplitz symbol '") + ch + "'");
    }
  }
  return ToeplitzPattern(std::move(symbols), std::max(2, max_letter + 1));
}

std::string ToeplitzPattern::str() const {
  std::string out;
  for (const int s : symbols_) out += s == kHole ? '?' : static_cast<char>('0' + s);
  return out;
}

// ---------------------------------------------------------------------------

ExponentGenerator ExponentGenerator::constant(std::int64_t value) {
  if (value < 1) throw InputError("block exponent must be >= 1");
  ExponentGenerator g;
  g.kind_ = Kind::constant;
  g.initial_ = {value};
  return g;
}

ExponentGenerator ExponentGenerator::geometric(std::int64_t base,
                                               std::int64_t start) {
  if (base < 1 || start < 1) {
    throw InputError("geometric exponents need base >= 1 and start >= 1");
  }
  ExponentGenerator g;
  g.kind_ = Kind::geometric;
  g.initial_ = {start};
  g.base_ = base;
  return g;
}

ExponentGenerator ExponentGenerator::recurrence(std::vector<std::int64_t> initial,
                                                std::int64_t c1, std::int64_t c2) {
  if (initial.size() < 2) {
    throw InputError("an order-2 recurrence needs at least two initial terms");
  }
  for (const auto v : initial) {
    if (v < 1) throw InputError("block exponent must be >= 1");
  }
  ExponentGenerator g;
  g.kind_ = Kind::recurrence;
  g.initial_ = std::move(initial);
  g.c1_ = c1;
  g.c2_ = c2;
  return g;
}

void ExponentGenerator::reset() {
  index_ = 0;
  prev1_ = 0;
  prev2_ = 0;
}

std::int64_t ExponentGenerator::next() {
  std::int64_t value = 0;
  switch (kind_) {
    case Kind::constant:
      value = initial_.front();
      break;
    case Kind::geometric:
      value = index_ == 0 ? initial_.front() : checked_mul(prev1_, base_);
      break;
    case Kind::recurrence:
      if (index_ < initial_.size()) {
        value = initial_[index_];
      } else {
        std::int64_t sum = 0;
        if (__builtin_add_overflow(checked_mul(c1_, prev1_),
                                   checked_mul(c2_, prev2_), &sum)) {
          throw DomainError("exponent overflow");
        }
        value = sum;
      }
      break;
  }
  if (value < 1) {
    throw InputError("exponent generator produced " + std::to_string(value) +
                     " (must be >= 1)");
  }
  prev2_ = prev1_;
  prev1_ = value;
  ++index_;
  return value;
}

Letter unified_letter(Letter c, Letter a, Letter b, UnifyMode mode) {
  const Letter merged = c == b ? a : c;
  if (mode == UnifyMode::keep) return merged;
  return static_cast<Letter>(merged > b ? merged - 1 : merged);
}

namespace {

int unified_alphabet(int sigma, UnifyMode mode) {
  return mode == UnifyMode::keep ? sigma : std::max(2, sigma - 1);
}

}  // namespace

FiniteWord unify_letters(const FiniteWord& u, Letter a, Letter b, UnifyMode mode) {
  if (a == b) throw InputError("unify_letters needs two distinct letters");
  if (a >= u.alphabet_size() || b >= u.alphabet_size()) {
    throw DomainError("unified letter outside alphabet");
  }
  std::vector<Letter> out(u.letters().begin(), u.letters().end());
  for (auto& c : out) c = unified_letter(c, a, b, mode);
  return FiniteWord(std::move(out), unified_alphabet(u.alphabet_size(), mode));
}

}  // namespace wap
