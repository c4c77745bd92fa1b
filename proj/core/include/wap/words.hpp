#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wap {

/// Index into an alphabet {0, ..., sigma-1}.
using Letter = std::uint8_t;

inline constexpr int kMaxAlphabet = 3;

/// A finite word over an alphabet of size 1..3. The empty word is allowed.
class FiniteWord {
 public:
  FiniteWord() = default;
  explicit FiniteWord(std::vector<Letter> letters, int alphabet_size = 2);

  /// Digits 0..2, whitespace ignored. alphabet_size 0 means "smallest of
  /// {2, 3} that covers the text".
  static FiniteWord parse(std::string_view text, int alphabet_size = 0);

  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
  [[nodiscard]] int alphabet_size() const noexcept { return sigma_; }

  /// 0-based access.
  [[nodiscard]] Letter operator[](std::size_t i) const noexcept {
    return letters_[i];
  }
  [[nodiscard]] std::span<const Letter> letters() const noexcept {
    return letters_;
  }

  [[nodiscard]] std::size_t count(Letter a) const noexcept;
  [[nodiscard]] std::string str() const;

  /// Factor w[first, last] with 1-based inclusive bounds.
  [[nodiscard]] FiniteWord factor(std::size_t first, std::size_t last) const;
  [[nodiscard]] FiniteWord prefix(std::size_t n) const;
  [[nodiscard]] bool starts_with(const FiniteWord& u) const noexcept;

  void push_back(Letter a);
  void append(const FiniteWord& u);
  void reserve(std::size_t n) { letters_.reserve(n); }

  friend bool operator==(const FiniteWord& lhs, const FiniteWord& rhs) {
    return lhs.letters_ == rhs.letters_;
  }

 private:
  std::vector<Letter> letters_;
  int sigma_ = 2;
};

std::ostream& operator<<(std::ostream& os, const FiniteWord& w);

/// Per-letter occurrence counts.
struct ParikhVector {
  std::array<std::int64_t, kMaxAlphabet> counts{};
  int alphabet_size = 2;

  [[nodiscard]] std::int64_t operator[](Letter a) const { return counts[a]; }
  [[nodiscard]] std::int64_t total() const noexcept;
  [[nodiscard]] std::string str() const;  // "(3,1)"

  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
};

ParikhVector parikh(const FiniteWord& u);
bool abelian_equivalent(const FiniteWord& u, const FiniteWord& v);

/// Letter-to-word substitution. Images are non-empty.
class Morphism {
 public:
  explicit Morphism(std::vector<FiniteWord> images);

  /// "0001/1011" (one image per letter, separated by '/').
  static Morphism parse(std::string_view text);

  [[nodiscard]] int alphabet_size() const noexcept {
    return static_cast<int>(images_.size());
  }
  [[nodiscard]] const FiniteWord& image(Letter a) const;
  [[nodiscard]] const std::vector<FiniteWord>& images() const noexcept {
    return images_;
  }
  [[nodiscard]] bool is_uniform() const noexcept { return uniform_length_ > 0; }
  /// Common image length k, or 0 when not uniform.
  [[nodiscard]] std::size_t uniform_length() const noexcept {
    return uniform_length_;
  }
  /// phi(a) starts with a and |phi(a)| >= 2.
  [[nodiscard]] bool prolongeable_on(Letter a) const;

  /// incidence[x][y] = |phi(x)|_y.
  [[nodiscard]] std::array<std::array<std::int64_t, kMaxAlphabet>, kMaxAlphabet>
  incidence() const;

  /// Binary conjugate by the letter swap 0 <-> 1: psi(0) = swap(phi(1)),
  /// psi(1) = swap(phi(0)). The fixed point of phi from 1 is the swap of the
  /// fixed point of psi from 0.
  [[nodiscard]] Morphism swapped() const;

  [[nodiscard]] std::string str() const;

  friend bool operator==(const Morphism& lhs, const Morphism& rhs) {
    return lhs.images_ == rhs.images_;
  }

 private:
  std::vector<FiniteWord> images_;
  std::size_t uniform_length_ = 0;
};

FiniteWord apply_morphism(const Morphism& m, const FiniteWord& u);

/// Periodic pattern over the alphabet plus holes, e.g. "0?1?".
class ToeplitzPattern {
 public:
  static constexpr int kHole = -1;

  explicit ToeplitzPattern(std::vector<int> symbols, int alphabet_size = 2);
  static ToeplitzPattern parse(std::string_view text);

  [[nodiscard]] std::size_t length() const noexcept { return symbols_.size(); }
  [[nodiscard]] std::size_t holes() const noexcept { return holes_; }
  [[nodiscard]] int alphabet_size() const noexcept { return sigma_; }
  [[nodiscard]] const std::vector<int>& symbols() const noexcept {
    return symbols_;
  }
  [[nodiscard]] std::string str() const;

 private:
  std::vector<int> symbols_;
  std::size_t holes_ = 0;
  int sigma_ = 2;
};

/// Exponent sequence of a block construction.
class ExponentGenerator {
 public:
  enum class Kind { constant, geometric, recurrence };

  static ExponentGenerator constant(std::int64_t value);
  /// start, start*base, start*base^2, ...
  static ExponentGenerator geometric(std::int64_t base, std::int64_t start);
  /// Emits the initial terms, then n_i = c1*n_{i-1} + c2*n_{i-2}.
  static ExponentGenerator recurrence(std::vector<std::int64_t> initial,
                                      std::int64_t c1 = 1, std::int64_t c2 = 1);

  [[nodiscard]] Kind kind() const noexcept { return kind_; }

  /// Next exponent. Throws InputError if the rule produces a value < 1.
  std::int64_t next();
  void reset();

 private:
  Kind kind_ = Kind::constant;
  std::vector<std::int64_t> initial_;
  std::int64_t base_ = 1;
  std::int64_t c1_ = 1;
  std::int64_t c2_ = 1;
  std::size_t index_ = 0;
  std::int64_t prev1_ = 0;  // n_{i-1}
  std::int64_t prev2_ = 0;  // n_{i-2}
};

/// word_1^{e_1} word_2^{e_2} ... with entries cycled forever. Each entry
/// draws its exponent from generators[entry.generator]; entries may share a
/// generator, in which case they consume one common sequence.
struct BlockSpec {
  struct Entry {
    FiniteWord word;
    std::size_t generator = 0;
  };
  std::vector<Entry> entries;
  std::vector<ExponentGenerator> generators;
  int alphabet_size = 2;
};

class LetterSource;

/// Single-consumer cursor over an infinite (or, for file input, finite) word.
/// Positions are 1-based. Copying is explicit through fresh(), which restarts
/// from position 1 with identical output.
class WordStream {
 public:
  explicit WordStream(std::unique_ptr<LetterSource> source);
  ~WordStream();
  WordStream(WordStream&&) noexcept;
  WordStream& operator=(WordStream&&) noexcept;
  WordStream(const WordStream&) = delete;
  WordStream& operator=(const WordStream&) = delete;

  /// Next letter, or nullopt when a finite source is exhausted.
  std::optional<Letter> next();
  /// Reads up to n letters from the cursor.
  FiniteWord take(std::size_t n);

  /// Letters consumed so far; the next letter is w_{position()+1}.
  [[nodiscard]] std::size_t position() const noexcept { return position_; }
  [[nodiscard]] int alphabet_size() const noexcept;
  [[nodiscard]] bool finite() const noexcept;
  [[nodiscard]] WordStream fresh() const;

 private:
  std::unique_ptr<LetterSource> source_;
  std::size_t position_ = 0;
};

/// Implementation interface for streams.
class LetterSource {
 public:
  virtual ~LetterSource() = default;
  virtual std::optional<Letter> next() = 0;
  [[nodiscard]] virtual std::unique_ptr<LetterSource> restart() const = 0;
  [[nodiscard]] virtual int alphabet_size() const = 0;
  [[nodiscard]] virtual bool finite() const { return false; }
};

/// First n letters of w, read from a fresh copy (the cursor of w is untouched).
/// Shorter than n only for exhausted finite sources.
FiniteWord prefix(const WordStream& w, std::size_t n);

WordStream fixed_point_stream(const Morphism& m, Letter start);
WordStream toeplitz_stream(const ToeplitzPattern& pattern);
WordStream periodic_stream(const FiniteWord& u);
WordStream block_word_stream(BlockSpec spec);
WordStream finite_stream(FiniteWord u);

/// paperfolding, thue_morse, prop12, prop31, prop34.
WordStream named_word(std::string_view name);
std::vector<std::string> named_words();

/// Block specifications behind the constructed named words.
BlockSpec prop12_spec();
BlockSpec prop31_spec();
BlockSpec prop34_spec();

/// keep: the image under b -> a over the original alphabet. compact: the
/// letters above b then move down by one, so a ternary word becomes binary.
enum class UnifyMode { keep, compact };

Letter unified_letter(Letter c, Letter a, Letter b, UnifyMode mode = UnifyMode::keep);
FiniteWord unify_letters(const FiniteWord& u, Letter a, Letter b,
                         UnifyMode mode = UnifyMode::keep);
WordStream unify_letters(const WordStream& w, Letter a, Letter b,
                         UnifyMode mode = UnifyMode::keep);

}  // namespace wap
