#include <algorithm>

#include "wap/error.hpp"
#include "wap/words.hpp"

namespace wap {

WordStream::WordStream(std::unique_ptr<LetterSource> source)
    : source_(std::move(source)) {}
WordStream::~WordStream() = default;
WordStream::WordStream(WordStream&&) noexcept = default;
WordStream& WordStream::operator=(WordStream&&) noexcept = default;

std::optional<Letter> WordStream::next() {
  auto a = source_->next();
  if (a) ++position_;
  return a;
}

FiniteWord WordStream::take(std::size_t n) {
  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = next();
    if (!a) break;
    out.push_back(*a);
  }
  return FiniteWord(std::move(out), alphabet_size());
}

int WordStream::alphabet_size() const noexcept {
  return source_->alphabet_size();
}

bool WordStream::finite() const noexcept { return source_->finite(); }

WordStream WordStream::fresh() const { return WordStream(source_->restart()); }

FiniteWord prefix(const WordStream& w, std::size_t n) {
  return w.fresh().take(n);
}

namespace {

// Fixed point a x phi(x) phi^2(x) ... where phi(a) = a x. Level L emits
// phi^L(x) by depth-first expansion; the frame stack never exceeds L + 1.
class FixedPointSource final : public LetterSource {
 public:
  FixedPointSource(Morphism m, Letter start)
      : morphism_(std::move(m)), start_(start) {
    const FiniteWord& img = morphism_.image(start_);
    tail_ = img.factor(2, img.size());
  }

  std::optional<Letter> next() override {
    if (!started_) {
      started_ = true;
      return start_;
    }
    while (true) {
      if (stack_.empty()) {
        ++level_;
        stack_.push_back({&tail_, 0});
      }
      Frame& top = stack_.back();
      if (top.index == top.word->size()) {
        stack_.pop_back();
        continue;
      }
      const Letter c = (*top.word)[top.index++];
      if (stack_.size() - 1 == level_) return c;
      stack_.push_back({&morphism_.image(c), 0});
    }
  }

  [[nodiscard]] std::unique_ptr<LetterSource> restart() const override {
    return std::make_unique<FixedPointSource>(morphism_, start_);
  }
  [[nodiscard]] int alphabet_size() const override {
    return morphism_.alphabet_size();
  }

 private:
  struct Frame {
    const FiniteWord* word;
    std::size_t index;
  };
  Morphism morphism_;
  Letter start_;
  FiniteWord tail_;
  bool started_ = false;
  std::size_t level_ = static_cast<std::size_t>(-1);
  std::vector<Frame> stack_;
};

// Position j of T(P): the pattern symbol at ((j-1) mod p) + 1 if it is a
// letter, otherwise the letter of T(P) at the rank of that hole among all
// holes of P^omega. That rank is strictly smaller than j.
class ToeplitzSource final : public LetterSource {
 public:
  explicit ToeplitzSource(ToeplitzPattern pattern) : pattern_(std::move(pattern)) {
    std::size_t rank = 0;
    for (const int s : pattern_.symbols()) {
      hole_rank_.push_back(s == ToeplitzPattern::kHole ? ++rank : 0);
    }
  }

  std::optional<Letter> next() override { return letter_at(++position_); }

  [[nodiscard]] std::unique_ptr<LetterSource> restart() const override {
    return std::make_unique<ToeplitzSource>(pattern_);
  }
  [[nodiscard]] int alphabet_size() const override {
    return pattern_.alphabet_size();
  }

 private:
  [[nodiscard]] Letter letter_at(std::size_t j) const {
    const std::size_t p = pattern_.length();
    const std::size_t q = pattern_.holes();
    while (true) {
      const std::size_t r = (j - 1) % p;
      const int s = pattern_.symbols()[r];
      if (s != ToeplitzPattern::kHole) return static_cast<Letter>(s);
      j = ((j - 1) / p) * q + hole_rank_[r];
    }
  }

  ToeplitzPattern pattern_;
  std::vector<std::size_t> hole_rank_;
  std::size_t position_ = 0;
};

class PeriodicSource final : public LetterSource {
 public:
  explicit PeriodicSource(FiniteWord period) : period_(std::move(period)) {}

  std::optional<Letter> next() override {
    const Letter a = period_[index_];
    if (++index_ == period_.size()) index_ = 0;
    return a;
  }
  [[nodiscard]] std::unique_ptr<LetterSource> restart() const override {
    return std::make_unique<PeriodicSource>(period_);
  }
  [[nodiscard]] int alphabet_size() const override {
    return period_.alphabet_size();
  }

 private:
  FiniteWord period_;
  std::size_t index_ = 0;
};

class BlockSource final : public LetterSource {
 public:
  explicit BlockSource(BlockSpec spec) : original_(spec), state_(std::move(spec)) {
    for (auto& g : state_.generators) g.reset();
  }

  std::optional<Letter> next() override {
    while (remaining_ == 0) start_block();
    const FiniteWord& word = state_.entries[entry_].word;
    const Letter a = word[index_];
    if (++index_ == word.size()) {
      index_ = 0;
      --remaining_;
    }
    return a;
  }

  [[nodiscard]] std::unique_ptr<LetterSource> restart() const override {
    return std::make_unique<BlockSource>(original_);
  }
  [[nodiscard]] int alphabet_size() const override {
    return state_.alphabet_size;
  }

 private:
  void start_block() {
    if (started_) entry_ = (entry_ + 1) % state_.entries.size();
    started_ = true;
    const auto& e = state_.entries[entry_];
    remaining_ = state_.generators[e.generator].next();
    index_ = 0;
  }

  BlockSpec original_;
  BlockSpec state_;
  std::size_t entry_ = 0;
  bool started_ = false;
  std::int64_t remaining_ = 0;
  std::size_t index_ = 0;
};

class FiniteSource final : public LetterSource {
 public:
  explicit FiniteSource(std::shared_ptr<const FiniteWord> word)
      : word_(std::move(word)) {}

  std::optional<Letter> next() override {
    if (index_ >= word_->size()) return std::nullopt;
    return (*word_)[index_++];
  }
  [[nodiscard]] std::unique_ptr<LetterSource> restart() const override {
    return std::make_unique<FiniteSource>(word_);
  }
  [[nodiscard]] int alphabet_size() const override {
    return word_->alphabet_size();
  }
  [[nodiscard]] bool finite() const override { return true; }

 private:
  std::shared_ptr<const FiniteWord> word_;
  std::size_t index_ = 0;
};

class UnifySource final : public LetterSource {
 public:
  UnifySource(std::unique_ptr<LetterSource> inner, Letter a, Letter b, UnifyMode mode)
      : inner_(std::move(inner)), a_(a), b_(b), mode_(mode) {}

  std::optional<Letter> next() override {
    const auto c = inner_->next();
    if (!c) return c;
    return unified_letter(*c, a_, b_, mode_);
  }
  [[nodiscard]] std::unique_ptr<LetterSource> restart() const override {
    return std::make_unique<UnifySource>(inner_->restart(), a_, b_, mode_);
  }
  [[nodiscard]] int alphabet_size() const override {
    const int sigma = inner_->alphabet_size();
    return mode_ == UnifyMode::keep ? sigma : std::max(2, sigma - 1);
  }
  [[nodiscard]] bool finite() const override { return inner_->finite(); }

 private:
  std::unique_ptr<LetterSource> inner_;
  Letter a_;
  Letter b_;
  UnifyMode mode_;
};

}  // namespace

WordStream fixed_point_stream(const Morphism& m, Letter start) {
  if (start >= m.alphabet_size()) {
    throw DomainError("start letter outside the morphism's domain");
  }
  if (!m.prolongeable_on(start)) {
    throw PreconditionError("morphism " + m.str() + " is not prolongeable on " +
                            std::to_string(start));
  }
  return WordStream(std::make_unique<FixedPointSource>(m, start));
}

WordStream toeplitz_stream(const ToeplitzPattern& pattern) {
  return WordStream(std::make_unique<ToeplitzSource>(pattern));
}

WordStream periodic_stream(const FiniteWord& u) {
  if (u.empty()) throw InputError("periodic word needs a non-empty period");
  return WordStream(std::make_unique<PeriodicSource>(u));
}

WordStream block_word_stream(BlockSpec spec) {
  if (spec.entries.empty()) throw InputError("block spec has no entries");
  for (const auto& e : spec.entries) {
    if (e.word.empty()) throw InputError("block word must be non-empty");
    if (e.generator >= spec.generators.size()) {
      throw InputError("block entry refers to a missing exponent generator");
    }
    for (const Letter a : e.word.letters()) {
      if (a >= spec.alphabet_size) throw DomainError("block letter outside alphabet");
    }
  }
  return WordStream(std::make_unique<BlockSource>(std::move(spec)));
}

WordStream finite_stream(FiniteWord u) {
  return WordStream(
      std::make_unique<FiniteSource>(std::make_shared<const FiniteWord>(std::move(u))));
}

WordStream unify_letters(const WordStream& w, Letter a, Letter b, UnifyMode mode) {
  if (a == b) throw InputError("unify_letters needs two distinct letters");
  if (a >= w.alphabet_size() || b >= w.alphabet_size()) {
    throw DomainError("unified letter outside alphabet");
  }
  WordStream base = w.fresh();
  class Wrapper final : public LetterSource {
   public:
    explicit Wrapper(WordStream s) : s_(std::move(s)) {}
    std::optional<Letter> next() override { return s_.next(); }
    [[nodiscard]] std::unique_ptr<LetterSource> restart() const override {
      return std::make_unique<Wrapper>(s_.fresh());
    }
    [[nodiscard]] int alphabet_size() const override { return s_.alphabet_size(); }
    [[nodiscard]] bool finite() const override { return s_.finite(); }

   private:
    WordStream s_;
  };
  return WordStream(
      std::make_unique<UnifySource>(std::make_unique<Wrapper>(std::move(base)), a, b, mode));
}

BlockSpec prop12_spec() {
  // (01)^1 1 (10)^2 0 (01)^3 1 (10)^4 0 ...
  BlockSpec spec;
  spec.generators = {ExponentGenerator::recurrence({1, 3}, 2, -1),
                     ExponentGenerator::recurrence({2, 4}, 2, -1),
                     ExponentGenerator::constant(1)};
  spec.entries = {{FiniteWord::parse("01"), 0},
                  {FiniteWord::parse("1"), 2},
                  {FiniteWord::parse("10"), 1},
                  {FiniteWord::parse("0"), 2}};
  return spec;
}

BlockSpec prop31_spec() {
  // (01)^{2^0} 0 (01)^{2^1} 0 (01)^{2^2} 0 ...
  BlockSpec spec;
  spec.generators = {ExponentGenerator::geometric(2, 1),
                     ExponentGenerator::constant(1)};
  spec.entries = {{FiniteWord::parse("01"), 0}, {FiniteWord::parse("0"), 1}};
  return spec;
}

BlockSpec prop34_spec() {
  // 0^{n_1} 1^{n_2} 2^{n_3} 0^{n_4} ... with exponents 1,1,1,1,2,4 and then
  // n_i = n_{i-1} + n_{i-2}. After every block a^{n_i} with i >= 4 the
  // letter a makes up exactly half of the prefix.
  BlockSpec spec;
  spec.alphabet_size = 3;
  spec.generators = {ExponentGenerator::recurrence({1, 1, 1, 1, 2, 4}, 1, 1)};
  spec.entries = {{FiniteWord::parse("0", 3), 0},
                  {FiniteWord::parse("1", 3), 0},
                  {FiniteWord::parse("2", 3), 0}};
  return spec;
}

std::vector<std::string> named_words() {
  return {"paperfolding", "thue_morse", "prop12", "prop31", "prop34"};
}

WordStream named_word(std::string_view name) {
  if (name == "paperfolding") return toeplitz_stream(ToeplitzPattern::parse("0?1?"));
  if (name == "thue_morse") return fixed_point_stream(Morphism::parse("01/10"), 0);
  if (name == "prop12") return block_word_stream(prop12_spec());
  if (name == "prop31") return block_word_stream(prop31_spec());
  if (name == "prop34") return block_word_stream(prop34_spec());
  throw InputError("unknown named word '" + std::string(name) + "'");
}

}  // namespace wap
