#include "wap/subshift.hpp"

#include <algorithm>
#include <unordered_map>

#include "wap/error.hpp"
#include "wap/graphic.hpp"

namespace wap {

OccurrenceIndex occurrences(const FiniteWord& w, const FiniteWord& u) {
  if (u.empty()) throw InputError("occurrences of the empty word");
  OccurrenceIndex index;
  index.factor = u;
  index.scanned = w.size();
  const std::size_t m = u.size();
  std::vector<std::size_t> border(m, 0);
  for (std::size_t i = 1, k = 0; i < m; ++i) {
    while (k > 0 && u[i] != u[k]) k = border[k - 1];
    if (u[i] == u[k]) ++k;
    border[i] = k;
  }
  for (std::size_t i = 0, k = 0; i < w.size(); ++i) {
    while (k > 0 && w[i] != u[k]) k = border[k - 1];
    if (w[i] == u[k]) ++k;
    if (k == m) {
      index.positions.push_back(i + 2 - m);
      k = border[k - 1];
    }
  }
  return index;
}

OccurrenceIndex occurrences(const WordStream& w, const FiniteWord& u, std::size_t n) {
  if (n < u.size()) throw InputError("prefix shorter than the factor");
  return occurrences(prefix(w, n), u);
}

FiniteWord ReturnFactorization::reconstruct() const {
  FiniteWord out = leading;
  for (const auto& v : returns) out.append(v);
  out.append(tail);
  return out;
}

ReturnFactorization return_factorization(const FiniteWord& w, const FiniteWord& u) {
  const auto occ = occurrences(w, u);
  if (occ.positions.size() < 2) {
    throw BudgetError("factor " + u.str() + " occurs " +
                      std::to_string(occ.positions.size()) +
                      " time(s) in the scanned prefix; need 2 for a return");
  }
  ReturnFactorization f;
  f.factor = u;
  const auto& pos = occ.positions;
  f.leading = w.factor(1, pos.front() - 1);
  for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
    f.returns.push_back(w.factor(pos[i], pos[i + 1] - 1));
    f.starts.push_back(pos[i]);
  }
  f.tail = w.factor(pos.back(), w.size());
  return f;
}

ReturnFactorization return_factorization(const WordStream& w, const FiniteWord& u,
                                         std::size_t n) {
  return return_factorization(prefix(w, n), u);
}

std::string to_string(Relation r) {
  return r == Relation::at_least ? ">=" : "<=";
}

std::string to_string(OrbitStatus s) {
  return s == OrbitStatus::complete ? "complete" : "budget-exhausted";
}

namespace {

Relation flip(Relation r) {
  return r == Relation::at_least ? Relation::at_most : Relation::at_least;
}

}  // namespace

namespace {

struct Seed {
  std::size_t position = 0;
  std::size_t length = 0;
  Relation relation = Relation::at_least;
};

class OrbitBuilder {
 public:
  OrbitBuilder(const FiniteWord& u, const Rational& target)
      : u_(u), p_(target.num()), q_(target.den()), zeros_(u.size() + 1, 0) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      zeros_[i + 1] = zeros_[i] + (u[i] == 0 ? 1 : 0);
    }
  }

  // rho_0(x) >= p/q  <=>  q * #0(x) >= p * |x|.
  [[nodiscard]] bool satisfies(std::size_t start, std::size_t len, Relation r) const {
    const std::int64_t lhs = q_ * (zeros_[start + len - 1] - zeros_[start - 1]);
    const std::int64_t rhs = p_ * static_cast<std::int64_t>(len);
    return r == Relation::at_least ? lhs >= rhs : lhs <= rhs;
  }

  [[nodiscard]] std::vector<Seed> seeds() const {
    std::vector<Seed> out;
    for (std::size_t i = 1; i <= u_.size(); ++i) {
      if (p_ * static_cast<std::int64_t>(i) == q_ * zeros_[i]) {
        if (occurrences(u_, u_.factor(1, i)).positions.size() >= 2) {
          out.push_back({1, i, Relation::at_least});
        }
        break;
      }
    }
    for (const Letter seed : {Letter{0}, Letter{1}}) {
      const auto letters = u_.letters();
      const auto it = std::find(letters.begin(), letters.end(), seed);
      if (it == letters.end()) continue;
      const auto first = static_cast<std::size_t>(it - letters.begin()) + 1;
      out.push_back({first, 1, seed == 0 ? Relation::at_least : Relation::at_most});
    }
    return out;
  }

  OrbitBuilderState run(const Seed& seed, const OrbitOptions& options,
                        std::size_t& work) const {
    OrbitBuilderState state;
    state.levels.push_back(level(seed.position, seed.length, seed.relation, 0));
    state.next_relation = seed.relation;
    state.depth_reached = 1;
    while (state.depth_reached < options.depth) {
      const OrbitLevel& current = state.levels.back();
      const auto occ = occurrences(u_, current.word).positions;
      const std::size_t base_len = current.word.size();
      std::optional<OrbitLevel> next;
      bool out_of_work = false;
      // Candidates start at the second or a later occurrence and span one
      // return, then two, and so on.
      for (std::size_t span = 1; span < occ.size() && !next && !out_of_work; ++span) {
        for (std::size_t i = 1; i + span < occ.size(); ++i) {
          if (++work > options.max_work) {
            out_of_work = true;
            break;
          }
          const std::size_t start = occ[i];
          const std::size_t len = occ[i + span] - start;
          if (len <= base_len) continue;
          if (satisfies(start, len, state.next_relation)) {
            next = level(start, len, state.next_relation, span);
            break;
          }
        }
      }
      if (!next) {
        state.status = OrbitStatus::budget_exhausted;
        break;
      }
      state.levels.push_back(std::move(*next));
      ++state.depth_reached;
      state.next_relation = flip(state.next_relation);
    }
    return state;
  }

 private:
  [[nodiscard]] OrbitLevel level(std::size_t start, std::size_t len, Relation r,
                                 std::size_t spanned) const {
    OrbitLevel out;
    out.word = u_.factor(start, start + len - 1);
    out.position = start;
    out.parikh = parikh(out.word);
    out.frequency = Rational(out.parikh[0], static_cast<std::int64_t>(len));
    out.relation = r;
    out.returns_spanned = spanned;
    return out;
  }

  const FiniteWord& u_;
  std::int64_t p_;
  std::int64_t q_;
  std::vector<std::int64_t> zeros_;
};

// Most frequently hit level of D over positions 1..N; ties go to the
// smallest |level|, then the smaller level.
std::pair<std::int64_t, std::vector<std::size_t>> best_level(const FiniteWord& u,
                                                             const Rational& target) {
  const auto profile = DiscrepancyProfile::compute(u, target);
  std::unordered_map<std::int64_t, std::size_t> counts;
  for (std::size_t i = 1; i <= profile.length(); ++i) ++counts[profile[i]];
  std::int64_t best = 0;
  std::size_t best_count = 0;
  for (const auto& [level, count] : counts) {
    const bool better =
        count > best_count ||
        (count == best_count && (std::llabs(level) < std::llabs(best) ||
                                 (std::llabs(level) == std::llabs(best) && level < best)));
    if (better) {
      best = level;
      best_count = count;
    }
  }
  return {best, line_hits(profile, best).positions};
}

}  // namespace

OrbitResult build_wap_orbit_point(const WordStream& w, const Rational& target,
                                  const OrbitOptions& options) {
  if (target <= Rational(0) || target >= Rational(1)) {
    throw InputError("orbit target must lie strictly between 0 and 1");
  }
  if (w.alphabet_size() != 2) throw DomainError("orbit construction needs a binary word");
  if (options.depth < 1) throw InputError("orbit depth must be >= 1");
  const FiniteWord u = prefix(w, options.budget);
  const OrbitBuilder builder(u, target);

  OrbitResult result;
  result.state.target = target;
  result.state.budget = options.budget;
  result.state.status = OrbitStatus::budget_exhausted;
  std::size_t work = 0;
  bool have = false;
  for (const Seed& seed : builder.seeds()) {
    OrbitBuilderState state = builder.run(seed, options, work);
    const FiniteWord& word = state.levels.back().word;
    auto [level, hits] = best_level(word, target);
    const bool better = !have || state.depth_reached > result.state.depth_reached ||
                        (state.depth_reached == result.state.depth_reached &&
                         hits.size() > result.hits.size());
    if (better) {
      result.state = std::move(state);
      result.constructed = word;
      result.level = level;
      result.hits = std::move(hits);
      have = true;
    }
    if (work > options.max_work) break;
  }
  result.state.target = target;
  result.state.budget = options.budget;
  result.state.work = work;
  return result;
}

FrequencyBounds uniform_frequency_bounds(const FiniteWord& w, std::size_t max_window,
                                         Letter letter) {
  const std::size_t n = w.size();
  if (max_window < 1 || max_window > n) {
    throw InputError("frequency bounds need 1 <= L <= N");
  }
  if (letter >= w.alphabet_size()) throw DomainError("letter outside alphabet");
  std::vector<std::int32_t> c(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) c[i + 1] = c[i] + (w[i] == letter ? 1 : 0);
  FrequencyBounds bounds;
  bounds.letter = letter;
  bounds.length = n;
  bounds.rows.reserve(max_window);
  for (std::size_t len = 1; len <= max_window; ++len) {
    std::int32_t lo = c[len];
    std::int32_t hi = lo;
    for (std::size_t i = 1; i + len <= n; ++i) {
      const std::int32_t v = c[i + len] - c[i];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    const auto l = static_cast<std::int64_t>(len);
    bounds.rows.push_back({len, Rational(lo, l), Rational(hi, l)});
  }
  bounds.lower_estimate = bounds.rows.back().min;
  bounds.upper_estimate = bounds.rows.back().max;
  return bounds;
}

FrequencyBounds uniform_frequency_bounds(const WordStream& w, std::size_t n,
                                         std::size_t max_window, Letter letter) {
  if (max_window > n) throw InputError("frequency bounds need L <= N");
  return uniform_frequency_bounds(prefix(w, n), max_window, letter);
}

}  // namespace wap
