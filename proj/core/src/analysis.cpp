#include "wap/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "wap/error.hpp"

namespace wap {

namespace {

std::vector<Rational> ratios_of(const ParikhVector& counts, std::size_t length) {
  std::vector<Rational> out;
  for (int a = 0; a < counts.alphabet_size; ++a) {
    out.emplace_back(counts.counts[a], static_cast<std::int64_t>(length));
  }
  return out;
}

// counts[a][i] = #a(pref_i), i = 0..N.
std::vector<std::vector<std::int32_t>> prefix_counts(const FiniteWord& u) {
  const int sigma = u.alphabet_size();
  std::vector<std::vector<std::int32_t>> counts(
      static_cast<std::size_t>(sigma), std::vector<std::int32_t>(u.size() + 1, 0));
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (int a = 0; a < sigma; ++a) counts[a][i + 1] = counts[a][i];
    ++counts[u[i]][i + 1];
  }
  return counts;
}

struct LevelStats {
  std::size_t hits = 0;
  std::size_t first = 0;
  std::size_t last = 0;
  std::size_t max_gap = 0;

  void hit(std::size_t n) {
    if (hits == 0) {
      first = n;
    } else {
      max_gap = std::max(max_gap, n - last);
    }
    last = n;
    ++hits;
  }
};

}  // namespace

FrequencyReport prefix_frequency(const WordStream& w, std::size_t n,
                                 std::span<const std::size_t> checkpoints) {
  if (n < 1) throw InputError("prefix_frequency needs N >= 1");
  std::vector<std::size_t> marks(checkpoints.begin(), checkpoints.end());
  std::sort(marks.begin(), marks.end());
  FrequencyReport report;
  report.counts.alphabet_size = w.alphabet_size();
  WordStream s = w.fresh();
  auto mark = marks.begin();
  while (mark != marks.end() && *mark == 0) ++mark;
  std::size_t length = 0;
  for (; length < n; ++length) {
    const auto a = s.next();
    if (!a) break;
    ++report.counts.counts[*a];
    while (mark != marks.end() && *mark == length + 1) {
      report.checkpoints.push_back(
          {length + 1, report.counts, ratios_of(report.counts, length + 1)});
      ++mark;
    }
  }
  if (length == 0) throw BudgetError("empty word: no frequencies");
  report.length = length;
  report.ratios = ratios_of(report.counts, length);
  return report;
}

OscillationReport frequency_oscillation(const WordStream& w, std::size_t n) {
  if (n < 2) throw InputError("frequency_oscillation needs N >= 2");
  const FiniteWord u = prefix(w, n);
  const int sigma = u.alphabet_size();
  OscillationReport report;
  report.length = u.size();
  report.window_begin = std::max<std::size_t>(1, u.size() / 2);
  struct Extreme {
    std::int64_t count;
    std::int64_t length;
  };
  std::vector<Extreme> low(static_cast<std::size_t>(sigma), {1, 0});
  std::vector<Extreme> high(static_cast<std::size_t>(sigma), {-1, 0});
  std::array<std::int64_t, kMaxAlphabet> counts{};
  for (std::size_t i = 0; i < u.size(); ++i) {
    ++counts[u[i]];
    const std::size_t len = i + 1;
    if (len < report.window_begin) continue;
    const auto l = static_cast<std::int64_t>(len);
    for (int a = 0; a < sigma; ++a) {
      // Compare counts[a]/len with the stored fractions by cross-multiplying.
      if (low[a].length == 0 || counts[a] * low[a].length < low[a].count * l) {
        low[a] = {counts[a], l};
      }
      if (high[a].length == 0 || counts[a] * high[a].length > high[a].count * l) {
        high[a] = {counts[a], l};
      }
    }
  }
  if (report.length == 0) throw BudgetError("empty word: no frequencies");
  for (int a = 0; a < sigma; ++a) {
    report.low.emplace_back(low[a].count, low[a].length);
    report.high.emplace_back(high[a].count, high[a].length);
  }
  return report;
}

BalanceReport balance_profile(const FiniteWord& u, std::size_t max_window) {
  const std::size_t n = u.size();
  if (max_window > n) throw InputError("balance window L must not exceed N");
  const int sigma = u.alphabet_size();
  const auto counts = prefix_counts(u);
  BalanceReport report;
  report.length = n;
  report.max_window = max_window;
  report.rows.reserve(max_window);
  for (std::size_t len = 1; len <= max_window; ++len) {
    BalanceRow row;
    row.window = len;
    for (int a = 0; a < sigma; ++a) {
      const auto& c = counts[a];
      std::int32_t lo = c[len] - c[0];
      std::int32_t hi = lo;
      for (std::size_t i = 1; i + len <= n; ++i) {
        const std::int32_t v = c[i + len] - c[i];
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      row.min[a] = lo;
      row.max[a] = hi;
      if (hi - lo > report.constant) {
        report.constant = hi - lo;
        report.constant_window = len;
      }
    }
    report.rows.push_back(row);
  }
  return report;
}

BalanceReport balance_profile(const WordStream& w, std::size_t n,
                              std::size_t max_window) {
  if (max_window > n) throw InputError("balance window L must not exceed N");
  const FiniteWord u = prefix(w, n);
  return balance_profile(u, std::min(max_window, u.size()));
}

std::string to_string(WitnessTag tag) {
  switch (tag) {
    case WitnessTag::witness:
      return "witness";
    case WitnessTag::bounded_witness:
      return "bounded-witness";
    case WitnessTag::none_in_budget:
      return "none-in-budget";
  }
  return "unknown";
}

WitnessTag WitnessSearchResult::tag() const {
  if (witnesses.empty()) return WitnessTag::none_in_budget;
  const bool bounded =
      std::any_of(witnesses.begin(), witnesses.end(), [](const WitnessReport& r) {
        return r.tag == WitnessTag::bounded_witness;
      });
  return bounded ? WitnessTag::bounded_witness : WitnessTag::witness;
}

std::vector<std::vector<std::int64_t>> frequency_vectors(int alphabet_size,
                                                         std::int64_t max_denominator) {
  if (max_denominator < 1) throw InputError("max denominator must be >= 1");
  if (alphabet_size < 2 || alphabet_size > kMaxAlphabet) {
    throw InputError("frequency vectors need an alphabet of size 2 or 3");
  }
  std::vector<std::vector<std::int64_t>> out;
  for (std::int64_t q = 1; q <= max_denominator; ++q) {
    if (alphabet_size == 2) {
      for (std::int64_t p = 0; p <= q; ++p) {
        if (std::gcd(p, q) == 1) out.push_back({p, q - p});
      }
    } else {
      for (std::int64_t n0 = 0; n0 <= q; ++n0) {
        for (std::int64_t n1 = 0; n0 + n1 <= q; ++n1) {
          const std::int64_t n2 = q - n0 - n1;
          if (std::gcd(std::gcd(n0, n1), n2) == 1) out.push_back({n0, n1, n2});
        }
      }
    }
  }
  return out;
}

WitnessSearchResult wap_witness_search(const FiniteWord& u,
                                       const WitnessOptions& options) {
  if (options.min_hits < 2) throw InputError("min hits H must be >= 2");
  const int sigma = std::max(2, u.alphabet_size());
  WitnessSearchResult result;
  result.budget = options;
  result.scanned = u.size();
  result.alphabet_size = sigma;
  const std::size_t n = u.size();

  std::vector<std::vector<std::int64_t>> vectors;
  if (options.slope) {
    if (sigma != 2) throw InputError("--slope applies to binary words only");
    const Rational& s = *options.slope;
    if (s < Rational(0) || s > Rational(1)) throw InputError("slope must lie in [0, 1]");
    vectors.push_back({s.num(), s.den() - s.num()});
  } else {
    vectors = frequency_vectors(sigma, options.max_denominator);
  }

  auto accept = [&](const LevelStats& st) {
    if (st.hits < options.min_hits) return false;
    if (options.recency && (4 * st.first > n || 4 * st.last <= 3 * n)) return false;
    return true;
  };

  for (const auto& vec : vectors) {
    const std::int64_t q = std::accumulate(vec.begin(), vec.end(), std::int64_t{0});
    const std::size_t gap_limit =
        options.max_gap.value_or(static_cast<std::size_t>(10 * q));
    auto make_report = [&](const LevelStats& st, std::vector<std::int64_t> levels) {
      WitnessReport r;
      for (const auto c : vec) r.frequencies.emplace_back(c, q);
      r.levels = std::move(levels);
      r.denominator = q;
      r.hits = st.hits;
      r.first_hit = st.first;
      r.last_hit = st.last;
      r.max_gap = st.max_gap;
      r.tag = st.max_gap <= gap_limit ? WitnessTag::bounded_witness
                                      : WitnessTag::witness;
      return r;
    };

    if (sigma == 2) {
      std::vector<std::int64_t> d(n + 1, 0);
      std::int64_t lo = 0;
      std::int64_t hi = 0;
      for (std::size_t i = 0; i < n; ++i) {
        d[i + 1] = d[i] + vec[0] - (u[i] == 0 ? q : 0);
        lo = std::min(lo, d[i + 1]);
        hi = std::max(hi, d[i + 1]);
      }
      std::vector<LevelStats> stats(static_cast<std::size_t>(hi - lo) + 1);
      for (std::size_t i = 1; i <= n; ++i) {
        stats[static_cast<std::size_t>(d[i] - lo)].hit(i);
      }
      for (std::size_t k = 0; k < stats.size(); ++k) {
        if (accept(stats[k])) {
          result.witnesses.push_back(
              make_report(stats[k], {lo + static_cast<std::int64_t>(k)}));
        }
      }
    } else {
      // Joint levels of letters 0 and 1; letter 2 is determined by them.
      std::unordered_map<std::uint64_t, LevelStats> stats;
      std::int64_t d0 = 0;
      std::int64_t d1 = 0;
      for (std::size_t i = 0; i < n; ++i) {
        d0 += vec[0] - (u[i] == 0 ? q : 0);
        d1 += vec[1] - (u[i] == 1 ? q : 0);
        const std::uint64_t key =
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(d0)) << 32) |
            static_cast<std::uint32_t>(d1);
        stats[key].hit(i + 1);
      }
      for (const auto& [key, st] : stats) {
        if (!accept(st)) continue;
        const auto l0 = static_cast<std::int32_t>(key >> 32);
        const auto l1 = static_cast<std::int32_t>(key & 0xffffffffu);
        result.witnesses.push_back(make_report(st, {l0, l1}));
      }
    }
  }

  auto abs_levels = [](const WitnessReport& r) {
    std::vector<std::int64_t> out;
    for (const auto l : r.levels) out.push_back(l < 0 ? -l : l);
    return out;
  };
  auto numerators = [](const WitnessReport& r) {
    std::vector<std::int64_t> out;
    for (const auto& f : r.frequencies) out.push_back(f.num() * (r.denominator / f.den()));
    return out;
  };
  std::sort(result.witnesses.begin(), result.witnesses.end(),
            [&](const WitnessReport& a, const WitnessReport& b) {
              if (a.hits != b.hits) return a.hits > b.hits;
              if (a.denominator != b.denominator) return a.denominator < b.denominator;
              const auto na = numerators(a);
              const auto nb = numerators(b);
              if (na != nb) return na < nb;
              const auto la = abs_levels(a);
              const auto lb = abs_levels(b);
              if (la != lb) return la < lb;
              return a.levels < b.levels;
            });
  return result;
}

WitnessSearchResult wap_witness_search(const WordStream& w,
                                       const WitnessOptions& options) {
  return wap_witness_search(prefix(w, options.prefix), options);
}

std::optional<AbelianPeriodReport> abelian_period_search(const FiniteWord& u,
                                                         std::size_t max_period,
                                                         std::size_t max_offset) {
  const std::size_t n = u.size();
  if (max_period < 1) throw InputError("max period P must be >= 1");
  if (max_offset + 2 * max_period > n) {
    throw InputError("abelian period search needs S + 2P <= N");
  }
  const int sigma = u.alphabet_size();
  const auto counts = prefix_counts(u);
  for (std::size_t p = 1; p <= max_period; ++p) {
    for (std::size_t s = 0; s <= max_offset; ++s) {
      bool ok = true;
      std::size_t blocks = 0;
      for (std::size_t start = s; start + p <= n && ok; start += p, ++blocks) {
        for (int a = 0; a < sigma && ok; ++a) {
          const auto& c = counts[a];
          ok = c[start + p] - c[start] == c[s + p] - c[s];
        }
      }
      if (!ok) continue;
      AbelianPeriodReport report;
      report.period = p;
      report.offset = s;
      report.blocks = blocks;
      report.parikh = parikh(u.factor(s + 1, s + p));
      return report;
    }
  }
  return std::nullopt;
}

std::optional<AbelianPeriodReport> abelian_period_search(const WordStream& w,
                                                         std::size_t n,
                                                         std::size_t max_period,
                                                         std::size_t max_offset) {
  return abelian_period_search(prefix(w, n), max_period, max_offset);
}

}  // namespace wap
