#include "wap/deciders.hpp"

#include <algorithm>
#include <future>
#include <ostream>
#include <thread>

#include "wap/error.hpp"
#include "wap/graphic.hpp"

namespace wap {

namespace {

void require_binary_uniform(const Morphism& m) {
  if (m.alphabet_size() != 2) {
    throw PreconditionError("decider needs a binary morphism, got " + m.str());
  }
  if (!m.is_uniform()) {
    throw PreconditionError("decider needs a uniform morphism, got " + m.str());
  }
  if (m.uniform_length() < 2) {
    throw PreconditionError("decider needs image length k >= 2, got " + m.str());
  }
}

std::vector<std::int64_t> graphic_of(const FiniteWord& u, const MorphismMatrix& mm) {
  std::vector<std::int64_t> g{0};
  for (const Letter x : u.letters()) g.push_back(g.back() + (x == 0 ? -mm.b : mm.c));
  return g;
}

// Max of g over positions i (1-based) where u_i = 1, with the first such i.
std::optional<std::pair<std::int64_t, std::size_t>> max_at_ones(
    const FiniteWord& u, const std::vector<std::int64_t>& g) {
  std::optional<std::pair<std::int64_t, std::size_t>> best;
  for (std::size_t i = 1; i <= u.size(); ++i) {
    if (u[i - 1] != 1) continue;
    if (!best || g[i] > best->first) best = {g[i], i};
  }
  return best;
}

}  // namespace

MorphismMatrix MorphismMatrix::of(const Morphism& m) {
  if (m.alphabet_size() != 2) throw PreconditionError("matrix needs a binary morphism");
  const auto inc = m.incidence();
  return {inc[0][0], inc[0][1], inc[1][0], inc[1][1]};
}

Rational MorphismMatrix::frequency0() const {
  if (b + c == 0) return Rational(1);
  return Rational(c, b + c);
}

std::string to_string(WapCondition c) {
  switch (c) {
    case WapCondition::zero_crossing:
      return "zero-crossing";
    case WapCondition::endpoint:
      return "endpoint";
    case WapCondition::formula:
      return "formula";
  }
  return "unknown";
}

std::string to_string(BoundedWapReason r) {
  switch (r) {
    case BoundedWapReason::abelian_equivalent_images:
      return "abelian-equivalent-images";
    case BoundedWapReason::alternating_form:
      return "alternating-form";
    case BoundedWapReason::none:
      return "no";
  }
  return "unknown";
}

WapCertificate decide_wap(const Morphism& m, Letter start) {
  require_binary_uniform(m);
  if (start > 1) throw DomainError("start letter must be 0 or 1");
  if (!m.prolongeable_on(start)) {
    throw PreconditionError("morphism " + m.str() + " is not prolongeable on " +
                            std::to_string(start));
  }
  WapCertificate cert;
  cert.start = start;
  cert.conjugated = start == 1;
  cert.analysed = start == 0 ? m : m.swapped();
  const FiniteWord& phi0 = cert.analysed.image(0);
  const FiniteWord& phi1 = cert.analysed.image(1);
  const MorphismMatrix mm = MorphismMatrix::of(cert.analysed);
  cert.matrix = mm;
  const auto k = static_cast<std::size_t>(mm.k());

  cert.graphic = graphic_of(phi0, mm);
  const auto& g = cert.graphic;
  cert.delta = g[k];

  if (const auto best = max_at_ones(phi0, g)) cert.A = best->first;
  const auto g1 = graphic_of(phi1, mm);
  if (const auto best = max_at_ones(phi1, g1)) {
    cert.t = best->first;
    cert.j = best->second;
  }

  for (std::size_t x = 1; x <= k; ++x) {
    if (g[x] == 0) {
      cert.zero_at = x;
      cert.zero_is_exact = true;
      break;
    }
    if (x < k && ((g[x] < 0 && g[x + 1] > 0) || (g[x] > 0 && g[x + 1] < 0))) {
      cert.zero_at = x;
      break;
    }
  }
  if (cert.zero_at) {
    cert.condition = WapCondition::zero_crossing;
    cert.wap = true;
    return cert;
  }
  if (cert.delta >= -mm.b) {
    cert.condition = WapCondition::endpoint;
    cert.wap = true;
    return cert;
  }

  // Here g(k) = -b(a - c) < -b, so b >= 1 and a - c >= 2; both images then
  // contain the letter 1 and A, t are defined.
  cert.condition = WapCondition::formula;
  if (mm.a - mm.c < 2 || !cert.A || !cert.t) {
    throw std::logic_error("formula condition reached with a - c < 2");
  }
  cert.lhs = (mm.a - mm.c) * (*cert.A - mm.c) + *cert.t;
  cert.wap = *cert.lhs >= *cert.A;
  return cert;
}

BoundedWapVerdict decide_bounded_wap(const Morphism& m) {
  require_binary_uniform(m);
  if (!m.prolongeable_on(0) && !m.prolongeable_on(1)) {
    throw PreconditionError("morphism " + m.str() + " has no fixed point");
  }
  const MorphismMatrix mm = MorphismMatrix::of(m);
  BoundedWapVerdict v;
  v.primitive = mm.b >= 1 && mm.c >= 1;
  if (abelian_equivalent(m.image(0), m.image(1))) {
    v.bounded_wap = true;
    v.reason = BoundedWapReason::abelian_equivalent_images;
    return v;
  }
  const std::size_t k = m.uniform_length();
  if (k % 2 == 1) {
    std::string alt0;
    std::string alt1;
    for (std::size_t i = 0; i < (k - 1) / 2; ++i) {
      alt0 += "01";
      alt1 += "10";
    }
    alt0 += "0";
    alt1 += "1";
    if (m.image(0).str() == alt0 && m.image(1).str() == alt1) {
      v.bounded_wap = true;
      v.reason = BoundedWapReason::alternating_form;
    }
  }
  return v;
}

std::size_t horizontal_hits(const Morphism& m, Letter start, std::size_t n) {
  require_binary_uniform(m);
  const Morphism analysed = start == 0 ? m : m.swapped();
  const MorphismMatrix mm = MorphismMatrix::of(analysed);
  const auto w = fixed_point_stream(analysed, 0);
  return max_level_hits(DiscrepancyProfile::compute(w, mm.frequency0(), n));
}

DecayCheck notwap_decay_check(const WapCertificate& cert, std::size_t n) {
  if (cert.wap || cert.condition != WapCondition::formula || !cert.A) {
    throw PreconditionError("decay check applies to NotWAP certificates only");
  }
  const MorphismMatrix& mm = cert.matrix;
  const auto k = static_cast<std::size_t>(mm.k());
  const std::int64_t a_max = *cert.A;
  DecayCheck check;

  WordStream w = fixed_point_stream(cert.analysed, 0);
  std::int64_t g = 0;
  std::size_t high = k;  // current interval is (high / k, high]
  std::size_t exponent = 0;
  std::int64_t running = 0;
  bool seen = false;
  for (std::size_t pos = 1; pos <= n; ++pos) {
    const Letter x = *w.next();
    g += x == 0 ? -mm.b : mm.c;
    if (exponent > 0 || x == 1) {
      running = seen ? std::max(running, g) : g;
      seen = true;
    }
    if (pos == high || pos == n) {
      const auto bound = a_max - static_cast<std::int64_t>(exponent);
      ++check.levels_checked;
      if (seen && running > bound && check.holds) {
        check.holds = false;
        check.violation_exponent = exponent;
        check.violation_value = running;
      }
      seen = false;
      ++exponent;
      if (pos == n) break;
      high = high > n / k ? n : high * k;
    }
  }
  return check;
}

std::vector<CensusRow> enumerate_census(const CensusOptions& options) {
  if (options.k < 2 || options.k > 6) {
    throw InputError("census length k must lie in [2, 6], got " +
                     std::to_string(options.k));
  }
  const std::size_t k = options.k;
  auto word_of = [k](std::size_t bits) {
    std::vector<Letter> letters(k);
    for (std::size_t i = 0; i < k; ++i) {
      letters[i] = static_cast<Letter>((bits >> (k - 1 - i)) & 1u);
    }
    return FiniteWord(std::move(letters), 2);
  };

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t b0 = 0; b0 < (std::size_t{1} << (k - 1)); ++b0) {
    for (std::size_t b1 = 0; b1 < (std::size_t{1} << k); ++b1) pairs.emplace_back(b0, b1);
  }

  auto evaluate = [&](std::size_t index) {
    const auto [b0, b1] = pairs[index];
    CensusRow row;
    row.phi0 = word_of(b0);
    row.phi1 = word_of(b1);
    const Morphism m({row.phi0, row.phi1});
    row.matrix = MorphismMatrix::of(m);
    row.from0 = decide_wap(m, 0);
    if (m.prolongeable_on(1)) row.from1 = decide_wap(m, 1);
    row.bounded = decide_bounded_wap(m);
    if (options.prefix > 0) {
      const std::size_t decay_prefix =
          options.decay_prefix != 0 ? options.decay_prefix : options.prefix;
      auto agrees = [&](const WapCertificate& cert, std::size_t hits) {
        if (cert.wap) return hits >= options.min_hits;
        return notwap_decay_check(cert, decay_prefix).holds;
      };
      const std::size_t hits0 = horizontal_hits(m, 0, options.prefix);
      row.empirical_hits = hits0;
      bool ok = agrees(row.from0, hits0);
      if (row.from1) ok = ok && agrees(*row.from1, horizontal_hits(m, 1, options.prefix));
      row.agree = ok;
    }
    return row;
  };

  std::vector<CensusRow> rows(pairs.size());
  unsigned threads = options.threads != 0 ? options.threads
                                          : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(pairs.size()));
  std::vector<std::future<void>> jobs;
  for (unsigned t = 0; t < threads; ++t) {
    jobs.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t i = t; i < pairs.size(); i += threads) rows[i] = evaluate(i);
    }));
  }
  for (auto& job : jobs) job.get();
  return rows;
}

void write_census_csv(std::ostream& os, const std::vector<CensusRow>& rows) {
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  os << "phi0,phi1,a,b,c,d,wap_from0,condition0,wap_from1,condition1,"
        "bounded_wap,reason,empirical_hits,agree\n";
  for (const auto& r : rows) {
    os << r.phi0.str() << ',' << r.phi1.str() << ',' << r.matrix.a << ','
       << r.matrix.b << ',' << r.matrix.c << ',' << r.matrix.d << ','
       << yes_no(r.from0.wap) << ',' << to_string(r.from0.condition) << ',';
    if (r.from1) {
      os << yes_no(r.from1->wap) << ',' << to_string(r.from1->condition) << ',';
    } else {
      os << "n/a,n/a,";
    }
    os << yes_no(r.bounded.bounded_wap) << ',' << to_string(r.bounded.reason) << ',';
    if (r.empirical_hits) {
      os << *r.empirical_hits << ',' << yes_no(r.agree.value_or(false));
    } else {
      os << "n/a,n/a";
    }
    os << '\n';
  }
}

}  // namespace wap
