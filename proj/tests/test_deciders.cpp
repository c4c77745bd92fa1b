#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "wap/deciders.hpp"
#include "wap/error.hpp"

using namespace wap;

namespace {

struct Quantities {
  std::int64_t a, b, c, delta;
  std::optional<std::int64_t> A, t;
  bool zero = false;
};

// Recomputes the path quantities from the image strings alone.
Quantities quantities(const std::string& p0, const std::string& p1) {
  Quantities q{};
  q.a = oracle::count(p0, '0');
  q.b = oracle::count(p0, '1');
  q.c = oracle::count(p1, '0');
  auto path = [&](const std::string& u, std::optional<std::int64_t>* best, bool* zero) {
    std::int64_t g = 0;
    for (const char x : u) {
      const std::int64_t next = g + (x == '0' ? -q.b : q.c);
      if (zero && (next == 0 || (g < 0 && next > 0) || (g > 0 && next < 0))) *zero = true;
      g = next;
      if (x == '1' && (!*best || g > **best)) *best = g;
    }
    return g;
  };
  q.delta = path(p0, &q.A, &q.zero);
  path(p1, &q.t, nullptr);
  return q;
}

std::vector<Morphism> all_morphisms(std::size_t k) {
  std::vector<Morphism> out;
  for (std::size_t b0 = 0; b0 < (std::size_t{1} << (k - 1)); ++b0) {
    for (std::size_t b1 = 0; b1 < (std::size_t{1} << k); ++b1) {
      out.push_back(Morphism::parse(oracle::binary(b0, k) + "/" + oracle::binary(b1, k)));
    }
  }
  return out;
}

void check_same_analysis(const WapCertificate& x, const WapCertificate& y) {
  CHECK(x.wap == y.wap);
  CHECK(x.condition == y.condition);
  CHECK(x.analysed == y.analysed);
  CHECK(x.matrix == y.matrix);
  CHECK(x.graphic == y.graphic);
  CHECK(x.delta == y.delta);
  CHECK(x.A == y.A);
  CHECK(x.t == y.t);
  CHECK(x.j == y.j);
  CHECK(x.lhs == y.lhs);
  CHECK(x.zero_at == y.zero_at);
}

}  // namespace

TEST_CASE("matrix of a morphism") {
  const auto mm = MorphismMatrix::of(Morphism::parse("0001/1011"));
  CHECK(mm == MorphismMatrix{3, 1, 1, 3});
  CHECK(mm.k() == 4);
  CHECK(mm.frequency0() == Rational(1, 2));
  CHECK(MorphismMatrix::of(Morphism::parse("001/111")).frequency0() == Rational(0));
  CHECK(MorphismMatrix::of(Morphism::parse("000/000")).frequency0() == Rational(1));
}

TEST_CASE("decide_wap: the 0001/1011 fixed points") {
  const auto m = Morphism::parse("0001/1011");
  const auto c0 = decide_wap(m, 0);
  CHECK_FALSE(c0.wap);
  CHECK(c0.condition == WapCondition::formula);
  CHECK(c0.delta == -2);
  CHECK(c0.A == -2);
  CHECK(c0.t == 2);
  CHECK(c0.j == 4);
  CHECK(c0.lhs == -4);
  CHECK(c0.graphic == std::vector<std::int64_t>{0, -1, -2, -3, -2});
  CHECK_FALSE(c0.zero_at);

  const auto c1 = decide_wap(m, 1);
  CHECK(c1.wap);
  CHECK(c1.conjugated);
  CHECK(c1.condition == WapCondition::zero_crossing);
  CHECK(c1.analysed == Morphism::parse("0100/1110"));
  CHECK(c1.zero_at == 2);
  CHECK(c1.zero_is_exact);
}

TEST_CASE("decide_wap: small examples") {
  const auto alt = decide_wap(Morphism::parse("010/101"), 0);
  CHECK(alt.wap);
  CHECK(alt.condition == WapCondition::zero_crossing);
  CHECK(alt.graphic == std::vector<std::int64_t>{0, -1, 0, -1});
  CHECK(alt.zero_at == 2);

  // b = 0: the path stays on the axis.
  const auto flat = decide_wap(Morphism::parse("000/101"), 0);
  CHECK(flat.wap);
  CHECK(flat.condition == WapCondition::zero_crossing);
  CHECK(flat.zero_at == 1);
  // c = 0, a = 1: the word 0 1^omega.
  const auto end = decide_wap(Morphism::parse("01/11"), 0);
  CHECK(end.wap);
  CHECK(end.condition == WapCondition::endpoint);
  // c = 0, a >= 2: the fixed point 001001111... drifts down forever.
  const auto drift = decide_wap(Morphism::parse("001/111"), 0);
  CHECK_FALSE(drift.wap);
  CHECK(drift.condition == WapCondition::formula);
  CHECK(drift.A == -2);
  CHECK(drift.t == 0);
  CHECK(drift.lhs == -4);
  // A sign change between integer abscissae: g = -1, 1.
  const auto cross = decide_wap(Morphism::parse("01/00"), 0);
  CHECK(cross.condition == WapCondition::zero_crossing);
  CHECK_FALSE(cross.zero_is_exact);
  CHECK(cross.zero_at == 1);
}

TEST_CASE("decide_wap preconditions") {
  CHECK_THROWS_AS(decide_wap(Morphism::parse("0/1"), 0), PreconditionError);
  CHECK_THROWS_AS(decide_wap(Morphism::parse("01/1"), 0), PreconditionError);
  CHECK_THROWS_AS(decide_wap(Morphism::parse("01/12/20"), 0), PreconditionError);
  CHECK_THROWS_AS(decide_wap(Morphism::parse("10/01"), 0), PreconditionError);
  CHECK_THROWS_AS(decide_wap(Morphism::parse("01/01"), 1), PreconditionError);
  CHECK_THROWS_AS(decide_bounded_wap(Morphism::parse("10/01")), PreconditionError);
}

TEST_CASE("certificates match quantities recomputed from the images") {
  for (std::size_t k = 2; k <= 5; ++k) {
    for (const auto& m : all_morphisms(k)) {
      const auto cert = decide_wap(m, 0);
      const auto q = quantities(m.image(0).str(), m.image(1).str());
      CAPTURE(m.str());
      CHECK(cert.delta == q.delta);
      CHECK(cert.delta == -q.b * (q.a - q.c));
      CHECK(cert.delta == cert.graphic.back());
      if (q.zero) {
        CHECK(cert.condition == WapCondition::zero_crossing);
      } else if (q.delta >= -q.b) {
        CHECK(cert.condition == WapCondition::endpoint);
      } else {
        REQUIRE(cert.condition == WapCondition::formula);
        CHECK(q.a - q.c >= 2);
        CHECK(q.b >= 1);
        REQUIRE(q.A);
        REQUIRE(q.t);
        CHECK(cert.A == q.A);
        CHECK(cert.t == q.t);
        // Delta (A - c) / (-b) is an exact integer here.
        CHECK((q.delta * (*q.A - q.c)) % (-q.b) == 0);
        const std::int64_t lhs = q.delta * (*q.A - q.c) / (-q.b) + *q.t;
        CHECK(cert.lhs == lhs);
        CHECK(cert.wap == (lhs >= *q.A));
      }
      if (cert.condition != WapCondition::formula) CHECK(cert.wap);
    }
  }
}

TEST_CASE("conjugation invariance") {
  for (std::size_t k = 2; k <= 5; ++k) {
    for (const auto& m : all_morphisms(k)) {
      const auto s = m.swapped();
      CHECK(s.swapped() == m);
      CAPTURE(m.str());
      check_same_analysis(decide_wap(m, 0), decide_wap(s, 1));
      if (m.prolongeable_on(1)) check_same_analysis(decide_wap(m, 1), decide_wap(s, 0));
    }
  }
}

TEST_CASE("decide_bounded_wap examples") {
  const auto eq = decide_bounded_wap(Morphism::parse("0011/0101"));
  CHECK(eq.bounded_wap);
  CHECK(eq.abelian_periodic());
  CHECK(eq.reason == BoundedWapReason::abelian_equivalent_images);
  const auto alt = decide_bounded_wap(Morphism::parse("010/101"));
  CHECK(alt.bounded_wap);
  CHECK(alt.reason == BoundedWapReason::alternating_form);
  CHECK(decide_bounded_wap(Morphism::parse("01010/10101")).reason ==
        BoundedWapReason::alternating_form);
  const auto no = decide_bounded_wap(Morphism::parse("0001/1011"));
  CHECK_FALSE(no.bounded_wap);
  CHECK(no.reason == BoundedWapReason::none);
  CHECK(no.primitive);
  CHECK_FALSE(decide_bounded_wap(Morphism::parse("0101/1010")).reason ==
              BoundedWapReason::alternating_form);
  CHECK_FALSE(decide_bounded_wap(Morphism::parse("00/01")).primitive);
  CHECK(decide_bounded_wap(Morphism::parse("01/10")).bounded_wap);
}

TEST_CASE("bounded WAP implies WAP") {
  for (std::size_t k = 2; k <= 5; ++k) {
    for (const auto& m : all_morphisms(k)) {
      if (!decide_bounded_wap(m).bounded_wap) continue;
      CAPTURE(m.str());
      CHECK(decide_wap(m, 0).wap);
      if (m.prolongeable_on(1)) CHECK(decide_wap(m, 1).wap);
    }
  }
}

TEST_CASE("horizontal hits count the most visited level") {
  const auto m = Morphism::parse("01/10");
  const auto u = oracle::thue_morse(1000);
  const auto d = oracle::discrepancy(u, 1, 2);
  std::size_t best = 0;
  for (std::int64_t level = -3; level <= 3; ++level) {
    best = std::max(best, oracle::hits(d, level).size());
  }
  CHECK(horizontal_hits(m, 0, 1000) == best);
  CHECK(horizontal_hits(m, 0, 1000) == 500);
}

TEST_CASE("decay check on the NotWAP fixed point") {
  const auto cert = decide_wap(Morphism::parse("0001/1011"), 0);
  const auto check = notwap_decay_check(cert, 1000000);
  CHECK(check.holds);
  CHECK(check.levels_checked == 10);  // e = 0..9, the last cut at 10^6
  CHECK_THROWS_AS(notwap_decay_check(decide_wap(Morphism::parse("010/101"), 0), 100),
                  PreconditionError);

  // The same bound recomputed from an independent fixed point.
  const auto u = oracle::iterate_morphism({"0001", "1011"}, '0', 1 << 16);
  std::int64_t g = 0;
  std::size_t high = 4;
  std::int64_t e = 0;
  std::optional<std::int64_t> running;
  for (std::size_t i = 1; i <= u.size(); ++i) {
    g += u[i - 1] == '0' ? -1 : 1;
    if (e > 0 || u[i - 1] == '1') running = running ? std::max(*running, g) : g;
    if (i == high) {
      if (running) CHECK(*running <= *cert.A - e);
      running.reset();
      ++e;
      high *= 4;
    }
  }
}

TEST_CASE("census examples") {
  CensusOptions two;
  two.k = 2;
  const auto rows = enumerate_census(two);
  CHECK(rows.size() == 8);
  for (const auto& r : rows) {
    if (r.matrix.b >= 1 && r.matrix.c >= 1) CHECK(r.from0.wap);
    CHECK_FALSE(r.agree);
  }
  CHECK(rows.front().phi0.str() == "00");
  CHECK(rows.back().phi1.str() == "11");
  CHECK(rows[6].phi0.str() == "01");
  CHECK(rows[6].phi1.str() == "10");
  CHECK(rows[6].bounded.bounded_wap);

  CensusOptions four;
  four.k = 4;
  four.threads = 3;
  const auto rows4 = enumerate_census(four);
  CHECK(rows4.size() == 8 * 16);
  const auto it = std::find_if(rows4.begin(), rows4.end(), [](const CensusRow& r) {
    return r.phi0.str() == "0001" && r.phi1.str() == "1011";
  });
  REQUIRE(it != rows4.end());
  CHECK_FALSE(it->from0.wap);
  REQUIRE(it->from1);
  CHECK(it->from1->wap);
  for (const auto& r : rows4) {
    if (r.bounded.bounded_wap) {
      CHECK(r.from0.wap);
      if (r.from1) CHECK(r.from1->wap);
    }
  }
  CHECK_THROWS_AS(enumerate_census(CensusOptions{1}), InputError);
  CHECK_THROWS_AS(enumerate_census(CensusOptions{7}), InputError);
}

TEST_CASE("census output is deterministic and thread independent") {
  CensusOptions a;
  a.k = 3;
  a.prefix = 20000;
  a.threads = 1;
  CensusOptions b = a;
  b.threads = 5;
  std::ostringstream sa, sb;
  write_census_csv(sa, enumerate_census(a));
  write_census_csv(sb, enumerate_census(b));
  CHECK(sa.str() == sb.str());
  std::istringstream lines(sa.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "phi0,phi1,a,b,c,d,wap_from0,condition0,wap_from1,condition1,bounded_wap,reason,"
        "empirical_hits,agree");
  std::size_t count = 0;
  for (std::string line; std::getline(lines, line);) {
    ++count;
    CHECK(std::count(line.begin(), line.end(), ',') == 13);
  }
  CHECK(count == 32);
}

TEST_CASE("small census agrees with the empirical cross-check") {
  for (std::size_t k : {2u, 3u}) {
    CensusOptions o;
    o.k = k;
    o.prefix = 100000;
    o.decay_prefix = 1000000;
    for (const auto& r : enumerate_census(o)) {
      CAPTURE(r.phi0.str());
      CAPTURE(r.phi1.str());
      REQUIRE(r.agree);
      CHECK(*r.agree);
    }
  }
}
