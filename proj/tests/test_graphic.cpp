#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "wap/error.hpp"
#include "wap/graphic.hpp"
#include "wap/words.hpp"

using namespace wap;

namespace {

// Pigeonhole: a profile of width W over N letters hits some level at least
// ceil(N / (W + 1)) times. Checked on every profile below.
void check_pigeonhole(const DiscrepancyProfile& d) {
  const auto w = width(d);
  CHECK(max_level_hits(d) >= pigeonhole_bound(d.length(), w.width()));
}

DiscrepancyProfile profile(const std::string& u, Rational slope) {
  auto d = DiscrepancyProfile::compute(FiniteWord::parse(u, 2), slope);
  check_pigeonhole(d);
  return d;
}

}  // namespace

TEST_CASE("graphic_points examples") {
  const auto std_v = StepVectors::standard();
  const auto path = graphic_points(FiniteWord::parse("01"), std_v);
  CHECK(path == GraphicPath{{0, 0}, {1, -1}, {2, 0}});
  const auto p2 = graphic_points(FiniteWord::parse("0001"), std_v);
  CHECK(p2[1].y == -1);
  CHECK(p2[2].y == -2);
  CHECK(p2[3].y == -3);
  CHECK(p2[4].y == -2);
  const auto pf = graphic_points(prefix(named_word("paperfolding"), 32), std_v);
  CHECK(pf.size() == 33);
  CHECK(pf.back() == LatticePoint{32, -2});
}

TEST_CASE("step vectors reject collinear pairs") {
  CHECK_THROWS_AS(StepVectors({{1, 1}, {2, 2}}), InputError);
  CHECK_THROWS_AS(StepVectors::canonical(-1, 2), InputError);
  CHECK_NOTHROW(StepVectors({{1, -1}, {1, 1}}));
}

TEST_CASE("discrepancy profile examples") {
  const auto d = DiscrepancyProfile::compute(periodic_stream(FiniteWord::parse("01")),
                                             Rational(1, 2), 10);
  check_pigeonhole(d);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(d[n] == (n % 2 == 0 ? 0 : -1));
  const auto pf = DiscrepancyProfile::compute(named_word("paperfolding"), Rational(1, 2), 15);
  CHECK(pf[15] == -1);
  const auto m = DiscrepancyProfile::compute(
      fixed_point_stream(Morphism::parse("0001/1011"), 0), Rational(1, 2), 16);
  CHECK(m[16] == -4);
  CHECK_THROWS_AS(DiscrepancyProfile::compute(FiniteWord::parse("01"), Rational(3, 2)),
                  InputError);
}

TEST_CASE("line_hits examples") {
  const auto d = profile(prefix(periodic_stream(FiniteWord::parse("01")), 100).str(),
                         Rational(1, 2));
  const auto h = line_hits(d, 0);
  CHECK(h.count() == 50);
  CHECK(h.positions.front() == 2);
  CHECK(h.max_gap == 2);
  CHECK(h.last_hit == 100);

  const auto pf = profile(oracle::paperfolding(1024), Rational(1, 2));
  const auto ph = line_hits(pf, -1);
  for (std::size_t n : {1, 3, 15, 63, 255}) {
    CHECK(std::find(ph.positions.begin(), ph.positions.end(), n) != ph.positions.end());
  }
  CHECK(ph.positions == oracle::hits(oracle::discrepancy(oracle::paperfolding(1024), 1, 2), -1));
}

TEST_CASE("prop12 level 0 has growing gaps") {
  const auto u = oracle::prop12(100000);
  const auto d = profile(u, Rational(1, 2));
  const auto all = line_hits(d, 0);
  const auto half = line_hits(profile(u.substr(0, 50000), Rational(1, 2)), 0);
  CHECK(all.max_gap > half.max_gap);
}

TEST_CASE("width examples") {
  const auto w01 = width(profile("0101010101", Rational(1, 2)));
  CHECK(w01.min == -1);
  CHECK(w01.max == 0);
  const auto w12 = width(profile(oracle::prop12(10000), Rational(1, 2)));
  CHECK(w12.min == -1);
  CHECK(w12.max == 2);
  const auto pf = profile(oracle::paperfolding(21), Rational(1, 2));
  CHECK(width(pf).min == -5);
  CHECK(pf[21] == -5);
}

TEST_CASE("width is monotone in N") {
  const auto u = oracle::paperfolding(5000);
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  for (std::size_t n = 100; n <= 5000; n += 100) {
    const auto w = width(profile(u.substr(0, n), Rational(1, 2)));
    CHECK(w.min <= lo);
    CHECK(w.max >= hi);
    lo = w.min;
    hi = w.max;
  }
}

TEST_CASE("step identity across generators") {
  const std::vector<std::string> words{
      oracle::paperfolding(100000), oracle::thue_morse(100000), oracle::prop12(100000),
      oracle::prop31(100000), oracle::iterate_morphism({"0001", "1011"}, '0', 100000)};
  for (const auto& u : words) {
    for (const Rational slope : {Rational(1, 2), Rational(1, 3), Rational(3, 5)}) {
      const auto d = profile(u, slope);
      CHECK(d[0] == 0);
      bool ok = true;
      for (std::size_t n = 1; n <= u.size(); ++n) {
        const auto step = slope.num() - (u[n - 1] == '0' ? slope.den() : 0);
        ok = ok && d[n] - d[n - 1] == step;
      }
      CHECK(ok);
    }
  }
}

TEST_CASE("graphic with (1,-b),(1,c) equals the discrepancy at slope c/(b+c)") {
  const auto word = FiniteWord::parse(oracle::paperfolding(1000), 2);
  for (std::int64_t b = 0; b <= 8; ++b) {
    for (std::int64_t c = 0; c <= 8; ++c) {
      if (b + c == 0) continue;
      const auto path = graphic_points(word, StepVectors::canonical(b, c));
      const Rational slope(c, b + c);
      const auto d = DiscrepancyProfile::compute(word, slope);
      bool ok = true;
      for (std::size_t n = 0; n <= word.size(); ++n) {
        ok = ok && path[n].y * slope.den() == d[n] * (b + c);
      }
      CHECK(ok);
    }
  }
}

TEST_CASE("streaming and batch profiles agree") {
  for (const char* name : {"paperfolding", "thue_morse", "prop12", "prop31"}) {
    const auto w = named_word(name);
    const auto streamed = DiscrepancyProfile::compute(w, Rational(2, 5), 20000);
    const auto batch = DiscrepancyProfile::compute(prefix(w, 20000), Rational(2, 5));
    CHECK(streamed.values() == batch.values());
    const auto d = oracle::discrepancy(prefix(w, 20000).str(), 2, 5);
    CHECK(batch.values() == d);
    DiscrepancyCursor cursor(Rational(2, 5));
    auto fresh = w.fresh();
    bool ok = true;
    for (std::size_t n = 1; n <= 20000; ++n) ok = ok && cursor.push(*fresh.next()) == d[n];
    CHECK(ok);
  }
}

TEST_CASE("focus letter selects the counted letter") {
  const auto u = FiniteWord::parse("0120112222");
  const auto d = DiscrepancyProfile::compute(u, Rational(1, 2), 2);
  CHECK(d[10] == 10 - 2 * 5);
  CHECK(d[4] == 4 - 2 * 1);
}

TEST_CASE("pigeonhole bound formula") {
  CHECK(pigeonhole_bound(10, 0) == 10);
  CHECK(pigeonhole_bound(10, 2) == 4);
  CHECK(pigeonhole_bound(9, 2) == 3);
  CHECK(pigeonhole_bound(0, 5) == 0);
}
