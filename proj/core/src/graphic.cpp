#include "wap/graphic.hpp"

#include <algorithm>
#include <stdexcept>

#include "wap/error.hpp"

namespace wap {

namespace {

void check_slope(const Rational& slope) {
  if (slope < Rational(0) || slope > Rational(1)) {
    throw InputError("slope must lie in [0, 1], got " + slope.str());
  }
}

}  // namespace

StepVectors::StepVectors(std::vector<StepVector> steps) : steps_(std::move(steps)) {
  if (steps_.size() < 2 || steps_.size() > kMaxAlphabet) {
    throw InputError("need one step vector per letter (2 or 3)");
  }
  if (steps_.size() == 2) {
    const auto& v0 = steps_[0];
    const auto& v1 = steps_[1];
    if (v0.x * v1.y - v0.y * v1.x == 0) {
      throw InputError("step vectors must not be collinear");
    }
  }
}

StepVectors StepVectors::standard() { return StepVectors({{1, -1}, {1, 1}}); }

StepVectors StepVectors::canonical(std::int64_t b, std::int64_t c) {
  if (b < 0 || c < 0) throw InputError("canonical step vectors need b, c >= 0");
  return StepVectors({{1, -b}, {1, c}});
}

const StepVector& StepVectors::operator[](Letter a) const {
  if (a >= steps_.size()) throw DomainError("no step vector for letter");
  return steps_[a];
}

GraphicPath graphic_points(const FiniteWord& u, const StepVectors& v) {
  GraphicPath path;
  path.reserve(u.size() + 1);
  LatticePoint p;
  path.push_back(p);
  for (const Letter a : u.letters()) {
    p.x += v[a].x;
    p.y += v[a].y;
    path.push_back(p);
  }
  return path;
}

DiscrepancyCursor::DiscrepancyCursor(Rational slope, Letter focus)
    : focus_(focus),
      step_focus_(slope.num() - slope.den()),
      step_other_(slope.num()) {
  check_slope(slope);
}

void DiscrepancyProfile::push(std::int64_t v) {
  values_.push_back(v);
  min_ = std::min(min_, v);
  max_ = std::max(max_, v);
}

DiscrepancyProfile DiscrepancyProfile::compute(const WordStream& w,
                                               const Rational& slope,
                                               std::size_t n, Letter focus) {
  DiscrepancyCursor cursor(slope, focus);
  DiscrepancyProfile d(slope, focus);
  d.values_.reserve(n + 1);
  WordStream s = w.fresh();
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = s.next();
    if (!a) break;
    d.push(cursor.push(*a));
  }
  return d;
}

DiscrepancyProfile DiscrepancyProfile::compute(const FiniteWord& u,
                                               const Rational& slope,
                                               Letter focus) {
  DiscrepancyCursor cursor(slope, focus);
  DiscrepancyProfile d(slope, focus);
  d.values_.reserve(u.size() + 1);
  for (const Letter a : u.letters()) d.push(cursor.push(a));
  return d;
}

LineHits line_hits(const DiscrepancyProfile& d, std::int64_t level) {
  LineHits hits;
  hits.level = level;
  const auto& values = d.values();
  for (std::size_t n = 1; n < values.size(); ++n) {
    if (values[n] != level) continue;
    if (hits.last_hit) hits.max_gap = std::max(hits.max_gap, n - *hits.last_hit);
    hits.positions.push_back(n);
    hits.last_hit = n;
  }
  return hits;
}

WidthEstimate width(const DiscrepancyProfile& d) {
  return {d.slope(), d.min(), d.max()};
}

std::size_t max_level_hits(const DiscrepancyProfile& d) {
  std::vector<std::size_t> counts(static_cast<std::size_t>(d.max() - d.min()) + 1);
  const auto& values = d.values();
  for (std::size_t n = 1; n < values.size(); ++n) {
    ++counts[static_cast<std::size_t>(values[n] - d.min())];
  }
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

std::size_t pigeonhole_bound(std::size_t n, std::int64_t width) {
  const auto levels = static_cast<std::size_t>(width) + 1;
  return (n + levels - 1) / levels;
}

}  // namespace wap
