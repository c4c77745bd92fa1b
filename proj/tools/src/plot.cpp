#include "wap/cli/plot.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "wap/error.hpp"

namespace wap::cli {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("bad step vectors '" + std::string(whole) + "'");
  }
  return v;
}

StepVector parse_vector(std::string_view text, std::string_view whole) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw InputError("bad step vectors '" + std::string(whole) + "'");
  }
  return {parse_int(text.substr(0, comma), whole), parse_int(text.substr(comma + 1), whole)};
}

}  // namespace

StepVectors parse_vectors(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw InputError("step vectors need the form bx,by/cx,cy");
  }
  return StepVectors({parse_vector(text.substr(0, slash), text),
                      parse_vector(text.substr(slash + 1), text)});
}

std::string render_ascii(const GraphicPath& path, const Viewport& viewport) {
  // cells[row][column], rows keyed by the lower y of the unit band.
  std::map<std::int64_t, std::map<std::int64_t, char>, std::greater<>> cells;
  bool truncated = false;
  const auto columns = static_cast<std::int64_t>(viewport.columns);
  for (std::size_t i = 1; i < path.size(); ++i) {
    const LatticePoint& from = path[i - 1];
    const LatticePoint& to = path[i];
    const std::int64_t dx = to.x - from.x;
    const std::int64_t dy = to.y - from.y;
    std::int64_t column = to.x;
    std::int64_t row = to.y;
    char glyph = '*';
    if (dx == 1 && dy == 1) {
      column = from.x;
      row = from.y;
      glyph = '/';
    } else if (dx == 1 && dy == -1) {
      column = from.x;
      row = to.y;
      glyph = '\\';
    } else if (dx == 1 && dy == 0) {
      column = from.x;
      glyph = '_';
    }
    if (column < 0 || column >= columns) {
      truncated = true;
      continue;
    }
    cells[row][column] = glyph;
  }
  if (cells.size() > viewport.rows) {
    truncated = true;
    auto cut = cells.begin();
    std::advance(cut, static_cast<std::ptrdiff_t>(viewport.rows));
    cells.erase(cut, cells.end());
  }
  std::ostringstream os;
  for (const auto& [row, line] : cells) {
    std::string text(static_cast<std::size_t>(line.rbegin()->first + 1), ' ');
    for (const auto& [column, glyph] : line) text[static_cast<std::size_t>(column)] = glyph;
    os << text << '\n';
  }
  if (truncated) {
    os << "[truncated to " << viewport.columns << "x" << viewport.rows
       << "; path has " << (path.empty() ? 0 : path.size() - 1) << " steps]\n";
  }
  return os.str();
}

std::string render_svg(const GraphicPath& path) {
  std::int64_t xmin = 0;
  std::int64_t xmax = 0;
  std::int64_t ymin = 0;
  std::int64_t ymax = 0;
  for (const auto& p : path) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const std::int64_t x0 = xmin - 1;
  const std::int64_t y0 = ymin - 1;
  const std::int64_t w = xmax - xmin + 2;
  const std::int64_t h = ymax - ymin + 2;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 << ' ' << -(y0 + h)
     << ' ' << w << ' ' << h << "\">\n"
     << "  <defs>\n"
     << "    <pattern id=\"grid\" width=\"1\" height=\"1\" patternUnits=\"userSpaceOnUse\">\n"
     << "      <path d=\"M 1 0 L 0 0 0 1\" fill=\"none\" stroke=\"#cccccc\" "
        "stroke-width=\"0.04\"/>\n"
     << "    </pattern>\n"
     << "  </defs>\n"
     << "  <g transform=\"scale(1,-1)\">\n"
     << "    <rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << w << "\" height=\"" << h
     << "\" fill=\"url(#grid)\"/>\n"
     << "    <line x1=\"" << x0 << "\" y1=\"0\" x2=\"" << x0 + w
     << "\" y2=\"0\" stroke=\"#888888\" stroke-width=\"0.06\"/>\n"
     << "    <polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"0.12\" points=\"";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) os << ' ';
    os << path[i].x << ',' << path[i].y;
  }
  os << "\"/>\n"
     << "  </g>\n"
     << "</svg>\n";
  return os.str();
}

}  // namespace wap::cli
