#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "wap/graphic.hpp"

namespace wap::cli {

/// "bx,by/cx,cy": the step of letter 0, then the step of letter 1.
StepVectors parse_vectors(std::string_view text);

struct Viewport {
  std::size_t columns = 100;
  std::size_t rows = 30;
};

/// One text row per unit band of y, top row first. Unit diagonal steps are
/// drawn as '/' and '\', flat steps as '_', anything else as '*' at the
/// step's end point. Output beyond the viewport is cut and announced by a
/// final "[truncated ...]" line.
std::string render_ascii(const GraphicPath& path, const Viewport& viewport = {});

/// An SVG document whose polyline visits every lattice point of the path,
/// drawn over a unit grid and flipped by scale(1,-1) so that y points up.
std::string render_svg(const GraphicPath& path);

}  // namespace wap::cli
