#pragma once

#include <string>
#include <vector>

#include "permsimple/intervals.hpp"
#include "permsimple/permutation.hpp"

namespace permsimple {

/// Static rendering of a permutation plot: a framed n x n grid with one
/// dot per entry, positions rightward and values upward, plus shaded
/// rectangles for highlighted windows.
struct PlotSpec {
  enum class Format { Svg, Ascii };
  Permutation perm;
  std::vector<IntervalWindow> highlights;
  Format format = Format::Svg;
  int cell = 20;  // SVG pixels per grid cell
};

/// Window [i, j] of p with its value range filled in; the rectangle a
/// highlight shades. The window need not be an interval.
IntervalWindow window_of(const Permutation& p, int i, int j);

/// SVG: one <circle> per entry, one frame <rect>, one shaded <rect
/// class="highlight"> per highlight, drawn under the dots.
/// ASCII: n lines, top line = value n; '*' entry, ':' inside a highlight,
/// '.' elsewhere.
std::string emit_plot(const PlotSpec& spec);

}  // namespace permsimple
