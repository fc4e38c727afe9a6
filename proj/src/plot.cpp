#include "permsimple/plot.hpp"

#include <algorithm>
#include <sstream>

namespace permsimple {

IntervalWindow window_of(const Permutation& p, int i, int j) {
  if (i < 1 || j > p.size() || i > j)
    throw OutOfRange("window [" + std::to_string(i) + ", " +
                     std::to_string(j) + "] outside 1.." +
                     std::to_string(p.size()));
  int lo = p.value_at(i), hi = lo;
  for (int k = i + 1; k <= j; ++k) {
    int v = p.value_at(k);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return IntervalWindow{i, j, lo, hi};
}

namespace {

std::string emit_svg(const PlotSpec& spec) {
  const int n = spec.perm.size();
  const int cell = spec.cell;
  const int margin = cell;
  const int side = 2 * margin + n * cell;
  const int radius = std::max(2, cell * 18 / 100);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side
     << "\" height=\"" << side << "\" viewBox=\"0 0 " << side << ' ' << side
     << "\">\n";
  for (const IntervalWindow& h : spec.highlights) {
    // Columns i..j, rows vmin..vmax; the y axis is inverted so larger
    // values sit higher.
    int x = margin + (h.i - 1) * cell;
    int y = margin + (n - h.vmax) * cell;
    int w = (h.j - h.i + 1) * cell;
    int ht = (h.vmax - h.vmin + 1) * cell;
    os << "  <rect class=\"highlight\" x=\"" << x << "\" y=\"" << y
       << "\" width=\"" << w << "\" height=\"" << ht
       << "\" fill=\"#d8d8d8\"/>\n";
  }
  os << "  <rect class=\"frame\" x=\"" << margin << "\" y=\"" << margin
     << "\" width=\"" << n * cell << "\" height=\"" << n * cell
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int pos = 1; pos <= n; ++pos) {
    int v = spec.perm.value_at(pos);
    int cx = margin + pos * cell - cell / 2;
    int cy = margin + (n - v) * cell + cell / 2;
    os << "  <circle class=\"dot\" cx=\"" << cx << "\" cy=\"" << cy
       << "\" r=\"" << radius << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string emit_ascii(const PlotSpec& spec) {
  const int n = spec.perm.size();
  std::ostringstream os;
  for (int v = n; v >= 1; --v) {
    for (int pos = 1; pos <= n; ++pos) {
      char ch = '.';
      if (spec.perm.value_at(pos) == v) {
        ch = '*';
      } else {
        for (const IntervalWindow& h : spec.highlights) {
          if (h.i <= pos && pos <= h.j && h.vmin <= v && v <= h.vmax) {
            ch = ':';
            break;
          }
        }
      }
      os << ch;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string emit_plot(const PlotSpec& spec) {
  for (const IntervalWindow& h : spec.highlights) {
    if (h.i < 1 || h.j > spec.perm.size() || h.i > h.j ||
        h.vmin < 1 || h.vmax > spec.perm.size() || h.vmin > h.vmax)
      throw OutOfRange("highlight outside the plot");
  }
  if (spec.cell < 4) throw BadArguments("cell size too small");
  return spec.format == PlotSpec::Format::Svg ? emit_svg(spec)
                                              : emit_ascii(spec);
}

}  // namespace permsimple
