#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "permsimple/plot.hpp"

using namespace permsimple;

namespace {

Permutation P(const std::string& text) { return Permutation::parse(text); }

int count_of(const std::string& hay, const std::string& needle) {
  int count = 0;
  for (std::size_t at = hay.find(needle); at != std::string::npos;
       at = hay.find(needle, at + 1))
    ++count;
  return count;
}

}  // namespace

TEST_CASE("window_of fills in the value range") {
  Permutation p = P("52413");
  CHECK(window_of(p, 2, 5) == IntervalWindow{2, 5, 1, 4});
  CHECK(window_of(p, 1, 1) == IntervalWindow{1, 1, 5, 5});
  CHECK(window_of(p, 1, 5) == IntervalWindow{1, 5, 1, 5});
  CHECK_THROWS_AS(window_of(p, 0, 2), OutOfRange);
  CHECK_THROWS_AS(window_of(p, 2, 6), OutOfRange);
  CHECK_THROWS_AS(window_of(p, 4, 2), OutOfRange);
}

TEST_CASE("ascii rendering without highlights") {
  PlotSpec spec{.perm = P("2413"),
                .highlights = {},
                .format = PlotSpec::Format::Ascii,
                .cell = 20};
  CHECK(emit_plot(spec) == ".*..\n...*\n*...\n..*.\n");
}

TEST_CASE("ascii rendering shades highlighted windows") {
  Permutation p = P("52413");
  PlotSpec spec{.perm = p,
                .highlights = {window_of(p, 2, 5)},
                .format = PlotSpec::Format::Ascii,
                .cell = 20};
  CHECK(emit_plot(spec) == "*....\n.:*::\n.:::*\n.*:::\n.::*:\n");
}

TEST_CASE("ascii rendering of the singleton") {
  PlotSpec spec{.perm = P("1"),
                .highlights = {},
                .format = PlotSpec::Format::Ascii,
                .cell = 20};
  CHECK(emit_plot(spec) == "*\n");
}

TEST_CASE("svg rendering structure") {
  Permutation p = P("52413");
  PlotSpec spec{.perm = p,
                .highlights = {window_of(p, 2, 5)},
                .format = PlotSpec::Format::Svg,
                .cell = 20};
  std::string svg = emit_plot(spec);

  CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"140\" "
                  "height=\"140\" viewBox=\"0 0 140 140\">\n",
                  0) == 0);
  CHECK(count_of(svg, "<circle") == 5);
  CHECK(count_of(svg, "<rect") == 2);
  CHECK(count_of(svg, "class=\"highlight\"") == 1);
  // highlight: columns 2..5, values 1..4, drawn before the dots
  CHECK(svg.find("<rect class=\"highlight\" x=\"40\" y=\"40\" width=\"80\" "
                 "height=\"80\" fill=\"#d8d8d8\"/>") != std::string::npos);
  CHECK(svg.find("<rect class=\"frame\" x=\"20\" y=\"20\" width=\"100\" "
                 "height=\"100\" fill=\"none\" stroke=\"black\"/>") !=
        std::string::npos);
  // entry (1, 5) sits at the top-left cell center
  CHECK(svg.find("<circle class=\"dot\" cx=\"30\" cy=\"30\" r=\"3\"/>") !=
        std::string::npos);
  // entry (4, 1) sits near the bottom
  CHECK(svg.find("<circle class=\"dot\" cx=\"90\" cy=\"110\" r=\"3\"/>") !=
        std::string::npos);
  CHECK(svg.find("class=\"highlight\"") < svg.find("class=\"frame\""));
  CHECK(svg.find("class=\"frame\"") < svg.find("class=\"dot\""));
  CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
}

TEST_CASE("svg cell size scales coordinates and dot radius") {
  PlotSpec spec{.perm = P("21"),
                .highlights = {},
                .format = PlotSpec::Format::Svg,
                .cell = 50};
  std::string svg = emit_plot(spec);
  CHECK(svg.find("width=\"200\" height=\"200\"") != std::string::npos);
  CHECK(svg.find("r=\"9\"") != std::string::npos);  // 50 * 18 / 100
  // minimum radius clamps at 2
  PlotSpec tiny{.perm = P("21"),
                .highlights = {},
                .format = PlotSpec::Format::Svg,
                .cell = 8};
  CHECK(emit_plot(tiny).find("r=\"2\"") != std::string::npos);
}

TEST_CASE("plot validation") {
  Permutation p = P("2413");
  PlotSpec bad_window{.perm = p,
                      .highlights = {IntervalWindow{0, 2, 1, 2}},
                      .format = PlotSpec::Format::Ascii,
                      .cell = 20};
  CHECK_THROWS_AS(emit_plot(bad_window), OutOfRange);
  PlotSpec bad_values{.perm = p,
                      .highlights = {IntervalWindow{1, 2, 1, 5}},
                      .format = PlotSpec::Format::Ascii,
                      .cell = 20};
  CHECK_THROWS_AS(emit_plot(bad_values), OutOfRange);
  PlotSpec bad_cell{.perm = p,
                    .highlights = {},
                    .format = PlotSpec::Format::Svg,
                    .cell = 3};
  CHECK_THROWS_AS(emit_plot(bad_cell), BadArguments);
}
