#include "permpat/diagram.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

using namespace permpat::antichain;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("ascii diagram has one mark per entry, split by region") {
  const AntichainElement e1 = element_closed_form(1);
  const std::string art = diagram_ascii(e1);

  const auto lines = lines_of(art);
  REQUIRE(lines.size() == 15);  // 14 rows + legend

  // Count marks inside the grid; the legend line names the mark characters.
  const std::string grid = art.substr(0, art.rfind('\n', art.size() - 2) + 1);
  const auto count = [&](char c) {
    return std::count(grid.begin(), grid.end(), c);
  };
  CHECK(count('#') == 3);             // prefix columns
  CHECK(count('o') == 14 - 3 - 4);    // middle columns
  CHECK(count('*') == 4);             // suffix columns

  // Rows are printed top-down from value 14 to 1; the suffix holds the
  // entries 3, 2, 1, 5, so exactly those rows carry a '*'.
  for (const long v : {3L, 2L, 1L, 5L}) {
    const std::string& row = lines[static_cast<std::size_t>(14 - v)];
    CHECK(std::count(row.begin(), row.end(), '*') == 1);
    CHECK(row.find('o') == std::string::npos);
    CHECK(row.find('#') == std::string::npos);
  }
  for (const long v : {13L, 12L, 10L}) {
    const std::string& row = lines[static_cast<std::size_t>(14 - v)];
    CHECK(std::count(row.begin(), row.end(), '#') == 1);
  }
  CHECK(lines.back().find("suffix") != std::string::npos);
}

TEST_CASE("ascii diagram is byte-deterministic") {
  const AntichainElement e3 = element_closed_form(3);
  CHECK(diagram_ascii(e3) == diagram_ascii(e3));
}

TEST_CASE("svg diagram carries one dot per entry and three region bands") {
  const AntichainElement e2 = element_closed_form(2);
  const std::string svg = diagram_svg(e2);

  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);

  std::size_t circles = 0;
  for (std::size_t at = svg.find("<circle"); at != std::string::npos;
       at = svg.find("<circle", at + 1)) {
    ++circles;
  }
  CHECK(circles == 16);

  std::size_t rects = 0;
  for (std::size_t at = svg.find("<rect"); at != std::string::npos;
       at = svg.find("<rect", at + 1)) {
    ++rects;
  }
  CHECK(rects == 3);

  CHECK(diagram_svg(e2) == svg);
}
