#include "permpat/diagram.hpp"

#include <sstream>

namespace permpat::antichain {

namespace {

enum class Region { Prefix, Middle, Suffix };

Region region_of_column(const AntichainElement& e, std::size_t col) {
  if (col <= e.prefix_end) return Region::Prefix;
  if (col <= e.middle_end) return Region::Middle;
  return Region::Suffix;
}

char region_mark(Region r) {
  switch (r) {
    case Region::Prefix:
      return '#';
    case Region::Middle:
      return 'o';
    case Region::Suffix:
      return '*';
  }
  return '?';
}

const char* region_tint(Region r) {
  switch (r) {
    case Region::Prefix:
      return "#dde8f7";
    case Region::Middle:
      return "#e2f3e2";
    case Region::Suffix:
      return "#fbe9d0";
  }
  return "#ffffff";
}

}  // namespace

std::string diagram_ascii(const AntichainElement& e) {
  const std::size_t n = e.perm.size();
  std::size_t label_width = 1;
  for (std::size_t x = n; x >= 10; x /= 10) ++label_width;

  std::ostringstream out;
  for (std::size_t row = n; row >= 1; --row) {
    std::string label = std::to_string(row);
    out << std::string(label_width - label.size(), ' ') << label << ' ';
    for (std::size_t col = 1; col <= n; ++col) {
      out << ' ';
      if (e.perm.values()[col - 1] == static_cast<Value>(row)) {
        out << region_mark(region_of_column(e, col));
      } else {
        out << '.';
      }
    }
    out << '\n';
  }
  out << "columns 1-" << e.prefix_end << " prefix (#), " << (e.prefix_end + 1)
      << "-" << e.middle_end << " middle (o), " << (e.middle_end + 1) << "-"
      << n << " suffix (*)\n";
  return out.str();
}

std::string diagram_svg(const AntichainElement& e) {
  const std::size_t n = e.perm.size();
  constexpr std::size_t cell = 20;
  constexpr std::size_t margin = 20;
  const std::size_t side = n * cell + 2 * margin;

  const auto col_left = [&](std::size_t col) {
    return margin + (col - 1) * cell;
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side
      << "\" height=\"" << side << "\" viewBox=\"0 0 " << side << ' ' << side
      << "\">\n";
  // Region tints: prefix, middle, suffix column bands.
  const struct {
    std::size_t first, last;
    Region region;
  } bands[] = {
      {1, e.prefix_end, Region::Prefix},
      {e.prefix_end + 1, e.middle_end, Region::Middle},
      {e.middle_end + 1, n, Region::Suffix},
  };
  for (const auto& band : bands) {
    out << "<rect x=\"" << col_left(band.first) << "\" y=\"" << margin
        << "\" width=\"" << (band.last - band.first + 1) * cell
        << "\" height=\"" << n * cell << "\" fill=\""
        << region_tint(band.region) << "\"/>\n";
  }
  // Light grid.
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t x = margin + k * cell;
    out << "<line x1=\"" << x << "\" y1=\"" << margin << "\" x2=\"" << x
        << "\" y2=\"" << (margin + n * cell)
        << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    out << "<line x1=\"" << margin << "\" y1=\"" << x << "\" x2=\""
        << (margin + n * cell) << "\" y2=\"" << x
        << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  }
  // One dot per entry: column = position, row = value, top row is n.
  for (std::size_t col = 1; col <= n; ++col) {
    const auto v = static_cast<std::size_t>(e.perm.values()[col - 1]);
    const std::size_t cx = col_left(col) + cell / 2;
    const std::size_t cy = margin + (n - v) * cell + cell / 2;
    out << "<circle cx=\"" << cx << "\" cy=\"" << cy
        << "\" r=\"6\" fill=\"#222222\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace permpat::antichain
