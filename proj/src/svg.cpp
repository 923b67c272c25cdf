#include "qtc/svg.hpp"

#include <cstdio>
#include <sstream>

#include "qtc/errors.hpp"

namespace qtc {
namespace {

// Dyadic coordinates printed exactly: value = units * 1024 / 2^level is an
// exact double (power-of-two denominator), so formatting is stable bytes.
void append_coord(std::ostringstream& out, std::uint64_t units, int level) {
  const double v = double(units) * 1024.0 / double(std::uint64_t(1) << level);
  if (v == double(std::uint64_t(v))) {
    out << std::uint64_t(v);
    return;
  }
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  std::string s(buf);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  out << s;
}

}  // namespace

std::string render_svg(const Quadtree& tree, const Coloring* coloring) {
  // Fail on a partial coloring before emitting anything.
  std::vector<int> colors;
  if (coloring) {
    colors.reserve(tree.leaf_count());
    for (const SquareKey& k : tree.leaves()) {
      colors.push_back(coloring->color_of(k));
    }
  }

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" "
         "viewBox=\"0 0 1024 1024\" width=\"1024\" height=\"1024\">\n";
  const auto& leaves = tree.leaves();
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const SquareKey& k = leaves[i];
    out << "  <rect x=\"";
    append_coord(out, k.x, k.level);
    // Screen y grows downward; the square's top edge is (y+1) in grid units.
    out << "\" y=\"";
    append_coord(out, (std::uint64_t(1) << k.level) - (std::uint64_t(k.y) + 1),
                 k.level);
    out << "\" width=\"";
    append_coord(out, 1, k.level);
    out << "\" height=\"";
    append_coord(out, 1, k.level);
    out << "\" fill=\"";
    if (coloring) {
      out << kSvgPalette[std::size_t(colors[i]) % kSvgPalette.size()];
    } else {
      out << "none";
    }
    out << "\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace qtc
