#pragma once

#include <string>

#include "colored_poset.hpp"
#include "dcomplete.hpp"

namespace skewhook {

/// ASCII picture of a subset. Grid posets draw one character per cell:
/// '#' member, 'x' peak, '.' other cell; rows top to bottom. Other posets get
/// an id list.
inline std::string render(const ColoredPoset &cp, ElementSet members, ElementSet peaks = {}) {
  const Poset &p = cp.poset;
  if (!p.has_cells()) {
    std::string out = set_string(p, members);
    if (!peaks.empty())
      out += " peaks " + set_string(p, peaks);
    return out + "\n";
  }
  int rows = 0, cols = 0;
  for (const auto &c : p.cells()) {
    rows = std::max(rows, c.i);
    cols = std::max(cols, c.j);
  }
  std::string out;
  for (int i = 1; i <= rows; ++i) {
    std::string line;
    for (int j = 1; j <= cols; ++j) {
      auto e = p.find_cell({i, j});
      line += !e ? ' ' : members.contains(*e) ? '#' : peaks.contains(*e) ? 'x' : '.';
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + "\n";
  }
  return out;
}

} // namespace skewhook
