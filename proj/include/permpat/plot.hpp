#pragma once

/// @file
/// ASCII rendering of permutation plots.

#include "permpat/containment.hpp"
#include "permpat/permutation.hpp"

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>

namespace permpat {

struct PlotOptions {
  char point = 'o';
  char highlight = '@';
  char empty = '.';
  /// 1-based positions drawn with the highlight mark.
  std::set<std::size_t> highlighted;
  std::size_t max_length = 99;
};

/// One row per value, highest value first, so values increase upward. Each
/// row is prefixed by its value and columns are separated by a space.
inline std::string plot(const Permutation& p, const PlotOptions& options = {}) {
  const auto n = p.size();
  if (n > options.max_length)
    throw std::invalid_argument("plot: length " + std::to_string(n) + " exceeds " +
                                std::to_string(options.max_length) +
                                "; use --json output instead");
  const auto label_width = std::to_string(n).size();
  std::string out;
  for (std::size_t row = n; row >= 1; --row) {
    auto label = std::to_string(row);
    out += std::string(label_width - label.size(), ' ') + label + " |";
    for (std::size_t col = 1; col <= n; ++col) {
      char mark = options.empty;
      if (static_cast<std::size_t>(p.at(col)) == row)
        mark = options.highlighted.count(col) ? options.highlight : options.point;
      out += ' ';
      out += mark;
    }
    out += '\n';
  }
  out += std::string(label_width, ' ') + " +" + std::string(2 * n, '-') + '\n';
  return out;
}

inline PlotOptions highlight(const Occurrence& occ) {
  PlotOptions o;
  o.highlighted.insert(occ.indices.begin(), occ.indices.end());
  return o;
}

} // namespace permpat
