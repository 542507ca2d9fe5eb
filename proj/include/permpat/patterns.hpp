#pragma once

/// @file
/// Non-classical patterns. Mesh patterns are the matching engine; vincular,
/// bivincular and consecutive patterns compile to mesh patterns. Barred
/// patterns use a separate two-phase matcher.

#include "permpat/containment.hpp"
#include "permpat/permutation.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace permpat {

class PatternError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed pattern notation; `offset` is the 0-based character offset of
/// the problem in the input text.
class PatternParseError : public PatternError {
public:
  PatternParseError(const std::string& what, std::size_t offset)
      : PatternError(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// Lower-left corner (column, row) of a unit square in the pattern plot.
/// Column i lies between pattern positions i and i+1; row j between pattern
/// values j and j+1; 0 and k+1 stand for the plot boundary.
struct Cell {
  std::size_t column = 0;
  std::size_t row = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

class MeshPattern {
public:
  MeshPattern() = default;

  MeshPattern(Permutation pattern, const std::vector<Cell>& shaded)
      : pattern_(std::move(pattern)) {
    const auto k = pattern_.size();
    for (const auto& c : shaded) {
      if (c.column > k || c.row > k)
        throw PatternError("mesh cell (" + std::to_string(c.column) + "," +
                           std::to_string(c.row) + ") lies outside [0," + std::to_string(k) +
                           "]^2");
      shaded_.insert(c);
    }
  }

  const Permutation& pattern() const noexcept { return pattern_; }
  std::size_t size() const noexcept { return pattern_.size(); }
  const std::set<Cell>& shaded() const noexcept { return shaded_; }
  bool is_shaded(std::size_t column, std::size_t row) const {
    return shaded_.count({column, row}) != 0;
  }

  MeshPattern with_cell(Cell c) const {
    std::vector<Cell> cells(shaded_.begin(), shaded_.end());
    cells.push_back(c);
    return MeshPattern(pattern_, cells);
  }

  friend bool operator==(const MeshPattern&, const MeshPattern&) = default;

private:
  Permutation pattern_;
  std::set<Cell> shaded_;
};

struct VincularPattern {
  Permutation pattern;
  /// i in the set: pattern positions i and i+1 must be adjacent in the host.
  std::set<std::size_t> adjacent_positions;

  void validate() const {
    for (auto i : adjacent_positions)
      if (i < 1 || i + 1 > pattern.size())
        throw PatternError("vincular adjacency " + std::to_string(i) + " outside 1.." +
                           std::to_string(pattern.size() > 0 ? pattern.size() - 1 : 0));
  }
  friend bool operator==(const VincularPattern&, const VincularPattern&) = default;
};

struct BivincularPattern {
  Permutation pattern;
  std::set<std::size_t> adjacent_positions;
  /// v in the set: the host values matched to pattern values v and v+1 must be
  /// consecutive integers.
  std::set<std::size_t> adjacent_values;

  void validate() const {
    VincularPattern{pattern, adjacent_positions}.validate();
    for (auto v : adjacent_values)
      if (v < 1 || v + 1 > pattern.size())
        throw PatternError("bivincular value adjacency " + std::to_string(v) + " outside 1.." +
                           std::to_string(pattern.size() > 0 ? pattern.size() - 1 : 0));
  }
  friend bool operator==(const BivincularPattern&, const BivincularPattern&) = default;
};

/// All pattern entries must occur contiguously.
inline VincularPattern consecutive_pattern(Permutation pattern) {
  VincularPattern vp{std::move(pattern), {}};
  for (std::size_t i = 1; i < vp.pattern.size(); ++i)
    vp.adjacent_positions.insert(i);
  return vp;
}

inline MeshPattern compile_bivincular(const BivincularPattern& bp) {
  bp.validate();
  const auto k = bp.pattern.size();
  std::vector<Cell> cells;
  for (auto i : bp.adjacent_positions)
    for (std::size_t j = 0; j <= k; ++j)
      cells.push_back({i, j});
  for (auto v : bp.adjacent_values)
    for (std::size_t i = 0; i <= k; ++i)
      cells.push_back({i, v});
  return MeshPattern(bp.pattern, cells);
}

inline MeshPattern compile_vincular(const VincularPattern& vp) {
  return compile_bivincular({vp.pattern, vp.adjacent_positions, {}});
}

namespace detail {

/// True iff no host point lies strictly inside any shaded region for the
/// occurrence at 0-based host indices `idx`.
inline bool mesh_regions_empty(const Permutation& host, const MeshPattern& mp,
                               std::span<const std::size_t> idx,
                               const std::vector<std::size_t>& position_of_value) {
  const auto k = mp.size();
  const auto n = host.size();
  // Sentinel-extended boundaries, 1-based host coordinates.
  std::vector<std::size_t> cols(k + 2), rows(k + 2);
  cols[0] = rows[0] = 0;
  cols[k + 1] = rows[k + 1] = n + 1;
  for (std::size_t t = 0; t < k; ++t)
    cols[t + 1] = idx[t] + 1;
  for (std::size_t v = 1; v <= k; ++v)
    rows[v] = static_cast<std::size_t>(host[idx[position_of_value[v]]]);
  for (const auto& c : mp.shaded()) {
    for (std::size_t x = cols[c.column] + 1; x < cols[c.column + 1]; ++x) {
      const auto y = static_cast<std::size_t>(host[x - 1]);
      if (y > rows[c.row] && y < rows[c.row + 1])
        return false;
    }
  }
  return true;
}

} // namespace detail

/// Classical occurrences with every shaded region empty, sorted by index
/// tuple.
inline std::vector<Occurrence> mesh_occurrences(const Permutation& host, const MeshPattern& mp) {
  const auto k = mp.size();
  std::vector<std::size_t> position_of_value(k + 1, 0);
  for (std::size_t t = 0; t < k; ++t)
    position_of_value[static_cast<std::size_t>(mp.pattern()[t])] = t;

  std::vector<Occurrence> out;
  search_occurrences(host.values(), mp.pattern().values(), {},
                     [&](std::span<const std::size_t> idx) {
                       if (detail::mesh_regions_empty(host, mp, idx, position_of_value)) {
                         Occurrence occ;
                         for (auto i : idx)
                           occ.indices.push_back(i + 1);
                         out.push_back(std::move(occ));
                       }
                       return false;
                     });
  return out;
}

inline bool mesh_contains(const Permutation& host, const MeshPattern& mp) {
  const auto k = mp.size();
  std::vector<std::size_t> position_of_value(k + 1, 0);
  for (std::size_t t = 0; t < k; ++t)
    position_of_value[static_cast<std::size_t>(mp.pattern()[t])] = t;
  return search_occurrences(host.values(), mp.pattern().values(), {},
                            [&](std::span<const std::size_t> idx) {
                              return detail::mesh_regions_empty(host, mp, idx, position_of_value);
                            });
}

struct VincularMatch {
  bool contained = false;
  std::size_t count = 0;
};

inline VincularMatch vincular_contains(const Permutation& host, const VincularPattern& vp) {
  const auto n = mesh_occurrences(host, compile_vincular(vp)).size();
  return {n > 0, n};
}

inline VincularMatch bivincular_contains(const Permutation& host, const BivincularPattern& bp) {
  const auto n = mesh_occurrences(host, compile_bivincular(bp)).size();
  return {n > 0, n};
}

class BarredPattern {
public:
  /// `barred` holds 1-based positions into `pattern`; it must be a nonempty
  /// proper subset.
  BarredPattern(Permutation pattern, std::set<std::size_t> barred)
      : pattern_(std::move(pattern)), barred_(std::move(barred)) {
    for (auto b : barred_)
      if (b < 1 || b > pattern_.size())
        throw PatternError("barred position " + std::to_string(b) + " outside 1.." +
                           std::to_string(pattern_.size()));
    if (barred_.empty())
      throw PatternError("barred pattern needs at least one barred entry");
    if (barred_.size() == pattern_.size())
      throw PatternError("barred pattern needs at least one unbarred entry");
    std::vector<Permutation::value_type> kept;
    for (std::size_t i = 1; i <= pattern_.size(); ++i)
      if (!barred_.count(i))
        kept.push_back(pattern_.at(i));
    effective_ = reduce(kept);
  }

  /// All entries, bars removed.
  const Permutation& pattern() const noexcept { return pattern_; }
  const std::set<std::size_t>& barred() const noexcept { return barred_; }
  /// The reduction of the unbarred entries.
  const Permutation& effective() const noexcept { return effective_; }

  friend bool operator==(const BarredPattern&, const BarredPattern&) = default;

private:
  Permutation pattern_;
  std::set<std::size_t> barred_;
  Permutation effective_;
};

/// True iff some occurrence of the unbarred part is not the restriction of
/// an occurrence of the full pattern.
inline bool barred_contains(const Permutation& host, const BarredPattern& bp) {
  const auto& full = bp.pattern();
  std::vector<std::size_t> unbarred;
  for (std::size_t i = 1; i <= full.size(); ++i)
    if (!bp.barred().count(i))
      unbarred.push_back(i - 1);

  std::vector<std::size_t> pins(full.size());
  return search_occurrences(
      host.values(), bp.effective().values(), {}, [&](std::span<const std::size_t> idx) {
        std::fill(pins.begin(), pins.end(), detail::no_pin);
        for (std::size_t t = 0; t < idx.size(); ++t)
          pins[unbarred[t]] = idx[t];
        const bool extends =
            search_occurrences(host.values(), full.values(), std::span<const std::size_t>(pins),
                               [](std::span<const std::size_t>) { return true; });
        return !extends;
      });
}

inline bool barred_avoids(const Permutation& host, const BarredPattern& bp) {
  return !barred_contains(host, bp);
}

// ---------------------------------------------------------------------------
// Notation

using Pattern = std::variant<Permutation, VincularPattern, BivincularPattern, BarredPattern,
                             MeshPattern>;

namespace detail {

struct NotationToken {
  long long value;
  std::size_t offset;
  bool dash_before;   // a '-' separates it from the previous value
  bool bar;           // trailing '`' or leading '~'
};

/// Shared scanner for dash (vincular) and bar notations. In compact mode
/// (no whitespace or comma anywhere) each digit is one value.
inline std::vector<NotationToken> scan_notation(std::string_view text, bool allow_dash,
                                                bool allow_bar) {
  const bool delimited = std::any_of(text.begin(), text.end(), is_delimiter);
  std::vector<NotationToken> out;
  bool pending_dash = false;
  bool pending_prefix_bar = false;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (is_delimiter(c)) {
      ++i;
      continue;
    }
    if (c == '-' && allow_dash) {
      if (out.empty() || pending_dash)
        throw PatternParseError("unexpected '-'", i);
      pending_dash = true;
      ++i;
      continue;
    }
    if (c == '~' && allow_bar) {
      if (pending_prefix_bar)
        throw PatternParseError("unexpected '~'", i);
      pending_prefix_bar = true;
      ++i;
      continue;
    }
    if (c == '`' && allow_bar) {
      if (out.empty() || out.back().bar || pending_prefix_bar)
        throw PatternParseError("unexpected '`'", i);
      out.back().bar = true;
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw PatternParseError(std::string("unexpected character '") + c + "'", i);
    const std::size_t start = i;
    long long v = 0;
    if (delimited) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1'000'000'000)
          throw PatternParseError("value too large", start);
        ++i;
      }
    } else {
      v = c - '0';
      ++i;
    }
    out.push_back({v, start, pending_dash, pending_prefix_bar});
    pending_dash = false;
    pending_prefix_bar = false;
  }
  if (pending_dash)
    throw PatternParseError("dangling '-'", text.size());
  if (pending_prefix_bar)
    throw PatternParseError("dangling '~'", text.size());
  return out;
}

inline Permutation permutation_from_tokens(const std::vector<NotationToken>& tokens) {
  std::vector<Permutation::value_type> values;
  std::vector<bool> seen(tokens.size() + 1, false);
  for (const auto& t : tokens) {
    if (t.value < 1 || static_cast<std::size_t>(t.value) > tokens.size())
      throw PatternParseError("value " + std::to_string(t.value) + " is outside 1.." +
                                  std::to_string(tokens.size()),
                              t.offset);
    if (seen[static_cast<std::size_t>(t.value)])
      throw PatternParseError("duplicate value " + std::to_string(t.value), t.offset);
    seen[static_cast<std::size_t>(t.value)] = true;
    values.push_back(static_cast<Permutation::value_type>(t.value));
  }
  return Permutation(std::move(values));
}

template <typename T>
std::set<T> json_index_set(const nlohmann::json& j, const char* key) {
  std::set<T> out;
  if (!j.contains(key))
    return out;
  for (const auto& x : j.at(key))
    out.insert(x.get<T>());
  return out;
}

} // namespace detail

/// Dash notation: '-' between two terms means they need not be adjacent; no
/// dash means they must be. So "213" is fully consecutive here.
inline VincularPattern parse_vincular(std::string_view text) {
  const auto tokens = detail::scan_notation(text, true, false);
  VincularPattern vp{detail::permutation_from_tokens(tokens), {}};
  for (std::size_t t = 1; t < tokens.size(); ++t)
    if (!tokens[t].dash_before)
      vp.adjacent_positions.insert(t);
  return vp;
}

/// Bars as a trailing backtick ("53`21`4") or a leading tilde ("5~32~14").
inline BarredPattern parse_barred(std::string_view text) {
  const auto tokens = detail::scan_notation(text, false, true);
  auto perm = detail::permutation_from_tokens(tokens);
  std::set<std::size_t> barred;
  for (std::size_t t = 0; t < tokens.size(); ++t)
    if (tokens[t].bar)
      barred.insert(t + 1);
  return BarredPattern(std::move(perm), std::move(barred));
}

/// JSON documents: {"perm": [...]} plus at most one of "shaded" (mesh),
/// "barred" (1-based positions) or "adjacent_positions"/"adjacent_values"
/// (bivincular; vincular when only positions are given).
inline Pattern pattern_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("perm"))
    throw PatternError("pattern JSON must be an object with a \"perm\" array");
  auto perm = Permutation(j.at("perm").get<std::vector<Permutation::value_type>>());
  const bool mesh = j.contains("shaded");
  const bool barred = j.contains("barred");
  const bool adjacency = j.contains("adjacent_positions") || j.contains("adjacent_values");
  if (int(mesh) + int(barred) + int(adjacency) > 1)
    throw PatternError("pattern JSON mixes shaded, barred and adjacency keys");
  if (mesh) {
    std::vector<Cell> cells;
    for (const auto& c : j.at("shaded")) {
      if (!c.is_array() || c.size() != 2)
        throw PatternError("mesh cell must be a pair [i, j]");
      const auto col = c[0].get<long long>();
      const auto row = c[1].get<long long>();
      if (col < 0 || row < 0)
        throw PatternError("mesh cell (" + std::to_string(col) + "," + std::to_string(row) +
                           ") has a negative coordinate");
      cells.push_back({static_cast<std::size_t>(col), static_cast<std::size_t>(row)});
    }
    return MeshPattern(std::move(perm), cells);
  }
  if (barred)
    return BarredPattern(std::move(perm), detail::json_index_set<std::size_t>(j, "barred"));
  if (adjacency) {
    BivincularPattern bp{std::move(perm),
                         detail::json_index_set<std::size_t>(j, "adjacent_positions"),
                         detail::json_index_set<std::size_t>(j, "adjacent_values")};
    bp.validate();
    if (bp.adjacent_values.empty())
      return VincularPattern{std::move(bp.pattern), std::move(bp.adjacent_positions)};
    return bp;
  }
  return perm;
}

inline MeshPattern parse_mesh_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw PatternParseError("invalid JSON", e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!j.contains("shaded"))
    j["shaded"] = nlohmann::json::array();
  return std::get<MeshPattern>(pattern_from_json(j));
}

/// Auto-detecting parser: JSON when the text starts with '{'; barred when it
/// carries '`' or '~'; vincular when it carries '-'; classical otherwise.
inline Pattern parse_pattern(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw PatternParseError("invalid JSON", e.byte > 0 ? e.byte - 1 : 0);
    }
    try {
      return pattern_from_json(j);
    } catch (const nlohmann::json::exception& e) {
      throw PatternError(std::string("malformed pattern JSON: ") + e.what());
    }
  }
  if (text.find_first_of("`~") != std::string_view::npos)
    return parse_barred(text);
  if (text.find('-') != std::string_view::npos)
    return parse_vincular(text);
  return detail::permutation_from_tokens(detail::scan_notation(text, false, false));
}

inline nlohmann::json to_json(const MeshPattern& mp) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : mp.shaded())
    cells.push_back({c.column, c.row});
  return {{"perm", std::vector<int>(mp.pattern().begin(), mp.pattern().end())},
          {"shaded", cells}};
}

} // namespace permpat
