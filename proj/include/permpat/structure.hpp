#pragma once

/// @file
/// Structural operations: direct and skew sums, sum/skew decomposition,
/// intervals, simplicity, inflation, substitution decomposition and extremal
/// points.

#include "permpat/permutation.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace permpat {

inline Permutation direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<Permutation::value_type> v(a.begin(), a.end());
  const auto shift = static_cast<Permutation::value_type>(a.size());
  for (auto x : b)
    v.push_back(x + shift);
  return Permutation(std::move(v), Permutation::unchecked_tag{});
}

inline Permutation skew_sum(const Permutation& a, const Permutation& b) {
  std::vector<Permutation::value_type> v;
  v.reserve(a.size() + b.size());
  const auto shift = static_cast<Permutation::value_type>(b.size());
  for (auto x : a)
    v.push_back(x + shift);
  v.insert(v.end(), b.begin(), b.end());
  return Permutation(std::move(v), Permutation::unchecked_tag{});
}

inline Permutation direct_sum(std::span<const Permutation> parts) {
  Permutation out;
  for (const auto& p : parts)
    out = direct_sum(out, p);
  return out;
}

inline Permutation skew_sum(std::span<const Permutation> parts) {
  Permutation out;
  for (const auto& p : parts)
    out = skew_sum(out, p);
  return out;
}

/// The unique list of sum-indecomposable components. Throws on empty input.
inline std::vector<Permutation> sum_decompose(const Permutation& p) {
  if (p.empty())
    throw std::invalid_argument("sum_decompose: empty permutation has no components");
  std::vector<Permutation> parts;
  std::size_t start = 0;
  Permutation::value_type prefix_max = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    prefix_max = std::max(prefix_max, p[i]);
    if (static_cast<std::size_t>(prefix_max) == i + 1) {
      parts.push_back(reduce(p.values().subspan(start, i + 1 - start)));
      start = i + 1;
    }
  }
  return parts;
}

/// The unique list of skew-indecomposable components. Throws on empty input.
inline std::vector<Permutation> skew_decompose(const Permutation& p) {
  if (p.empty())
    throw std::invalid_argument("skew_decompose: empty permutation has no components");
  const auto n = p.size();
  std::vector<Permutation> parts;
  std::size_t start = 0;
  auto prefix_min = static_cast<Permutation::value_type>(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    prefix_min = std::min(prefix_min, p[i]);
    if (static_cast<std::size_t>(prefix_min) == n - i) {
      parts.push_back(reduce(p.values().subspan(start, i + 1 - start)));
      start = i + 1;
    }
  }
  return parts;
}

inline bool is_sum_decomposable(const Permutation& p) {
  return p.size() >= 2 && sum_decompose(p).size() >= 2;
}

inline bool is_skew_decomposable(const Permutation& p) {
  return p.size() >= 2 && skew_decompose(p).size() >= 2;
}

/// Direct sum of decreasing permutations. The empty permutation is layered.
inline bool is_layered(const Permutation& p) {
  if (p.empty())
    return true;
  const auto parts = sum_decompose(p);
  return std::all_of(parts.begin(), parts.end(),
                     [](const Permutation& c) { return c.is_decreasing(); });
}

/// Inclusive 1-based position range whose values form a contiguous range.
struct Interval {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const noexcept { return end - start + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Every interval of length >= 1, sorted by (start, end). The empty interval
/// is not listed.
inline std::vector<Interval> intervals(const Permutation& p) {
  std::vector<Interval> out;
  const auto n = p.size();
  for (std::size_t s = 0; s < n; ++s) {
    auto lo = p[s], hi = p[s];
    for (std::size_t e = s; e < n; ++e) {
      lo = std::min(lo, p[e]);
      hi = std::max(hi, p[e]);
      if (static_cast<std::size_t>(hi - lo) == e - s)
        out.push_back({s + 1, e + 1});
    }
  }
  return out;
}

/// True iff the only intervals are the singletons and the whole range. Under
/// this raw criterion 1, 12 and 21 are simple (and so, vacuously, is the
/// empty permutation).
inline bool is_simple(const Permutation& p) {
  const auto n = p.size();
  for (std::size_t s = 0; s < n; ++s) {
    auto lo = p[s], hi = p[s];
    for (std::size_t e = s + 1; e < n; ++e) {
      lo = std::min(lo, p[e]);
      hi = std::max(hi, p[e]);
      if (static_cast<std::size_t>(hi - lo) == e - s && !(s == 0 && e + 1 == n))
        return false;
    }
  }
  return true;
}

/// skeleton[components]: entry i of the skeleton becomes an interval order
/// isomorphic to components[i].
inline Permutation inflate(const Permutation& skeleton, std::span<const Permutation> components) {
  const auto m = skeleton.size();
  if (components.size() != m)
    throw std::invalid_argument("inflate: expected " + std::to_string(m) +
                                " components, got " + std::to_string(components.size()));
  for (std::size_t i = 0; i < m; ++i)
    if (components[i].empty())
      throw std::invalid_argument("inflate: component " + std::to_string(i + 1) + " is empty");

  // offset[v] = total size of the components whose skeleton value is below v.
  std::vector<std::size_t> size_by_value(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i)
    size_by_value[static_cast<std::size_t>(skeleton[i])] = components[i].size();
  std::vector<std::size_t> offset(m + 2, 0);
  for (std::size_t v = 1; v <= m; ++v)
    offset[v + 1] = offset[v] + size_by_value[v];

  std::vector<Permutation::value_type> out;
  for (std::size_t i = 0; i < m; ++i) {
    const auto base = offset[static_cast<std::size_t>(skeleton[i])];
    for (auto x : components[i])
      out.push_back(static_cast<Permutation::value_type>(base) + x);
  }
  return Permutation(std::move(out), Permutation::unchecked_tag{});
}

inline Permutation inflate(const Permutation& skeleton,
                           std::initializer_list<Permutation> components) {
  return inflate(skeleton, std::span<const Permutation>(components.begin(), components.size()));
}

struct SubstitutionDecomposition {
  Permutation skeleton;
  std::vector<Permutation> components;

  friend bool operator==(const SubstitutionDecomposition&,
                         const SubstitutionDecomposition&) = default;
};

/// Expresses p (|p| >= 2) as the inflation of a simple skeleton of length at
/// least 2.
///
/// Sum-decomposable permutations get the increasing skeleton over their full
/// sum decomposition; skew-decomposable ones the decreasing skeleton over the
/// skew decomposition. Otherwise the skeleton is simple of length >= 4 and the
/// components are the maximal proper intervals, which partition the
/// positions.
inline SubstitutionDecomposition substitution_decompose(const Permutation& p) {
  if (p.size() < 2)
    throw std::invalid_argument(
        "substitution_decompose: a permutation of length < 2 is not an inflation of a "
        "shorter permutation");

  if (auto parts = sum_decompose(p); parts.size() >= 2) {
    const auto m = parts.size();
    return {Permutation::identity(m), std::move(parts)};
  }
  if (auto parts = skew_decompose(p); parts.size() >= 2) {
    const auto m = parts.size();
    return {Permutation::decreasing(m), std::move(parts)};
  }

  const auto n = p.size();
  std::vector<Permutation> components;
  std::vector<Permutation::value_type> representatives;
  std::size_t s = 0;
  while (s < n) {
    std::size_t best_end = s;
    auto lo = p[s], hi = p[s];
    for (std::size_t e = s + 1; e < n; ++e) {
      lo = std::min(lo, p[e]);
      hi = std::max(hi, p[e]);
      if (static_cast<std::size_t>(hi - lo) == e - s && !(s == 0 && e + 1 == n))
        best_end = e;
    }
    components.push_back(reduce(p.values().subspan(s, best_end + 1 - s)));
    representatives.push_back(p[s]);
    s = best_end + 1;
  }
  return {reduce(representatives), std::move(components)};
}

enum class ExtremalKind { LeftToRightMaxima, LeftToRightMinima, RightToLeftMaxima, RightToLeftMinima };

inline ExtremalKind parse_extremal_kind(std::string_view name) {
  if (name == "lr-max" || name == "LR-max" || name == "ltr-max")
    return ExtremalKind::LeftToRightMaxima;
  if (name == "lr-min" || name == "LR-min" || name == "ltr-min")
    return ExtremalKind::LeftToRightMinima;
  if (name == "rl-max" || name == "RL-max" || name == "rtl-max")
    return ExtremalKind::RightToLeftMaxima;
  if (name == "rl-min" || name == "RL-min" || name == "rtl-min")
    return ExtremalKind::RightToLeftMinima;
  throw std::invalid_argument("unknown extremal kind '" + std::string(name) +
                              "' (expected lr-max, lr-min, rl-max or rl-min)");
}

inline std::string_view name_of(ExtremalKind kind) {
  switch (kind) {
  case ExtremalKind::LeftToRightMaxima: return "lr-max";
  case ExtremalKind::LeftToRightMinima: return "lr-min";
  case ExtremalKind::RightToLeftMaxima: return "rl-max";
  case ExtremalKind::RightToLeftMinima: return "rl-min";
  }
  return "?";
}

/// 1-based positions of the requested extremal points, increasing.
inline std::vector<std::size_t> extremal(const Permutation& p, ExtremalKind kind) {
  const auto n = p.size();
  std::vector<std::size_t> out;
  const bool from_left =
      kind == ExtremalKind::LeftToRightMaxima || kind == ExtremalKind::LeftToRightMinima;
  const bool maxima =
      kind == ExtremalKind::LeftToRightMaxima || kind == ExtremalKind::RightToLeftMaxima;
  bool first = true;
  Permutation::value_type best = 0;
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t i = from_left ? step : n - 1 - step;
    const auto v = p[i];
    if (first || (maxima ? v > best : v < best)) {
      out.push_back(i + 1);
      best = v;
      first = false;
    }
  }
  if (!from_left)
    std::reverse(out.begin(), out.end());
  return out;
}

} // namespace permpat
