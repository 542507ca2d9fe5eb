#pragma once

/// @file
/// Classical pattern containment: depth-first position assignment with
/// value-window pruning.

#include "permpat/permutation.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace permpat {

/// Strictly increasing 1-based host positions, one per pattern entry.
struct Occurrence {
  std::vector<std::size_t> indices;

  std::size_t size() const noexcept { return indices.size(); }
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence& a, const Occurrence& b) {
    return a.indices <=> b.indices;
  }
};

inline std::string to_string(const Occurrence& occ) {
  std::string out = "(";
  for (std::size_t i = 0; i < occ.indices.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(occ.indices[i]);
  }
  return out + ")";
}

namespace detail {

inline constexpr std::size_t no_pin = static_cast<std::size_t>(-1);

/// For each pattern position t, the earlier positions holding the nearest
/// smaller and nearest larger pattern value. These bound the host value that
/// position t may take once earlier positions are assigned.
struct WindowPlan {
  std::vector<std::size_t> below;
  std::vector<std::size_t> above;

  template <typename P>
  explicit WindowPlan(std::span<const P> pattern)
      : below(pattern.size(), no_pin), above(pattern.size(), no_pin) {
    for (std::size_t t = 0; t < pattern.size(); ++t) {
      for (std::size_t s = 0; s < t; ++s) {
        if (pattern[s] < pattern[t] &&
            (below[t] == no_pin || pattern[s] > pattern[below[t]]))
          below[t] = s;
        if (pattern[s] > pattern[t] &&
            (above[t] == no_pin || pattern[s] < pattern[above[t]]))
          above[t] = s;
      }
    }
  }
};

template <typename H, typename P, typename Visit>
class OccurrenceSearch {
public:
  OccurrenceSearch(std::span<const H> host, std::span<const P> pattern,
                   std::span<const std::size_t> pins, Visit& visit)
      : host_(host), pattern_(pattern), pins_(pins), plan_(pattern),
        chosen_(pattern.size()), visit_(visit) {}

  /// Returns true if the visitor asked to stop.
  bool run() {
    if (pattern_.size() > host_.size())
      return false;
    return extend(0, 0);
  }

private:
  bool extend(std::size_t t, std::size_t first) {
    const std::size_t k = pattern_.size();
    if (t == k)
      return visit_(std::span<const std::size_t>(chosen_));
    const std::size_t last = host_.size() - (k - t); // inclusive upper index
    const bool has_lo = plan_.below[t] != no_pin;
    const bool has_hi = plan_.above[t] != no_pin;
    const H lo = has_lo ? host_[chosen_[plan_.below[t]]] : H{};
    const H hi = has_hi ? host_[chosen_[plan_.above[t]]] : H{};

    std::size_t from = first;
    std::size_t to = last;
    if (!pins_.empty() && pins_[t] != no_pin) {
      if (pins_[t] < first || pins_[t] > last)
        return false;
      from = to = pins_[t];
    }
    for (std::size_t i = from; i <= to; ++i) {
      const H v = host_[i];
      if ((has_lo && v < lo) || (has_hi && v > hi))
        continue;
      chosen_[t] = i;
      if (extend(t + 1, i + 1))
        return true;
    }
    return false;
  }

  std::span<const H> host_;
  std::span<const P> pattern_;
  std::span<const std::size_t> pins_;
  WindowPlan plan_;
  std::vector<std::size_t> chosen_;
  Visit& visit_;
};

} // namespace detail

/// Calls `visit(indices)` with 0-based host indices for every occurrence of
/// `pattern` in `host`, in lexicographic order of the index tuple, until
/// `visit` returns true. `pins`, when nonempty, has one entry per pattern
/// position: either a 0-based host index that position must map to, or
/// `detail::no_pin`. Returns true if the visitor stopped the search.
template <typename H, typename P, typename Visit>
bool search_occurrences(std::span<const H> host, std::span<const P> pattern,
                        std::span<const std::size_t> pins, Visit&& visit) {
  detail::OccurrenceSearch<H, P, std::remove_reference_t<Visit>> search(host, pattern, pins,
                                                                        visit);
  return search.run();
}

template <typename H, typename P>
bool contains_values(std::span<const H> host, std::span<const P> pattern) {
  return search_occurrences(host, pattern, {},
                            [](std::span<const std::size_t>) { return true; });
}

/// Containment restricted to occurrences that use host index `host_index` for
/// the pattern's maximum entry. When `host_index` holds the host maximum,
/// these are exactly the occurrences that involve that point.
template <typename H, typename P>
bool contains_through_maximum(std::span<const H> host, std::span<const P> pattern,
                              std::size_t host_index) {
  if (pattern.empty())
    return true;
  std::vector<std::size_t> pins(pattern.size(), detail::no_pin);
  std::size_t max_pos = 0;
  for (std::size_t t = 1; t < pattern.size(); ++t)
    if (pattern[t] > pattern[max_pos])
      max_pos = t;
  pins[max_pos] = host_index;
  return search_occurrences(host, pattern, std::span<const std::size_t>(pins),
                            [](std::span<const std::size_t>) { return true; });
}

inline bool contains(const Permutation& host, const Permutation& pattern) {
  return contains_values(host.values(), pattern.values());
}

inline bool avoids(const Permutation& host, const Permutation& pattern) {
  return !contains(host, pattern);
}

/// The lexicographically least occurrence, if any.
inline std::optional<Occurrence> find_occurrence(const Permutation& host,
                                                 const Permutation& pattern) {
  std::optional<Occurrence> found;
  search_occurrences(host.values(), pattern.values(), {},
                     [&](std::span<const std::size_t> idx) {
                       Occurrence occ;
                       occ.indices.reserve(idx.size());
                       for (auto i : idx)
                         occ.indices.push_back(i + 1);
                       found = std::move(occ);
                       return true;
                     });
  return found;
}

/// All occurrences, sorted lexicographically by index tuple.
inline std::vector<Occurrence> occurrences(const Permutation& host, const Permutation& pattern) {
  std::vector<Occurrence> out;
  search_occurrences(host.values(), pattern.values(), {},
                     [&](std::span<const std::size_t> idx) {
                       Occurrence occ;
                       occ.indices.reserve(idx.size());
                       for (auto i : idx)
                         occ.indices.push_back(i + 1);
                       out.push_back(std::move(occ));
                       return false;
                     });
  return out;
}

inline std::size_t count_occurrences(const Permutation& host, const Permutation& pattern) {
  std::size_t count = 0;
  search_occurrences(host.values(), pattern.values(), {},
                     [&](std::span<const std::size_t>) {
                       ++count;
                       return false;
                     });
  return count;
}

/// Host values at the positions of `occ`.
inline std::vector<Permutation::value_type> occurrence_values(const Permutation& host,
                                                              const Occurrence& occ) {
  std::vector<Permutation::value_type> out;
  out.reserve(occ.indices.size());
  for (auto i : occ.indices)
    out.push_back(host.at(i));
  return out;
}

} // namespace permpat
