#pragma once

/// @file
/// The permutation value type, one-line notation parsing/formatting, and
/// reduction of distinct-integer words.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permpat {

/// Raised for any value that is not a rearrangement of 1..n, and for
/// malformed one-line notation.
class PermutationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A permutation of 1..n in one-line notation. Positions exposed through the
/// public API are 1-based to match the usual notation; `operator[]` is
/// 0-based like any other container.
///
/// The empty permutation (n = 0) is valid.
class Permutation {
public:
  using value_type = int;

  Permutation() = default;

  explicit Permutation(std::vector<value_type> values) : values_(std::move(values)) {
    validate();
  }

  Permutation(std::initializer_list<value_type> values)
      : Permutation(std::vector<value_type>(values)) {}

  static Permutation identity(std::size_t n) {
    std::vector<value_type> v(n);
    for (std::size_t i = 0; i < n; ++i)
      v[i] = static_cast<value_type>(i + 1);
    return Permutation(std::move(v), unchecked_tag{});
  }

  static Permutation decreasing(std::size_t n) {
    std::vector<value_type> v(n);
    for (std::size_t i = 0; i < n; ++i)
      v[i] = static_cast<value_type>(n - i);
    return Permutation(std::move(v), unchecked_tag{});
  }

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  value_type operator[](std::size_t i) const { return values_[i]; }
  /// Value at 1-based position `pos`.
  value_type at(std::size_t pos) const { return values_.at(pos - 1); }

  std::span<const value_type> values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  /// inverse()[v-1] is the 1-based position holding value v.
  Permutation inverse() const {
    std::vector<value_type> inv(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
      inv[static_cast<std::size_t>(values_[i] - 1)] = static_cast<value_type>(i + 1);
    return Permutation(std::move(inv), unchecked_tag{});
  }

  bool is_increasing() const noexcept {
    return std::is_sorted(values_.begin(), values_.end());
  }
  bool is_decreasing() const noexcept {
    return std::is_sorted(values_.begin(), values_.end(), std::greater<>{});
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.values_ <=> b.values_;
  }

  /// Skips validation; callers guarantee the invariant.
  struct unchecked_tag {};
  Permutation(std::vector<value_type> values, unchecked_tag) noexcept
      : values_(std::move(values)) {}

private:
  void validate() const {
    const auto n = values_.size();
    std::vector<bool> seen(n + 1, false);
    for (auto v : values_) {
      if (v < 1 || static_cast<std::size_t>(v) > n)
        throw PermutationError("malformed permutation: value " + std::to_string(v) +
                               " is outside 1.." + std::to_string(n));
      if (seen[static_cast<std::size_t>(v)])
        throw PermutationError("malformed permutation: duplicate value " + std::to_string(v));
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  std::vector<value_type> values_;
};

/// Canonical space-delimited one-line notation.
inline std::string to_string(const Permutation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i)
      out += ' ';
    out += std::to_string(p[i]);
  }
  return out;
}

/// Compact digit form ("2413"); falls back to delimited for n > 9.
inline std::string to_compact_string(const Permutation& p) {
  if (p.size() > 9)
    return to_string(p);
  std::string out;
  for (auto v : p)
    out += static_cast<char>('0' + v);
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << to_string(p);
}

namespace detail {

inline bool is_delimiter(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == ',';
}

/// Splits one-line notation into integer tokens. An undelimited string is read
/// digit-by-digit.
inline std::vector<long long> tokenize_one_line(std::string_view text) {
  std::vector<long long> out;
  const bool delimited = std::any_of(text.begin(), text.end(), is_delimiter);
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (is_delimiter(c)) {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw PermutationError("malformed permutation: unexpected character '" +
                             std::string(1, c) + "' at offset " + std::to_string(i));
    if (!delimited) {
      out.push_back(c - '0');
      ++i;
      continue;
    }
    long long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000'000)
        throw PermutationError("malformed permutation: value too large at offset " +
                               std::to_string(i));
      ++i;
    }
    if (i < text.size() && !is_delimiter(text[i]))
      throw PermutationError("malformed permutation: unexpected character '" +
                             std::string(1, text[i]) + "' at offset " + std::to_string(i));
    out.push_back(v);
  }
  return out;
}

} // namespace detail

/// Parses whitespace/comma-delimited integers, or compact digits when the
/// text has no delimiter at all (only meaningful for n <= 9).
inline Permutation parse_permutation(std::string_view text) {
  const auto tokens = detail::tokenize_one_line(text);
  std::vector<Permutation::value_type> values;
  values.reserve(tokens.size());
  for (auto t : tokens) {
    if (t < 1 || static_cast<std::size_t>(t) > tokens.size())
      throw PermutationError("malformed permutation: value " + std::to_string(t) +
                             " is outside 1.." + std::to_string(tokens.size()));
    values.push_back(static_cast<Permutation::value_type>(t));
  }
  return Permutation(std::move(values));
}

/// Order-isomorphic relabelling of a word of distinct integers onto 1..n.
template <typename T>
Permutation reduce(std::span<const T> word) {
  const auto n = word.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i)
    order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
  std::vector<Permutation::value_type> out(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (r > 0 && word[order[r]] == word[order[r - 1]])
      throw PermutationError("cannot reduce: duplicate entry " +
                             std::to_string(word[order[r]]));
    out[order[r]] = static_cast<Permutation::value_type>(r + 1);
  }
  return Permutation(std::move(out), Permutation::unchecked_tag{});
}

template <typename T>
Permutation reduce(const std::vector<T>& word) {
  return reduce(std::span<const T>(word));
}

inline Permutation reduce(std::initializer_list<long long> word) {
  return reduce(std::span<const long long>(word.begin(), word.size()));
}

/// Applies `fn` to every permutation of length n in lexicographic order.
template <typename Fn>
void for_each_permutation(std::size_t n, Fn&& fn) {
  std::vector<Permutation::value_type> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = static_cast<Permutation::value_type>(i + 1);
  do {
    fn(Permutation(v, Permutation::unchecked_tag{}));
  } while (std::next_permutation(v.begin(), v.end()));
}

inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](Permutation p) { out.push_back(std::move(p)); });
  return out;
}

} // namespace permpat
