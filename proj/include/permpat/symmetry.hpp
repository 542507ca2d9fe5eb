#pragma once

/// @file
/// The eight symmetries of the square acting on permutation plots.

#include "permpat/permutation.hpp"

#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permpat {

/// An element of the dihedral group of order 8, written as the composite
/// "inverse, then reverse, then complement" with each step optional.
struct Symmetry {
  bool inverse = false;
  bool reverse = false;
  bool complement = false;

  friend bool operator==(const Symmetry&, const Symmetry&) = default;

  static constexpr Symmetry identity() { return {}; }
};

inline constexpr std::array<Symmetry, 8> all_symmetries() {
  std::array<Symmetry, 8> out{};
  for (unsigned bits = 0; bits < 8; ++bits)
    out[bits] = Symmetry{(bits & 4u) != 0, (bits & 1u) != 0, (bits & 2u) != 0};
  return out;
}

/// Short name: "id", or a combination of "i", "r", "c" in application order.
inline std::string name_of(const Symmetry& s) {
  std::string out;
  if (s.inverse)
    out += 'i';
  if (s.reverse)
    out += 'r';
  if (s.complement)
    out += 'c';
  return out.empty() ? "id" : out;
}

/// Accepts "id"/"identity", the long names "reverse", "complement",
/// "inverse", "reverse-complement", or any string over {i, r, c} with each
/// letter at most once (order is irrelevant, application order is fixed).
inline Symmetry parse_symmetry(std::string_view text) {
  if (text == "id" || text == "identity")
    return {};
  if (text == "reverse")
    return {false, true, false};
  if (text == "complement")
    return {false, false, true};
  if (text == "inverse")
    return {true, false, false};
  if (text == "reverse-complement")
    return {false, true, true};
  Symmetry s;
  for (char c : text) {
    bool* flag = c == 'i' ? &s.inverse : c == 'r' ? &s.reverse : c == 'c' ? &s.complement : nullptr;
    if (flag == nullptr || *flag)
      throw std::invalid_argument("unknown symmetry '" + std::string(text) + "'");
    *flag = true;
  }
  if (text.empty())
    throw std::invalid_argument("empty symmetry name");
  return s;
}

inline Permutation reverse(const Permutation& p) {
  const auto v = p.values();
  return Permutation(std::vector<Permutation::value_type>(v.rbegin(), v.rend()),
                     Permutation::unchecked_tag{});
}

inline Permutation complement(const Permutation& p) {
  const auto top = static_cast<Permutation::value_type>(p.size() + 1);
  std::vector<Permutation::value_type> v;
  v.reserve(p.size());
  for (auto x : p)
    v.push_back(top - x);
  return Permutation(std::move(v), Permutation::unchecked_tag{});
}

inline Permutation inverse(const Permutation& p) { return p.inverse(); }

inline Permutation apply_symmetry(const Permutation& p, const Symmetry& s) {
  Permutation out = s.inverse ? inverse(p) : p;
  if (s.reverse)
    out = reverse(out);
  if (s.complement)
    out = complement(out);
  return out;
}

/// Distinct images of p under the eight symmetries, sorted.
inline std::vector<Permutation> symmetry_orbit(const Permutation& p) {
  std::set<Permutation> seen;
  for (const auto& s : all_symmetries())
    seen.insert(apply_symmetry(p, s));
  return {seen.begin(), seen.end()};
}

} // namespace permpat
