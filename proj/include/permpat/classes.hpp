#pragma once

/// @file
/// Classical permutation classes Av(B): basis validation, enumeration by
/// insertion of a new maximum, growth-rate proxies and Wilf comparisons.

#include "permpat/containment.hpp"
#include "permpat/permutation.hpp"
#include "permpat/symmetry.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace permpat {

class ClassError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A finite antichain of forbidden patterns, stored sorted and duplicate-free.
class Basis {
public:
  Basis() = default;

  const std::vector<Permutation>& patterns() const noexcept { return patterns_; }
  bool empty() const noexcept { return patterns_.empty(); }
  std::size_t size() const noexcept { return patterns_.size(); }

  friend bool operator==(const Basis&, const Basis&) = default;
  friend Basis validate_basis(std::vector<Permutation> patterns);

private:
  explicit Basis(std::vector<Permutation> p) : patterns_(std::move(p)) {}
  std::vector<Permutation> patterns_;
};

/// Accepts the patterns iff they are pairwise incomparable under containment.
/// Exact duplicates are merged.
inline Basis validate_basis(std::vector<Permutation> patterns) {
  std::sort(patterns.begin(), patterns.end());
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
  for (std::size_t a = 0; a < patterns.size(); ++a)
    for (std::size_t b = 0; b < patterns.size(); ++b) {
      if (a == b || patterns[a].size() > patterns[b].size())
        continue;
      if (contains(patterns[b], patterns[a]))
        throw ClassError("basis is not an antichain: " + to_compact_string(patterns[a]) +
                         " is contained in " + to_compact_string(patterns[b]));
    }
  return Basis(std::move(patterns));
}

/// Comma-separated patterns, e.g. "123,132". Empty text (or "{}") is the
/// empty basis. Patterns longer than 9 use spaces inside, e.g. "1 2 10 ...".
inline Basis parse_basis(std::string_view text) {
  std::vector<Permutation> patterns;
  if (text == "{}" || text == "none")
    return validate_basis({});
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    const auto first = piece.find_first_not_of(" \t");
    if (first != std::string_view::npos)
      patterns.push_back(parse_permutation(piece));
    else if (comma != std::string_view::npos || !patterns.empty())
      throw ClassError("empty pattern in basis '" + std::string(text) + "'");
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return validate_basis(std::move(patterns));
}

inline std::string to_string(const Basis& b) {
  std::string out;
  for (const auto& p : b.patterns())
    out += (out.empty() ? "" : ",") + to_compact_string(p);
  return out;
}

inline Basis apply_symmetry(const Basis& b, const Symmetry& s) {
  std::vector<Permutation> img;
  for (const auto& p : b.patterns())
    img.push_back(apply_symmetry(p, s));
  return validate_basis(std::move(img));
}

inline bool avoids_all(const Permutation& p, const Basis& b) {
  return std::none_of(b.patterns().begin(), b.patterns().end(),
                      [&](const Permutation& q) { return contains(p, q); });
}

enum class EnumerationMode { CountsOnly, WithWitnesses };

struct EnumerationOptions {
  EnumerationMode mode = EnumerationMode::CountsOnly;
  /// Maximum number of stored permutations: the live frontier in counts-only
  /// mode, the total over all levels with witnesses.
  std::uint64_t budget = 10'000'000;
  unsigned threads = 1;
  /// Re-check only occurrences through the inserted maximum. Disabling falls
  /// back to a full avoidance test of every child.
  bool restrict_to_new_point = true;
};

struct ClassEnumeration {
  Basis basis;
  std::size_t requested_max = 0;
  /// counts[n] = |Av_n(B)| for n = 0..counts.size()-1.
  std::vector<std::uint64_t> counts;
  /// Present in WithWitnesses mode; witnesses[n] is Av_n(B), sorted.
  std::vector<std::vector<Permutation>> witnesses;
  /// True when the budget stopped the run before requested_max; counts then
  /// covers only the fully enumerated lengths.
  bool truncated = false;

  std::size_t max_length() const { return counts.empty() ? 0 : counts.size() - 1; }
};

namespace detail {

/// One enumeration level: `count` permutations of `length`, stored flat.
struct Level {
  std::size_t length = 0;
  std::vector<std::uint8_t> data;

  std::size_t count() const { return length == 0 ? 0 : data.size() / length; }
  std::span<const std::uint8_t> at(std::size_t i) const {
    return {data.data() + i * length, length};
  }
};

inline void sort_level(Level& level) {
  const auto n = level.length;
  const auto m = level.count();
  if (n == 0 || m < 2)
    return;
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(level.data.begin() + a * n, level.data.begin() + (a + 1) * n,
                                        level.data.begin() + b * n, level.data.begin() + (b + 1) * n);
  });
  std::vector<std::uint8_t> sorted(level.data.size());
  for (std::size_t r = 0; r < m; ++r)
    std::copy_n(level.data.begin() + order[r] * n, n, sorted.begin() + r * n);
  level.data = std::move(sorted);
}

/// Children of parents [begin, end) that avoid the basis, in parent order then
/// gap order.
inline std::vector<std::uint8_t> expand(const Level& parents, std::size_t begin, std::size_t end,
                                        const std::vector<std::vector<std::uint8_t>>& basis,
                                        bool restrict_to_new_point,
                                        std::atomic<std::uint64_t>& stored,
                                        std::uint64_t budget, std::atomic<bool>& abort) {
  const auto n = parents.length;
  const auto top = static_cast<std::uint8_t>(n + 1);
  std::vector<std::uint8_t> out;
  std::vector<std::uint8_t> child(n + 1);
  for (std::size_t i = begin; i < end; ++i) {
    if (abort.load(std::memory_order_relaxed))
      return out;
    const auto parent = parents.at(i);
    for (std::size_t gap = 0; gap <= n; ++gap) {
      std::copy_n(parent.begin(), gap, child.begin());
      child[gap] = top;
      std::copy(parent.begin() + static_cast<std::ptrdiff_t>(gap), parent.end(),
                child.begin() + static_cast<std::ptrdiff_t>(gap) + 1);
      const std::span<const std::uint8_t> view(child);
      bool ok = true;
      for (const auto& b : basis) {
        if (b.size() > n + 1)
          continue;
        const std::span<const std::uint8_t> pat(b);
        if (restrict_to_new_point ? contains_through_maximum(view, pat, gap)
                                  : contains_values(view, pat)) {
          ok = false;
          break;
        }
      }
      if (!ok)
        continue;
      if (stored.fetch_add(1, std::memory_order_relaxed) + 1 > budget) {
        abort.store(true, std::memory_order_relaxed);
        return out;
      }
      out.insert(out.end(), child.begin(), child.end());
    }
  }
  return out;
}

} // namespace detail

/// Enumerates Av_n(B) for n = 0..max_length. Av_{n+1}(B) is obtained by
/// inserting n+1 into every gap of every member of Av_n(B) and keeping the
/// children that avoid B. A child can only contain a basis pattern through
/// the inserted point, so by default only those occurrences are searched.
inline ClassEnumeration enumerate(const Basis& basis, std::size_t max_length,
                                  const EnumerationOptions& options = {}) {
  if (max_length > 254)
    throw ClassError("enumerate: lengths above 254 are not supported");

  ClassEnumeration result;
  result.basis = basis;
  result.requested_max = max_length;
  const bool keep = options.mode == EnumerationMode::WithWitnesses;

  const bool has_empty_pattern =
      std::any_of(basis.patterns().begin(), basis.patterns().end(),
                  [](const Permutation& p) { return p.empty(); });
  if (has_empty_pattern) {
    result.counts.assign(max_length + 1, 0);
    if (keep)
      result.witnesses.assign(max_length + 1, {});
    return result;
  }

  std::vector<std::vector<std::uint8_t>> flat_basis;
  for (const auto& p : basis.patterns())
    flat_basis.emplace_back(p.begin(), p.end());

  auto to_permutations = [](const detail::Level& level) {
    std::vector<Permutation> out;
    out.reserve(level.count());
    for (std::size_t i = 0; i < level.count(); ++i) {
      const auto v = level.at(i);
      out.emplace_back(std::vector<Permutation::value_type>(v.begin(), v.end()),
                       Permutation::unchecked_tag{});
    }
    return out;
  };

  detail::Level level; // length 0: the empty permutation
  level.length = 0;
  std::uint64_t total_stored = 1;
  result.counts.push_back(1);
  if (keep)
    result.witnesses.push_back({Permutation{}});

  for (std::size_t n = 0; n < max_length; ++n) {
    const std::size_t parents = n == 0 ? 1 : level.count();
    const std::uint64_t budget_left =
        keep ? (options.budget > total_stored ? options.budget - total_stored : 0) : options.budget;
    std::atomic<std::uint64_t> stored{0};
    std::atomic<bool> abort{false};

    auto run_chunk = [&](std::size_t b, std::size_t e) {
      if (n == 0) {
        // Only child of the empty permutation is 1.
        std::vector<std::uint8_t> child{1};
        for (const auto& pat : flat_basis)
          if (pat.size() == 1)
            return std::vector<std::uint8_t>{};
        if (stored.fetch_add(1) + 1 > budget_left) {
          abort = true;
          return std::vector<std::uint8_t>{};
        }
        return child;
      }
      return detail::expand(level, b, e, flat_basis, options.restrict_to_new_point, stored,
                            budget_left, abort);
    };

    std::vector<std::vector<std::uint8_t>> chunks;
    const unsigned workers =
        std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(parents)));
    if (workers == 1) {
      chunks.push_back(run_chunk(0, parents));
    } else {
      chunks.resize(workers);
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        const std::size_t b = parents * w / workers;
        const std::size_t e = parents * (w + 1) / workers;
        pool.emplace_back([&, w, b, e] { chunks[w] = run_chunk(b, e); });
      }
      for (auto& t : pool)
        t.join();
    }
    if (abort.load()) {
      result.truncated = true;
      break;
    }

    detail::Level next;
    next.length = n + 1;
    for (auto& c : chunks)
      next.data.insert(next.data.end(), c.begin(), c.end());
    detail::sort_level(next);
    result.counts.push_back(next.count());
    total_stored += next.count();
    if (keep)
      result.witnesses.push_back(to_permutations(next));
    level = std::move(next);
    if (level.count() == 0) {
      // Down-closed: every longer level is empty too.
      while (result.counts.size() <= max_length) {
        result.counts.push_back(0);
        if (keep)
          result.witnesses.push_back({});
      }
      break;
    }
  }
  return result;
}

/// Counts |{p in S_n : pred(p)}| for n = 0..max_length by filtering all of
/// S_n. Works for any avoidance predicate, including non-classical ones.
template <typename Pred>
std::vector<std::uint64_t> count_by_filter(std::size_t max_length, Pred&& pred) {
  std::vector<std::uint64_t> counts;
  for (std::size_t n = 0; n <= max_length; ++n) {
    std::uint64_t c = 0;
    for_each_permutation(n, [&](const Permutation& p) { c += pred(p) ? 1 : 0; });
    counts.push_back(c);
  }
  return counts;
}

struct GrowthEstimate {
  /// proxy[n] = counts[n]^(1/n) for n >= 1; proxy[0] is unused (0).
  std::vector<double> proxy;
  std::size_t window_first = 0;
  std::size_t window_last = 0;
  double upper = 0.0;
  double lower = 0.0;
  /// The class of all permutations: its counts grow faster than any
  /// exponential, so the proxies increase without bound.
  bool diverging = false;
  /// Some level is empty, so every longer level is empty and the growth rate
  /// is 0.
  bool finite_class = false;
};

/// Finite-prefix proxies for the upper and lower growth rates: the max and
/// min of counts[n]^(1/n) over the trailing `window` lengths. These are
/// estimates only; no limit is inferred from them.
inline GrowthEstimate growth_estimates(const std::vector<std::uint64_t>& counts,
                                       std::size_t window, bool all_permutations) {
  if (window < 1)
    throw ClassError("growth_estimates: window must be at least 1");
  if (counts.size() < 2)
    throw ClassError("growth_estimates: counts for n >= 1 are required");
  GrowthEstimate g;
  g.proxy.assign(counts.size(), 0.0);
  for (std::size_t n = 1; n < counts.size(); ++n)
    g.proxy[n] = std::pow(static_cast<double>(counts[n]), 1.0 / static_cast<double>(n));
  g.finite_class = std::find(counts.begin() + 1, counts.end(), 0u) != counts.end();
  g.diverging = all_permutations;
  g.window_last = counts.size() - 1;
  g.window_first = g.window_last + 1 > window ? g.window_last + 1 - window : 1;
  g.window_first = std::max<std::size_t>(g.window_first, 1);
  if (g.finite_class) {
    g.upper = g.lower = 0.0;
    return g;
  }
  const auto first = g.proxy.begin() + static_cast<std::ptrdiff_t>(g.window_first);
  const auto last = g.proxy.end();
  g.upper = *std::max_element(first, last);
  g.lower = *std::min_element(first, last);
  return g;
}

inline GrowthEstimate growth_estimates(const ClassEnumeration& e, std::size_t window) {
  return growth_estimates(e.counts, window, e.basis.empty());
}

struct WilfVerdict {
  std::size_t max_length = 0;
  bool equinumerous = false;
  std::optional<std::size_t> distinguished_at;
  std::vector<std::uint64_t> counts_a;
  std::vector<std::uint64_t> counts_b;
};

/// Compares |Av_n(a)| and |Av_n(b)| for n <= max_length. Equality is evidence
/// up to max_length, not a proof of Wilf equivalence.
inline WilfVerdict wilf_equivalent(const Basis& a, const Basis& b, std::size_t max_length,
                                   const EnumerationOptions& options = {}) {
  EnumerationOptions opts = options;
  opts.mode = EnumerationMode::CountsOnly;
  auto ea = enumerate(a, max_length, opts);
  auto eb = enumerate(b, max_length, opts);
  if (ea.truncated || eb.truncated)
    throw ClassError("wilf_equivalent: enumeration budget exceeded before length " +
                     std::to_string(max_length));
  WilfVerdict v;
  v.max_length = max_length;
  v.counts_a = ea.counts;
  v.counts_b = eb.counts;
  for (std::size_t n = 0; n <= max_length; ++n)
    if (ea.counts[n] != eb.counts[n]) {
      v.distinguished_at = n;
      break;
    }
  v.equinumerous = !v.distinguished_at;
  return v;
}

struct WilfClass {
  std::vector<std::uint64_t> counts;
  std::vector<Permutation> patterns;
  /// Symmetry orbits inside this Wilf class, each sorted.
  std::vector<std::vector<Permutation>> symmetry_classes;
};

struct WilfClassification {
  std::size_t pattern_length = 0;
  std::size_t max_length = 0;
  std::vector<WilfClass> classes;
  /// True iff no symmetry orbit is split across two Wilf classes.
  bool symmetry_refines = false;
};

struct ClassifyOptions {
  std::size_t max_pattern_length = 4;
  EnumerationOptions enumeration{};
};

/// Groups all patterns of length k by their counting sequences up to
/// max_length. Classes are ordered by their least pattern.
inline WilfClassification wilf_classify(std::size_t k, std::size_t max_length,
                                        const ClassifyOptions& options = {}) {
  if (k > options.max_pattern_length)
    throw ClassError("wilf_classify: pattern length " + std::to_string(k) +
                     " exceeds the guard " + std::to_string(options.max_pattern_length));
  EnumerationOptions eopts = options.enumeration;
  eopts.mode = EnumerationMode::CountsOnly;

  std::map<std::vector<std::uint64_t>, std::vector<Permutation>> buckets;
  std::map<Permutation, std::vector<std::uint64_t>> counts_of;
  for (const auto& p : all_permutations(k)) {
    auto e = enumerate(validate_basis({p}), max_length, eopts);
    if (e.truncated)
      throw ClassError("wilf_classify: enumeration budget exceeded for " + to_compact_string(p));
    buckets[e.counts].push_back(p);
    counts_of[p] = e.counts;
  }

  WilfClassification out;
  out.pattern_length = k;
  out.max_length = max_length;
  out.symmetry_refines = true;
  for (auto& [counts, patterns] : buckets) {
    WilfClass wc{counts, patterns, {}};
    std::set<Permutation> placed;
    for (const auto& p : patterns) {
      if (placed.count(p))
        continue;
      auto orbit = symmetry_orbit(p);
      for (const auto& q : orbit) {
        placed.insert(q);
        if (counts_of.at(q) != counts)
          out.symmetry_refines = false;
      }
      wc.symmetry_classes.push_back(std::move(orbit));
    }
    out.classes.push_back(std::move(wc));
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const WilfClass& a, const WilfClass& b) { return a.patterns.front() < b.patterns.front(); });
  return out;
}

} // namespace permpat
