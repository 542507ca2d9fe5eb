#pragma once

/// @file
/// Classical permutation statistics and their distributions over S_n.

#include "permpat/permutation.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace permpat {

/// 1-based positions i with p(i) > p(i+1).
inline std::vector<std::size_t> descent_set(const Permutation& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] > p[i + 1])
      out.push_back(i + 1);
  return out;
}

inline std::uint64_t descents(const Permutation& p) { return descent_set(p).size(); }

inline std::uint64_t inversions(const Permutation& p) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      count += p[i] > p[j];
  return count;
}

inline std::uint64_t excedances(const Permutation& p) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    count += static_cast<std::size_t>(p[i]) > i + 1;
  return count;
}

inline std::uint64_t major_index(const Permutation& p) {
  std::uint64_t sum = 0;
  for (auto i : descent_set(p))
    sum += i;
  return sum;
}

class StatisticError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

using StatisticFn = std::function<std::uint64_t(const Permutation&)>;

/// Name-keyed statistics. The default registry holds des, inv, exc and maj.
class StatisticRegistry {
public:
  StatisticRegistry() {
    add("des", descents);
    add("inv", inversions);
    add("exc", excedances);
    add("maj", major_index);
  }

  void add(std::string name, StatisticFn fn) { stats_[std::move(name)] = std::move(fn); }

  const StatisticFn& get(const std::string& name) const {
    auto it = stats_.find(name);
    if (it == stats_.end())
      throw StatisticError("unknown statistic '" + name + "' (known: " + known() + ")");
    return it->second;
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& [name, fn] : stats_)
      out.push_back(name);
    return out;
  }

  static const StatisticRegistry& defaults() {
    static const StatisticRegistry registry;
    return registry;
  }

private:
  std::string known() const {
    std::string out;
    for (const auto& [name, fn] : stats_)
      out += (out.empty() ? "" : ", ") + name;
    return out;
  }

  std::map<std::string, StatisticFn> stats_;
};

inline std::uint64_t statistic(const std::string& name, const Permutation& p,
                               const StatisticRegistry& registry = StatisticRegistry::defaults()) {
  return registry.get(name)(p);
}

/// counts[k] = number of permutations of length n with statistic value k.
struct Distribution {
  std::size_t length = 0;
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (auto c : counts)
      t += c;
    return t;
  }
  friend bool operator==(const Distribution&, const Distribution&) = default;
};

struct DistributionOptions {
  std::size_t max_length = 10;
  unsigned threads = 1;
};

/// Full iteration of S_n. With several threads the work is split by the
/// first entry; the result does not depend on the split.
inline Distribution distribution(const std::string& name, std::size_t n,
                                 const DistributionOptions& options = {},
                                 const StatisticRegistry& registry = StatisticRegistry::defaults()) {
  const auto& fn = registry.get(name);
  if (n > options.max_length)
    throw StatisticError("distribution: length " + std::to_string(n) +
                         " exceeds the iteration cap " + std::to_string(options.max_length));

  auto tally = [&fn](std::vector<std::uint64_t>& counts, const Permutation& p) {
    const auto k = fn(p);
    if (k >= counts.size())
      counts.resize(k + 1, 0);
    ++counts[k];
  };

  Distribution dist{n, {}};
  if (n < 2 || options.threads <= 1) {
    for_each_permutation(n, [&](const Permutation& p) { tally(dist.counts, p); });
    return dist;
  }

  // One task per leading value; remaining entries run through all orders.
  std::vector<std::vector<std::uint64_t>> partial(n);
  auto work = [&](std::size_t first) {
    std::vector<Permutation::value_type> v;
    v.push_back(static_cast<Permutation::value_type>(first + 1));
    for (std::size_t x = 1; x <= n; ++x)
      if (x != first + 1)
        v.push_back(static_cast<Permutation::value_type>(x));
    do {
      tally(partial[first], Permutation(v, Permutation::unchecked_tag{}));
    } while (std::next_permutation(v.begin() + 1, v.end()));
  };
  const unsigned workers = std::min<unsigned>(options.threads, static_cast<unsigned>(n));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t first = w; first < n; first += workers)
        work(first);
    });
  for (auto& t : pool)
    t.join();
  for (const auto& part : partial) {
    if (part.size() > dist.counts.size())
      dist.counts.resize(part.size(), 0);
    for (std::size_t k = 0; k < part.size(); ++k)
      dist.counts[k] += part[k];
  }
  return dist;
}

struct EquidistributionRow {
  std::size_t length = 0;
  bool equal = false;
  Distribution first;
  Distribution second;
};

/// Compares the two distributions at every length 0..max_length.
inline std::vector<EquidistributionRow>
equidistributed(const std::string& a, const std::string& b, std::size_t max_length,
                const DistributionOptions& options = {},
                const StatisticRegistry& registry = StatisticRegistry::defaults()) {
  if (max_length > options.max_length)
    throw StatisticError("equidistributed: length " + std::to_string(max_length) +
                         " exceeds the iteration cap " + std::to_string(options.max_length));
  std::vector<EquidistributionRow> rows;
  for (std::size_t n = 0; n <= max_length; ++n) {
    auto da = distribution(a, n, options, registry);
    auto db = distribution(b, n, options, registry);
    const bool eq = da.counts == db.counts;
    rows.push_back({n, eq, std::move(da), std::move(db)});
  }
  return rows;
}

} // namespace permpat
