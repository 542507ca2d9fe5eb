#include "properties.hpp"

#include <gtest/gtest.h>

using namespace permpat;

TEST(Statistics, ValuesOnTheRunningExample) {
  const auto p = parse_permutation("314592687");
  EXPECT_EQ(descent_set(p), (std::vector<std::size_t>{1, 5, 8}));
  EXPECT_EQ(descents(p), 3u);
  EXPECT_EQ(major_index(p), 14u);
  EXPECT_EQ(statistic("maj", p), 14u);
  EXPECT_EQ(inversions(parse_permutation("321")), 3u);
  EXPECT_EQ(excedances(parse_permutation("2413")), 2u);
  EXPECT_EQ(descents(Permutation{}), 0u);
}

TEST(Statistics, UnknownNameIsAnError) {
  EXPECT_THROW(statistic("foo", parse_permutation("12")), StatisticError);
}

TEST(Statistics, CustomStatisticsCanBeRegistered) {
  StatisticRegistry reg;
  reg.add("fp", [](const Permutation& p) {
    std::uint64_t c = 0;
    for (std::size_t i = 1; i <= p.size(); ++i)
      c += static_cast<std::size_t>(p.at(i)) == i;
    return c;
  });
  const auto d = distribution("fp", 4, {}, reg);
  EXPECT_EQ(d.counts, (std::vector<std::uint64_t>{9, 8, 6, 0, 1}));
}

TEST(Distribution, EulerianAndMahonianRows) {
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(distribution("des", n).counts, oracle::eulerian_row(n)) << n;
    EXPECT_EQ(distribution("exc", n).counts, oracle::eulerian_row(n)) << n;
    EXPECT_EQ(distribution("inv", n).counts, oracle::mahonian_row(n)) << n;
    EXPECT_EQ(distribution("maj", n).counts, oracle::mahonian_row(n)) << n;
  }
  EXPECT_EQ(distribution("des", 4).counts, (std::vector<std::uint64_t>{1, 11, 11, 1}));
}

TEST(Distribution, ThreadCountDoesNotChangeResult) {
  DistributionOptions four;
  four.threads = 4;
  for (const char* name : {"des", "inv", "exc", "maj"})
    EXPECT_EQ(distribution(name, 8, four), distribution(name, 8)) << name;
}

TEST(Distribution, CapIsEnforced) {
  EXPECT_THROW(distribution("des", 11), StatisticError);
  DistributionOptions small;
  small.max_length = 5;
  EXPECT_THROW(distribution("des", 6, small), StatisticError);
}

TEST(Distribution, Equidistribution) {
  for (const auto& row : equidistributed("des", "exc", 8))
    EXPECT_TRUE(row.equal) << row.length;
  for (const auto& row : equidistributed("inv", "maj", 8))
    EXPECT_TRUE(row.equal) << row.length;
  const auto rows = equidistributed("des", "inv", 4);
  EXPECT_FALSE(rows.back().equal);
}

TEST(Statistics, StructuralProperties) {
  const auto r = props::statistic_properties();
  EXPECT_TRUE(r.ok) << r.detail;
}
