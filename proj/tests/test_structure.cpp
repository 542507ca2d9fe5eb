#include "properties.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace permpat;

namespace {
Permutation P(const char* s) { return parse_permutation(s); }
} // namespace

TEST(Sums, LayeredExample) {
  EXPECT_EQ(direct_sum(P("2413"), P("4231")), P("24138675"));
  EXPECT_EQ(skew_sum(P("2413"), P("4231")), P("68574231"));
  const std::vector<Permutation> layers{P("21"), P("1"), P("321"), P("21")};
  const auto layered = direct_sum(std::span<const Permutation>(layers));
  EXPECT_EQ(layered, P("21365487"));
  EXPECT_TRUE(is_layered(layered));
  EXPECT_FALSE(is_layered(P("2413")));
  EXPECT_TRUE(is_layered(Permutation{}));
}

TEST(Sums, EmptyIsTheIdentity) {
  EXPECT_EQ(direct_sum(Permutation{}, P("21")), P("21"));
  EXPECT_EQ(skew_sum(P("12"), Permutation{}), P("12"));
}

TEST(Sums, Decompositions) {
  EXPECT_EQ(sum_decompose(P("21365487")),
            (std::vector<Permutation>{P("21"), P("1"), P("321"), P("21")}));
  EXPECT_EQ(skew_decompose(P("68574231")), (std::vector<Permutation>{P("2413"), P("1"), P("12"), P("1")}));
  EXPECT_EQ(sum_decompose(P("2413")), (std::vector<Permutation>{P("2413")}));
  EXPECT_THROW(sum_decompose(Permutation{}), std::invalid_argument);
}

TEST(Sums, RoundTripsExhaustively) {
  const auto r = props::sum_skew_round_trips(9);
  EXPECT_TRUE(r.ok) << r.detail;
  const auto r2 = props::never_sum_and_skew_decomposable(8);
  EXPECT_TRUE(r2.ok) << r2.detail;
}

TEST(Intervals, ListsContiguousBlocks) {
  const auto ivs = intervals(P("2413"));
  EXPECT_EQ(ivs.size(), 5u); // four singletons and the whole
  EXPECT_TRUE(is_simple(P("2413")));
  EXPECT_TRUE(is_simple(P("3142")));
  EXPECT_FALSE(is_simple(P("123")));
  EXPECT_TRUE(is_simple(P("1")));
  EXPECT_TRUE(is_simple(P("21")));
  EXPECT_TRUE(is_simple(Permutation{}));
  EXPECT_FALSE(is_simple(P("21365487")));
}

TEST(Intervals, MatchOracle) {
  const auto r = props::intervals_match_oracle(7);
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST(Inflation, RoundTripOn567198423) {
  const auto p = inflate(P("3142"), {P("123"), P("1"), P("21"), P("312")});
  EXPECT_EQ(p, P("567198423"));
  const auto d = substitution_decompose(p);
  EXPECT_EQ(d.skeleton, P("3142"));
  EXPECT_EQ(d.components, (std::vector<Permutation>{P("123"), P("1"), P("21"), P("312")}));
}

TEST(Inflation, Errors) {
  EXPECT_THROW(inflate(P("12"), {P("1")}), std::invalid_argument);
  EXPECT_THROW(inflate(P("12"), {P("1"), Permutation{}}), std::invalid_argument);
  EXPECT_THROW(substitution_decompose(P("1")), std::invalid_argument);
}

TEST(Inflation, SumAndSkewSkeletons) {
  const auto d = substitution_decompose(P("21365487"));
  EXPECT_EQ(d.skeleton, P("1234"));
  const auto s = substitution_decompose(P("68574231"));
  EXPECT_EQ(s.skeleton, P("4321"));
  EXPECT_EQ(s.components.front(), P("2413"));
}

TEST(Inflation, RoundTripsExhaustively) {
  const auto r = props::substitution_round_trips(8);
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST(Extrema, CountsOnALongerExample) {
  const auto p = P("7 10 1 4 9 14 2 11 3 13 12 6 8 5");
  EXPECT_EQ(extremal(p, ExtremalKind::LeftToRightMaxima), (std::vector<std::size_t>{1, 2, 6}));
  EXPECT_EQ(extremal(p, ExtremalKind::RightToLeftMinima), (std::vector<std::size_t>{3, 7, 9, 14}));
  EXPECT_EQ(extremal(p, ExtremalKind::LeftToRightMinima).size(), 2u);
  EXPECT_EQ(extremal(p, ExtremalKind::RightToLeftMaxima).size(), 5u);
  EXPECT_TRUE(extremal(Permutation{}, ExtremalKind::LeftToRightMaxima).empty());
  EXPECT_THROW(parse_extremal_kind("up"), std::invalid_argument);
}

TEST(Plot, RendersPointsAndHighlights) {
  EXPECT_EQ(plot(P("1")), "1 | o\n  +--\n");
  const auto host = P("314592687");
  const auto g = plot(host, highlight(Occurrence{{3, 5, 7, 8}}));
  EXPECT_EQ(std::count(g.begin(), g.end(), '@'), 4);
  EXPECT_EQ(std::count(g.begin(), g.end(), 'o'), 5);
  EXPECT_EQ(g.substr(0, g.find('\n')), "9 | . . . . @ . . . .");
  std::vector<int> big(100);
  std::iota(big.begin(), big.end(), 1);
  EXPECT_THROW(plot(Permutation(big)), std::invalid_argument);
}
