#include "properties.hpp"

#include <gtest/gtest.h>

using namespace permpat;

TEST(Permutation, ParsesDelimitedAndCompactForms) {
  EXPECT_EQ(parse_permutation("314592687"), Permutation({3, 1, 4, 5, 9, 2, 6, 8, 7}));
  EXPECT_EQ(parse_permutation("7 10 1 4 9 14 2 11 3 13 12 6 8 5").size(), 14u);
  EXPECT_EQ(parse_permutation("3,1,2"), Permutation({3, 1, 2}));
  EXPECT_EQ(parse_permutation("").size(), 0u);
}

TEST(Permutation, RejectsInvalidInput) {
  EXPECT_THROW(parse_permutation("1 1 2"), PermutationError);
  EXPECT_THROW(parse_permutation("1 4 2"), PermutationError);
  EXPECT_THROW(parse_permutation("0 1"), PermutationError);
  EXPECT_THROW(parse_permutation("1 x"), PermutationError);
  try {
    parse_permutation("2 2 1");
    FAIL();
  } catch (const PermutationError& e) {
    EXPECT_NE(std::string(e.what()).find("duplicate value 2"), std::string::npos);
  }
}

TEST(Permutation, OneBasedAccessAndInverse) {
  const auto p = parse_permutation("314592687");
  EXPECT_EQ(p.at(1), 3);
  EXPECT_EQ(p.at(9), 7);
  EXPECT_EQ(p.inverse().inverse(), p);
  EXPECT_EQ(to_string(p), "3 1 4 5 9 2 6 8 7");
  EXPECT_EQ(to_compact_string(p), "314592687");
}

TEST(Reduce, RelabelsByRank) {
  EXPECT_EQ(reduce(std::vector<long long>{5, 9, 2, 7}), Permutation({2, 4, 1, 3}));
  EXPECT_EQ(reduce(std::vector<long long>{10, 20}), Permutation({1, 2}));
  EXPECT_EQ(reduce(std::vector<long long>{}).size(), 0u);
  EXPECT_THROW(reduce(std::vector<long long>{3, 3}), PermutationError);
}

TEST(Containment, ExampleWitness) {
  const auto host = parse_permutation("314592687");
  const auto w = find_occurrence(host, parse_permutation("1423"));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->indices, (std::vector<std::size_t>{1, 5, 7, 8}));
  std::vector<long long> vals;
  for (auto i : w->indices)
    vals.push_back(host.at(i));
  EXPECT_EQ(reduce(vals), parse_permutation("1423"));
  EXPECT_FALSE(contains(host, parse_permutation("3241")));

  const auto all = occurrences(host, parse_permutation("1423"));
  EXPECT_NE(std::find(all.begin(), all.end(), Occurrence{{3, 5, 7, 8}}), all.end());
  EXPECT_EQ(all.size(), count_occurrences(host, parse_permutation("1423")));
}

TEST(Containment, EdgeCases) {
  const auto host = parse_permutation("213");
  EXPECT_TRUE(contains(host, Permutation{}));
  EXPECT_TRUE(contains(host, host));
  EXPECT_FALSE(contains(host, parse_permutation("1234")));
  EXPECT_EQ(count_occurrences(host, Permutation{}), 1u);
  EXPECT_TRUE(avoids(parse_permutation("4321"), parse_permutation("12")));
}

TEST(Containment, MatchesSubsetOracle) {
  const auto r = props::matcher_matches_oracle(7, 4);
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST(Containment, OccurrenceListsMatchOracle) {
  const auto r = props::occurrence_lists_match_oracle(6, 3);
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST(Containment, IsAPartialOrder) {
  const auto r = props::containment_is_partial_order(5);
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST(Symmetry, NamesAndComposition) {
  const auto p = parse_permutation("2413");
  EXPECT_EQ(reverse(p), parse_permutation("3142"));
  EXPECT_EQ(complement(p), parse_permutation("3142"));
  EXPECT_EQ(inverse(p), parse_permutation("3142"));
  EXPECT_EQ(symmetry_orbit(p).size(), 2u);
  EXPECT_EQ(symmetry_orbit(parse_permutation("1342")).size(), 8u);
  EXPECT_EQ(apply_symmetry(parse_permutation("132"), parse_symmetry("rc")), parse_permutation("213"));
  EXPECT_EQ(all_symmetries().size(), 8u);
  EXPECT_THROW(parse_symmetry("x"), std::invalid_argument);
}

TEST(Symmetry, ContainmentIsEquivariant) {
  const auto r = props::containment_symmetry_equivariant(7, 4);
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST(Symmetry, EightImagesAreDistinctWhenOrbitIsFull) {
  const auto r = props::eight_distinct_symmetries();
  EXPECT_TRUE(r.ok) << r.detail;
}
