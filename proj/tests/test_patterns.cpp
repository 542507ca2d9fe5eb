#include "properties.hpp"

#include <gtest/gtest.h>

using namespace permpat;

namespace {
Permutation P(const char* s) { return parse_permutation(s); }

const char* shaded3241 = R"({"perm":[3,2,4,1],"shaded":[[0,2],[1,3],[1,4],[4,2],[4,3]]})";
} // namespace

TEST(Vincular, CountsOnHost314265) {
  const auto host = P("314265");
  EXPECT_EQ(vincular_contains(host, parse_vincular("2-31-4")).count, 2u);
  EXPECT_EQ(vincular_contains(host, parse_vincular("2-314")).count, 1u);
  const auto avoided = vincular_contains(host, parse_vincular("23-14"));
  EXPECT_EQ(avoided.count, 0u);
  EXPECT_FALSE(avoided.contained);
}

TEST(Vincular, CompilesToShadedColumns) {
  const auto vp = parse_vincular("2-31-4");
  EXPECT_EQ(vp.pattern, P("2314"));
  EXPECT_EQ(vp.adjacent_positions, (std::set<std::size_t>{2}));
  const auto mp = compile_vincular(vp);
  EXPECT_EQ(mp.shaded().size(), 5u);
  for (std::size_t j = 0; j <= 4; ++j)
    EXPECT_TRUE(mp.is_shaded(2, j));
  EXPECT_TRUE(compile_vincular({P("231"), {}}).shaded().empty());
}

TEST(Vincular, ConsecutivePattern) {
  const auto host = P("314265");
  const auto mp = compile_vincular(consecutive_pattern(P("213")));
  const auto occs = mesh_occurrences(host, mp);
  EXPECT_EQ(occs, (std::vector<Occurrence>{{{1, 2, 3}}, {{3, 4, 5}}}));
  EXPECT_EQ(parse_vincular("213"), consecutive_pattern(P("213")));
}

TEST(Vincular, Bivincular) {
  // 12 with values adjacent: an ascent pair whose values differ by one
  const BivincularPattern bp{P("12"), {}, {1}};
  EXPECT_EQ(bivincular_contains(P("2413"), bp).count, 1u); // 2..3
  EXPECT_EQ(bivincular_contains(P("4321"), bp).count, 0u);
  EXPECT_EQ(bivincular_contains(P("3142"), bp).count, 2u); // 1..2 and 3..4
  EXPECT_THROW(compile_bivincular({P("12"), {}, {2}}), PatternError);
}

TEST(Vincular, MatchesAdjacencyOracle) {
  const auto r = props::vincular_matches_oracle(6, 4);
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST(Mesh, ShadedPatternOn3241) {
  const auto parsed = parse_pattern(shaded3241);
  ASSERT_TRUE(std::holds_alternative<MeshPattern>(parsed));
  const auto& mp = std::get<MeshPattern>(parsed);
  EXPECT_EQ(mp.pattern(), P("3241"));
  EXPECT_EQ(mp.shaded(), (std::set<Cell>{{0, 2}, {1, 3}, {1, 4}, {4, 2}, {4, 3}}));
  EXPECT_EQ(mesh_occurrences(P("3241"), mp), (std::vector<Occurrence>{{{1, 2, 3, 4}}}));
  EXPECT_EQ(parse_mesh_json(to_json(mp).dump()), mp);
}

TEST(Mesh, ConstructionRejectsCellsOutsideTheGrid) {
  EXPECT_THROW(MeshPattern(P("12"), {{3, 0}}), PatternError);
  EXPECT_THROW(parse_mesh_json(R"({"perm":[1,2],"shaded":[[-1,0]]})"), PatternError);
  EXPECT_THROW(parse_mesh_json(R"({"perm":[1,2],"shaded":[[0]]})"), PatternError);
  EXPECT_THROW(parse_mesh_json("{nope"), PatternParseError);
}

TEST(Mesh, EmptyShadingIsClassical) {
  const auto r = props::mesh_empty_shading_is_classical(6, 3);
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST(Mesh, MatchesRegionOracleAndShadingIsMonotone) {
  const auto r = props::mesh_matches_oracle_and_is_monotone(5, 3);
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST(Barred, ParsingFixture) {
  const auto bp = parse_barred("53`21`4");
  EXPECT_EQ(bp.pattern(), P("53214"));
  EXPECT_EQ(bp.barred(), (std::set<std::size_t>{2, 4}));
  EXPECT_EQ(bp.effective(), P("312"));
  EXPECT_EQ(parse_barred("5~32~14"), bp);
  EXPECT_THROW(parse_barred("12"), PatternError);
  EXPECT_THROW(parse_barred("1`2`"), PatternError);
}

TEST(Barred, Semantics) {
  const auto bp = parse_barred("53`21`4");
  EXPECT_FALSE(barred_contains(P("123"), bp)); // no 312 at all
  // Inside 53214 the 312-occurrences (1,2,5) and (1,4,5) are not restrictions
  // of the single 53214-occurrence, so the host itself contains bp.
  EXPECT_EQ(barred_contains(P("53214"), bp),
            oracle::barred_contains(P("53214"), P("53214"), {2, 4}));
  EXPECT_TRUE(barred_contains(P("53214"), bp));
  // 1`32: every 21 (as 32) needs a smaller entry before it.
  const auto lead = parse_barred("1`32");
  EXPECT_FALSE(barred_contains(P("132"), lead));
  EXPECT_TRUE(barred_contains(P("21"), lead));
  EXPECT_TRUE(barred_avoids(P("1423"), lead) == !barred_contains(P("1423"), lead));
}

TEST(Barred, MatchesOracle) {
  const auto r = props::barred_matches_oracle(6, 4);
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST(Notation, AutoDetection) {
  EXPECT_TRUE(std::holds_alternative<Permutation>(parse_pattern("231")));
  EXPECT_TRUE(std::holds_alternative<VincularPattern>(parse_pattern("2-31-4")));
  EXPECT_TRUE(std::holds_alternative<BarredPattern>(parse_pattern("53`21`4")));
  EXPECT_TRUE(std::holds_alternative<BivincularPattern>(
      parse_pattern(R"({"perm":[1,2],"adjacent_values":[1]})")));
  EXPECT_TRUE(std::holds_alternative<BarredPattern>(parse_pattern(R"({"perm":[1,3,2],"barred":[1]})")));
}

TEST(Notation, ErrorsCarryOffsets) {
  try {
    parse_vincular("2--31");
    FAIL();
  } catch (const PatternParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
  try {
    parse_vincular("2-3x1");
    FAIL();
  } catch (const PatternParseError& e) {
    EXPECT_EQ(e.offset(), 3u);
  }
  EXPECT_THROW(parse_vincular("2-"), PatternParseError);
  EXPECT_THROW(parse_vincular("-12"), PatternParseError);
  EXPECT_THROW(parse_vincular("2-2"), PatternParseError);
  EXPECT_THROW(parse_pattern(R"({"perm":[1,2],"barred":[1],"shaded":[]})"), PatternError);
}
