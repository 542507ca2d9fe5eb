#include <permpat_cli.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "permpat");
  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = permpat::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json cli_json(std::vector<std::string> args) {
  args.push_back("--json");
  const auto r = cli(args);
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["schema"], "permpat/1");
  return j;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

} // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"contains", "123"}).code, 2);
  EXPECT_EQ(cli({"contains", "123", "12", "--bogus"}).code, 2);
  const auto bad = cli({"contains", "1 1 2", "12"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("duplicate value 1"), std::string::npos) << bad.err;
}

TEST(Cli, EverySubcommandHasHelp) {
  for (const char* sub : {"reduce", "contains", "occurrences", "sum", "skew", "inflate", "decompose",
                          "intervals", "simple", "layered", "extrema", "symmetry", "stat", "dist",
                          "equidist", "match", "enumerate", "growth", "wilf", "classify", "gf",
                          "plot"}) {
    const auto r = cli({sub, "--help"});
    EXPECT_EQ(r.code, 0) << sub;
    EXPECT_FALSE(r.out.empty()) << sub;
  }
  for (const char* sub : {"series", "ratfit", "algfit"})
    EXPECT_EQ(cli({"gf", sub, "--help"}).code, 0) << sub;
}

TEST(Cli, TextOutputs) {
  EXPECT_EQ(cli({"contains", "314592687", "1423"}).out, "true (1,5,7,8)\n");
  EXPECT_EQ(cli({"contains", "314592687", "3241"}).out, "false\n");
  EXPECT_EQ(cli({"stat", "maj", "314592687"}).out, "14\n");
  EXPECT_EQ(cli({"reduce", "5 9 2 7"}).out, "2 4 1 3\n");
  EXPECT_EQ(cli({"sum", "2413", "4231"}).out, "2 4 1 3 8 6 7 5\n");
  EXPECT_EQ(cli({"skew", "2413", "4231"}).out, "6 8 5 7 4 2 3 1\n");
  EXPECT_EQ(cli({"inflate", "3142", "123", "1", "21", "312"}).out, "5 6 7 1 9 8 4 2 3\n");
  EXPECT_EQ(cli({"layered", "21365487"}).out, "true\n");
  EXPECT_EQ(cli({"simple", "2413"}).out, "true\n");
  EXPECT_EQ(cli({"decompose", "substitution", "567198423"}).out,
            "skeleton 3 1 4 2\ncomponent 1 2 3\ncomponent 1\ncomponent 2 1\ncomponent 3 1 2\n");
  EXPECT_EQ(cli({"wilf", "1234", "1324", "--n", "7"}).out, "distinguished at n = 7: 2761 vs 2762\n");
  const auto ext = cli({"extrema", "7 10 1 4 9 14 2 11 3 13 12 6 8 5"}).out;
  EXPECT_NE(ext.find("lr-max (3): 1 2 6"), std::string::npos) << ext;
  EXPECT_NE(ext.find("rl-min (4)"), std::string::npos);
}

TEST(Cli, EnumerateRows) {
  const auto r = cli({"enumerate", "123", "--n", "10"});
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::vector<std::string> rows;
  for (std::string l; std::getline(lines, l);)
    rows.push_back(l);
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_EQ(rows.front(), "1 1");
  EXPECT_EQ(rows.back(), "10 16796");
}

TEST(Cli, BudgetFlagAndEnvironment) {
  const auto j = cli_json({"enumerate", "", "--n", "9", "--budget", "1000"});
  EXPECT_TRUE(j["truncated"].get<bool>());
  ::setenv("PERMPAT_BUDGET", "1000", 1);
  EXPECT_TRUE(cli_json({"enumerate", "", "--n", "9"})["truncated"].get<bool>());
  EXPECT_FALSE(cli_json({"enumerate", "", "--n", "9", "--budget", "10000000"})["truncated"].get<bool>());
  ::unsetenv("PERMPAT_BUDGET");
}

TEST(Cli, GlobalFlagsMayFollowTheSubcommand) {
  EXPECT_EQ(cli({"--json", "stat", "des", "21"}).code, 0);
  EXPECT_EQ(cli({"stat", "des", "21", "--json"}).code, 0);
}

TEST(Cli, MatchModes) {
  EXPECT_EQ(cli({"match", "vincular", "2-31-4", "314265"}).out, "3 1 4 2 6 5: true 2\n");
  EXPECT_EQ(cli({"match", "vincular", "2-314", "314265"}).out, "3 1 4 2 6 5: true 1\n");
  EXPECT_EQ(cli({"match", "vincular", "23-14", "314265"}).out, "3 1 4 2 6 5: false 0\n");
  EXPECT_EQ(cli({"match", "classical", "12", "123", "321"}).out, "1 2 3: true 3\n3 2 1: false 0\n");
  EXPECT_EQ(cli({"match", "barred", "1`32", "132", "21"}).out, "1 3 2: false\n2 1: true\n");

  const auto mesh = temp_file("permpat_mesh3241.json",
                              R"({"perm":[3,2,4,1],"shaded":[[0,2],[1,3],[1,4],[4,2],[4,3]]})");
  const auto hosts = temp_file("permpat_hosts.txt", "# hosts\n3241\n\n1 2 3 4\n");
  const auto j = cli_json({"match", "mesh", "@" + mesh, "--hosts", hosts});
  ASSERT_EQ(j["results"].size(), 2u);
  EXPECT_EQ(j["results"][0]["count"], 1);
  EXPECT_EQ(j["results"][1]["count"], 0);
  EXPECT_EQ(permpat::parse_mesh_json(j["pattern"].dump()),
            permpat::parse_mesh_json(permpat::cli::read_file(mesh)));
}

TEST(Cli, GeneratingFunctions) {
  EXPECT_EQ(cli({"gf", "ratfit", "21", "--n", "8"}).out, "(1)/(1 - z)\n");
  EXPECT_EQ(cli({"gf", "algfit", "123", "--n", "12"}).out, "z*y^2 - y + 1\n");
  EXPECT_EQ(cli({"gf", "series", "", "--n", "5"}).out, "1, 1, 2, 6, 24, 120\n");
  std::string fact = "1";
  permpat::Integer f = 1;
  for (int n = 1; n <= 25; ++n) {
    f *= n;
    fact += "," + f.str();
  }
  EXPECT_EQ(cli({"gf", "algfit", "--seq", fact, "--deg-z", "4", "--deg-y", "4"}).out,
            "no-fit within degrees (4,4)\n");
  const auto short_prefix = cli({"gf", "algfit", "--seq", "1,1,2,6,24", "--deg-z", "4", "--deg-y", "4"});
  EXPECT_EQ(short_prefix.code, 1);
  EXPECT_NE(short_prefix.err.find("through degree 25"), std::string::npos);
  EXPECT_EQ(cli({"gf", "ratfit", "--seq", "1,x"}).code, 1);
}

TEST(Cli, JsonRoundTrips) {
  using namespace permpat;
  auto j = cli_json({"contains", "314592687", "1423"});
  EXPECT_EQ(j["witness"], (std::vector<int>{1, 5, 7, 8}));

  j = cli_json({"decompose", "substitution", "567198423"});
  std::vector<Permutation> comps;
  for (const auto& c : j["components"])
    comps.emplace_back(c.get<std::vector<int>>());
  EXPECT_EQ(inflate(Permutation(j["skeleton"].get<std::vector<int>>()), std::span<const Permutation>(comps)),
            parse_permutation("567198423"));

  j = cli_json({"gf", "ratfit", "--seq", "1,1,2,3,5,8,13,21,34"});
  const auto rat = rational_fit_from_json(j["fit"]);
  EXPECT_EQ(to_string(rat), j["fit"]["text"]);

  j = cli_json({"gf", "algfit", "123", "--n", "12"});
  EXPECT_EQ(to_string(algebraic_fit_from_json(j["fit"])), "z*y^2 - y + 1");

  j = cli_json({"enumerate", "132", "--n", "6", "--witnesses"});
  EXPECT_EQ(j["witnesses"][3].size(), 5u);
  for (const auto& w : j["witnesses"][4])
    EXPECT_TRUE(avoids(Permutation(w.get<std::vector<int>>()), parse_permutation("132")));

  j = cli_json({"plot", "314592687", "--pattern", "1423"});
  EXPECT_EQ(j["highlighted"], (std::vector<int>{1, 5, 7, 8}));
  EXPECT_EQ(j["rows"].size(), 10u);
}

TEST(Cli, OutputIndependentOfThreads) {
  for (std::vector<std::string> cmd : {std::vector<std::string>{"enumerate", "1342", "--n", "9"},
                                       {"classify", "3", "--n", "7"},
                                       {"dist", "maj", "--n", "8"},
                                       {"enumerate", "231", "--n", "6", "--witnesses", "--json"}}) {
    auto one = cmd, four = cmd;
    one.insert(one.end(), {"--threads", "1"});
    four.insert(four.end(), {"--threads", "4"});
    const auto a = cli(one), b = cli(four);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out) << cmd.front();
  }
}

TEST(Cli, Plot) {
  EXPECT_EQ(cli({"plot", "1"}).out, "1 | o\n  +--\n");
  const auto fig = cli({"plot", "314592687", "--highlight", "3,5,7,8"}).out;
  EXPECT_EQ(std::count(fig.begin(), fig.end(), '@'), 4);
  const auto layered = cli({"plot", "21365487"}).out;
  EXPECT_EQ(layered.substr(0, layered.find('\n')), "8 | . . . . . . o .");
  EXPECT_EQ(cli({"plot", "12", "--highlight", "3"}).code, 1);
}
