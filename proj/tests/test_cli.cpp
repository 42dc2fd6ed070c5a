#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace hgreedy;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "hgreedy");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

const std::string kPetersen = std::string(HGREEDY_DATA_DIR) + "/petersen.hg";

}  // namespace

TEST(Cli, TheoryRow) {
  const auto r = run({"theory", "--d", "3", "--r", "1", "--g", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0], "d,r,g,u,f,epsilon,lower_per_n,caro_tuza,akpss,asymptotic");
  EXPECT_EQ(ls[1].rfind("3,1,5,0.5,0.375,1,", 0), 0u) << ls[1];
}

TEST(Cli, TheoryGridSize) {
  const auto r = run({"theory", "--d", "2,3,4", "--r", "1,2", "--g", "5,9"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 1u + 3 * 2 * 2);
}

TEST(Cli, GirthPetersen) {
  const auto r = run({"girth", "--input", kPetersen});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0], "girth 5");
  EXPECT_EQ(ls[1].rfind("witness v", 0), 0u);
  EXPECT_EQ(run({"girth", "--spec", "loosepath:r=2,l=3"}).out, "girth acyclic\n");
}

TEST(Cli, OraclePaths) {
  const auto r = run({"oracle", "--mode", "paths", "--r", "2", "--l", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "count 8, probability 1/15\n");
  const auto j = run({"oracle", "--mode", "paths", "--r", "2", "--l", "2", "--format", "json"});
  EXPECT_NE(j.out.find("\"probability\": {\"num\": 1, \"den\": 15}"), std::string::npos) << j.out;
}

TEST(Cli, OracleStatsRationals) {
  const auto r = run({"oracle", "--spec", "loosecycle:r=1,k=3", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("total,1/1\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("0,1/3\n"), std::string::npos);
}

TEST(Cli, GenRoundTrip) {
  const auto r = run({"gen", "loosecycle:r=2,k=5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, to_text(make_loose_berge_cycle(2, 5)));
  // Random families are reproducible from the seed.
  EXPECT_EQ(run({"gen", "linear:r=1,d=3,n=40", "--seed", "5"}).out,
            run({"gen", "linear:r=1,d=3,n=40", "--seed", "5"}).out);
  EXPECT_NE(run({"gen", "linear:r=1,d=3,n=40", "--seed", "5"}).out,
            run({"gen", "linear:r=1,d=3,n=40", "--seed", "6"}).out);
}

TEST(Cli, SimulateDeterministicAcrossThreads) {
  const std::vector<std::string> base{"simulate", "--spec", "loosecycle:r=1,k=12", "--trials", "3000", "--seed", "9"};
  auto a = base, b = base;
  a.insert(a.end(), {"--threads", "1"});
  b.insert(b.end(), {"--threads", "4"});
  const auto ra = run(a), rb = run(b);
  ASSERT_EQ(ra.code, 0) << ra.err;
  EXPECT_EQ(ra.out, rb.out);
  const auto ls = lines(ra.out);
  EXPECT_EQ(ls[0], "instance,n,d,r,girth,trials,seed,mean_per_n,stderr,var_per_n,f,epsilon,verdict");
}

TEST(Cli, SeedFromEnvironment) {
  const std::vector<std::string> args{"gen", "regular:r=1,d=3,n=12,g=4"};
  ::setenv("HG_SEED", "77", 1);
  const auto env = run(args);
  ::unsetenv("HG_SEED");
  auto explicit_args = args;
  explicit_args.insert(explicit_args.end(), {"--seed", "77"});
  EXPECT_EQ(env.out, run(explicit_args).out);
  ::setenv("HG_SEED", "1", 1);
  EXPECT_EQ(run(explicit_args).out, env.out);  // flag wins over the environment
  ::unsetenv("HG_SEED");
}

TEST(Cli, JsonAndCsvCarrySameNumbers) {
  const auto csv = run({"theory", "--d", "5", "--r", "2", "--g", "7"});
  const auto json = run({"theory", "--d", "5", "--r", "2", "--g", "7", "--format", "json"});
  ASSERT_EQ(csv.code, 0);
  ASSERT_EQ(json.code, 0);
  const auto header = lines(csv.out)[0];
  const auto row = lines(csv.out)[1];
  std::istringstream hs(header), rs(row);
  for (std::string h, v; std::getline(hs, h, ',') && std::getline(rs, v, ',');) {
    EXPECT_NE(json.out.find("\"" + h + "\": " + v), std::string::npos) << h;
  }
}

TEST(Cli, RootAndEscapeObservables) {
  const auto root = run({"simulate", "--spec", "tree:d=2,r=1,h=1", "--observe", "root", "--trials", "20000"});
  ASSERT_EQ(root.code, 0) << root.err;
  const auto fields = lines(root.out)[1];
  const double rate = std::stod(fields.substr(fields.find(",20000,1,") + 9));
  EXPECT_NEAR(rate, 1.0 / 3.0, 0.015);
  const auto esc = run({"simulate", "--spec", "loosecycle:r=1,k=9", "--observe", "escape", "--vertex", "0", "--h",
                        "1", "--trials", "1000", "--ci", "clopper-pearson"});
  EXPECT_EQ(esc.code, 0) << esc.err;
}

TEST(Cli, OutFile) {
  const auto path = (std::filesystem::temp_directory_path() / "hgreedy_cli_out.csv").string();
  const auto r = run({"theory", "--d", "3", "--out", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "d,r,g,u,f,epsilon,lower_per_n,caro_tuza,akpss,asymptotic");
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"theory", "--d", "3", "--unknown"}).code, 2);
  EXPECT_EQ(run({"theory", "--d", "3", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"gen", "blob:k=1"}).code, 2);
  EXPECT_EQ(run({"gen", "loosecycle:r=1"}).code, 2);
  EXPECT_EQ(run({"gen", "loosecycle:r=1,k=4,zzz=3"}).code, 2);
  EXPECT_EQ(run({"gen", "loosecycle:r=1,k=-4"}).code, 2);
  EXPECT_EQ(run({"simulate", "--spec", "loosecycle:r=1,k=5", "--observe", "escape"}).code, 2);
  EXPECT_EQ(run({"theory", "--help"}).code, 0);

  const auto domain = run({"theory", "--d", "1"});
  EXPECT_EQ(domain.code, 1);
  EXPECT_FALSE(domain.err.empty());
  EXPECT_EQ(run({"oracle", "--spec", "loosecycle:r=1,k=20"}).code, 1);
  EXPECT_EQ(run({"girth", "--input", "/nonexistent/file.hg"}).code, 1);
  EXPECT_EQ(run({"simulate", "--spec", "loosepath:r=1,l=4", "--observe", "locality", "--vertex", "0"}).code, 1);
}

TEST(Cli, VerifySingleCriterion) {
  const auto r = run({"verify", "--only", "1,12"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 3u);
  EXPECT_EQ(ls[0].rfind("[PASS]  1", 0), 0u);
  EXPECT_EQ(ls[2], "2/2 criteria passed");
}
