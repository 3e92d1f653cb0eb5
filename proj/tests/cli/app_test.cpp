#include "qprop/app.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace qprop::cli {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args, const Environment& env = {}) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err, env);
  return {code, out.str(), err.str()};
}

class ConfigFile {
 public:
  ConfigFile(const std::string& name, const std::string& text)
      : path_(fs::temp_directory_path() / ("qprop_app_test_" + name + ".cfg")) {
    std::ofstream(path_) << text;
  }
  ~ConfigFile() { fs::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  fs::path path_;
};

Json results_of(const std::string& record) { return Json::parse(record).at("results"); }

TEST(App, OrderEffectCsv) {
  const CliRun r = cli({"order-effect", "--theta", "30", "--phi", "45", "--degrees", "--order", "ab"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "order,A+B+,A+B-,A-B+,A-B-,A_yes,A_no,B_yes,B_no\n"
            "ab,0.375,0.375,0.125,0.125,0.75,0.25,0.5,0.5\n");
}

TEST(App, MissingRequiredFlagIsUsageError) {
  const CliRun r = cli({"order-effect", "--phi", "1"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("theta"), std::string::npos);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST(App, InvalidFlagsAreUsageErrors) {
  EXPECT_EQ(cli({"reversal", "--x1", "1", "--x2", "4", "--bogus", "1"}).code, kExitUsage);
  EXPECT_EQ(cli({"reversal", "--x1", "abc", "--x2", "4"}).code, kExitUsage);
  EXPECT_EQ(cli({"reversal", "--x1", "1", "--x2", "4", "--output", "xml"}).code, kExitUsage);
  EXPECT_EQ(cli({"launch"}).code, kExitUsage);
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"interference", "--theta", "1", "--phi", "1", "--trials", "10"}).code, kExitUsage);
  EXPECT_EQ(cli({"joint", "--buyer-price", "1", "--buyer-sigma", "1"}).code, kExitUsage);
  EXPECT_EQ(cli({"curves", "--buyer-price", "1", "--buyer-sigma", "1", "--grid-min", "2",
                 "--grid-max", "1"})
                .code,
            kExitUsage);
}

TEST(App, HelpAndVersionSucceed) {
  const CliRun help = cli({"--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_NE(help.out.find("order-effect"), std::string::npos);
  EXPECT_EQ(cli({"--version"}).code, kExitOk);
  EXPECT_EQ(cli({"force", "--help"}).code, kExitOk);
}

TEST(App, ModelFailureExitsOne) {
  EXPECT_EQ(cli({"equivalence", "--seed", "1", "--tol", "0"}).code, kExitModelError);
  EXPECT_EQ(cli({"work", "--price", "1", "--sigma", "0.01", "--from", "1", "--to", "1000"}).code,
            kExitModelError);
}

TEST(App, SeedFallsBackToEnvironment) {
  Environment env;
  env.default_seed = "42";
  const CliRun from_env = cli({"equivalence", "--trials", "50", "--output", "json"}, env);
  ASSERT_EQ(from_env.code, kExitOk) << from_env.err;
  EXPECT_EQ(Json::parse(from_env.out).at("seed"), 42);

  const CliRun flag = cli({"equivalence", "--trials", "50", "--seed", "7", "--output", "json"}, env);
  EXPECT_EQ(Json::parse(flag.out).at("seed"), 7);

  EXPECT_EQ(cli({"equivalence"}).code, kExitUsage);
  env.default_seed = "minus one";
  EXPECT_EQ(cli({"equivalence"}, env).code, kExitUsage);
}

TEST(App, RunRecordFields) {
  const CliRun r = cli({"reversal", "--x1", "1", "--x2", "4", "--output", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const Json record = Json::parse(r.out);
  EXPECT_EQ(record.at("tool"), "qprop");
  EXPECT_TRUE(record.at("version").is_string());
  EXPECT_EQ(record.at("config").at("model"), "reversal");
  EXPECT_EQ(record.at("config").at("params").at("x2"), "4");
  EXPECT_TRUE(record.at("seed").is_null());
  EXPECT_TRUE(record.at("wall_time_s").is_number());
  EXPECT_EQ(record.at("results").at("switches"), true);
}

TEST(RunConfig, ReversalSwitches) {
  const ConfigFile cfg("reversal", "model = reversal\n\n[reversal]\nx1 = 1\nx2 = 4\n");
  const CliRun r = cli({"run", cfg.path()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(results_of(r.out).at("switches"), true);
  EXPECT_EQ(results_of(r.out).at("ratio"), 4.0);
}

TEST(RunConfig, UnknownKeyExitsTwoNamingIt) {
  const ConfigFile cfg("temperature",
                       "model = reversal\n[reversal]\nx1 = 1\nx2 = 4\ntemperature = 300\n");
  const CliRun r = cli({"run", cfg.path()});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("temperature"), std::string::npos);
  EXPECT_NE(r.err.find(":5:"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(RunConfig, IdenticalConfigAndSeedGiveIdenticalPayload) {
  const ConfigFile cfg("sample",
                       "model = sample\n[sample]\nbuyer-price = 3\nbuyer-sigma = 0.1\n"
                       "seller-price = 2.5\nseller-sigma = 0.1\nn = 200\nseed = 11\n");
  const CliRun a = cli({"run", cfg.path()});
  const CliRun b = cli({"run", cfg.path()});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(results_of(a.out).dump(), results_of(b.out).dump());
  EXPECT_EQ(Json::parse(a.out).at("seed"), 11);
}

TEST(RunConfig, CsvOutputAndOutFile) {
  const ConfigFile cfg("csv", "model = reversal\noutput = csv\n[reversal]\nx1 = 2\nx2 = 3\n");
  const fs::path out = fs::temp_directory_path() / "qprop_app_test_out.csv";
  const CliRun r = cli({"run", cfg.path(), "--out", out.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), "x1,x2,ratio,threshold,switches\n2,3,1.5,3,false\n");
  fs::remove(out);
}

TEST(RunConfig, SeedIsNotTakenFromEnvironment) {
  const ConfigFile cfg("noseed", "model = equivalence\n[equivalence]\ntrials = 5\n");
  Environment env;
  env.default_seed = "1";
  const CliRun r = cli({"run", cfg.path()}, env);
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("seed"), std::string::npos);
}

TEST(RunConfig, MissingFileIsUsageError) {
  EXPECT_EQ(cli({"run", "/nonexistent/qprop.cfg"}).code, kExitUsage);
}

TEST(RunConfig, ModelRejectionExitsOne) {
  const ConfigFile cfg("tol", "model = equivalence\n[equivalence]\nseed = 1\ntol = -1\n");
  EXPECT_EQ(cli({"run", cfg.path()}).code, kExitModelError);
}

}  // namespace
}  // namespace qprop::cli
