#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using hypcover::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST(Cli, DensityRecordConfiguration) {
  const auto r = invoke({"density", "--u", "7", "--v", "3", "--w", "7", "--edge", "A1A2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["density"].get<double>(), 1.26829, 5e-5);
  EXPECT_TRUE(j["feasible"].get<bool>());
  EXPECT_EQ(j["contact_edge"], "A1A2");
  EXPECT_TRUE(j.contains("t"));
  EXPECT_EQ(j["per_edge"].size(), 6u);
}

TEST(Cli, DensityQA2Csv) {
  const auto r = invoke({"--format", "csv", "density", "--u", "3", "--v", "7", "--w", "3", "--edge", "QA2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(first_line(r.out), "u,v,w,contact_edge,t,h1,h2,density,vol_H1,vol_H2,vol_F,feasible,uncovered_edges");
  EXPECT_NE(r.out.find("1.28943"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  auto r = invoke({"density", "--u", "4", "--v", "4", "--w", "4"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("1/u + 1/v"), std::string::npos) << r.err;
  r = invoke({"density", "--u", "7", "--v", "3", "--w", "7", "--edge", "EA1", "--t", "0.5"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("QA2"), std::string::npos) << r.err;
  EXPECT_EQ(invoke({"density", "--u", "7", "--v", "3", "--w", "7", "--edge", "EA1"}).code, 2);
  EXPECT_EQ(invoke({"congruent", "--u", "7", "--v", "3", "--w", "7", "--edge", "QA2"}).code, 3);
  EXPECT_EQ(invoke({"density", "--u", "7"}).code, 2);
  EXPECT_EQ(invoke({"bogus"}).code, 2);
  EXPECT_EQ(invoke({"table", "nope"}).code, 2);
  EXPECT_EQ(invoke({"family", "--u-lo", "5.5"}).code, 2);
  EXPECT_EQ(invoke({"planar-scan", "--a", "2", "--b", "2"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, CongruentTableRowsAndDeterminism) {
  const std::vector<std::string> args{"table", "congruent"};
  const auto a = invoke(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(first_line(a.out), "type,u,v,w,contact_edge,t,delta_min,h1,h2,feasible");
  std::istringstream in(a.out);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 11);
  EXPECT_EQ(invoke(args).out, a.out);
}

TEST(Cli, SwappedRowInA1A2Table) {
  const auto r = invoke({"table", "noncongruent-A1A2"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  bool found = false;
  while (std::getline(in, line)) {
    if (line.find(",5,4,6,") != std::string::npos) {
      ASSERT_EQ(line.rfind("\"F_5^(4,6)\",", 0), 0u) << line;
      std::vector<std::string> f{"type"};
      std::istringstream cells(line.substr(line.find("\",") + 2));
      for (std::string c; std::getline(cells, c, ',');) f.push_back(c);
      ASSERT_EQ(f.size(), 10u);
      EXPECT_NEAR(std::stod(f[6]), 1.34255, 5e-5) << line;
      EXPECT_NEAR(std::stod(f[7]), 1.26048, 5e-5) << line;
      EXPECT_NEAR(std::stod(f[8]), 0.95234, 5e-5) << line;
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Cli, GeometryJson) {
  const auto r = invoke({"geometry", "--u", "7", "--v", "3", "--w", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"params", "gram", "vertices", "planes", "volume"}) EXPECT_TRUE(j.contains(key)) << key;
}

TEST(Cli, PlanarScanCsv) {
  const auto r = invoke({"planar-scan", "--k-max", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(first_line(r.out), "a,b,h1,h2,pentagon_area,delta,gap_to_limit");
}

TEST(Cli, OutWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "hypcover_cli_out_test.json";
  std::filesystem::remove(path);
  const auto r = invoke({"--out", path.string(), "density", "--u", "7", "--v", "3", "--w", "7", "--t", "0.3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  const auto j = nlohmann::json::parse(f);
  EXPECT_NEAR(j["t"].get<double>(), 0.3, 1e-12);
  std::filesystem::remove(path);
}
