#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "charsum_cli/app.hpp"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = charsum::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, AsumSingleRow) {
  const auto r = run({"asum", "--p", "7", "--d", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0], "p,d,m,route_def,route_min,route_orth,route_fromM,closed_form,case_label,pass");
  EXPECT_EQ(ls[1].rfind("7,3,2,17/2,17/2,", 0), 0u) << ls[1];
  EXPECT_NE(ls[1].find(",17/2,d=3,true"), std::string::npos) << ls[1];
}

TEST(Cli, AsumRangeD1) {
  const auto r = run({"asum", "--p-range", "5..500", "--d", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  EXPECT_EQ(ls.size(), 1u + 93u);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto p = ls[i].substr(0, ls[i].find(','));
    EXPECT_NE(ls[i].find("," + p + "/2,"), std::string::npos) << ls[i];
  }
}

TEST(Cli, InvalidInputExitsTwo) {
  auto r = run({"asum", "--p", "8", "--d", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("NotPrime"), std::string::npos) << r.err;
  EXPECT_EQ(run({"asum", "--p", "13", "--d", "5"}).code, 2);
  EXPECT_EQ(run({"asum", "--p-range", "9..3"}).code, 2);
  EXPECT_EQ(run({"asum", "--p", "7", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"dedekind", "--c", "2", "--modulus", "4"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"msq", "--p", "7", "--tolerance", "-1"}).code, 2);
}

TEST(Cli, JsonSchema) {
  const auto r = run({"msq", "--p", "31", "--m", "6", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("schema_version"), 1);
  EXPECT_EQ(doc.at("command"), "msq");
  ASSERT_EQ(doc.at("rows").size(), 1u);
  const auto& row = doc.at("rows")[0];
  EXPECT_EQ(row.at("d"), 5);
  const double pi = std::acos(-1.0);
  EXPECT_NEAR(row.at("mean_square").get<double>(), pi * pi / 6 * 66 / 31, 1e-12);
  EXPECT_EQ(row.at("pass"), true);
  EXPECT_EQ(doc.at("summary").at("failed"), 0);
}

TEST(Cli, DeterministicAcrossJobs) {
  const auto a = run({"equidist", "--p-range", "3..140", "--seed", "9"});
  const auto b = run({"equidist", "--p-range", "3..140", "--seed", "9", "--jobs", "3"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("sampled_lower_bound"), std::string::npos);
  const auto c = run({"classnum", "--p-range", "3..120", "--format", "json"});
  const auto d = run({"classnum", "--p-range", "3..120", "--format", "json", "--jobs", "4"});
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, Dedekind) {
  auto r = run({"dedekind", "--c", "2", "--modulus", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out)[1], "2,3,-1/18,-1/18,-1/18,true,true");
  r = run({"dedekind", "--modulus-range", "2..40"});
  EXPECT_EQ(r.code, 0);
  EXPECT_GT(lines(r.out).size(), 400u);
}

TEST(Cli, ScanFamily) {
  const auto r = run({"scan-family", "--a-range", "-10..10", "--d", "3,5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("2,5,31,ok,1813/30"), std::string::npos);
  EXPECT_NE(r.out.find("-2,5,11,ok,203/10"), std::string::npos);
  EXPECT_NE(r.out.find("3,3,13,ok,31/2"), std::string::npos);
  EXPECT_NE(r.out.find("4,3,21,composite"), std::string::npos);
  EXPECT_NE(r.out.find("2,3,7,ok,17/2,"), std::string::npos);
  for (const auto& line : lines(r.out)) {
    if (line.rfind("2,3,7,", 0) == 0) EXPECT_NE(line.find(",17/2,-1,true"), std::string::npos) << line;
  }
}

TEST(Cli, FrequencyTable) {
  const auto r = run({"freq", "--p", "401", "--taus", "0,1,2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc.at("rows").size(), 3u);
  EXPECT_EQ(doc.at("rows")[0].at("phi_p_exact"), "399/400");
  for (const auto& row : doc.at("rows")) EXPECT_EQ(row.at("in_valid_range"), false);
  const auto with = run({"freq", "--p", "401", "--taus", "0", "--include-principal"});
  EXPECT_NE(with.out.find(",1,1,"), std::string::npos) << with.out;
}

TEST(Cli, ClassNumber) {
  auto r = run({"classnum", "--p", "23", "--d", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out)[1].rfind("23,1,22,46,3,", 0), 0u);
  r = run({"classnum", "--p", "1009", "--d", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("PrecisionBudgetExceeded"), std::string::npos);
}

TEST(Cli, OutFileAndText) {
  const std::string path = ::testing::TempDir() + "charsum_cli_out.csv";
  ASSERT_EQ(run({"asum", "--p", "13", "--out", path}).code, 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(lines(ss.str()).size(), 3u);  // d = 1 and d = 3
  std::remove(path.c_str());
  const auto t = run({"asum", "--p", "13", "--format", "text"});
  EXPECT_NE(t.out.find("2 rows, 0 failed"), std::string::npos) << t.out;
}

TEST(Cli, VerifyAllAndTolerance) {
  const auto ok = run({"verify-all", "--format", "json"});
  ASSERT_EQ(ok.code, 0) << ok.err << ok.out;
  const auto doc = nlohmann::json::parse(ok.out);
  EXPECT_EQ(doc.at("summary").at("failed"), 0);
  EXPECT_GE(doc.at("rows").size(), 8u);
  // Float residuals sit at a few ulps, so 1e-16 is over-tight.
  const auto tight = run({"verify-all", "--tolerance", "1e-16"});
  EXPECT_EQ(tight.code, 1);
  EXPECT_NE(tight.err.find("verification failure"), std::string::npos);
}
