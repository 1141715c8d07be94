// Copyright 2026 The diamsieve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "diamsieve/errors.h"

#include "diamsieve/cli.h"

namespace diamsieve::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunArgs(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

// Minimal RFC 4180 reader for the tool's own output.
std::vector<std::vector<std::string>> ParseCsv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      row.push_back(field);
      field.clear();
    } else if (ch == '\r') {
    } else if (ch == '\n') {
      row.push_back(field);
      rows.push_back(row);
      row.clear();
      field.clear();
    } else {
      field += ch;
    }
  }
  return rows;
}

std::map<std::string, std::string> RowMap(const std::vector<std::vector<std::string>>& rows,
                                          std::size_t i) {
  std::map<std::string, std::string> m;
  for (std::size_t c = 0; c < rows[0].size(); ++c) m[rows[0][c]] = rows[i][c];
  return m;
}

TEST(Cli, BoundsExample) {
  const Result r = RunArgs({"bounds", "--family", "simple", "-n", "50", "-p", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = ParseCsv(r.out);
  ASSERT_GE(rows.size(), 2U);
  EXPECT_EQ(rows[0], Columns("bounds"));
  const auto row = RowMap(rows, 1);
  EXPECT_EQ(row.at("source"), "gnp_theorem");
  EXPECT_NEAR(std::stod(row.at("lower")), 0.999372, 2e-6);
  EXPECT_EQ(row.at("upper"), "1");
  EXPECT_EQ(row.at("trivial_upper"), "true");
  EXPECT_EQ(row.at("p"), "1/2");
}

TEST(Cli, ExactJson) {
  const Result r = RunArgs({"exact", "--family", "simple", "-n", "3", "-p", "1/2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_TRUE(doc.is_array());
  ASSERT_EQ(doc.size(), 1U);
  EXPECT_EQ(doc[0]["probability"], "1/2");
  EXPECT_EQ(doc[0]["float"], 0.5);
  EXPECT_EQ(doc[0]["family"], "simple");
}

TEST(Cli, ExactAcceptsExactDecimals) {
  const Result r = RunArgs({"exact", "--family", "simple", "-n", "3", "-p", "0.25"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(RowMap(ParseCsv(r.out), 1).at("p"), "1/4");
}

TEST(Cli, ThresholdSolvesP) {
  const Result r = RunArgs({"threshold", "--family", "simple", "--c", "-2", "-n", "2000,3000",
                            "--trials", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = ParseCsv(r.out);
  ASSERT_EQ(rows.size(), 3U);
  const auto row = RowMap(rows, 1);
  EXPECT_NEAR(std::stod(row.at("p")), 0.09083, 1e-4);
  EXPECT_NEAR(std::stod(row.at("asymptotic_lower_ref")), 0.8647, 1e-4);
  EXPECT_NEAR(std::stod(row.at("c_observed")), -2.0, 1e-9);
  EXPECT_FALSE(row.at("p_hat").empty());
}

TEST(Cli, SieveRowCarriesExactStrings) {
  const Result r = RunArgs({"sieve", "--family", "bipartite", "--shape", "2,3", "-p", "1/2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto row = RowMap(ParseCsv(r.out), 1);
  EXPECT_EQ(row.at("shape"), "2,3");
  EXPECT_EQ(row.at("lower_raw_exact"), "-71/64");
  EXPECT_EQ(row.at("b_count"), "4");
}

TEST(Cli, SweepGrid) {
  const Result r = RunArgs({"sweep", "--family", "kpartite", "-k", "3", "-n", "9,12",
                            "-p", "1/3,0.5,c=0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = ParseCsv(r.out);
  EXPECT_EQ(rows.size(), 7U);
  EXPECT_EQ(rows[0], Columns("sweep"));
  EXPECT_EQ(RowMap(rows, 1).at("shape"), "3,3,3");
  EXPECT_EQ(RowMap(rows, 1).at("successes"), "");
}

TEST(Cli, SimulateRowReproduces) {
  const Result a = RunArgs({"simulate", "--family", "directed", "-n", "12", "-p", "0.4",
                            "--trials", "300", "--seed", "17", "--workers", "1"});
  ASSERT_EQ(a.code, 0) << a.err;
  const auto row = RowMap(ParseCsv(a.out), 1);
  const Result b = RunArgs({"simulate", "--family", row.at("family"), "-n", row.at("n"), "-p",
                            row.at("p"), "--trials", row.at("trials"), "--seed", row.at("seed"),
                            "--workers", "4"});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(RowMap(ParseCsv(b.out), 1).at("successes"), row.at("successes"));
}

TEST(Cli, ColumnSetsAreFixed) {
  const std::vector<std::vector<std::string>> runs = {
      {"bounds", "--family", "bipartite", "-n", "10", "-p", "0.3"},
      {"sieve", "--family", "simple", "-n", "4", "-p", "1/3"},
      {"exact", "--family", "directed", "-n", "3", "-p", "1/3"},
      {"simulate", "--family", "simple", "-n", "5", "-p", "1/3", "--trials", "10"},
      {"sweep", "--family", "simple", "-n", "5", "-p", "1/3"},
      {"threshold", "--family", "bipartite", "-n", "40", "--c", "1"},
  };
  for (const auto& args : runs) {
    const Result r = RunArgs(args);
    ASSERT_EQ(r.code, 0) << args[0] << ": " << r.err;
    EXPECT_EQ(ParseCsv(r.out)[0], Columns(args[0])) << args[0];
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(RunArgs({}).code, kUsage);
  EXPECT_EQ(RunArgs({"bounds", "--family", "simple", "-n", "5", "-p", "0.5", "--bogus"}).code, kUsage);
  EXPECT_EQ(RunArgs({"exact", "--family", "simple", "-n", "3", "-p", "c=1"}).code, kUsage);
  EXPECT_EQ(RunArgs({"exact", "--family", "simple", "-n", "3", "-p", "half"}).code, kUsage);
  EXPECT_EQ(RunArgs({"bounds", "--family", "simple", "-p", "0.5"}).code, kUsage);
  EXPECT_EQ(RunArgs({"bounds", "--family", "weird", "-n", "5", "-p", "0.5"}).code, kUsage);
  EXPECT_EQ(RunArgs({"bounds", "--family", "simple", "-n", "5", "-p", "1"}).code, kDomain);
  EXPECT_EQ(RunArgs({"sieve", "--family", "kpartite", "--shape", "1,1,2", "-p", "1/2"}).code, kDomain);
  EXPECT_EQ(RunArgs({"exact", "--family", "simple", "-n", "9", "-p", "1/2"}).code, kResource);
  EXPECT_EQ(RunArgs({"--help"}).code, kOk);
}

TEST(Cli, ErrorsAreSingleLines) {
  const Result r = RunArgs({"exact", "--family", "simple", "-n", "9", "-p", "1/2"});
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(r.err.rfind("diamsieve: error[resource]: ", 0), 0U) << r.err;
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(Cli, WorkersFromEnvironment) {
  ::setenv("DIAMSIEVE_WORKERS", "many", 1);
  EXPECT_EQ(RunArgs({"simulate", "--family", "simple", "-n", "5", "-p", "0.5"}).code, kUsage);
  ::setenv("DIAMSIEVE_WORKERS", "2", 1);
  EXPECT_EQ(RunArgs({"simulate", "--family", "simple", "-n", "5", "-p", "0.5"}).code, kOk);
  ::unsetenv("DIAMSIEVE_WORKERS");
}

TEST(Cli, WritesOutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "diamsieve_cli_test.json";
  const Result r = RunArgs({"bounds", "--family", "bipartite", "--shape", "30,40", "-p", "1/2",
                            "--format", "json", "-o", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  EXPECT_NEAR(doc[0]["lower"].get<double>(), 0.8527, 1e-4);
  std::filesystem::remove(path);
}

TEST(Csv, QuotesWhenNeeded) {
  EXPECT_EQ(CsvField("plain"), "plain");
  EXPECT_EQ(CsvField("2,3"), "\"2,3\"");
  EXPECT_EQ(CsvField("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(CsvField("a\nb"), "\"a\nb\"");
}

TEST(ProbabilitySpec, Forms) {
  EXPECT_EQ(ParseProbabilitySpec("1/3").kind, ProbabilitySpec::Kind::kFraction);
  EXPECT_EQ(ParseProbabilitySpec("0.125").exact, Rational(1, 8));
  const auto c = ParseProbabilitySpec("c=-1.5");
  EXPECT_EQ(c.kind, ProbabilitySpec::Kind::kThreshold);
  EXPECT_EQ(c.c, -1.5);
  EXPECT_THROW(ParseProbabilitySpec("c="), InvalidArgument);
  EXPECT_THROW(ParseProbabilitySpec("1/0"), InvalidArgument);
}

}  // namespace
}  // namespace diamsieve::cli
