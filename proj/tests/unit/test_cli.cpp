// Copyright 2026 The Scramble Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "cli.hpp"
#include "scramble/csv.hpp"

namespace scramble {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

CsvTable parse(const std::string& text) {
  std::istringstream in(text);
  return read_csv(in);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("scramble_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }

  fs::path dir_;
};

TEST_F(CliTest, SelfDualEntropyTable) {
  const auto r = run({"entropy-table"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto t = parse(r.out);
  EXPECT_EQ(t.header, series_header());
  ASSERT_EQ(t.rows.size(), 12u);
  const double i3[] = {0, 1, 0, -2, 0, 0, 0, 0, -2, 0, 1, 0};
  const double s_yz[] = {0, 1, 2, 2, 2, 2, 2, 2, 2, 2, 1, 0};
  for (std::size_t n = 0; n < 12; ++n) {
    EXPECT_NEAR(parse_float(t.rows[n][1], n + 2), i3[n], 1e-8) << n;
    EXPECT_NEAR(parse_float(t.rows[n][7], n + 2), s_yz[n], 1e-8) << n;
  }
}

TEST_F(CliTest, ZeroPeriodConstantColumn) {
  const auto r = run({"simulate", "--n", "6", "--ell", "2", "--tau", "0", "--steps", "15", "--init", "neel"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto t = parse(r.out);
  ASSERT_EQ(t.rows.size(), 16u);
  for (const auto& row : t.rows) EXPECT_EQ(row[1], t.rows.front()[1]);
}

TEST_F(CliTest, OracleMatchesDefault) {
  const std::vector<std::string> base{"simulate", "--n", "4", "--ell", "1", "--tau", "0.3", "--hx", "1", "--steps", "40"};
  auto with_oracle = base;
  with_oracle.push_back("--oracle");
  const auto a = run(base), b = run(with_oracle);
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  const auto ta = parse(a.out), tb = parse(b.out);
  ASSERT_EQ(ta.rows.size(), tb.rows.size());
  for (std::size_t k = 0; k < ta.rows.size(); ++k)
    for (std::size_t c = 1; c < ta.header.size(); ++c)
      EXPECT_NEAR(parse_float(ta.rows[k][c], k), parse_float(tb.rows[k][c], k), 1e-9);
}

TEST_F(CliTest, TfimSimulate) {
  const auto r = run({"simulate", "--model", "tfim", "--n", "5", "--ell", "2", "--hx", "1", "--steps", "20"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto t = parse(r.out);
  ASSERT_EQ(t.rows.size(), 21u);
  EXPECT_NEAR(parse_float(t.rows.back()[0], 22), 2.0, 1e-12);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"simulate", "--n", "5", "--ell", "2"}).code, 2);  // floquet needs --tau
  EXPECT_EQ(run({"simulate", "--n", "5", "--ell", "4", "--tau", "pi/4"}).code, 2);
  EXPECT_EQ(run({"simulate", "--n", "13", "--ell", "2", "--tau", "pi/4"}).code, 2);
  EXPECT_EQ(run({"simulate", "--n", "5", "--ell", "2", "--tau", "banana"}).code, 2);
  EXPECT_EQ(run({"simulate", "--n", "5", "--ell", "2", "--tau", "pi/4", "--init", "ferro"}).code, 2);
  EXPECT_EQ(run({"simulate", "--model", "tfim", "--n", "5", "--ell", "2", "--tau", "pi/4"}).code, 2);
  EXPECT_EQ(run({"simulate", "--n", "5", "--ell", "2", "--tau", "pi/4", "--dt", "0.2"}).code, 2);
  EXPECT_EQ(run({"simulate", "--n", "5", "--ell", "2", "--tau", "pi/4", "--steps", "0"}).code, 2);
  EXPECT_EQ(run({"sweep", "--out", dir_.string()}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, EmptyConfigIsUsageError) {
  const auto cfg = write("empty.cfg", "# nothing\n");
  const auto r = run({"sweep", "--config", cfg.string(), "--out", (dir_ / "out").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, UnwritableOutput) {
  const auto blocker = write("blocker", "x");
  const auto inside = (blocker / "sub").string();
  EXPECT_EQ(run({"entropy-table", "--out", inside + "/t.csv"}).code, 4);
  const auto cfg = write("ok.cfg", "n = 4\nell = 1\ntau = pi/8\nsteps = 20\nt1 = 5\nt2 = 20\n");
  EXPECT_EQ(run({"sweep", "--config", cfg.string(), "--out", inside}).code, 4);
  const auto tb = write("t.csv", run({"entropy-table"}).out);
  EXPECT_EQ(run({"plot", tb.string(), "--out", inside + "/p.svg"}).code, 4);
}

TEST_F(CliTest, SweepOutputsAndRerunIdentical) {
  const auto cfg = write("s.cfg",
                         "n = 4, 5\nell = all\ntau = 1*eps/2, 0.3\ninit = allup, neel\nhx = 0, 1\n"
                         "steps = 80\nt1 = 20\nt2 = 80\n");
  const auto a = dir_ / "a", b = dir_ / "b";
  const auto ra = run({"sweep", "--config", cfg.string(), "--out", a.string(), "--threads", "1"});
  const auto rb = run({"sweep", "--config", cfg.string(), "--out", b.string(), "--threads", "2"});
  ASSERT_EQ(ra.code, 0) << ra.err;
  ASSERT_EQ(rb.code, 0) << rb.err;
  const auto summary = parse(slurp(a / "summary.csv"));
  EXPECT_EQ(summary.header, summary_header());
  EXPECT_EQ(summary.rows.size(), 2u * 2u * 2u * (2u + 3u));
  EXPECT_EQ(slurp(a / "summary.csv"), slurp(b / "summary.csv"));
  EXPECT_EQ(slurp(a / "summary.json"), slurp(b / "summary.json"));
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(a / "series")) {
    ++files;
    EXPECT_EQ(slurp(e.path()), slurp(b / "series" / e.path().filename()));
  }
  EXPECT_EQ(files, summary.rows.size());
  // Overwriting an existing output directory reproduces the same bytes.
  const auto before = slurp(a / "summary.csv");
  ASSERT_EQ(run({"sweep", "--config", cfg.string(), "--out", a.string()}).code, 0);
  EXPECT_EQ(slurp(a / "summary.csv"), before);
}

TEST_F(CliTest, PlotSingleRowMarker) {
  const auto p = write("one.csv", "time,i3\n3,-0.5\n");
  const auto r = run({"plot", p.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("<circle class=\"marker\""), std::string::npos);
  EXPECT_EQ(r.out.find("<polyline class=\"series\""), std::string::npos);
}

TEST_F(CliTest, PlotLogLogSkipsNonPositive) {
  const auto tb = write("t.csv", run({"entropy-table"}).out);
  const auto r = run({"plot", tb.string(), "--loglog"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("warning: skipped"), std::string::npos);
  EXPECT_NE(r.out.find("<svg"), std::string::npos);
}

TEST_F(CliTest, PlotSelfDualTouchesMinusTwoTwice) {
  const auto tb = write("t.csv", run({"entropy-table"}).out);
  const auto r = run({"plot", tb.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::smatch m;
  const std::regex grid(R"re(<line x1="[\d.]+" y1="([\d.]+)"[^>]*/>\n<text[^>]*>-2</text>)re");
  ASSERT_TRUE(std::regex_search(r.out, m, grid));
  const std::string floor_y = m[1];
  ASSERT_TRUE(std::regex_search(r.out, m, std::regex(R"re(points="([^"]*)")re")));
  std::istringstream pts(m[1].str());
  std::string pt;
  int hits = 0, count = 0;
  while (pts >> pt) {
    ++count;
    if (pt.substr(pt.find(',') + 1) == floor_y) ++hits;
  }
  EXPECT_EQ(count, 12);
  EXPECT_EQ(hits, 2);
}

TEST_F(CliTest, MalformedCsvReportsRow) {
  const auto bad = write("bad.csv", "time,i3\n0,0\n1,-0.1\n2,oops\n");
  auto r = run({"plot", bad.string()});
  EXPECT_EQ(r.code, 5);
  EXPECT_NE(r.err.find("row 4"), std::string::npos) << r.err;
  const auto ragged = write("ragged.csv", "time,i3\n0,0\n1\n");
  r = run({"fit", ragged.string()});
  EXPECT_EQ(r.code, 5);
  EXPECT_NE(r.err.find("row 3"), std::string::npos) << r.err;
  const auto schema = write("schema.csv", "alpha,beta\n1,2\n");
  EXPECT_EQ(run({"plot", schema.string()}).code, 5);
}

TEST_F(CliTest, FitQuadratic) {
  std::string text = "time,i3\n";
  for (int n = 0; n <= 20; ++n) text += std::to_string(n) + "," + std::to_string(1 - n * n) + "\n";
  const auto p = write("q.csv", text);
  const auto r = run({"fit", p.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto t = parse("key,value\n" + r.out);
  const auto row = [&](const std::string& key) {
    for (const auto& x : t.rows)
      if (x[0] == key) return parse_float(x[1], 0);
    ADD_FAILURE() << key;
    return 0.0;
  };
  EXPECT_NEAR(row("exponent"), 2.0, 1e-9);
  EXPECT_EQ(row("window_start"), 2.0);
}

TEST_F(CliTest, FitInfeasibleIsNumericalError) {
  const auto p = write("flat.csv", "time,i3\n0,0\n1,0\n2,0\n3,0\n4,0\n");
  EXPECT_EQ(run({"fit", p.string()}).code, 3);
}

TEST_F(CliTest, SelfDualCommand) {
  const auto r = run({"self-dual", "--n", "5", "--ell", "2", "--steps", "100", "--t1", "20", "--t2", "100"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Csv, RoundTrip) {
  CsvTable t;
  t.header = {"a", "b,c", "d"};
  t.rows = {{"1", "x \"q\"", ""}, {"-0", "line", "3.5"}};
  std::ostringstream out;
  write_csv(out, t);
  std::istringstream in(out.str());
  const auto back = read_csv(in);
  EXPECT_EQ(back.header, t.header);
  EXPECT_EQ(back.rows, t.rows);
  EXPECT_EQ(format_float(-0.0), "0");
  EXPECT_EQ(parse_float("+2.5", 1), 2.5);
  EXPECT_THROW(parse_float("2.5x", 7), MalformedCsvError);
}

TEST(Csv, CrlfAccepted) {
  std::istringstream in("time,i3\r\n0,0\r\n1,-0.5\r\n");
  const auto t = read_csv(in);
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[1][1], "-0.5");
}

}  // namespace
}  // namespace scramble
