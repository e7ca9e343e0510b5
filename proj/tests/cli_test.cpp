// Copyright 2026 The bireshape Authors.
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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace bireshape::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bireshape_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    std::string path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }
  std::string path(const std::string& name) { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "bireshape");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return run_cli(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(CliTest, PrecomputeAndRunMpe) {
  auto pts = file("p.txt", "1 2\n2 3\n3 5\n");
  ASSERT_EQ(run({"precompute", "--task", "mpe-distinct", "--field", "7", "--input", pts, "--d",
                 "2", "--out", path("pack")}),
            0)
      << err_.str();
  EXPECT_NE(out_.str().find("balanced: true"), std::string::npos);
  auto f = file("f.txt", "ydeg 1\n1 0 1\n0 1\n");
  ASSERT_EQ(run({"run", "--pack", path("pack"), "--input", f, "--verify"}), 0) << err_.str();
  EXPECT_EQ(out_.str(), "3 5 1\nverify: PASS\n");
}

TEST_F(CliTest, DegreeOnePackHasSingletonEta) {
  auto pts = file("p.txt", "1 2\n2 3\n3 5\n");
  ASSERT_EQ(run({"precompute", "--task", "mpe-distinct", "--field", "7", "--input", pts, "--d",
                 "1", "--out", path("pack")}),
            0);
  EXPECT_NE(slurp(path("pack")).find("\neta 1\n"), std::string::npos);
}

TEST_F(CliTest, ModcompRun) {
  auto ma = file("ma.txt", "2 0 0 1\n1 1 1\n");
  ASSERT_EQ(run({"precompute", "--task", "modcomp", "--field", "7", "--input", ma, "--d", "3",
                 "--out", path("pack")}),
            0)
      << err_.str();
  auto f = file("f.txt", "ydeg 2\n-1\n-1\n0 1\n");
  ASSERT_EQ(run({"run", "--pack", path("pack"), "--input", f, "--verify"}), 0);
  EXPECT_EQ(out_.str(), "1 2\nverify: PASS\n");
}

TEST_F(CliTest, ExitCodes) {
  auto rep = file("r.txt", "1 2\n1 3\n");
  EXPECT_EQ(run({"precompute", "--task", "mpe-distinct", "--field", "7", "--input", rep, "--d",
                 "2", "--out", path("x")}),
            2);
  EXPECT_NE(err_.str().find("distinct"), std::string::npos);

  auto pts = file("p.txt", "1 2\n2 3\n3 5\n");
  ASSERT_EQ(run({"precompute", "--task", "mpe-distinct", "--field", "7", "--input", pts, "--d",
                 "2", "--out", path("pack")}),
            0);
  auto big = file("big.txt", "ydeg 2\n0 1\n0 1\n0 1\n");
  EXPECT_EQ(run({"run", "--pack", path("pack"), "--input", big}), 3);
  EXPECT_EQ(run({"run", "--pack", path("missing"), "--input", big}), 4);
  auto junk = file("junk", "not a pack\n");
  EXPECT_EQ(run({"run", "--pack", junk, "--input", big}), 4);
  EXPECT_EQ(run({"precompute", "--task", "nope"}), 2);
  EXPECT_EQ(run({}), 2);
  EXPECT_EQ(run({"--help"}), 0);
}

TEST_F(CliTest, InterpolateValencyOutOfRange) {
  // nu_x = 6 exceeds floor(sqrt 6) + 1.
  auto pts = file("p.txt", "0 0\n0 1\n0 2\n0 3\n0 4\n0 5\n");
  EXPECT_EQ(run({"precompute", "--task", "interpolate", "--field", "7", "--input", pts, "--d",
                 "3", "--out", path("x")}),
            2);
}

TEST_F(CliTest, TransposedShearAndInterpolate) {
  auto pts = file("p.txt", "1 2\n1 3\n2 2\n4 5\n");
  for (std::string task : {"mpe-shear", "interpolate"}) {
    ASSERT_EQ(run({"precompute", "--task", task, "--field", "97", "--input", pts, "--d", "2",
                   "--out", path(task), "--transpose"}),
              0)
        << err_.str();
    EXPECT_NE(slurp(path(task)).find("orient yx\n"), std::string::npos);
    EXPECT_EQ(run({"verify-pack", "--pack", path(task)}), 0) << out_.str();
  }
  auto f = file("f.txt", "ydeg 0\n1 0 1\n");
  ASSERT_EQ(run({"run", "--pack", path("mpe-shear"), "--input", f, "--verify"}), 0);
  EXPECT_EQ(out_.str(), "1 1 2 4\nverify: PASS\n");
  auto g = file("g.txt", "5 6 7 8\n");
  ASSERT_EQ(run({"run", "--pack", path("interpolate"), "--input", g, "--verify"}), 0);
  EXPECT_NE(out_.str().find("verify: PASS"), std::string::npos);
}

TEST_F(CliTest, ExtensionInstanceModcomp) {
  auto ma = file("ma.txt", "3 1+2*t 0 5 1\n1 3 0+4*t\n");
  ASSERT_EQ(run({"precompute", "--task", "modcomp", "--field", "7", "--ext", "3", "--input", ma,
                 "--d", "4", "--out", path("pack")}),
            0)
      << err_.str();
  EXPECT_NE(slurp(path("pack")).find("field 7 ext 3\n"), std::string::npos);
  EXPECT_EQ(run({"verify-pack", "--pack", path("pack")}), 0) << out_.str();
}

TEST_F(CliTest, BalanceStatsDeterministic) {
  std::vector<std::string> args = {"balance-stats", "--n", "16", "--field", "65537", "--d", "4",
                                   "--m", "4", "--trials", "6", "--seed", "9", "--threads", "3"};
  ASSERT_EQ(run(args), 0) << err_.str();
  const std::string first = out_.str();
  EXPECT_NE(first.find("prng splitmix64 seed 9"), std::string::npos);
  EXPECT_NE(first.find("balanced_fraction"), std::string::npos);
  args.back() = "1";
  ASSERT_EQ(run(args), 0);
  EXPECT_EQ(out_.str(), first);

  ASSERT_EQ(run({"balance-stats", "--n", "8", "--field", "65537", "--trials", "0"}), 0);
  EXPECT_NE(out_.str().find("balanced_fraction 0.0000 (0/0)"), std::string::npos);
}

TEST_F(CliTest, BenchDigestsRepeat) {
  std::vector<std::string> args = {"bench", "--task", "mpe-distinct", "--sizes", "16,32",
                                   "--seed", "3", "--min-time", "0"};
  ASSERT_EQ(run(args), 0) << err_.str();
  auto digests = [](const std::string& s) {
    std::istringstream in(s);
    std::string line, out;
    while (std::getline(in, line))
      if (!line.empty() && std::isdigit(static_cast<unsigned char>(line[0])))
        out += line.substr(line.rfind(' ')) + "\n";
    return out;
  };
  const std::string first = digests(out_.str());
  EXPECT_EQ(std::count(first.begin(), first.end(), '\n'), 2);
  ASSERT_EQ(run(args), 0);
  EXPECT_EQ(digests(out_.str()), first);
}

TEST(PopovLaw, Prediction) {
  EXPECT_EQ(popov_law_prediction(64, 8), std::vector<int>(8, 8));
  EXPECT_EQ(popov_law_prediction(10, 4), (std::vector<int>{2, 2, 3, 3}));
}

}  // namespace
}  // namespace bireshape::cli
