// Copyright 2026 The xPIPG Authors
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

#include "xpipg_cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "test_problems.hpp"

namespace xpipg::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "xpipg");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("xpipg_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
    return path(name);
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

TEST(ExitCodeTest, Contract) {
  EXPECT_EQ(exit_code(SolveStatus::kOptimal), 0);
  EXPECT_EQ(exit_code(SolveStatus::kPrimalInfeasible), 2);
  EXPECT_EQ(exit_code(SolveStatus::kDualInfeasible), 3);
  EXPECT_EQ(exit_code(SolveStatus::kMaxIterations), 4);
  EXPECT_EQ(exit_code(SolveStatus::kNumericalFailure), 70);
}

TEST_F(CliTest, SolveTrivial) {
  const std::string file = write("box.qp", write_problem(test_problems::scalar_box_qp()));
  const std::string sol = path("sol.txt");
  const Outcome r = run_cli({"solve", file, "--solution", sol});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("status=optimal\n"), std::string::npos);
  EXPECT_NE(r.out.find("certificate_norm=0\n"), std::string::npos);
  std::istringstream lines(slurp(sol));
  double z = 0.0;
  lines >> z;
  EXPECT_NEAR(z, 1.0, 1e-6);
}

TEST_F(CliTest, SolveInfeasible) {
  const std::string file = write("inf.qp", write_problem(test_problems::scalar_primal_infeasible()));
  const Outcome r = run_cli({"solve", file});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("status=primal_infeasible\n"), std::string::npos);
  const auto pos = r.out.find("certificate_norm=");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_GT(std::stod(r.out.substr(pos + 17)), 0.0);
}

TEST_F(CliTest, SolveDualInfeasibleAndMaxIterations) {
  const std::string file = write("dual.qp", write_problem(test_problems::scalar_dual_infeasible()));
  EXPECT_EQ(run_cli({"solve", file}).code, 3);
  const std::string inf = write("inf.qp", write_problem(test_problems::scalar_primal_infeasible()));
  EXPECT_EQ(run_cli({"solve", inf, "--max-iters", "1"}).code, 4);
}

TEST_F(CliTest, DivergenceWarning) {
  ConicQP qp = test_problems::scalar_dual_infeasible();
  qp.P = SparseMatrix::from_triplets(1, 1, {{0, 0, -1.0}});
  qp.q[0] = 1.0;
  const std::string file = write("nc.qp", write_problem(qp));
  // Divergence is reported as max iterations with a warning.
  const Outcome r = run_cli({"solve", file, "--alpha", "1"});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.out.find("warning="), std::string::npos);
}

TEST_F(CliTest, MalformedHeader) {
  const std::string file = write("bad.qp", "conicqp v9\nn 1\n");
  const Outcome r = run_cli({"solve", file});
  EXPECT_EQ(r.code, 64);
  EXPECT_NE(r.err.find("line 1"), std::string::npos) << r.err;
}

TEST_F(CliTest, InvalidProblemAndUsage) {
  ConicQP qp = test_problems::scalar_box_qp();
  qp.box = BoxProduct::uniform(1, 2.0, 1.0);
  const std::string file = write("rev.qp", write_problem(qp));
  const Outcome r = run_cli({"solve", file});
  EXPECT_EQ(r.code, 64);
  EXPECT_NE(r.err.find("bounds reversed at coordinate 0"), std::string::npos);
  EXPECT_EQ(run_cli({"solve", path("missing.qp")}).code, 64);
  EXPECT_EQ(run_cli({"solve", file, "--rho", "2.5"}).code, 64);
  EXPECT_EQ(run_cli({"solve"}).code, 64);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 64);
  EXPECT_EQ(run_cli({}).code, 64);
  EXPECT_EQ(run_cli({"bench", "--seeds", "0"}).code, 64);
  EXPECT_EQ(run_cli({"bench", "--l", "x"}).code, 64);
  EXPECT_EQ(run_cli({"emit", "--tau", "1"}).code, 64);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST_F(CliTest, TraceCsv) {
  const std::string file = write("osc.qp", "");
  ASSERT_EQ(run_cli({"emit", "--l", "2", "--tau", "20", "--seed", "1", "--out", file}).code, 0);
  const std::string trace = path("trace.csv");
  const Outcome r = run_cli({"solve", file, "--trace", trace});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  std::istringstream csv(slurp(trace));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "iter,dz,dw,r_eq22_a,r_eq22_b,r_eq22_c,v_eq23");
  std::string last;
  int rows = 0;
  while (std::getline(csv, line)) {
    last = line;
    ++rows;
    std::istringstream fields(line);
    std::string f;
    std::getline(fields, f, ',');
    std::getline(fields, f, ',');
    EXPECT_GE(std::stod(f), 0.0);
    std::getline(fields, f, ',');
    EXPECT_GE(std::stod(f), 0.0);
  }
  ASSERT_GT(rows, 0);
  std::istringstream fields(last);
  std::string f;
  std::getline(fields, f, ',');
  std::getline(fields, f, ',');
  EXPECT_LE(std::stod(f), 1e-4);
  std::getline(fields, f, ',');
  EXPECT_LE(std::stod(f), 1e-4);
}

TEST_F(CliTest, EmitDimensionsAndRoundTrip) {
  const Outcome r = run_cli({"emit", "--l", "1", "--tau", "2"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  const ConicQP qp = read_problem(in);
  EXPECT_EQ(qp.num_variables(), 8);
  EXPECT_EQ(qp.num_constraints(), 4);
  EXPECT_TRUE(validate(qp).empty());
  EXPECT_EQ(write_problem(qp), r.out);
}

TEST_F(CliTest, EmitThenSolveMatchesInProcess) {
  const std::string file = path("e.qp");
  ASSERT_EQ(run_cli({"emit", "--l", "2", "--tau", "8", "--seed", "5", "--out", file}).code, 0);
  const Outcome r = run_cli({"solve", file});
  const SolveResult direct = solve(bench_instance(2, 8, 0.1, 0.05, 5));
  EXPECT_EQ(r.code, exit_code(direct.status));
  EXPECT_NE(r.out.find("iterations=" + std::to_string(direct.stats.iterations) + "\n"),
            std::string::npos);
}

std::string drop_last_column(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::string out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + "\n";
  return out;
}

TEST_F(CliTest, BenchIsDeterministicAcrossJobs) {
  const std::string a = path("a.csv");
  const std::string b = path("b.csv");
  const std::vector<std::string> common = {"bench", "--l", "2", "--tau", "6", "--seeds", "3",
                                           "--rho", "1.0,1.6", "--gamma", "0.1,0.8"};
  std::vector<std::string> args = common;
  args.insert(args.end(), {"--out", a});
  const Outcome ra = run_cli(args);
  ASSERT_EQ(ra.code, 0) << ra.err;
  args = common;
  args.insert(args.end(), {"--out", b, "--jobs", "3"});
  ASSERT_EQ(run_cli(args).code, 0);
  const std::string csv = slurp(a);
  EXPECT_EQ(drop_last_column(csv), drop_last_column(slurp(b)));

  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kRunRecordHeader);
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 12);
  EXPECT_NE(ra.out.find("cell gamma=0.1 rho=1.6 runs=3"), std::string::npos) << ra.out;
  EXPECT_NE(ra.out.find("cell gamma=0.8 rho=1 runs=3"), std::string::npos);
}

TEST(RunBenchTest, GammaCellsHaveExpectedStatus) {
  BenchOptions o;
  o.masses = 4;
  o.horizon = 20;
  o.gammas = {0.1, 0.8};
  o.seeds = 3;
  const auto records = run_bench(o);
  ASSERT_EQ(records.size(), 6u);
  for (const RunRecord& r : records) {
    const SolveStatus want = r.gamma < 0.5 ? SolveStatus::kOptimal : SolveStatus::kPrimalInfeasible;
    EXPECT_EQ(r.status, want) << r.instance;
  }
}

}  // namespace
}  // namespace xpipg::cli
