#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "qcgeom/cli.hpp"
#include "qcgeom/code_file.hpp"
#include "qcgeom/families.hpp"

using namespace qcgeom;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;

  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli_dispatch(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qcgeom_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const StabilizerCode& code) const {
    write_code_file(path(name), code);
    return path(name);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, family_then_certify_repetition) {
  ASSERT_EQ(run({"family", "repetition", "12", "-o", path("rep12.code")}).code, kExitOk);
  const auto r = run({"certify", path("rep12.code"), "--full"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["status"], "certified");
  EXPECT_GE(j["bound"]["bound_value"].get<int>(), 1);
  EXPECT_EQ(j["cross_check"]["distance"], 1);
  EXPECT_EQ(j["cross_check"]["verdict"], "pass");
}

TEST_F(CliTest, family_to_stdout) {
  const auto r = run({"family", "five_qubit"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, serialize_code_file(five_qubit_code()));
  EXPECT_EQ(run({"family", "random_local_1d", "12", "3", "2", "8", "7"}).out,
            serialize_code_file(random_local_1d(12, 3, 2, 8, 7)));
}

TEST_F(CliTest, distance_five_qubit) {
  const auto r = run({"distance", write("five.code", five_qubit_code())});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.json()["distance"]["distance"], 3);
  const auto capped = run({"distance", path("five.code"), "--cap", "2"});
  EXPECT_EQ(capped.json()["distance"]["distance"], "exceeds cap");
}

TEST_F(CliTest, graph_report) {
  const auto r = run({"graph", write("rep.code", repetition_code(4))});
  ASSERT_EQ(r.code, kExitOk);
  const auto g = r.json()["graph"];
  EXPECT_EQ(g["n"], 4);
  EXPECT_EQ(g["edges"], 3);
  EXPECT_EQ(g["diameter"], 3);
  EXPECT_EQ(g["edge_list"].size(), 3u);
}

TEST_F(CliTest, dimension_with_pairs) {
  const auto file = write("rep.code", repetition_code(64));
  const auto r = run({"dimension", file, "--pairs", "4:1,6:2,8:2,8:4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const double beta = r.json()["assouad"]["beta_hat"];
  EXPECT_GE(beta, 0.9);
  EXPECT_LE(beta, 1.1);
  EXPECT_EQ(run({"dimension", file, "--pairs", "4:1,2:1/2,8:4"}).code, kExitOk);
  EXPECT_EQ(run({"dimension", file, "--pairs", "4:1,6:2"}).code, kExitInputError);
  EXPECT_EQ(run({"dimension", file, "--pairs", "4:1,6:x,8:2"}).code, kExitInputError);
  EXPECT_EQ(run({"dimension", file, "--pairs", "4:1,2:6,8:2"}).code, kExitInputError);
}

TEST_F(CliTest, decompose_success_and_heuristic_failure) {
  const auto ok = run({"decompose", write("rep.code", repetition_code(10))});
  ASSERT_EQ(ok.code, kExitOk);
  EXPECT_EQ(ok.json()["decomposition"]["status"], "found");
  const auto fail = run({"decompose", write("surface.code", surface_code(3)), "--r", "2", "--cmax", "1"});
  EXPECT_EQ(fail.code, kExitViolation);
  EXPECT_NE(fail.err.find("not found (heuristic)"), std::string::npos);
  EXPECT_EQ(fail.json()["decomposition"]["status"], "not found (heuristic)");
}

TEST_F(CliTest, certify_is_byte_identical_across_runs) {
  const auto file = write("rl.code", random_local_1d(14, 3, 2, 7, 11));
  const auto a = run({"certify", file, "--full", "--seed", "9"});
  const auto b = run({"certify", file, "--full", "--seed", "9"});
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.out, b.out);
  ASSERT_EQ(run({"certify", file, "--out", path("report.json")}).code, a.code);
  std::ifstream in(path("report.json"));
  std::stringstream saved;
  saved << in.rdbuf();
  EXPECT_EQ(saved.str(), run({"certify", file}).out);
}

TEST_F(CliTest, input_errors) {
  EXPECT_EQ(run({}).code, kExitInputError);
  EXPECT_EQ(run({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(run({"distance"}).code, kExitInputError);
  EXPECT_EQ(run({"distance", path("missing.code")}).code, kExitInputError);
  const auto bad_flag = run({"graph", write("rep.code", repetition_code(3)), "--bogus"});
  EXPECT_EQ(bad_flag.code, kExitInputError);
  EXPECT_NE(bad_flag.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({"family", "toric", "3"}).code, kExitInputError);
  EXPECT_EQ(run({"family", "repetition"}).code, kExitInputError);
  EXPECT_EQ(run({"family", "random_local_1d", "24", "24", "24", "40", "1"}).code, kExitInputError);
  {
    std::ofstream bad(path("bad.code"));
    bad << "n=2\nXI\nZI\n";
  }
  const auto parse = run({"graph", path("bad.code")});
  EXPECT_EQ(parse.code, kExitInputError);
  EXPECT_NE(parse.err.find("lines 2 and 3"), std::string::npos);
  const auto trivial = write("trivial.code", StabilizerCode::from_strings(2, {"ZI", "IZ"}));
  EXPECT_EQ(run({"distance", trivial}).code, kExitInputError);
}

TEST_F(CliTest, certify_without_logicals_is_a_violation) {
  const auto trivial = write("trivial.code", StabilizerCode::from_strings(2, {"ZI", "IZ"}));
  const auto r = run({"certify", trivial});
  EXPECT_EQ(r.code, kExitViolation);
  EXPECT_EQ(r.json()["status"], "no logical qubits");
}
