#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("kserver_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path path(const std::string& name) const { return dir_ / name; }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
  }

  static std::string read(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // Runs the CLI with stdout and stderr captured together.
  Result run(const std::string& args) const {
    const fs::path captured = path("captured.txt");
    const std::string command =
        std::string("\"") + KSERVER_CLI_PATH + "\" " + args + " > \"" + captured.string() + "\" 2>&1";
    const int status = std::system(command.c_str());
    Result r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read(captured);
    return r;
  }

  std::string m3(const std::string& requests = "[2]") const {
    write("m3.json", R"({"n": 3, "k": 2, "dist": [[0,1,3],[1,0,2],[3,2,0]], "initial": [0, 1], "requests": )" +
                         requests + "}");
    return "\"" + path("m3.json").string() + "\"";
  }

  fs::path dir_;
};

TEST_F(Cli, GenIsDeterministic) {
  const std::string base = "gen --n 6 --k 3 --rho-len 10 --seed 42 --out ";
  ASSERT_EQ(run(base + "\"" + path("a.json").string() + "\"").code, 0);
  ASSERT_EQ(run(base + "\"" + path("b.json").string() + "\"").code, 0);
  EXPECT_EQ(read(path("a.json")), read(path("b.json")));
  ASSERT_EQ(run("gen --n 6 --k 3 --rho-len 10 --seed 43 --out \"" + path("c.json").string() + "\"").code, 0);
  EXPECT_NE(read(path("a.json")), read(path("c.json")));
}

TEST_F(Cli, GenRejectsKAboveN) {
  const Result r = run("gen --n 8 --k 9 --rho-len 4 --seed 1 --out \"" + path("x.json").string() + "\"");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("k exceeds n"), std::string::npos) << r.out;
}

TEST_F(Cli, GenOutputRunsThroughVerify) {
  ASSERT_EQ(run("gen --n 5 --k 2 --rho-len 8 --seed 3 --request-model greedy_adversary --out \"" +
                path("g.json").string() + "\"")
                .code,
            0);
  EXPECT_EQ(run("verify \"" + path("g.json").string() + "\"").code, 0);
}

TEST_F(Cli, RunPrintsCosts) {
  const std::string inst = m3();
  Result r = run("run " + inst + " --algo wfa");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
  r = run("run " + inst + " --algo opt");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
  r = run("run " + inst + " --algo opt --target 0 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "4\n");
}

TEST_F(Cli, RunWritesTrace) {
  ASSERT_EQ(run("run " + m3() + " --trace-out \"" + path("t.json").string() + "\"").code, 0);
  EXPECT_NE(read(path("t.json")).find("total_cost"), std::string::npos);
}

TEST_F(Cli, RunMissingFileIsIoError) {
  const Result r = run("run \"" + path("absent.json").string() + "\"");
  EXPECT_EQ(r.code, 4);
}

TEST_F(Cli, RunUnknownAlgoIsInputError) { EXPECT_EQ(run("run " + m3() + " --algo lru").code, 3); }

TEST_F(Cli, VerifyPassesOnExamples) {
  Result r = run("verify " + m3() + " --alpha 3");
  EXPECT_EQ(r.code, 0) << r.out;
  for (const char* id : {"P1", "E1", "C1a", "C1b", "C2", "E2", "E3", "R1", "T1"}) {
    EXPECT_NE(r.out.find(std::string(id) + " pass"), std::string::npos) << id;
  }
  EXPECT_NE(r.out.find("m=13"), std::string::npos);
  r = run("verify " + m3("[]"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("m=5"), std::string::npos);
}

TEST_F(Cli, VerifyFailureExitCode) {
  write("t1.json", R"({"n": 3, "k": 2, "dist": [[0,9,3],[9,0,6],[3,6,0]], "initial": [0, 1],
                       "requests": [0,2,0,2,0,0,0]})");
  const Result r = run("verify \"" + path("t1.json").string() + "\" --alpha 1");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("T1 fail"), std::string::npos) << r.out;
}

TEST_F(Cli, VerifyWritesReport) {
  ASSERT_EQ(run("verify " + m3() + " --report-out \"" + path("r.json").string() + "\"").code, 0);
  EXPECT_NE(read(path("r.json")).find("beta_used"), std::string::npos);
}

TEST_F(Cli, CorruptedInstanceIsInputError) {
  write("bad.json", R"({"n": 3, "k": 2, "dist": [[0,1,3],[1,0)");
  EXPECT_EQ(run("verify \"" + path("bad.json").string() + "\"").code, 3);
  write("nonmetric.json",
        R"({"n": 3, "k": 2, "dist": [[0,1,9],[1,0,2],[9,2,0]], "initial": [0, 1], "requests": []})");
  const Result r = run("verify \"" + path("nonmetric.json").string() + "\"");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("triangle"), std::string::npos) << r.out;
}

TEST_F(Cli, CampaignWithShippedConfig) {
  const Result r = run("campaign \"" + std::string(KSERVER_CONFIG_DIR) + "/desk.json\" --out \"" +
                       path("desk.csv").string() + "\"");
  EXPECT_EQ(r.code, 0) << r.out;
  const std::string csv = read(path("desk.csv"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 101);
}

TEST_F(Cli, EmptyCampaignWritesHeaderOnly) {
  write("empty.json", R"({"seeds": [1, 0]})");
  ASSERT_EQ(run("campaign \"" + path("empty.json").string() + "\" --out \"" + path("e.csv").string() +
                "\"")
                .code,
            0);
  const std::string csv = read(path("e.csv"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1);
  EXPECT_EQ(csv.rfind("instance_id,", 0), 0u);
}

TEST_F(Cli, CampaignUnknownModelIsInputError) {
  write("bad.json", R"({"seeds": [1, 3], "request_model": "zigzag"})");
  const Result r =
      run("campaign \"" + path("bad.json").string() + "\" --out \"" + path("x.csv").string() + "\"");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("zigzag"), std::string::npos);
}

TEST_F(Cli, HelpListsChecksAndExitCodes) {
  const Result r = run("--help");
  EXPECT_EQ(r.code, 0);
  for (const char* id : {"P1", "E1", "C1a", "C1b", "C2", "E2", "E3", "R1", "T1"}) {
    EXPECT_NE(r.out.find(id), std::string::npos) << id;
  }
  EXPECT_NE(r.out.find("inconclusive"), std::string::npos);
}

TEST_F(Cli, UnknownSubcommandIsInputError) { EXPECT_NE(run("frobnicate").code, 0); }

}  // namespace
