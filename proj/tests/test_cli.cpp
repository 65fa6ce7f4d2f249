#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

class Cli : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tvp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path file(const std::string& name, const std::string& text) {
    auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }

  CliResult run(const std::string& args, const std::string& env = {}) {
    auto out = dir_ / "stdout.txt";
    auto err = dir_ / "stderr.txt";
    std::string cmd = env + " '" + std::string(TVP_CLI_PATH) + "' " + args + " >'" + out.string() + "' 2>'" +
                      err.string() + "'";
    int status = std::system(cmd.c_str());
    CliResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

  std::string path(const fs::path& p) { return "'" + p.string() + "'"; }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, RadonToStdoutAndFile) {
  auto pts = file("sq.csv", "x,y\n0,0\n1,0\n0,1\n1,1\n");
  auto r = run("radon " + path(pts));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"kind\": \"radon\""), std::string::npos);
  EXPECT_NE(r.out.find("\"1/2\""), std::string::npos);

  auto cert = dir_ / "c.json";
  ASSERT_EQ(run("radon " + path(pts) + " -o " + path(cert)).code, 0);
  EXPECT_EQ(slurp(cert), r.out);
  EXPECT_EQ(run("verify " + path(pts) + " " + path(cert)).code, 0);
}

TEST_F(Cli, RadonErrors) {
  EXPECT_EQ(run("radon " + path(file("two.csv", "0\n1\n"))).code, 3);
  auto bad = run("radon " + path(file("bad.csv", "0.333...\n1\n2\n")));
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("parse error"), std::string::npos);
  EXPECT_EQ(run("radon " + path(dir_ / "absent.csv")).code, 6);
  EXPECT_EQ(run("radon").code, 64);
  EXPECT_EQ(run("frobnicate").code, 64);
}

TEST_F(Cli, TverbergPlaneThreeGroups) {
  auto pts = file("seven.json",
                  R"({"dimension": 2, "points": [["0","0"],["4","0"],["0","4"],["4","4"],["1","2"],["3","1"],["2","3"]]})");
  auto cert = dir_ / "t.json";
  auto svg = dir_ / "t.svg";
  auto r = run("tverberg " + path(pts) + " --r 3 --out " + path(cert) + " --svg " + path(svg));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(slurp(svg).find("</svg>"), std::string::npos);
  auto v = run("verify " + path(pts) + " " + path(cert));
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_NE(v.out.find("VALID"), std::string::npos);
}

TEST_F(Cli, SvgOutsidePlaneWarns) {
  auto pts = file("cube.csv", "0,0,0\n1,0,0\n0,1,0\n0,0,1\n1,1,1\n");
  auto cert = dir_ / "c.json";
  auto svg = dir_ / "c.svg";
  auto r = run("tverberg " + path(pts) + " -r 2 -o " + path(cert) + " --svg " + path(svg));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_FALSE(fs::exists(svg));
  EXPECT_EQ(run("verify " + path(pts) + " " + path(cert)).code, 0);
}

TEST_F(Cli, VerifyExitCodes) {
  auto pts = file("line.csv", "1\n2\n3\n4\n5\n");
  auto cert = dir_ / "c.json";
  ASSERT_EQ(run("tverberg " + path(pts) + " --r 3 -o " + path(cert)).code, 0);
  EXPECT_EQ(run("verify " + path(pts) + " " + path(cert)).code, 0);

  std::string text = slurp(cert);
  std::string tampered = text;
  auto pos = tampered.find("\"1/2\"");
  ASSERT_NE(pos, std::string::npos);
  tampered.replace(pos, 5, "\"500001/1000000\"");
  auto tampered_path = file("tampered.json", tampered);
  auto v = run("verify " + path(pts) + " " + path(tampered_path));
  EXPECT_EQ(v.code, 1);
  EXPECT_NE(v.out.find("INVALID"), std::string::npos);

  auto truncated = file("truncated.json", text.substr(0, text.size() / 2));
  EXPECT_EQ(run("verify " + path(pts) + " " + path(truncated)).code, 2);
  EXPECT_EQ(run("verify " + path(pts) + " " + path(dir_ / "absent.json")).code, 2);
}

TEST_F(Cli, OracleListsAndRefuses) {
  auto pts = file("line.csv", "1\n2\n3\n4\n5\n");
  auto r = run("oracle " + path(pts) + " --r 3");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("{{0,4},{1,3},{2}}\n"), std::string::npos);

  auto big = file("seven.csv", "1\n2\n3\n4\n5\n6\n7\n");
  EXPECT_EQ(run("oracle " + path(big) + " --r 3 --cap 1000").code, 5);
  EXPECT_EQ(run("oracle " + path(big) + " --r 3", "TVP_ORACLE_CAP=1000").code, 5);
  EXPECT_EQ(run("oracle " + path(big) + " --r 3").code, 0);
}

TEST_F(Cli, RepeatedRunsAreByteIdentical) {
  auto pts = file("seven.csv", "0,0\n5,1\n2,7\n-3,4\n1,1\n6,-2\n-1,-5\n");
  auto a = run("tverberg " + path(pts) + " --r 3");
  auto b = run("tverberg " + path(pts) + " --r 3");
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto four = file("four.csv", "0,0\n5,1\n2,7\n-3,4\n");
  EXPECT_EQ(run("radon " + path(four)).out, run("radon " + path(four)).out);
}
