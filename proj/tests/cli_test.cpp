#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <sys/wait.h>

#include "pqk/cli.hpp"
#include "pqk/formats.hpp"
#include "support/fuzz.hpp"

namespace pqk {
namespace {

namespace fs = std::filesystem;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = cli::main(args, out, err);
  return {status, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("pqk_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

TEST_F(CliTest, Mul) {
  const Result r = run({"mul", "i1", "i2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "i3\n");
  EXPECT_EQ(run({"mul", "i2", "i3"}).out, "-i1\n");
  EXPECT_EQ(run({"mul", "1+i2", "1-i2"}).out, "0\n");
}

TEST_F(CliTest, Classify) {
  const Result r = run({"classify", "1/2+1/2*i2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("idempotent: yes"), std::string::npos);
  EXPECT_NE(r.out.find("zero_divisor: yes"), std::string::npos);
  EXPECT_NE(r.out.find("invertible: no"), std::string::npos);
}

TEST_F(CliTest, FueterThenCheck) {
  const std::string out = path("a.json");
  ASSERT_EQ(run({"fueter", "--side", "left", "--term", "1:-i2+i3", "--term", "2:-i2+i3", "--term", "3:-i2+i3",
                 "--out", out})
                .status,
            0);
  const Result left = run({"check", "--side", "left", out});
  EXPECT_EQ(left.status, 0);
  EXPECT_EQ(left.out, "Regular\n");
  const Result right = run({"check", "--side", "right", out});
  EXPECT_EQ(right.status, 1);
  EXPECT_NE(right.out.find("Not right-regular"), std::string::npos);
}

TEST_F(CliTest, BuildVerifyRoundTrip) {
  const std::string s = path("s.json");
  const std::string r1 = path("r1.json");
  const std::string r2 = path("r2.json");
  ASSERT_EQ(run({"build", "--example", "a", "--out", s}).status, 0);
  const std::string text = formats::read_file(s);
  EXPECT_EQ(formats::serialize(formats::to_json(formats::structure_from_json(formats::parse_json(text)))), text);
  ASSERT_EQ(run({"verify", s, "--seed", "5", "--out", r1}).status, 0);
  ASSERT_EQ(run({"verify", s, "--seed", "5", "--out", r2}).status, 0);
  EXPECT_EQ(formats::read_file(r1), formats::read_file(r2));
  EXPECT_EQ(run({"verify", s, "--seed", "5"}).out, formats::read_file(r1));
  EXPECT_EQ(run({"build", "--example", "a"}).out, text);
}

TEST_F(CliTest, DomainErrors) {
  EXPECT_EQ(run({"build", "--example", "a", "--chirality", "right"}).status, 3);
  EXPECT_EQ(run({"build", "--example", "b", "--chirality", "left"}).status, 3);
  // x0 ranging through 0 makes h^2 change sign.
  EXPECT_EQ(run({"build", "--example", "a", "--box", "-1:1,0:1/10,0:1/10,0:1/10"}).status, 3);
}

TEST_F(CliTest, MalformedInputExitsTwo) {
  const std::string s = path("valid_s.json");
  const std::string m = path("valid_m.json");
  ASSERT_EQ(run({"build", "--example", "a", "--out", s}).status, 0);
  ASSERT_EQ(run({"fueter", "--side", "left", "--term", "12:i1", "--out", m}).status, 0);
  const auto corpus = testing::malformed_corpus(dir_, formats::read_file(s), formats::read_file(m));
  ASSERT_GE(corpus.size(), 100u);
  for (const auto& args : corpus) {
    const Result r = run(args);
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    EXPECT_EQ(r.status, 2) << joined << "\n" << r.err;
    EXPECT_FALSE(r.err.empty()) << joined;
  }
}

TEST_F(CliTest, BinaryExitCodes) {
  const auto status = [](const std::string& args) {
    const int raw = std::system((std::string(PQK_BINARY) + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("mul i1 i2"), 0);
  EXPECT_EQ(status("mul i4 i1"), 2);
  EXPECT_EQ(status("build --example a --chirality right"), 3);
  EXPECT_EQ(status("--help"), 0);
}

}  // namespace
}  // namespace pqk
