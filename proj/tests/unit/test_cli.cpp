#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "rmlogic/algebra.hpp"
#include "rmlogic/json_io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rmlogic::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Taut) {
  const auto r = run({"taut", "-f", "X1 # !X1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "tautology: true\n");
  const auto f = run({"taut", "-f", "X1"});
  EXPECT_EQ(f.code, 1);
  EXPECT_NE(f.out.find("witness: X1=0"), std::string::npos);
}

TEST(Cli, EntailsWitness) {
  const auto r = run({"entails", "-t", "X1", "-f", "!X1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("X1=0"), std::string::npos);
  EXPECT_EQ(run({"entails", "-t", "X1", "-f", "X1 # 0", "--method", "meet"}).code, 0);
  EXPECT_EQ(run({"entails", "-t", "X1", "-f", "X1 # 0", "--method", "reduction"}).code, 0);
  EXPECT_EQ(run({"entails", "-t", "X1", "-t", "!X1", "-f", "X2", "--method", "meet"}).code, 2);
  EXPECT_EQ(run({"entails", "-t", "X1", "-t", "!X1", "-f", "X2"}).code, 0);
}

TEST(Cli, Eval) {
  EXPECT_EQ(run({"eval", "-f", "d(h,0)", "-v", ""}).out, "1\n");
  EXPECT_EQ(run({"eval", "-f", "X1 & X2", "-v", "1,1/2"}).out, "h\n");
  EXPECT_EQ(run({"eval", "-f", "X2", "-v", "0"}).code, 2);
}

TEST(Cli, Json) {
  const auto r = run({"--json", "entails", "-t", "X1", "-f", "!X1"});
  const auto j = rmlogic::Json::parse(r.out);
  EXPECT_EQ(j["holds"], false);
  EXPECT_EQ(j["witness"]["valuation"], rmlogic::Json::array({"0"}));
}

TEST(Cli, Table) { EXPECT_EQ(run({"table", "-f", "N X1"}).out, "m=1\n011\n"); }

TEST(Cli, ParseErrorIsUsage) {
  const auto r = run({"taut", "-f", "X1 #"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, Faces) {
  EXPECT_EQ(run({"faces", "join", "00", "01"}).out, "0h\n");
  const auto m = run({"faces", "meet", "0h", "1h"});
  EXPECT_EQ(m.code, 1);
  EXPECT_EQ(m.out, "undefined\n");
  EXPECT_EQ(run({"faces", "antipodal", "hh", "01"}).out, "10\n");
  EXPECT_EQ(run({"faces", "subface", "01", "0h"}).code, 0);
  EXPECT_EQ(run({"faces", "antipodal", "0h", "1h"}).code, 2);
}

TEST(Cli, Clone) {
  const auto r = run({"clone", "--generators", "0,h,join,dpar", "--query", "neg"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(run({"clone", "--generators", "join", "--query", "meet"}).code, 1);
}

TEST(Cli, Axioms) {
  EXPECT_EQ(run({"axioms", "--set", "post", "--algebra", "z-post"}).code, 0);
  rmlogic::FiniteAlgebra bad = rmlogic::z_post();
  bad.binops["meet"][5] = 2;
  const std::string path = testing::TempDir() + "bad_algebra.txt";
  std::ofstream(path) << rmlogic::format_algebra(bad);
  const auto r = run({"axioms", "--set", "post", "--algebra", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(run({"axioms", "--set", "post", "--algebra", "/nonexistent"}).code, 2);
}

TEST(Cli, OtherCommands) {
  EXPECT_EQ(run({"compat", "-t", "X1", "-t", "!X1"}).code, 1);
  EXPECT_EQ(run({"equiv", "-f", "T X1", "-g", "!N !X1"}).code, 0);
  EXPECT_EQ(run({"reduce-post", "-f", "N X1 | !N X1"}).code, 0);
  EXPECT_EQ(run({"synth", "--table", "011"}).code, 0);
  EXPECT_EQ(run({"translate", "--to", "rm", "-f", "!X1"}).out, "d(h,X1)\n");
  EXPECT_EQ(run({"lind", "-t", "X1"}).code, 0);
  EXPECT_EQ(run({"tables", "--check", "1"}).code, 0);
}
